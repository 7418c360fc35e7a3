use std::sync::Arc;

use crate::error::Result;
use crate::fincat::{FinCategory, FinFunctor, NatTransf, ValidationReport};
use crate::kernels::{comma, BoKernelData, SoKernelData};

/// A codescent cocone `(Q, q, theta)` under bo kernel data: `q: X1 -> Q`
/// and `theta: q.Xd => q.Xc`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodescentCocone {
    pub q: FinFunctor,
    pub theta: NatTransf,
}

impl CodescentCocone {
    /// The vertex `Q`.
    pub fn vertex(&self) -> &Arc<FinCategory> {
        self.q.target()
    }

    /// `theta.Xi = 1` and `(theta.Xq)(theta.Xp) = theta.Xm`, checked cell by cell.
    pub fn check_cocycles(&self, x: &BoKernelData) -> ValidationReport {
        let mut r = ValidationReport::default();
        let qc = self.vertex();
        for o in x.x1.objects() {
            let t = self.theta.component(x.i.ob(o));
            if !qc.is_identity(t) {
                r.push("theta.Xi = 1", [format!("X1 object {}", x.x1.object_name(o))]);
            }
        }
        for w in x.x3.objects() {
            let lhs = qc.try_compose(self.theta.component(x.q.ob(w)), self.theta.component(x.p.ob(w)));
            if lhs != Some(self.theta.component(x.m.ob(w))) {
                r.push("(theta.Xq)(theta.Xp) = theta.Xm", [format!("X3 object {}", x.x3.object_name(w))]);
            }
        }
        r
    }

    /// `theta.Xj` is an identity 2-cell.
    pub fn check_identifies_j(&self, x: &SoKernelData) -> ValidationReport {
        let mut r = ValidationReport::default();
        for e in x.x2p.objects() {
            if !self.vertex().is_identity(self.theta.component(x.j.ob(e))) {
                r.push("theta.Xj = 1", [format!("X2' object {}", x.x2p.object_name(e))]);
            }
        }
        r
    }

    /// The comparison `X2 -> q|q` sending `e` to `(de, ce, theta_e)`.
    pub fn comma_comparison(&self, x: &BoKernelData) -> Result<FinFunctor> {
        let qq = comma(&self.q, &self.q)?;
        qq.mediate(&x.d, &x.c, &self.theta)
    }
}
