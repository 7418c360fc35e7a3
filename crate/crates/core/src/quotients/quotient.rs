use std::sync::Arc;

use super::cocone::CodescentCocone;
use super::verdict::CongruenceVerdict;
use super::{bo, bof, so};
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, FinFunctor, ValidationReport};
use crate::kernels::KernelData;
use crate::System;

/// Test kernel data against the congruence conditions of its system.
///
/// Malformed data (structural maps that are not functors, or simplicial
/// identities that fail) is reported under the condition `well-formed`.
pub fn is_congruence(x: &KernelData) -> CongruenceVerdict {
    let mut verdict = CongruenceVerdict::new(x.system());
    let report = x.validate();
    let well_formed = report.is_valid();
    verdict.record(
        "well-formed",
        report
            .violations
            .into_iter()
            .map(|v| std::iter::once(v.law).chain(v.witness).collect())
            .collect(),
    );
    if !well_formed {
        return verdict;
    }
    let outcome = match x {
        KernelData::Bo(b) => bo::check(b, &mut verdict, ""),
        KernelData::So(s) => so::check(s, &mut verdict),
        KernelData::Bof(b) => {
            bof::check(b, &mut verdict);
            Ok(())
        }
    };
    if let Err(e) = outcome {
        verdict.record("well-formed", vec![vec![e.to_string()]]);
    }
    verdict
}

/// The two stages `X1 -q-> Q -k-> R` of an so-quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoStages {
    pub bo: CodescentCocone,
    pub k: FinFunctor,
}

/// The quotient `q: X1 -> Q` of a congruence, with its codescent 2-cell for
/// the bo and so systems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub system: System,
    pub q: FinFunctor,
    pub cocone: Option<CodescentCocone>,
    pub so_stages: Option<SoStages>,
}

impl Quotient {
    pub fn category(&self) -> &Arc<FinCategory> {
        self.q.target()
    }

    /// The cocone equations of the system, checked on every cell: the
    /// cocycle conditions (bo, so), `theta.Xj = 1` (so), `q.alpha = q.beta`
    /// (bof), and for bo that `theta` exhibits `X2` as `q|q`.
    pub fn verify(&self, x: &KernelData) -> Result<ValidationReport> {
        let mut r = ValidationReport::default();
        match (x, &self.cocone) {
            (KernelData::Bo(b), Some(c)) => {
                r.extend_prefixed("cocone", c.check_cocycles(b));
                if !c.comma_comparison(b)?.is_isomorphism() {
                    r.push("theta exhibits X2 as q|q", ["comparison X2 -> q|q is not invertible"]);
                }
            }
            (KernelData::So(s), Some(c)) => {
                r.extend_prefixed("cocone", c.check_cocycles(&s.bo));
                r.extend_prefixed("cocone", c.check_identifies_j(s));
            }
            (KernelData::Bof(b), None) => {
                for e in b.x2.objects() {
                    if self.q.mor(b.alpha.component(e)) != self.q.mor(b.beta.component(e)) {
                        r.push("q.alpha = q.beta", [format!("X2 object {}", b.x2.object_name(e))]);
                    }
                }
            }
            _ => r.push("system", ["quotient and kernel data belong to different systems"]),
        }
        Ok(r)
    }
}

/// The quotient of a congruence by the explicit construction for its system.
pub fn quotient(x: &KernelData) -> Result<Quotient> {
    let verdict = is_congruence(x);
    if !verdict.is_congruence {
        return Err(Error::NotACongruence {
            system: x.system(),
            verdict: Box::new(verdict),
        });
    }
    quotient_unchecked(x)
}

pub(crate) fn quotient_unchecked(x: &KernelData) -> Result<Quotient> {
    Ok(match x {
        KernelData::Bo(b) => {
            let c = bo::cocone(b)?;
            Quotient {
                system: System::Bo,
                q: c.q.clone(),
                cocone: Some(c),
                so_stages: None,
            }
        }
        KernelData::So(s) => {
            let c = so::cocone(s)?;
            Quotient {
                system: System::So,
                q: c.cocone.q.clone(),
                cocone: Some(c.cocone),
                so_stages: Some(SoStages { bo: c.bo, k: c.k }),
            }
        }
        KernelData::Bof(b) => Quotient {
            system: System::Bof,
            q: bof::hom_quotient(&b.x1, &bof::representatives(b))?,
            cocone: None,
            so_stages: None,
        },
    })
}
