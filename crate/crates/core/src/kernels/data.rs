use std::sync::Arc;

use super::comma::{comma, eq_category, triple_comma, Comma, EqCategory, TripleComma};
use crate::error::Result;
use crate::fincat::construct::parallel_pairs_where;
use crate::fincat::{pullback, FinCategory, FinFunctor, MorId, NatTransf, Pullback, ValidationReport};
use crate::{SizeBound, System};

/// Truncated simplicial data `X3 => X2 => X1` with `p, m, q: X3 -> X2`,
/// `d, c: X2 -> X1` and `i: X1 -> X2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoKernelData {
    pub x3: Arc<FinCategory>,
    pub x2: Arc<FinCategory>,
    pub x1: Arc<FinCategory>,
    pub p: FinFunctor,
    pub m: FinFunctor,
    pub q: FinFunctor,
    pub d: FinFunctor,
    pub c: FinFunctor,
    pub i: FinFunctor,
}

/// Bo data together with `j: X2' -> X2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoKernelData {
    pub bo: BoKernelData,
    pub x2p: Arc<FinCategory>,
    pub j: FinFunctor,
}

/// Two parallel functors `u, v: X2 -> X1` with two 2-cells `alpha, beta: u => v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BofKernelData {
    pub x2: Arc<FinCategory>,
    pub x1: Arc<FinCategory>,
    pub u: FinFunctor,
    pub v: FinFunctor,
    pub alpha: NatTransf,
    pub beta: NatTransf,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelData {
    Bo(BoKernelData),
    So(SoKernelData),
    Bof(BofKernelData),
}

impl KernelData {
    pub fn system(&self) -> System {
        match self {
            KernelData::Bo(_) => System::Bo,
            KernelData::So(_) => System::So,
            KernelData::Bof(_) => System::Bof,
        }
    }

    /// The category the data lives over (`X1`).
    pub fn base(&self) -> &Arc<FinCategory> {
        match self {
            KernelData::Bo(b) => &b.x1,
            KernelData::So(s) => &s.bo.x1,
            KernelData::Bof(b) => &b.x1,
        }
    }

    pub fn validate(&self) -> ValidationReport {
        match self {
            KernelData::Bo(b) => b.validate(),
            KernelData::So(s) => s.validate(),
            KernelData::Bof(b) => b.validate(),
        }
    }
}

/// The kernel of a functor in the given system.
pub fn kernel(f: &FinFunctor, system: System, bound: &SizeBound) -> Result<KernelData> {
    Ok(match system {
        System::Bo => KernelData::Bo(bo_kernel(f)?.data),
        System::So => KernelData::So(so_kernel(f)?.data),
        System::Bof => KernelData::Bof(bof_kernel(f, bound)?.data),
    })
}

fn check_functor(
    report: &mut ValidationReport,
    name: &str,
    f: &FinFunctor,
    source: &Arc<FinCategory>,
    target: &Arc<FinCategory>,
) -> bool {
    let mut ok = true;
    if **f.source() != **source {
        report.push("structural map source", [name.to_string()]);
        ok = false;
    }
    if **f.target() != **target {
        report.push("structural map target", [name.to_string()]);
        ok = false;
    }
    if ok {
        let inner = f.validate();
        ok = inner.is_valid();
        report.extend_prefixed(name, inner);
    }
    ok
}

fn check_equal(report: &mut ValidationReport, law: &str, lhs: &FinFunctor, rhs: &FinFunctor) {
    let src = lhs.source();
    for x in src.objects() {
        if lhs.ob(x) != rhs.ob(x) {
            report.push(law, [format!("object {}", src.object_name(x))]);
            return;
        }
    }
    for f in src.morphisms() {
        if lhs.mor(f) != rhs.mor(f) {
            report.push(law, [format!("morphism {}", src.morphism_name(f))]);
            return;
        }
    }
}

impl BoKernelData {
    /// Structural maps are functors between the right categories and the
    /// simplicial identities `di = ci = 1`, `cp = dq`, `dm = dp`, `cm = cq` hold.
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::default();
        for (name, cat) in [("X1", &self.x1), ("X2", &self.x2), ("X3", &self.x3)] {
            r.extend_prefixed(name, cat.validate());
        }
        if !r.is_valid() {
            return r;
        }
        let mut ok = true;
        for (name, f) in [("p", &self.p), ("m", &self.m), ("q", &self.q)] {
            ok &= check_functor(&mut r, name, f, &self.x3, &self.x2);
        }
        for (name, f) in [("d", &self.d), ("c", &self.c)] {
            ok &= check_functor(&mut r, name, f, &self.x2, &self.x1);
        }
        ok &= check_functor(&mut r, "i", &self.i, &self.x1, &self.x2);
        if !ok {
            return r;
        }
        let id = FinFunctor::identity(&self.x1);
        check_equal(&mut r, "di = 1", &self.i.then(&self.d), &id);
        check_equal(&mut r, "ci = 1", &self.i.then(&self.c), &id);
        check_equal(&mut r, "cp = dq", &self.p.then(&self.c), &self.q.then(&self.d));
        check_equal(&mut r, "dm = dp", &self.m.then(&self.d), &self.p.then(&self.d));
        check_equal(&mut r, "cm = cq", &self.m.then(&self.c), &self.q.then(&self.c));
        r
    }
}

impl SoKernelData {
    pub fn validate(&self) -> ValidationReport {
        let mut r = self.bo.validate();
        r.extend_prefixed("X2'", self.x2p.validate());
        if r.is_valid() {
            check_functor(&mut r, "j", &self.j, &self.x2p, &self.bo.x2);
        }
        r
    }
}

impl BofKernelData {
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::default();
        r.extend_prefixed("X1", self.x1.validate());
        r.extend_prefixed("X2", self.x2.validate());
        if !r.is_valid() {
            return r;
        }
        let ok = check_functor(&mut r, "u", &self.u, &self.x2, &self.x1)
            & check_functor(&mut r, "v", &self.v, &self.x2, &self.x1);
        if !ok {
            return r;
        }
        for (name, t) in [("alpha", &self.alpha), ("beta", &self.beta)] {
            if *t.source() != self.u || *t.target() != self.v {
                r.push("2-cell boundary", [name.to_string()]);
            } else {
                r.extend_prefixed(name, t.validate());
            }
        }
        r
    }
}

/// The bo kernel of `f` together with the comma constructions it came from.
#[derive(Debug, Clone)]
pub struct BoKernel {
    pub data: BoKernelData,
    pub comma: Comma,
    pub triple: TripleComma,
}

pub fn bo_kernel(f: &FinFunctor) -> Result<BoKernel> {
    let comma = comma(f, f)?;
    let triple = triple_comma(f)?;
    let a = f.source().clone();
    let b = f.target();
    let x2 = comma.cat.clone();
    let x3 = triple.cat.clone();
    let t = &triple.table;
    let obj = |o: (usize, usize, usize)| comma.object_of(o.0, o.1, o.2).expect("comma object");
    let side = |pick: &dyn Fn(&super::comma::TripleObject) -> (usize, usize, usize),
                mor: &dyn Fn(&super::comma::TripleMorphism) -> (usize, usize)| {
        let objects = t.objects.iter().map(|o| obj(pick(o))).collect();
        let morphisms = t
            .morphisms
            .iter()
            .map(|m| {
                let (h, k) = mor(m);
                comma
                    .morphism_of(
                        comma.object_key(obj(pick(&m.src))),
                        comma.object_key(obj(pick(&m.dst))),
                        h,
                        k,
                    )
                    .expect("comma morphism")
            })
            .collect();
        FinFunctor::new(x3.clone(), x2.clone(), objects, morphisms)
    };
    let p = side(&|o| (o.0, o.1, o.3), &|m| (m.h, m.k))?;
    let m = side(&|o| (o.0, o.2, b.compose(o.4, o.3)), &|m| (m.h, m.l))?;
    let q = side(&|o| (o.1, o.2, o.4), &|m| (m.k, m.l))?;
    let i = FinFunctor::new(
        a.clone(),
        x2.clone(),
        a.objects().map(|x| obj((x, x, b.identity(f.ob(x))))).collect(),
        a.morphisms()
            .map(|h| {
                let (x, y) = (a.dom(h), a.cod(h));
                comma
                    .morphism_of(
                        (x, x, b.identity(f.ob(x))),
                        (y, y, b.identity(f.ob(y))),
                        h,
                        h,
                    )
                    .expect("identity-arrow morphism")
            })
            .collect(),
    )?;
    let data = BoKernelData {
        x3,
        x2,
        x1: a,
        p,
        m,
        q,
        d: comma.d.clone(),
        c: comma.c.clone(),
        i,
    };
    Ok(BoKernel {
        data,
        comma,
        triple,
    })
}

#[derive(Debug, Clone)]
pub struct SoKernel {
    pub data: SoKernelData,
    pub bo: BoKernel,
    pub pair: Pullback,
}

pub fn so_kernel(f: &FinFunctor) -> Result<SoKernel> {
    let bo = bo_kernel(f)?;
    let pair = pullback(f, f)?;
    let b = f.target();
    let comma = &bo.comma;
    let key = |x: usize, y: usize| (x, y, b.identity(f.ob(x)));
    let objects = pair
        .cat
        .objects()
        .map(|o| {
            let (x, y) = pair.object_pair(o);
            comma.object_of(x, y, b.identity(f.ob(x))).expect("unit comma object")
        })
        .collect();
    let morphisms = pair
        .cat
        .morphisms()
        .map(|m| {
            let (h, k) = pair.morphism_pair(m);
            let (s, t) = (pair.object_pair(pair.cat.dom(m)), pair.object_pair(pair.cat.cod(m)));
            comma
                .morphism_of(key(s.0, s.1), key(t.0, t.1), h, k)
                .expect("unit comma morphism")
        })
        .collect();
    let j = FinFunctor::new(pair.cat.clone(), bo.data.x2.clone(), objects, morphisms)?;
    let data = SoKernelData {
        bo: bo.data.clone(),
        x2p: pair.cat.clone(),
        j,
    };
    Ok(SoKernel { data, bo, pair })
}

#[derive(Debug, Clone)]
pub struct BofKernel {
    pub data: BofKernelData,
    pub eq: EqCategory,
}

pub fn bof_kernel(f: &FinFunctor, bound: &SizeBound) -> Result<BofKernel> {
    let eq = eq_category(f, bound)?;
    let data = bof_data(f.source(), &eq)?;
    Ok(BofKernel { data, eq })
}

/// Bof data on `a` whose `X2` is the full subcategory of `a^P` on the
/// pairs accepted by `related`. This is a congruence exactly when `related`
/// is an equivalence relation on each hom-set compatible with composition.
pub fn bof_data_from_relation(
    a: &Arc<FinCategory>,
    bound: &SizeBound,
    related: impl Fn(MorId, MorId) -> bool,
) -> Result<BofKernel> {
    let table = parallel_pairs_where(a, bound, related)?;
    let eq = EqCategory {
        cat: Arc::new(table.cat.clone()),
        table,
    };
    let data = bof_data(a, &eq)?;
    Ok(BofKernel { data, eq })
}

fn bof_data(a: &Arc<FinCategory>, eq: &EqCategory) -> Result<BofKernelData> {
    let t = &eq.table;
    let u = FinFunctor::new(
        eq.cat.clone(),
        a.clone(),
        t.objects.iter().map(|&(p, _)| a.dom(p)).collect(),
        t.morphisms.iter().map(|m| m.h).collect(),
    )?;
    let v = FinFunctor::new(
        eq.cat.clone(),
        a.clone(),
        t.objects.iter().map(|&(p, _)| a.cod(p)).collect(),
        t.morphisms.iter().map(|m| m.k).collect(),
    )?;
    let alpha = NatTransf::new(u.clone(), v.clone(), t.objects.iter().map(|&(p, _)| p).collect())?;
    let beta = NatTransf::new(u.clone(), v.clone(), t.objects.iter().map(|&(_, q)| q).collect())?;
    Ok(BofKernelData {
        x2: eq.cat.clone(),
        x1: a.clone(),
        u,
        v,
        alpha,
        beta,
    })
}
