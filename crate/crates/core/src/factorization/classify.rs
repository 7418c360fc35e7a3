use serde::Serialize;

use crate::fincat::FinFunctor;
use crate::kernels::comparison_maps;
use crate::{SizeBound, System};

/// Membership flags of a functor in the classes the three systems are built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MorphismClassification {
    pub injective_on_objects: bool,
    pub surjective_on_objects: bool,
    pub bijective_on_objects: bool,
    pub full: bool,
    pub faithful: bool,
    pub fully_faithful: bool,
    pub full_monic: bool,
    pub is_iso: bool,
}

impl MorphismClassification {
    /// Left class of a system: bo, so, or bo and full.
    pub fn in_left_class(&self, system: System) -> bool {
        match system {
            System::Bo => self.bijective_on_objects,
            System::So => self.surjective_on_objects,
            System::Bof => self.bijective_on_objects && self.full,
        }
    }

    /// Right class of a system: ff, full monic, or faithful.
    pub fn in_right_class(&self, system: System) -> bool {
        match system {
            System::Bo => self.fully_faithful,
            System::So => self.full_monic,
            System::Bof => self.faithful,
        }
    }
}

/// Result of recomputing the classification through the comparison maps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub performed: bool,
    pub agrees: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notice: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub flags: MorphismClassification,
    pub cross_check: CrossCheck,
}

/// Flags computed straight from the object and hom-set maps.
pub fn classify_direct(f: &FinFunctor) -> MorphismClassification {
    let (a, b) = (f.source(), f.target());
    let inj = f.is_injective_on_objects();
    let surj = f.is_surjective_on_objects();
    let mut full = true;
    let mut faithful = true;
    let mut seen = vec![u32::MAX; b.morphism_count()];
    let mut stamp = 0u32;
    for x in a.objects() {
        for y in a.objects() {
            let target = b.hom(f.ob(x), f.ob(y));
            let mut hits = 0;
            for &h in a.hom(x, y) {
                let img = f.mor(h);
                if seen[img] == stamp {
                    faithful = false;
                } else {
                    seen[img] = stamp;
                    hits += 1;
                }
            }
            if hits < target.len() {
                full = false;
            }
            stamp += 1;
        }
    }
    let ff = full && faithful;
    MorphismClassification {
        injective_on_objects: inj,
        surjective_on_objects: surj,
        bijective_on_objects: inj && surj,
        full,
        faithful,
        fully_faithful: ff,
        full_monic: inj && ff,
        is_iso: inj && surj && ff,
    }
}

/// Classify `f`, cross-checking ff, faithfulness and full-monicity against
/// invertibility of `gamma_f`, `eq_f` and `delta_f` when the comparison
/// categories fit in the construction bound.
pub fn classify(f: &FinFunctor, bound: &SizeBound) -> Classification {
    let flags = classify_direct(f);
    let cross_check = match comparison_maps(f, bound) {
        Ok(maps) => {
            let gamma = maps.gamma.is_isomorphism();
            let eq = maps.eq_f.is_isomorphism();
            let delta = maps.delta.is_isomorphism();
            let agrees = gamma == flags.fully_faithful
                && eq == flags.faithful
                && (delta && gamma) == flags.full_monic
                && f.is_isomorphism() == flags.is_iso;
            CrossCheck {
                performed: true,
                agrees,
                notice: None,
            }
        }
        Err(e) => CrossCheck {
            performed: false,
            agrees: true,
            notice: Some(format!("comparison-map cross-check skipped: {e}")),
        },
    };
    Classification { flags, cross_check }
}
