use std::collections::HashMap;

use serde::Serialize;

use crate::error::Result;
use crate::fincat::{enumerate_functors, transformations_between, FinFunctor, MorId, NatTransf};
use crate::SizeBound;

/// Outcome of testing whether `f: A -> B` is orthogonal to `g: C -> D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orthogonality {
    pub orthogonal: bool,
    /// Number of commutative squares (objects of the pullback).
    pub squares: usize,
    /// Number of compatible pairs of 2-cells (morphisms of the pullback).
    pub square_morphisms: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Decide whether the comparison `[B, C] -> [A, C] x_[A, D] [B, D]` is an
/// isomorphism of categories, by exhaustive enumeration of both sides.
pub fn orthogonal(f: &FinFunctor, g: &FinFunctor, bound: &SizeBound) -> Result<Orthogonality> {
    let (a, b) = (f.source(), f.target());
    let (c, d) = (g.source(), g.target());
    for (name, cat) in [("A", a), ("B", b), ("C", c), ("D", d)] {
        bound.check_enumerable(&format!("orthogonal {name}"), cat)?;
    }
    let ac = enumerate_functors(a, c, bound)?;
    let bd = enumerate_functors(b, d, bound)?;
    let bc = enumerate_functors(b, c, bound)?;

    // pullback objects: squares (u, v) with g u = v f
    let mut squares: Vec<(usize, usize)> = Vec::new();
    let mut composite_by_v: HashMap<Vec<MorId>, Vec<usize>> = HashMap::new();
    for (vi, v) in bd.iter().enumerate() {
        composite_by_v.entry(f.then(v).morphism_map().to_vec()).or_default().push(vi);
    }
    for (ui, u) in ac.iter().enumerate() {
        if let Some(vs) = composite_by_v.get(u.then(g).morphism_map()) {
            for &vi in vs {
                squares.push((ui, vi));
            }
        }
    }
    let square_index: HashMap<(usize, usize), usize> =
        squares.iter().enumerate().map(|(k, &s)| (s, k)).collect();
    let ac_index: HashMap<&[MorId], usize> =
        ac.iter().enumerate().map(|(k, u)| (u.morphism_map(), k)).collect();
    let bd_index: HashMap<&[MorId], usize> =
        bd.iter().enumerate().map(|(k, v)| (v.morphism_map(), k)).collect();

    // comparison on objects
    let mut hit = vec![None; squares.len()];
    for (wi, w) in bc.iter().enumerate() {
        let u = ac_index[f.then(w).morphism_map()];
        let v = bd_index[w.then(g).morphism_map()];
        let s = square_index[&(u, v)];
        if let Some(prev) = hit[s] {
            return Ok(fail(squares.len(), 0, format!(
                "two diagonals {} and {} for the same square",
                label(&bc[prev]),
                label(&bc[wi])
            )));
        }
        hit[s] = Some(wi);
    }
    if let Some(s) = hit.iter().position(|h| h.is_none()) {
        let (u, v) = squares[s];
        return Ok(fail(squares.len(), 0, format!(
            "square (u = {}, v = {}) has no diagonal",
            label(&ac[u]),
            label(&bd[v])
        )));
    }

    // comparison on morphisms, hom-set by hom-set
    let mut square_morphisms = 0;
    for (s1, &(u1, v1)) in squares.iter().enumerate() {
        for (s2, &(u2, v2)) in squares.iter().enumerate() {
            let alphas = transformations_between(&ac[u1], &ac[u2]);
            let betas = transformations_between(&bd[v1], &bd[v2]);
            let mut compatible: Vec<(Vec<MorId>, Vec<MorId>)> = Vec::new();
            for al in &alphas {
                let galpha = al.whisker_left(g);
                for be in &betas {
                    if galpha.components() == be.whisker_right(f).components() {
                        compatible.push((al.components().to_vec(), be.components().to_vec()));
                    }
                }
            }
            square_morphisms += compatible.len();
            let (w1, w2) = (hit[s1].unwrap(), hit[s2].unwrap());
            let gammas = transformations_between(&bc[w1], &bc[w2]);
            let mut images: Vec<(Vec<MorId>, Vec<MorId>)> = gammas
                .iter()
                .map(|t| (whisker_f(t, f), t.whisker_left(g).components().to_vec()))
                .collect();
            images.sort();
            let before = images.len();
            images.dedup();
            if images.len() != before {
                return Ok(fail(squares.len(), square_morphisms, format!(
                    "two 2-cells {} => {} with the same image",
                    label(&bc[w1]),
                    label(&bc[w2])
                )));
            }
            if images.len() != compatible.len() {
                return Ok(fail(squares.len(), square_morphisms, format!(
                    "a compatible pair of 2-cells between squares {s1} and {s2} has no lift"
                )));
            }
        }
    }
    Ok(Orthogonality {
        orthogonal: true,
        squares: squares.len(),
        square_morphisms,
        witness: None,
    })
}

fn whisker_f(t: &NatTransf, f: &FinFunctor) -> Vec<MorId> {
    f.object_map().iter().map(|&x| t.component(x)).collect()
}

fn fail(squares: usize, square_morphisms: usize, witness: String) -> Orthogonality {
    Orthogonality {
        orthogonal: false,
        squares,
        square_morphisms,
        witness: Some(witness),
    }
}

fn label(f: &FinFunctor) -> String {
    let t = f.target();
    let parts: Vec<&str> = f.morphism_map().iter().map(|&m| t.morphism_name(m)).collect();
    format!("<{}>", parts.join(","))
}
