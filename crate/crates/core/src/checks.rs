//! Reusable law checks: crystal axioms, flat vs tensor-tree agreement,
//! morphism laws for braid moves, inverse laws and `eps^*` agreement.
//!
//! Every check returns `Ok(None)` on success and a human-readable
//! description of the first violation otherwise.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::braid::{apply_move, phi1, phi2_ij, phi2_ji, BraidMove};
use crate::cartan::{CartanDatum, Word};
use crate::crystal::{CrystalElement, WeightVector};
use crate::epsstar::EpsStarEngine;
use crate::error::Result;
use crate::tensor::{Ext, TensorNode};

pub type Violation = Option<String>;

fn distinct_letters(word: &Word) -> Vec<usize> {
    let mut v = word.letters().to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// Iterates over `[lo, hi]^len` in lexicographic order.
pub fn lattice_box(len: usize, lo: i64, hi: i64) -> impl Iterator<Item = Vec<i64>> {
    let mut cur = Some(vec![lo; len]);
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        let mut advanced = false;
        for c in next.iter_mut().rev() {
            if *c < hi {
                *c += 1;
                advanced = true;
                break;
            }
            *c = lo;
        }
        cur = advanced.then_some(next);
        Some(out)
    })
}

/// Crystal axioms at `x` for every letter of its word.
pub fn axiom_violation(x: &CrystalElement) -> Result<Violation> {
    let datum = x.datum().clone();
    let wt = x.wt();
    for i in distinct_letters(x.word()) {
        let alpha = WeightVector::simple_root(datum.rank(), i);
        let (eps, phi) = (x.eps(i)?, x.phi(i)?);
        if phi != eps + wt.pairing(&datum, i) {
            return Ok(Some(format!("phi_{i} != eps_{i} + <h_{i}, wt> at {x}")));
        }
        let e = x.e_tilde(i)?;
        let f = x.f_tilde(i)?;
        if e.wt() != &wt + &alpha || f.wt() != &wt - &alpha {
            return Ok(Some(format!("weight shift of e_{i}/f_{i} fails at {x}")));
        }
        if e.eps(i)? != eps - 1 || e.phi(i)? != phi + 1 {
            return Ok(Some(format!("eps/phi shift of e_{i} fails at {x}")));
        }
        if f.eps(i)? != eps + 1 || f.phi(i)? != phi - 1 {
            return Ok(Some(format!("eps/phi shift of f_{i} fails at {x}")));
        }
        if &e.f_tilde(i)? != x || &f.e_tilde(i)? != x {
            return Ok(Some(format!("e_{i} and f_{i} are not inverse at {x}")));
        }
        let changed: Vec<usize> = (0..x.len()).filter(|&k| f.z()[k] != x.z()[k]).collect();
        if changed.len() != 1 || x.word().letters()[changed[0]] != i {
            return Ok(Some(format!(
                "f_{i} does not change exactly one i-cell at {x}"
            )));
        }
    }
    Ok(None)
}

/// Flat signature rule against the recursive tensor rule, for the given trees.
pub fn oracle_violation(x: &CrystalElement, trees: &[TensorNode]) -> Result<Violation> {
    let datum = x.datum().clone();
    for t in trees {
        if t.wt(datum.rank()) != x.wt() {
            return Ok(Some(format!("wt disagrees with tree at {x}")));
        }
        for i in distinct_letters(x.word()) {
            if t.eps(&datum, i) != Ext::Fin(x.eps(i)?) || t.phi(&datum, i) != Ext::Fin(x.phi(i)?) {
                return Ok(Some(format!("eps_{i}/phi_{i} disagree with tree at {x}")));
            }
            let e = t.e_tilde(&datum, i).map(|y| y.to_element(&datum));
            let f = t.f_tilde(&datum, i).map(|y| y.to_element(&datum));
            if e.as_ref() != Some(&x.e_tilde(i)?) || f.as_ref() != Some(&x.f_tilde(i)?) {
                return Ok(Some(format!("e_{i}/f_{i} disagree with tree at {x}")));
            }
        }
    }
    Ok(None)
}

/// Left, right and balanced bracketings of `x`.
pub fn all_trees(x: &CrystalElement) -> Vec<TensorNode> {
    [
        TensorNode::left_nested(x),
        TensorNode::right_nested(x),
        TensorNode::balanced(x),
    ]
    .into_iter()
    .flatten()
    .collect()
}

/// The move is a crystal morphism at `x`: it preserves `wt`, `eps_j`, `phi_j`
/// and commutes with `e_j`, `f_j` for every letter `j`.
pub fn morphism_violation(x: &CrystalElement, m: BraidMove) -> Result<Violation> {
    let y = apply_move(x, m)?;
    if y.wt() != x.wt() {
        return Ok(Some(format!("{m} changes wt at {x}")));
    }
    for j in distinct_letters(x.word()) {
        if y.eps(j)? != x.eps(j)? || y.phi(j)? != x.phi(j)? {
            return Ok(Some(format!("{m} changes eps_{j}/phi_{j} at {x}")));
        }
        if apply_move(&x.e_tilde(j)?, m)? != y.e_tilde(j)? {
            return Ok(Some(format!("{m} does not commute with e_{j} at {x}")));
        }
        if apply_move(&x.f_tilde(j)?, m)? != y.f_tilde(j)? {
            return Ok(Some(format!("{m} does not commute with f_{j} at {x}")));
        }
    }
    Ok(None)
}

/// Points for a morphism check of `m` on `word`: the window runs over
/// `[-2, 2]^w` exhaustively, repeated with fresh samples of the other
/// coordinates from `{-1, 0, 1}` until at least `min_cases` points exist.
pub fn morphism_cases<R: Rng>(
    word: &Word,
    m: BraidMove,
    min_cases: usize,
    rng: &mut R,
) -> Vec<Vec<i64>> {
    let w = m.kind.width();
    let s = m.position - 1;
    let windows: Vec<Vec<i64>> = lattice_box(w, -2, 2).collect();
    let rounds = min_cases.div_ceil(windows.len()).max(1);
    let mut out = Vec::with_capacity(rounds * windows.len());
    for _ in 0..rounds {
        for win in &windows {
            let mut z: Vec<i64> = (0..word.len()).map(|_| rng.gen_range(-1..=1)).collect();
            z[s..s + w].copy_from_slice(win);
            out.push(z);
        }
    }
    out
}

/// Counts for the inverse laws of the rank-two maps on `[-r, r]^w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InverseReport {
    pub phi1_cases: u64,
    pub phi1_failures: u64,
    pub phi2_cases: u64,
    pub phi2_failures: u64,
}

impl InverseReport {
    pub fn pass(&self) -> bool {
        self.phi1_failures == 0 && self.phi2_failures == 0
    }
}

pub fn inverse_laws(r: i64) -> InverseReport {
    let mut rep = InverseReport {
        phi1_cases: 0,
        phi1_failures: 0,
        phi2_cases: 0,
        phi2_failures: 0,
    };
    for v in lattice_box(3, -r, r) {
        let v = [v[0], v[1], v[2]];
        rep.phi1_cases += 1;
        if phi1(phi1(v)) != v {
            rep.phi1_failures += 1;
        }
    }
    for v in lattice_box(4, -r, r) {
        let v = [v[0], v[1], v[2], v[3]];
        rep.phi2_cases += 1;
        if phi2_ji(phi2_ij(v)) != v || phi2_ij(phi2_ji(v)) != v {
            rep.phi2_failures += 1;
        }
    }
    rep
}

/// Agreement of the two `eps^*` computations over a set of points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgreementReport {
    pub datum: String,
    pub points: u64,
    pub comparisons: u64,
    pub mismatches: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<(Vec<i64>, usize, i64, i64)>,
}

impl AgreementReport {
    pub fn pass(&self) -> bool {
        self.mismatches == 0
    }
}

pub fn eps_star_agreement<I>(engine: &EpsStarEngine, points: I) -> Result<AgreementReport>
where
    I: IntoIterator<Item = Vec<i64>>,
{
    let mut rep = AgreementReport {
        datum: engine.datum().label(),
        points: 0,
        comparisons: 0,
        mismatches: 0,
        first_mismatch: None,
    };
    let n = engine.datum().rank();
    for z in points {
        rep.points += 1;
        for i in 1..=n {
            let a = engine.alg_z(&z, i)?;
            let f = engine.formula_z(&z, i)?;
            rep.comparisons += 1;
            if a != f {
                rep.mismatches += 1;
                if rep.first_mismatch.is_none() {
                    rep.first_mismatch = Some((z.clone(), i, a, f));
                }
            }
        }
    }
    Ok(rep)
}

/// Uniform samples from `[-r, r]^len`.
pub fn uniform_points<R: Rng>(rng: &mut R, len: usize, r: i64, count: usize) -> Vec<Vec<i64>> {
    (0..count)
        .map(|_| (0..len).map(|_| rng.gen_range(-r..=r)).collect())
        .collect()
}

/// Morphism check of every legal move on the longest word of `datum`.
pub fn longest_word_morphisms<R: Rng>(
    datum: &CartanDatum,
    min_cases: usize,
    rng: &mut R,
) -> Result<(u64, Violation)> {
    let word = datum.longest_word();
    let mut cases = 0u64;
    for m in crate::braid::legal_moves(&word) {
        for z in morphism_cases(&word, m, min_cases, rng) {
            cases += 1;
            let x = CrystalElement::new(word.clone(), z)?;
            if let Some(v) = morphism_violation(&x, m)? {
                return Ok((cases, Some(v)));
            }
        }
    }
    Ok((cases, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::MoveKind;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn box_iteration() {
        let pts: Vec<_> = lattice_box(2, -1, 1).collect();
        assert_eq!(pts.len(), 9);
        assert_eq!(pts[0], vec![-1, -1]);
        assert_eq!(pts[8], vec![1, 1]);
        assert_eq!(lattice_box(0, 0, 0).count(), 1);
    }

    #[test]
    fn cases_fill_window() {
        let d: CartanDatum = "B2".parse().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let m = BraidMove::new(MoveKind::FourIJ, 1);
        let cases = morphism_cases(&d.longest_word(), m, 1000, &mut rng);
        assert_eq!(cases.len(), 1250);
    }

    #[test]
    fn inverse_small() {
        let r = inverse_laws(1);
        assert!(r.pass());
        assert_eq!((r.phi1_cases, r.phi2_cases), (27, 81));
    }
}
