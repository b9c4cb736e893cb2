//! The cellular crystal `B_{i_1} ⊗ ... ⊗ B_{i_l}` identified with `Z^l`.
//!
//! Elements are stored in the z-convention: the factor at position `k` is
//! `(z_k)_{i_k}`. The x-convention used by the signature rule is `x_k = -z_k`.
//! With
//!
//! ```text
//! sigma_k(x) = x_k + sum_{j<k} <h_{i_k}, alpha_{i_j}> x_j
//! ```
//!
//! `eps_i` is the maximum of `sigma_k` over positions carrying `i`, `f_i` adds
//! one to `x` at the rightmost maximizing position and `e_i` subtracts one at
//! the leftmost.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanDatum, Word};
use crate::error::{Error, Result};

/// `sum_i c_i alpha_i`, stored as the coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn zero(rank: usize) -> Self {
        WeightVector(vec![0; rank])
    }

    /// `alpha_i` (1-based).
    pub fn simple_root(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        WeightVector(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// `<h_i, self>`.
    pub fn pairing(&self, datum: &CartanDatum, i: usize) -> i64 {
        datum.pairing(i, &self.0)
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate().filter(|(_, &c)| c != 0) {
            let sign = match (first, c < 0) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let m = c.abs();
            if m == 1 {
                write!(f, "{sign}a{}", k + 1)?;
            } else {
                write!(f, "{sign}{m}a{}", k + 1)?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalElement {
    word: Word,
    z: Vec<i64>,
}

impl CrystalElement {
    pub fn new(word: Word, z: Vec<i64>) -> Result<Self> {
        if z.len() != word.len() {
            return Err(Error::LengthMismatch {
                expected: word.len(),
                got: z.len(),
            });
        }
        Ok(CrystalElement { word, z })
    }

    /// `(0)_{i_1} ⊗ ... ⊗ (0)_{i_l}`.
    pub fn zero(word: Word) -> Self {
        let z = vec![0; word.len()];
        CrystalElement { word, z }
    }

    pub fn from_x(word: Word, x: Vec<i64>) -> Result<Self> {
        Self::new(word, x.into_iter().map(|v| -v).collect())
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn datum(&self) -> &CartanDatum {
        self.word.datum()
    }

    pub fn z(&self) -> &[i64] {
        &self.z
    }

    pub fn x(&self) -> Vec<i64> {
        self.z.iter().map(|v| -v).collect()
    }

    pub fn len(&self) -> usize {
        self.z.len()
    }

    pub fn is_empty(&self) -> bool {
        self.z.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.z.iter().all(|&v| v == 0)
    }

    pub(crate) fn parts_mut(&mut self) -> (&mut Word, &mut Vec<i64>) {
        (&mut self.word, &mut self.z)
    }

    pub fn into_parts(self) -> (Word, Vec<i64>) {
        (self.word, self.z)
    }

    /// `sigma_k` for a 1-based position `k`.
    pub fn sigma(&self, k: usize) -> Result<i64> {
        if k == 0 || k > self.len() {
            return Err(Error::PositionOutOfRange {
                position: k,
                len: self.len(),
            });
        }
        let datum = self.datum();
        let ik = self.word.letter(k);
        let tail: i64 = (0..k - 1)
            .map(|j| datum.a(ik, self.word.letters()[j]) * -self.z[j])
            .sum();
        Ok(-self.z[k - 1] + tail)
    }

    /// All `sigma_k`, 0-based, in one left-to-right pass.
    pub fn sigmas(&self) -> Vec<i64> {
        let datum = self.datum();
        // prefix[m] = sum_{j<k, i_j = m+1} x_j
        let mut prefix = vec![0i64; datum.rank()];
        let mut out = Vec::with_capacity(self.len());
        for (&ik, &zk) in self.word.letters().iter().zip(&self.z) {
            out.push(-zk + datum.pairing(ik, &prefix));
            prefix[ik - 1] -= zk;
        }
        out
    }

    fn check_letter(&self, i: usize) -> Result<()> {
        self.datum().check_letter(i)?;
        if !self.word.contains(i) {
            return Err(Error::LetterAbsent(i));
        }
        Ok(())
    }

    /// `(max sigma, leftmost argmax, rightmost argmax)` over positions carrying `i`.
    fn signature(&self, i: usize) -> Result<(i64, usize, usize)> {
        self.check_letter(i)?;
        let sig = self.sigmas();
        let mut best: Option<(i64, usize, usize)> = None;
        for (k, (&l, &s)) in self.word.letters().iter().zip(&sig).enumerate() {
            if l != i {
                continue;
            }
            best = match best {
                None => Some((s, k, k)),
                Some((m, lo, _)) if s == m => Some((m, lo, k)),
                Some((m, _, _)) if s > m => Some((s, k, k)),
                keep => keep,
            };
        }
        Ok(best.expect("letter checked present"))
    }

    pub fn eps(&self, i: usize) -> Result<i64> {
        Ok(self.signature(i)?.0)
    }

    pub fn phi(&self, i: usize) -> Result<i64> {
        let e = self.eps(i)?;
        Ok(self.wt().pairing(self.datum(), i) + e)
    }

    /// `wt = -sum_k x_k alpha_{i_k} = sum_k z_k alpha_{i_k}`.
    pub fn wt(&self) -> WeightVector {
        let mut c = vec![0; self.datum().rank()];
        for (&l, &v) in self.word.letters().iter().zip(&self.z) {
            c[l - 1] += v;
        }
        WeightVector(c)
    }

    pub fn f_tilde(&self, i: usize) -> Result<CrystalElement> {
        let (_, _, mf) = self.signature(i)?;
        let mut out = self.clone();
        out.z[mf] -= 1;
        Ok(out)
    }

    pub fn e_tilde(&self, i: usize) -> Result<CrystalElement> {
        let (_, me, _) = self.signature(i)?;
        let mut out = self.clone();
        out.z[me] += 1;
        Ok(out)
    }

    /// Applies operators left to right and returns every intermediate element.
    pub fn apply_ops(&self, ops: &[Op]) -> Result<Vec<CrystalElement>> {
        let mut cur = self.clone();
        let mut trace = Vec::with_capacity(ops.len());
        for op in ops {
            cur = match op {
                Op::F(i) => cur.f_tilde(*i)?,
                Op::E(i) => cur.e_tilde(*i)?,
            };
            trace.push(cur.clone());
        }
        Ok(trace)
    }

    /// Tensor product of cellular crystals is concatenation.
    pub fn concat(&self, other: &CrystalElement) -> CrystalElement {
        let mut z = self.z.clone();
        z.extend_from_slice(&other.z);
        CrystalElement {
            word: self.word.concat(&other.word),
            z,
        }
    }

    pub fn double_index(&self) -> DoubleIndex {
        DoubleIndex::new(&self.word)
    }

    pub fn to_json(&self) -> ElementJson {
        ElementJson {
            word: self.word.letters().to_vec(),
            z: self.z.clone(),
        }
    }
}

impl fmt::Display for CrystalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .word
            .letters()
            .iter()
            .zip(&self.z)
            .map(|(l, v)| format!("({v})_{l}"))
            .collect();
        f.write_str(&parts.join(" ⊗ "))
    }
}

/// A Kashiwara operator in an `apply` sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    E(usize),
    F(usize),
}

impl Op {
    /// Parses whitespace or comma separated tokens such as `"f1 f2 e1"`.
    pub fn parse_list(s: &str) -> Result<Vec<Op>> {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                let mut chars = t.chars();
                let head = chars.next().map(String::from).unwrap_or_default();
                let rest = chars.as_str();
                let i: usize = rest
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad operator {t:?}")))?;
                match head.as_str() {
                    "f" | "F" => Ok(Op::F(i)),
                    "e" | "E" => Ok(Op::E(i)),
                    _ => Err(Error::Parse(format!("bad operator {t:?}"))),
                }
            })
            .collect()
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::E(i) => write!(f, "e{i}"),
            Op::F(i) => write!(f, "f{i}"),
        }
    }
}

/// `{"word": [...], "z": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub word: Vec<usize>,
    pub z: Vec<i64>,
}

impl ElementJson {
    pub fn into_element(self, datum: &CartanDatum) -> Result<CrystalElement> {
        CrystalElement::new(Word::new(datum, self.word)?, self.z)
    }
}

/// `(j, i) -> position` where position is that of the `j`-th occurrence of
/// letter `i` reading left to right (all 1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleIndex {
    forward: BTreeMap<(usize, usize), usize>,
    backward: Vec<(usize, usize)>,
}

impl DoubleIndex {
    pub fn new(word: &Word) -> Self {
        let mut seen = vec![0usize; word.datum().rank() + 1];
        let mut forward = BTreeMap::new();
        let mut backward = Vec::with_capacity(word.len());
        for (k, &l) in word.letters().iter().enumerate() {
            seen[l] += 1;
            forward.insert((seen[l], l), k + 1);
            backward.push((seen[l], l));
        }
        DoubleIndex { forward, backward }
    }

    pub fn position(&self, j: usize, letter: usize) -> Option<usize> {
        self.forward.get(&(j, letter)).copied()
    }

    /// `(j, i)` at a 1-based position.
    pub fn at(&self, position: usize) -> (usize, usize) {
        self.backward[position - 1]
    }

    /// `z_{j,i}` with `z_{j,0} = 0`. Panics on a missing occurrence.
    pub fn z(&self, z: &[i64], j: usize, letter: usize) -> i64 {
        if letter == 0 {
            return 0;
        }
        match self.position(j, letter) {
            Some(p) => z[p - 1],
            None => panic!("letter {letter} has no occurrence {j}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elem(d: &str, w: &str, z: &[i64]) -> CrystalElement {
        let datum: CartanDatum = d.parse().unwrap();
        CrystalElement::new(Word::parse(&datum, w).unwrap(), z.to_vec()).unwrap()
    }

    #[test]
    fn single_factor() {
        for n in [-3, 0, 4] {
            let b = elem("A2", "1", &[n]);
            assert_eq!(b.sigma(1).unwrap(), -n);
            assert_eq!(b.eps(1).unwrap(), -n);
            assert_eq!(b.phi(1).unwrap(), n);
            assert_eq!(b.wt(), WeightVector(vec![n, 0]));
            assert_eq!(b.f_tilde(1).unwrap().z(), &[n - 1]);
            assert_eq!(b.e_tilde(1).unwrap().z(), &[n + 1]);
        }
    }

    #[test]
    fn sigma_hand_values() {
        // x-view (1,1,0) on 121
        let x = elem("A2", "121", &[-1, -1, 0]);
        assert_eq!(x.sigma(3).unwrap(), 1);
        assert_eq!(x.sigmas(), vec![1, 0, 1]);
        assert!(x.sigma(0).is_err());
        assert!(x.sigma(4).is_err());
        let zero = elem("B3", "123123123", &[0; 9]);
        assert!(zero.sigmas().iter().all(|&s| s == 0));
    }

    #[test]
    fn eps_phi_hand_values() {
        let x = elem("A2", "121", &[0, -1, 0]);
        assert_eq!(x.eps(1).unwrap(), 0);
        // wt = -alpha_2, <h_1, wt> = 1, so phi_1 = 1 + eps_1
        assert_eq!(x.wt(), WeightVector(vec![0, -1]));
        assert_eq!(x.phi(1).unwrap(), 1);
        let zero = elem("A2", "121", &[0, 0, 0]);
        assert_eq!(zero.eps(2).unwrap(), 0);
        assert_eq!(zero.phi(2).unwrap(), 0);
    }

    #[test]
    fn f_tie_break_takes_rightmost() {
        let zero = elem("A2", "121", &[0, 0, 0]);
        let f = zero.f_tilde(1).unwrap();
        assert_eq!(f.x(), vec![0, 0, 1]);
        let e = zero.e_tilde(1).unwrap();
        assert_eq!(e.x(), vec![-1, 0, 0]);
    }

    #[test]
    fn absent_letter() {
        let x = elem("A3", "121", &[0, 0, 0]);
        assert_eq!(x.eps(3), Err(Error::LetterAbsent(3)));
        assert!(x.f_tilde(3).is_err());
        assert!(matches!(x.eps(7), Err(Error::LetterOutOfRange { .. })));
    }

    #[test]
    fn intro_a3_weight() {
        let x = elem("A3", "121321", &[1, 1, 0, 1, 1, 0]);
        assert_eq!(x.wt(), WeightVector(vec![1, 2, 1]));
        assert!(!x.wt().is_zero());
    }

    #[test]
    fn length_checked() {
        let datum: CartanDatum = "A2".parse().unwrap();
        let w = Word::parse(&datum, "121").unwrap();
        assert!(CrystalElement::new(w, vec![0, 0]).is_err());
    }

    #[test]
    fn x_z_roundtrip() {
        let x = elem("A2", "121", &[3, -2, 5]);
        let back = CrystalElement::from_x(x.word().clone(), x.x()).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn double_index_a3() {
        let datum: CartanDatum = "A3".parse().unwrap();
        let w = Word::parse(&datum, "121321").unwrap();
        let di = DoubleIndex::new(&w);
        assert_eq!(di.position(1, 1), Some(1));
        assert_eq!(di.position(2, 1), Some(3));
        assert_eq!(di.position(3, 1), Some(6));
        assert_eq!(di.position(2, 2), Some(5));
        assert_eq!(di.at(4), (1, 3));
        let z = [10, 20, 30, 40, 50, 60];
        assert_eq!(di.z(&z, 2, 2), 50);
        assert_eq!(di.z(&z, 9, 0), 0);
    }

    #[test]
    fn op_parsing() {
        assert_eq!(
            Op::parse_list("f1 f2,e1").unwrap(),
            vec![Op::F(1), Op::F(2), Op::E(1)]
        );
        assert!(Op::parse_list("g1").is_err());
        assert!(Op::parse_list("").unwrap().is_empty());
    }
}
