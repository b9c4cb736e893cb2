//! Reference implementation of the tensor product rule on binary trees of
//! elementary crystals `B_i` and weight crystals `T_lambda`.
//!
//! This is deliberately independent of the signature formulas in
//! [`crate::crystal`]: `eps`/`phi` are computed recursively from the factors
//! and may be `-inf`. It exists to cross-check the flat implementation.

use std::fmt;

use crate::cartan::{CartanDatum, Word};
use crate::crystal::{CrystalElement, WeightVector};

/// `Z ∪ {-inf}`, ordered with `-inf` below every integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ext {
    NegInf,
    Fin(i64),
}

impl Ext {
    pub fn shift(self, k: i64) -> Ext {
        match self {
            Ext::NegInf => Ext::NegInf,
            Ext::Fin(v) => Ext::Fin(v + k),
        }
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Ext::NegInf => None,
            Ext::Fin(v) => Some(v),
        }
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::NegInf => f.write_str("-inf"),
            Ext::Fin(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TensorNode {
    /// `(z)_i` in `B_i`.
    Elementary {
        letter: usize,
        z: i64,
    },
    /// `t_lambda`, with `lambda` given in simple-root coordinates.
    Weight(WeightVector),
    Tensor(Box<TensorNode>, Box<TensorNode>),
}

impl TensorNode {
    pub fn elementary(letter: usize, z: i64) -> Self {
        TensorNode::Elementary { letter, z }
    }

    pub fn tensor(left: TensorNode, right: TensorNode) -> Self {
        TensorNode::Tensor(Box::new(left), Box::new(right))
    }

    fn leaves(x: &CrystalElement) -> impl Iterator<Item = TensorNode> + '_ {
        x.word()
            .letters()
            .iter()
            .zip(x.z())
            .map(|(&l, &z)| TensorNode::elementary(l, z))
    }

    /// `((b_1 ⊗ b_2) ⊗ b_3) ⊗ ...`
    pub fn left_nested(x: &CrystalElement) -> Option<Self> {
        Self::leaves(x).reduce(TensorNode::tensor)
    }

    /// `b_1 ⊗ (b_2 ⊗ (b_3 ⊗ ...))`
    pub fn right_nested(x: &CrystalElement) -> Option<Self> {
        let leaves: Vec<_> = Self::leaves(x).collect();
        leaves
            .into_iter()
            .rev()
            .reduce(|acc, b| TensorNode::tensor(b, acc))
    }

    /// Splits the leaves `[0, mid)` and `[mid, l)` and nests each half recursively.
    pub fn balanced(x: &CrystalElement) -> Option<Self> {
        fn build(leaves: &[TensorNode]) -> Option<TensorNode> {
            match leaves.len() {
                0 => None,
                1 => Some(leaves[0].clone()),
                n => {
                    let (l, r) = leaves.split_at(n / 2);
                    Some(TensorNode::tensor(build(l)?, build(r)?))
                }
            }
        }
        let leaves: Vec<_> = Self::leaves(x).collect();
        build(&leaves)
    }

    pub fn wt(&self, rank: usize) -> WeightVector {
        match self {
            TensorNode::Elementary { letter, z } => {
                let mut v = WeightVector::zero(rank);
                v.0[letter - 1] = *z;
                v
            }
            TensorNode::Weight(lambda) => lambda.clone(),
            TensorNode::Tensor(a, b) => &a.wt(rank) + &b.wt(rank),
        }
    }

    pub fn eps(&self, datum: &CartanDatum, i: usize) -> Ext {
        match self {
            TensorNode::Elementary { letter, z } if *letter == i => Ext::Fin(-z),
            TensorNode::Elementary { .. } | TensorNode::Weight(_) => Ext::NegInf,
            TensorNode::Tensor(a, b) => {
                let shift = a.wt(datum.rank()).pairing(datum, i);
                a.eps(datum, i).max(b.eps(datum, i).shift(-shift))
            }
        }
    }

    pub fn phi(&self, datum: &CartanDatum, i: usize) -> Ext {
        match self {
            TensorNode::Elementary { letter, z } if *letter == i => Ext::Fin(*z),
            TensorNode::Elementary { .. } | TensorNode::Weight(_) => Ext::NegInf,
            TensorNode::Tensor(a, b) => {
                let shift = b.wt(datum.rank()).pairing(datum, i);
                b.phi(datum, i).max(a.phi(datum, i).shift(shift))
            }
        }
    }

    /// `None` is the crystal's `0`.
    pub fn e_tilde(&self, datum: &CartanDatum, i: usize) -> Option<TensorNode> {
        match self {
            TensorNode::Elementary { letter, z } if *letter == i => {
                Some(TensorNode::elementary(i, z + 1))
            }
            TensorNode::Elementary { .. } | TensorNode::Weight(_) => None,
            TensorNode::Tensor(a, b) => {
                if a.phi(datum, i) >= b.eps(datum, i) {
                    Some(TensorNode::tensor(a.e_tilde(datum, i)?, (**b).clone()))
                } else {
                    Some(TensorNode::tensor((**a).clone(), b.e_tilde(datum, i)?))
                }
            }
        }
    }

    pub fn f_tilde(&self, datum: &CartanDatum, i: usize) -> Option<TensorNode> {
        match self {
            TensorNode::Elementary { letter, z } if *letter == i => {
                Some(TensorNode::elementary(i, z - 1))
            }
            TensorNode::Elementary { .. } | TensorNode::Weight(_) => None,
            TensorNode::Tensor(a, b) => {
                if a.phi(datum, i) > b.eps(datum, i) {
                    Some(TensorNode::tensor(a.f_tilde(datum, i)?, (**b).clone()))
                } else {
                    Some(TensorNode::tensor((**a).clone(), b.f_tilde(datum, i)?))
                }
            }
        }
    }

    /// Leaves left to right; weight factors are skipped.
    pub fn flatten(&self) -> Vec<(usize, i64)> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<(usize, i64)>) {
        match self {
            TensorNode::Elementary { letter, z } => out.push((*letter, *z)),
            TensorNode::Weight(_) => {}
            TensorNode::Tensor(a, b) => {
                a.collect(out);
                b.collect(out);
            }
        }
    }

    /// Back to a flat element over `datum` (weight factors dropped).
    pub fn to_element(&self, datum: &CartanDatum) -> CrystalElement {
        let (letters, z): (Vec<usize>, Vec<i64>) = self.flatten().into_iter().unzip();
        let word = Word::new(datum, letters).expect("leaves carry valid letters");
        CrystalElement::new(word, z).expect("lengths agree")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> CartanDatum {
        s.parse().unwrap()
    }

    #[test]
    fn elementary_crystal() {
        let a2 = datum("A2");
        let b = TensorNode::elementary(1, 3);
        assert_eq!(b.eps(&a2, 1), Ext::Fin(-3));
        assert_eq!(b.phi(&a2, 1), Ext::Fin(3));
        assert_eq!(b.eps(&a2, 2), Ext::NegInf);
        assert_eq!(b.e_tilde(&a2, 2), None);
        assert_eq!(b.f_tilde(&a2, 1), Some(TensorNode::elementary(1, 2)));
    }

    #[test]
    fn f_routes_left_when_phi_exceeds_eps() {
        let a2 = datum("A2");
        // phi_1(b1) = 2 > eps_1(b2) = 0
        let t = TensorNode::tensor(TensorNode::elementary(1, 2), TensorNode::elementary(1, 0));
        let f = t.f_tilde(&a2, 1).unwrap();
        assert_eq!(f.flatten(), vec![(1, 1), (1, 0)]);
        // phi_1(b1) = 0 <= eps_1(b2) = 0
        let t = TensorNode::tensor(TensorNode::elementary(1, 0), TensorNode::elementary(1, 0));
        assert_eq!(t.f_tilde(&a2, 1).unwrap().flatten(), vec![(1, 0), (1, -1)]);
    }

    #[test]
    fn weight_crystal_is_inert() {
        let a2 = datum("A2");
        let t = TensorNode::Weight(WeightVector(vec![1, -2]));
        assert_eq!(t.eps(&a2, 1), Ext::NegInf);
        assert_eq!(t.phi(&a2, 2), Ext::NegInf);
        assert_eq!(t.e_tilde(&a2, 1), None);
        assert_eq!(t.f_tilde(&a2, 1), None);
        // b ⊗ t_lambda shifts wt and phi, keeps eps and the operators on b
        let b = TensorNode::elementary(1, 2);
        let bt = TensorNode::tensor(b.clone(), t.clone());
        assert_eq!(bt.wt(2), WeightVector(vec![3, -2]));
        assert_eq!(bt.eps(&a2, 1), b.eps(&a2, 1));
        // <h_1, lambda> = 2*1 + (-1)(-2) = 4
        assert_eq!(bt.phi(&a2, 1), Ext::Fin(2 + 4));
        assert_eq!(
            bt.f_tilde(&a2, 1).unwrap(),
            TensorNode::tensor(TensorNode::elementary(1, 1), t)
        );
    }
}
