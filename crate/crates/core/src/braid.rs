//! Braid moves on words together with the braid-type isomorphisms they
//! induce on coordinates.
//!
//! All maps act on z-coordinates of the affected window:
//!
//! | move    | pattern     | condition                       | map         |
//! |---------|-------------|---------------------------------|-------------|
//! | `Two`   | `ij -> ji`  | `a_ij a_ji = 0`                 | [`phi0`]    |
//! | `Three` | `iji -> jij`| `a_ij a_ji = 1`                 | [`phi1`]    |
//! | `FourIJ`| `ijij -> jiji` | `a_ij = -1`, `a_ji = -2`     | [`phi2_ij`] |
//! | `FourJI`| `jiji -> ijij` | `a_ij = -1`, `a_ji = -2`     | [`phi2_ji`] |
//!
//! # Note on the rank-two maps
//!
//! The closed forms of the 4-move maps in circulation contain misprints. The
//! versions here were recovered by propagating the identity at `0` along
//! crystal edges and are checked exhaustively (in the tests) to be crystal
//! isomorphisms and mutually inverse. Against the published display:
//!
//! * `phi2_ij`, 2nd output: `max(z1+z4, z3, z1-z2+2z3)`; printed with `z2` in
//!   place of the middle `z3`.
//! * `phi2_ij`, 3rd output: `-max(-z2, -z4-2z1, -2z2+2z3-z4)`; printed with
//!   `-z3` in place of `-z2`.
//! * `phi2_ji`, 2nd output: `max(z1-2z2+2z3, z3, z1+2z4)`; printed as
//!   `z1+z1+2z4`.
//! * `phi2_ji`, 4th output: `-max(-2z2+z3, -z1, -z3+2z4)`; printed with
//!   `z3-2z4`.
//!
//! The remaining components agree with the published display.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanDatum, Word};
use crate::crystal::CrystalElement;
use crate::error::{Error, Result};

/// `(z1)_i ⊗ (z2)_j -> (z2)_j ⊗ (z1)_i`.
#[inline]
pub fn phi0([z1, z2]: [i64; 2]) -> [i64; 2] {
    [z2, z1]
}

/// `B_i ⊗ B_j ⊗ B_i -> B_j ⊗ B_i ⊗ B_j` for `a_ij a_ji = 1`. It is its own
/// inverse (with `i`, `j` swapped).
#[inline]
pub fn phi1([z1, z2, z3]: [i64; 3]) -> [i64; 3] {
    [z3.max(z2 - z1), z1 + z3, -(-z1).max(z3 - z2)]
}

/// `B_i ⊗ B_j ⊗ B_i ⊗ B_j -> B_j ⊗ B_i ⊗ B_j ⊗ B_i` for `a_ij = -1`, `a_ji = -2`.
#[inline]
pub fn phi2_ij([z1, z2, z3, z4]: [i64; 4]) -> [i64; 4] {
    [
        z4.max(z2 - 2 * z1).max(2 * z3 - z2),
        (z1 + z4).max(z3).max(z1 - z2 + 2 * z3),
        -(-z2).max(-z4 - 2 * z1).max(-2 * z2 + 2 * z3 - z4),
        -(-z3 + z4).max(-z1).max(z3 - z2),
    ]
}

/// `B_j ⊗ B_i ⊗ B_j ⊗ B_i -> B_i ⊗ B_j ⊗ B_i ⊗ B_j`, the inverse of [`phi2_ij`].
#[inline]
pub fn phi2_ji([z1, z2, z3, z4]: [i64; 4]) -> [i64; 4] {
    [
        (-z2 + z3).max(-z1 + z2).max(z4),
        (z1 - 2 * z2 + 2 * z3).max(z3).max(z1 + 2 * z4),
        -(-2 * z2 + z3 - z4).max(-z1 - z4).max(-z2),
        -(-2 * z2 + z3).max(-z1).max(-z3 + 2 * z4),
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    Two,
    Three,
    FourIJ,
    FourJI,
    /// Only exists for `G_2`; always rejected.
    Six,
}

impl MoveKind {
    pub fn width(self) -> usize {
        match self {
            MoveKind::Two => 2,
            MoveKind::Three => 3,
            MoveKind::FourIJ | MoveKind::FourJI => 4,
            MoveKind::Six => 6,
        }
    }

    fn name(self) -> &'static str {
        match self {
            MoveKind::Two => "2-move",
            MoveKind::Three => "3-move",
            MoveKind::FourIJ => "4-move (ij)",
            MoveKind::FourJI => "4-move (ji)",
            MoveKind::Six => "6-move",
        }
    }

    /// Orientation of the 4-move turning `a b a b` into `b a b a`, or `None`
    /// if `a`, `b` are not joined by a double bond.
    pub fn four_for(datum: &CartanDatum, a: usize, b: usize) -> Option<MoveKind> {
        match (datum.a(a, b), datum.a(b, a)) {
            (-1, -2) => Some(MoveKind::FourIJ),
            (-2, -1) => Some(MoveKind::FourJI),
            _ => None,
        }
    }

    /// The move that undoes this one on the rewritten window.
    pub fn inverse(self) -> MoveKind {
        match self {
            MoveKind::FourIJ => MoveKind::FourJI,
            MoveKind::FourJI => MoveKind::FourIJ,
            k => k,
        }
    }
}

/// A braid move at a 1-based position (leftmost letter of the pattern).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidMove {
    pub kind: MoveKind,
    #[serde(rename = "pos")]
    pub position: usize,
}

impl BraidMove {
    pub fn new(kind: MoveKind, position: usize) -> Self {
        BraidMove { kind, position }
    }

    /// Checks the move against the letters of a word.
    pub fn check(&self, datum: &CartanDatum, letters: &[usize]) -> Result<()> {
        let kind = self.kind;
        let p = self.position;
        let illegal = |reason: String| Error::IllegalMove {
            kind: kind.name(),
            position: p,
            reason,
        };
        if kind == MoveKind::Six {
            return Err(Error::UnsupportedSixMove);
        }
        if p == 0 || p + kind.width() - 1 > letters.len() {
            return Err(illegal(format!(
                "window of width {} does not fit in a word of length {}",
                kind.width(),
                letters.len()
            )));
        }
        let w = &letters[p - 1..p - 1 + kind.width()];
        let (a, b) = (w[0], w[1]);
        match kind {
            MoveKind::Two => {
                if a == b || datum.bond(a, b) != 0 {
                    return Err(illegal(format!("letters {a}{b} do not commute")));
                }
            }
            MoveKind::Three => {
                if w[2] != a || datum.bond(a, b) != 1 {
                    return Err(illegal(format!(
                        "expected a pattern iji with a single bond, found {a}{b}{}",
                        w[2]
                    )));
                }
            }
            MoveKind::FourIJ | MoveKind::FourJI => {
                if w[2] != a || w[3] != b {
                    return Err(illegal(format!(
                        "expected a pattern abab, found {a}{b}{}{}",
                        w[2], w[3]
                    )));
                }
                if MoveKind::four_for(datum, a, b) != Some(kind) {
                    return Err(illegal(format!(
                        "a_{a}{b} = {}, a_{b}{a} = {} does not fit this orientation",
                        datum.a(a, b),
                        datum.a(b, a)
                    )));
                }
            }
            MoveKind::Six => unreachable!(),
        }
        Ok(())
    }

    /// Rewrites `letters` and `z` in place.
    pub fn apply_raw(
        &self,
        datum: &CartanDatum,
        letters: &mut [usize],
        z: &mut [i64],
    ) -> Result<()> {
        self.check(datum, letters)?;
        let s = self.position - 1;
        match self.kind {
            MoveKind::Two => {
                letters.swap(s, s + 1);
                z.swap(s, s + 1);
            }
            MoveKind::Three => {
                let (a, b) = (letters[s], letters[s + 1]);
                letters[s..s + 3].copy_from_slice(&[b, a, b]);
                let out = phi1([z[s], z[s + 1], z[s + 2]]);
                z[s..s + 3].copy_from_slice(&out);
            }
            MoveKind::FourIJ | MoveKind::FourJI => {
                let (a, b) = (letters[s], letters[s + 1]);
                letters[s..s + 4].copy_from_slice(&[b, a, b, a]);
                let win = [z[s], z[s + 1], z[s + 2], z[s + 3]];
                let out = if self.kind == MoveKind::FourIJ {
                    phi2_ij(win)
                } else {
                    phi2_ji(win)
                };
                z[s..s + 4].copy_from_slice(&out);
            }
            MoveKind::Six => unreachable!(),
        }
        Ok(())
    }

    /// The move undoing `self` once `self` has been applied.
    pub fn inverse(&self) -> BraidMove {
        BraidMove::new(self.kind.inverse(), self.position)
    }
}

impl fmt::Display for BraidMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}", self.kind.name(), self.position)
    }
}

/// All moves that are legal on `word`, ordered by position then kind.
pub fn legal_moves(word: &Word) -> Vec<BraidMove> {
    let datum = word.datum();
    let mut out = Vec::new();
    for p in 1..=word.len() {
        for kind in [
            MoveKind::Two,
            MoveKind::Three,
            MoveKind::FourIJ,
            MoveKind::FourJI,
        ] {
            let m = BraidMove::new(kind, p);
            if m.check(datum, word.letters()).is_ok() {
                out.push(m);
            }
        }
    }
    out
}

pub fn apply_move(x: &CrystalElement, m: BraidMove) -> Result<CrystalElement> {
    let mut out = x.clone();
    let datum = x.datum().clone();
    let (word, z) = out.parts_mut();
    m.apply_raw(&datum, word.letters_mut(), z)?;
    Ok(out)
}

/// A sequence of moves starting from a fixed source word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidScript {
    source: Word,
    moves: Vec<BraidMove>,
    target: Word,
}

impl BraidScript {
    /// Validates every move against the word produced by its predecessors.
    pub fn new(source: Word, moves: Vec<BraidMove>) -> Result<Self> {
        let datum = source.datum().clone();
        let mut letters = source.letters().to_vec();
        let mut scratch = vec![0; letters.len()];
        for m in &moves {
            m.apply_raw(&datum, &mut letters, &mut scratch)?;
        }
        let target = Word::new(&datum, letters)?;
        Ok(BraidScript {
            source,
            moves,
            target,
        })
    }

    pub fn empty(source: Word) -> Self {
        BraidScript {
            target: source.clone(),
            source,
            moves: Vec::new(),
        }
    }

    pub fn source(&self) -> &Word {
        &self.source
    }

    pub fn target(&self) -> &Word {
        &self.target
    }

    pub fn moves(&self) -> &[BraidMove] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// The source word followed by the word after each move.
    pub fn trace(&self) -> Vec<Word> {
        let datum = self.source.datum().clone();
        let mut letters = self.source.letters().to_vec();
        let mut scratch = vec![0; letters.len()];
        let mut out = vec![self.source.clone()];
        for m in &self.moves {
            m.apply_raw(&datum, &mut letters, &mut scratch)
                .expect("validated on construction");
            out.push(Word::new(&datum, letters.clone()).expect("letters stay in range"));
        }
        out
    }

    /// Reversed list of inverse moves, taking the target back to the source.
    pub fn inverse(&self) -> BraidScript {
        BraidScript {
            source: self.target.clone(),
            moves: self.moves.iter().rev().map(BraidMove::inverse).collect(),
            target: self.source.clone(),
        }
    }

    /// Applies the composed isomorphism to raw z-coordinates over the source word.
    pub fn apply_z(&self, z: &mut [i64]) {
        let datum = self.source.datum();
        let mut letters = self.source.letters().to_vec();
        for m in &self.moves {
            m.apply_raw(datum, &mut letters, z)
                .expect("validated on construction");
        }
    }

    pub fn to_json(&self) -> ScriptJson {
        ScriptJson {
            source: self.source.letters().to_vec(),
            moves: self.moves.clone(),
        }
    }
}

pub fn apply_script(x: &CrystalElement, script: &BraidScript) -> Result<CrystalElement> {
    if x.word() != script.source() {
        return Err(Error::SourceMismatch {
            script: script.source().letters().to_vec(),
            element: x.word().letters().to_vec(),
        });
    }
    let mut z = x.z().to_vec();
    script.apply_z(&mut z);
    CrystalElement::new(script.target().clone(), z)
}

/// `{"source": [...], "moves": [{"kind": "Three", "pos": 1}, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScriptJson {
    pub source: Vec<usize>,
    pub moves: Vec<BraidMove>,
}

impl ScriptJson {
    pub fn into_script(self, datum: &CartanDatum) -> Result<BraidScript> {
        BraidScript::new(Word::new(datum, self.source)?, self.moves)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> CartanDatum {
        s.parse().unwrap()
    }

    fn cube<const N: usize>(r: i64) -> Vec<[i64; N]> {
        let side = (2 * r + 1) as usize;
        (0..side.pow(N as u32))
            .map(|mut idx| {
                let mut v = [0; N];
                for c in v.iter_mut() {
                    *c = (idx % side) as i64 - r;
                    idx /= side;
                }
                v
            })
            .collect()
    }

    #[test]
    fn phi0_swaps() {
        assert_eq!(phi0([5, -3]), [-3, 5]);
        assert_eq!(phi0([0, 0]), [0, 0]);
        assert_eq!(phi0(phi0([7, 1])), [7, 1]);
    }

    #[test]
    fn phi1_values() {
        assert_eq!(phi1([0, 0, 0]), [0, 0, 0]);
        assert_eq!(phi1([1, 2, 3]), [3, 4, -1]);
        for v in cube::<3>(3) {
            assert_eq!(phi1(phi1(v)), v);
        }
    }

    #[test]
    fn phi2_values() {
        assert_eq!(phi2_ij([0; 4]), [0; 4]);
        assert_eq!(phi2_ji([0; 4]), [0; 4]);
        assert_eq!(phi2_ij([1, 0, 0, 0]), [0, 1, 0, 0]);
        assert_eq!(phi2_ji([0, 1, 0, 0]), [1, 0, 0, 0]);
        for v in cube::<4>(2) {
            assert_eq!(phi2_ji(phi2_ij(v)), v);
            assert_eq!(phi2_ij(phi2_ji(v)), v);
        }
    }

    #[test]
    fn move_legality() {
        let a3 = datum("A3");
        let w = Word::parse(&a3, "121321").unwrap();
        assert!(BraidMove::new(MoveKind::Three, 1)
            .check(&a3, w.letters())
            .is_ok());
        assert!(BraidMove::new(MoveKind::Two, 3)
            .check(&a3, w.letters())
            .is_ok());
        let err = BraidMove::new(MoveKind::Two, 1)
            .check(&a3, w.letters())
            .unwrap_err();
        assert!(matches!(err, Error::IllegalMove { position: 1, .. }));
        assert!(BraidMove::new(MoveKind::Three, 5)
            .check(&a3, w.letters())
            .is_err());
        assert_eq!(
            BraidMove::new(MoveKind::Six, 1).check(&a3, w.letters()),
            Err(Error::UnsupportedSixMove)
        );

        let b2 = datum("B2");
        let c2 = datum("C2");
        let w = [1, 2, 1, 2];
        assert!(BraidMove::new(MoveKind::FourIJ, 1).check(&b2, &w).is_ok());
        assert!(BraidMove::new(MoveKind::FourJI, 1).check(&b2, &w).is_err());
        assert!(BraidMove::new(MoveKind::FourJI, 1).check(&c2, &w).is_ok());
        assert!(BraidMove::new(MoveKind::FourIJ, 1).check(&c2, &w).is_err());
        assert!(BraidMove::new(MoveKind::Three, 1).check(&b2, &w).is_err());
    }

    #[test]
    fn apply_move_on_elements() {
        let a2 = datum("A2");
        let x = CrystalElement::new(Word::parse(&a2, "121").unwrap(), vec![1, 2, 3]).unwrap();
        let y = apply_move(&x, BraidMove::new(MoveKind::Three, 1)).unwrap();
        assert_eq!(y.word().to_string(), "212");
        assert_eq!(y.z(), &[3, 4, -1]);

        let b3 = datum("B3");
        for m in legal_moves(&b3.longest_word()) {
            let zero = CrystalElement::zero(b3.longest_word());
            assert!(apply_move(&zero, m).unwrap().is_zero());
        }
    }

    #[test]
    fn script_roundtrip() {
        let a3 = datum("A3");
        let src = a3.longest_word();
        let s = BraidScript::new(
            src.clone(),
            vec![
                BraidMove::new(MoveKind::Two, 3),
                BraidMove::new(MoveKind::Three, 4),
                BraidMove::new(MoveKind::Three, 2),
            ],
        )
        .unwrap();
        assert_eq!(s.target().to_string(), "132312");
        assert_eq!(s.trace().len(), 4);
        let x = CrystalElement::new(src.clone(), vec![3, -1, 2, 0, -4, 1]).unwrap();
        let y = apply_script(&x, &s).unwrap();
        assert_eq!(apply_script(&y, &s.inverse()).unwrap(), x);
        assert_eq!(
            apply_script(&x, &BraidScript::empty(src.clone())).unwrap(),
            x
        );

        // wrong source
        assert!(matches!(
            apply_script(&y, &s),
            Err(Error::SourceMismatch { .. })
        ));
        // illegal intermediate move
        assert!(BraidScript::new(src, vec![BraidMove::new(MoveKind::Three, 3)]).is_err());
    }

    #[test]
    fn script_json() {
        let json = r#"{"source":[1,2,1],"moves":[{"kind":"Three","pos":1}]}"#;
        let spec: ScriptJson = serde_json::from_str(json).unwrap();
        let s = spec.clone().into_script(&datum("A2")).unwrap();
        assert_eq!(s.target().letters(), &[2, 1, 2]);
        assert_eq!(serde_json::to_string(&s.to_json()).unwrap(), json);
        let six = r#"{"source":[1,2,1,2,1,2],"moves":[{"kind":"Six","pos":1}]}"#;
        let spec: ScriptJson = serde_json::from_str(six).unwrap();
        assert_eq!(
            spec.into_script(&datum("B2")),
            Err(Error::UnsupportedSixMove)
        );
    }
}
