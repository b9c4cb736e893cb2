//! Cartan data for the classical families, words over the node set, and a
//! signed-permutation model of the Weyl group used to certify reducedness.
//!
//! Node numbering follows the usual (Kac) diagrams:
//!
//! * `A_n`: the path `1 - 2 - ... - n`.
//! * `B_n`: path with a double bond `n-1 => n`, `alpha_n` short, so
//!   `a[n][n-1] = -2` and `a[n-1][n] = -1`.
//! * `C_n`: path with a double bond `n-1 <= n`, `alpha_n` long, so
//!   `a[n-1][n] = -2` and `a[n][n-1] = -1`.
//! * `D_n`: path `1 - ... - (n-2)` with `n-1` and `n` both attached to `n-2`.
//!
//! All indices exposed by this module are 1-based, matching the way words are
//! written down.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    /// Smallest rank accepted for the family.
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 4,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

#[derive(Debug, PartialEq, Eq)]
struct Inner {
    family: Family,
    rank: usize,
    /// Row-major, `a[i * rank + j] = <h_{i+1}, alpha_{j+1}>`.
    a: Vec<i64>,
    d: Vec<i64>,
}

/// A classical Cartan datum. Cheap to clone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum(Arc<Inner>);

impl CartanDatum {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank < family.min_rank() {
            return Err(Error::RankOutOfRange {
                family,
                rank,
                min: family.min_rank(),
            });
        }
        let n = rank;
        let mut a = vec![0i64; n * n];
        let mut set = |i: usize, j: usize, v: i64| a[(i - 1) * n + (j - 1)] = v;
        for i in 1..=n {
            set(i, i, 2);
        }
        match family {
            Family::A | Family::B | Family::C => {
                for i in 1..n {
                    set(i, i + 1, -1);
                    set(i + 1, i, -1);
                }
                if family == Family::B {
                    set(n, n - 1, -2);
                } else if family == Family::C {
                    set(n - 1, n, -2);
                }
            }
            Family::D => {
                for i in 1..n - 1 {
                    set(i, i + 1, -1);
                    set(i + 1, i, -1);
                }
                // the edge (n-1, n) of the path is replaced by (n-2, n)
                set(n - 1, n, 0);
                set(n, n - 1, 0);
                set(n - 2, n, -1);
                set(n, n - 2, -1);
            }
        }
        let d = match family {
            Family::A | Family::D => vec![1; n],
            Family::B => (1..=n).map(|i| if i < n { 2 } else { 1 }).collect(),
            Family::C => (1..=n).map(|i| if i < n { 1 } else { 2 }).collect(),
        };
        Ok(CartanDatum(Arc::new(Inner { family, rank, a, d })))
    }

    pub fn family(&self) -> Family {
        self.0.family
    }

    pub fn rank(&self) -> usize {
        self.0.rank
    }

    /// `a_{ij} = <h_i, alpha_j>`, 1-based.
    #[inline]
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.0.a[(i - 1) * self.0.rank + (j - 1)]
    }

    /// Symmetrizer `d_i`, normalized so that the smallest one is 1.
    pub fn symmetrizer(&self, i: usize) -> i64 {
        self.0.d[i - 1]
    }

    /// The full matrix as rows, 0-based.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        self.0.a.chunks(self.0.rank).map(|r| r.to_vec()).collect()
    }

    /// `a_{ij} a_{ji}`; decides which braid relation holds between `s_i` and `s_j`.
    #[inline]
    pub fn bond(&self, i: usize, j: usize) -> i64 {
        self.a(i, j) * self.a(j, i)
    }

    /// Label such as `"B4"`.
    pub fn label(&self) -> String {
        format!("{}{}", self.family(), self.rank())
    }

    /// `<h_i, sum_j c_j alpha_j>`.
    pub fn pairing(&self, i: usize, coeffs: &[i64]) -> i64 {
        let n = self.rank();
        let row = &self.0.a[(i - 1) * n..i * n];
        row.iter().zip(coeffs).map(|(a, c)| a * c).sum()
    }

    pub fn check_letter(&self, letter: usize) -> Result<()> {
        if letter == 0 || letter > self.rank() {
            return Err(Error::LetterOutOfRange {
                letter,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    /// Number of positive roots, which is also the length of `w_0`.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank();
        match self.family() {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
        }
    }

    /// The fixed reduced word for `w_0`:
    /// `1 (21) (321) ... (n...21)` for `A_n`, `(12...n)^n` for `B_n`/`C_n`
    /// and `(12...n)^{n-1}` for `D_n`.
    pub fn longest_word(&self) -> Word {
        let n = self.rank();
        let letters: Vec<usize> = match self.family() {
            Family::A => (1..=n).flat_map(|b| (1..=b).rev()).collect(),
            Family::B | Family::C => (0..n).flat_map(|_| 1..=n).collect(),
            Family::D => (0..n - 1).flat_map(|_| 1..=n).collect(),
        };
        Word {
            datum: self.clone(),
            letters,
        }
    }

    pub fn identity(&self) -> WeylElement {
        let m = self.weyl_degree();
        WeylElement {
            datum: self.clone(),
            images: (1..=m as i32).collect(),
        }
    }

    /// Number of coordinates the signed permutations act on.
    fn weyl_degree(&self) -> usize {
        match self.family() {
            Family::A => self.rank() + 1,
            _ => self.rank(),
        }
    }
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family(), self.rank())
    }
}

impl FromStr for CartanDatum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::BadDatum(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            _ => return Err(bad()),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest.parse().map_err(|_| bad())?;
        CartanDatum::new(family, rank)
    }
}

/// Convenience wrapper: `cartan_matrix(Family::C, 3)`.
pub fn cartan_matrix(family: Family, rank: usize) -> Result<CartanDatum> {
    CartanDatum::new(family, rank)
}

/// Convenience wrapper returning the fixed reduced longest word.
pub fn longest_word(family: Family, rank: usize) -> Result<Word> {
    Ok(CartanDatum::new(family, rank)?.longest_word())
}

/// A finite word over the nodes of a Cartan datum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    datum: CartanDatum,
    letters: Vec<usize>,
}

impl Word {
    pub fn new(datum: &CartanDatum, letters: Vec<usize>) -> Result<Self> {
        for &l in &letters {
            datum.check_letter(l)?;
        }
        Ok(Word {
            datum: datum.clone(),
            letters,
        })
    }

    /// Parses `"121"`, `"1,2,1"`, `"1 2 1"` or `"[1,2,1]"`. The compact digit
    /// form is only accepted when the rank is below 10.
    pub fn parse(datum: &CartanDatum, s: &str) -> Result<Self> {
        let s = s
            .trim()
            .trim_start_matches('[')
            .trim_end_matches(']')
            .trim();
        let letters: Vec<usize> = if s.is_empty() {
            Vec::new()
        } else if s.contains(|c: char| c == ',' || c.is_whitespace()) {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::Parse(format!("bad letter {t:?}")))
                })
                .collect::<Result<_>>()?
        } else if datum.rank() < 10 {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad letter {c:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            vec![s
                .parse()
                .map_err(|_| Error::Parse(format!("bad letter {s:?}")))?]
        };
        Word::new(datum, letters)
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// 1-based access.
    pub fn letter(&self, position: usize) -> usize {
        self.letters[position - 1]
    }

    pub fn contains(&self, letter: usize) -> bool {
        self.letters.contains(&letter)
    }

    pub(crate) fn letters_mut(&mut self) -> &mut Vec<usize> {
        &mut self.letters
    }

    /// The Weyl group element `s_{i_1} s_{i_2} ... s_{i_l}`.
    pub fn product(&self) -> WeylElement {
        self.letters
            .iter()
            .fold(self.datum.identity(), |w, &i| w.apply_generator(i))
    }

    /// True iff the Coxeter length of the product equals the word length.
    pub fn is_reduced(&self) -> bool {
        self.product().length() == self.len()
    }

    pub fn is_longest(&self) -> bool {
        self.len() == self.datum.positive_root_count() && self.is_reduced()
    }

    /// Concatenation; both words must share a datum.
    pub fn concat(&self, other: &Word) -> Word {
        debug_assert_eq!(self.datum, other.datum);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word {
            datum: self.datum.clone(),
            letters,
        }
    }
}

pub fn is_reduced(word: &Word) -> bool {
    word.is_reduced()
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.datum.rank() < 10 {
            for l in &self.letters {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
            f.write_str(&parts.join(" "))
        }
    }
}

/// Weyl group element as a signed permutation: `images[k-1] = ±m` means
/// `w(e_k) = ±e_m`. Type `A_n` uses unsigned permutations of `n+1` letters,
/// types `B`/`C`/`D` signed permutations of `n` letters (even sign changes
/// for `D`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    datum: CartanDatum,
    images: Vec<i32>,
}

impl WeylElement {
    pub fn images(&self) -> &[i32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, &v)| v == k as i32 + 1)
    }

    /// Right multiplication `w -> w s_i`.
    pub fn apply_generator(&self, i: usize) -> WeylElement {
        let n = self.datum.rank();
        assert!(i >= 1 && i <= n, "generator {i} out of range for rank {n}");
        let mut images = self.images.clone();
        match self.datum.family() {
            Family::A => images.swap(i - 1, i),
            Family::B | Family::C if i == n => images[n - 1] = -images[n - 1],
            Family::D if i == n => {
                images.swap(n - 2, n - 1);
                images[n - 2] = -images[n - 2];
                images[n - 1] = -images[n - 1];
            }
            _ => images.swap(i - 1, i),
        }
        WeylElement {
            datum: self.datum.clone(),
            images,
        }
    }

    /// Coxeter length: the number of positive roots sent to negative roots.
    ///
    /// Positive roots are `e_a - e_b`, `e_a + e_b` (a < b, not for `A`) and
    /// `e_a` (for `B`/`C`, where `2e_a` behaves the same). A root vector is
    /// positive iff its first nonzero coordinate is.
    pub fn length(&self) -> usize {
        let family = self.datum.family();
        let m = self.images.len();
        // sign of the image of e_a - s*e_b, via first nonzero coordinate
        let sign_of = |a: usize, b: usize, s: i32| -> bool {
            let (pa, sa) = (self.images[a].unsigned_abs(), self.images[a].signum());
            let (pb, sb) = (self.images[b].unsigned_abs(), self.images[b].signum() * -s);
            // image = sa*e_pa + sb*e_pb with pa != pb
            if pa < pb {
                sa > 0
            } else {
                sb > 0
            }
        };
        let mut len = 0;
        for a in 0..m {
            for b in a + 1..m {
                if !sign_of(a, b, 1) {
                    len += 1;
                }
                if family != Family::A && !sign_of(a, b, -1) {
                    len += 1;
                }
            }
            if matches!(family, Family::B | Family::C) && self.images[a] < 0 {
                len += 1;
            }
        }
        len
    }
}

pub fn apply_generator(w: &WeylElement, i: usize) -> WeylElement {
    w.apply_generator(i)
}
