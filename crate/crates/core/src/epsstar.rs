//! `eps_i^*` on cellular crystals of the fixed longest words.
//!
//! Two independent computations are provided:
//!
//! * [`eps_star_alg`] moves the letter `i` to the last position by a fixed
//!   sequence of braid moves (see [`rightmost_script`]), transports the
//!   coordinates along the induced isomorphism and negates the last one;
//! * [`eps_star_formula`] evaluates closed piecewise-linear expressions in the
//!   double-indexed coordinates `z_{j,k}` (the `j`-th occurrence of `k`,
//!   with `z_{j,0} = 0`).
//!
//! For type `C` the helper `zeta_i` is
//! `-max(-2 z_{i,n} + z_{i+1,n-1}, -eta_i, -z_{i+1,n-1} + 2 z_{i+1,n})`.
//! The variant with last term `z_{i+1,n-1} - z_{i,n}` (the type `B` shape)
//! disagrees with the braid-move computation already on `C_2`.

use serde::{Deserialize, Serialize};

use crate::braid::{BraidMove, BraidScript, MoveKind};
use crate::cartan::{CartanDatum, Family, Word};
use crate::crystal::CrystalElement;
use crate::error::{Error, Result};

/// Records moves while rewriting a working copy of the word.
struct Builder {
    datum: CartanDatum,
    letters: Vec<usize>,
    moves: Vec<BraidMove>,
    scratch: Vec<i64>,
}

impl Builder {
    fn new(word: &Word) -> Self {
        Builder {
            datum: word.datum().clone(),
            letters: word.letters().to_vec(),
            moves: Vec::new(),
            scratch: vec![0; word.len()],
        }
    }

    fn at(&self, p: usize) -> usize {
        self.letters[p - 1]
    }

    fn push(&mut self, kind: MoveKind, p: usize) -> Result<()> {
        let m = BraidMove::new(kind, p);
        m.apply_raw(&self.datum, &mut self.letters, &mut self.scratch)?;
        self.moves.push(m);
        Ok(())
    }

    fn commutes(&self, a: usize, b: usize) -> bool {
        a != b && self.datum.bond(a, b) == 0
    }

    fn slide_right(&mut self, mut p: usize) -> Result<usize> {
        while p < self.letters.len() && self.commutes(self.at(p), self.at(p + 1)) {
            self.push(MoveKind::Two, p)?;
            p += 1;
        }
        Ok(p)
    }

    fn slide_left(&mut self, mut p: usize) -> Result<usize> {
        while p > 1 && self.commutes(self.at(p - 1), self.at(p)) {
            self.push(MoveKind::Two, p - 1)?;
            p -= 1;
        }
        Ok(p)
    }

    /// 1-based position of the `j`-th occurrence of `letter`, left to right.
    fn occurrence(&self, letter: usize, j: usize) -> Result<usize> {
        self.letters
            .iter()
            .enumerate()
            .filter(|&(_, &l)| l == letter)
            .nth(j.wrapping_sub(1))
            .map(|(k, _)| k + 1)
            .ok_or_else(|| Error::Procedure {
                step: "locate",
                detail: format!("letter {letter} has no occurrence {j}"),
            })
    }

    fn next_after(&self, letter: usize, p: usize) -> Result<usize> {
        self.letters[p..]
            .iter()
            .position(|&l| l == letter)
            .map(|k| p + k + 1)
            .ok_or_else(|| Error::Procedure {
                step: "locate",
                detail: format!("no letter {letter} after position {p}"),
            })
    }

    fn expect(&self, p: usize, pattern: &[usize], step: &'static str) -> Result<()> {
        let end = p - 1 + pattern.len();
        if end <= self.letters.len() && self.letters[p - 1..end] == *pattern {
            Ok(())
        } else {
            Err(Error::Procedure {
                step,
                detail: format!("expected {pattern:?} at position {p} of {:?}", self.letters),
            })
        }
    }

    fn expect_end(&self, p: usize, step: &'static str) -> Result<()> {
        if p == self.letters.len() {
            Ok(())
        } else {
            Err(Error::Procedure {
                step,
                detail: format!("letter stopped at {p} of {}", self.letters.len()),
            })
        }
    }

    fn finish(self, source: Word) -> Result<BraidScript> {
        BraidScript::new(source, self.moves)
    }
}

fn check_index(datum: &CartanDatum, i: usize) -> Result<()> {
    datum.check_letter(i)
}

fn check_family(datum: &CartanDatum, allowed: &[Family]) -> Result<()> {
    if allowed.contains(&datum.family()) {
        Ok(())
    } else {
        Err(Error::BadDatum(format!(
            "{} is not of type {}",
            datum,
            allowed
                .iter()
                .map(Family::to_string)
                .collect::<Vec<_>>()
                .join("/")
        )))
    }
}

/// Type `A_n`: the `(n-i+1)`-th occurrence of `1` (the `i`-th reading from
/// the right) is carried rightwards, turning into `2, 3, ..., i` through
/// 3-moves `c (c+1) c -> (c+1) c (c+1)`.
pub fn rightmost_script_a(n: usize, i: usize) -> Result<BraidScript> {
    let datum = CartanDatum::new(Family::A, n)?;
    check_index(&datum, i)?;
    let source = datum.longest_word();
    if source.letters().last() == Some(&i) {
        return Ok(BraidScript::empty(source));
    }
    let mut b = Builder::new(&source);
    let mut p = b.occurrence(1, n - i + 1)?;
    for c in 1..i {
        p = b.slide_right(p)?;
        b.expect(p, &[c, c + 1, c], "raise")?;
        b.push(MoveKind::Three, p)?;
        p += 2;
    }
    p = b.slide_right(p)?;
    b.expect_end(p, "final slide")?;
    b.finish(source)
}

/// Types `B_n` and `C_n` on `(12...n)^n`.
pub fn rightmost_script_bc(family: Family, n: usize, i: usize) -> Result<BraidScript> {
    let datum = CartanDatum::new(family, n)?;
    check_family(&datum, &[Family::B, Family::C])?;
    check_index(&datum, i)?;
    let source = datum.longest_word();
    if source.letters().last() == Some(&i) {
        return Ok(BraidScript::empty(source));
    }
    let mut b = Builder::new(&source);
    let mut p = raise_to(&mut b, i, n - 1)?;

    b.expect(p, &[n - 1, n, n - 1, n], "double bond")?;
    let four = MoveKind::four_for(&datum, n - 1, n).ok_or_else(|| Error::Procedure {
        step: "double bond",
        detail: format!("nodes {} and {n} are not joined by a double bond", n - 1),
    })?;
    b.push(four, p)?;
    p += 3;

    p = lower_to(&mut b, p, n - 1, i)?;
    b.expect_end(p, "final slide")?;
    b.finish(source)
}

/// Type `D_n` on `(12...n)^{n-1}`.
pub fn rightmost_script_d(n: usize, i: usize) -> Result<BraidScript> {
    let datum = CartanDatum::new(Family::D, n)?;
    check_index(&datum, i)?;
    let source = datum.longest_word();
    if source.letters().last() == Some(&i) {
        return Ok(BraidScript::empty(source));
    }
    let mut b = Builder::new(&source);
    if i == n - 1 {
        b.push(MoveKind::Two, source.len() - 1)?;
        return b.finish(source);
    }
    let mut p = raise_to(&mut b, i, n - 2)?;

    b.expect(p, &[n - 2, n - 1, n, n - 2, n - 1, n], "fork")?;
    for (kind, off) in [
        (MoveKind::Two, 1),
        (MoveKind::Three, 2),
        (MoveKind::Three, 0),
        (MoveKind::Two, 2),
        (MoveKind::Three, 3),
    ] {
        b.push(kind, p + off)?;
    }
    p += 5;

    p = lower_to(&mut b, p, n - 2, i)?;
    b.expect_end(p, "final slide")?;
    b.finish(source)
}

/// Takes the `i`-th occurrence of `1` and raises it to the letter `top` by
/// pulling the next `c` leftwards and applying `c (c+1) c -> (c+1) c (c+1)`.
fn raise_to(b: &mut Builder, i: usize, top: usize) -> Result<usize> {
    let mut p = b.occurrence(1, i)?;
    for c in 1..top {
        let q = b.next_after(c, p)?;
        let q = b.slide_left(q)?;
        if q != p + 2 {
            return Err(Error::Procedure {
                step: "raise",
                detail: format!("letter {c} stopped at {q}, expected {}", p + 2),
            });
        }
        b.expect(p, &[c, c + 1, c], "raise")?;
        b.push(MoveKind::Three, p)?;
        p += 2;
    }
    Ok(p)
}

/// Carries the letter at `p` (currently `c`) right, lowering it to `i`.
fn lower_to(b: &mut Builder, mut p: usize, mut c: usize, i: usize) -> Result<usize> {
    while c > i {
        p = b.slide_right(p)?;
        b.expect(p, &[c, c - 1, c], "lower")?;
        b.push(MoveKind::Three, p)?;
        p += 2;
        c -= 1;
    }
    b.slide_right(p)
}

/// The script moving `i` to the last position of `datum.longest_word()`.
pub fn rightmost_script(datum: &CartanDatum, i: usize) -> Result<BraidScript> {
    match datum.family() {
        Family::A => rightmost_script_a(datum.rank(), i),
        f @ (Family::B | Family::C) => rightmost_script_bc(f, datum.rank(), i),
        Family::D => rightmost_script_d(datum.rank(), i),
    }
}

/// Optional helper values; `None` where a helper is not defined.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HelperValues {
    pub eta: Option<i64>,
    pub zeta: Option<i64>,
    pub theta: Option<i64>,
    pub kappa: Option<i64>,
}

/// Per-letter occurrence table of the fixed word; `pos[k][j-1]` is 0-based.
#[derive(Debug, Clone)]
struct Occurrences {
    pos: Vec<Vec<usize>>,
}

impl Occurrences {
    fn new(word: &Word) -> Self {
        let mut pos = vec![Vec::new(); word.datum().rank() + 1];
        for (k, &l) in word.letters().iter().enumerate() {
            pos[l].push(k);
        }
        Occurrences { pos }
    }

    #[inline]
    fn z(&self, z: &[i64], j: usize, k: usize) -> i64 {
        if k == 0 {
            0
        } else {
            z[self.pos[k][j - 1]]
        }
    }
}

/// Caches the scripts for one datum so that repeated evaluation is cheap.
#[derive(Debug, Clone)]
pub struct EpsStarEngine {
    datum: CartanDatum,
    word: Word,
    occ: Occurrences,
    scripts: Vec<BraidScript>,
}

impl EpsStarEngine {
    pub fn new(datum: &CartanDatum) -> Result<Self> {
        let word = datum.longest_word();
        let scripts = (1..=datum.rank())
            .map(|i| rightmost_script(datum, i))
            .collect::<Result<Vec<_>>>()?;
        Ok(EpsStarEngine {
            datum: datum.clone(),
            occ: Occurrences::new(&word),
            word,
            scripts,
        })
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn script(&self, i: usize) -> Result<&BraidScript> {
        check_index(&self.datum, i)?;
        Ok(&self.scripts[i - 1])
    }

    fn check_element(&self, x: &CrystalElement) -> Result<()> {
        if x.word().letters() != self.word.letters() || x.datum() != &self.datum {
            return Err(Error::NotLongestWord {
                expected: self.word.letters().to_vec(),
                got: x.word().letters().to_vec(),
            });
        }
        Ok(())
    }

    fn check_len(&self, z: &[i64]) -> Result<()> {
        if z.len() != self.word.len() {
            return Err(Error::LengthMismatch {
                expected: self.word.len(),
                got: z.len(),
            });
        }
        Ok(())
    }

    /// Braid-move value on raw coordinates over the fixed word.
    pub fn alg_z(&self, z: &[i64], i: usize) -> Result<i64> {
        self.check_len(z)?;
        let script = self.script(i)?;
        let mut w = z.to_vec();
        script.apply_z(&mut w);
        Ok(-*w.last().expect("longest words are nonempty"))
    }

    /// Closed-form value on raw coordinates over the fixed word.
    pub fn formula_z(&self, z: &[i64], i: usize) -> Result<i64> {
        self.check_len(z)?;
        check_index(&self.datum, i)?;
        let n = self.datum.rank();
        let zz = |j: usize, k: usize| self.occ.z(z, j, k);
        let value = match self.datum.family() {
            Family::A => (1..=i)
                .map(|k| zz(n - i + 2, k - 1) - zz(n - i + 1, k))
                .max()
                .expect("nonempty range"),
            Family::B | Family::C => {
                if i == n {
                    -zz(n, n)
                } else {
                    let zeta = self.zeta(z, i);
                    (1..n - i)
                        .map(|k| zz(i + k + 1, n - k) - zz(i + k + 1, n - k - 1))
                        .fold(-zeta, i64::max)
                }
            }
            Family::D => {
                if i == n {
                    -zz(n - 1, n)
                } else if i == n - 1 {
                    -zz(n - 1, n - 1)
                } else {
                    let kappa = self.kappa(z, i);
                    (1..n - i - 1)
                        .map(|k| zz(i + k + 1, n - k - 1) - zz(i + k + 1, n - k - 2))
                        .fold(-kappa, i64::max)
                }
            }
        };
        Ok(value)
    }

    fn eta(&self, z: &[i64], i: usize) -> i64 {
        let n = self.datum.rank();
        -(1..n)
            .map(|k| self.occ.z(z, i + 1, k - 1) - self.occ.z(z, i, k))
            .max()
            .expect("n >= 2")
    }

    fn zeta(&self, z: &[i64], i: usize) -> i64 {
        let n = self.datum.rank();
        let zz = |j: usize, k: usize| self.occ.z(z, j, k);
        let eta = self.eta(z, i);
        let terms = match self.datum.family() {
            Family::C => [
                -2 * zz(i, n) + zz(i + 1, n - 1),
                -eta,
                -zz(i + 1, n - 1) + 2 * zz(i + 1, n),
            ],
            _ => [
                -zz(i + 1, n - 1) + zz(i + 1, n),
                -eta,
                zz(i + 1, n - 1) - zz(i, n),
            ],
        };
        -terms.into_iter().max().expect("three terms")
    }

    fn theta(&self, z: &[i64], i: usize) -> i64 {
        let n = self.datum.rank();
        -(1..n - 1)
            .map(|k| self.occ.z(z, i + 1, k - 1) - self.occ.z(z, i, k))
            .max()
            .expect("n >= 4")
    }

    fn kappa(&self, z: &[i64], i: usize) -> i64 {
        let n = self.datum.rank();
        let zz = |j: usize, k: usize| self.occ.z(z, j, k);
        let terms = [
            -self.theta(z, i),
            zz(i + 1, n - 1) - zz(i, n),
            zz(i + 1, n - 2) - zz(i, n - 1) - zz(i, n),
            zz(i + 1, n) - zz(i, n - 1),
            zz(i + 1, n) + zz(i + 1, n - 1) - zz(i + 1, n - 2),
        ];
        -terms.into_iter().max().expect("five terms")
    }

    pub fn eps_star_alg(&self, x: &CrystalElement, i: usize) -> Result<i64> {
        self.check_element(x)?;
        self.alg_z(x.z(), i)
    }

    pub fn eps_star_formula(&self, x: &CrystalElement, i: usize) -> Result<i64> {
        self.check_element(x)?;
        self.formula_z(x.z(), i)
    }

    /// `eta_i`, `zeta_i` for `B`/`C` (`1 <= i <= n-1`) and `theta_i`, `kappa_i`
    /// for `D` (`1 <= i <= n-2`).
    pub fn helpers(&self, x: &CrystalElement, i: usize) -> Result<HelperValues> {
        self.check_element(x)?;
        let n = self.datum.rank();
        let z = x.z();
        match self.datum.family() {
            Family::A => Err(Error::HelperOutOfRange {
                helper: "eta/zeta/theta/kappa",
                index: i,
                range: "types B, C and D".into(),
            }),
            Family::B | Family::C => {
                if !(1..n).contains(&i) {
                    return Err(Error::HelperOutOfRange {
                        helper: "eta/zeta",
                        index: i,
                        range: format!("1 <= i <= {}", n - 1),
                    });
                }
                Ok(HelperValues {
                    eta: Some(self.eta(z, i)),
                    zeta: Some(self.zeta(z, i)),
                    ..Default::default()
                })
            }
            Family::D => {
                if !(1..n - 1).contains(&i) {
                    return Err(Error::HelperOutOfRange {
                        helper: "theta/kappa",
                        index: i,
                        range: format!("1 <= i <= {}", n - 2),
                    });
                }
                Ok(HelperValues {
                    theta: Some(self.theta(z, i)),
                    kappa: Some(self.kappa(z, i)),
                    ..Default::default()
                })
            }
        }
    }

    pub fn report(&self, x: &CrystalElement) -> Result<EpsStarReport> {
        self.check_element(x)?;
        let entries = (1..=self.datum.rank())
            .map(|i| {
                let script = &self.scripts[i - 1];
                Ok(EpsStarEntry {
                    i,
                    eps_star_alg: self.alg_z(x.z(), i)?,
                    eps_star_formula: self.formula_z(x.z(), i)?,
                    final_word: script.target().letters().to_vec(),
                    script_length: script.len(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(EpsStarReport {
            datum: self.datum.label(),
            z: x.z().to_vec(),
            entries,
        })
    }

    pub fn is_unit(&self, x: &CrystalElement) -> Result<UnitVerdict> {
        self.check_element(x)?;
        Ok(self.unit_verdict_z(x.z()))
    }

    fn unit_verdict_z(&self, z: &[i64]) -> UnitVerdict {
        for (k, pos) in self.occ.pos.iter().enumerate().skip(1) {
            let c: i64 = pos.iter().map(|&p| z[p]).sum();
            if c != 0 {
                return UnitVerdict::NonzeroWeight {
                    letter: k,
                    coefficient: c,
                };
            }
        }
        self.eps_verdict_z(z)
    }

    fn eps_verdict_z(&self, z: &[i64]) -> UnitVerdict {
        for i in 1..=self.datum.rank() {
            let v = self.alg_z(z, i).expect("length checked by caller");
            if v != 0 {
                return UnitVerdict::NonzeroEpsStar { i, value: v };
            }
        }
        UnitVerdict::Unit
    }

    /// Scans `[-radius, radius]^l`, visiting only points of weight zero
    /// unless `full_scan` is set.
    pub fn verify_unit_theorem(&self, radius: i64, full_scan: bool) -> UnitReport {
        let l = self.word.len();
        let side = (2 * radius + 1) as u128;
        let points_scanned = side.checked_pow(l as u32).unwrap_or(u128::MAX);
        let mut wt_zero_count = 0u64;
        let mut unit_candidates = 0u64;
        let mut eps_zero = 0u64;
        let mut non_zero_units = Vec::new();

        let mut visit = |z: &[i64], wt_zero: bool| {
            let eps_ok = self.eps_verdict_z(z) == UnitVerdict::Unit;
            if eps_ok {
                eps_zero += 1;
            }
            if wt_zero {
                wt_zero_count += 1;
                if eps_ok {
                    unit_candidates += 1;
                    if z.iter().any(|&c| c != 0) && non_zero_units.len() < 8 {
                        non_zero_units.push(z.to_vec());
                    }
                }
            }
        };

        if full_scan {
            let mut z = vec![-radius; l];
            loop {
                let wt_zero = self
                    .occ
                    .pos
                    .iter()
                    .skip(1)
                    .all(|ps| ps.iter().map(|&p| z[p]).sum::<i64>() == 0);
                visit(&z, wt_zero);
                if !odometer(&mut z, radius) {
                    break;
                }
            }
        } else {
            let blocks: Vec<Vec<Vec<i64>>> = self
                .occ
                .pos
                .iter()
                .skip(1)
                .map(|ps| zero_sum_tuples(ps.len(), radius))
                .collect();
            let mut choice = vec![0usize; blocks.len()];
            let mut z = vec![0i64; l];
            'outer: loop {
                for (k, block) in blocks.iter().enumerate() {
                    for (&p, &v) in self.occ.pos[k + 1].iter().zip(&block[choice[k]]) {
                        z[p] = v;
                    }
                }
                visit(&z, true);
                for k in 0..blocks.len() {
                    choice[k] += 1;
                    if choice[k] < blocks[k].len() {
                        continue 'outer;
                    }
                    choice[k] = 0;
                }
                break;
            }
        }

        let pass = unit_candidates == 1 && non_zero_units.is_empty();
        UnitReport {
            datum: self.datum.label(),
            radius,
            points_scanned,
            wt_zero_count,
            eps_star_zero_count: full_scan.then_some(eps_zero),
            unit_candidates,
            non_zero_units,
            pass,
        }
    }
}

/// Advances `z` through `[-r, r]^l` in lexicographic order (last index fastest).
fn odometer(z: &mut [i64], r: i64) -> bool {
    for c in z.iter_mut().rev() {
        if *c < r {
            *c += 1;
            return true;
        }
        *c = -r;
    }
    false
}

/// All tuples in `[-r, r]^m` with zero sum, in lexicographic order.
fn zero_sum_tuples(m: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn go(m: usize, r: i64, sum: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let left = (m - cur.len()) as i64;
        if left == 0 {
            if sum == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in -r..=r {
            let s = sum + v;
            if s.abs() <= (left - 1) * r {
                cur.push(v);
                go(m, r, s, cur, out);
                cur.pop();
            }
        }
    }
    go(m, r, 0, &mut cur, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsStarEntry {
    pub i: usize,
    pub eps_star_alg: i64,
    pub eps_star_formula: i64,
    pub final_word: Vec<usize>,
    pub script_length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsStarReport {
    pub datum: String,
    pub z: Vec<i64>,
    pub entries: Vec<EpsStarEntry>,
}

impl EpsStarReport {
    pub fn all_match(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.eps_star_alg == e.eps_star_formula)
    }

    pub fn all_zero(&self) -> bool {
        self.entries.iter().all(|e| e.eps_star_alg == 0)
    }
}

/// Outcome of the unit test, with the first failing condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum UnitVerdict {
    Unit,
    NonzeroWeight { letter: usize, coefficient: i64 },
    NonzeroEpsStar { i: usize, value: i64 },
}

impl UnitVerdict {
    pub fn is_unit(&self) -> bool {
        matches!(self, UnitVerdict::Unit)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitReport {
    pub datum: String,
    pub radius: i64,
    /// Size of the whole box, including the points skipped by the weight filter.
    pub points_scanned: u128,
    pub wt_zero_count: u64,
    /// Points of the box where every `eps_i^*` vanishes; only with a full scan.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps_star_zero_count: Option<u64>,
    pub unit_candidates: u64,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub non_zero_units: Vec<Vec<i64>>,
    pub pass: bool,
}

pub fn eps_star_alg(x: &CrystalElement, i: usize) -> Result<i64> {
    EpsStarEngine::new(x.datum())?.eps_star_alg(x, i)
}

pub fn eps_star_formula(x: &CrystalElement, i: usize) -> Result<i64> {
    EpsStarEngine::new(x.datum())?.eps_star_formula(x, i)
}

pub fn helpers(x: &CrystalElement, i: usize) -> Result<HelperValues> {
    EpsStarEngine::new(x.datum())?.helpers(x, i)
}

pub fn is_unit(x: &CrystalElement) -> Result<UnitVerdict> {
    EpsStarEngine::new(x.datum())?.is_unit(x)
}

pub fn verify_unit_theorem(datum: &CartanDatum, radius: i64) -> Result<UnitReport> {
    Ok(EpsStarEngine::new(datum)?.verify_unit_theorem(radius, false))
}

/// `-z_last` after an arbitrary script whose target ends with `i`.
pub fn eps_star_via(x: &CrystalElement, script: &BraidScript) -> Result<i64> {
    let y = crate::braid::apply_script(x, script)?;
    Ok(-*y.z().last().ok_or(Error::LengthMismatch {
        expected: 1,
        got: 0,
    })?)
}
