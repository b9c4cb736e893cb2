//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::time::Instant;

use cellular_crystals::braid::{legal_moves, phi2_ij, phi2_ji};
use cellular_crystals::checks::{self, lattice_box};
use cellular_crystals::cli::{self, Cli};
use cellular_crystals::{BraidMove, CartanDatum, CrystalElement, EpsStarEngine, Word};
use clap::Parser;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn datum(s: &str) -> CartanDatum {
    s.parse().unwrap()
}

fn criterion_1() -> Check {
    let mut cases: Vec<String> = Vec::new();
    cases.extend((1..=6).map(|n| format!("A{n}")));
    cases.extend((2..=4).map(|n| format!("B{n}")));
    cases.extend((2..=4).map(|n| format!("C{n}")));
    cases.extend((4..=5).map(|n| format!("D{n}")));
    let mut rng = ChaCha8Rng::seed_from_u64(20240501);
    let mut total = 0u64;
    let mut parts = Vec::new();
    for label in &cases {
        let d = datum(label);
        let engine = EpsStarEngine::new(&d).map_err(|e| e.to_string())?;
        let l = engine.word().len();
        let rep = if l <= 10 {
            checks::eps_star_agreement(&engine, lattice_box(l, -1, 1))
        } else {
            checks::eps_star_agreement(&engine, checks::uniform_points(&mut rng, l, 5, 10_000))
        }
        .map_err(|e| e.to_string())?;
        if !rep.pass() {
            return Err(format!("{label}: {:?}", rep.first_mismatch));
        }
        total += rep.comparisons;
        parts.push(format!(
            "{label}:{}{}",
            rep.points,
            if l <= 10 { "x" } else { "r" }
        ));
    }
    Ok(format!("{total} comparisons ({})", parts.join(" ")))
}

fn criterion_2() -> Check {
    let mut parts = Vec::new();
    for (label, r) in [("A2", 3), ("A3", 2), ("B3", 1), ("C3", 1), ("D4", 1)] {
        let rep =
            cellular_crystals::verify_unit_theorem(&datum(label), r).map_err(|e| e.to_string())?;
        if !rep.pass {
            return Err(format!("{label} N={r}: {rep:?}"));
        }
        parts.push(format!(
            "{label} N={r}: {} wt=0 of {}",
            rep.wt_zero_count, rep.points_scanned
        ));
    }
    Ok(format!("unique unit at 0 ({})", parts.join(", ")))
}

fn trace_strings(label: &str, i: usize) -> Vec<String> {
    let d = datum(label);
    cellular_crystals::rightmost_script(&d, i)
        .unwrap()
        .trace()
        .iter()
        .map(Word::to_string)
        .collect()
}

fn criterion_3() -> Check {
    let a = trace_strings("A4", 3);
    let want_a = [
        "1213214321",
        "1231214321",
        "1232124321",
        "1232142321",
        "1232143231",
        "1232143213",
    ];
    if a != want_a {
        return Err(format!("A4 trace {a:?}"));
    }
    let b = trace_strings("B4", 2);
    if b.last().map(String::as_str) != Some("1234213243412342") {
        return Err(format!("B4 final {:?}", b.last()));
    }
    let d = trace_strings("D4", 2);
    if d.last().map(String::as_str) != Some("123421423242") {
        return Err(format!("D4 final {:?}", d.last()));
    }
    let a3 = datum("A3");
    let x = CrystalElement::new(a3.longest_word(), vec![1, 1, 0, 1, 1, 0]).unwrap();
    let engine = EpsStarEngine::new(&a3).unwrap();
    let eps: Vec<i64> = (1..=3)
        .map(|i| engine.eps_star_alg(&x, i).unwrap())
        .collect();
    if eps != [0, 0, 0] || x.wt().is_zero() {
        return Err(format!("intro element eps* {eps:?}, wt {}", x.wt()));
    }
    Ok(format!(
        "A4 {} / B4 {} / D4 {}; intro A3 eps*=0, wt={}",
        a.last().unwrap(),
        b.last().unwrap(),
        d.last().unwrap(),
        x.wt()
    ))
}

/// Legal windows on the longest word plus every window met along the
/// rightmost-move scripts (in both directions).
fn windows(d: &CartanDatum) -> Vec<(Word, BraidMove)> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut add = |w: &Word, m: BraidMove| {
        if seen.insert((w.letters().to_vec(), m.position, format!("{:?}", m.kind))) {
            out.push((w.clone(), m));
        }
    };
    let w0 = d.longest_word();
    for m in legal_moves(&w0) {
        add(&w0, m);
    }
    for i in 1..=d.rank() {
        let s = cellular_crystals::rightmost_script(d, i).unwrap();
        let trace = s.trace();
        for (k, &m) in s.moves().iter().enumerate() {
            add(&trace[k], m);
            add(&trace[k + 1], m.inverse());
        }
    }
    out
}

fn criterion_4() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut per_kind = std::collections::BTreeMap::<String, u64>::new();
    let mut min_cases = u64::MAX;
    for label in ["A3", "B3", "C3", "D4"] {
        let d = datum(label);
        for (w, m) in windows(&d) {
            let pts = checks::morphism_cases(&w, m, 1000, &mut rng);
            min_cases = min_cases.min(pts.len() as u64);
            for z in pts {
                let x = CrystalElement::new(w.clone(), z).unwrap();
                if let Some(v) = checks::morphism_violation(&x, m).map_err(|e| e.to_string())? {
                    return Err(format!("{label}: {v}"));
                }
                *per_kind.entry(format!("{:?}", m.kind)).or_default() += 1;
            }
        }
    }
    let kinds: Vec<String> = per_kind.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    if !per_kind.contains_key("FourIJ") || !per_kind.contains_key("FourJI") {
        return Err("4-move windows were not exercised".into());
    }
    Ok(format!(
        "cases {} (min {min_cases} per window)",
        kinds.join(" ")
    ))
}

fn phi2_ij_printed([z1, z2, z3, z4]: [i64; 4]) -> [i64; 4] {
    [
        z4.max(z2 - 2 * z1).max(2 * z3 - z2),
        (z1 + z4).max(z2).max(z1 - z2 + 2 * z3),
        -(-z3).max(-2 * z2 + 2 * z3 - z4).max(-2 * z1 - z4),
        -(-z3 + z4).max(-z1).max(z3 - z2),
    ]
}

fn phi2_ji_printed([z1, z2, z3, z4]: [i64; 4]) -> [i64; 4] {
    [
        z4.max(-z1 + z2).max(-z2 + z3),
        z3.max(z1 - 2 * z2 + 2 * z3).max(z1 + z1 + 2 * z4),
        -(-z2).max(-2 * z2 + z3 - z4).max(-z1 - z4),
        -(z3 - 2 * z4).max(-2 * z2 + z3).max(-z1),
    ]
}

fn criterion_5() -> Check {
    let rep = checks::inverse_laws(2);
    if !rep.pass() {
        return Err(format!("{rep:?}"));
    }
    let mut ij_diff = 0;
    let mut ji_diff = 0;
    for v in lattice_box(4, -2, 2) {
        let v = [v[0], v[1], v[2], v[3]];
        if phi2_ij_printed(v) != phi2_ij(v) {
            ij_diff += 1;
        }
        if phi2_ji_printed(v) != phi2_ji(v) {
            ji_diff += 1;
        }
    }
    Ok(format!(
        "phi1 involution on {} points, phi2 pair on {} points; printed closed forms differ on {ij_diff} (ij) and {ji_diff} (ji) of 625 points (documented)",
        rep.phi1_cases, rep.phi2_cases
    ))
}

fn criterion_6() -> Check {
    let mut count = 0;
    for (label, w, r) in [("A2", "121", 2), ("B2", "1212", 1)] {
        let d = datum(label);
        let word = Word::parse(&d, w).unwrap();
        for z in lattice_box(word.len(), -r, r) {
            let x = CrystalElement::new(word.clone(), z).unwrap();
            if let Some(v) = checks::axiom_violation(&x).map_err(|e| e.to_string())? {
                return Err(format!("{label} {w}: {v}"));
            }
            let trees = checks::all_trees(&x);
            if let Some(v) = checks::oracle_violation(&x, &trees).map_err(|e| e.to_string())? {
                return Err(format!("{label} {w}: {v}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} elements agree with three bracketings"))
}

fn criterion_7() -> Check {
    let run = |fmt: &str| {
        let cli = Cli::try_parse_from([
            "cellcrys",
            "verify",
            "B3",
            "--seed",
            "11",
            "--samples",
            "150",
            "--unit-box",
            "1",
            "--format",
            fmt,
        ])
        .unwrap();
        cli::execute(&cli)
            .map(|o| o.text)
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run("text")?, run("text")?);
    let (c, e) = (run("json")?, run("json")?);
    if a != b || c != e {
        return Err("reports differ between runs".into());
    }
    Ok(format!(
        "text {} bytes and json {} bytes identical",
        a.len(),
        c.len()
    ))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("formula-algorithm equivalence", criterion_1),
        ("unit characterization", criterion_2),
        ("worked examples", criterion_3),
        ("crystal-morphism property", criterion_4),
        ("inverse pairs", criterion_5),
        ("axioms and tensor oracle", criterion_6),
        ("determinism", criterion_7),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let res = f();
        let ms = t.elapsed().as_millis();
        match res {
            Ok(msg) => println!("PASS  criterion {} {name}: {msg} [{ms} ms]", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL  criterion {} {name}: {msg} [{ms} ms]", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
