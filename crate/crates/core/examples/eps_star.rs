//! `eps_i^*` computed by braid moves and by closed formulas, side by side.

use cellular_crystals::{CartanDatum, CrystalElement, EpsStarEngine};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> cellular_crystals::Result<()> {
    let a3: CartanDatum = "A3".parse()?;
    let x = CrystalElement::new(a3.longest_word(), vec![1, 1, 0, 1, 1, 0])?;
    let engine = EpsStarEngine::new(&a3)?;
    let report = engine.report(&x)?;
    println!("{}", serde_json::to_string(&report).unwrap());
    println!(
        "wt = {} so this is not the unit: {:?}",
        x.wt(),
        engine.is_unit(&x)?
    );

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for label in ["B3", "C3", "D5"] {
        let d: CartanDatum = label.parse()?;
        let e = EpsStarEngine::new(&d)?;
        let z: Vec<i64> = (0..e.word().len()).map(|_| rng.gen_range(-4..=4)).collect();
        let x = CrystalElement::new(e.word().clone(), z)?;
        let alg: Vec<i64> = (1..=d.rank())
            .map(|i| e.eps_star_alg(&x, i))
            .collect::<Result<_, _>>()?;
        let formula: Vec<i64> = (1..=d.rank())
            .map(|i| e.eps_star_formula(&x, i))
            .collect::<Result<_, _>>()?;
        println!(
            "{label} {:?}\n   alg {alg:?}\n   formula {formula:?}",
            x.z()
        );
        if d.rank() > 2 {
            println!("   helpers at i=1: {:?}", e.helpers(&x, 1)?);
        }
    }
    Ok(())
}
