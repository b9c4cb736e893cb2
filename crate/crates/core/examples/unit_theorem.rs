//! Exhaustive check that only `z = 0` has weight zero and vanishing `eps^*`.

use cellular_crystals::{CartanDatum, EpsStarEngine};

fn main() -> cellular_crystals::Result<()> {
    for (label, radius) in [("A2", 3), ("A3", 2), ("B3", 1), ("C3", 1), ("D4", 1)] {
        let d: CartanDatum = label.parse()?;
        let report = EpsStarEngine::new(&d)?.verify_unit_theorem(radius, false);
        println!("{}", serde_json::to_string(&report).unwrap());
    }

    // scanning every point also shows how many non-units have eps^* = 0
    let a3: CartanDatum = "A3".parse()?;
    let full = EpsStarEngine::new(&a3)?.verify_unit_theorem(2, true);
    println!(
        "A3 radius 2: {} points with all eps* zero, {} of them of weight zero",
        full.eps_star_zero_count.unwrap_or(0),
        full.unit_candidates
    );
    Ok(())
}
