//! Cartan matrices, longest words and the signed-permutation Weyl model.
//!
//! Run with `cargo run --example cartan_words`.

use cellular_crystals::{CartanDatum, Word};

fn main() -> cellular_crystals::Result<()> {
    for label in ["A3", "B3", "C3", "D4"] {
        let d: CartanDatum = label.parse()?;
        println!(
            "{label}: symmetrizers {:?}",
            (1..=d.rank()).map(|i| d.symmetrizer(i)).collect::<Vec<_>>()
        );
        for row in d.matrix() {
            println!("   {row:?}");
        }
        let w0 = d.longest_word();
        println!(
            "   w0 = {w0} (length {}, {} positive roots, reduced: {})",
            w0.len(),
            d.positive_root_count(),
            w0.is_reduced()
        );
        println!("   w0 acts as {:?}", w0.product().images());
    }

    let a2: CartanDatum = "A2".parse()?;
    for s in ["121", "11", "1,2"] {
        let w = Word::parse(&a2, s)?;
        println!("A2 word {w}: reduced = {}", w.is_reduced());
    }
    Ok(())
}
