//! Braid-move procedures that bring a chosen letter to the end of the
//! fixed longest word. Pass a type and a letter: `-- B4 2`.

use cellular_crystals::{rightmost_script, CartanDatum};

fn main() -> cellular_crystals::Result<()> {
    let mut args = std::env::args().skip(1);
    let d: CartanDatum = args.next().unwrap_or_else(|| "D4".into()).parse()?;
    let i: usize = args.next().map_or(2, |s| s.parse().expect("letter"));

    let script = rightmost_script(&d, i)?;
    let trace = script.trace();
    println!("{d}, letter {i}: {} moves", script.len());
    println!("{:>20} {}", "", trace[0]);
    for (m, w) in script.moves().iter().zip(&trace[1..]) {
        println!("{:>20} {w}", m.to_string());
    }
    Ok(())
}
