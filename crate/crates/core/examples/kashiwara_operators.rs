//! Kashiwara operators on a cellular crystal, in both coordinate views.

use cellular_crystals::{CartanDatum, CrystalElement, Op, Word};

fn main() -> cellular_crystals::Result<()> {
    let a2: CartanDatum = "A2".parse()?;
    let word = Word::parse(&a2, "121")?;
    let x = CrystalElement::new(word, vec![0, -1, 0])?;

    println!("x = {x}");
    println!("x-view {:?}, sigma {:?}", x.x(), x.sigmas());
    for i in 1..=2 {
        println!(
            "  i={i}: eps {} phi {} <h_i, wt> {}",
            x.eps(i)?,
            x.phi(i)?,
            x.wt().pairing(&a2, i)
        );
    }
    println!("  wt = {}", x.wt());

    let ops = Op::parse_list("f1 f1 f2 e1")?;
    let mut prev = x.clone();
    for (op, y) in ops.iter().zip(x.apply_ops(&ops)?) {
        println!("{op}: {prev}  ->  {y}");
        prev = y;
    }
    Ok(())
}
