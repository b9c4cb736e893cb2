//! The recursive tensor-product rule, used as an independent check on the
//! flat signature rule. Also shows a weight crystal `T_lambda` as a factor.

use cellular_crystals::{CartanDatum, CrystalElement, TensorNode, WeightVector, Word};

fn main() -> cellular_crystals::Result<()> {
    let b2: CartanDatum = "B2".parse()?;
    let x = CrystalElement::new(Word::parse(&b2, "1212")?, vec![1, -1, 0, 2])?;
    let left = TensorNode::left_nested(&x).expect("nonempty");
    let right = TensorNode::right_nested(&x).expect("nonempty");

    for i in 1..=2 {
        println!(
            "i={i}: flat eps {} / left {} / right {}",
            x.eps(i)?,
            left.eps(&b2, i),
            right.eps(&b2, i)
        );
        let f = left
            .f_tilde(&b2, i)
            .expect("B_i factors are never sent to 0");
        println!(
            "     f_{i}: flat {:?}  tree {:?}",
            x.f_tilde(i)?.z(),
            f.to_element(&b2).z()
        );
    }

    let t = TensorNode::tensor(left, TensorNode::Weight(WeightVector(vec![1, 1])));
    println!("with T_(a1+a2): wt {}, phi_1 {}", t.wt(2), t.phi(&b2, 1));
    Ok(())
}
