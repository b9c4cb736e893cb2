//! Braid moves and the piecewise-linear maps they induce on coordinates.

use cellular_crystals::braid::{legal_moves, phi2_ij, phi2_ji, BraidScript};
use cellular_crystals::{
    apply_move, apply_script, BraidMove, CartanDatum, CrystalElement, MoveKind,
};

fn main() -> cellular_crystals::Result<()> {
    let a3: CartanDatum = "A3".parse()?;
    let x = CrystalElement::new(a3.longest_word(), vec![2, -1, 0, 3, 1, -2])?;
    println!("x = {x}");
    for m in legal_moves(x.word()) {
        let y = apply_move(&x, m)?;
        println!("  {m:<18} {} {:?}  wt {}", y.word(), y.z(), y.wt());
    }

    let script = BraidScript::new(
        a3.longest_word(),
        vec![
            BraidMove::new(MoveKind::Two, 3),
            BraidMove::new(MoveKind::Three, 4),
        ],
    )?;
    let y = apply_script(&x, &script)?;
    println!("script -> {y}");
    println!("and back -> {}", apply_script(&y, &script.inverse())?);
    println!(
        "json: {}",
        serde_json::to_string(&script.to_json()).unwrap()
    );

    let v = [3, -1, 2, 0];
    println!(
        "phi2_ij{v:?} = {:?}, phi2_ji of that = {:?}",
        phi2_ij(v),
        phi2_ji(phi2_ij(v))
    );

    let err = apply_move(&x, BraidMove::new(MoveKind::Three, 2)).unwrap_err();
    println!("illegal: {err}");
    Ok(())
}
