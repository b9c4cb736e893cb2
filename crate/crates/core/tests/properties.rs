use cellular_crystals::braid::{apply_move, legal_moves, BraidScript};
use cellular_crystals::{
    apply_script, rightmost_script, CartanDatum, CrystalElement, EpsStarEngine, Op, Word,
};
use proptest::prelude::*;

const LABELS: [&str; 9] = ["A1", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "D5"];

fn element() -> impl Strategy<Value = CrystalElement> {
    (0..LABELS.len()).prop_flat_map(|k| {
        let d: CartanDatum = LABELS[k].parse().unwrap();
        let w = d.longest_word();
        prop::collection::vec(-6i64..=6, w.len())
            .prop_map(move |z| CrystalElement::new(w.clone(), z).unwrap())
    })
}

fn pair() -> impl Strategy<Value = (CrystalElement, CrystalElement)> {
    (0..LABELS.len()).prop_flat_map(|k| {
        let d: CartanDatum = LABELS[k].parse().unwrap();
        let w = d.longest_word();
        let l = w.len();
        (
            prop::collection::vec(-6i64..=6, l),
            prop::collection::vec(-6i64..=6, l),
        )
            .prop_map(move |(a, b)| {
                (
                    CrystalElement::new(w.clone(), a).unwrap(),
                    CrystalElement::new(w.clone(), b).unwrap(),
                )
            })
    })
}

fn letters(x: &CrystalElement) -> std::ops::RangeInclusive<usize> {
    1..=x.datum().rank()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn operators_are_inverse(x in element()) {
        for i in letters(&x) {
            prop_assert_eq!(&x.f_tilde(i).unwrap().e_tilde(i).unwrap(), &x);
            prop_assert_eq!(&x.e_tilde(i).unwrap().f_tilde(i).unwrap(), &x);
            prop_assert_eq!(x.f_tilde(i).unwrap().eps(i).unwrap(), x.eps(i).unwrap() + 1);
        }
    }

    #[test]
    fn x_view_roundtrip(x in element()) {
        let y = CrystalElement::from_x(x.word().clone(), x.x()).unwrap();
        prop_assert_eq!(y, x);
    }

    #[test]
    fn moves_preserve_crystal_data(x in element(), pick in any::<prop::sample::Index>()) {
        let moves = legal_moves(x.word());
        prop_assume!(!moves.is_empty());
        let m = moves[pick.index(moves.len())];
        let y = apply_move(&x, m).unwrap();
        prop_assert_eq!(y.wt(), x.wt());
        prop_assert!(y.word().is_reduced());
        for i in letters(&x) {
            prop_assert_eq!(y.eps(i).unwrap(), x.eps(i).unwrap());
            prop_assert_eq!(y.phi(i).unwrap(), x.phi(i).unwrap());
        }
        prop_assert_eq!(apply_move(&y, m.inverse()).unwrap(), x);
    }

    #[test]
    fn scripts_invert(x in element(), i in 1usize..=5) {
        let d = x.datum().clone();
        prop_assume!(i <= d.rank());
        let s = rightmost_script(&d, i).unwrap();
        let y = apply_script(&x, &s).unwrap();
        prop_assert_eq!(y.word().letters().last(), Some(&i));
        prop_assert_eq!(apply_script(&y, &s.inverse()).unwrap(), x);
    }

    #[test]
    fn eps_star_agrees(x in element()) {
        let e = EpsStarEngine::new(x.datum()).unwrap();
        for i in letters(&x) {
            prop_assert_eq!(e.eps_star_alg(&x, i).unwrap(), e.eps_star_formula(&x, i).unwrap());
        }
    }

    #[test]
    fn weight_is_additive((a, b) in pair()) {
        let c = a.concat(&b);
        prop_assert_eq!(c.wt(), &a.wt() + &b.wt());
    }

    #[test]
    fn ops_trace_matches_steps(x in element(), raw in prop::collection::vec((any::<bool>(), 1usize..=5), 0..8)) {
        let n = x.datum().rank();
        let ops: Vec<Op> = raw
            .into_iter()
            .map(|(f, i)| if f { Op::F((i - 1) % n + 1) } else { Op::E((i - 1) % n + 1) })
            .collect();
        let trace = x.apply_ops(&ops).unwrap();
        prop_assert_eq!(trace.len(), ops.len());
        let mut back = trace.last().cloned().unwrap_or_else(|| x.clone());
        for op in ops.iter().rev() {
            back = match op {
                Op::F(i) => back.e_tilde(*i).unwrap(),
                Op::E(i) => back.f_tilde(*i).unwrap(),
            };
        }
        prop_assert_eq!(back, x);
    }
}

#[test]
fn zero_element_has_zero_eps_star_everywhere() {
    for label in ["A1", "A2", "A6", "B2", "B5", "C2", "C5", "D4", "D6"] {
        let d: CartanDatum = label.parse().unwrap();
        let e = EpsStarEngine::new(&d).unwrap();
        let zero = CrystalElement::zero(d.longest_word());
        for i in 1..=d.rank() {
            assert_eq!(e.eps_star_alg(&zero, i).unwrap(), 0, "{label} {i}");
            assert_eq!(e.eps_star_formula(&zero, i).unwrap(), 0, "{label} {i}");
        }
        assert!(e.is_unit(&zero).unwrap().is_unit());
    }
}

#[test]
fn single_nonzero_coordinate_is_never_unit() {
    let d: CartanDatum = "C3".parse().unwrap();
    let e = EpsStarEngine::new(&d).unwrap();
    for k in 0..9 {
        for v in [-2, 1] {
            let mut z = vec![0; 9];
            z[k] = v;
            let x = CrystalElement::new(d.longest_word(), z).unwrap();
            assert!(!e.is_unit(&x).unwrap().is_unit());
        }
    }
}

#[test]
fn reducedness_survives_every_script_step() {
    for label in ["A5", "B4", "C4", "D5"] {
        let d: CartanDatum = label.parse().unwrap();
        for i in 1..=d.rank() {
            let s: BraidScript = rightmost_script(&d, i).unwrap();
            assert!(s.trace().iter().all(Word::is_reduced), "{label} {i}");
        }
    }
}
