use domgame_core::closed_forms::{evaluate, reduced_star, split_value, star_value};
use domgame_core::engine::{Position, Solver};
use domgame_core::{Color, FamilySpec, Kernel, NamedValue};
use proptest::prelude::*;

fn color() -> impl Strategy<Value = Color> {
    prop::sample::select(Color::ALL.to_vec())
}

fn oracle(kernel: &mut Kernel, spec: &FamilySpec) -> domgame_core::GameValue {
    let g = spec.build().unwrap();
    Solver::default().game_value(kernel, &Position::new(&g).unwrap()).unwrap()
}

proptest! {
    #[test]
    fn even_c_leaves_vanish_under_a_c_center(a in 0usize..6, b in 0usize..6, half in 1usize..3) {
        prop_assume!(a + b >= 1);
        let mut k = Kernel::new();
        let with = star_value(&mut k, Color::C, a, b, 2 * half).unwrap().value().unwrap();
        let without = star_value(&mut k, Color::C, a, b, 0).unwrap().value().unwrap();
        prop_assert_eq!(with, without);
    }

    #[test]
    fn a_center_without_a_leaves_is_a_multiple_of_up(b in 0usize..8, c in 1usize..8) {
        let mut k = Kernel::new();
        let n = b + c;
        let v = star_value(&mut k, Color::A, 0, b, c).unwrap().value().unwrap();
        let expected = if n == 1 { NamedValue::Nimber(1) } else { NamedValue::UpMultiple(n as u32 - 1, n % 2 == 1) };
        prop_assert_eq!(k.classify(v), expected);
    }

    #[test]
    fn split_graphs_match_their_reduced_star(
        clique in prop::collection::vec(color(), 1..4),
        independent in prop::collection::vec(color(), 0..5),
    ) {
        let mut k = Kernel::new();
        let (center, a, b, c) = reduced_star(&clique, &independent);
        let reduced = star_value(&mut k, center, a, b, c).unwrap().value();
        prop_assert_eq!(split_value(&mut k, &clique, &independent).unwrap().value(), reduced);
        if let Some(v) = reduced {
            let o = oracle(&mut k, &FamilySpec::CompleteSplit(clique, independent));
            prop_assert_eq!(v, o);
        }
    }

    #[test]
    fn evaluate_agrees_with_the_oracle_when_covered(
        center in color(), a in 0usize..4, b in 0usize..4, c in 0usize..4,
        s in prop::collection::vec(color(), 0..4), t in prop::collection::vec(color(), 1..4),
    ) {
        let mut k = Kernel::new();
        let spec = FamilySpec::Union(vec![
            FamilySpec::Star { center, a, b, c },
            FamilySpec::CompleteBipartite(s, t),
        ]);
        if let Some(v) = evaluate(&mut k, &spec).unwrap().value() {
            prop_assert_eq!(v, oracle(&mut k, &spec));
        }
    }
}
