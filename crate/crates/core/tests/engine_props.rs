use domgame_core::engine::{Player, Position, Solver, VertexSet};
use domgame_core::verify::outcome_from_winners;
use domgame_core::{Color, ColoredGraph, Kernel};
use proptest::prelude::*;

fn color() -> impl Strategy<Value = Color> {
    prop::sample::select(Color::ALL.to_vec())
}

fn graph(max: usize) -> impl Strategy<Value = ColoredGraph> {
    (1..=max).prop_flat_map(|n| {
        (prop::collection::vec(color(), n), prop::collection::vec(any::<bool>(), n * (n - 1) / 2)).prop_map(
            move |(colors, edges)| {
                let mut g = ColoredGraph::from_colors(&colors);
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                for ((u, v), on) in pairs.zip(edges) {
                    if on {
                        g.add_edge(u, v).unwrap();
                    }
                }
                g
            },
        )
    })
}

fn position(max: usize) -> impl Strategy<Value = (ColoredGraph, VertexSet)> {
    graph(max)
        .prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), prop::collection::vec(prop::bool::weighted(0.3), n))
        })
        .prop_map(|(g, marks)| {
            let dominated = marks.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect();
            (g, dominated)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn swapping_colors_negates((g, d) in position(7)) {
        let mut k = Kernel::new();
        let s = Solver::default();
        let v = s.game_value(&mut k, &Position::with_dominated(&g, d).unwrap()).unwrap();
        let swapped = g.swap_colors();
        let w = s.game_value(&mut k, &Position::with_dominated(&swapped, d).unwrap()).unwrap();
        prop_assert_eq!(w, k.neg(v));
    }

    #[test]
    fn components_sum_to_the_whole(g in graph(6), h in graph(6)) {
        let mut k = Kernel::new();
        let s = Solver::default();
        let (union, _) = ColoredGraph::disjoint_union(&[g, h]);
        let whole = s.game_value(&mut k, &Position::new(&union).unwrap()).unwrap();
        prop_assert_eq!(s.value_of_graph(&mut k, &union).unwrap(), whole);
    }

    #[test]
    fn predominated_components_sum_to_the_whole((g, d) in position(9)) {
        let mut k = Kernel::new();
        let s = Solver::default();
        let p = Position::with_dominated(&g, d).unwrap();
        let whole = s.game_value(&mut k, &p).unwrap();
        prop_assert_eq!(s.value_by_components(&mut k, &p).unwrap(), whole);
    }

    #[test]
    fn impartial_positions_are_nimbers((g, d) in position(8)) {
        let mut k = Kernel::new();
        let g = g.recolored(Color::C);
        let v = Solver::default().game_value(&mut k, &Position::with_dominated(&g, d).unwrap()).unwrap();
        prop_assert!(k.as_nimber(v).is_some(), "{}", k.display(v));
    }

    #[test]
    fn winners_agree_with_outcome((g, d) in position(8)) {
        let mut k = Kernel::new();
        let s = Solver::default();
        let p = Position::with_dominated(&g, d).unwrap();
        let v = s.game_value(&mut k, &p).unwrap();
        let implied = outcome_from_winners(s.winner(&p, Player::Alice).unwrap(), s.winner(&p, Player::Bob).unwrap());
        prop_assert_eq!(implied, k.outcome(v));
    }

    #[test]
    fn every_move_grows_the_dominated_set(g in graph(10), picks in prop::collection::vec(any::<prop::sample::Index>(), 10)) {
        let mut p = Position::new(&g).unwrap();
        let mut who = Player::Alice;
        let mut moves = 0;
        for pick in picks {
            let mut options = p.playable_vertices(who);
            if options.is_empty() {
                options = p.playable_vertices(who.opponent());
                who = who.opponent();
            }
            if options.is_empty() {
                break;
            }
            let next = p.apply_move(who, *pick.get(&options)).unwrap();
            prop_assert!(next.dominated().len() > p.dominated().len());
            prop_assert!(p.dominated().is_subset(next.dominated()));
            p = next;
            who = who.opponent();
            moves += 1;
        }
        prop_assert!(moves <= g.vertex_count());
        let none_left = p.playable_vertices(Player::Alice).is_empty() && p.playable_vertices(Player::Bob).is_empty();
        prop_assert_eq!(p.is_terminal(), none_left);
    }
}
