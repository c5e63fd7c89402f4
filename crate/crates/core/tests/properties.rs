use ayo::cbr::similarity;
use ayo::endgame::{count_positions, godel_rank, godel_unrank, GodelIndex, PackedLevel, SENTINEL};
use ayo::notation::{format_position, parse_position};
use ayo::rules::{new_game, Board, GameConfig, GrandSlamRule, Position, Side};
use proptest::prelude::*;

fn side() -> impl Strategy<Value = Side> {
    prop_oneof![Just(Side::South), Just(Side::North)]
}

fn board(max_per_pit: u8) -> impl Strategy<Value = Board> {
    proptest::array::uniform12(0..=max_per_pit).prop_map(Board::new)
}

proptest! {
    #[test]
    fn play_conserves_seeds(choices in proptest::collection::vec(0usize..6, 0..200)) {
        let config = GameConfig::default();
        let mut state = new_game(&config).unwrap();
        for c in choices {
            if state.status(&config).is_terminal() {
                break;
            }
            let moves = state.legal_moves();
            let before = state.ply();
            state = state.apply_move(moves[c % moves.len()], &config).unwrap().next;
            prop_assert_eq!(state.total_seeds(), 48);
            prop_assert_eq!(state.ply(), before + 1);
        }
    }

    #[test]
    fn sowing_keeps_the_board_total(b in board(15), pit in 0usize..12) {
        prop_assume!(b.pits[pit] > 0);
        let sown = b.sow(pit, GrandSlamRule::CaptureForfeited);
        let on_board = sown.board.seeds();
        prop_assert_eq!(on_board + u32::from(sown.captured), b.seeds());
        prop_assert_eq!(sown.board.pits[pit], 0);
    }

    #[test]
    fn position_notation_round_trips(b in board(15), to_move in side(), s in 0u8..35, n in 0u8..35) {
        let pos = Position { board: b, captured: [s, n], to_move };
        prop_assert_eq!(parse_position(&format_position(&pos)).unwrap(), pos);
    }

    #[test]
    fn similarity_is_bounded_and_symmetric(
        x in proptest::collection::vec(0.0f64..20.0, 12),
        y in proptest::collection::vec(0.0f64..20.0, 12),
    ) {
        let s = similarity(&x, &y).unwrap();
        prop_assert!((-1.0..=1.0).contains(&s.value));
        prop_assert_eq!(similarity(&y, &x).unwrap(), s);
    }

    #[test]
    fn similarity_ignores_positive_affine_maps(
        x in proptest::collection::vec(0.0f64..20.0, 12),
        y in proptest::collection::vec(0.0f64..20.0, 12),
        a in 0.1f64..10.0,
        b in -50.0f64..50.0,
    ) {
        let s = similarity(&x, &y).unwrap();
        let mapped: Vec<f64> = x.iter().map(|v| a * v + b).collect();
        let t = similarity(&mapped, &y).unwrap();
        prop_assert!((s.value - t.value).abs() < 1e-9);
        prop_assert_eq!(s.degenerate, t.degenerate);
    }

    #[test]
    fn self_similarity_is_one(x in proptest::collection::vec(0.0f64..20.0, 12)) {
        let s = similarity(&x, &x).unwrap();
        prop_assert!(s.degenerate || (s.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rank_and_unrank_are_inverse(b in board(4)) {
        let index = godel_rank(&b).unwrap();
        prop_assert_eq!(index.n_seeds, b.seeds());
        prop_assert!(index.rank < count_positions(index.n_seeds).unwrap());
        prop_assert_eq!(godel_unrank(index).unwrap(), b);
    }

    #[test]
    fn unrank_and_rank_are_inverse(n in 0u32..=48, r in any::<u64>()) {
        let index = GodelIndex { n_seeds: n, rank: r % count_positions(n).unwrap() };
        prop_assert_eq!(godel_rank(&godel_unrank(index).unwrap()).unwrap(), index);
    }

    #[test]
    fn packed_set_touches_one_entry(
        entries in proptest::collection::vec(0u8..=SENTINEL, 1..300),
        pick in any::<prop::sample::Index>(),
        value in 0u8..=SENTINEL,
    ) {
        let mut level = PackedLevel::from_entries(&entries);
        prop_assert_eq!(level.bytes().len(), (entries.len() * 7).div_ceil(8));
        let i = pick.index(entries.len());
        level.set(i as u64, value);
        for (j, &e) in entries.iter().enumerate() {
            let expected = if j == i { value } else { e };
            prop_assert_eq!(level.get(j as u64), expected);
        }
    }
}
