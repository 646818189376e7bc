//! Constant-time formulas for paths, cycles, subdivided stars and bistars,
//! each cross-checked against the general engine on concrete graphs.

mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use octal_games::closed_form::{
    bistar_grundy, classify_sim1, classify_sim2, cycle_grundy, path_grundy, reduce_star,
    spec_grundy, star_grundy, star_table, star_value, table1_lookup, table2_lookup, ClassSim1,
    ClassSim2, ReducedStar,
};
use octal_games::dsl::parse_line;
use octal_games::engine::{grundy, EvalCache};
use octal_games::families::{BistarSpec, StarSpec};
use octal_games::graph::{build_cycle, build_path};
use octal_games::Error;

use common::code;

fn engine_value(g: &octal_games::graph::Graph) -> u32 {
    let c = code("0.33");
    grundy(g, &c, &EvalCache::new(c.clone())).unwrap()
}

#[test]
fn path_and_cycle_formulas() {
    for n in 0..=20 {
        assert_eq!(path_grundy(n), (n % 3) as u32);
        assert_eq!(path_grundy(n), engine_value(&build_path(n)), "path {n}");
    }
    for n in 3..=15 {
        assert_eq!(cycle_grundy(n).unwrap(), (n % 3) as u32);
        assert_eq!(
            cycle_grundy(n).unwrap(),
            engine_value(&build_cycle(n).unwrap()),
            "cycle {n}"
        );
    }
    assert!(matches!(cycle_grundy(2), Err(Error::InvalidArgument(_))));
}

#[test]
fn star_reduction_normal_forms() {
    use ReducedStar::{EmptyGraph, ProperStar, SmallPath};
    assert_eq!(reduce_star(&StarSpec::empty()), EmptyGraph);
    assert_eq!(reduce_star(&StarSpec::from_arms([])), SmallPath(1));
    assert_eq!(reduce_star(&StarSpec::from_arms([3, 3])), SmallPath(1));
    assert_eq!(reduce_star(&StarSpec::from_arms([4])), SmallPath(2));
    assert_eq!(reduce_star(&StarSpec::from_arms([2])), SmallPath(3));
    assert_eq!(reduce_star(&StarSpec::from_arms([1, 1])), SmallPath(3));
    assert_eq!(reduce_star(&StarSpec::from_arms([1, 2])), SmallPath(4));
    assert_eq!(reduce_star(&StarSpec::from_arms([2, 2])), SmallPath(5));
    assert_eq!(
        reduce_star(&StarSpec::from_arms([1, 1, 1])),
        ProperStar { ones: 3, twos: 0 }
    );
    assert_eq!(
        reduce_star(&StarSpec::from_arms([4, 5, 6, 7])),
        ProperStar { ones: 2, twos: 1 },
        "arms reduce mod 3 and zero residues vanish"
    );
    assert_eq!(
        reduce_star(&StarSpec::from_arms([3, 6, 9])),
        SmallPath(1),
        "all arms vanishing leaves the bare center"
    );
}

#[test]
fn star_table_first_rows_are_pinned() {
    let table = star_table(6);
    assert_eq!(table[0], vec![1]);
    assert_eq!(table[1], vec![2, 0]);
    assert_eq!(table[2], vec![0, 1, 2]);
    assert_eq!(table[3], vec![1, 2, 0, 1]);
    assert_eq!(table[4], vec![0, 3, 1, 2, 0]);
    assert_eq!(table[5], vec![1, 2, 0, 3, 1, 2]);
    assert_eq!(star_value(3, 1), 2);
    assert_eq!(star_value(4, 1), 3);
    assert_eq!(star_value(4, 4), 0);
    // Beyond the precomputed band the recursion still answers.
    assert_eq!(star_value(64, 0), star_table(65)[64][0]);
}

#[test]
#[should_panic(expected = "star table")]
fn star_value_rejects_impossible_coordinates() {
    star_value(3, 4);
}

#[test]
fn star_values_match_engine_on_named_examples() {
    for (arms, want) in [
        (vec![1usize, 1, 2, 2], 1u32),
        (vec![1, 2, 2, 2], 2),
        (vec![1, 1, 2, 2, 2], 3),
        (vec![1, 1, 3, 4], 1),
        (vec![2, 2, 2], 1),
        (vec![1, 1, 1, 1], 0),
    ] {
        let spec = StarSpec::from_arms(arms.clone());
        assert_eq!(star_grundy(&spec), want, "closed form for {spec}");
        assert_eq!(engine_value(&spec.realize()), want, "engine for {spec}");
    }
}

#[test]
fn side_classifications_on_representatives() {
    use ClassSim1::*;
    let reps1: [(&[usize], ClassSim1); 9] = [
        (&[1, 1, 1, 1], C0),
        (&[1, 1, 1], C1),
        (&[2, 2, 2], C1Star),
        (&[2, 2, 2, 2, 2], C2),
        (&[2, 2], C2Star),
        (&[1, 1, 2], C2Box),
        (&[1, 2, 2, 2, 2, 2], C3),
        (&[1, 1, 1, 2], C3Box),
        (&[], C1Star),
    ];
    for (arms, want) in reps1 {
        let spec = StarSpec::from_arms(arms.iter().copied());
        assert_eq!(classify_sim1(&spec), want, "side {spec}");
    }
    assert_eq!(classify_sim1(&StarSpec::empty()), C0);

    use ClassSim2::*;
    let reps2: [(&[usize], ClassSim2); 11] = [
        (&[2, 2, 2, 2], D0),
        (&[1, 2, 2], D0Star),
        (&[1, 2, 2, 2, 2], D1),
        (&[2, 2, 2], D1Star),
        (&[1, 1, 1], D1Box),
        (&[2, 2, 2, 2, 2], D2),
        (&[2, 2], D2Star),
        (&[1, 1, 2], D2Box),
        (&[1, 2, 2, 2, 2, 2], D3),
        (&[1, 1, 1, 2], D3Box),
        (&[], D1Star),
    ];
    for (arms, want) in reps2 {
        let spec = StarSpec::from_arms(arms.iter().copied());
        assert_eq!(classify_sim2(&spec), want, "side {spec}");
    }
    assert_eq!(classify_sim2(&StarSpec::empty()), D0Star);

    // Stars with four length-2 arms are regular again: plain value classes,
    // not starred/boxed ones.
    assert_eq!(classify_sim2(&StarSpec::from_arms([2, 2, 2, 2])), D0);
    assert_eq!(classify_sim2(&StarSpec::from_arms([1, 1, 2, 2, 2, 2])), D0);
    assert_eq!(classify_sim1(&StarSpec::from_arms([2, 2, 2, 2])), ClassSim1::C0);
}

#[test]
fn join_tables_combine_sides_correctly() {
    use ClassSim1::*;
    // Regular cells add the sides independently.
    assert_eq!(table1_lookup(C0, C0, 0, 0), 0);
    assert_eq!(table1_lookup(C2Box, C3Box, 2, 3), 1);
    assert_eq!(table1_lookup(C1, C3, 1, 3), 2);
    // Irregular cells pin a constant.
    assert_eq!(table1_lookup(C1Star, C1Star, 1, 1), 2);
    assert_eq!(table1_lookup(C1Star, C2Star, 1, 2), 0);
    assert_eq!(table1_lookup(C2Star, C2Star, 2, 2), 1);
    assert_eq!(table1_lookup(C2Star, C2Box, 2, 2), 1);
    assert_eq!(table1_lookup(C2Star, C3Box, 2, 3), 0);

    use ClassSim2::*;
    assert_eq!(table2_lookup(D0, D0, 0, 0), 0, "plain sides add");
    assert_eq!(table2_lookup(D0, D0Star, 0, 0), 1, "join path adds one");
    assert_eq!(table2_lookup(D1Star, D1Star, 1, 1), 0);
    assert_eq!(table2_lookup(D0, D1Star, 0, 1), 2);
    assert_eq!(table2_lookup(D0, D2Star, 0, 2), 0);
    assert_eq!(table2_lookup(D1Star, D2Star, 1, 2), 1);
    assert_eq!(table2_lookup(D2Star, D2Star, 2, 2), 2);
    assert_eq!(table2_lookup(D2Star, D2Box, 2, 2), 2);
    assert_eq!(table2_lookup(D2Box, D2Box, 2, 2), 0);
    assert_eq!(table2_lookup(D3Box, D3Box, 3, 3), 0);
}

#[test]
fn join_tables_are_symmetric() {
    use ClassSim1::*;
    let all1 = [C0, C1, C1Star, C2, C2Star, C2Box, C3, C3Box];
    for &a in &all1 {
        for &b in &all1 {
            for ga in 0..=3 {
                for gb in 0..=3 {
                    assert_eq!(
                        table1_lookup(a, b, ga, gb),
                        table1_lookup(b, a, gb, ga),
                        "({a}, {b}, {ga}, {gb})"
                    );
                }
            }
        }
    }
    use ClassSim2::*;
    let all2 = [D0, D0Star, D1, D1Star, D1Box, D2, D2Star, D2Box, D3, D3Box];
    for &a in &all2 {
        for &b in &all2 {
            for ga in 0..=3 {
                for gb in 0..=3 {
                    assert_eq!(
                        table2_lookup(a, b, ga, gb),
                        table2_lookup(b, a, gb, ga),
                        "({a}, {b}, {ga}, {gb})"
                    );
                }
            }
        }
    }
}

#[test]
fn bistar_values_on_named_examples() {
    for (text, want) in [
        ("bistar:1,1/2/1,2", 2u32),
        ("bistar:empty/4/1,1,1", 1),
        ("bistar:/1/", 2),
        ("bistar:/2/", 0),
        ("bistar:empty/0/empty", 0),
        ("bistar:empty/5/empty", 1),
        ("bistar:1,1,2/1/1", 1),
        ("bistar:1,1,2/2/1,1,2", 0),
    ] {
        let spec = match parse_line(text).unwrap() {
            octal_games::dsl::GraphSpec::Bistar(b) => b,
            other => panic!("expected a bistar, got {other:?}"),
        };
        assert_eq!(bistar_grundy(&spec), want, "closed form for {text}");
        assert_eq!(engine_value(&spec.realize()), want, "engine for {text}");
    }
}

#[test]
fn bistar_degenerate_folds_match_engine() {
    // No sides: just the middle path.
    for m in 0..=7 {
        let spec = BistarSpec::new(StarSpec::empty(), m, StarSpec::empty());
        assert_eq!(bistar_grundy(&spec), path_grundy(m.saturating_sub(1)));
        assert_eq!(engine_value(&spec.realize()), bistar_grundy(&spec), "middle {m}");
    }
    // One side: the middle path acts as an extra arm.
    for m in 0..=7 {
        let side = StarSpec::from_arms([1, 2]);
        let spec = BistarSpec::new(side.clone(), m, StarSpec::empty());
        assert_eq!(engine_value(&spec.realize()), bistar_grundy(&spec), "middle {m}");
        let flipped = BistarSpec::new(StarSpec::empty(), m, side);
        assert_eq!(bistar_grundy(&flipped), bistar_grundy(&spec));
    }
}

#[test]
fn spec_level_closed_forms() {
    assert_eq!(spec_grundy(&parse_line("path:8").unwrap()), Some(2));
    assert_eq!(spec_grundy(&parse_line("cycle:9").unwrap()), Some(0));
    assert_eq!(spec_grundy(&parse_line("cycle:2").unwrap()), None);
    assert_eq!(spec_grundy(&parse_line("star:1,1,3,4").unwrap()), Some(1));
    assert_eq!(spec_grundy(&parse_line("bistar:1,1/2/1,2").unwrap()), Some(2));
    assert_eq!(spec_grundy(&parse_line("cat:5:2").unwrap()), None);
    assert_eq!(spec_grundy(&parse_line("edges:2;0-1").unwrap()), None);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_star_closed_form_matches_engine(seed in 0u64..10_000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let arm_count = rng.gen_range(0..=5);
        let arms: Vec<usize> = (0..arm_count).map(|_| rng.gen_range(1..=9)).collect();
        let spec = StarSpec::from_arms(arms);
        prop_assert_eq!(star_grundy(&spec), engine_value(&spec.realize()), "{}", spec);
    }

    #[test]
    fn random_bistar_closed_form_matches_engine(seed in 0u64..10_000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let side = |rng: &mut ChaCha8Rng| {
            if rng.gen_ratio(1, 8) {
                StarSpec::empty()
            } else {
                let count = rng.gen_range(0..=2);
                StarSpec::from_arms((0..count).map(|_| rng.gen_range(1..=4)).collect::<Vec<_>>())
            }
        };
        let spec = BistarSpec::new(side(&mut rng), rng.gen_range(0..=7), side(&mut rng));
        prop_assert_eq!(bistar_grundy(&spec), engine_value(&spec.realize()), "{}", spec);
    }
}
