//! Acceptance suite: one test per criterion, each printing a PASS line.
//! All comparisons are exact — symbolic digit lists and reduced fractions.
//! Expected rows are frozen from the reference tables; everything the
//! engine produces here is recomputed from first principles.

use std::time::{Duration, Instant};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lexilog_core::formula::parse;
use lexilog_core::semantics::{
    enumerate_classical_assignments, equivalent, evaluate, rank_models, Assignment, Equivalence,
};
use lexilog_core::synthesis::{synthesize, verify_synthesis, LevelTable, SynthesisVerdict};
use lexilog_core::tables;
use lexilog_core::valuation::{value_of, Rational};
use lexilog_core::value::{enumerate_values, Digit, TruthValue};

fn tv(text: &str) -> TruthValue {
    text.parse().expect("expected-value literal")
}

fn finish(criterion: &str, start: Instant, bound: Duration) {
    let elapsed = start.elapsed();
    assert!(
        elapsed < bound,
        "criterion {criterion} took {elapsed:?}, bound {bound:?}"
    );
    println!("criterion {criterion}: PASS ({elapsed:?})");
}

#[test]
fn criterion_01_association_table_reproduction() {
    let start = Instant::now();
    let expected: [(&str, &str); 8] = [
        ("[F]", "[F]"),
        ("[0,F,T]", "[0,F,0,F,T]"),
        ("[0,0,F,T,F]", "[0,F,0,T,F]"),
        ("[0,0,F,T,T]", "[0,F,T]"),
        ("[0,0,T,F,F]", "[0,T,F]"),
        ("[0,0,T,F,T]", "[0,T,0,F,T]"),
        ("[0,T,F]", "[0,T,0,T,F]"),
        ("[T]", "[T]"),
    ];
    let grouped_left = parse("(x >> y) >> z").unwrap();
    let grouped_right = parse("x >> (y >> z)").unwrap();
    let atoms: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let assignments = enumerate_classical_assignments(&atoms).unwrap();
    assert_eq!(assignments.len(), 8);
    for (row, assignment) in assignments.iter().enumerate() {
        assert_eq!(
            evaluate(&grouped_left, assignment).unwrap(),
            tv(expected[row].0),
            "row {row}, left grouping"
        );
        assert_eq!(
            evaluate(&grouped_right, assignment).unwrap(),
            tv(expected[row].1),
            "row {row}, right grouping"
        );
    }
    // the direct value-level route agrees
    for (row, generated) in tables::association_rows().iter().enumerate() {
        assert_eq!(generated.grouped_left, tv(expected[row].0));
        assert_eq!(generated.grouped_right, tv(expected[row].1));
    }
    finish("1 (association table)", start, Duration::from_secs(1));
}

#[test]
fn criterion_02_ordered_value_table_reproduction() {
    let start = Instant::now();
    let expected: [(&str, &str); 16] = [
        ("(F >> F) >> F", "[F]"),
        ("F >> (F >> F)", "[F]"),
        ("F >> (F >> T)", "[0,F,0,F,T]"),
        ("F >> (T >> F)", "[0,F,0,T,F]"),
        ("F >> (T >> T)", "[0,F,T]"),
        ("(F >> F) >> T", "[0,F,T]"),
        ("(F >> T) >> F", "[0,0,F,T,F]"),
        ("(F >> T) >> T", "[0,0,F,T,T]"),
        ("(T >> F) >> F", "[0,0,T,F,F]"),
        ("(T >> F) >> T", "[0,0,T,F,T]"),
        ("(T >> T) >> F", "[0,T,F]"),
        ("T >> (F >> F)", "[0,T,F]"),
        ("T >> (F >> T)", "[0,T,0,F,T]"),
        ("T >> (T >> F)", "[0,T,0,T,F]"),
        ("T >> (T >> T)", "[T]"),
        ("(T >> T) >> T", "[T]"),
    ];
    let rows = tables::ordered_expressions();
    assert_eq!(rows.len(), 16);
    for (row, (rendering, value)) in expected.iter().enumerate() {
        assert_eq!(rows[row].rendering, *rendering, "row {row}");
        assert_eq!(rows[row].value, tv(value), "row {row}");
    }
    for pair in rows.windows(2) {
        assert!(pair[0].value <= pair[1].value, "sorted by the value order");
    }
    assert!(rows[..8].iter().all(|r| r.value.sign() == Digit::F));
    assert!(rows[8..].iter().all(|r| r.value.sign() == Digit::T));
    finish("2 (ordered value table)", start, Duration::from_secs(1));
}

#[test]
fn criterion_03_rational_value_table_reproduction() {
    let start = Instant::now();
    let expected: [(&str, i64, i64); 12] = [
        ("[F]", -1, 1),
        ("[0,F,0,F,T]", -29, 81),
        ("[0,F,0,T,F]", -25, 81),
        ("[0,F,T]", -2, 9),
        ("[0,0,F,T,F]", -7, 81),
        ("[0,0,F,T,T]", -5, 81),
        ("[0,0,T,F,F]", 5, 81),
        ("[0,0,T,F,T]", 7, 81),
        ("[0,T,F]", 2, 9),
        ("[0,T,0,F,T]", 25, 81),
        ("[0,T,0,T,F]", 29, 81),
        ("[T]", 1, 1),
    ];
    let rows = tables::short_value_rows();
    assert_eq!(rows.len(), 12);
    for (row, (value, numer, denom)) in expected.iter().enumerate() {
        assert_eq!(rows[row].0, tv(value), "row {row}");
        assert_eq!(rows[row].1, Rational::new(*numer, *denom), "row {row}");
        assert_eq!(value_of(&tv(value)), Rational::new(*numer, *denom));
    }
    finish("3 (rational value table)", start, Duration::from_secs(1));
}

#[test]
fn criterion_04_combination_respects_pairwise_order() {
    let start = Instant::now();

    // exhaustive over the depth-2 fragment
    let small = enumerate_values(2);
    assert_eq!(small.len(), 16);
    let combined: Vec<Vec<TruthValue>> = small
        .iter()
        .map(|u| small.iter().map(|v| u.lex_combine(v)).collect())
        .collect();
    let mut checked = 0u64;
    for i1 in 0..small.len() {
        for i2 in 0..small.len() {
            for j1 in 0..small.len() {
                for j2 in 0..small.len() {
                    let pairwise_less =
                        small[i1] < small[j1] || (small[i1] == small[j1] && small[i2] < small[j2]);
                    let combined_less = combined[i1][i2] < combined[j1][j2];
                    assert_eq!(
                        pairwise_less, combined_less,
                        "quadruple ({}, {}, {}, {})",
                        small[i1], small[i2], small[j1], small[j2]
                    );
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, 65_536);

    // sampled over the depth-3 fragment
    let large = enumerate_values(3);
    assert_eq!(large.len(), 256);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100_000 {
        let [i1, i2, j1, j2] = std::array::from_fn(|_| rng.random_range(0..large.len()));
        let pairwise_less =
            large[i1] < large[j1] || (large[i1] == large[j1] && large[i2] < large[j2]);
        let combined_less = large[i1].lex_combine(&large[i2]) < large[j1].lex_combine(&large[j2]);
        assert_eq!(
            pairwise_less, combined_less,
            "quadruple ({}, {}, {}, {})",
            large[i1], large[i2], large[j1], large[j2]
        );
    }
    finish("4 (pairwise order embedding)", start, Duration::from_secs(30));
}

#[test]
fn criterion_05_valuation_is_strictly_monotone() {
    let start = Instant::now();
    let values = enumerate_values(3);
    let rationals: Vec<Rational> = values.iter().map(value_of).collect();
    for i in 0..values.len() {
        for j in 0..values.len() {
            assert_eq!(
                values[i] < values[j],
                rationals[i] < rationals[j],
                "pair ({}, {})",
                values[i],
                values[j]
            );
        }
    }
    finish("5 (valuation monotonicity)", start, Duration::from_secs(60));
}

#[test]
fn criterion_06_structural_lemmas() {
    let start = Instant::now();
    let values = enumerate_values(3);
    for v in &values {
        assert_eq!(v.digit_count() % 2, 1, "odd length of {v}");
        let negated = v.negate();
        assert!(
            TruthValue::from_digits(negated.digits().to_vec()).is_ok(),
            "negation of {v} stays in the domain"
        );
        assert_eq!(negated.negate(), *v, "negation involutes on {v}");
    }
    for u in &values {
        for v in &values {
            if u != v {
                assert!(
                    !v.digits().starts_with(u.digits()),
                    "{u} is a proper prefix of {v}"
                );
            }
            assert_eq!(
                u < v,
                v.negate() < u.negate(),
                "negation reverses ({u}, {v})"
            );
        }
    }
    finish("6 (structural lemmas)", start, Duration::from_secs(60));
}

#[test]
fn criterion_07_equivalence_laws_and_association_counterexample() {
    let start = Instant::now();
    let laws = [
        ("(a | b) >> c", "(a >> c) | (b >> c)"),
        ("a >> (b | c)", "(a >> b) | (a >> c)"),
        ("(a & b) >> c", "(a >> c) & (b >> c)"),
        ("a >> (b & c)", "(a >> b) & (a >> c)"),
        ("!(a >> b)", "!a >> !b"),
        ("!(!a)", "a"),
    ];
    for (lhs, rhs) in laws {
        assert_eq!(
            equivalent(&parse(lhs).unwrap(), &parse(rhs).unwrap(), 2).unwrap(),
            Equivalence::EquivalentUpToDepth(2),
            "law {lhs} = {rhs}"
        );
    }
    let verdict = equivalent(
        &parse("x >> (y >> z)").unwrap(),
        &parse("(x >> y) >> z").unwrap(),
        0,
    )
    .unwrap();
    let expected = Assignment::new()
        .with("x", TruthValue::top())
        .with("y", TruthValue::bottom())
        .with("z", TruthValue::bottom());
    assert_eq!(
        verdict,
        Equivalence::Counterexample {
            assignment: expected,
            lhs: tv("[0,T,F]"),
            rhs: tv("[0,0,T,F,F]"),
        }
    );
    finish("7 (equivalence laws)", start, Duration::from_secs(60));
}

#[test]
fn criterion_08_derived_operator_tables_and_identities() {
    let start = Instant::now();

    let and_if_expected = ["[F]", "[F]", "[0,T,F]", "[T]"];
    let or_least_expected = ["[F]", "[0,T,F]", "[T]", "[T]"];
    let atoms: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
    let assignments = enumerate_classical_assignments(&atoms).unwrap();
    let and_if = parse("x &> y").unwrap();
    let or_least = parse("x |> y").unwrap();
    for (row, assignment) in assignments.iter().enumerate() {
        assert_eq!(evaluate(&and_if, assignment).unwrap(), tv(and_if_expected[row]));
        assert_eq!(evaluate(&or_least, assignment).unwrap(), tv(or_least_expected[row]));
    }
    for (row, generated) in tables::if_possible_rows().iter().enumerate() {
        assert_eq!(generated.value, tv(and_if_expected[row]));
    }
    for (row, generated) in tables::or_at_least_rows().iter().enumerate() {
        assert_eq!(generated.value, tv(or_least_expected[row]));
    }

    // identities, pointwise over all depth-3 value pairs for x and y
    let identities = [
        ("x &> (x & y)", "x &> y"),
        ("x |> (x | y)", "x |> y"),
        ("x |> y", "(x | y) &> x"),
        ("x &> y", "(x & y) |> x"),
    ];
    for (lhs, rhs) in identities {
        assert_eq!(
            equivalent(&parse(lhs).unwrap(), &parse(rhs).unwrap(), 3).unwrap(),
            Equivalence::EquivalentUpToDepth(3),
            "identity {lhs} = {rhs}"
        );
    }
    finish("8 (derived operators)", start, Duration::from_secs(60));
}

#[test]
fn criterion_09_synthesis_soundness() {
    let start = Instant::now();

    // the three-input hierarchy with a length-3 chain
    let table = tables::more_level_table();
    let scheme = lexilog_core::PatternScheme::staircase(table.level_count(), Some(3)).unwrap();
    let formula = synthesize(&table, Some(&scheme)).unwrap();
    assert_eq!(verify_synthesis(&table, &formula), SynthesisVerdict::Ok);

    let expected_rows = [
        "[F]",
        "[0,T,F]",
        "[0,T,F]",
        "[0,T,0,T,F]",
        "[0,T,F]",
        "[0,T,0,T,F]",
        "[0,T,0,T,F]",
        "[T]",
    ];
    for (row, table_row) in table.rows().iter().enumerate() {
        let mut assignment = Assignment::new();
        for (i, bit) in table_row.inputs.iter().enumerate() {
            assignment.bind(format!("x{}", i + 1), TruthValue::from_bool(*bit));
        }
        assert_eq!(
            evaluate(&formula, &assignment).unwrap(),
            tv(expected_rows[row]),
            "row {row}"
        );
    }
    for (row, generated) in tables::more_rows().iter().enumerate() {
        assert_eq!(generated.value, tv(expected_rows[row]), "row {row}");
    }

    let simplified = parse("(x1|x2|x3) >> ((x1&x2)|(x2&x3)|(x1&x3)) >> (x1&x2&x3)").unwrap();
    assert_eq!(
        equivalent(&formula, &simplified, 0).unwrap(),
        Equivalence::EquivalentUpToDepth(0)
    );
    for (row, table_row) in table.rows().iter().enumerate() {
        let mut assignment = Assignment::new();
        for (i, bit) in table_row.inputs.iter().enumerate() {
            assignment.bind(format!("x{}", i + 1), TruthValue::from_bool(*bit));
        }
        assert_eq!(
            evaluate(&simplified, &assignment).unwrap(),
            tv(expected_rows[row]),
            "simplified form, row {row}"
        );
    }

    // randomized soundness: 200 tables with up to four inputs
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for case in 0..200 {
        let arity = rng.random_range(1..=4usize);
        let row_count = 1usize << arity;
        let raw: Vec<usize> = (0..row_count).map(|_| rng.random_range(0..row_count)).collect();
        let mut distinct = raw.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let rows = (0..row_count).map(|mask| {
            let inputs: Vec<bool> = (0..arity).map(|i| (mask >> (arity - 1 - i)) & 1 == 1).collect();
            let level = distinct.binary_search(&raw[mask]).unwrap();
            (inputs, level)
        });
        let random_table = LevelTable::new(arity, rows).unwrap();
        let synthesized = synthesize(&random_table, None).unwrap();
        assert_eq!(
            verify_synthesis(&random_table, &synthesized),
            SynthesisVerdict::Ok,
            "case {case} with arity {arity}"
        );
    }
    finish("9 (synthesis soundness)", start, Duration::from_secs(30));
}

#[test]
fn criterion_10_worked_examples() {
    let start = Instant::now();

    let car = parse("electric >> (fast >> blue)").unwrap();
    let classical = |e: bool, f: bool, b: bool| {
        Assignment::new()
            .with("electric", TruthValue::from_bool(e))
            .with("fast", TruthValue::from_bool(f))
            .with("blue", TruthValue::from_bool(b))
    };
    let candidates = vec![
        classical(true, true, true),
        classical(true, true, false),
        classical(false, true, true),
    ];
    assert_eq!(evaluate(&car, &candidates[0]).unwrap(), tv("[T]"));
    assert_eq!(evaluate(&car, &candidates[1]).unwrap(), tv("[0,T,0,T,F]"));
    assert_eq!(evaluate(&car, &candidates[2]).unwrap(), tv("[0,F,T]"));
    let ranked = rank_models(&car, &candidates).unwrap();
    assert_eq!(
        ranked.iter().map(|m| (m.index, m.rank)).collect::<Vec<_>>(),
        vec![(0, 1), (1, 2), (2, 3)]
    );

    let fuel = parse("(electric ^ diesel) >> (fast & !expensive)").unwrap();
    let interpretation = |e: bool, d: bool| {
        Assignment::new()
            .with("electric", TruthValue::from_bool(e))
            .with("diesel", TruthValue::from_bool(d))
            .with("fast", TruthValue::top())
            .with("expensive", TruthValue::bottom())
    };
    let ranked = rank_models(&fuel, &[interpretation(true, false), interpretation(false, true)])
        .unwrap();
    assert_eq!(ranked.len(), 2);
    for model in &ranked {
        assert_eq!(model.rank, 1);
        assert_eq!(model.value, tv("[T]"));
    }
    finish("10 (worked examples)", start, Duration::from_secs(10));
}
