//! Acceptance suite: every release-gating claim, one test per criterion,
//! printing a pass line with its runtime. Run with `cargo test --test
//! acceptance -- --nocapture` to see the lines.

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use edge_ideals::graph::nonisomorphic_graphs;
use edge_ideals::ideal::{dual_component, squarefree_veronese};
use edge_ideals::resolution::{betti_table, has_linear_quotients};
use edge_ideals::scm::{
    chordal_quotient_ordering, h_vector, is_cm_graph, is_scm, is_scm_duval,
    negative_h_obstruction,
};
use edge_ideals::{FieldSpec, Graph, Monomial, MonomialIdeal, SimplicialComplex};

fn q() -> FieldSpec {
    FieldSpec::rationals()
}

fn f2() -> FieldSpec {
    FieldSpec::prime(2).unwrap()
}

fn mon(ix: &[usize]) -> Monomial {
    Monomial::from_indices(ix).unwrap()
}

fn pass(criterion: &str, started: Instant) {
    println!(
        "ACCEPTANCE {criterion}: PASS ({:.2}s)",
        started.elapsed().as_secs_f64()
    );
}

#[test]
fn criterion_1_cycle_classification() {
    let started = Instant::now();
    for field in [q(), f2()] {
        for n in 3..=10 {
            let g = Graph::cycle(n).unwrap();
            let expected = n == 3 || n == 5;
            assert_eq!(is_scm(&g, field), expected, "is_scm(C_{n}) over {field}");
            assert_eq!(
                is_cm_graph(&g, field),
                expected,
                "is_cm(C_{n}) over {field}"
            );
        }
    }
    let elapsed = started.elapsed().as_secs_f64();
    assert!(elapsed < 30.0, "cycle classification took {elapsed:.1}s, budget 30s");
    pass("1 cycle-classification", started);
}

#[test]
fn criterion_2_heptagon_dual_resolution() {
    let started = Instant::now();
    let dual = MonomialIdeal::edge_ideal(&Graph::cycle(7).unwrap())
        .alexander_dual()
        .unwrap();
    let expected_gens: Vec<Monomial> = [
        &[1, 2, 4, 6][..],
        &[1, 3, 4, 6],
        &[1, 3, 5, 6],
        &[1, 3, 5, 7],
        &[2, 3, 5, 7],
        &[2, 4, 5, 7],
        &[2, 4, 6, 7],
    ]
    .iter()
    .map(|ix| mon(ix))
    .collect();
    assert_eq!(dual.gens(), expected_gens.as_slice());

    let table = betti_table(&dual, q()).unwrap();
    let got: Vec<((usize, usize), usize)> = table.entries().map(|(&k, &v)| (k, v)).collect();
    assert_eq!(got, vec![((0, 4), 7), ((1, 5), 7), ((2, 7), 1)]);

    let elapsed = started.elapsed().as_secs_f64();
    assert!(elapsed < 5.0, "heptagon dual took {elapsed:.1}s, budget 5s");
    pass("2 heptagon-dual-resolution", started);
}

#[test]
fn criterion_3_modified_cycle_examples() {
    let started = Instant::now();

    let pendant_square = Graph::new(5, &[(1, 2), (2, 3), (3, 4), (1, 4), (4, 5)]).unwrap();
    let dual = MonomialIdeal::edge_ideal(&pendant_square)
        .alexander_dual()
        .unwrap();
    assert_eq!(
        dual.gens(),
        &[mon(&[2, 4]), mon(&[1, 3, 4]), mon(&[1, 3, 5])]
    );
    assert!(is_scm(&pendant_square, q()));

    let eared_hexagon = Graph::new(
        7,
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (1, 7), (6, 7)],
    )
    .unwrap();
    let dual = MonomialIdeal::edge_ideal(&eared_hexagon)
        .alexander_dual()
        .unwrap();
    let expected: Vec<Monomial> = [
        &[1, 2, 4, 6][..],
        &[1, 3, 4, 6],
        &[1, 3, 5, 6],
        &[1, 3, 5, 7],
        &[2, 4, 6, 7],
        &[1, 2, 4, 5, 7],
        &[2, 3, 5, 6, 7],
    ]
    .iter()
    .map(|ix| mon(ix))
    .collect();
    assert_eq!(dual.gens(), expected.as_slice());
    assert!(is_scm(&eared_hexagon, q()));

    let elapsed = started.elapsed().as_secs_f64();
    assert!(elapsed < 5.0, "modified cycles took {elapsed:.1}s, budget 5s");
    pass("3 modified-cycle-examples", started);
}

#[test]
fn criterion_4_chordal_graphs_are_scm() {
    let started = Instant::now();
    let mut chordal_count = 0;
    for n in 1..=7 {
        for g in nonisomorphic_graphs(n) {
            if !g.is_chordal() {
                continue;
            }
            chordal_count += 1;
            for field in [q(), f2()] {
                assert!(
                    is_scm(&g, field),
                    "chordal graph not sequentially Cohen-Macaulay over {field}: {g:?}"
                );
            }
        }
    }
    assert!(chordal_count > 500, "expected hundreds of chordal graphs, saw {chordal_count}");

    // the constructive ordering passes the linear-quotients check everywhere
    for n in 2..=6 {
        for g in nonisomorphic_graphs(n) {
            if g.is_edgeless() || !g.is_chordal() {
                continue;
            }
            for d in 0..=n {
                let order = chordal_quotient_ordering(&g, d).unwrap();
                let component = dual_component(&g, d);
                let mut sorted = order.clone();
                sorted.sort();
                assert_eq!(
                    sorted,
                    component.gens(),
                    "ordering on {g:?} at degree {d} does not generate the component"
                );
                if !order.is_empty() {
                    assert!(
                        has_linear_quotients(&component, &order).unwrap(),
                        "ordering on {g:?} at degree {d} lacks linear quotients"
                    );
                }
            }
        }
    }
    pass("4 chordal-graphs-scm", started);
}

#[test]
fn criterion_5_route_cross_validation() {
    let started = Instant::now();
    for field in [q(), f2()] {
        for n in 2..=6 {
            for g in nonisomorphic_graphs(n) {
                if g.is_edgeless() {
                    continue;
                }
                let dual_route = is_scm(&g, field);
                let skeleton_route = is_scm_duval(&g, field).unwrap();
                assert_eq!(
                    dual_route, skeleton_route,
                    "routes disagree over {field} on {g:?}"
                );
            }
        }
    }
    pass("5 route-cross-validation", started);
}

#[test]
fn criterion_6_cm_decomposition() {
    let started = Instant::now();
    for n in 2..=6 {
        for g in nonisomorphic_graphs(n) {
            if g.is_edgeless() {
                continue;
            }
            let cm = is_cm_graph(&g, q());
            let scm = is_scm(&g, q());
            let unmixed = MonomialIdeal::edge_ideal(&g).is_unmixed().unwrap();
            assert_eq!(cm, scm && unmixed, "decomposition fails on {g:?}");
        }
    }
    pass("6 cm-decomposition", started);
}

#[test]
fn criterion_7_obstruction_soundness() {
    let started = Instant::now();

    let square = Graph::cycle(4).unwrap();
    assert!(negative_h_obstruction(&square).unwrap());
    let complement_skeleton = SimplicialComplex::clique_complex(&square.complement());
    assert_eq!(
        h_vector(&complement_skeleton).unwrap().values(),
        &[1, 2, -1]
    );

    for n in 2..=7 {
        for g in nonisomorphic_graphs(n) {
            if g.is_edgeless() {
                continue;
            }
            if negative_h_obstruction(&g).unwrap() {
                assert!(
                    !is_scm(&g, q()),
                    "obstruction fired on a sequentially Cohen-Macaulay graph: {g:?}"
                );
            }
        }
    }
    pass("7 obstruction-soundness", started);
}

#[test]
fn criterion_8_betti_oracle_equivalence() {
    let started = Instant::now();

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..100 {
        let ideal = common::random_ideal(&mut rng, 7, 8);
        let got: BTreeMap<(usize, usize), usize> = betti_table(&ideal, q())
            .unwrap()
            .entries()
            .map(|(&k, &v)| (k, v))
            .collect();
        let want = common::taylor_betti(&ideal, q());
        assert_eq!(got, want, "trial {trial}: Betti mismatch on {ideal:?}");
    }

    // the pinned reference ideals, both characteristics
    let pendant_square = Graph::new(5, &[(1, 2), (2, 3), (3, 4), (1, 4), (4, 5)]).unwrap();
    let eared_hexagon = Graph::new(
        7,
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (1, 7), (6, 7)],
    )
    .unwrap();
    let mut reference: Vec<MonomialIdeal> = vec![
        MonomialIdeal::edge_ideal(&Graph::cycle(5).unwrap()),
        MonomialIdeal::edge_ideal(&Graph::cycle(7).unwrap())
            .alexander_dual()
            .unwrap(),
        MonomialIdeal::edge_ideal(&pendant_square).alexander_dual().unwrap(),
        MonomialIdeal::edge_ideal(&eared_hexagon).alexander_dual().unwrap(),
        squarefree_veronese(5, 4).unwrap(),
    ];
    for r in 2..=3 {
        reference.push(dual_component(&Graph::cycle(2 * r).unwrap(), r));
    }
    for ideal in reference {
        for field in [q(), f2()] {
            let got: BTreeMap<(usize, usize), usize> = betti_table(&ideal, field)
                .unwrap()
                .entries()
                .map(|(&k, &v)| (k, v))
                .collect();
            let want = common::taylor_betti(&ideal, field);
            assert_eq!(got, want, "Betti mismatch over {field} on {ideal:?}");
        }
    }
    pass("8 betti-oracle-equivalence", started);
}

#[test]
fn criterion_9_unmixed_cycles() {
    let started = Instant::now();
    for n in 3..=10 {
        let unmixed = MonomialIdeal::edge_ideal(&Graph::cycle(n).unwrap())
            .is_unmixed()
            .unwrap();
        assert_eq!(unmixed, matches!(n, 3 | 4 | 5 | 7), "is_unmixed(C_{n})");
    }
    pass("9 unmixed-cycles", started);
}
