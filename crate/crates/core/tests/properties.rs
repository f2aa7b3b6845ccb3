mod support;

use afdweno::harness::run::{cons_to_prim, prim_to_cons};
use afdweno::harness::{convergence_study, problem, RunConfig};
use afdweno::mesh::{fill_ghosts, flattener_eta, BoundaryConditions, EdgeCondition, Grid, StateArray};
use afdweno::systems::{Euler, Rhd, SystemKind, TenMoment};
use afdweno::weno_center::nonlinear_weights;
use afdweno::SchemeOrder;
use proptest::prelude::*;

fn edge() -> impl Strategy<Value = EdgeCondition> {
    prop_oneof![
        Just(EdgeCondition::Periodic),
        Just(EdgeCondition::Outflow),
        Just(EdgeCondition::Reflective),
        Just(EdgeCondition::Dirichlet(vec![1.0, 0.5, -0.5, 2.0])),
    ]
}

fn admissible(kind: SystemKind) -> BoxedStrategy<Vec<f64>> {
    match kind {
        SystemKind::Euler(_) => (0.01f64..10.0, -5.0f64..5.0, -5.0f64..5.0, 0.01f64..10.0)
            .prop_map(|(r, u, v, p)| vec![r, u, v, p])
            .boxed(),
        SystemKind::Rhd(_) => (0.01f64..10.0, 0.0f64..0.99, 0.0f64..std::f64::consts::TAU, 1e-4f64..100.0)
            .prop_map(|(r, s, a, p)| vec![r, s * a.cos(), s * a.sin(), p])
            .boxed(),
        SystemKind::TenMoment(_) => {
            (0.01f64..10.0, -3.0f64..3.0, -3.0f64..3.0, 0.01f64..10.0, -0.95f64..0.95, 0.01f64..10.0)
                .prop_map(|(r, u, v, pxx, c, pyy)| vec![r, u, v, pxx, c * (pxx * pyy).sqrt(), pyy])
                .boxed()
        }
    }
}

proptest! {
    #[test]
    fn nonlinear_weights_form_a_partition_of_unity(
        raw in prop::collection::vec(0.01f64..1.0, 2..6),
        beta in prop::collection::vec(0.0f64..1e3, 6),
        eps in prop::sample::select(vec![1e-40, 1e-12, 1e-6]),
        tau_exp in 1i32..3,
    ) {
        let total: f64 = raw.iter().sum();
        let gamma: Vec<f64> = raw.iter().map(|g| g / total).collect();
        let beta = &beta[..gamma.len()];
        let w = nonlinear_weights(&gamma, beta, eps, tau_exp, 0).unwrap();
        prop_assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-14);
        prop_assert!(w.iter().all(|&x| (0.0..=1.0).contains(&x)));
    }

    #[test]
    fn equal_indicators_give_the_linear_weights(raw in prop::collection::vec(0.01f64..1.0, 3), b in 0.0f64..10.0) {
        let total: f64 = raw.iter().sum();
        let gamma: Vec<f64> = raw.iter().map(|g| g / total).collect();
        let w = nonlinear_weights(&gamma, &[b; 3], 1e-12, 2, 1).unwrap();
        for (a, g) in w.iter().zip(&gamma) {
            prop_assert!((a - g).abs() < 1e-14);
        }
    }

    #[test]
    fn ghost_fill_is_idempotent_and_leaves_the_interior_alone(
        edges in (edge(), edge()),
        data in prop::collection::vec(-10.0f64..10.0, 6 * 5 * 4),
    ) {
        let grid = Grid::new_2d(6, 5, (0.0, 1.0), (0.0, 1.0), 4).unwrap();
        let (ex, ey) = edges;
        let mut bcs = BoundaryConditions::uniform(ex, vec![1], vec![2]);
        bcs.bottom = ey.clone();
        bcs.top = ey;
        let mut state = StateArray::zeros(&grid, 4);
        for ((i, j), v) in grid.interior().zip(data.chunks(4)) {
            state.zone_mut(&grid, i, j).copy_from_slice(v);
        }
        let interior = state.clone();
        fill_ghosts(&mut state, &grid, &bcs, 0.0).unwrap();
        for (i, j) in grid.interior() {
            prop_assert_eq!(state.zone(&grid, i, j), interior.zone(&grid, i, j));
        }
        let once = state.clone();
        fill_ghosts(&mut state, &grid, &bcs, 0.0).unwrap();
        prop_assert_eq!(once, state);
    }

    #[test]
    fn periodic_ghosts_wrap(data in prop::collection::vec(-10.0f64..10.0, 8)) {
        let grid = Grid::new_1d(8, (0.0, 1.0), 5).unwrap();
        let bcs = BoundaryConditions::uniform(EdgeCondition::Periodic, vec![], vec![]);
        let mut state = StateArray::zeros(&grid, 1);
        for (i, v) in data.iter().enumerate() {
            state.zone_mut(&grid, i as i64, 0)[0] = *v;
        }
        fill_ghosts(&mut state, &grid, &bcs, 0.0).unwrap();
        for i in -5i64..13 {
            prop_assert_eq!(state.zone(&grid, i, 0)[0], data[i.rem_euclid(8) as usize]);
        }
    }

    #[test]
    fn flattener_stays_in_the_unit_interval(
        zones in prop::collection::vec(admissible(SystemKind::Euler(Euler { gamma: 1.4 })), 20),
        kappa in 0.05f64..1.0,
    ) {
        let euler = Euler { gamma: 1.4 };
        let grid = Grid::new_1d(12, (0.0, 1.0), 4).unwrap();
        let mut state = StateArray::zeros(&grid, 4);
        for (i, w) in (-4i64..16).zip(&zones) {
            let u = prim_to_cons(SystemKind::Euler(euler), w).unwrap();
            state.zone_mut(&grid, i, 0).copy_from_slice(&u);
        }
        let eta = flattener_eta(&euler, &state, &grid, kappa).unwrap();
        prop_assert!(eta.eta.iter().all(|e| (0.0..=1.0).contains(e)));
    }

    #[test]
    fn primitive_round_trip(
        (kind, w) in prop_oneof![
            Just(SystemKind::Euler(Euler { gamma: 1.4 })),
            Just(SystemKind::Rhd(Rhd { gamma: 5.0 / 3.0 })),
            Just(SystemKind::Rhd(Rhd { gamma: 4.0 / 3.0 })),
            Just(SystemKind::TenMoment(TenMoment)),
        ].prop_flat_map(|k| (Just(k), admissible(k)))
    ) {
        let back = cons_to_prim(kind, &prim_to_cons(kind, &w).unwrap()).unwrap();
        for (a, b) in back.iter().zip(&w) {
            prop_assert!((a - b).abs() <= 1e-9 * (1.0 + b.abs()), "{} {:?} -> {:?}", kind.name(), w, back);
        }
    }

    #[test]
    fn front_finder_locates_a_step(n in 20usize..80, at in 0.2f64..0.8, a in -5.0f64..5.0, jump in 0.1f64..5.0) {
        let k = (at * n as f64) as usize;
        let v: Vec<f64> = (0..n).map(|i| if i <= k { a } else { a + jump }).collect();
        prop_assert_eq!(support::fronts(&v, 0.3, 4), vec![k]);
        let m = support::match_fronts(&v, &v, 0.3, 4);
        prop_assert_eq!(m.len(), 1);
        prop_assert_eq!(m[0].offset, 0);
        prop_assert!((m[0].strength - 1.0).abs() < 1e-12);
    }

    #[test]
    fn block_average_preserves_the_mean(v in prop::collection::vec(-5.0f64..5.0, 24), f in prop::sample::select(vec![1usize, 2, 3, 4, 6])) {
        let c = support::downsample(&v, f);
        let mean = |x: &[f64]| x.iter().sum::<f64>() / x.len() as f64;
        prop_assert!((mean(&c) - mean(&v)).abs() < 1e-12);
        let c2 = support::downsample_2d(&v, 6, 4, 2);
        prop_assert!((mean(&c2) - mean(&v)).abs() < 1e-12);
    }
}

#[test]
fn reported_order_is_the_log_ratio_of_successive_errors() {
    let spec = problem("euler-advection").unwrap();
    let cfg = RunConfig::from_problem(&spec);
    let rows = convergence_study(&spec, SchemeOrder::Fifth, &[8, 16, 32], &cfg).unwrap();
    for w in rows.windows(2) {
        let want = (w[0].l1_error / w[1].l1_error).log2();
        assert!((w[1].l1_order.unwrap() - want).abs() < 1e-12);
        let want = (w[0].linf_error / w[1].linf_error).log2();
        assert!((w[1].linf_order.unwrap() - want).abs() < 1e-12);
    }
    assert!(rows[0].l1_order.is_none());
}
