//! The registered initial data against the published tables, typed in
//! again here so a slip in either copy shows up.

use afdweno::harness::{problem, ProblemSpec, PROBLEM_NAMES};

struct Expect {
    name: &'static str,
    gamma: Option<f64>,
    t_end: f64,
    /// Tabulated state and a point inside its region.
    states: &'static [(&'static [f64], (f64, f64))],
}

const L: (f64, f64) = (-0.25, 0.0);
const R: (f64, f64) = (0.25, 0.0);

const TABLES: &[Expect] = &[
    Expect { name: "sod", gamma: Some(1.4), t_end: 0.2, states: &[(&[1.0, 0.0, 0.0, 1.0], L), (&[0.125, 0.0, 0.0, 0.1], R)] },
    Expect {
        name: "lax",
        gamma: Some(1.4),
        t_end: 0.13,
        states: &[(&[0.445, 0.698, 0.0, 3.528], L), (&[0.5, 0.0, 0.0, 0.571], R)],
    },
    Expect {
        name: "blast",
        gamma: Some(1.4),
        t_end: 0.038,
        states: &[
            (&[1.0, 0.0, 0.0, 1000.0], (-0.45, 0.0)),
            (&[1.0, 0.0, 0.0, 0.01], (0.0, 0.0)),
            (&[1.0, 0.0, 0.0, 100.0], (0.45, 0.0)),
        ],
    },
    Expect {
        name: "rhd-1",
        gamma: Some(5.0 / 3.0),
        t_end: 0.4,
        states: &[(&[1.0, -0.6, 0.0, 10.0], L), (&[10.0, 0.5, 0.0, 20.0], R)],
    },
    Expect {
        name: "rhd-2",
        gamma: Some(5.0 / 3.0),
        t_end: 0.4,
        states: &[(&[10.0, 0.0, 0.0, 40.0 / 3.0], L), (&[1.0, 0.0, 0.0, 1e-6], R)],
    },
    Expect {
        name: "rhd-3",
        gamma: Some(5.0 / 3.0),
        t_end: 0.4,
        states: &[(&[1.0, 0.0, 0.0, 1e3], L), (&[1.0, 0.0, 0.0, 1e-2], R)],
    },
    Expect { name: "rhd-4", gamma: Some(4.0 / 3.0), t_end: 0.4, states: &[(&[1.0, 0.9, 0.0, 1.0], L), (&[1.0, 0.0, 0.0, 10.0], R)] },
    Expect {
        name: "rhd-5",
        gamma: Some(5.0 / 3.0),
        t_end: 0.4,
        states: &[(&[1.0, -0.7, 0.0, 20.0], L), (&[1.0, 0.7, 0.0, 20.0], R)],
    },
    Expect {
        name: "rhd-6",
        gamma: Some(1.4),
        t_end: 0.43,
        states: &[
            (&[1.0, 0.0, 0.0, 1000.0], (-0.45, 0.0)),
            (&[1.0, 0.0, 0.0, 0.01], (0.0, 0.0)),
            (&[1.0, 0.0, 0.0, 100.0], (0.45, 0.0)),
        ],
    },
    // the right state carries a sine perturbation, checked separately
    Expect { name: "rhd-7", gamma: Some(5.0 / 3.0), t_end: 0.35, states: &[(&[5.0, 0.0, 0.0, 50.0], L)] },
    Expect {
        name: "tenmoment-1",
        gamma: None,
        t_end: 0.125,
        states: &[(&[1.0, 0.0, 0.0, 2.0, 0.05, 0.6], L), (&[0.125, 0.0, 0.0, 0.2, 0.1, 0.2], R)],
    },
    Expect {
        name: "tenmoment-2",
        gamma: None,
        t_end: 0.125,
        states: &[(&[1.0, 1.0, 1.0, 1.0, 0.0, 1.0], L), (&[1.0, -1.0, -1.0, 1.0, 0.0, 1.0], R)],
    },
    Expect {
        name: "tenmoment-3",
        gamma: None,
        t_end: 0.15,
        states: &[(&[2.0, -0.5, -0.5, 1.5, 0.5, 1.5], L), (&[1.0, 1.0, 1.0, 1.0, 0.0, 1.0], R)],
    },
    Expect {
        name: "2drp-1",
        gamma: Some(5.0 / 3.0),
        t_end: 0.4,
        states: &[
            (&[0.5, 0.5, -0.5, 5.0], (0.25, 0.25)),
            (&[1.0, 0.5, 0.5, 5.0], (-0.25, 0.25)),
            (&[3.0, -0.5, 0.5, 5.0], (-0.25, -0.25)),
            (&[1.5, -0.5, -0.5, 5.0], (0.25, -0.25)),
        ],
    },
    Expect {
        name: "2drp-2",
        gamma: Some(5.0 / 3.0),
        t_end: 0.4,
        states: &[
            (&[1.0, 0.0, 0.0, 1.0], (0.25, 0.25)),
            (&[0.5771, -0.3529, 0.0, 0.4], (-0.25, 0.25)),
            (&[1.0, -0.3529, -0.3529, 1.0], (-0.25, -0.25)),
            (&[0.5771, 0.0, -0.3529, 0.4], (0.25, -0.25)),
        ],
    },
    Expect {
        name: "2drp-3",
        gamma: Some(5.0 / 3.0),
        t_end: 0.4,
        states: &[
            (&[0.0351452161, 0.0, 0.0, 0.1629310565], (0.25, 0.25)),
            (&[0.1, 0.7, 0.0, 1.0], (-0.25, 0.25)),
            (&[0.5, 0.0, 0.0, 1.0], (-0.25, -0.25)),
            (&[0.1, 0.0, 0.7, 1.0], (0.25, -0.25)),
        ],
    },
    Expect {
        name: "sb-1",
        gamma: Some(5.0 / 3.0),
        t_end: 450.0,
        states: &[
            (&[1.0, 0.0, 0.0, 0.05], (100.0, 30.0)),
            (&[1.86522508063, -0.19678110737, 0.0, 0.15], (300.0, 0.0)),
            (&[0.1358, 0.0, 0.0, 0.05], (215.0, 10.0)),
        ],
    },
    Expect {
        name: "sb-2",
        gamma: Some(5.0 / 3.0),
        t_end: 500.0,
        states: &[
            (&[1.0, 0.0, 0.0, 0.05], (100.0, -30.0)),
            (&[1.86522508063, -0.19678110737, 0.0, 0.15], (300.0, 40.0)),
            (&[3.1538, 0.0, 0.0, 0.05], (200.0, -10.0)),
        ],
    },
];

fn spec(name: &str) -> ProblemSpec {
    problem(name).unwrap_or_else(|e| panic!("{name}: {e}"))
}

#[test]
fn tabulated_states_match_the_published_tables() {
    for e in TABLES {
        let s = spec(e.name);
        assert_eq!(s.gamma(), e.gamma, "{}: gamma", e.name);
        assert_eq!(s.t_end, e.t_end, "{}: final time", e.name);
        let registered: Vec<&[f64]> = s.table.iter().map(|r| r.state.as_slice()).collect();
        for (state, _) in e.states {
            assert!(registered.contains(state), "{}: {state:?} missing from {registered:?}", e.name);
        }
    }
}

#[test]
fn initial_data_takes_the_tabulated_state_in_each_region() {
    for e in TABLES {
        let s = spec(e.name);
        for (state, (x, y)) in e.states {
            assert_eq!((s.initial)(*x, *y), state.to_vec(), "{} at ({x}, {y})", e.name);
        }
    }
}

#[test]
fn perturbed_density_of_the_relativistic_shock_problem() {
    let s = spec("rhd-7");
    for x in [0.01, 0.1, 0.3, 0.49] {
        let w = (s.initial)(x, 0.0);
        assert!((w[0] - (2.0 + 0.3 * (50.0 * x).sin())).abs() < 1e-15, "rho at {x}");
        assert_eq!(&w[1..], &[0.0, 0.0, 5.0]);
    }
}

#[test]
fn every_listed_name_resolves_and_unknown_names_fail() {
    for name in PROBLEM_NAMES {
        let s = spec(name);
        assert_eq!(s.name, *name);
        assert!(s.t_end > 0.0 && s.cfl > 0.0);
        let (x, y) = (0.5 * (s.x_range.0 + s.x_range.1), 0.5 * (s.y_range.0 + s.y_range.1));
        assert_eq!((s.initial)(x, y).len(), s.system.nvar(), "{name}");
    }
    assert!(problem("no-such-problem").is_err());
}

#[test]
fn shock_problems_carry_a_finer_reference_run() {
    for name in ["blast", "rhd-1", "rhd-5", "rhd-6", "rhd-7", "tenmoment-1", "tenmoment-3"] {
        let s = spec(name);
        let r = s.reference.unwrap_or_else(|| panic!("{name} has no reference run"));
        assert!(r.zones >= 3 * s.default_zones.0, "{name}: reference is not finer");
        assert!(r.order <= s.default_order, "{name}: reference order");
    }
}
