use ivspace::analysis::{continuity_probe, poly_eval, q2, Grid};
use ivspace::embedding::{bullet, key, phi_bar, psi};
use ivspace::linprog::{solve_observed, IntervalLp, Status};
use ivspace::{GClass, DEFAULT_TOL};
use proptest::prelude::*;

fn c(a: f64, b: f64) -> GClass {
    GClass::new(a, b)
}

fn close(a: GClass, b: GClass, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
}

// One sign pattern per branch of phi: nonnegative, zero-containing, nonpositive.
fn branch(pattern: usize) -> impl Strategy<Value = GClass> {
    (0.0f64..10.0, 0.0f64..10.0).prop_map(move |(s, t)| match pattern {
        0 => c(s, s + t),
        1 => c(-s, t),
        _ => c(-s - t, -s),
    })
}

fn any_class() -> impl Strategy<Value = GClass> {
    (-10.0f64..10.0, -10.0f64..10.0).prop_map(|(a, b)| c(a, b))
}

proptest! {
    #[test]
    fn key_of_phi_bar_is_additive(a in any_class(), b in any_class()) {
        let k = key(phi_bar(a) + phi_bar(b));
        let sum = a + b;
        prop_assert!((k.u - sum.inf()).abs() <= 1e-12 && (k.v - sum.sup()).abs() <= 1e-12);
        prop_assert!(close(psi(phi_bar(a + b)), psi(phi_bar(a) + phi_bar(b)), 1e-12));
    }

    #[test]
    fn bullet_distributes_within_a_branch(a in any_class(),
                                          (b, d) in (0usize..3).prop_flat_map(|p| (branch(p), branch(p)))) {
        prop_assert!(close(bullet(a, b + d), bullet(a, b) + bullet(a, d), 1e-9));
    }

    #[test]
    fn polynomials_are_continuous(coeffs in prop::collection::vec(-2.0f64..2.0, 1..4),
                                  lo in 0.1f64..3.0, len in 0.1f64..3.0) {
        let f = |x: GClass| poly_eval(&coeffs, x);
        let x0 = c(lo, lo + len);
        let grid = Grid { rings: 6, points_per_ring: 32 };
        prop_assert!(continuity_probe(f, x0, 0.1, grid).is_some());
    }
}

#[test]
fn mixed_branches_can_break_distributivity() {
    let (a, b, d) = (c(-1.0, 1.0), c(1.0, 2.0), c(-3.0, -1.0));
    // b + d = [-2,1] lands in another branch
    assert_ne!(bullet(a, b + d), bullet(a, b) + bullet(a, d));
}

#[test]
fn q2_is_continuous_in_every_sign_case() {
    let grid = Grid::default();
    for x0 in [c(1.0, 2.0), c(0.5, 4.0), c(-2.0, 3.0), c(-1.0, 0.5), c(-3.0, -1.0), -c(1.0, 2.0), GClass::scalar(2.0)] {
        for eps in [0.5, 0.1, 0.01] {
            let eta = continuity_probe(q2, x0, eps, grid);
            assert!(eta.is_some_and(|e| e > 0.0), "{x0} at {eps}");
        }
    }
}

#[test]
fn simplex_keeps_right_hand_sides_positive_with_equalities() {
    // equality rows with an identity column mixed with inequality rows
    let lp = IntervalLp::new(vec![1.0, 2.0, 0.5])
        .eq(vec![1.0, 1.0, 0.0], c(2.0, 5.0))
        .le(vec![0.0, 1.0, 2.0], c(1.0, 1.5))
        .le(vec![0.0, -1.0, 1.0], c(0.0, 4.0));
    let mut seen = 0;
    let s = solve_observed(&lp, DEFAULT_TOL, |t| {
        seen += 1;
        assert!(t.rhs_admissible(), "{:?}", t.rhs);
        let x = t.assignment();
        let (vars, slacks) = x.split_at(t.num_vars);
        assert!(lp.residual(vars, slacks) < 1e-7);
    })
    .unwrap();
    assert_eq!(s.status, Status::Optimal);
    assert_eq!(seen, s.iterations);
    assert!(s.reduced_costs.iter().all(|&d| d <= 1e-12));
}

#[test]
fn simplex_reports_unbounded() {
    let lp = IntervalLp::new(vec![1.0, 1.0]).le(vec![1.0, -1.0], c(1.0, 2.0));
    let s = solve_observed(&lp, DEFAULT_TOL, |_| {}).unwrap();
    assert_eq!(s.status, Status::Unbounded);
}
