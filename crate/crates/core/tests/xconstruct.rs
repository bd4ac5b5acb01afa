use xsolvable::polycore::{int, rat, sturm_count, Interval, Poly, QuasiPoly};
use xsolvable::xconstruct::grid::admissible_points;
use xsolvable::xconstruct::*;

#[test]
fn grid_has_three_points_per_case() {
    for case in CaseTag::ALL {
        for ell in 0..=3 {
            let pts = admissible_points(case, ell, 3);
            assert_eq!(pts.len(), 3, "{case} ℓ={ell}");
        }
    }
}

#[test]
fn constraint_residual_vanishes_on_grid() {
    for case in CaseTag::ALL {
        for ell in 1..=3 {
            for sys in admissible_points(case, ell, 3) {
                for n in 0..=5 {
                    let r = ode_residual(&sys, n).unwrap();
                    assert!(r.is_zero(), "{case} {:?} n={n}: {r}", sys.params);
                }
            }
        }
    }
}

#[test]
fn hos_forms_are_proportional() {
    for case in CaseTag::ALL {
        for ell in 1..=3 {
            for sys in admissible_points(case, ell, 3) {
                for n in 0..=5 {
                    let c = proportionality(&exceptional_poly(&sys, n), &hos_poly(&sys, n));
                    assert!(c.is_ok(), "{case} {:?} n={n}", sys.params);
                }
            }
        }
    }
}

#[test]
fn derivation_route_agrees_with_closed_forms() {
    for case in CaseTag::ALL {
        for ell in 0..=3 {
            for sys in admissible_points(case, ell, 3) {
                for n in 0..=4 {
                    let derived = derivation_p(&sys, n);
                    let closed = QuasiPoly::new(sys.p_prefactor.clone(), exceptional_poly(&sys, n));
                    let common = derived.prefactor.common_with(&closed.prefactor).unwrap();
                    let c = proportionality(&derived.extract(&common).unwrap(), &closed.extract(&common).unwrap())
                        .unwrap();
                    assert_eq!(c.clone() * c, int(16), "{case} {:?} n={n}", sys.params);
                }
            }
        }
    }
}

#[test]
fn degree_and_node_laws() {
    for case in CaseTag::ALL {
        for ell in 1..=3 {
            for sys in admissible_points(case, ell, 3) {
                for n in 0..=5 {
                    let p = exceptional_poly(&sys, n);
                    assert_eq!(p.degree(), Some(ell + n + case.degree_excess()));
                    if case == CaseTag::ExtJ {
                        assert_eq!(sturm_count(&p, &Interval::open(int(-1), int(1))).unwrap(), n + 1);
                    }
                }
            }
        }
    }
}

#[test]
fn j2_direct_matches_mirror() {
    for ell in 0..=3 {
        for sys in admissible_points(CaseTag::J2, ell, 3) {
            for n in 0..=5 {
                let direct = j2_direct(&sys.params, n).scale(&j2_direct_sign(ell, n));
                assert_eq!(exceptional_poly(&sys, n), direct);
            }
        }
    }
}

#[test]
fn energies_positive_and_increasing() {
    for case in CaseTag::ALL {
        for ell in 0..=3 {
            // the L1 gap −3/2 < α ≤ −1 is flagged and excluded
            for sys in admissible_points(case, ell, 3).into_iter().filter(|s| s.notes.is_empty()) {
                let e: Vec<_> = (0..8).map(|k| energy(&sys, k)).collect();
                assert!(e.windows(2).all(|w| w[0] < w[1]));
                let first = if case == CaseTag::ExtJ { 1 } else { 0 };
                assert!(e[first..].iter().all(|x| *x > int(0)), "{case} {:?}", sys.params);
            }
        }
    }
}

#[test]
fn ell_zero_collapses() {
    for case in CaseTag::ALL {
        for sys in admissible_points(case, 0, 3) {
            assert_eq!(sys.xi, Poly::one());
            assert!(weight_consistency(&sys));
        }
    }
}

#[test]
fn l1_bound_gap_is_flagged() {
    let sys = build_system(CaseTag::L1, Params::laguerre(0, rat(-5, 4))).unwrap();
    assert!(!sys.notes.is_empty());
    assert!(energy(&sys, 0) < int(0));
    assert!(build_system(CaseTag::L1, Params::laguerre(1, rat(-5, 4))).is_err());
}
