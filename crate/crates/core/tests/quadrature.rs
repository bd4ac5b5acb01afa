use statrs::function::gamma::gamma;
use xsolvable::polycore::{rat, to_f64};
use xsolvable::quadrature::*;
use xsolvable::xconstruct::grid::representative;
use xsolvable::xconstruct::*;

#[test]
fn representative_gram_matrices_are_orthogonal() {
    for case in CaseTag::ALL {
        let sys = build_system(case, representative(case)).unwrap();
        let g = gram(&sys, 8).unwrap();
        println!("{case}: max off-diagonal {:e} (level {})", g.max_off_diagonal, g.max_level_used);
        assert!(g.max_off_diagonal < 1e-10, "{case}: {:e}", g.max_off_diagonal);
        for i in 0..8 {
            assert_eq!(g.matrix[i][i], 1.0);
            assert!(g.norms[i] > 0.0);
            for j in 0..8 {
                assert!((g.matrix[i][j] - g.matrix[j][i]).abs() < 1e-13);
            }
        }
    }
}

#[test]
fn classical_laguerre_norms() {
    let alpha = rat(-5, 2);
    let sys = build_system(CaseTag::L2, Params::laguerre(0, alpha.clone())).unwrap();
    let a = to_f64(&alpha);
    for n in 0..6 {
        let got = inner_product(&sys, n, n).unwrap();
        let c = a - n as f64;
        let fact: f64 = (1..=n).map(|k| k as f64).product();
        let want = c * c * gamma(n as f64 - a) / fact;
        assert!((got - want).abs() < 1e-8 * want, "n={n}: {got} vs {want}");
    }
}

#[test]
fn weight_positive_at_nodes() {
    for case in CaseTag::ALL {
        let sys = build_system(case, representative(case)).unwrap();
        let rule = make_rule(&sys.domain_eta, Scheme::TanhSinh, 5).unwrap();
        for node in &rule.nodes {
            assert!(node.dist_lo > 0.0 && node.dist_hi > 0.0);
            assert!(weight_at(&sys, node) >= 0.0);
        }
    }
}
