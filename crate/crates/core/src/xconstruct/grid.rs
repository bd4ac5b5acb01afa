use super::system::{build_system, XSystem};
use super::{CaseTag, Params};
use crate::polycore::{rat, Rational};

const CANDIDATES: [(i64, i64); 22] = [
    (-13, 2), (-6, 1), (-11, 2), (-16, 3), (-9, 2), (-4, 1), (-7, 2), (-10, 3), (-3, 1), (-5, 2),
    (-7, 3), (-3, 2), (-5, 4), (-2, 3), (-1, 3), (1, 3), (1, 2), (3, 4), (3, 2), (5, 2), (7, 3), (7, 2),
];

fn candidates() -> Vec<Rational> {
    CANDIDATES.iter().map(|&(n, d)| rat(n, d)).collect()
}

/// The first `count` admissible, non-degenerate parameter points for a
/// case at fixed ℓ, scanning a fixed candidate list. Deterministic.
pub fn admissible_points(case: CaseTag, ell: usize, count: usize) -> Vec<XSystem> {
    let vals = candidates();
    let mut out = Vec::new();
    let betas: Vec<Rational> = if case.is_laguerre() { vec![rat(0, 1)] } else { vals.clone() };
    // interleave so that consecutive picks differ in both parameters
    for shift in 0..vals.len() {
        for (i, a) in vals.iter().enumerate() {
            let b = &betas[(i + shift) % betas.len()];
            if case.is_laguerre() && shift > 0 {
                break;
            }
            if let Ok(sys) = build_system(case, Params::new(ell, a.clone(), b.clone())) {
                if !sys.xi_degenerate && !out.iter().any(|s: &XSystem| s.params == sys.params) {
                    out.push(sys);
                    if out.len() == count {
                        return out;
                    }
                }
            }
        }
    }
    out
}

/// A representative point per case, used by the numerical checks.
pub fn representative(case: CaseTag) -> Params {
    match case {
        CaseTag::L2 => Params::laguerre(1, rat(-2, 1)),
        CaseTag::L1 => Params::laguerre(1, rat(1, 2)),
        CaseTag::J1 => Params::new(1, rat(3, 2), rat(-5, 2)),
        CaseTag::J2 => Params::new(1, rat(-5, 2), rat(3, 2)),
        CaseTag::ExtJ => Params::new(2, rat(-5, 2), rat(-5, 2)),
    }
}
