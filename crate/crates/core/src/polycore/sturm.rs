//! Exact real-root counting with Sturm chains.

use super::interval::{Bound, Interval};
use super::poly::Poly;
use super::PolyError;

/// Sturm chain of the squarefree part of a polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Poly>,
}

impl SturmChain {
    pub fn new(p: &Poly) -> Result<Self, PolyError> {
        if p.is_zero() {
            return Err(PolyError::IndeterminateRootCount);
        }
        let dp = p.derive();
        let squarefree = if dp.is_zero() {
            p.clone()
        } else {
            p.div_rem(&p.gcd(&dp)).0
        };
        let mut chain = vec![squarefree.primitive_part()];
        let d = squarefree.derive();
        if !d.is_zero() {
            chain.push(d.primitive_part());
            loop {
                let n = chain.len();
                let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                // positive rescaling keeps the signs the chain depends on
                chain.push((-r).primitive_part());
            }
        }
        Ok(SturmChain { chain })
    }

    pub fn polys(&self) -> &[Poly] {
        &self.chain
    }

    fn changes(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn variations(&self, at: &Bound) -> usize {
        match at {
            Bound::NegInfinity => Self::changes(self.chain.iter().map(|p| p.sign_at_infinity(false))),
            Bound::PosInfinity => Self::changes(self.chain.iter().map(|p| p.sign_at_infinity(true))),
            Bound::Finite { value, .. } => Self::changes(self.chain.iter().map(|p| p.sign_at(value))),
        }
    }

    fn vanishes_at(&self, b: &Bound) -> bool {
        b.value().is_some_and(|v| self.chain[0].sign_at(v) == 0)
    }

    /// Number of distinct real roots in `iv`, honoring endpoint flags.
    pub fn count(&self, iv: &Interval) -> usize {
        // V(a) - V(b) counts roots in (a, b] for a squarefree chain
        let half_open = self.variations(iv.lo()) - self.variations(iv.hi());
        let mut n = half_open;
        if let Bound::Finite { closed, .. } = iv.hi() {
            if !*closed && self.vanishes_at(iv.hi()) {
                n -= 1;
            }
        }
        if let Bound::Finite { closed: true, .. } = iv.lo() {
            if self.vanishes_at(iv.lo()) {
                n += 1;
            }
        }
        n
    }
}

/// Exact count of the distinct real roots of `p` in `iv`.
pub fn sturm_count(p: &Poly, iv: &Interval) -> Result<usize, PolyError> {
    Ok(SturmChain::new(p)?.count(iv))
}
