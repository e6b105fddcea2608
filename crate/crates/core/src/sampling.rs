//! Seeded rational samples for the verification suites.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::rational::{q, Rational};
use crate::sweedler::CDescriptor;

/// One deterministic stream per `(seed, salt)`.
pub struct Sampler {
    rng: ChaCha8Rng,
}

/// FNV-1a, so the salt mixing does not depend on the std hasher.
fn fnv(s: &str) -> u64 {
    s.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

impl Sampler {
    pub fn new(seed: u64, salt: &str) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed ^ fnv(salt)),
        }
    }

    fn small(&mut self) -> i64 {
        let k = self.rng.gen_range(1..=18);
        if k <= 9 {
            k
        } else {
            9 - k
        }
    }

    /// `p/q` with `p, q ∈ [−9, 9] \ {0}`.
    pub fn nonzero(&mut self) -> Rational {
        let (p, d) = (self.small(), self.small());
        q(p, d)
    }

    /// A nonzero sample different from every entry of `avoid`.
    pub fn nonzero_avoiding(&mut self, avoid: &[Rational]) -> Rational {
        loop {
            let x = self.nonzero();
            if !avoid.contains(&x) {
                return x;
            }
        }
    }

    /// `k` pairwise distinct nonzero samples.
    pub fn distinct(&mut self, k: usize) -> Vec<Rational> {
        let mut out = Vec::with_capacity(k);
        while out.len() < k {
            let x = self.nonzero_avoiding(&out);
            out.push(x);
        }
        out
    }

    pub fn descriptor(&mut self) -> CDescriptor {
        CDescriptor::new(self.nonzero(), self.nonzero(), self.nonzero())
    }

    /// A descriptor with `2a ≠ st`.
    pub fn azumaya_descriptor(&mut self) -> CDescriptor {
        loop {
            let d = self.descriptor();
            if d.is_azumaya() {
                return d;
            }
        }
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qi;

    #[test]
    fn streams_are_reproducible_and_salted() {
        let a: Vec<_> = (0..10).map(|_| Sampler::new(7, "x").nonzero()).collect();
        let mut s = Sampler::new(7, "x");
        let b: Vec<_> = (0..10).map(|_| s.nonzero()).collect();
        assert!(a.iter().all(|x| *x == a[0]));
        assert_eq!(b[0], a[0]);
        let mut t = Sampler::new(7, "y");
        let c: Vec<_> = (0..10).map(|_| t.nonzero()).collect();
        assert_ne!(b, c);
    }

    #[test]
    fn samples_stay_in_range() {
        let mut s = Sampler::new(1, "range");
        for _ in 0..500 {
            let x = s.nonzero();
            assert!(!x.is_zero());
            assert!(x.abs() <= qi(9) && x.abs() >= q(1, 9));
        }
        let d = s.distinct(20);
        for i in 0..20 {
            for j in 0..i {
                assert_ne!(d[i], d[j]);
            }
        }
    }
}
