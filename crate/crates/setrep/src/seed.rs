use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

/// Reproducible randomness source: a master seed plus a derivation path.
///
/// Every randomized operation takes a `Seed` instead of a shared RNG so
/// that independent pieces of work (experiment cells, per-line covers)
/// draw from independent, individually re-derivable streams. Two seeds
/// with the same master and path always produce identical streams, on any
/// platform; child seeds never collide with their parent's stream because
/// the path length feeds the key derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    master: u64,
    path: Vec<u64>,
}

/// SplitMix64 step; the standard 64-bit finalizer used here as a small,
/// portable key-derivation mixer (not for cryptography).
fn splitmix(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

impl Seed {
    pub fn new(master: u64) -> Self {
        Seed {
            master,
            path: Vec::new(),
        }
    }

    pub fn master(&self) -> u64 {
        self.master
    }

    pub fn path(&self) -> &[u64] {
        &self.path
    }

    /// Child seed for an independent sub-stream, e.g. one experiment cell
    /// or one line of a linear space.
    pub fn child(&self, part: u64) -> Seed {
        let mut path = self.path.clone();
        path.push(part);
        Seed {
            master: self.master,
            path,
        }
    }

    /// Convenience for multi-component derivations such as
    /// (n, trial, strategy).
    pub fn descend(&self, parts: &[u64]) -> Seed {
        let mut s = self.clone();
        for &p in parts {
            s = s.child(p);
        }
        s
    }

    /// The ChaCha8 stream for this seed. The 256-bit key is derived by
    /// absorbing the master seed, each path element, and the path length
    /// through SplitMix64, so distinct (master, path) pairs get distinct
    /// keys except for negligible 64-bit collisions.
    pub fn rng(&self) -> ChaCha8Rng {
        let mut h = splitmix(self.master);
        for &p in &self.path {
            h = splitmix(h ^ splitmix(p));
        }
        h = splitmix(h ^ self.path.len() as u64);
        let mut key = [0u8; 32];
        for chunk in key.chunks_mut(8) {
            h = splitmix(h);
            chunk.copy_from_slice(&h.to_le_bytes());
        }
        ChaCha8Rng::from_seed(key)
    }
}

/// Bernoulli draw with success probability `p`, implemented directly on a
/// 64-bit word so the consumed stream is pinned byte-for-byte regardless
/// of RNG-library internals. Always consumes exactly one u64. The rounding
/// bias is below 2^-53 and irrelevant at any sample size used here.
pub fn bernoulli(rng: &mut ChaCha8Rng, p: f64) -> bool {
    use rand_core::RngCore;
    let word = rng.next_u64();
    if p >= 1.0 {
        true
    } else if p <= 0.0 {
        false
    } else {
        (word as f64 / 18446744073709551616.0) < p
    }
}

/// Uniform draw from 0..bound via rejection sampling (no modulo bias).
pub fn uniform(rng: &mut ChaCha8Rng, bound: usize) -> usize {
    use rand_core::RngCore;
    debug_assert!(bound > 0);
    let bound = bound as u64;
    let zone = u64::MAX - (u64::MAX % bound);
    loop {
        let word = rng.next_u64();
        if word < zone {
            return (word % bound) as usize;
        }
    }
}

/// First `take` entries of a uniformly random permutation of 0..n
/// (partial Fisher-Yates), sorted ascending.
pub fn sample_indices(rng: &mut ChaCha8Rng, n: usize, take: usize) -> Vec<usize> {
    debug_assert!(take <= n);
    let mut pool: Vec<usize> = (0..n).collect();
    for i in 0..take {
        let j = i + uniform(rng, n - i);
        pool.swap(i, j);
    }
    let mut out = pool[..take].to_vec();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_core::RngCore;

    #[test]
    fn same_seed_same_stream() {
        let a = Seed::new(7).child(3).child(9);
        let b = Seed::new(7).descend(&[3, 9]);
        assert_eq!(a, b);
        let (mut ra, mut rb) = (a.rng(), b.rng());
        for _ in 0..32 {
            assert_eq!(ra.next_u64(), rb.next_u64());
        }
    }

    #[test]
    fn different_paths_diverge() {
        let base = Seed::new(7);
        let mut streams: Vec<u64> = vec![
            base.rng().next_u64(),
            base.child(0).rng().next_u64(),
            base.child(1).rng().next_u64(),
            base.child(0).child(0).rng().next_u64(),
            Seed::new(8).rng().next_u64(),
        ];
        streams.sort_unstable();
        streams.dedup();
        assert_eq!(streams.len(), 5, "derived streams should be distinct");
    }

    #[test]
    fn bernoulli_extremes() {
        let mut rng = Seed::new(1).rng();
        for _ in 0..100 {
            assert!(bernoulli(&mut rng, 1.0));
            assert!(!bernoulli(&mut rng, 0.0));
        }
    }

    #[test]
    fn bernoulli_frequency_is_sane() {
        // 100k draws at p = 0.3: expect 30000 +- 5 sigma (sigma ~ 145).
        let mut rng = Seed::new(42).rng();
        let hits = (0..100_000).filter(|_| bernoulli(&mut rng, 0.3)).count();
        assert!((29_275..=30_725).contains(&hits), "hits = {hits}");
    }

    #[test]
    fn uniform_stays_in_bounds() {
        let mut rng = Seed::new(5).rng();
        let mut seen = [false; 7];
        for _ in 0..1000 {
            seen[uniform(&mut rng, 7)] = true;
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn sample_indices_sorted_unique() {
        let mut rng = Seed::new(11).rng();
        let s = sample_indices(&mut rng, 50, 20);
        assert_eq!(s.len(), 20);
        assert!(s.windows(2).all(|w| w[0] < w[1]));
        assert!(s.iter().all(|&i| i < 50));
    }
}
