//! Small numeric helpers: compensated summation, log-space utilities and
//! big-integer combinatorics.

use num::BigUint;

/// Kahan compensated accumulator. Sums of many tiny positive terms (the
/// exact engines add up to 2^28 configuration weights) keep full double
/// precision this way.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: f64) {
        let y = value - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    /// Merge another accumulator; used for deterministic chunked reductions.
    pub fn merge(&mut self, other: KahanSum) {
        self.add(other.sum);
        self.add(-other.comp);
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// log(exp(a) + exp(b)) without overflow; tolerates -inf arguments.
pub fn log_add_exp(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    hi + (lo - hi).exp().ln_1p()
}

/// Relative difference |a-b| / max(|a|,|b|), 0 when both are 0.
pub fn rel_diff(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

/// Binomial coefficient C(n, k) in exact integer arithmetic.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kahan_handles_large_spread() {
        let mut s = KahanSum::new();
        s.add(1.0);
        for _ in 0..1000 {
            s.add(1e-18);
        }
        assert_eq!(s.value(), 1.0 + 1000.0 * 1e-18);
    }

    #[test]
    fn kahan_merge_matches_sequential() {
        let vals: Vec<f64> = (0..1000).map(|i| 1.0 / (i as f64 + 1.0)).collect();
        let mut whole = KahanSum::new();
        for &v in &vals {
            whole.add(v);
        }
        let mut left = KahanSum::new();
        let mut right = KahanSum::new();
        for &v in &vals[..500] {
            left.add(v);
        }
        for &v in &vals[500..] {
            right.add(v);
        }
        left.merge(right);
        assert!(rel_diff(left.value(), whole.value()) < 1e-15);
    }

    #[test]
    fn binomial_small_table() {
        assert_eq!(binomial(8, 0), BigUint::from(1u32));
        assert_eq!(binomial(8, 2), BigUint::from(28u32));
        assert_eq!(binomial(10, 2), BigUint::from(45u32));
        assert_eq!(binomial(5, 7), BigUint::ZERO);
    }

    #[test]
    fn log_add_exp_basics() {
        assert_eq!(log_add_exp(f64::NEG_INFINITY, 0.0), 0.0);
        let v = log_add_exp((2.0f64).ln(), (3.0f64).ln());
        assert!((v - (5.0f64).ln()).abs() < 1e-14);
    }
}
