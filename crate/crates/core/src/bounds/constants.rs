//! Numerical constants of the bounds.

use std::f64::consts::PI;

/// Offset in the quadratic length bound from crossing number,
/// `6(π + √2) − 10 ≈ 17.334`.
pub fn d0() -> f64 {
    6.0 * (PI + 2f64.sqrt()) - 10.0
}

/// `6√(6π) ≈ 26.049`, the three-component Brunnian length constant.
pub fn six_sqrt_six_pi() -> f64 {
    6.0 * (6.0 * PI).sqrt()
}

/// `N = C(n, 2)`, the number of component pairs.
pub fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Binomial coefficient as a float, exact for the sizes used here.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `c_n = (C(N, n−1) / N^{n−1})^{−1/(n−1)}` for `n >= 2`.
pub fn c_n(n: usize) -> f64 {
    assert!(n >= 2, "c_n needs n >= 2");
    let big = pairs(n);
    let k = n - 1;
    (binomial(big, k) / (big as f64).powi(k as i32)).powf(-1.0 / k as f64)
}

/// `c̃_n = (C(N, n−1) / (n N^{n−1}))^{−1/(n−1)}`, the refinement of
/// [`c_n`] available when the indeterminacy vanishes.
pub fn c_tilde(n: usize) -> f64 {
    assert!(n >= 2, "c̃_n needs n >= 2");
    let big = pairs(n);
    let k = n - 1;
    (binomial(big, k) / (n as f64 * (big as f64).powi(k as i32))).powf(-1.0 / k as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        assert!((d0() - 17.334).abs() < 1e-3);
        assert!((six_sqrt_six_pi() - 26.049).abs() < 1e-3);
        assert!((c_tilde(3) - 3.0).abs() < 1e-12);
        assert_eq!(pairs(3), 3);
        assert_eq!(binomial(10, 4), 210.0);
        // N = 1: C(1,1)/1 = 1
        assert_eq!(c_n(2), 1.0);
        for n in 2..=12 {
            assert!(c_n(n) >= (n as f64 - 1.0) / 3.0, "n = {n}");
        }
    }
}
