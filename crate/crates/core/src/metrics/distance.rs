use super::Distribution;

/// Mixing weight of the skew divergence.
pub const DEFAULT_SKEW_ALPHA: f64 = 0.99;

/// Kolmogorov-Smirnov statistic `max_x |F1(x) - F2(x)|` between two step
/// CDFs. The supremum of two right-continuous step functions is attained at
/// a jump, so only points of the merged support are evaluated.
pub fn ks_distance(f1: &Distribution, f2: &Distribution) -> f64 {
    let (s1, c1) = (f1.support(), f1.cdf());
    let (s2, c2) = (f2.support(), f2.cdf());
    let (mut i, mut j) = (0, 0);
    let (mut at1, mut at2) = (0.0, 0.0);
    let mut sup: f64 = 0.0;
    while i < s1.len() || j < s2.len() {
        let x = match (s1.get(i), s2.get(j)) {
            (Some(&a), Some(&b)) => a.min(b),
            (Some(&a), None) => a,
            (None, Some(&b)) => b,
            (None, None) => unreachable!(),
        };
        if s1.get(i) == Some(&x) {
            at1 = c1[i];
            i += 1;
        }
        if s2.get(j) == Some(&x) {
            at2 = c2[j];
            j += 1;
        }
        sup = sup.max((at1 - at2).abs());
    }
    sup.min(1.0)
}

/// Skew divergence `KL(p || alpha*q + (1-alpha)*p)` in nats.
///
/// The mixture is positive wherever `p` is, so the value is finite even when
/// `q` misses part of `p`'s support. Not symmetric.
///
/// # Panics
///
/// Panics unless `0 < alpha < 1`.
pub fn skew_divergence(p: &Distribution, q: &Distribution, alpha: f64) -> f64 {
    assert!(alpha > 0.0 && alpha < 1.0, "skew alpha must lie in (0, 1), got {alpha}");
    let mut total = 0.0;
    for (&x, &px) in p.support().iter().zip(p.pdf()) {
        if px == 0.0 {
            continue;
        }
        let mixed = alpha * q.pdf_at(x) + (1.0 - alpha) * px;
        total += px * (px / mixed).ln();
    }
    total.max(0.0)
}
