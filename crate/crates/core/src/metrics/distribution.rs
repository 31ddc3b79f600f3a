use std::io::Write;

/// An empirical discrete distribution over sorted distinct values.
///
/// CDF entries are computed from integer cumulative counts, so the last one
/// is exactly 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Distribution {
    support: Vec<f64>,
    pdf: Vec<f64>,
    cdf: Vec<f64>,
    sample_count: u64,
}

impl Distribution {
    /// Empirical distribution of `values`; `None` when there are none.
    ///
    /// # Panics
    ///
    /// Panics on NaN.
    pub fn from_values<I: IntoIterator<Item = f64>>(values: I) -> Option<Self> {
        let mut values: Vec<f64> = values.into_iter().collect();
        assert!(values.iter().all(|v| !v.is_nan()), "NaN in distribution values");
        values.sort_unstable_by(f64::total_cmp);
        let mut counts: Vec<(f64, u64)> = Vec::new();
        for v in values {
            match counts.last_mut() {
                Some((last, c)) if *last == v => *c += 1,
                _ => counts.push((v, 1)),
            }
        }
        Self::from_sorted_counts(counts)
    }

    /// Distribution from `(value, count)` pairs. Values may repeat and come
    /// in any order; zero counts are dropped.
    pub fn from_counts<I: IntoIterator<Item = (f64, u64)>>(counts: I) -> Option<Self> {
        let mut counts: Vec<(f64, u64)> = counts.into_iter().filter(|&(_, c)| c > 0).collect();
        counts.sort_unstable_by(|a, b| a.0.total_cmp(&b.0));
        let mut merged: Vec<(f64, u64)> = Vec::with_capacity(counts.len());
        for (v, c) in counts {
            match merged.last_mut() {
                Some((last, n)) if *last == v => *n += c,
                _ => merged.push((v, c)),
            }
        }
        Self::from_sorted_counts(merged)
    }

    fn from_sorted_counts(counts: Vec<(f64, u64)>) -> Option<Self> {
        let total: u64 = counts.iter().map(|&(_, c)| c).sum();
        if total == 0 {
            return None;
        }
        let denom = total as f64;
        let mut running = 0u64;
        let mut support = Vec::with_capacity(counts.len());
        let mut pdf = Vec::with_capacity(counts.len());
        let mut cdf = Vec::with_capacity(counts.len());
        for (v, c) in counts {
            running += c;
            support.push(v);
            pdf.push(c as f64 / denom);
            cdf.push(running as f64 / denom);
        }
        Some(Distribution {
            support,
            pdf,
            cdf,
            sample_count: total,
        })
    }

    pub fn support(&self) -> &[f64] {
        &self.support
    }

    pub fn pdf(&self) -> &[f64] {
        &self.pdf
    }

    pub fn cdf(&self) -> &[f64] {
        &self.cdf
    }

    /// `1 - CDF` at each support point.
    pub fn ccdf(&self) -> Vec<f64> {
        self.cdf.iter().map(|c| 1.0 - c).collect()
    }

    pub fn sample_count(&self) -> u64 {
        self.sample_count
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// Probability mass at exactly `x`.
    pub fn pdf_at(&self, x: f64) -> f64 {
        self.support
            .binary_search_by(|s| s.total_cmp(&x))
            .map_or(0.0, |i| self.pdf[i])
    }

    /// Right-continuous step CDF: mass at values `<= x`.
    pub fn cdf_at(&self, x: f64) -> f64 {
        let idx = self.support.partition_point(|&s| s <= x);
        if idx == 0 {
            0.0
        } else {
            self.cdf[idx - 1]
        }
    }

    pub fn ccdf_at(&self, x: f64) -> f64 {
        1.0 - self.cdf_at(x)
    }

    pub fn mean(&self) -> f64 {
        self.support.iter().zip(&self.pdf).map(|(v, p)| v * p).sum()
    }

    /// Writes `value,pdf,cdf,ccdf` rows with a header line.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "value,pdf,cdf,ccdf")?;
        for i in 0..self.support.len() {
            writeln!(
                out,
                "{},{},{},{}",
                self.support[i],
                self.pdf[i],
                self.cdf[i],
                1.0 - self.cdf[i]
            )?;
        }
        out.flush()
    }
}
