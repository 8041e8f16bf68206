use super::special::student_t_two_sided;
use super::StatsError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WelchResult {
    pub t: f64,
    pub df: f64,
    /// Two-sided.
    pub p: f64,
    pub mean_a: f64,
    pub mean_b: f64,
    pub n_a: usize,
    pub n_b: usize,
    /// Both samples have zero variance; `p` is then 1 for equal means and 0
    /// otherwise.
    pub degenerate: bool,
}

fn mean_and_variance(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let ss: f64 = xs.iter().map(|x| (x - mean).powi(2)).sum();
    (mean, ss / (n - 1.0))
}

/// Welch's unequal-variance t-test with unbiased sample variances and
/// Welch–Satterthwaite degrees of freedom.
pub fn welch_t(a: &[f64], b: &[f64]) -> Result<WelchResult, StatsError> {
    if a.len() < 2 || b.len() < 2 {
        return Err(StatsError::InsufficientData { n_a: a.len(), n_b: b.len() });
    }
    if a.iter().chain(b).any(|x| !x.is_finite()) {
        return Err(StatsError::NonFinite);
    }
    let (n_a, n_b) = (a.len(), b.len());
    let (mean_a, var_a) = mean_and_variance(a);
    let (mean_b, var_b) = mean_and_variance(b);
    let (sa, sb) = (var_a / n_a as f64, var_b / n_b as f64);
    let se2 = sa + sb;
    let pooled_df = (n_a + n_b - 2) as f64;

    if se2 == 0.0 {
        let diff = mean_a - mean_b;
        let (t, p) = if diff == 0.0 { (0.0, 1.0) } else { (diff.signum() * f64::INFINITY, 0.0) };
        return Ok(WelchResult { t, df: pooled_df, p, mean_a, mean_b, n_a, n_b, degenerate: true });
    }

    let t = (mean_a - mean_b) / se2.sqrt();
    let df = (se2 * se2 / (sa * sa / (n_a - 1) as f64 + sb * sb / (n_b - 1) as f64)).min(pooled_df);
    let p = student_t_two_sided(t, df);
    Ok(WelchResult { t, df, p, mean_a, mean_b, n_a, n_b, degenerate: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn identical_samples() {
        let r = welch_t(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]).unwrap();
        assert_eq!((r.t, r.p), (0.0, 1.0));
    }

    #[test]
    fn shifted_samples() {
        let r = welch_t(&[1.0, 2.0, 3.0, 4.0, 5.0], &[2.0, 3.0, 4.0, 5.0, 6.0]).unwrap();
        assert_abs_diff_eq!(r.t, -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.df, 8.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.p, 0.3466, epsilon = 5e-4);
    }

    #[test]
    fn constant_samples() {
        let r = welch_t(&[2.0, 2.0], &[3.0, 3.0, 3.0]).unwrap();
        assert!(r.degenerate);
        assert_eq!(r.p, 0.0);
        assert_eq!(r.t, f64::NEG_INFINITY);
        let r = welch_t(&[2.0, 2.0], &[2.0, 2.0]).unwrap();
        assert_eq!((r.t, r.p), (0.0, 1.0));
    }

    #[test]
    fn rejects_short_or_non_finite_samples() {
        assert!(matches!(welch_t(&[1.0], &[1.0, 2.0]), Err(StatsError::InsufficientData { n_a: 1, n_b: 2 })));
        assert!(matches!(welch_t(&[1.0, f64::NAN], &[1.0, 2.0]), Err(StatsError::NonFinite)));
    }
}
