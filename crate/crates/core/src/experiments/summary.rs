//! Curve reductions over sweep records.

use super::SweepRecord;

/// Replicate-averaged order parameter at one `(σ, ε)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvePoint {
    pub epsilon: f64,
    pub mean_r_raw: f64,
    pub mean_r_normalized: f64,
    /// Successful replicates contributing to the means.
    pub runs: usize,
    pub failures: usize,
}

/// `⟨R⟩` against `ε` for one `σ`, in grid order.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub sigma: f64,
    pub points: Vec<CurvePoint>,
}

impl Curve {
    pub fn epsilons(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.epsilon).collect()
    }

    pub fn normalized(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.mean_r_normalized).collect()
    }

    pub fn raw(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.mean_r_raw).collect()
    }
}

/// Groups records (in canonical sweep order) into per-σ curves, averaging
/// successful replicates.
pub fn curves(records: &[SweepRecord]) -> Vec<Curve> {
    let mut out: Vec<Curve> = Vec::new();
    for rec in records {
        let curve = match out.last_mut() {
            Some(c) if c.sigma.to_bits() == rec.sigma.to_bits() => c,
            _ => {
                out.push(Curve {
                    sigma: rec.sigma,
                    points: Vec::new(),
                });
                out.last_mut().unwrap()
            }
        };
        let point = match curve.points.last_mut() {
            Some(p) if p.epsilon.to_bits() == rec.epsilon.to_bits() => p,
            _ => {
                curve.points.push(CurvePoint {
                    epsilon: rec.epsilon,
                    mean_r_raw: 0.0,
                    mean_r_normalized: 0.0,
                    runs: 0,
                    failures: 0,
                });
                curve.points.last_mut().unwrap()
            }
        };
        if rec.status.is_ok() {
            point.mean_r_raw += rec.mean_r_raw;
            point.mean_r_normalized += rec.mean_r_normalized;
            point.runs += 1;
        } else {
            point.failures += 1;
        }
    }
    for p in out.iter_mut().flat_map(|c| c.points.iter_mut()) {
        if p.runs > 0 {
            p.mean_r_raw /= p.runs as f64;
            p.mean_r_normalized /= p.runs as f64;
        } else {
            p.mean_r_raw = f64::NAN;
            p.mean_r_normalized = f64::NAN;
        }
    }
    out
}

/// Average ranks (1-based), ties sharing the mean of their positions.
fn ranks(values: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut out = vec![0.0; values.len()];
    let mut start = 0;
    while start < idx.len() {
        let mut end = start + 1;
        while end < idx.len() && values[idx[end]] == values[idx[start]] {
            end += 1;
        }
        let rank = (start + end + 1) as f64 / 2.0;
        for &i in &idx[start..end] {
            out[i] = rank;
        }
        start = end;
    }
    out
}

/// Spearman rank correlation (Pearson correlation of average ranks).
/// `NaN` when either input is constant or lengths differ or are < 2.
pub fn spearman(x: &[f64], y: &[f64]) -> f64 {
    if x.len() != y.len() || x.len() < 2 {
        return f64::NAN;
    }
    let rx = ranks(x);
    let ry = ranks(y);
    let n = x.len() as f64;
    let mx = rx.iter().sum::<f64>() / n;
    let my = ry.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in rx.iter().zip(&ry) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    sxy / (sxx * syy).sqrt()
}
