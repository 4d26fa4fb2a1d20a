//! Five-number summaries for seed sweeps.

use serde::Serialize;

/// Min, quartiles and max; quartiles interpolate linearly between order
/// statistics (position `q * (len - 1)` in the sorted sample).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Quantiles {
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
}

fn quantile(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

pub fn round4(x: f64) -> f64 {
    (x * 1e4).round() / 1e4
}

impl Quantiles {
    /// `None` for an empty sample. NaNs are not expected.
    pub fn of(values: &[f64]) -> Option<Self> {
        if values.is_empty() {
            return None;
        }
        let mut v = values.to_vec();
        v.sort_by(f64::total_cmp);
        Some(Quantiles {
            min: v[0],
            q1: quantile(&v, 0.25),
            median: quantile(&v, 0.5),
            q3: quantile(&v, 0.75),
            max: v[v.len() - 1],
        })
    }

    pub fn rounded(self) -> Self {
        Quantiles {
            min: round4(self.min),
            q1: round4(self.q1),
            median: round4(self.median),
            q3: round4(self.q3),
            max: round4(self.max),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolated_quartiles() {
        let q = Quantiles::of(&[4.0, 1.0, 3.0, 2.0]).unwrap();
        assert_eq!((q.min, q.q1, q.median, q.q3, q.max), (1.0, 1.75, 2.5, 3.25, 4.0));
        let one = Quantiles::of(&[7.0]).unwrap();
        assert!([one.min, one.q1, one.median, one.q3].iter().all(|&x| x == one.max));
        assert!(Quantiles::of(&[]).is_none());
    }

    #[test]
    fn rounding() {
        assert_eq!(round4(0.123456), 0.1235);
        assert_eq!(round4(2.0 / 3.0), 0.6667);
    }
}
