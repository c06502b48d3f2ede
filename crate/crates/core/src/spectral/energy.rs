use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

/// Eigenvalues with `|λ| <= EPS_ZERO` count as zero and enter no energy sum.
pub const EPS_ZERO: f64 = 1e-9;

/// Descending real spectrum with a sign classification.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    values: Vec<f64>,
    eps_zero: f64,
    pos_count: usize,
    zero_count: usize,
    neg_count: usize,
}

impl Spectrum {
    /// Sorts `values` descending and classifies with [`EPS_ZERO`].
    pub fn new(values: Vec<f64>) -> Self {
        Self::with_threshold(values, EPS_ZERO)
    }

    pub fn with_threshold(mut values: Vec<f64>, eps_zero: f64) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        let pos_count = values.iter().filter(|&&x| x > eps_zero).count();
        let neg_count = values.iter().filter(|&&x| x < -eps_zero).count();
        let zero_count = values.len() - pos_count - neg_count;
        Spectrum {
            values,
            eps_zero,
            pos_count,
            zero_count,
            neg_count,
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn eps_zero(&self) -> f64 {
        self.eps_zero
    }

    pub fn pos_count(&self) -> usize {
        self.pos_count
    }

    pub fn zero_count(&self) -> usize {
        self.zero_count
    }

    /// Number of negative eigenvalues.
    pub fn neg_count(&self) -> usize {
        self.neg_count
    }

    /// Largest eigenvalue (the Perron root for a graph).
    pub fn max(&self) -> f64 {
        self.values[0]
    }

    pub fn min(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    /// `Σ λ_i^k`.
    pub fn moment(&self, k: i32) -> f64 {
        self.values.iter().map(|x| x.powi(k)).sum()
    }

    /// Largest componentwise deviation from another spectrum of equal length.
    pub fn max_deviation(&self, other: &[f64]) -> f64 {
        assert_eq!(self.values.len(), other.len(), "spectra differ in length");
        self.values
            .iter()
            .zip(other)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Positive and negative `r`-energies of one spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyPair {
    pub e_plus: f64,
    pub e_minus: f64,
    pub exponent: f64,
}

impl EnergyPair {
    pub fn min(&self) -> f64 {
        self.e_plus.min(self.e_minus)
    }
}

#[inline]
fn abs_pow(x: f64, r: f64) -> f64 {
    let a = x.abs();
    if r == r.trunc() && (1.0..=16.0).contains(&r) {
        a.powi(r as i32)
    } else {
        a.powf(r)
    }
}

/// Sums `|λ|^r` separately over positive- and negative-classified eigenvalues.
pub fn energy(spec: &Spectrum, r: f64) -> EnergyPair {
    energy_of_values(&spec.values, spec.eps_zero, r)
}

/// [`energy`] over a raw eigenvalue slice, for hot loops that avoid building
/// a [`Spectrum`].
pub fn energy_of_values(values: &[f64], eps_zero: f64, r: f64) -> EnergyPair {
    debug_assert!(r >= 1.0, "exponent must be at least 1");
    let mut e_plus = 0.0;
    let mut e_minus = 0.0;
    for &x in values {
        if x > eps_zero {
            e_plus += abs_pow(x, r);
        } else if x < -eps_zero {
            e_minus += abs_pow(x, r);
        }
    }
    EnergyPair {
        e_plus,
        e_minus,
        exponent: r,
    }
}

/// Positive `p`-energy of the path `P_n` from its cosine closed form.
pub fn path_positive_energy(n: usize, p: f64) -> f64 {
    (1..=n / 2)
        .map(|k| abs_pow(2.0 * (k as f64 * PI / (n as f64 + 1.0)).cos(), p))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilySpec};
    use crate::graph::Graph;
    use crate::spectral::eigenvalues;

    #[test]
    fn classification_counts() {
        let s = Spectrum::new(vec![-1.0, 1e-13, 2.0, -1e-10, 0.5]);
        assert_eq!(s.values(), &[2.0, 0.5, 1e-13, -1e-10, -1.0]);
        assert_eq!((s.pos_count(), s.zero_count(), s.neg_count()), (2, 2, 1));
    }

    #[test]
    fn tiny_eigenvalues_do_not_contribute() {
        let s = Spectrum::new(vec![1e-13, -1e-13]);
        let e = energy(&s, 1.0);
        assert_eq!((e.e_plus, e.e_minus), (0.0, 0.0));
    }

    #[test]
    fn complete_graph_negative_energy() {
        for n in 1..=12 {
            let e = energy(&eigenvalues(&Graph::complete(n).unwrap()).unwrap(), 3.0);
            assert!((e.e_minus - (n as f64 - 1.0)).abs() < 1e-9);
        }
    }

    #[test]
    fn star_and_square() {
        let s = eigenvalues(&build_family(FamilySpec::Star(3)).unwrap()).unwrap();
        let e = energy(&s, 3.0);
        let expect = 3.0 * 3f64.sqrt();
        assert!((e.e_plus - expect).abs() < 1e-9 && (e.e_minus - expect).abs() < 1e-9);
        let c4 = eigenvalues(&build_family(FamilySpec::Cycle(4)).unwrap()).unwrap();
        assert!((energy(&c4, 3.0).e_minus - 8.0).abs() < 1e-9);
    }

    #[test]
    fn path_closed_form() {
        assert!((path_positive_energy(4, 3.0) - 2.0 * 5f64.sqrt()).abs() < 1e-12);
        assert_eq!(path_positive_energy(1, 3.0), 0.0);
        assert!((path_positive_energy(5, 3.0) - (3f64.powf(1.5) + 1.0)).abs() < 1e-12);
        for n in 1..=30 {
            for p in [2.0, 2.5, 3.0, 4.0] {
                let num = energy(&eigenvalues(&Graph::path(n).unwrap()).unwrap(), p).e_plus;
                assert!((num - path_positive_energy(n, p)).abs() < 1e-8, "n={n} p={p}");
            }
            // second moment of the positive half is n - 1
            assert!((path_positive_energy(n, 2.0) - (n as f64 - 1.0)).abs() < 1e-9);
        }
    }
}
