use std::f64::consts::PI;

use crate::family::{FamilyError, FamilySpec};

use super::{quotient_char_poly, Spectrum, SpectralError};

/// Spectrum of a family member assembled from closed forms.
///
/// Paths and cycles use the `2cos` formulas; the clique-like families and the
/// subdivided star combine the roots of their quotient polynomial with the
/// residual eigenvalues outside the quotient.
pub fn closed_form_spectrum(spec: FamilySpec) -> Result<Spectrum, SpectralError> {
    let spec = spec.normalized();
    spec.validate_parameters()?;
    let values = match spec {
        FamilySpec::Path(n) => (1..=n)
            .map(|k| 2.0 * (k as f64 * PI / (n as f64 + 1.0)).cos())
            .collect(),
        FamilySpec::Cycle(n) => (0..n)
            .map(|k| 2.0 * (2.0 * PI * k as f64 / n as f64).cos())
            .collect(),
        FamilySpec::Complete(n) => {
            let mut v = vec![n as f64 - 1.0];
            v.extend(std::iter::repeat_n(-1.0, n - 1));
            v
        }
        FamilySpec::Star(n) => {
            let s = (n as f64).sqrt();
            let mut v = vec![s, -s];
            v.extend(std::iter::repeat_n(0.0, n - 1));
            v
        }
        FamilySpec::CompleteMinusEdge(n) => {
            // explicit roots of λ² − (n−3)λ − (2n−4) alongside the zero root
            let nf = n as f64;
            let disc = (nf * nf + 2.0 * nf - 7.0).sqrt();
            let mut v = vec![(nf - 3.0 + disc) / 2.0, 0.0, (nf - 3.0 - disc) / 2.0];
            v.extend(std::iter::repeat_n(-1.0, n - 3));
            v
        }
        FamilySpec::CompletePlusPendant(_)
        | FamilySpec::CliqueK2Gadget(_)
        | FamilySpec::SubdividedStar { .. } => {
            let poly = quotient_char_poly(spec)?;
            let mut v = poly.real_roots();
            for &(x, mult) in &poly.residual {
                v.extend(std::iter::repeat_n(x, mult));
            }
            v
        }
        FamilySpec::Gadget(_) => return Err(FamilyError::Unsupported(spec).into()),
    };
    debug_assert_eq!(values.len(), spec.order());
    Ok(Spectrum::new(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::build_family;
    use crate::spectral::{eigenvalues, energy};

    fn assert_matches_numeric(spec: FamilySpec) {
        let closed = closed_form_spectrum(spec).unwrap();
        let numeric = eigenvalues(&build_family(spec).unwrap()).unwrap();
        let dev = closed.max_deviation(numeric.values());
        assert!(dev <= 1e-8, "{spec}: deviation {dev:e}");
    }

    #[test]
    fn agrees_with_eigensolver_up_to_order_40() {
        for n in 1..=40 {
            assert_matches_numeric(FamilySpec::Path(n));
            assert_matches_numeric(FamilySpec::Complete(n));
            if n < 40 {
                assert_matches_numeric(FamilySpec::Star(n));
            }
            if n >= 3 {
                assert_matches_numeric(FamilySpec::Cycle(n));
                assert_matches_numeric(FamilySpec::CompleteMinusEdge(n));
                assert_matches_numeric(FamilySpec::CompletePlusPendant(n));
            }
            if n >= 5 {
                assert_matches_numeric(FamilySpec::CliqueK2Gadget(n));
            }
        }
        for n in 2..=20 {
            for t in 1..n {
                assert_matches_numeric(FamilySpec::SubdividedStar { n, t });
            }
        }
    }

    #[test]
    fn complete_minus_edge_negative_part() {
        let s = closed_form_spectrum(FamilySpec::CompleteMinusEdge(5)).unwrap();
        let neg: Vec<f64> = s.values().iter().copied().filter(|&x| x < 0.0).collect();
        let l2 = (2.0 - 28f64.sqrt()) / 2.0;
        assert_eq!(neg.len(), 3);
        assert!((neg[0] + 1.0).abs() < 1e-15 && (neg[1] + 1.0).abs() < 1e-15);
        assert!((neg[2] - l2).abs() < 1e-12);
        assert!((l2 + 1.6458).abs() < 1e-4);
        let e = energy(&s, 3.0).e_minus;
        assert!((e - (2.0 + l2.abs().powi(3))).abs() < 1e-12);
    }

    #[test]
    fn subdivided_star_single_subdivision() {
        let s = closed_form_spectrum(FamilySpec::SubdividedStar { n: 3, t: 1 }).unwrap();
        let a = (2.0 + 2f64.sqrt()).sqrt();
        let b = (2.0 - 2f64.sqrt()).sqrt();
        let expect = [a, b, 0.0, -b, -a];
        assert!(s.max_deviation(&expect) < 1e-12);
    }

    #[test]
    fn rejects_degenerate_parameters() {
        assert!(closed_form_spectrum(FamilySpec::SubdividedStar { n: 3, t: 3 }).is_err());
        assert!(closed_form_spectrum(FamilySpec::Gadget(3)).is_err());
    }

    #[test]
    fn zero_subdivisions_is_the_star() {
        let s = closed_form_spectrum(FamilySpec::SubdividedStar { n: 4, t: 0 }).unwrap();
        assert!(s.max_deviation(&[2.0, 0.0, 0.0, 0.0, -2.0]) < 1e-12);
        let g = build_family(FamilySpec::SubdividedStar { n: 4, t: 0 }).unwrap();
        assert_eq!(g, build_family(FamilySpec::Star(4)).unwrap());
    }
}
