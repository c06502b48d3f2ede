//! Negative 3-energy of the clique-like families and the spectrum structure
//! of subdivided stars, from closed forms and cross-checked numerically.

use serde::{Deserialize, Serialize};

use crate::family::{build_family, FamilyError, FamilyKind, FamilySpec};
use crate::graph::Graph;
use crate::spectral::{
    closed_form_spectrum, eigenvalues, energy, negative_bracket, poly_negative_root,
    quotient_char_poly, SpectralError, Spectrum,
};

use super::report::SLACK;
use super::VerifyError;

/// Largest order that is also solved numerically.
pub const NUMERIC_MAX_ORDER: usize = 40;
/// Closed-form and numeric spectra must agree componentwise to this.
pub const AGREEMENT_TOL: f64 = 1e-8;

/// Lower bound on `ℰ_3⁻` claimed for a family, as `n + offset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaBound {
    pub min_order: usize,
    pub offset: usize,
    /// Strict inequality.
    pub strict: bool,
}

/// The claimed bound for each family kind that carries one.
pub fn lemma_bound(kind: FamilyKind) -> Option<LemmaBound> {
    match kind {
        FamilyKind::CompleteMinusEdge => Some(LemmaBound {
            min_order: 5,
            offset: 1,
            strict: false,
        }),
        FamilyKind::CompletePlusPendant => Some(LemmaBound {
            min_order: 4,
            offset: 0,
            strict: false,
        }),
        FamilyKind::CliqueK2Gadget => Some(LemmaBound {
            min_order: 6,
            offset: 1,
            strict: true,
        }),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub spec: FamilySpec,
    pub label: String,
    pub order: usize,
    pub closed_e3_minus: f64,
    pub numeric_e3_minus: Option<f64>,
    /// Largest componentwise gap between closed-form and numeric spectra.
    pub spectrum_dev: Option<f64>,
    /// The single non-trivial negative quotient root, when there is one.
    pub negative_root: Option<f64>,
    pub bound: Option<f64>,
    pub margin: Option<f64>,
    /// Whether the numeric spectrum has the predicted multiset structure.
    pub structure_ok: Option<bool>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub kind: FamilyKind,
    pub rows: Vec<FamilyRow>,
}

impl FamilyReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn min_margin(&self) -> Option<f64> {
        self.rows.iter().filter_map(|r| r.margin).min_by(f64::total_cmp)
    }

    pub fn max_spectrum_dev(&self) -> f64 {
        self.rows
            .iter()
            .filter_map(|r| r.spectrum_dev)
            .fold(0.0, f64::max)
    }
}

/// Checks a family over `n_lo..=n_hi`. For subdivided stars `t` ranges over
/// `t_range` (clipped to `1..n`) or every admissible value.
pub fn verify_family(
    kind: FamilyKind,
    n_lo: usize,
    n_hi: usize,
    t_range: Option<(usize, usize)>,
) -> Result<FamilyReport, VerifyError> {
    verify_family_with(kind, n_lo, n_hi, t_range, eigenvalues)
}

/// [`verify_family`] with the numeric spectra supplied by `spectrum_of`,
/// e.g. from a cache.
pub fn verify_family_with<F>(
    kind: FamilyKind,
    n_lo: usize,
    n_hi: usize,
    t_range: Option<(usize, usize)>,
    mut spectrum_of: F,
) -> Result<FamilyReport, VerifyError>
where
    F: FnMut(&Graph) -> Result<Spectrum, SpectralError>,
{
    if n_lo > n_hi {
        return Err(VerifyError::Range { lo: n_lo, hi: n_hi });
    }
    let mut specs = Vec::new();
    match kind {
        FamilyKind::SubdividedStar => {
            for n in n_lo.max(2)..=n_hi {
                let (lo, hi) = t_range.unwrap_or((1, n - 1));
                for t in lo.max(1)..=hi.min(n - 1) {
                    specs.push(FamilySpec::SubdividedStar { n, t });
                }
            }
        }
        _ => {
            let lb = lemma_bound(kind).ok_or(VerifyError::Unsupported(kind))?;
            if n_lo < lb.min_order {
                return Err(VerifyError::LemmaRange {
                    kind,
                    n: n_lo,
                    min: lb.min_order,
                });
            }
            for n in n_lo..=n_hi {
                specs.push(match kind {
                    FamilyKind::CompleteMinusEdge => FamilySpec::CompleteMinusEdge(n),
                    FamilyKind::CompletePlusPendant => FamilySpec::CompletePlusPendant(n),
                    _ => FamilySpec::CliqueK2Gadget(n),
                });
            }
        }
    }
    let rows = specs
        .into_iter()
        .map(|spec| family_row(spec, &mut spectrum_of))
        .collect::<Result<_, _>>()?;
    Ok(FamilyReport { kind, rows })
}

/// [`verify_family`] over every admissible parameter in the range.
pub fn verify_family_lemma(kind: FamilyKind, n_lo: usize, n_hi: usize) -> Result<FamilyReport, VerifyError> {
    verify_family(kind, n_lo, n_hi, None)
}

fn family_row<F>(spec: FamilySpec, spectrum_of: &mut F) -> Result<FamilyRow, VerifyError>
where
    F: FnMut(&Graph) -> Result<Spectrum, SpectralError>,
{
    let order = spec.order();
    let closed = closed_form_spectrum(spec)?;
    let closed_e = energy(&closed, 3.0).e_minus;
    let numeric = if order <= NUMERIC_MAX_ORDER {
        Some(spectrum_of(&build_family(spec)?)?)
    } else {
        None
    };
    let spectrum_dev = numeric.as_ref().map(|s| closed.max_deviation(s.values()));
    let numeric_e = numeric.as_ref().map(|s| energy(s, 3.0).e_minus);

    let mut pass = spectrum_dev.is_none_or(|d| d <= AGREEMENT_TOL);
    let (mut bound, mut margin, mut negative_root, mut structure_ok) = (None, None, None, None);
    match spec {
        FamilySpec::SubdividedStar { n, t } => {
            let ok = numeric.as_ref().map(|s| subdivided_star_structure(s, n, t));
            pass &= ok.unwrap_or(true);
            structure_ok = ok;
        }
        _ => {
            let lb = lemma_bound(spec.kind()).ok_or(FamilyError::Unsupported(spec))?;
            let b = (order + lb.offset) as f64;
            // both evaluations must satisfy the bound
            let e = numeric_e.map_or(closed_e, |x| x.min(closed_e));
            let m = e - b;
            pass &= if lb.strict { m > SLACK } else { m >= -SLACK };
            let poly = quotient_char_poly(spec)?.deflated();
            negative_root = Some(poly_negative_root(&poly, negative_bracket(order))?);
            bound = Some(b);
            margin = Some(m);
        }
    }
    Ok(FamilyRow {
        spec,
        label: spec.to_string(),
        order,
        closed_e3_minus: closed_e,
        numeric_e3_minus: numeric_e,
        spectrum_dev,
        negative_root,
        bound,
        margin,
        structure_ok,
        pass,
    })
}

/// The numeric spectrum equals `{±√x_1, ±√x_2, 0^{n−t−1}, 1^{t−1}, (−1)^{t−1}}`
/// where `x_1, x_2` solve `x² − (n+1)x + (n−t) = 0`.
pub fn subdivided_star_structure(s: &Spectrum, n: usize, t: usize) -> bool {
    let (nf, tf) = (n as f64, t as f64);
    let disc = ((nf + 1.0) * (nf + 1.0) - 4.0 * (nf - tf)).sqrt();
    let x1 = (nf + 1.0 + disc) / 2.0;
    let x2 = (nf - tf) / x1;
    let mut expected = vec![x1.sqrt(), x2.sqrt(), -x2.sqrt(), -x1.sqrt()];
    expected.extend(std::iter::repeat_n(0.0, n - t - 1));
    expected.extend(std::iter::repeat_n(1.0, t - 1));
    expected.extend(std::iter::repeat_n(-1.0, t - 1));
    expected.sort_by(|a, b| b.total_cmp(a));
    let count = |v: f64| s.values().iter().filter(|&&x| (x - v).abs() <= AGREEMENT_TOL).count();
    let count_expected = |v: f64| expected.iter().filter(|&&x| (x - v).abs() <= AGREEMENT_TOL).count();
    s.len() == expected.len()
        && s.max_deviation(&expected) <= AGREEMENT_TOL
        && [0.0, 1.0, -1.0].iter().all(|&v| count(v) == count_expected(v))
}
