//! Exhaustive checks of the signed-energy bounds over every connected graph
//! of a given order.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::enumeration::{enumerate_connected, enumerate_shard, shard_enumeration, EnumShard};
use crate::graph::Graph;
use crate::par::{self, Execution};
use crate::spectral::{energy_of_values, path_positive_energy, JacobiWorkspace, EPS_ZERO};

use super::report::{
    Bound, EnergyReport, Exceptional, Finding, Margins, OrderCount, Side, TopMargins,
    VerificationReport, EQUALITY_TOL, SLACK,
};
use super::VerifyError;

/// Largest order the exhaustive claims cover.
pub const EXHAUSTIVE_MAX_ORDER: usize = 10;

/// Orders up to this run as a single unit; larger ones are sharded.
const WHOLE_ORDER_MAX: usize = 6;
/// Deepest default shard level (112 shards).
const DEFAULT_DEPTH_CAP: usize = 6;

/// How an exhaustive run is executed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExhaustiveOptions {
    pub execution: Execution,
    /// Shard depth for orders that are split; `None` picks a default.
    pub shard_depth: Option<usize>,
    /// Added to every bound. Only for exercising the failure path.
    pub bound_shift: f64,
}

impl Default for ExhaustiveOptions {
    fn default() -> Self {
        ExhaustiveOptions {
            execution: Execution::Parallel,
            shard_depth: None,
            bound_shift: 0.0,
        }
    }
}

/// Smallest piece of an exhaustive run: a whole order or one shard of it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum WorkUnit {
    Order(usize),
    Shard(EnumShard),
}

impl WorkUnit {
    pub fn order(&self) -> usize {
        match self {
            WorkUnit::Order(n) => *n,
            WorkUnit::Shard(s) => s.n,
        }
    }

    /// Stable identifier, used as the checkpoint key.
    pub fn id(&self) -> String {
        match self {
            WorkUnit::Order(n) => format!("{n}"),
            WorkUnit::Shard(s) => format!("{}/{}", s.n, s.id()),
        }
    }
}

fn check_range(n_lo: usize, n_hi: usize, p: f64) -> Result<(), VerifyError> {
    if n_lo == 0 || n_lo > n_hi {
        return Err(VerifyError::Range { lo: n_lo, hi: n_hi });
    }
    if n_hi > EXHAUSTIVE_MAX_ORDER {
        log::warn!("exhaustive range extends to n = {n_hi}, beyond {EXHAUSTIVE_MAX_ORDER}");
    }
    if !(p.is_finite() && p >= 1.0) {
        return Err(VerifyError::Exponent(p));
    }
    Ok(())
}

/// Default split depth for order `n`, or `None` to run it whole.
pub fn default_depth(n: usize) -> Option<usize> {
    (n > WHOLE_ORDER_MAX).then(|| (n - 3).min(DEFAULT_DEPTH_CAP))
}

/// Work units covering every order in `n_lo..=n_hi`, in a fixed order.
pub fn plan(n_lo: usize, n_hi: usize, depth: Option<usize>) -> Result<Vec<WorkUnit>, VerifyError> {
    let mut units = Vec::new();
    for n in n_lo..=n_hi {
        let d = match depth {
            Some(d) if d >= 1 && d < n => Some(d),
            Some(_) => None,
            None => default_depth(n),
        };
        match d {
            None => units.push(WorkUnit::Order(n)),
            Some(d) => units.extend(shard_enumeration(n, d)?.into_iter().map(WorkUnit::Shard)),
        }
    }
    Ok(units)
}

/// Per-graph evaluation shared by every unit of a run.
pub struct Checker {
    side: Side,
    p: f64,
    shift: f64,
    bounds: Vec<Bound>,
    ws: JacobiWorkspace,
    values: Vec<f64>,
    path_plus: BTreeMap<usize, f64>,
    report: VerificationReport,
    top: BTreeMap<(usize, Bound), TopMargins>,
}

impl Checker {
    pub fn new(side: Side, p: f64, n_lo: usize, n_hi: usize, shift: f64) -> Checker {
        Checker {
            side,
            p,
            shift,
            bounds: Bound::active(side, p),
            ws: JacobiWorkspace::new(),
            values: Vec::new(),
            path_plus: BTreeMap::new(),
            report: VerificationReport::empty(side, p, n_lo, n_hi, shift),
            top: BTreeMap::new(),
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn check(&mut self, g: &Graph) -> Result<(), VerifyError> {
        let n = g.order();
        self.ws.adjacency_eigenvalues(g, &mut self.values)?;
        let e = energy_of_values(&self.values, EPS_ZERO, self.p);
        let p = self.p;
        let path_plus = *self
            .path_plus
            .entry(n)
            .or_insert_with(|| path_positive_energy(n, p));
        let margins = Margins::new(n, &e, path_plus, self.shift);
        let exc = Exceptional::classify(n, g.size());

        self.report.graphs_checked += 1;
        match self.report.counts.last_mut() {
            Some(c) if c.n == n => c.classes += 1,
            _ => self.report.counts.push(OrderCount { n, classes: 1 }),
        }

        let mut full: Option<EnergyReport> = None;
        for &b in &self.bounds {
            let margin = margins.get(b);
            let exempt = b.exempt(exc);
            let violated = !exempt && margin < -SLACK;
            let equal = margin.abs() <= EQUALITY_TOL;
            let top = self.top.entry((n, b)).or_default();
            let minimizer = !exempt && top.admits(margin);
            if !(violated || equal || minimizer) {
                continue;
            }
            let report = full
                .get_or_insert_with(|| EnergyReport::with_margins(g, &e, &margins))
                .clone();
            let finding = Finding { bound: b, margin, report };
            if violated {
                self.report.violations.push(finding.clone());
            }
            if equal {
                self.report.equalities.push(finding.clone());
            }
            if minimizer {
                top.insert(finding);
            }
        }
        Ok(())
    }

    pub fn finish(mut self) -> VerificationReport {
        for (_, t) in std::mem::take(&mut self.top) {
            self.report.minimizers.extend(t.into_vec());
        }
        self.report.counts.sort_by_key(|c| c.n);
        let mut merged: Vec<OrderCount> = Vec::new();
        for c in self.report.counts.drain(..) {
            match merged.last_mut() {
                Some(last) if last.n == c.n => last.classes += c.classes,
                _ => merged.push(c),
            }
        }
        self.report.counts = merged;
        self.report.normalize();
        self.report
    }
}

/// Checks every graph of one work unit.
pub fn run_unit(side: Side, p: f64, shift: f64, unit: &WorkUnit) -> Result<VerificationReport, VerifyError> {
    let n = unit.order();
    let start = Instant::now();
    let mut checker = Checker::new(side, p, n, n, shift);
    let mut failure = None;
    let mut visit = |g: &Graph| {
        if failure.is_none() {
            if let Err(e) = checker.check(g) {
                failure = Some(e);
            }
        }
    };
    match unit {
        WorkUnit::Order(n) => enumerate_connected(*n, &mut visit)?,
        WorkUnit::Shard(s) => enumerate_shard(s, &mut visit)?,
    };
    if let Some(e) = failure {
        return Err(e);
    }
    let mut report = checker.finish();
    report.wall_time = Some(start.elapsed().as_secs_f64());
    Ok(report)
}

/// Runs every unit (in parallel when requested) and merges the results.
pub fn verify_exhaustive(
    side: Side,
    n_lo: usize,
    n_hi: usize,
    p: f64,
    opts: &ExhaustiveOptions,
) -> Result<VerificationReport, VerifyError> {
    let p = if side == Side::Positive { 3.0 } else { p };
    check_range(n_lo, n_hi, p)?;
    let start = Instant::now();
    let units = plan(n_lo, n_hi, opts.shard_depth)?;
    let parts = par::map(opts.execution, &units, |u| run_unit(side, p, opts.bound_shift, u));
    let mut report = VerificationReport::empty(side, p, n_lo, n_hi, opts.bound_shift);
    for part in parts {
        report.merge(part?);
    }
    report.wall_time = Some(start.elapsed().as_secs_f64());
    Ok(report)
}

/// Exhaustive negative-energy check over all connected graphs with
/// `n_lo <= n <= n_hi`: `ℰ_p⁻ >= n - 1` always, `ℰ_p⁻ >= n` unless complete
/// or `P_3` (for `p >= 3`), and `min(ℰ_2⁺, ℰ_2⁻) >= n - 1` for `p = 2`.
pub fn verify_negative(n_lo: usize, n_hi: usize, p: f64) -> Result<VerificationReport, VerifyError> {
    verify_exhaustive(Side::Negative, n_lo, n_hi, p, &ExhaustiveOptions::default())
}

/// Exhaustive positive-energy check: `ℰ_3⁺ >= ℰ_3⁺(P_n)` and
/// `ℰ_3⁺ >= (√5/2) n` unless `K_1`, `K_2` or `P_3`.
pub fn verify_positive(n_lo: usize, n_hi: usize) -> Result<VerificationReport, VerifyError> {
    verify_exhaustive(Side::Positive, n_lo, n_hi, 3.0, &ExhaustiveOptions::default())
}
