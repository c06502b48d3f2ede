//! Subcommand implementations. Each builds a [`Document`]; the caller
//! renders it and derives the exit status from its violations.

use std::time::Instant;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};
use spectral_lab::enumeration::{enumerate_connected, enumerate_shard, CONNECTED_CLASS_COUNTS};
use spectral_lab::gadgets::table_entries;
use spectral_lab::graph6;
use spectral_lab::par::{self, Execution};
use spectral_lab::verify::{
    appendix_sign_claims, chain_checks, plan, run_unit, tabulated_cases, verify_configurations,
    verify_family_with, verify_table1, Side, VerificationReport, WorkUnit, TABLE_TOLERANCE,
};
use spectral_lab::enumeration::canonical_form;
use spectral_lab::FamilyKind;

use crate::cache::SpectrumCache;
use crate::checkpoint::{Checkpoint, RunKey};
use crate::config::{Range, RunConfig};
use crate::render::{to_value, Document};

fn timing(config: &RunConfig, start: Instant, extra: Value) -> Option<Value> {
    config.timing.then(|| {
        let mut t = json!({
            "wall_seconds": start.elapsed().as_secs_f64(),
            "threads": par::current_threads(),
        });
        if let (Value::Object(t), Value::Object(extra)) = (&mut t, extra) {
            t.extend(extra);
        }
        t
    })
}

pub struct VerifyArgs {
    pub side: Side,
    pub range: Range,
    pub exponent: f64,
    pub depth: Option<usize>,
    pub execution: Execution,
    pub checkpoint: Option<std::path::PathBuf>,
    pub bound_shift: f64,
}

pub fn verify(config: &RunConfig, args: &VerifyArgs) -> Result<Document> {
    let start = Instant::now();
    let Range { lo, hi } = args.range;
    if lo == 0 {
        bail!("orders start at 1");
    }
    let p = if args.side == Side::Positive { 3.0 } else { args.exponent };
    let units = plan(lo, hi, args.depth)?;
    let mut checkpoint = match &args.checkpoint {
        Some(path) => {
            let key = RunKey {
                side: format!("{:?}", args.side).to_lowercase(),
                exponent: p,
                n_lo: lo,
                n_hi: hi,
                depth: args.depth,
                bound_shift: args.bound_shift,
            };
            Some(Checkpoint::open(path, &key).with_context(|| format!("opening checkpoint {}", path.display()))?)
        }
        None => None,
    };
    let mut merged = VerificationReport::empty(args.side, p, lo, hi, args.bound_shift);
    let mut resumed = 0usize;
    let pending: Vec<WorkUnit> = match &checkpoint {
        Some(ck) => units
            .iter()
            .filter(|u| match ck.done.get(&u.id()) {
                Some(r) => {
                    merged.merge(r.clone());
                    resumed += 1;
                    false
                }
                None => true,
            })
            .cloned()
            .collect(),
        None => units.clone(),
    };
    log::info!("{} work units ({} from checkpoint)", units.len(), resumed);

    let mut failure: Option<anyhow::Error> = None;
    par::for_each_streamed(
        args.execution,
        &pending,
        |u| run_unit(args.side, p, args.bound_shift, u),
        |unit, result| match result {
            Ok(report) => {
                if let Some(ck) = checkpoint.as_mut() {
                    if let Err(e) = ck.record(&unit.id(), &report) {
                        failure.get_or_insert(anyhow::Error::new(e).context("writing checkpoint"));
                    }
                }
                log::debug!("unit {} done: {} graphs", unit.id(), report.graphs_checked);
                merged.merge(report);
            }
            Err(e) => {
                failure.get_or_insert(anyhow::Error::new(e).context(format!("unit {}", unit.id())));
            }
        },
    );
    if let Some(e) = failure {
        return Err(e);
    }

    let mut doc = Document::new(config);
    if let Value::Object(c) = &mut doc.config {
        c.insert("side".into(), to_value(&args.side));
        c.insert("depth".into(), to_value(&args.depth));
        if args.bound_shift != 0.0 {
            c.insert("bound_shift".into(), json!(args.bound_shift));
        }
    }
    doc.summary = json!({
        "holds": merged.holds(),
        "extension": merged.extension,
        "bounds": merged.bounds,
        "graphs_checked": merged.graphs_checked,
        "work_units": units.len(),
        "violations": merged.violations.len(),
        "equalities": merged.equalities.len(),
    });
    doc.counts = merged.counts.iter().map(to_value).collect();
    doc.violations = merged.violations.iter().map(to_value).collect();
    doc.minimizers = merged.minimizers.iter().map(to_value).collect();
    doc.rows = merged.equalities.iter().map(to_value).collect();
    doc.timing = timing(config, start, json!({"resumed_units": resumed}));
    Ok(doc)
}

pub fn table1(config: &RunConfig) -> Result<Document> {
    let start = Instant::now();
    let rows = verify_table1()?;
    let mut doc = Document::new(config);
    let max_dev = rows.iter().map(|r| r.max_spectrum_dev.max(r.energy_dev)).fold(0.0, f64::max);
    doc.summary = json!({
        "rows": rows.len(),
        "tolerance": TABLE_TOLERANCE,
        "max_deviation": max_dev,
        "failing": rows.iter().filter(|r| !r.pass).count(),
    });
    doc.violations = rows.iter().filter(|r| !r.pass).map(to_value).collect();
    doc.rows = rows.iter().map(to_value).collect();
    doc.timing = timing(config, start, json!({}));
    Ok(doc)
}

pub fn family(config: &RunConfig, kind: FamilyKind, range: Range, t: Option<Range>) -> Result<Document> {
    let start = Instant::now();
    let t_range = t.map(|r| (r.lo, r.hi));
    let mut cache = match &config.cache {
        Some(path) => {
            let c = SpectrumCache::open(path).with_context(|| format!("opening cache {}", path.display()))?;
            log::info!("cache {}: {} entries", c.path().display(), c.len());
            Some(c)
        }
        None => None,
    };
    let report = match cache.as_mut() {
        Some(c) => {
            let mut io_error = None;
            let r = verify_family_with(kind, range.lo, range.hi, t_range, |g| {
                c.spectrum(g).or_else(|e| match e {
                    crate::cache::CacheError::Spectral(s) => Err(s),
                    crate::cache::CacheError::Io(io) => {
                        // fall back to a direct computation and report the I/O failure afterwards
                        io_error.get_or_insert(io);
                        spectral_lab::eigenvalues(g)
                    }
                })
            });
            if let Some(e) = io_error {
                return Err(anyhow::Error::new(e).context("writing cache"));
            }
            r?
        }
        None => verify_family_with(kind, range.lo, range.hi, t_range, spectral_lab::eigenvalues)?,
    };
    let mut doc = Document::new(config);
    if let Value::Object(c) = &mut doc.config {
        c.insert("kind".into(), to_value(&kind));
        c.insert("t".into(), to_value(&t));
    }
    doc.summary = json!({
        "holds": report.holds(),
        "rows": report.rows.len(),
        "min_margin": report.min_margin(),
        "max_spectrum_dev": report.max_spectrum_dev(),
    });
    doc.violations = report.rows.iter().filter(|r| !r.pass).map(to_value).collect();
    doc.rows = report.rows.iter().map(to_value).collect();
    let extra = match &cache {
        Some(c) => json!({"cache_hits": c.hits, "cache_misses": c.misses}),
        None => json!({}),
    };
    doc.timing = timing(config, start, extra);
    Ok(doc)
}

pub fn bounds(config: &RunConfig, max_s: usize) -> Result<Document> {
    let start = Instant::now();
    let cases = tabulated_cases()?;
    let chains = chain_checks(max_s);
    let mut doc = Document::new(config);
    if let Value::Object(c) = &mut doc.config {
        c.insert("max_s".into(), json!(max_s));
    }
    let case_row = |c: &spectral_lab::verify::BoundCase| {
        json!({
            "kind": "case",
            "label": c.label(),
            "value": c.value,
            "paper_value": c.paper_value,
            "tolerance": c.tolerance,
            "pass": c.pass,
        })
    };
    let chain_row = |c: &spectral_lab::verify::ChainCheck| {
        json!({
            "kind": "chain",
            "label": c.name,
            "checked": c.checked,
            "failures": c.failures,
            "pass": c.holds(),
        })
    };
    doc.summary = json!({
        "cases": cases.len(),
        "chains": chains.len(),
        "inequalities_checked": chains.iter().map(|c| c.checked).sum::<usize>(),
    });
    doc.rows = cases.iter().map(case_row).chain(chains.iter().map(chain_row)).collect();
    doc.violations = doc.rows.iter().filter(|r| r["pass"] == json!(false)).cloned().collect();
    doc.timing = timing(config, start, json!({}));
    Ok(doc)
}

pub fn enumerate(config: &RunConfig, range: Range, depth: Option<usize>, execution: Execution) -> Result<Document> {
    let start = Instant::now();
    if range.lo == 0 {
        bail!("orders start at 1");
    }
    let units = plan(range.lo, range.hi, depth)?;
    let counted = par::map(execution, &units, |u| match u {
        WorkUnit::Order(n) => enumerate_connected(*n, |_| {}),
        WorkUnit::Shard(s) => enumerate_shard(s, |_| {}),
    });
    let mut per_order = std::collections::BTreeMap::<usize, u64>::new();
    for (u, c) in units.iter().zip(counted) {
        *per_order.entry(u.order()).or_default() += c?;
    }
    let mut doc = Document::new(config);
    for (&n, &classes) in &per_order {
        let expected = CONNECTED_CLASS_COUNTS.get(n - 1).copied();
        let row = json!({"n": n, "classes": classes, "expected": expected});
        if expected.is_some_and(|e| e != classes) {
            doc.violations.push(row.clone());
        }
        doc.counts.push(row);
    }
    doc.summary = json!({"total": per_order.values().sum::<u64>(), "work_units": units.len()});
    doc.timing = timing(config, start, json!({}));
    Ok(doc)
}

pub fn gadgets(config: &RunConfig) -> Result<Document> {
    let mut doc = Document::new(config);
    for e in table_entries() {
        let g = e.graph();
        doc.rows.push(json!({
            "name": e.name,
            "order": g.order(),
            "size": g.size(),
            "graph6": graph6::encode(&g),
            "canonical": canonical_form(&g),
        }));
    }
    doc.summary = json!({"entries": doc.rows.len()});
    Ok(doc)
}

pub fn appendix(config: &RunConfig, n_hi: usize) -> Result<Document> {
    let start = Instant::now();
    let claims = appendix_sign_claims(n_hi)?;
    let mut doc = Document::new(config);
    doc.summary = json!({"claims": claims.len(), "holding": claims.iter().filter(|c| c.holds()).count()});
    doc.violations = claims.iter().filter(|c| !c.holds()).map(to_value).collect();
    doc.rows = claims.iter().map(to_value).collect();
    doc.timing = timing(config, start, json!({}));
    Ok(doc)
}

pub fn witnesses(config: &RunConfig, seed: u64, samples: usize) -> Result<Document> {
    let start = Instant::now();
    let report = verify_configurations(seed, samples)?;
    let mut doc = Document::new(config);
    if let Value::Object(c) = &mut doc.config {
        c.insert("seed".into(), json!(seed));
        c.insert("samples".into(), json!(samples));
    }
    doc.summary = json!({"holds": report.holds(), "configurations": report.summaries.len()});
    for s in &report.summaries {
        doc.violations.extend(s.violations.iter().map(|w| json!({"configuration": s.configuration, "witness": w})));
        if let Some(w) = &s.tightest {
            doc.minimizers.push(json!({"configuration": s.configuration, "witness": w}));
        }
        doc.rows.push(json!({
            "configuration": s.configuration,
            "samples": s.samples,
            "excluded": s.excluded,
            "violations": s.violations.len(),
        }));
    }
    doc.timing = timing(config, start, json!({}));
    Ok(doc)
}
