use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{builtin_catalog, residual, Expected, Group, IdentityEntry, ParamDomain, Sampling};

const RANDOM_POINTS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    FlaggedDiscrepancy,
    FlaggedButPassing,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::FlaggedDiscrepancy => "flagged-discrepancy",
            Status::FlaggedButPassing => "flagged-but-passing",
        }
    }

    pub fn is_flagged(self) -> bool {
        matches!(self, Status::FlaggedDiscrepancy | Status::FlaggedButPassing)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub id: &'static str,
    pub group: Group,
    pub samples: usize,
    pub max_abs_residual: f64,
    pub worst_params: BTreeMap<&'static str, f64>,
    pub status: Status,
    pub tol: f64,
    /// First evaluation error, when any sample failed to evaluate.
    #[serde(skip)]
    pub diagnostic: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOptions {
    pub tol: f64,
    pub seed: u64,
    /// Worker threads; 0 picks the available parallelism.
    pub jobs: usize,
    pub group: Option<Group>,
    pub id: Option<String>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { tol: 1e-9, seed: 42, jobs: 0, group: None, id: None }
    }
}

fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

fn grid(d: &ParamDomain) -> Vec<f64> {
    let n = d.count.max(1);
    match d.sampling {
        Sampling::Points(v) => v.to_vec(),
        _ if n == 1 => vec![d.lo],
        Sampling::Linear => (0..n).map(|k| d.lo + (d.hi - d.lo) * k as f64 / (n - 1) as f64).collect(),
        Sampling::Log => {
            let (a, b) = (d.lo.ln(), d.hi.ln());
            (0..n).map(|k| (a + (b - a) * k as f64 / (n - 1) as f64).exp().clamp(d.lo, d.hi)).collect()
        }
    }
}

fn draw(d: &ParamDomain, rng: &mut ChaCha8Rng) -> f64 {
    let u: f64 = rng.gen();
    match d.sampling {
        Sampling::Log => (d.lo.ln() + u * (d.hi.ln() - d.lo.ln())).exp().clamp(d.lo, d.hi),
        _ => d.lo + u * (d.hi - d.lo),
    }
}

/// Grid product over all axes, then the seeded random points.
pub(crate) fn sample_points(entry: &IdentityEntry, seed: u64) -> Vec<Vec<f64>> {
    if entry.params.is_empty() {
        return vec![Vec::new()];
    }
    let mut points: Vec<Vec<f64>> = vec![Vec::new()];
    for d in &entry.params {
        let g = grid(d);
        points = points
            .iter()
            .flat_map(|p| {
                g.iter().map(move |&v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    if entry.params.iter().all(|d| !matches!(d.sampling, Sampling::Points(_))) {
        let mut rng = ChaCha8Rng::seed_from_u64(fnv1a(entry.id) ^ seed);
        for _ in 0..RANDOM_POINTS {
            points.push(entry.params.iter().map(|d| draw(d, &mut rng)).collect());
        }
    }
    points
}

pub fn verify_entry(entry: &IdentityEntry, tol: f64, seed: u64) -> VerificationReport {
    let tol = entry.tol_floor.map_or(tol, |f| f.max(tol));
    let points = sample_points(entry, seed);
    let mut worst = (0.0_f64, None::<&Vec<f64>>);
    let mut diagnostic = None;
    for p in &points {
        match residual(entry, p) {
            Ok(r) => {
                let m = r.norm();
                if m.is_nan() {
                    diagnostic.get_or_insert_with(|| format!("residual is NaN at {p:?}"));
                } else if m > worst.0 || worst.1.is_none() {
                    worst = (m, Some(p));
                }
            }
            Err(e) => {
                diagnostic.get_or_insert_with(|| format!("{e} at {p:?}"));
            }
        }
    }
    let worst_params = worst
        .1
        .map(|p| entry.params.iter().map(|d| d.name).zip(p.iter().copied()).collect())
        .unwrap_or_default();
    let within = worst.0 <= tol;
    let status = match (diagnostic.is_some(), entry.expected, within) {
        (true, _, _) => Status::Fail,
        (false, Expected::Holds, true) => Status::Pass,
        (false, Expected::Holds, false) => Status::Fail,
        (false, Expected::Flagged, true) => Status::FlaggedButPassing,
        (false, Expected::Flagged, false) => Status::FlaggedDiscrepancy,
    };
    VerificationReport {
        id: entry.id,
        group: entry.group,
        samples: points.len(),
        max_abs_residual: if diagnostic.is_some() && worst.1.is_none() { f64::NAN } else { worst.0 },
        worst_params,
        status,
        tol,
        diagnostic,
    }
}

/// Verifies the selected built-in entries; reports come back sorted by id.
pub fn verify_all(opts: &VerifyOptions) -> Vec<VerificationReport> {
    let selected: Vec<&IdentityEntry> = builtin_catalog()
        .iter()
        .filter(|e| opts.group.is_none_or(|g| e.group == g))
        .filter(|e| opts.id.as_deref().is_none_or(|id| e.id == id))
        .collect();
    let jobs = match opts.jobs {
        0 => thread::available_parallelism().map_or(1, |n| n.get()),
        n => n,
    }
    .min(selected.len().max(1));
    let next = AtomicUsize::new(0);
    let out = Mutex::new(Vec::with_capacity(selected.len()));
    thread::scope(|s| {
        for _ in 0..jobs {
            s.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                let Some(e) = selected.get(k) else { break };
                let r = verify_entry(e, opts.tol, opts.seed);
                out.lock().expect("report lock").push(r);
            });
        }
    });
    let mut reports = out.into_inner().expect("report lock");
    reports.sort_by(|a, b| a.id.cmp(b.id));
    reports
}
