use std::ops::RangeInclusive;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::{IdentityId, Tables};
use crate::error::{Error, Result};
use crate::par::{map_ordered, Execution};

/// Parameter bounds for one identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sweep {
    /// One parameter (`n` or `k`, depending on the identity).
    Single(RangeInclusive<usize>),
    /// Every valid `(n, k)` inside the box: `k ≤ n` for GOULD_13_32 and
    /// `n ≥ k + 1` for EQ3_CHAIN.
    Pairs { n: RangeInclusive<usize>, k: RangeInclusive<usize> },
}

impl Sweep {
    fn describe(&self, id: IdentityId) -> String {
        match self {
            Sweep::Single(r) => format!("{}<={}<={}", r.start(), id.params()[0], r.end()),
            Sweep::Pairs { n, k } => {
                let constraint = match id {
                    IdentityId::Eq3Chain => "n>=k+1",
                    _ => "k<=n",
                };
                format!("{}<=n<={}, {}<=k<={}, {constraint}", n.start(), n.end(), k.start(), k.end())
            }
        }
    }

    /// Parameter points in lexicographic order.
    fn points(&self, id: IdentityId) -> Vec<Vec<usize>> {
        match self {
            Sweep::Single(r) => r.clone().map(|x| vec![x]).collect(),
            Sweep::Pairs { n, k } => {
                let mut out = Vec::new();
                for nv in n.clone() {
                    let k_hi = match id {
                        IdentityId::Eq3Chain => (*k.end()).min(nv.saturating_sub(1)),
                        _ => (*k.end()).min(nv),
                    };
                    if id == IdentityId::Eq3Chain && nv == 0 {
                        continue;
                    }
                    for kv in *k.start()..=k_hi {
                        out.push(vec![nv, kv]);
                    }
                }
                out
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub params: Vec<(&'static str, usize)>,
    pub lhs: String,
    pub rhs: String,
}

impl Counterexample {
    fn sort_key(&self) -> Vec<usize> {
        self.params.iter().map(|&(_, v)| v).collect()
    }
}

struct Params<'a>(&'a [(&'static str, usize)]);

impl Serialize for Params<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (name, value) in self.0 {
            map.serialize_entry(name, &value.to_string())?;
        }
        map.end()
    }
}

impl Serialize for Counterexample {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("params", &Params(&self.params))?;
        map.serialize_entry("lhs", &self.lhs)?;
        map.serialize_entry("rhs", &self.rhs)?;
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub range: String,
    pub checked: usize,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

fn invalid(id: IdentityId, reason: impl Into<String>) -> Error {
    Error::InvalidSweep { id: id.name().to_string(), reason: reason.into() }
}

/// Rejects sweeps whose shape does not match the identity or whose bounds
/// are empty or outside the identity's domain.
pub fn validate(requests: &[(IdentityId, Sweep)]) -> Result<()> {
    for (id, sweep) in requests {
        let id = *id;
        let pairs = id.params().len() == 2;
        match sweep {
            Sweep::Single(_) if pairs => return Err(invalid(id, "expects an (n, k) sweep")),
            Sweep::Pairs { .. } if !pairs => {
                return Err(invalid(id, format!("expects a single {} range", id.params()[0])))
            }
            Sweep::Single(r) if r.is_empty() => return Err(invalid(id, "empty range")),
            Sweep::Pairs { n, k } => {
                if n.is_empty() || k.is_empty() {
                    return Err(invalid(id, "empty range"));
                }
                if id == IdentityId::Gould1332 && *n.start() == 0 {
                    return Err(invalid(id, "requires n >= 1"));
                }
            }
            Sweep::Single(_) => {}
        }
    }
    Ok(())
}

/// Highest `(first-kind, second-kind)` triangle rows the requests will read.
pub fn rows_required(requests: &[(IdentityId, Sweep)]) -> (usize, usize) {
    let mut rows = (0, 0);
    for (id, sweep) in requests {
        for p in sweep.points(*id) {
            let (a, b) = id.rows_needed(&p);
            rows = (rows.0.max(a), rows.1.max(b));
        }
    }
    rows
}

/// Runs each requested identity over its sweep with freshly built tables.
pub fn run_suite(requests: &[(IdentityId, Sweep)], exec: Execution) -> Result<Vec<IdentityReport>> {
    run_suite_on(requests, &mut Tables::new(), exec)
}

/// Like [`run_suite`] but reads (and extends) caller-supplied tables. Rows
/// already present are used as-is.
pub fn run_suite_on(
    requests: &[(IdentityId, Sweep)],
    tables: &mut Tables,
    exec: Execution,
) -> Result<Vec<IdentityReport>> {
    validate(requests)?;
    let (first, second) = rows_required(requests);
    tables.ensure_rows(first, second);
    let tables: &Tables = tables;

    let work: Vec<(usize, IdentityId, Vec<usize>)> = requests
        .iter()
        .enumerate()
        .flat_map(|(i, (id, sweep))| sweep.points(*id).into_iter().map(move |p| (i, *id, p)))
        .collect();
    let outcomes = map_ordered(&work, exec, |(_, id, p)| id.check(tables, p));

    let mut reports: Vec<IdentityReport> = requests
        .iter()
        .map(|(id, sweep)| IdentityReport {
            id: *id,
            range: sweep.describe(*id),
            checked: 0,
            status: Status::Pass,
            counterexamples: Vec::new(),
        })
        .collect();
    for ((i, id, p), check) in work.iter().zip(outcomes) {
        let report = &mut reports[*i];
        report.checked += 1;
        if !check.holds {
            report.counterexamples.push(Counterexample {
                params: id.params().iter().copied().zip(p.iter().copied()).collect(),
                lhs: check.lhs.to_string(),
                rhs: check.rhs.to_string(),
            });
        }
    }
    for report in &mut reports {
        report.counterexamples.sort_by_key(Counterexample::sort_key);
        if !report.counterexamples.is_empty() {
            report.status = Status::Fail;
        }
    }
    Ok(reports)
}
