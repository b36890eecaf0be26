//! Family sweeps and the append-only JSON-lines catalog.
//!
//! A [`SearchConfig`] expands to a list of canonical expressions. Each point
//! is analyzed independently on a worker pool and written back in grid
//! order by a single appender, so an interrupted sweep followed by a resume
//! produces the same bytes as an uninterrupted one.

use std::collections::{BTreeMap, HashSet};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Read, Seek, Write};
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;

use serde::{Deserialize, Serialize};

use crate::chartab::character_table;
use crate::dsl::parse_group_expr;
use crate::error::{Error, Result};
use crate::group::DEFAULT_BOUND;
use crate::vanishing::{classify_with_profile, CaseLabel, VanishingProfile};

fn default_cap() -> u64 {
    DEFAULT_BOUND as u64
}

fn default_workers() -> usize {
    1
}

fn default_action() -> String {
    "maxker".into()
}

/// Every `sdp(module, actor, action)` for the listed modules and actors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyGrid {
    pub actors: Vec<String>,
    pub modules: Vec<String>,
    #[serde(default = "default_action")]
    pub action: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchConfig {
    #[serde(default = "default_cap")]
    pub order_cap: u64,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_workers")]
    pub workers: usize,
    #[serde(default)]
    pub families: Vec<FamilyGrid>,
    /// Extra points given verbatim.
    #[serde(default)]
    pub exprs: Vec<String>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            order_cap: default_cap(),
            seed: 0,
            workers: default_workers(),
            families: Vec::new(),
            exprs: Vec::new(),
        }
    }
}

impl SearchConfig {
    pub fn from_toml(text: &str) -> Result<SearchConfig> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    /// Grid points in order: families first, modules outermost, then the
    /// explicit expressions. Duplicates are dropped after canonicalization.
    pub fn points(&self) -> Vec<String> {
        let raw = self
            .families
            .iter()
            .flat_map(|f| {
                f.modules.iter().flat_map(move |m| {
                    f.actors
                        .iter()
                        .map(move |a| format!("sdp({m},{a},{})", f.action))
                })
            })
            .chain(self.exprs.iter().cloned());
        let mut seen = HashSet::new();
        raw.map(|text| canonical_key(&text))
            .filter(|key| seen.insert(key.clone()))
            .collect()
    }
}

/// Canonical printed form when `text` parses, else the trimmed text.
pub fn canonical_key(text: &str) -> String {
    parse_group_expr(text).map_or_else(|_| text.trim().to_string(), |e| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordStatus {
    Ok,
    Skipped,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogRecord {
    pub expr: String,
    pub status: RecordStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vcs: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<CaseLabel>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failed_checks: Vec<String>,
    pub nonabelian_complement: bool,
    pub finding: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub seed: u64,
}

impl CatalogRecord {
    fn bare(expr: &str, status: RecordStatus, seed: u64) -> CatalogRecord {
        CatalogRecord {
            expr: expr.to_string(),
            status,
            order: None,
            vcs: None,
            case: None,
            failed_checks: Vec::new(),
            nonabelian_complement: false,
            finding: false,
            reason: None,
            seed,
        }
    }

    fn failure(expr: &str, status: RecordStatus, order: Option<u64>, reason: String, seed: u64) -> Self {
        CatalogRecord {
            order,
            reason: Some(reason),
            ..CatalogRecord::bare(expr, status, seed)
        }
    }
}

/// Analyzes one grid point. Never fails: problems become the record's reason.
pub fn evaluate_point(expr: &str, order_cap: u64, seed: u64) -> CatalogRecord {
    let parsed = match parse_group_expr(expr) {
        Ok(e) => e,
        Err(e) => return CatalogRecord::failure(expr, RecordStatus::Error, None, e.to_string(), seed),
    };
    let order = parsed.order();
    match order {
        Some(o) if o <= order_cap => {}
        _ => {
            let reason = match order {
                Some(o) => format!("order {o} exceeds the cap {order_cap}"),
                None => "order overflows 64 bits".to_string(),
            };
            return CatalogRecord::failure(expr, RecordStatus::Skipped, order, reason, seed);
        }
    }
    let analyzed = parsed.build(order_cap as usize).and_then(|g| {
        let profile = VanishingProfile::from_table(&character_table(&g)?);
        Ok((profile.clone(), classify_with_profile(&g, &profile, seed)))
    });
    match analyzed {
        Err(e) => CatalogRecord::failure(expr, RecordStatus::Error, order, format!("{}: {e}", e.kind()), seed),
        Ok((profile, result)) => {
            let nonabelian = result.has_nonabelian_complement();
            let finding = profile.vcs.len() == 1
                && (matches!(result.case, CaseLabel::Unclassified | CaseLabel::TwoPrimeFrobenius) || nonabelian);
            CatalogRecord {
                order,
                vcs: Some(profile.vcs),
                case: Some(result.case),
                failed_checks: result.failed_checks().iter().map(|c| c.name.clone()).collect(),
                nonabelian_complement: nonabelian,
                finding,
                ..CatalogRecord::bare(expr, RecordStatus::Ok, seed)
            }
        }
    }
}

/// Outcome of one [`run_search`] call.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchSummary {
    pub grid_points: usize,
    pub already_present: usize,
    pub appended: usize,
    pub findings: Vec<String>,
}

/// Keys already in the catalog. A trailing line without a newline is an
/// interrupted write and is cut off.
fn load_existing(path: &Path) -> Result<HashSet<String>> {
    let mut keys = HashSet::new();
    let mut file = match OpenOptions::new().read(true).write(true).open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(keys),
        Err(e) => return Err(e.into()),
    };
    let mut content = Vec::new();
    file.read_to_end(&mut content)?;
    let complete = content.iter().rposition(|&b| b == b'\n').map_or(0, |i| i + 1);
    if complete < content.len() {
        file.set_len(complete as u64)?;
    }
    for (i, line) in BufReader::new(&content[..complete]).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let value: serde_json::Value = serde_json::from_str(&line)
            .map_err(|e| Error::Io(format!("catalog line {}: {e}", i + 1)))?;
        match value.get("expr").and_then(|v| v.as_str()) {
            Some(expr) => keys.insert(expr.to_string()),
            None => return Err(Error::Io(format!("catalog line {} has no expr", i + 1))),
        };
    }
    Ok(keys)
}

/// Runs every grid point not yet in the catalog at `path` and appends one
/// line per point, in grid order. `bound` further limits the order cap.
pub fn run_search(config: &SearchConfig, path: &Path, bound: usize) -> Result<SearchSummary> {
    let existing = load_existing(path)?;
    let points = config.points();
    let todo: Vec<&String> = points.iter().filter(|p| !existing.contains(*p)).collect();
    let mut summary = SearchSummary {
        grid_points: points.len(),
        already_present: points.len() - todo.len(),
        ..SearchSummary::default()
    };
    if todo.is_empty() {
        return Ok(summary);
    }
    let cap = config.order_cap.min(bound as u64);
    let mut out = OpenOptions::new().create(true).append(true).open(path)?;
    out.seek(std::io::SeekFrom::End(0))?;
    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel();
    std::thread::scope(|scope| -> Result<()> {
        for _ in 0..config.workers.clamp(1, todo.len()) {
            let tx = tx.clone();
            let (next, todo) = (&next, &todo);
            scope.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(expr) = todo.get(i) else { break };
                if tx.send((i, evaluate_point(expr, cap, config.seed))).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        let mut pending = BTreeMap::new();
        let mut written = 0;
        for (i, record) in rx {
            pending.insert(i, record);
            while let Some(record) = pending.remove(&written) {
                append(&mut out, &record)?;
                if record.finding {
                    summary.findings.push(record.expr.clone());
                }
                written += 1;
            }
        }
        summary.appended = written;
        Ok(())
    })?;
    Ok(summary)
}

fn append(out: &mut File, record: &CatalogRecord) -> Result<()> {
    let mut line = serde_json::to_string(record).expect("records serialize");
    line.push('\n');
    out.write_all(line.as_bytes())?;
    out.flush()?;
    Ok(())
}
