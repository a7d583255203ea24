use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::par;
use crate::report::VerificationReport;
use crate::ring::DynSeries;

use super::catalog::{catalog, lookup, Filter, IdentityEntry, Status};
use super::recipe::Recipe;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROVED_MISMATCH: i32 = 2;
pub const EXIT_CONJECTURE_MISMATCH: i32 = 3;
pub const EXIT_USAGE: i32 = 4;

fn eval_side(id: &str, side: &str, r: &Recipe, order: i64) -> Result<DynSeries> {
    r.eval(order).map_err(|e| Error::Evaluation {
        context: format!("{id} {side}"),
        source: Box::new(e),
    })
}

/// Evaluates both sides of `entry` through `order` and compares them.
pub fn verify_entry(entry: &IdentityEntry, order: i64) -> Result<VerificationReport> {
    if order < 0 {
        return Err(Error::InvalidArgument(format!("order must be non-negative, got {order}")));
    }
    let start = Instant::now();
    let lhs = eval_side(&entry.id, "lhs", &entry.lhs, order)?;
    let rhs = eval_side(&entry.id, "rhs", &entry.rhs, order)?;
    let mut report = VerificationReport::compare(entry.id.clone(), &lhs, &rhs, order)?;
    if let Some(r) = entry.reading {
        report = report.with_reading(r.name);
    }
    Ok(report.with_elapsed(start.elapsed().as_millis() as u64))
}

pub fn verify(id: &str, order: i64) -> Result<VerificationReport> {
    verify_entry(&lookup(id)?, order)
}

/// One line of a run: the entry's status and either its report or the
/// evaluation error.
#[derive(Clone, Debug, Serialize)]
pub struct RunItem {
    pub id: String,
    pub status: &'static str,
    #[serde(skip)]
    pub outcome: std::result::Result<VerificationReport, Error>,
}

impl RunItem {
    pub fn passed(&self) -> bool {
        matches!(&self.outcome, Ok(r) if r.full_agreement())
    }
}

#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub items: Vec<RunItem>,
    pub exit_code: i32,
}

impl RunOutcome {
    pub fn reports(&self) -> Vec<&VerificationReport> {
        self.items.iter().filter_map(|i| i.outcome.as_ref().ok()).collect()
    }

    pub fn failures(&self) -> Vec<&RunItem> {
        self.items.iter().filter(|i| !i.passed()).collect()
    }
}

/// Verifies every catalog entry admitted by `filter` at `order`.
pub fn run_all(order: i64, filter: Filter) -> RunOutcome {
    run_entries(&catalog(), order, filter)
}

/// As [`run_all`] over an explicit entry list. Entries are verified
/// concurrently; items come back in list order.
///
/// Exit code 2 if a proved entry fails, else 3 if a conjectural one does,
/// else 0. Entries sharing a reading group count as one: the group fails only
/// when no member agrees.
pub fn run_entries(entries: &[IdentityEntry], order: i64, filter: Filter) -> RunOutcome {
    let chosen: Vec<&IdentityEntry> = entries.iter().filter(|e| filter.admits(e.status)).collect();
    let items = par::map_slice(&chosen, |e| RunItem {
        id: e.id.clone(),
        status: e.status.name(),
        outcome: verify_entry(e, order),
    });
    let mut groups: BTreeMap<&str, (Status, bool)> = BTreeMap::new();
    let mut proved_bad = false;
    let mut conj_bad = false;
    for (e, item) in chosen.iter().zip(&items) {
        match e.reading {
            Some(r) => {
                let g = groups.entry(r.group).or_insert((e.status, false));
                g.1 |= item.passed();
                if e.status == Status::Proved {
                    g.0 = Status::Proved;
                }
            }
            None if item.passed() => {}
            None if e.status == Status::Proved => proved_bad = true,
            None => conj_bad = true,
        }
    }
    for (status, ok) in groups.values() {
        if !ok {
            match status {
                Status::Proved => proved_bad = true,
                Status::Conjectural => conj_bad = true,
            }
        }
    }
    let exit_code = if proved_bad {
        EXIT_PROVED_MISMATCH
    } else if conj_bad {
        EXIT_CONJECTURE_MISMATCH
    } else {
        EXIT_OK
    };
    RunOutcome { items, exit_code }
}
