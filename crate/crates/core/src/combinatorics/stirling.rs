use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::ExactInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StirlingKind {
    /// Signed numbers of the first kind, `s(n,k)`.
    FirstSigned,
    /// Numbers of the second kind, `S(n,k)`.
    Second,
}

/// Row-memoized triangle of Stirling numbers.
///
/// Row `n` stores `k = 0..=n`. Rows are appended on demand by the two-term
/// recurrence and never dropped. Lookups through `&self` only see rows that
/// have already been built, which lets a fully built table be shared read-only
/// across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTriangle {
    kind: StirlingKind,
    rows: Vec<Vec<ExactInt>>,
}

impl StirlingTriangle {
    pub fn new(kind: StirlingKind) -> Self {
        Self { kind, rows: vec![vec![ExactInt::one()]] }
    }

    /// A triangle with rows `0..=n` already built.
    pub fn with_rows(kind: StirlingKind, n: usize) -> Self {
        let mut t = Self::new(kind);
        t.ensure_rows(n);
        t
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    /// Number of completed rows (row 0 always exists).
    pub fn rows_built(&self) -> usize {
        self.rows.len()
    }

    /// Extends the table so that row `n` is available.
    pub fn ensure_rows(&mut self, n: usize) {
        while self.rows.len() <= n {
            let m = self.rows.len();
            let prev = &self.rows[m - 1];
            let mut row = Vec::with_capacity(m + 1);
            row.push(ExactInt::zero());
            for k in 1..=m {
                let diag = &prev[k - 1];
                let value = match (prev.get(k), self.kind) {
                    (None, _) => diag.clone(),
                    (Some(up), StirlingKind::Second) => up * k + diag,
                    (Some(up), StirlingKind::FirstSigned) => diag - up * (m - 1),
                };
                row.push(value);
            }
            self.rows.push(row);
        }
    }

    pub fn row(&self, n: usize) -> Option<&[ExactInt]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    /// Entry `(n, k)`; zero for `k > n`.
    ///
    /// Panics if row `n` has not been built.
    pub fn get(&self, n: usize, k: usize) -> ExactInt {
        let row = self
            .rows
            .get(n)
            .unwrap_or_else(|| panic!("{:?} triangle not built through row {n}", self.kind));
        row.get(k).cloned().unwrap_or_default()
    }

    /// Overwrites a stored entry. Used to inject faults when testing verifiers.
    pub fn set_entry(&mut self, n: usize, k: usize, value: ExactInt) -> Result<()> {
        let slot = self
            .rows
            .get_mut(n)
            .and_then(|row| row.get_mut(k))
            .ok_or_else(|| Error::Domain(format!("entry ({n}, {k}) is not stored")))?;
        *slot = value;
        Ok(())
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ExactInt]> {
        self.rows.iter().map(Vec::as_slice)
    }
}

/// `S(n,k)`, extending `cache` as needed.
pub fn stirling2(n: usize, k: usize, cache: &mut StirlingTriangle) -> ExactInt {
    assert_eq!(cache.kind(), StirlingKind::Second, "stirling2 needs a second-kind triangle");
    cache.ensure_rows(n);
    cache.get(n, k)
}

/// Signed `s(n,k)`, extending `cache` as needed.
pub fn stirling1(n: usize, k: usize, cache: &mut StirlingTriangle) -> ExactInt {
    assert_eq!(cache.kind(), StirlingKind::FirstSigned, "stirling1 needs a first-kind triangle");
    cache.ensure_rows(n);
    cache.get(n, k)
}
