//! Brute-force scans over `GL_n(F_q)` and `ΓL_n(F_q)`.
//!
//! Candidates are visited Frobenius power first, then matrices in
//! row-major lexicographic order of their element codes. Scans run in
//! parallel over the first row but every result is reported in that order,
//! so outputs do not depend on the thread count.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldAutomorphism};
use crate::grassmann::{GroupElement, Mode};
use crate::linalg::Matrix;

pub const DEFAULT_MAX_CANDIDATES: u128 = 1 << 26;

/// Upper bound on the number of `(A, φ)` candidates a scan may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_candidates: u128,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_candidates: DEFAULT_MAX_CANDIDATES,
        }
    }
}

impl SearchBudget {
    pub fn new(max_candidates: u128) -> SearchBudget {
        SearchBudget { max_candidates }
    }
}

/// `q^(n^2)`, times `e` for semilinear scans; saturates on overflow.
pub fn candidate_count(field: &Field, n: usize, mode: Mode) -> u128 {
    let per_power = (field.q() as u128).checked_pow((n * n) as u32).unwrap_or(u128::MAX);
    match mode {
        Mode::Linear => per_power,
        Mode::Semilinear => per_power.saturating_mul(field.e() as u128),
    }
}

pub(crate) fn check_budget(field: &Field, n: usize, mode: Mode, budget: SearchBudget) -> Result<()> {
    if n == 0 {
        return Err(Error::ShapeMismatch("matrix size must be at least 1".into()));
    }
    let needed = candidate_count(field, n, mode);
    if needed > budget.max_candidates || needed > usize::MAX as u128 {
        return Err(Error::TooLarge {
            needed,
            budget: budget.max_candidates,
        });
    }
    Ok(())
}

fn powers(field: &Field, mode: Mode) -> Vec<FieldAutomorphism> {
    match mode {
        Mode::Linear => vec![FieldAutomorphism::IDENTITY],
        Mode::Semilinear => {
            let all = field.automorphisms();
            assert!(field.e() > 1 || all.len() == 1, "Aut(F_p) is trivial");
            all
        }
    }
}

type CheckFn<'a> = Box<dyn Fn(&Matrix, FieldAutomorphism) -> bool + Sync + 'a>;

/// A test on a candidate that reads only its first `rows` rows.
pub(crate) struct RowCheck<'a> {
    pub rows: usize,
    pub check: CheckFn<'a>,
}

impl<'a> RowCheck<'a> {
    pub(crate) fn new(rows: usize, check: impl Fn(&Matrix, FieldAutomorphism) -> bool + Sync + 'a) -> Self {
        RowCheck {
            rows,
            check: Box::new(check),
        }
    }
}

/// Depth-first walk over matrices in lexicographic order, one row at a time.
/// A prefix is abandoned once its rows are dependent or a check reading only
/// those rows fails, so the hits are exactly the invertible matrices passing
/// every check, in search order.
struct Walk<'a> {
    field: &'a Field,
    n: usize,
    phi: FieldAutomorphism,
    /// `stages[j]` holds the checks that read rows `0..=j` and no later row.
    stages: Vec<Vec<&'a RowCheck<'a>>>,
}

impl<'a> Walk<'a> {
    fn new(field: &'a Field, n: usize, phi: FieldAutomorphism, checks: &'a [RowCheck<'a>]) -> Self {
        let mut stages: Vec<Vec<&RowCheck>> = (0..n).map(|_| Vec::new()).collect();
        for c in checks {
            stages[c.rows.clamp(1, n) - 1].push(c);
        }
        Walk { field, n, phi, stages }
    }

    fn row_count(&self) -> usize {
        self.field.q().pow(self.n as u32)
    }

    fn set_row(&self, data: &mut [u8], depth: usize, mut value: usize) {
        let q = self.field.q();
        for slot in data[depth * self.n..(depth + 1) * self.n].iter_mut().rev() {
            *slot = (value % q) as u8;
            value /= q;
        }
    }

    /// Reduces the new row against the echelon rows; `None` if it is dependent.
    fn reduce(&self, echelon: &[(usize, Vec<u8>)], row: &[u8]) -> Option<(usize, Vec<u8>)> {
        let f = self.field;
        let mut r = row.to_vec();
        for (p, e) in echelon {
            let c = r[*p];
            if c != 0 {
                for (x, &y) in r.iter_mut().zip(e) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        let p = r.iter().position(|&x| x != 0)?;
        let inv = f.inv(r[p]);
        for x in r.iter_mut() {
            *x = f.mul(*x, inv);
        }
        Some((p, r))
    }

    /// Visits the subtree below a prefix of `depth` rows; `visit` returns
    /// `true` to stop the walk.
    fn descend(
        &self,
        data: &mut Vec<u8>,
        echelon: &mut Vec<(usize, Vec<u8>)>,
        depth: usize,
        visit: &mut dyn FnMut(Matrix) -> bool,
    ) -> bool {
        for value in 0..self.row_count() {
            if self.step(data, echelon, depth, value, visit) {
                return true;
            }
        }
        false
    }

    fn step(
        &self,
        data: &mut Vec<u8>,
        echelon: &mut Vec<(usize, Vec<u8>)>,
        depth: usize,
        value: usize,
        visit: &mut dyn FnMut(Matrix) -> bool,
    ) -> bool {
        let n = self.n;
        self.set_row(data, depth, value);
        let Some(reduced) = self.reduce(echelon, &data[depth * n..(depth + 1) * n]) else {
            return false;
        };
        let m = Matrix::from_raw(self.field, n, n, data.clone());
        if !self.stages[depth].iter().all(|c| (c.check)(&m, self.phi)) {
            return false;
        }
        if depth + 1 == n {
            return visit(m);
        }
        echelon.push(reduced);
        let stop = self.descend(data, echelon, depth + 1, visit);
        echelon.pop();
        for x in &mut data[(depth + 1) * n..] {
            *x = 0;
        }
        stop
    }

    /// The walk restricted to matrices whose first row has the given index.
    fn subtree(&self, first: usize, visit: &mut dyn FnMut(Matrix) -> bool) -> bool {
        let mut data = vec![0u8; self.n * self.n];
        let mut echelon = Vec::with_capacity(self.n);
        self.step(&mut data, &mut echelon, 0, first, visit)
    }
}

/// Every group element satisfying `pred`, in search order.
///
/// `pred` may be called with singular matrices; invertibility is checked
/// only for candidates it accepts.
pub fn scan_all<P>(field: &Field, n: usize, mode: Mode, budget: SearchBudget, pred: P) -> Result<Vec<GroupElement>>
where
    P: Fn(&Matrix, FieldAutomorphism) -> bool + Sync,
{
    scan_all_checks(field, n, mode, budget, &[RowCheck::new(n, pred)])
}

/// The first group element in search order satisfying `pred`.
pub fn scan_first<P>(field: &Field, n: usize, mode: Mode, budget: SearchBudget, pred: P) -> Result<Option<GroupElement>>
where
    P: Fn(&Matrix, FieldAutomorphism) -> bool + Sync,
{
    scan_first_checks(field, n, mode, budget, &[RowCheck::new(n, pred)])
}

pub(crate) fn scan_all_checks(
    field: &Field,
    n: usize,
    mode: Mode,
    budget: SearchBudget,
    checks: &[RowCheck],
) -> Result<Vec<GroupElement>> {
    check_budget(field, n, mode, budget)?;
    let mut out = Vec::new();
    for phi in powers(field, mode) {
        let walk = Walk::new(field, n, phi, checks);
        let found: Vec<Vec<GroupElement>> = (0..walk.row_count())
            .into_par_iter()
            .map(|first| {
                let mut hits = Vec::new();
                walk.subtree(first, &mut |m| {
                    hits.push(GroupElement::from_parts_unchecked(m, phi));
                    false
                });
                hits
            })
            .collect();
        out.extend(found.into_iter().flatten());
    }
    Ok(out)
}

pub(crate) fn scan_first_checks(
    field: &Field,
    n: usize,
    mode: Mode,
    budget: SearchBudget,
    checks: &[RowCheck],
) -> Result<Option<GroupElement>> {
    check_budget(field, n, mode, budget)?;
    for phi in powers(field, mode) {
        let walk = Walk::new(field, n, phi, checks);
        let hit = (0..walk.row_count()).into_par_iter().find_map_first(|first| {
            let mut hit = None;
            walk.subtree(first, &mut |m| {
                hit = Some(GroupElement::from_parts_unchecked(m, phi));
                true
            });
            hit
        });
        if hit.is_some() {
            return Ok(hit);
        }
    }
    Ok(None)
}

/// All of `GL_n(F_q)` (or `ΓL_n(F_q)`), in search order.
pub fn enumerate_group(field: &Field, n: usize, mode: Mode, budget: SearchBudget) -> Result<Vec<GroupElement>> {
    scan_all(field, n, mode, budget, |_, _| true)
}

/// Checks identity, closure under composition, and inverses on a finite set.
pub fn is_group(elements: &[GroupElement]) -> bool {
    let Some(first) = elements.first() else {
        return false;
    };
    let set: HashSet<&GroupElement> = elements.iter().collect();
    if !set.contains(&GroupElement::identity(first.field(), first.n())) {
        return false;
    }
    elements.iter().all(|g| {
        set.contains(&g.inverse())
            && elements
                .iter()
                .all(|h| g.compose(h).map(|gh| set.contains(&gh)).unwrap_or(false))
    })
}
