//! Constant dimension codes: distance, maximum distance, equivalence and
//! automorphism groups under `GL_n` / `ΓL_n`.

use crate::error::{Error, Result};
use crate::grassmann::{AmbientSpace, GroupElement, Mode, Subspace};
use crate::linalg::Matrix;
use crate::search::{self, RowCheck, SearchBudget};

/// A nonempty set of `k`-dimensional subspaces of `F_q^n`, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConstantDimensionCode {
    k: usize,
    words: Vec<Subspace>,
}

/// Result of the maximum-distance test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaxDistanceStatus {
    pub distance: usize,
    pub bound: usize,
    pub attained: bool,
    /// Singleton codes have distance 0 by convention and never attain the bound.
    pub singleton: bool,
}

impl ConstantDimensionCode {
    /// Builds a code from its words; duplicates collapse.
    pub fn new(mut words: Vec<Subspace>) -> Result<ConstantDimensionCode> {
        let Some(first) = words.first() else {
            return Err(Error::EmptyCode);
        };
        let k = first.dim();
        for w in &words {
            if !w.same_ambient(first) {
                return Err(Error::AmbientMismatch);
            }
            if w.dim() != k {
                return Err(Error::DimensionMismatch {
                    expected: k,
                    got: w.dim(),
                });
            }
        }
        words.sort();
        words.dedup();
        Ok(ConstantDimensionCode { k, words })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.words[0].n()
    }

    pub fn ambient(&self) -> AmbientSpace {
        self.words[0].ambient()
    }

    pub fn words(&self) -> &[Subspace] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, u: &Subspace) -> bool {
        self.words.binary_search(u).is_ok()
    }

    pub fn same_ambient(&self, other: &ConstantDimensionCode) -> bool {
        self.words[0].same_ambient(&other.words[0])
    }

    /// Minimum pairwise distance, 0 for a singleton.
    pub fn min_distance(&self) -> usize {
        let mut best: Option<usize> = None;
        for (i, u) in self.words.iter().enumerate() {
            for v in &self.words[i + 1..] {
                let d = u.distance(v).expect("words share an ambient space");
                best = Some(best.map_or(d, |b| b.min(d)));
            }
        }
        best.unwrap_or(0)
    }

    /// `min{2k, 2(n-k)}`.
    pub fn distance_bound(&self) -> usize {
        (2 * self.k).min(2 * (self.n() - self.k))
    }

    pub fn max_distance_status(&self) -> MaxDistanceStatus {
        let distance = self.min_distance();
        let bound = self.distance_bound();
        let singleton = self.len() == 1;
        MaxDistanceStatus {
            distance,
            bound,
            attained: !singleton && distance == bound,
            singleton,
        }
    }

    pub fn is_max_distance(&self) -> bool {
        self.max_distance_status().attained
    }

    pub fn act(&self, g: &GroupElement) -> Result<ConstantDimensionCode> {
        let words = self.words.iter().map(|w| w.act(g)).collect::<Result<Vec<_>>>()?;
        ConstantDimensionCode::new(words)
    }

    /// Whether every word lands in `target` (a bijection when the matrix is invertible
    /// and both codes have the same size).
    /// One check per word: its image lies in `target`.
    pub(crate) fn image_checks<'a>(&'a self, target: &'a ConstantDimensionCode) -> Vec<RowCheck<'a>> {
        self.words
            .iter()
            .map(|w| {
                RowCheck::new(w.support_len(), move |m: &Matrix, phi| {
                    let img = w.act_unchecked(m, phi);
                    img.dim() == self.k && target.contains(&img)
                })
            })
            .collect()
    }
}

pub fn min_distance(c: &ConstantDimensionCode) -> usize {
    c.min_distance()
}

pub fn is_max_distance(c: &ConstantDimensionCode) -> bool {
    c.is_max_distance()
}

pub fn act_code(c: &ConstantDimensionCode, g: &GroupElement) -> Result<ConstantDimensionCode> {
    c.act(g)
}

/// Stabilizer of `c` in `GL_n` or `ΓL_n`, in search order.
pub fn automorphism_group(c: &ConstantDimensionCode, mode: Mode, budget: SearchBudget) -> Result<Vec<GroupElement>> {
    let amb = c.ambient();
    search::scan_all_checks(amb.field(), amb.n(), mode, budget, &c.image_checks(c))
}

pub fn aut_group(c: &ConstantDimensionCode, budget: SearchBudget) -> Result<Vec<GroupElement>> {
    automorphism_group(c, Mode::Linear, budget)
}

pub fn saut_group(c: &ConstantDimensionCode, budget: SearchBudget) -> Result<Vec<GroupElement>> {
    automorphism_group(c, Mode::Semilinear, budget)
}

/// First `g` in search order with `target = source · g`, if any.
pub fn are_equivalent_codes(
    source: &ConstantDimensionCode,
    target: &ConstantDimensionCode,
    mode: Mode,
    budget: SearchBudget,
) -> Result<Option<GroupElement>> {
    if !source.same_ambient(target) {
        return Err(Error::AmbientMismatch);
    }
    if source.k() != target.k() || source.len() != target.len() || source.min_distance() != target.min_distance() {
        return Ok(None);
    }
    let amb = source.ambient();
    search::scan_first_checks(amb.field(), amb.n(), mode, budget, &source.image_checks(target))
}
