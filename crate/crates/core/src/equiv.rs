//! Equivalence and automorphism groups of flag codes.

use crate::cdc::{self, ConstantDimensionCode};
use crate::error::{Error, Result};
use crate::flags::FlagCode;
use crate::genset::{is_determined, is_sic};
use crate::grassmann::{GroupElement, Mode};
use crate::search::{self, SearchBudget};

/// The invariant that separated two codes without a group scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PruneReason {
    Cardinality,
    MinDistance,
    ProjectedCardinalities,
    ProjectedDistances,
}

impl PruneReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            PruneReason::Cardinality => "cardinality",
            PruneReason::MinDistance => "min-distance",
            PruneReason::ProjectedCardinalities => "projected-cardinalities",
            PruneReason::ProjectedDistances => "projected-distances",
        }
    }
}

/// How an equivalence decision was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Pruned,
    Direct,
    /// Common witness for all projected pairs; valid because the source is
    /// determined by its projected codes.
    Projected,
}

impl Route {
    pub fn as_str(&self) -> &'static str {
        match self {
            Route::Pruned => "pruned",
            Route::Direct => "direct",
            Route::Projected => "projected",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub equivalent: bool,
    /// First `g` in search order with `target = source · g`.
    pub witness: Option<GroupElement>,
    pub pruned_by: Option<PruneReason>,
    pub route: Route,
}

pub fn act_flagcode(c: &FlagCode, g: &GroupElement) -> Result<FlagCode> {
    c.act(g)
}

fn check_compatible(source: &FlagCode, target: &FlagCode) -> Result<()> {
    if source.ambient() != target.ambient() {
        return Err(Error::AmbientMismatch);
    }
    if source.typevec() != target.typevec() {
        return Err(Error::TypeMismatch);
    }
    Ok(())
}

fn prune(source: &FlagCode, target: &FlagCode) -> Option<PruneReason> {
    if source.len() != target.len() {
        return Some(PruneReason::Cardinality);
    }
    if source.min_distance() != target.min_distance() {
        return Some(PruneReason::MinDistance);
    }
    let (ps, pt) = (source.projected_codes(), target.projected_codes());
    if ps.iter().zip(&pt).any(|(a, b)| a.len() != b.len()) {
        return Some(PruneReason::ProjectedCardinalities);
    }
    if ps.iter().zip(&pt).any(|(a, b)| a.min_distance() != b.min_distance()) {
        return Some(PruneReason::ProjectedDistances);
    }
    None
}

/// Decides whether `target = source · g` for some `g` in `GL_n` or `ΓL_n`.
pub fn are_equivalent_flagcodes(
    source: &FlagCode,
    target: &FlagCode,
    mode: Mode,
    budget: SearchBudget,
) -> Result<EquivalenceReport> {
    check_compatible(source, target)?;
    if let Some(reason) = prune(source, target) {
        return Ok(EquivalenceReport {
            equivalent: false,
            witness: None,
            pruned_by: Some(reason),
            route: Route::Pruned,
        });
    }
    let (witness, route) = if is_determined(source).determined {
        let w = projected_equivalence(source, target, mode, budget)?;
        if let Some(g) = &w {
            assert_eq!(
                &source.act(g)?,
                target,
                "a code determined by its projected codes follows its projections"
            );
        }
        (w, Route::Projected)
    } else {
        let amb = source.ambient();
        let w = search::scan_first_checks(amb.field(), amb.n(), mode, budget, &source.image_checks(target))?;
        (w, Route::Direct)
    };
    Ok(EquivalenceReport {
        equivalent: witness.is_some(),
        witness,
        pruned_by: None,
        route,
    })
}

/// First `g` in search order with `target_i = source_i · g` at every level.
pub fn projected_equivalence(
    source: &FlagCode,
    target: &FlagCode,
    mode: Mode,
    budget: SearchBudget,
) -> Result<Option<GroupElement>> {
    check_compatible(source, target)?;
    let (ps, pt) = (source.projected_codes(), target.projected_codes());
    if ps.iter().zip(&pt).any(|(a, b)| a.len() != b.len()) {
        return Ok(None);
    }
    let amb = source.ambient();
    let checks: Vec<_> = ps.iter().zip(&pt).flat_map(|(a, b)| a.image_checks(b)).collect();
    search::scan_first_checks(amb.field(), amb.n(), mode, budget, &checks)
}

/// Stabilizer of a flag code, in search order.
pub fn aut_flagcode(c: &FlagCode, mode: Mode, budget: SearchBudget) -> Result<Vec<GroupElement>> {
    let amb = c.ambient();
    search::scan_all_checks(amb.field(), amb.n(), mode, budget, &c.image_checks(c))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectedAutReport {
    /// `∩ Aut(C_i)` (or `∩ SAut(C_i)`), sorted.
    pub elements: Vec<GroupElement>,
    pub level_sizes: Vec<usize>,
    /// When true the intersection is exactly the stabilizer of the code;
    /// otherwise it is only known to contain it.
    pub sic: bool,
}

/// Intersects the stabilizers of the projected codes, each computed on its own.
pub fn aut_via_projected(c: &FlagCode, mode: Mode, budget: SearchBudget) -> Result<ProjectedAutReport> {
    let mut level_sizes = Vec::new();
    let mut acc: Option<Vec<GroupElement>> = None;
    for p in c.projected_codes() {
        let mut stab = cdc::automorphism_group(&p, mode, budget)?;
        stab.sort();
        level_sizes.push(stab.len());
        acc = Some(match acc {
            None => stab,
            Some(prev) => intersect_sorted(&prev, &stab),
        });
    }
    Ok(ProjectedAutReport {
        elements: acc.unwrap_or_default(),
        level_sizes,
        sic: is_sic(c).sic,
    })
}

fn intersect_sorted(a: &[GroupElement], b: &[GroupElement]) -> Vec<GroupElement> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Equivalence of constant dimension codes, reported in the same shape.
pub fn are_equivalent_cdcs(
    source: &ConstantDimensionCode,
    target: &ConstantDimensionCode,
    mode: Mode,
    budget: SearchBudget,
) -> Result<EquivalenceReport> {
    if !source.same_ambient(target) {
        return Err(Error::AmbientMismatch);
    }
    let pruned_by = if source.k() != target.k() || source.len() != target.len() {
        Some(PruneReason::Cardinality)
    } else if source.min_distance() != target.min_distance() {
        Some(PruneReason::MinDistance)
    } else {
        None
    };
    if pruned_by.is_some() {
        return Ok(EquivalenceReport {
            equivalent: false,
            witness: None,
            pruned_by,
            route: Route::Pruned,
        });
    }
    let witness = cdc::are_equivalent_codes(source, target, mode, budget)?;
    Ok(EquivalenceReport {
        equivalent: witness.is_some(),
        witness,
        pruned_by: None,
        route: Route::Direct,
    })
}
