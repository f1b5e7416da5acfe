//! Increasing and decreasing flag codes, the inclusion maps between
//! consecutive projected codes, and the maximum-distance criteria that force
//! either property.

use crate::cdc::ConstantDimensionCode;
use crate::flags::{FlagCode, TypeExtremes};
use crate::genset::{is_determined, is_sic, multiplicities};
use crate::grassmann::Subspace;

/// `inc[u][v]`: word `u` of `lower` lies in word `v` of `upper`.
fn incidence(lower: &ConstantDimensionCode, upper: &ConstantDimensionCode) -> Vec<Vec<bool>> {
    lower
        .words()
        .iter()
        .map(|u| upper.words().iter().map(|v| u.is_subspace_of_unchecked(v)).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneReport {
    pub holds: bool,
    /// First offending word in canonical order, with its 1-based level.
    pub witness: Option<(usize, Subspace)>,
}

/// Every word of `C_i` contains exactly one word of `C_{i-1}`.
pub fn is_increasing(c: &FlagCode) -> MonotoneReport {
    let proj = c.projected_codes();
    for i in 1..proj.len() {
        let inc = incidence(&proj[i - 1], &proj[i]);
        for (v, word) in proj[i].words().iter().enumerate() {
            if inc.iter().filter(|row| row[v]).count() != 1 {
                return MonotoneReport {
                    holds: false,
                    witness: Some((i + 1, word.clone())),
                };
            }
        }
    }
    MonotoneReport {
        holds: true,
        witness: None,
    }
}

/// Every word of `C_{i-1}` lies in exactly one word of `C_i`.
pub fn is_decreasing(c: &FlagCode) -> MonotoneReport {
    let proj = c.projected_codes();
    for i in 1..proj.len() {
        let inc = incidence(&proj[i - 1], &proj[i]);
        for (u, word) in proj[i - 1].words().iter().enumerate() {
            if inc[u].iter().filter(|&&b| b).count() != 1 {
                return MonotoneReport {
                    holds: false,
                    witness: Some((i, word.clone())),
                };
            }
        }
    }
    MonotoneReport {
        holds: true,
        witness: None,
    }
}

/// A map between consecutive projected codes, as word indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelMap {
    /// 1-based level `i` of the pair `(C_{i-1}, C_i)`.
    pub level: usize,
    pub image: Vec<usize>,
    pub surjective: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InclusionMaps {
    /// `alpha_i: C_i -> C_{i-1}` for `i = 2..=r`, absent where some word has
    /// zero or several predecessors.
    pub alpha: Vec<Option<LevelMap>>,
    /// `beta_i: C_{i-1} -> C_i`, absent where some word has zero or several successors.
    pub beta: Vec<Option<LevelMap>>,
    /// Whenever both maps exist between codes of equal size they are mutually inverse.
    pub inverse_relation: bool,
}

fn unique_index(flags: impl Iterator<Item = bool>) -> Option<usize> {
    let mut hit = None;
    for (j, b) in flags.enumerate() {
        if b {
            if hit.is_some() {
                return None;
            }
            hit = Some(j);
        }
    }
    hit
}

fn level_map(level: usize, image: Option<Vec<usize>>, target_len: usize) -> Option<LevelMap> {
    image.map(|image| {
        let mut seen = vec![false; target_len];
        for &j in &image {
            seen[j] = true;
        }
        LevelMap {
            level,
            surjective: seen.iter().all(|&s| s),
            image,
        }
    })
}

pub fn inclusion_maps(c: &FlagCode) -> InclusionMaps {
    let proj = c.projected_codes();
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    let mut inverse_relation = true;
    for i in 1..proj.len() {
        let inc = incidence(&proj[i - 1], &proj[i]);
        let a: Option<Vec<usize>> = (0..proj[i].len())
            .map(|v| unique_index(inc.iter().map(|row| row[v])))
            .collect();
        let b: Option<Vec<usize>> = inc.iter().map(|row| unique_index(row.iter().copied())).collect();
        let a = level_map(i + 1, a, proj[i - 1].len());
        let b = level_map(i + 1, b, proj[i].len());
        if let (Some(a), Some(b)) = (&a, &b) {
            if proj[i - 1].len() == proj[i].len() {
                inverse_relation &= b.image.iter().enumerate().all(|(u, &v)| a.image[v] == u);
            }
        }
        alpha.push(a);
        beta.push(b);
    }
    InclusionMaps {
        alpha,
        beta,
        inverse_relation,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileReport {
    pub sizes: Vec<usize>,
    pub total: usize,
    pub increasing: bool,
    pub decreasing: bool,
    /// The size chain implied by each property holds wherever the property does.
    pub conforms: bool,
}

/// `|C_1| <= ... <= |C_r| = |C|` for increasing codes, the reverse for decreasing ones.
pub fn cardinality_profile_check(c: &FlagCode) -> ProfileReport {
    let sizes = c.projected_sizes();
    let total = c.len();
    let increasing = is_increasing(c).holds;
    let decreasing = is_decreasing(c).holds;
    let up = sizes.windows(2).all(|w| w[0] <= w[1]) && *sizes.last().unwrap() == total;
    let down = sizes.windows(2).all(|w| w[0] >= w[1]) && sizes[0] == total;
    ProfileReport {
        conforms: (!increasing || up) && (!decreasing || down),
        sizes,
        total,
        increasing,
        decreasing,
    }
}

/// One strict inequality between type dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Comparison {
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
}

impl Comparison {
    fn less(lhs: usize, rhs: usize) -> Comparison {
        Comparison {
            lhs,
            rhs,
            holds: lhs < rhs,
        }
    }
}

/// A hypothesis set and the property it predicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub name: &'static str,
    pub predicts: &'static str,
    pub hypotheses: bool,
    pub conclusion: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SufficientReport {
    pub all_max_distance: bool,
    pub extremes: TypeExtremes,
    /// `t_b < 2 t_a`, when both exist.
    pub tb_lt_2ta: Option<Comparison>,
    /// `2 t_b < n + t_a`, when both exist.
    pub two_tb_lt_n_plus_ta: Option<Comparison>,
    pub predictions: Vec<Prediction>,
}

/// Evaluates every maximum-distance criterion for increasing or decreasing codes.
///
/// # Panics
/// If a criterion's hypotheses hold while its conclusion fails.
pub fn sufficient_conditions(c: &FlagCode) -> SufficientReport {
    let tv = c.typevec();
    let n = tv.n();
    let dims = tv.dims();
    let r = dims.len();
    let proj = c.projected_codes();
    let sizes: Vec<usize> = proj.iter().map(ConstantDimensionCode::len).collect();
    let all_max = proj.iter().all(ConstantDimensionCode::is_max_distance);
    let ext = tv.extremes();
    let inc = is_increasing(c).holds;
    let dec = is_decreasing(c).holds;
    let t1_ge_half = 2 * dims[0] >= n;
    let tr_le_half = 2 * dims[r - 1] <= n;
    let middle = 2 * dims[0] <= n && n <= 2 * dims[r - 1];
    let (tb_lt_2ta, two_tb_lt) = match (ext.t_a, ext.t_b) {
        (Some(ta), Some(tb)) => (
            Some(Comparison::less(tb, 2 * ta)),
            Some(Comparison::less(2 * tb, n + ta)),
        ),
        _ => (None, None),
    };
    let chain_to_a = ext.a.is_some_and(|a| sizes[..a].windows(2).all(|w| w[0] == w[1]));
    let chain_from_b = ext.b.is_some_and(|b| sizes[b - 1..].windows(2).all(|w| w[0] == w[1]));
    let odfc = c.is_odfc_direct();
    let holds = |cmp: Option<Comparison>| cmp.is_some_and(|x| x.holds);
    let type_condition = t1_ge_half || tr_le_half || (middle && (holds(tb_lt_2ta) || holds(two_tb_lt)));

    let predictions = vec![
        Prediction {
            name: "large-dimensions",
            predicts: "increasing",
            hypotheses: all_max && t1_ge_half,
            conclusion: inc,
        },
        Prediction {
            name: "small-dimensions",
            predicts: "decreasing",
            hypotheses: all_max && tr_le_half,
            conclusion: dec,
        },
        Prediction {
            name: "tb-lt-2ta",
            predicts: "increasing",
            hypotheses: all_max && middle && holds(tb_lt_2ta) && chain_to_a,
            conclusion: inc,
        },
        Prediction {
            name: "2tb-lt-n-plus-ta",
            predicts: "decreasing",
            hypotheses: all_max && middle && holds(two_tb_lt) && chain_from_b,
            conclusion: dec,
        },
        Prediction {
            name: "optimum-distance",
            predicts: "increasing-and-decreasing",
            hypotheses: odfc && type_condition,
            conclusion: inc && dec,
        },
    ];
    for p in &predictions {
        assert!(
            !p.hypotheses || p.conclusion,
            "criterion {} holds but the code is not {}",
            p.name,
            p.predicts
        );
    }
    SufficientReport {
        all_max_distance: all_max,
        extremes: ext,
        tb_lt_2ta,
        two_tb_lt_n_plus_ta: two_tb_lt,
        predictions,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub increasing: MonotoneReport,
    pub decreasing: MonotoneReport,
    pub disjoint: bool,
    /// 1-based level with `|C_i| < |C|`, when not disjoint.
    pub disjoint_witness: Option<usize>,
    pub sic: bool,
    pub sic_witness: Option<(usize, crate::flags::Flag)>,
    pub determined: bool,
    pub removable: Option<crate::flags::Flag>,
    pub odfc: bool,
    pub min_distance: usize,
    pub distance_bound: usize,
}

pub fn classify(c: &FlagCode) -> Classification {
    let sizes = c.projected_sizes();
    let det = is_determined(c);
    Classification {
        increasing: is_increasing(c),
        decreasing: is_decreasing(c),
        disjoint: sizes.iter().all(|&s| s == c.len()),
        disjoint_witness: sizes.iter().position(|&s| s != c.len()).map(|i| i + 1),
        sic: det.sic.sic,
        sic_witness: det.sic.witness.clone(),
        determined: det.determined,
        removable: det.removable,
        odfc: c.is_odfc_direct(),
        min_distance: c.min_distance(),
        distance_bound: c.distance_bound(),
    }
}

/// Per-flag multiplicity chains: non-increasing ending at 1 for increasing codes,
/// non-decreasing starting at 1 for decreasing codes.
pub fn multiplicity_chains_hold(c: &FlagCode) -> bool {
    let m = multiplicities(c);
    let inc = is_increasing(c).holds;
    let dec = is_decreasing(c).holds;
    m.rows.iter().all(|row| {
        (!inc || (row.windows(2).all(|w| w[0] >= w[1]) && *row.last().unwrap() == 1))
            && (!dec || (row.windows(2).all(|w| w[0] <= w[1]) && row[0] == 1))
    }) && (!(inc || dec) || is_sic(c).sic)
}
