//! Generating sets of flag codes, the SIC property, multiplicities and
//! determination by projected codes.

use crate::cdc::ConstantDimensionCode;
use crate::error::{Error, Result};
use crate::flags::{Flag, FlagCode, TypeVector};
use crate::grassmann::Subspace;

pub const DEFAULT_NODE_BUDGET: u128 = 1 << 24;

/// A Cartesian product `C_1 x ... x C_r` of constant dimension codes with
/// strictly increasing dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeProduct {
    typevec: TypeVector,
    components: Vec<ConstantDimensionCode>,
}

impl CodeProduct {
    pub fn new(components: Vec<ConstantDimensionCode>) -> Result<CodeProduct> {
        let Some(first) = components.first() else {
            return Err(Error::EmptyCode);
        };
        if components.iter().any(|c| !c.same_ambient(first)) {
            return Err(Error::AmbientMismatch);
        }
        let dims: Vec<usize> = components.iter().map(ConstantDimensionCode::k).collect();
        let typevec = TypeVector::new(&first.ambient(), &dims)?;
        Ok(CodeProduct { typevec, components })
    }

    /// The product of the projected codes of `c`.
    pub fn of_projected(c: &FlagCode) -> CodeProduct {
        CodeProduct {
            typevec: c.typevec().clone(),
            components: c.projected_codes(),
        }
    }

    pub fn typevec(&self) -> &TypeVector {
        &self.typevec
    }

    pub fn components(&self) -> &[ConstantDimensionCode] {
        &self.components
    }

    /// Component at a 1-based level.
    pub fn component(&self, level: usize) -> &ConstantDimensionCode {
        &self.components[level - 1]
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `up[i][j]`: indices of the words of level `i + 1` containing word `j` of level `i`.
    fn upward_incidence(&self) -> Vec<Vec<Vec<usize>>> {
        self.components
            .windows(2)
            .map(|w| {
                w[0].words()
                    .iter()
                    .map(|u| {
                        w[1].words()
                            .iter()
                            .enumerate()
                            .filter(|(_, v)| u.is_subspace_of_unchecked(v))
                            .map(|(j, _)| j)
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }
}

/// All flags in `C_1 x ... x C_r`, found by depth-first search along inclusions.
/// `None` when no flag can be formed.
pub fn product_flags(p: &CodeProduct) -> Result<Option<FlagCode>> {
    product_flags_with_budget(p, DEFAULT_NODE_BUDGET)
}

pub fn product_flags_with_budget(p: &CodeProduct, node_budget: u128) -> Result<Option<FlagCode>> {
    let up = p.upward_incidence();
    let mut search = Dfs {
        p,
        up: &up,
        budget: node_budget,
        nodes: 0,
        path: Vec::with_capacity(p.len()),
        flags: Vec::new(),
    };
    for j in 0..p.components[0].len() {
        search.visit(j)?;
    }
    if search.flags.is_empty() {
        return Ok(None);
    }
    FlagCode::new(&p.typevec, search.flags).map(Some)
}

struct Dfs<'a> {
    p: &'a CodeProduct,
    up: &'a [Vec<Vec<usize>>],
    budget: u128,
    nodes: u128,
    path: Vec<usize>,
    flags: Vec<Flag>,
}

impl Dfs<'_> {
    fn visit(&mut self, choice: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::TooLarge {
                needed: self.nodes,
                budget: self.budget,
            });
        }
        self.path.push(choice);
        let level = self.path.len() - 1;
        if level + 1 == self.p.len() {
            let spaces = self
                .path
                .iter()
                .enumerate()
                .map(|(i, &j)| self.p.components[i].words()[j].clone())
                .collect();
            self.flags.push(Flag::from_spaces_unchecked(spaces));
        } else {
            for &next in &self.up[level][choice] {
                self.visit(next)?;
            }
        }
        self.path.pop();
        Ok(())
    }
}

/// Where a word of a product lacks a neighbour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MissingNeighbour {
    Below,
    Above,
}

impl MissingNeighbour {
    pub fn as_str(&self) -> &'static str {
        match self {
            MissingNeighbour::Below => "below",
            MissingNeighbour::Above => "above",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingReport {
    pub generating: bool,
    /// First offending word: 1-based level, the word, and the missing side.
    pub witness: Option<(usize, Subspace, MissingNeighbour)>,
}

/// Neighbour test: every word has a word of the previous level below it and a
/// word of the next level above it (`{0}` and `F_q^n` at the ends).
pub fn is_generating_set(p: &CodeProduct) -> GeneratingReport {
    let r = p.len();
    for (i, c) in p.components.iter().enumerate() {
        for u in c.words() {
            let below = i == 0
                || p.components[i - 1]
                    .words()
                    .iter()
                    .any(|w| w.is_subspace_of_unchecked(u));
            if !below {
                return GeneratingReport {
                    generating: false,
                    witness: Some((i + 1, u.clone(), MissingNeighbour::Below)),
                };
            }
            let above = i + 1 == r
                || p.components[i + 1]
                    .words()
                    .iter()
                    .any(|w| u.is_subspace_of_unchecked(w));
            if !above {
                return GeneratingReport {
                    generating: false,
                    witness: Some((i + 1, u.clone(), MissingNeighbour::Above)),
                };
            }
        }
    }
    GeneratingReport {
        generating: true,
        witness: None,
    }
}

/// Product test: the flags of the product exist and project onto every component.
pub fn generates_via_product(p: &CodeProduct) -> Result<bool> {
    Ok(match product_flags(p)? {
        None => false,
        Some(c) => c.projected_codes() == p.components,
    })
}

/// The unique SIC flag code generated by `p`.
pub fn sic_closure(p: &CodeProduct) -> Result<FlagCode> {
    let report = is_generating_set(p);
    if let Some((level, _, _)) = report.witness {
        return Err(Error::NotGenerating { level });
    }
    Ok(product_flags(p)?.expect("generating sets produce flags"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SicReport {
    pub sic: bool,
    /// A spliced flag missing from the code, with the 1-based level where the splice starts.
    pub witness: Option<(usize, Flag)>,
}

/// Splice test: whenever `F_{i-1}` lies in `F'_i`, the flag
/// `(F_1, ..., F_{i-1}, F'_i, ..., F'_r)` must be in the code.
pub fn is_sic(c: &FlagCode) -> SicReport {
    let r = c.typevec().len();
    let mut witness = None;
    'outer: for i in 2..=r {
        for f in c.flags() {
            for g in c.flags() {
                if f.level(i - 1).is_subspace_of_unchecked(g.level(i)) {
                    let mut spaces = f.spaces()[..i - 1].to_vec();
                    spaces.extend_from_slice(&g.spaces()[i - 1..]);
                    let spliced = Flag::from_spaces_unchecked(spaces);
                    if !c.contains(&spliced) {
                        witness = Some((i, spliced));
                        break 'outer;
                    }
                }
            }
        }
    }
    let report = SicReport {
        sic: witness.is_none(),
        witness,
    };
    debug_assert_eq!(report.sic, closure_contained(c));
    report
}

fn closure_contained(c: &FlagCode) -> bool {
    match product_flags(&CodeProduct::of_projected(c)) {
        Ok(Some(all)) => all.flags().iter().all(|f| c.contains(f)),
        _ => true,
    }
}

/// `m_C(F_i)` for every flag (in code order) and level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub rows: Vec<Vec<usize>>,
    /// Distinct words of each level with their multiplicities, in word order.
    pub levels: Vec<Vec<(Subspace, usize)>>,
}

impl MultiplicityTable {
    /// Multiplicity of the 1-based `level` component of flag number `flag`.
    pub fn get(&self, flag: usize, level: usize) -> usize {
        self.rows[flag][level - 1]
    }

    /// Sum of multiplicities over the distinct words of each level; always `|C|`.
    pub fn level_totals(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.iter().map(|(_, m)| m).sum()).collect()
    }
}

pub fn multiplicities(c: &FlagCode) -> MultiplicityTable {
    let r = c.typevec().len();
    let levels: Vec<Vec<(Subspace, usize)>> = (1..=r)
        .map(|i| {
            let mut counts: std::collections::BTreeMap<&Subspace, usize> = Default::default();
            for f in c.flags() {
                *counts.entry(f.level(i)).or_default() += 1;
            }
            counts.into_iter().map(|(u, m)| (u.clone(), m)).collect()
        })
        .collect();
    let rows = c
        .flags()
        .iter()
        .map(|f| {
            (1..=r)
                .map(|i| {
                    let l = &levels[i - 1];
                    l[l.binary_search_by(|(u, _)| u.cmp(f.level(i))).expect("word present")].1
                })
                .collect()
        })
        .collect();
    MultiplicityTable { rows, levels }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeterminedReport {
    pub determined: bool,
    pub sic: SicReport,
    pub multiplicities: MultiplicityTable,
    /// First flag whose components all have multiplicity at least 2.
    pub removable: Option<Flag>,
}

/// SIC and every flag has a component of multiplicity 1.
pub fn is_determined(c: &FlagCode) -> DeterminedReport {
    let sic = is_sic(c);
    let mult = multiplicities(c);
    let removable = c
        .flags()
        .iter()
        .zip(&mult.rows)
        .find(|(_, row)| row.iter().all(|&m| m >= 2))
        .map(|(f, _)| f.clone());
    DeterminedReport {
        determined: sic.sic && removable.is_none(),
        sic,
        multiplicities: mult,
        removable,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use crate::grassmann::AmbientSpace;

    fn amb(n: usize) -> AmbientSpace {
        AmbientSpace::new(&Field::with_order(2).unwrap(), n).unwrap()
    }

    fn sp(a: &AmbientSpace, vs: &[&[u64]]) -> Subspace {
        Subspace::from_vectors(a, &vs.iter().map(|v| v.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn cdc(words: Vec<Subspace>) -> ConstantDimensionCode {
        ConstantDimensionCode::new(words).unwrap()
    }

    fn flag(c: &FlagCode, spaces: Vec<Subspace>) -> Flag {
        Flag::new(c.typevec(), spaces).unwrap()
    }

    fn example_product(a: &AmbientSpace) -> CodeProduct {
        CodeProduct::new(vec![
            cdc(vec![sp(a, &[&[1, 0, 0]]), sp(a, &[&[0, 1, 0]])]),
            cdc(vec![sp(a, &[&[1, 0, 0], &[0, 1, 0]]), sp(a, &[&[0, 1, 0], &[0, 0, 1]])]),
        ])
        .unwrap()
    }

    #[test]
    fn no_flag_product() {
        let a = amb(3);
        let p = CodeProduct::new(vec![
            cdc(vec![sp(&a, &[&[1, 0, 0]]), sp(&a, &[&[1, 0, 1]])]),
            cdc(vec![
                sp(&a, &[&[1, 1, 0], &[0, 0, 1]]),
                sp(&a, &[&[0, 1, 0], &[0, 0, 1]]),
            ]),
        ])
        .unwrap();
        assert_eq!(product_flags(&p).unwrap(), None);
        assert!(!is_generating_set(&p).generating);
        assert!(!generates_via_product(&p).unwrap());
        assert!(matches!(sic_closure(&p), Err(Error::NotGenerating { .. })));
    }

    #[test]
    fn not_generating_product() {
        let a = amb(3);
        let p = CodeProduct::new(vec![
            cdc(vec![sp(&a, &[&[1, 0, 0]]), sp(&a, &[&[0, 1, 0]])]),
            cdc(vec![
                sp(&a, &[&[0, 1, 0], &[1, 0, 1]]),
                sp(&a, &[&[0, 1, 0], &[0, 0, 1]]),
            ]),
        ])
        .unwrap();
        let flags = product_flags(&p).unwrap().unwrap();
        assert_eq!(flags.len(), 2);
        let rep = is_generating_set(&p);
        assert!(!rep.generating);
        let (level, u, side) = rep.witness.unwrap();
        assert_eq!((level, side), (1, MissingNeighbour::Above));
        assert_eq!(u, sp(&a, &[&[1, 0, 0]]));
        assert!(!generates_via_product(&p).unwrap());
    }

    #[test]
    fn generating_example_and_closure() {
        let a = amb(3);
        let p = example_product(&a);
        assert!(is_generating_set(&p).generating);
        assert!(generates_via_product(&p).unwrap());
        let c = sic_closure(&p).unwrap();
        assert_eq!(c.len(), 3);
        assert!(is_sic(&c).sic);
        assert_eq!(c.projected_codes(), p.components());
        let again = sic_closure(&CodeProduct::of_projected(&c)).unwrap();
        assert_eq!(again, c);
    }

    #[test]
    fn sic_witness_and_multiplicities() {
        let a = amb(3);
        let c = sic_closure(&example_product(&a)).unwrap();
        let e1 = sp(&a, &[&[1, 0, 0]]);
        let e2 = sp(&a, &[&[0, 1, 0]]);
        let e12 = sp(&a, &[&[1, 0, 0], &[0, 1, 0]]);
        let e23 = sp(&a, &[&[0, 1, 0], &[0, 0, 1]]);
        let f = flag(&c, vec![e1.clone(), e12.clone()]);
        let f1 = flag(&c, vec![e2.clone(), e23.clone()]);
        let f2 = flag(&c, vec![e2.clone(), e12.clone()]);
        let sub = FlagCode::new(c.typevec(), vec![f.clone(), f1.clone()]).unwrap();
        let rep = is_sic(&sub);
        assert!(!rep.sic);
        assert_eq!(rep.witness, Some((2, f2.clone())));

        let m = multiplicities(&c);
        let idx = |g: &Flag| c.flags().iter().position(|x| x == g).unwrap();
        assert_eq!((m.get(idx(&f), 1), m.get(idx(&f), 2)), (1, 2));
        assert_eq!((m.get(idx(&f1), 1), m.get(idx(&f1), 2)), (2, 1));
        assert_eq!((m.get(idx(&f2), 1), m.get(idx(&f2), 2)), (2, 2));
        assert_eq!(m.level_totals(), vec![3, 3]);

        let det = is_determined(&c);
        assert!(!det.determined && det.sic.sic);
        assert_eq!(det.removable, Some(f2));
    }

    #[test]
    fn determined_example_on_five_space() {
        let a = amb(5);
        let e = |i: &[usize]| Subspace::coordinate(&a, i).unwrap();
        let tv = TypeVector::new(&a, &[1, 2]).unwrap();
        let c = FlagCode::from_spaces(
            &tv,
            vec![
                vec![e(&[1]), e(&[1, 2])],
                vec![e(&[2]), e(&[1, 2])],
                vec![e(&[3]), e(&[3, 4])],
                vec![e(&[3]), e(&[3, 5])],
            ],
        )
        .unwrap();
        let det = is_determined(&c);
        assert!(det.determined);
        assert!(det.removable.is_none());
        let single = FlagCode::new(&tv, vec![c.flags()[0].clone()]).unwrap();
        assert!(is_determined(&single).determined);
    }

    #[test]
    fn node_budget_is_enforced() {
        let a = amb(3);
        let p = example_product(&a);
        assert!(matches!(product_flags_with_budget(&p, 2), Err(Error::TooLarge { .. })));
    }
}
