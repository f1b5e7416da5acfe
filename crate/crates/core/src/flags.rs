//! Flags, flag codes, flag distance and projected codes.
//!
//! Levels are reported 1-based throughout, matching the usual `F_1, ..., F_r`
//! indexing of flag components.

use crate::cdc::ConstantDimensionCode;
use crate::error::{Error, Result};
use crate::gf::FieldAutomorphism;
use crate::grassmann::{AmbientSpace, GroupElement, Subspace};
use crate::linalg::Matrix;
use crate::search::RowCheck;

/// Strictly increasing dimensions `0 < t_1 < ... < t_r < n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeVector {
    ambient: AmbientSpace,
    dims: Vec<usize>,
}

/// The two distinguished dimensions `t_a = max{t_i : 2t_i <= n}` and
/// `t_b = min{t_i : 2t_i >= n}`, with their 1-based levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypeExtremes {
    pub a: Option<usize>,
    pub t_a: Option<usize>,
    pub b: Option<usize>,
    pub t_b: Option<usize>,
}

impl TypeVector {
    pub fn new(ambient: &AmbientSpace, dims: &[usize]) -> Result<TypeVector> {
        let n = ambient.n();
        if dims.is_empty() {
            return Err(Error::InvalidType("type vector is empty".into()));
        }
        if dims[0] == 0 || *dims.last().unwrap() >= n {
            return Err(Error::InvalidType(format!(
                "dimensions {dims:?} must lie strictly between 0 and {n}"
            )));
        }
        if dims.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidType(format!(
                "dimensions {dims:?} are not strictly increasing"
            )));
        }
        Ok(TypeVector {
            ambient: ambient.clone(),
            dims: dims.to_vec(),
        })
    }

    pub fn ambient(&self) -> &AmbientSpace {
        &self.ambient
    }

    pub fn n(&self) -> usize {
        self.ambient.n()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Number of levels `r`.
    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `sum_i min{2t_i, 2(n - t_i)}`.
    pub fn distance_bound(&self) -> usize {
        let n = self.n();
        self.dims.iter().map(|&t| (2 * t).min(2 * (n - t))).sum()
    }

    pub fn extremes(&self) -> TypeExtremes {
        let n = self.n();
        let a = self.dims.iter().rposition(|&t| 2 * t <= n);
        let b = self.dims.iter().position(|&t| 2 * t >= n);
        TypeExtremes {
            a: a.map(|i| i + 1),
            t_a: a.map(|i| self.dims[i]),
            b: b.map(|i| i + 1),
            t_b: b.map(|i| self.dims[i]),
        }
    }
}

pub fn type_extremes(typevec: &TypeVector) -> TypeExtremes {
    typevec.extremes()
}

pub fn flag_distance_bound(typevec: &TypeVector) -> usize {
    typevec.distance_bound()
}

/// A sequence of properly nested subspaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag {
    spaces: Vec<Subspace>,
}

impl Flag {
    pub fn new(typevec: &TypeVector, spaces: Vec<Subspace>) -> Result<Flag> {
        if spaces.len() != typevec.len() {
            return Err(Error::InvalidType(format!(
                "expected {} subspaces, got {}",
                typevec.len(),
                spaces.len()
            )));
        }
        for (u, &t) in spaces.iter().zip(typevec.dims()) {
            if &u.ambient() != typevec.ambient() {
                return Err(Error::AmbientMismatch);
            }
            if u.dim() != t {
                return Err(Error::DimensionMismatch {
                    expected: t,
                    got: u.dim(),
                });
            }
        }
        for (i, w) in spaces.windows(2).enumerate() {
            if !w[0].is_subspace_of_unchecked(&w[1]) {
                return Err(Error::NotNested { level: i + 2 });
            }
        }
        Ok(Flag { spaces })
    }

    pub(crate) fn from_spaces_unchecked(spaces: Vec<Subspace>) -> Flag {
        Flag { spaces }
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    /// Component at a 1-based level.
    pub fn level(&self, level: usize) -> &Subspace {
        &self.spaces[level - 1]
    }

    pub fn len(&self) -> usize {
        self.spaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spaces.is_empty()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    fn same_type(&self, other: &Flag) -> bool {
        self.spaces.len() == other.spaces.len()
            && self
                .spaces
                .iter()
                .zip(&other.spaces)
                .all(|(u, v)| u.dim() == v.dim() && u.same_ambient(v))
    }

    pub fn distance(&self, other: &Flag) -> Result<usize> {
        if !self.same_type(other) {
            return Err(Error::TypeMismatch);
        }
        Ok(self.distance_unchecked(other))
    }

    pub(crate) fn distance_unchecked(&self, other: &Flag) -> usize {
        self.spaces
            .iter()
            .zip(&other.spaces)
            .map(|(u, v)| u.distance(v).expect("same ambient"))
            .sum()
    }

    pub fn act(&self, g: &GroupElement) -> Result<Flag> {
        let spaces = self.spaces.iter().map(|u| u.act(g)).collect::<Result<Vec<_>>>()?;
        Ok(Flag { spaces })
    }

    pub(crate) fn act_unchecked(&self, m: &Matrix, phi: FieldAutomorphism) -> Flag {
        Flag {
            spaces: self.spaces.iter().map(|u| u.act_unchecked(m, phi)).collect(),
        }
    }
}

pub fn make_flag(typevec: &TypeVector, spaces: Vec<Subspace>) -> Result<Flag> {
    Flag::new(typevec, spaces)
}

pub fn flag_distance(f: &Flag, g: &Flag) -> Result<usize> {
    f.distance(g)
}

/// A nonempty set of flags of one type, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagCode {
    typevec: TypeVector,
    flags: Vec<Flag>,
}

impl FlagCode {
    /// Builds a code; duplicate flags collapse.
    pub fn new(typevec: &TypeVector, mut flags: Vec<Flag>) -> Result<FlagCode> {
        if flags.is_empty() {
            return Err(Error::EmptyCode);
        }
        for f in &flags {
            if f.dims() != typevec.dims() {
                return Err(Error::TypeMismatch);
            }
            if &f.spaces[0].ambient() != typevec.ambient() {
                return Err(Error::AmbientMismatch);
            }
        }
        flags.sort();
        flags.dedup();
        Ok(FlagCode {
            typevec: typevec.clone(),
            flags,
        })
    }

    /// Builds a code from flags given as subspace lists, validating each.
    pub fn from_spaces(typevec: &TypeVector, flags: Vec<Vec<Subspace>>) -> Result<FlagCode> {
        let flags = flags
            .into_iter()
            .map(|s| Flag::new(typevec, s))
            .collect::<Result<Vec<_>>>()?;
        FlagCode::new(typevec, flags)
    }

    pub fn typevec(&self) -> &TypeVector {
        &self.typevec
    }

    pub fn ambient(&self) -> &AmbientSpace {
        self.typevec.ambient()
    }

    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, f: &Flag) -> bool {
        self.flags.binary_search(f).is_ok()
    }

    /// Minimum pairwise flag distance, 0 for a singleton.
    pub fn min_distance(&self) -> usize {
        let mut best: Option<usize> = None;
        for (i, f) in self.flags.iter().enumerate() {
            for g in &self.flags[i + 1..] {
                let d = f.distance_unchecked(g);
                best = Some(best.map_or(d, |b| b.min(d)));
            }
        }
        best.unwrap_or(0)
    }

    pub fn distance_bound(&self) -> usize {
        self.typevec.distance_bound()
    }

    /// Projected code at a 1-based level.
    pub fn projected_code(&self, level: usize) -> ConstantDimensionCode {
        let words = self.flags.iter().map(|f| f.level(level).clone()).collect();
        ConstantDimensionCode::new(words).expect("flag codes are nonempty")
    }

    pub fn projected_codes(&self) -> Vec<ConstantDimensionCode> {
        (1..=self.typevec.len()).map(|i| self.projected_code(i)).collect()
    }

    pub fn projected_sizes(&self) -> Vec<usize> {
        self.projected_codes().iter().map(ConstantDimensionCode::len).collect()
    }

    pub fn is_disjoint(&self) -> bool {
        self.projected_sizes().iter().all(|&s| s == self.len())
    }

    pub fn act(&self, g: &GroupElement) -> Result<FlagCode> {
        let flags = self.flags.iter().map(|f| f.act(g)).collect::<Result<Vec<_>>>()?;
        FlagCode::new(&self.typevec, flags)
    }

    /// One check per flag: its image is a flag of `target`.
    pub(crate) fn image_checks<'a>(&'a self, target: &'a FlagCode) -> Vec<RowCheck<'a>> {
        self.flags
            .iter()
            .map(|f| {
                let top = f.spaces.last().expect("flags are nonempty");
                RowCheck::new(top.support_len(), move |m: &Matrix, phi| {
                    let img = f.act_unchecked(m, phi);
                    img.spaces.iter().zip(self.typevec.dims()).all(|(u, &t)| u.dim() == t) && target.contains(&img)
                })
            })
            .collect()
    }

    pub fn is_odfc_direct(&self) -> bool {
        self.len() > 1 && self.min_distance() == self.distance_bound()
    }

    /// Disjoint with every projected code of maximum distance.
    pub fn is_odfc_via_disjoint(&self) -> bool {
        let n = self.len();
        self.projected_codes()
            .iter()
            .all(|c| c.len() == n && c.is_max_distance())
    }

    /// `|C| = |C_i|` and `C_i` of maximum distance for the levels of `t_a` and `t_b`;
    /// when only one of them exists, that level alone is checked.
    pub fn is_odfc_via_extremes(&self) -> bool {
        let ext = self.typevec.extremes();
        let mut levels: Vec<usize> = ext.a.into_iter().chain(ext.b).collect();
        levels.dedup();
        levels.iter().all(|&i| {
            let c = self.projected_code(i);
            c.len() == self.len() && c.is_max_distance()
        })
    }
}

pub fn min_flag_distance(c: &FlagCode) -> usize {
    c.min_distance()
}

pub fn projected_codes(c: &FlagCode) -> Vec<ConstantDimensionCode> {
    c.projected_codes()
}

pub fn is_disjoint(c: &FlagCode) -> bool {
    c.is_disjoint()
}

pub fn is_odfc_direct(c: &FlagCode) -> bool {
    c.is_odfc_direct()
}

pub fn is_odfc_via_projected(c: &FlagCode) -> bool {
    c.is_odfc_via_extremes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    fn amb(q: u64, n: usize) -> AmbientSpace {
        AmbientSpace::new(&Field::with_order(q).unwrap(), n).unwrap()
    }

    fn e(a: &AmbientSpace, idx: &[usize]) -> Subspace {
        Subspace::coordinate(a, idx).unwrap()
    }

    fn code(a: &AmbientSpace, dims: &[usize], flags: &[&[&[usize]]]) -> FlagCode {
        let tv = TypeVector::new(a, dims).unwrap();
        FlagCode::from_spaces(&tv, flags.iter().map(|f| f.iter().map(|s| e(a, s)).collect()).collect()).unwrap()
    }

    #[test]
    fn type_vector_validation() {
        let a = amb(2, 3);
        assert!(TypeVector::new(&a, &[1, 2]).is_ok());
        assert!(matches!(TypeVector::new(&a, &[2, 2]), Err(Error::InvalidType(_))));
        assert!(matches!(TypeVector::new(&a, &[0, 2]), Err(Error::InvalidType(_))));
        assert!(matches!(TypeVector::new(&a, &[1, 3]), Err(Error::InvalidType(_))));
        assert!(matches!(TypeVector::new(&a, &[]), Err(Error::InvalidType(_))));
    }

    #[test]
    fn make_flag_examples() {
        let a = amb(2, 3);
        let tv = TypeVector::new(&a, &[1, 2]).unwrap();
        assert!(make_flag(&tv, vec![e(&a, &[1]), e(&a, &[1, 2])]).is_ok());
        assert_eq!(
            make_flag(&tv, vec![e(&a, &[1]), e(&a, &[2, 3])]).unwrap_err(),
            Error::NotNested { level: 2 }
        );
        assert!(matches!(
            make_flag(&tv, vec![e(&a, &[1, 2]), e(&a, &[1, 2])]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn flag_distance_examples() {
        let a = amb(2, 3);
        let tv = TypeVector::new(&a, &[1, 2]).unwrap();
        let f1 = make_flag(&tv, vec![e(&a, &[1]), e(&a, &[1, 2])]).unwrap();
        let f2 = make_flag(&tv, vec![e(&a, &[2]), e(&a, &[2, 3])]).unwrap();
        assert_eq!(flag_distance(&f1, &f1).unwrap(), 0);
        assert_eq!(flag_distance(&f1, &f2).unwrap(), 4);
        assert_eq!(flag_distance(&f2, &f1).unwrap(), 4);
        let tv1 = TypeVector::new(&a, &[1]).unwrap();
        let g = make_flag(&tv1, vec![e(&a, &[1])]).unwrap();
        assert_eq!(flag_distance(&f1, &g).unwrap_err(), Error::TypeMismatch);
    }

    #[test]
    fn bounds_and_extremes() {
        let a6 = amb(2, 6);
        assert_eq!(TypeVector::new(&a6, &[2, 4]).unwrap().distance_bound(), 8);
        assert_eq!(TypeVector::new(&amb(2, 3), &[1, 2]).unwrap().distance_bound(), 4);
        let ext = TypeVector::new(&amb(2, 10), &[4, 7]).unwrap().extremes();
        assert_eq!((ext.t_a, ext.t_b, ext.a, ext.b), (Some(4), Some(7), Some(1), Some(2)));
        let ext = TypeVector::new(&amb(2, 4), &[1, 3]).unwrap().extremes();
        assert_eq!((ext.t_a, ext.t_b), (Some(1), Some(3)));
        let ext = TypeVector::new(&a6, &[1, 2]).unwrap().extremes();
        assert_eq!((ext.t_a, ext.t_b), (Some(2), None));
        let ext = TypeVector::new(&a6, &[4, 5]).unwrap().extremes();
        assert_eq!((ext.t_a, ext.t_b), (None, Some(4)));
        let ext = TypeVector::new(&a6, &[1, 3, 5]).unwrap().extremes();
        assert_eq!((ext.a, ext.b, ext.t_a, ext.t_b), (Some(2), Some(2), Some(3), Some(3)));
    }

    #[test]
    fn projected_codes_and_disjointness() {
        let a = amb(2, 3);
        let c = code(&a, &[1, 2], &[&[&[1], &[1, 2]], &[&[2], &[2, 3]], &[&[2], &[1, 2]]]);
        let proj = c.projected_codes();
        assert_eq!(proj[0].words(), &[e(&a, &[2]), e(&a, &[1])]);
        assert_eq!(proj[1].len(), 2);
        assert!(proj[1].contains(&e(&a, &[1, 2])) && proj[1].contains(&e(&a, &[2, 3])));
        assert!(!c.is_disjoint());
        assert_eq!(c.min_distance(), 2);
        assert!(!c.is_odfc_direct());

        let single = code(&a, &[1, 2], &[&[&[1], &[1, 2]]]);
        assert!(single.is_disjoint());
        assert_eq!(single.min_distance(), 0);
        assert!(single.projected_codes().iter().all(|c| c.len() == 1));
        assert!(!single.is_odfc_direct() && !single.is_odfc_via_disjoint() && !single.is_odfc_via_extremes());
    }

    #[test]
    fn type24_code_is_optimum_by_every_route() {
        let a = amb(2, 6);
        let c = code(&a, &[2, 4], &[&[&[1, 2], &[1, 2, 3, 4]], &[&[3, 4], &[3, 4, 5, 6]]]);
        assert!(c.is_disjoint());
        assert_eq!(c.min_distance(), 8);
        assert!(c.is_odfc_direct());
        assert!(c.is_odfc_via_disjoint());
        assert!(c.is_odfc_via_extremes());
    }

    #[test]
    fn action_preserves_structure() {
        let a = amb(2, 3);
        let c = code(&a, &[1, 2], &[&[&[1], &[1, 2]], &[&[2], &[2, 3]]]);
        let m = Matrix::from_rows(a.field(), 3, &[vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]]).unwrap();
        let g = GroupElement::linear(m).unwrap();
        let moved = c.act(&g).unwrap();
        assert_eq!(moved.len(), c.len());
        assert_eq!(moved.min_distance(), c.min_distance());
        for (i, p) in c.projected_codes().iter().enumerate() {
            assert_eq!(&p.act(&g).unwrap(), &moved.projected_code(i + 1));
        }
    }
}
