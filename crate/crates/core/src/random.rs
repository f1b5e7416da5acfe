//! Seeded random flag codes and code products.
//!
//! All sampling goes through `ChaCha8Rng::seed_from_u64(seed)`. Matrix entries
//! are drawn with `random_range(0..q)` in row-major order, so a seed fixes the
//! output completely.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cdc::ConstantDimensionCode;
use crate::error::{Error, Result};
use crate::flags::{Flag, FlagCode, TypeVector};
use crate::genset::CodeProduct;
use crate::grassmann::{AmbientSpace, Subspace};
use crate::linalg::Matrix;

/// Attempts allowed per requested flag before giving up.
pub const ATTEMPTS_PER_FLAG: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    Generic,
    /// No two flags share a component at any level.
    Disjoint,
    /// Every pair of flags at the maximum flag distance.
    OdfcAttempt,
}

impl Profile {
    pub fn parse(s: &str) -> Result<Profile> {
        match s {
            "generic" => Ok(Profile::Generic),
            "disjoint" => Ok(Profile::Disjoint),
            "odfc-attempt" => Ok(Profile::OdfcAttempt),
            other => Err(Error::Parse(format!("unknown profile {other:?}"))),
        }
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_full_rank(rng: &mut ChaCha8Rng, amb: &AmbientSpace, rows: usize) -> Matrix {
    let q = amb.field().q();
    loop {
        let data: Vec<u8> = (0..rows * amb.n()).map(|_| rng.random_range(0..q) as u8).collect();
        let m = Matrix::new(amb.field(), rows, amb.n(), data).expect("entries below q");
        if m.rank() == rows {
            return m;
        }
    }
}

/// A flag of the given type from the leading rows of a random full-rank matrix.
pub fn random_flag(rng: &mut ChaCha8Rng, typevec: &TypeVector) -> Flag {
    let amb = typevec.ambient();
    let top = *typevec.dims().last().unwrap();
    let m = random_full_rank(rng, amb, top);
    let spaces = typevec
        .dims()
        .iter()
        .map(|&t| {
            let rows = Matrix::new(amb.field(), t, amb.n(), m.data()[..t * amb.n()].to_vec()).expect("prefix rows");
            Subspace::from_rows(amb, &rows).expect("same ambient")
        })
        .collect();
    Flag::new(typevec, spaces).expect("prefixes are nested")
}

/// A random code of `size` flags. Fails with `Infeasible` when the profile
/// cannot be met within the attempt budget.
pub fn random_flagcode(seed: u64, typevec: &TypeVector, size: usize, profile: Profile) -> Result<FlagCode> {
    if size == 0 {
        return Err(Error::EmptyCode);
    }
    let mut rng = rng_from_seed(seed);
    let bound = typevec.distance_bound();
    let mut flags: BTreeSet<Flag> = BTreeSet::new();
    let mut attempts = 0usize;
    while flags.len() < size {
        attempts += 1;
        if attempts > ATTEMPTS_PER_FLAG * size {
            return Err(Error::Infeasible(format!(
                "could not place {size} flags of type {:?} in F_{}^{} with profile {profile:?}",
                typevec.dims(),
                typevec.ambient().field().q(),
                typevec.n()
            )));
        }
        let f = random_flag(&mut rng, typevec);
        let ok = match profile {
            Profile::Generic => true,
            Profile::Disjoint => flags
                .iter()
                .all(|g| f.spaces().iter().zip(g.spaces()).all(|(u, v)| u != v)),
            Profile::OdfcAttempt => flags.iter().all(|g| f.distance_unchecked(g) == bound),
        };
        if ok {
            flags.insert(f);
        }
    }
    FlagCode::new(typevec, flags.into_iter().collect())
}

/// The projected codes of a random code, with `extra` further random words
/// added at random levels, so the result may or may not be a generating set.
pub fn random_product(seed: u64, typevec: &TypeVector, size: usize, extra: usize) -> Result<CodeProduct> {
    let base = random_flagcode(seed, typevec, size, Profile::Generic)?;
    let mut rng = rng_from_seed(seed ^ 0x9e37_79b9_7f4a_7c15);
    let amb = typevec.ambient();
    let mut levels: Vec<Vec<Subspace>> = base.projected_codes().iter().map(|c| c.words().to_vec()).collect();
    for _ in 0..extra {
        let i = rng.random_range(0..levels.len());
        let t = typevec.dims()[i];
        let m = random_full_rank(&mut rng, amb, t);
        levels[i].push(Subspace::from_rows(amb, &m).expect("same ambient"));
    }
    let comps = levels
        .into_iter()
        .map(ConstantDimensionCode::new)
        .collect::<Result<Vec<_>>>()?;
    CodeProduct::new(comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    fn tv(q: u64, n: usize, dims: &[usize]) -> TypeVector {
        TypeVector::new(&AmbientSpace::new(&Field::with_order(q).unwrap(), n).unwrap(), dims).unwrap()
    }

    #[test]
    fn seeds_are_deterministic() {
        let t = tv(2, 5, &[1, 3]);
        let a = random_flagcode(1, &t, 5, Profile::Generic).unwrap();
        let b = random_flagcode(1, &t, 5, Profile::Generic).unwrap();
        assert_eq!(a, b);
        let c = random_flagcode(2, &t, 5, Profile::Generic).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn profiles_hold() {
        let t = tv(2, 5, &[1, 2, 4]);
        for seed in 0..10 {
            assert!(random_flagcode(seed, &t, 4, Profile::Disjoint).unwrap().is_disjoint());
        }
        let t = tv(2, 6, &[1, 2]);
        for seed in 0..10 {
            let c = random_flagcode(seed, &t, 4, Profile::OdfcAttempt).unwrap();
            assert!(c.is_odfc_direct());
        }
    }

    #[test]
    fn infeasible_requests_fail() {
        let t = tv(2, 3, &[1]);
        assert!(matches!(
            random_flagcode(0, &t, 8, Profile::Generic),
            Err(Error::Infeasible(_))
        ));
        assert!(random_flagcode(0, &t, 7, Profile::Generic).is_ok());
    }

    #[test]
    fn products_project_onto_their_base() {
        let t = tv(2, 4, &[1, 2]);
        let p = random_product(3, &t, 3, 0).unwrap();
        assert!(crate::genset::is_generating_set(&p).generating);
    }
}
