//! Named example codes, built over any field from coordinate data.

use crate::cdc::ConstantDimensionCode;
use crate::error::{Error, Result};
use crate::flags::{FlagCode, TypeVector};
use crate::genset::CodeProduct;
use crate::gf::Field;
use crate::grassmann::{AmbientSpace, Subspace};
use crate::io::Document;

/// Every fixture name, in listing order.
pub const FIXTURE_NAMES: &[&str] = &[
    "sec3_no_flag_product",
    "sec3_not_genset_product",
    "sec3_example_genset",
    "sec3_C",
    "sec3_Cprime",
    "sec3_Cdoubleprime",
    "sec4_C",
    "sec4_Cprime",
    "sec4_aut_strict",
    "sec4_aut_equal_nonsic",
    "sec5_increasing_123",
    "sec5_disjoint_type24",
    "sec5_type24_with_extra",
    "sec5_n10_type47",
    "sec5_type13_odfc",
    "frobenius_cdc",
    "frobenius_flagcode",
];

/// Fixtures that need a proper extension field; their default order is 4.
pub fn default_order(name: &str) -> u64 {
    if name.starts_with("frobenius_") {
        4
    } else {
        2
    }
}

/// A vector given by its 1-based support, each entry 1.
type Span<'a> = &'a [&'a [usize]];

struct Builder {
    amb: AmbientSpace,
}

impl Builder {
    fn new(q: u64, n: usize) -> Result<Builder> {
        Ok(Builder {
            amb: AmbientSpace::new(&Field::with_order(q)?, n)?,
        })
    }

    fn space(&self, vectors: Span) -> Subspace {
        let n = self.amb.n();
        let rows: Vec<Vec<u64>> = vectors
            .iter()
            .map(|support| {
                let mut v = vec![0u64; n];
                for &i in *support {
                    v[i - 1] = 1;
                }
                v
            })
            .collect();
        Subspace::from_vectors(&self.amb, &rows).expect("fixture vectors fit the ambient space")
    }

    fn cdc(&self, words: &[Span]) -> ConstantDimensionCode {
        ConstantDimensionCode::new(words.iter().map(|w| self.space(w)).collect()).expect("fixture codes are valid")
    }

    fn flagcode(&self, dims: &[usize], flags: &[&[Span]]) -> Document {
        let tv = TypeVector::new(&self.amb, dims).expect("fixture types are valid");
        let flags = flags
            .iter()
            .map(|f| f.iter().map(|s| self.space(s)).collect())
            .collect();
        Document::FlagCode(FlagCode::from_spaces(&tv, flags).expect("fixture flags are valid"))
    }

    fn product(&self, comps: &[&[Span]]) -> Document {
        Document::Product(
            CodeProduct::new(comps.iter().map(|c| self.cdc(c)).collect()).expect("fixture products are valid"),
        )
    }
}

// Standard basis vectors and their sums, as supports.
const E1: &[usize] = &[1];
const E2: &[usize] = &[2];
const E3: &[usize] = &[3];
const E4: &[usize] = &[4];
const E5: &[usize] = &[5];
const E6: &[usize] = &[6];
const E7: &[usize] = &[7];
const E8: &[usize] = &[8];
const E9: &[usize] = &[9];
const E10: &[usize] = &[10];
const E1_E2: &[usize] = &[1, 2];
const E1_E3: &[usize] = &[1, 3];

/// Builds the named fixture over `F_q` (`None` selects the default order).
pub fn fixture(name: &str, q: Option<u64>) -> Result<Document> {
    if !FIXTURE_NAMES.contains(&name) {
        return Err(Error::UnknownFixture(name.to_string()));
    }
    let q = q.unwrap_or_else(|| default_order(name));
    if name.starts_with("frobenius_") {
        return frobenius_fixture(name, q);
    }
    let n = match name {
        "sec3_Cdoubleprime" => 5,
        "sec5_increasing_123" | "sec5_type13_odfc" => 4,
        "sec5_disjoint_type24" | "sec5_type24_with_extra" => 6,
        "sec5_n10_type47" => 10,
        _ => 3,
    };
    let b = Builder::new(q, n)?;
    let f1: &[Span] = &[&[E1], &[E1, E2]];
    let f2: &[Span] = &[&[E2], &[E2, E3]];
    let f3: &[Span] = &[&[E2], &[E1, E2]];
    Ok(match name {
        "sec3_no_flag_product" => b.product(&[&[&[E1], &[E1_E3]], &[&[E1_E2, E3], &[E2, E3]]]),
        "sec3_not_genset_product" => b.product(&[&[&[E1], &[E2]], &[&[E2, E1_E3], &[E2, E3]]]),
        "sec3_example_genset" => b.product(&[&[&[E1], &[E2]], &[&[E1, E2], &[E2, E3]]]),
        "sec3_C" | "sec4_C" => b.flagcode(&[1, 2], &[f1, f2, f3]),
        "sec3_Cprime" | "sec4_aut_equal_nonsic" => b.flagcode(&[1, 2], &[f1, f2]),
        "sec3_Cdoubleprime" => b.flagcode(
            &[1, 2],
            &[
                &[&[E1], &[E1, E2]],
                &[&[E2], &[E1, E2]],
                &[&[E3], &[E3, E4]],
                &[&[E3], &[E3, E5]],
            ],
        ),
        "sec4_Cprime" => b.flagcode(&[1, 2], &[f3, &[&[E1], &[E1, E3]]]),
        "sec4_aut_strict" => b.flagcode(&[1, 2], &[f1, f2, &[&[E3], &[E1, E3]]]),
        "sec5_increasing_123" => b.flagcode(
            &[1, 2, 3],
            &[
                &[&[E1], &[E1, E2], &[E1, E2, E3]],
                &[&[E1], &[E1, E2], &[E1, E2, E4]],
                &[&[E3], &[E3, E4], &[E1, E3, E4]],
            ],
        ),
        "sec5_disjoint_type24" => b.flagcode(
            &[2, 4],
            &[&[&[E1, E2], &[E1, E2, E3, E4]], &[&[E3, E4], &[E3, E4, E5, E6]]],
        ),
        "sec5_type24_with_extra" => b.flagcode(
            &[2, 4],
            &[
                &[&[E1, E2], &[E1, E2, E3, E4]],
                &[&[E3, E4], &[E3, E4, E5, E6]],
                &[&[E3, E4], &[E1, E2, E3, E4]],
            ],
        ),
        "sec5_n10_type47" => b.flagcode(
            &[4, 7],
            &[
                &[&[E1, E2, E3, E4], &[E1, E2, E3, E4, E5, E6, E7]],
                &[&[E1, E2, E3, E4], &[E1, E2, E3, E4, E8, E9, E10]],
                &[&[E5, E6, E7, E8], &[E1, E5, E6, E7, E8, E9, E10]],
            ],
        ),
        "sec5_type13_odfc" => b.flagcode(&[1, 3], &[&[&[E1], &[E1, E2, E3]], &[&[E2], &[E1, E2, E4]]]),
        _ => unreachable!("name checked above"),
    })
}

/// Lines `<(1, w, 0)>` and `<(1, w^p, 0)>` of `F_q^3`, with `w` the class of `x`,
/// so the Frobenius map swaps them.
fn frobenius_fixture(name: &str, q: u64) -> Result<Document> {
    let field = Field::with_order(q)?;
    if field.e() == 1 {
        return Err(Error::InvalidType(format!(
            "fixture {name} needs a proper extension field, got q={q}"
        )));
    }
    let amb = AmbientSpace::new(&field, 3)?;
    let w = field.p() as u64;
    let wp = field.frobenius(1, w as u8) as u64;
    let line = |c: u64| Subspace::from_vectors(&amb, &[vec![1, c, 0]]).expect("valid line");
    let plane = |c: u64| Subspace::from_vectors(&amb, &[vec![1, c, 0], vec![0, 0, 1]]).expect("valid plane");
    Ok(match name {
        "frobenius_cdc" => Document::Cdc(ConstantDimensionCode::new(vec![line(w), line(wp)])?),
        _ => {
            let tv = TypeVector::new(&amb, &[1, 2])?;
            Document::FlagCode(FlagCode::from_spaces(
                &tv,
                vec![vec![line(w), plane(w)], vec![line(wp), plane(wp)]],
            )?)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_builds_at_default_and_other_orders() {
        for name in FIXTURE_NAMES {
            fixture(name, None).unwrap();
            if !name.starts_with("frobenius_") {
                fixture(name, Some(3)).unwrap();
            } else {
                fixture(name, Some(8)).unwrap();
                assert!(fixture(name, Some(5)).is_err());
            }
        }
        assert_eq!(
            fixture("nonexistent", None).unwrap_err(),
            Error::UnknownFixture("nonexistent".into())
        );
    }

    #[test]
    fn fixture_shapes() {
        let Document::FlagCode(c) = fixture("sec3_C", None).unwrap() else {
            panic!("flag code expected")
        };
        assert_eq!(c.len(), 3);
        let Document::FlagCode(c) = fixture("sec5_n10_type47", None).unwrap() else {
            panic!("flag code expected")
        };
        assert_eq!((c.len(), c.ambient().n()), (3, 10));
        let Document::Cdc(c) = fixture("frobenius_cdc", None).unwrap() else {
            panic!("cdc expected")
        };
        let words: Vec<_> = c.words().iter().map(|u| u.basis().row(0).to_vec()).collect();
        assert_eq!(words, vec![vec![1, 2, 0], vec![1, 3, 0]]);
    }
}
