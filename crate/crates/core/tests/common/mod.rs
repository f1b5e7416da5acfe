//! Independent brute-force oracles over F_2 for n <= 5.
//!
//! A vector is a bitmask (bit j is coordinate j + 1), a subspace is the set of
//! its vectors as a bitmask over all 2^n vectors, and a matrix is its rows.

#![allow(dead_code)]

use std::collections::BTreeSet;

use flagcode::cdc::ConstantDimensionCode;
use flagcode::flags::FlagCode;
use flagcode::grassmann::{GroupElement, Subspace};

pub type Space = u64;
pub type Mat = Vec<u32>;

fn bits(row: &[u8]) -> u32 {
    row.iter().enumerate().fold(0, |acc, (j, &x)| {
        assert!(x <= 1, "oracle is F_2 only");
        acc | (u32::from(x) << j)
    })
}

pub fn span(rows: &[u32]) -> Space {
    let mut vs = vec![0u32];
    for &r in rows {
        if !vs.contains(&r) {
            let more: Vec<u32> = vs.iter().map(|v| v ^ r).collect();
            vs.extend(more);
        }
    }
    vs.iter().fold(0, |acc, &v| acc | (1u64 << v))
}

pub fn space(u: &Subspace) -> Space {
    let rows: Vec<u32> = u.basis().to_rows().iter().map(|r| bits(r)).collect();
    span(&rows)
}

pub fn matrix(g: &GroupElement) -> Mat {
    g.matrix().to_rows().iter().map(|r| bits(r)).collect()
}

pub fn apply_vector(a: &Mat, v: u32) -> u32 {
    a.iter()
        .enumerate()
        .filter(|(i, _)| v >> i & 1 == 1)
        .fold(0, |acc, (_, r)| acc ^ r)
}

pub fn apply(a: &Mat, u: Space) -> Space {
    (0..64u32)
        .filter(|v| u >> v & 1 == 1)
        .fold(0, |acc, v| acc | (1u64 << apply_vector(a, v)))
}

pub fn dim(u: Space) -> u32 {
    u.count_ones().trailing_zeros()
}

pub fn contained(u: Space, v: Space) -> bool {
    u & !v == 0
}

/// Calls `f` on every invertible n x n matrix over F_2.
pub fn for_each_invertible(n: usize, f: &mut dyn FnMut(&Mat)) {
    fn go(n: usize, rows: &mut Mat, spanned: Space, f: &mut dyn FnMut(&Mat)) {
        if rows.len() == n {
            f(rows);
            return;
        }
        for r in 0..1u32 << n {
            if spanned >> r & 1 == 1 {
                continue;
            }
            let grown = (0..1u32 << n)
                .filter(|v| spanned >> v & 1 == 1)
                .fold(spanned, |acc, v| acc | (1u64 << (v ^ r)));
            rows.push(r);
            go(n, rows, grown, f);
            rows.pop();
        }
    }
    go(n, &mut Vec::with_capacity(n), 1, f);
}

pub fn general_linear(n: usize) -> Vec<Mat> {
    let mut all = Vec::new();
    for_each_invertible(n, &mut |m| all.push(m.clone()));
    all
}

pub fn code(c: &ConstantDimensionCode) -> BTreeSet<Space> {
    c.words().iter().map(space).collect()
}

pub fn flags(c: &FlagCode) -> BTreeSet<Vec<Space>> {
    c.flags()
        .iter()
        .map(|f| f.spaces().iter().map(space).collect())
        .collect()
}

pub fn stabilizer_of_code(n: usize, words: &BTreeSet<Space>) -> BTreeSet<Mat> {
    let mut out = BTreeSet::new();
    for_each_invertible(n, &mut |a| {
        if words.iter().all(|&u| words.contains(&apply(a, u))) {
            out.insert(a.clone());
        }
    });
    out
}

pub fn stabilizer_of_flags(n: usize, fl: &BTreeSet<Vec<Space>>) -> BTreeSet<Mat> {
    let mut out = BTreeSet::new();
    for_each_invertible(n, &mut |a| {
        if fl
            .iter()
            .all(|f| fl.contains(&f.iter().map(|&u| apply(a, u)).collect::<Vec<_>>()))
        {
            out.insert(a.clone());
        }
    });
    out
}

/// Every nested choice from the product of the given levels.
pub fn product_flags(levels: &[BTreeSet<Space>]) -> BTreeSet<Vec<Space>> {
    let mut partial: Vec<Vec<Space>> = vec![vec![]];
    for level in levels {
        partial = partial
            .iter()
            .flat_map(|p| {
                level
                    .iter()
                    .filter(|&&u| p.last().is_none_or(|&prev| contained(prev, u)))
                    .map(move |&u| {
                        let mut q = p.clone();
                        q.push(u);
                        q
                    })
            })
            .collect();
    }
    partial.into_iter().collect()
}

/// Every word has a contained word one level down and a containing word one level up.
pub fn is_generating(levels: &[BTreeSet<Space>]) -> bool {
    (0..levels.len()).all(|i| {
        levels[i].iter().all(|&u| {
            (i == 0 || levels[i - 1].iter().any(|&v| contained(v, u)))
                && (i + 1 == levels.len() || levels[i + 1].iter().any(|&v| contained(u, v)))
        })
    })
}

pub fn projections(fl: &BTreeSet<Vec<Space>>, r: usize) -> Vec<BTreeSet<Space>> {
    (0..r).map(|i| fl.iter().map(|f| f[i]).collect()).collect()
}
