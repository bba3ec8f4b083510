//! Enumeration of virtualizations of the standard torus braid
//! `(σ_1 … σ_{p−1})^q`, and the P-polynomial table for `VT(p,q,2)`.

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{make_vt, BraidLetter, BraidWord};
use crate::error::{Error, Result};
use crate::gauss::gauss_from_closure;
use crate::invariants::{p_invariant, u_invariant};
use crate::polynomial::IndexPolynomial;

/// Without an explicit limit, scans are refused above this many crossings.
pub const DEFAULT_SCAN_BITS: usize = 16;

pub fn torus_crossings(p: usize, q: usize) -> usize {
    (p - 1) * q
}

fn check_torus(p: usize, q: usize) -> Result<()> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidFamily(format!("torus braid ({p},{q}) requires p, q >= 2")));
    }
    if p > crate::braid::MAX_STRANDS {
        return Err(Error::InvalidStrands(p));
    }
    Ok(())
}

/// The torus braid with the letters at `subset` (0-based positions among the
/// `(p−1)q` letters) replaced by virtual crossings.
pub fn virtualize_subset(p: usize, q: usize, subset: &[usize]) -> Result<BraidWord> {
    check_torus(p, q)?;
    let letters = torus_crossings(p, q);
    let mut virtual_at = vec![false; letters];
    for &position in subset {
        if position >= letters {
            return Err(Error::SubsetOutOfRange { position, letters });
        }
        virtual_at[position] = true;
    }
    let word = (0..letters)
        .map(|pos| {
            let index = pos % (p - 1) + 1;
            if virtual_at[pos] {
                BraidLetter::virt(index)
            } else {
                BraidLetter::pos(index)
            }
        })
        .collect();
    BraidWord::new(p, word)
}

/// Positions of the first `n` overstrand blocks, the subset giving `VT(p,q,n)`.
pub fn vt_subset(p: usize, n: usize) -> Vec<usize> {
    (0..n * (p - 1)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub p: usize,
    pub q: usize,
    pub subset: Vec<usize>,
    pub components: usize,
    /// Present only for one-component closures.
    pub u: Option<IndexPolynomial>,
    #[serde(rename = "P")]
    pub p_poly: Option<IndexPolynomial>,
}

impl ScanRecord {
    /// A nonzero u-polynomial certifies the closure is not virtually null-homotopic.
    pub fn has_nonzero_u(&self) -> bool {
        self.u.as_ref().is_some_and(|u| !u.is_zero())
    }
}

pub fn scan_record(p: usize, q: usize, subset: Vec<usize>) -> Result<ScanRecord> {
    let word = virtualize_subset(p, q, &subset)?;
    let components = word.component_count();
    let (u, p_poly) = if components == 1 {
        let gd = gauss_from_closure(&word)?;
        (Some(u_invariant(&gd)), Some(p_invariant(&gd)))
    } else {
        (None, None)
    };
    Ok(ScanRecord {
        p,
        q,
        subset,
        components,
        u,
        p_poly,
    })
}

/// Subsets of `0..bits` ordered by size, then lexicographically.
pub fn subsets_by_size(bits: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..=bits).flat_map(move |r| (0..bits).combinations(r))
}

/// Evaluates every virtualization subset of the `(p,q)` torus braid, or the
/// first `limit` of them in size-then-lexicographic order. Runs on the current
/// rayon pool; output order is the enumeration order.
pub fn scan_torus_virtualizations(p: usize, q: usize, limit: Option<usize>) -> Result<Vec<ScanRecord>> {
    check_torus(p, q)?;
    let bits = torus_crossings(p, q);
    let subsets: Vec<Vec<usize>> = match limit {
        Some(m) => subsets_by_size(bits).take(m).collect(),
        None if bits <= DEFAULT_SCAN_BITS => subsets_by_size(bits).collect(),
        None => {
            return Err(Error::ScanTooLarge {
                bits,
                cap: DEFAULT_SCAN_BITS,
            })
        }
    };
    subsets.into_par_iter().map(|s| scan_record(p, q, s)).collect()
}

/// Torus parameters `p, q >= 2` with at most `max_bits` crossings.
pub fn torus_pairs_within(max_bits: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for p in 2..=max_bits + 1 {
        for q in 2..=max_bits {
            if torus_crossings(p, q) <= max_bits {
                out.push((p, q));
            }
        }
    }
    out
}

/// Does `u` equal `±(t² − 2t)`?
pub fn matches_t2_minus_2t(u: &IndexPolynomial) -> bool {
    u.equal_up_to_sign(&IndexPolynomial::from_terms([(2, 1), (1, -2)]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub p: usize,
    pub q: usize,
    pub half_sum: u64,
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Coprime `(p,q)` with `2 <= q < p <= max_p`, ordered by `p` then `q`.
pub fn table_pairs(max_p: usize) -> Vec<(usize, usize)> {
    (3..=max_p)
        .flat_map(|p| (2..p).map(move |q| (p, q)))
        .filter(|&(p, q)| gcd(p, q) == 1)
        .collect()
}

/// `Σ|b_m|/2` of the P-polynomial of `VT(p,q,2)` for each pair.
pub fn table_vt2(pairs: &[(usize, usize)]) -> Result<Vec<TableRow>> {
    pairs
        .par_iter()
        .map(|&(p, q)| {
            if q < 2 {
                return Err(Error::InvalidFamily(format!("VT({p},{q},2) requires q >= 2")));
            }
            let gd = gauss_from_closure(&make_vt(p, q, 2)?)?;
            Ok(TableRow {
                p,
                q,
                half_sum: p_invariant(&gd).abs_coefficient_sum() / 2,
            })
        })
        .collect()
}

pub fn table_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("p,q,half_sum\n");
    for r in rows {
        out.push_str(&format!("{},{},{}\n", r.p, r.q, r.half_sum));
    }
    out
}
