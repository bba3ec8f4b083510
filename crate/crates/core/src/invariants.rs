//! Chord indices and the P- and u-polynomials of a Gauss diagram.

use crate::error::{Error, Result};
use crate::gauss::{normalize_positive, ChordRef, GaussDiagram};
use crate::polynomial::IndexPolynomial;

/// Which side counts as "left to right" when reading `n(c)`. The two choices
/// differ by a global negation of the u-polynomial.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum UOrientation {
    /// A linked chord counts `+1` when its tail lies on the open arc from the
    /// tail of `c` to the head of `c`.
    #[default]
    TailOnOverArc,
    Negated,
}

/// `i(c) = i_o − i_u`: with `γ1` the open arc from the `Over` endpoint of `c`
/// to its `Under` endpoint, every chord `d` linked with `c` contributes
/// `+sign(d)` when its `Under` endpoint lies on `γ2` and `−sign(d)` otherwise.
pub fn chord_index(gd: &GaussDiagram, c: ChordRef) -> Result<i64> {
    gd.check(c)?;
    let (o, u) = (gd.over_position(c), gd.under_position(c));
    let mut sum = 0;
    for d in gd.chords().filter(|&d| d != c) {
        let (od, ud) = (gd.over_position(d), gd.under_position(d));
        let under_on_g1 = gd.on_open_arc(o, u, ud);
        if under_on_g1 == gd.on_open_arc(o, u, od) {
            continue;
        }
        let s = gd.sign(d).value();
        sum += if under_on_g1 { -s } else { s };
    }
    Ok(sum)
}

pub fn p_invariant(gd: &GaussDiagram) -> IndexPolynomial {
    let mut p = IndexPolynomial::zero();
    for c in gd.chords() {
        let idx = chord_index(gd, c).expect("chord in range");
        if idx != 0 {
            p.add_term(exponent(idx), gd.sign(c).value());
        }
    }
    p
}

/// `⌈Σ|b_m| / 2⌉` for the P-polynomial. Valid as a lower bound on the
/// virtual unknotting number only for virtually null-homotopic knots.
pub fn vu_lower_bound(gd: &GaussDiagram) -> u64 {
    p_invariant(gd).abs_coefficient_sum().div_ceil(2)
}

/// `n(c) = n_+(c) − n_−(c)` on an all-positive diagram.
pub fn crossing_index(gd: &GaussDiagram, c: ChordRef) -> Result<i64> {
    crossing_index_oriented(gd, c, UOrientation::default())
}

pub fn crossing_index_oriented(gd: &GaussDiagram, c: ChordRef, orientation: UOrientation) -> Result<i64> {
    gd.check(c)?;
    if !gd.is_all_positive() {
        return Err(Error::NotPositive);
    }
    let (tail, head) = (gd.over_position(c), gd.under_position(c));
    let mut n = 0;
    for d in gd.chords().filter(|&d| d != c) {
        let tail_d = gd.on_open_arc(tail, head, gd.over_position(d));
        let head_d = gd.on_open_arc(tail, head, gd.under_position(d));
        match (tail_d, head_d) {
            (true, false) => n += 1,
            (false, true) => n -= 1,
            _ => {}
        }
    }
    Ok(match orientation {
        UOrientation::TailOnOverArc => n,
        UOrientation::Negated => -n,
    })
}

pub fn u_invariant(gd: &GaussDiagram) -> IndexPolynomial {
    u_invariant_oriented(gd, UOrientation::default())
}

pub fn u_invariant_oriented(gd: &GaussDiagram, orientation: UOrientation) -> IndexPolynomial {
    let norm = normalize_positive(gd);
    let mut u = IndexPolynomial::zero();
    for c in norm.chords() {
        let n = crossing_index_oriented(&norm, c, orientation).expect("normalized diagram");
        if n != 0 {
            u.add_term(exponent(n), n.signum());
        }
    }
    u
}

fn exponent(index: i64) -> u32 {
    u32::try_from(index.unsigned_abs()).expect("chord index fits in u32")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{make_ijk, make_vt, parse_braid};
    use crate::gauss::{flip, gauss_from_closure};

    fn diagram(w: crate::braid::BraidWord) -> GaussDiagram {
        gauss_from_closure(&w).unwrap()
    }

    /// Counts linked chords by walking the circle from `c`'s over endpoint.
    fn brute_index(gd: &GaussDiagram, c: ChordRef) -> i64 {
        let len = gd.endpoints().len();
        let o = gd.over_position(c);
        let mut gamma1 = vec![false; len];
        let mut p = (o + 1) % len;
        while p != gd.under_position(c) {
            gamma1[p] = true;
            p = (p + 1) % len;
        }
        let mut i_o = 0;
        let mut i_u = 0;
        for d in gd.chords().filter(|&d| d != c) {
            let over_in = gamma1[gd.over_position(d)];
            let under_in = gamma1[gd.under_position(d)];
            if over_in && !under_in {
                i_o += gd.sign(d).value();
            } else if under_in && !over_in {
                i_u += gd.sign(d).value();
            }
        }
        i_o - i_u
    }

    #[test]
    fn vt321_indices() {
        let gd = diagram(make_vt(3, 2, 1).unwrap());
        for c in gd.chords() {
            assert_eq!(chord_index(&gd, c).unwrap().abs(), 1);
            assert_eq!(chord_index(&gd, c).unwrap(), brute_index(&gd, c));
        }
        assert_eq!(p_invariant(&gd).to_string(), "2t");
        let n0 = crossing_index(&gd, ChordRef(0)).unwrap();
        let n1 = crossing_index(&gd, ChordRef(1)).unwrap();
        assert_eq!(n0, -n1);
        assert_eq!(n0.abs(), 1);
        assert!(u_invariant(&gd).is_zero());
    }

    #[test]
    fn classical_positive_braid_has_zero_indices() {
        let gd = diagram(parse_braid("1 2 1 2 1 2 1 2", Some(3)).unwrap());
        for c in gd.chords() {
            assert_eq!(chord_index(&gd, c).unwrap(), 0);
        }
        assert!(p_invariant(&gd).is_zero());
    }

    #[test]
    fn unlinked_chords() {
        let gd: GaussDiagram = "O1+ U1+ O2- U2-".parse().unwrap();
        assert_eq!(chord_index(&gd, ChordRef(0)).unwrap(), 0);
        assert_eq!(crossing_index(&normalize_positive(&gd), ChordRef(1)).unwrap(), 0);
        assert!(chord_index(&gd, ChordRef(5)).is_err());
    }

    #[test]
    fn empty_and_virtual_only() {
        assert!(p_invariant(&GaussDiagram::empty()).is_zero());
        assert!(u_invariant(&GaussDiagram::empty()).is_zero());
        assert_eq!(vu_lower_bound(&GaussDiagram::empty()), 0);
        assert!(p_invariant(&diagram(make_vt(3, 2, 2).unwrap())).is_zero());
    }

    #[test]
    fn lower_bound_values() {
        assert_eq!(vu_lower_bound(&diagram(make_vt(7, 3, 1).unwrap())), 6);
        assert_eq!(vu_lower_bound(&diagram(make_vt(6, 5, 2).unwrap())), 7);
    }

    #[test]
    fn crossing_index_requires_positive() {
        let gd = diagram(make_vt(3, 2, 1).unwrap());
        let f = flip(&gd, ChordRef(0)).unwrap();
        assert_eq!(crossing_index(&f, ChordRef(0)), Err(Error::NotPositive));
    }

    #[test]
    fn orientation_flag_negates() {
        let gd: GaussDiagram = "O1+ O2+ U1+ O3+ U2+ U3+".parse().unwrap();
        let u = u_invariant(&gd);
        assert_eq!(u_invariant_oriented(&gd, UOrientation::Negated), u.negated());
    }

    #[test]
    fn ijk_u_vanishes() {
        for i in 2..=8 {
            for j in 1..=i {
                for k in 0..i {
                    let w = make_ijk(i, j, k).unwrap();
                    if w.component_count() == 1 {
                        assert!(u_invariant(&diagram(w)).is_zero(), "({i},{j},{k})");
                    }
                }
            }
        }
    }
}
