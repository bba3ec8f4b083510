//! Gauss diagrams of one-component closures.
//!
//! The circle is stored as a sequence of `2N` endpoints read from a basepoint
//! in the orientation of the knot. Each chord has one `Over` endpoint (tail)
//! and one `Under` endpoint (arrowhead).

use std::fmt;
use std::str::FromStr;

use crate::braid::{BraidWord, LetterKind, Sign};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Over,
    Under,
}

impl Role {
    fn swap(self) -> Role {
        match self {
            Role::Over => Role::Under,
            Role::Under => Role::Over,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Endpoint {
    pub chord: usize,
    pub role: Role,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordRef(pub usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussDiagram {
    endpoints: Vec<Endpoint>,
    signs: Vec<Sign>,
    /// `[over, under]` circle positions per chord.
    positions: Vec<[usize; 2]>,
}

impl GaussDiagram {
    pub fn empty() -> Self {
        GaussDiagram {
            endpoints: Vec::new(),
            signs: Vec::new(),
            positions: Vec::new(),
        }
    }

    /// Builds a diagram, checking that every chord in `0..signs.len()` appears
    /// exactly once as `Over` and once as `Under`.
    pub fn new(endpoints: Vec<Endpoint>, signs: Vec<Sign>) -> Result<Self> {
        let n = signs.len();
        if endpoints.len() != 2 * n {
            return Err(Error::MalformedGauss(format!(
                "{} endpoints for {n} chords",
                endpoints.len()
            )));
        }
        let mut positions = vec![[usize::MAX; 2]; n];
        for (pos, e) in endpoints.iter().enumerate() {
            if e.chord >= n {
                return Err(Error::MalformedGauss(format!("chord label {} out of range", e.chord + 1)));
            }
            let slot = &mut positions[e.chord][role_slot(e.role)];
            if *slot != usize::MAX {
                return Err(Error::MalformedGauss(format!(
                    "chord {} has two {:?} endpoints",
                    e.chord + 1,
                    e.role
                )));
            }
            *slot = pos;
        }
        Ok(GaussDiagram {
            endpoints,
            signs,
            positions,
        })
    }

    pub fn chord_count(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn endpoints(&self) -> &[Endpoint] {
        &self.endpoints
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn chords(&self) -> impl Iterator<Item = ChordRef> {
        (0..self.chord_count()).map(ChordRef)
    }

    pub fn check(&self, c: ChordRef) -> Result<()> {
        if c.0 < self.chord_count() {
            Ok(())
        } else {
            Err(Error::InvalidChord {
                chord: c.0,
                chords: self.chord_count(),
            })
        }
    }

    pub fn sign(&self, c: ChordRef) -> Sign {
        self.signs[c.0]
    }

    pub fn over_position(&self, c: ChordRef) -> usize {
        self.positions[c.0][0]
    }

    pub fn under_position(&self, c: ChordRef) -> usize {
        self.positions[c.0][1]
    }

    pub fn is_all_positive(&self) -> bool {
        self.signs.iter().all(|&s| s == Sign::Pos)
    }

    /// True when position `x` lies on the open arc running from `from` to `to`
    /// in circle orientation.
    pub fn on_open_arc(&self, from: usize, to: usize, x: usize) -> bool {
        let len = self.endpoints.len();
        let span = (to + len - from) % len;
        let off = (x + len - from) % len;
        off > 0 && off < span
    }

    /// Same diagram read from a basepoint moved forward by `shift` endpoints.
    pub fn rotated(&self, shift: usize) -> GaussDiagram {
        if self.endpoints.is_empty() {
            return self.clone();
        }
        let mut endpoints = self.endpoints.clone();
        let len = endpoints.len();
        endpoints.rotate_left(shift % len);
        GaussDiagram::new(endpoints, self.signs.clone()).expect("rotation keeps chord structure")
    }

    /// Keeps only the chords for which `keep` is true, re-indexing densely in
    /// the original chord order.
    fn retain_chords(&self, keep: impl Fn(usize) -> bool) -> GaussDiagram {
        let mut relabel = vec![usize::MAX; self.chord_count()];
        let mut signs = Vec::new();
        for (c, &s) in self.signs.iter().enumerate() {
            if keep(c) {
                relabel[c] = signs.len();
                signs.push(s);
            }
        }
        let endpoints = self
            .endpoints
            .iter()
            .filter(|e| keep(e.chord))
            .map(|e| Endpoint {
                chord: relabel[e.chord],
                role: e.role,
            })
            .collect();
        GaussDiagram::new(endpoints, signs).expect("removal keeps chord structure")
    }
}

fn role_slot(role: Role) -> usize {
    match role {
        Role::Over => 0,
        Role::Under => 1,
    }
}

/// Traces the closure of a one-component braid word.
///
/// The trace starts at the left endpoint of strand position 1 and follows the
/// braid left to right, wrapping around the closure arcs. Chord ids follow the
/// order of classical letters in the word.
pub fn gauss_from_closure(w: &BraidWord) -> Result<GaussDiagram> {
    let components = w.component_count();
    if components != 1 {
        return Err(Error::MultiComponent { components });
    }
    let mut chord_of_letter = Vec::with_capacity(w.len());
    let mut signs = Vec::new();
    for l in w.letters() {
        if l.is_classical() {
            chord_of_letter.push(signs.len());
            signs.push(l.sign());
        } else {
            chord_of_letter.push(usize::MAX);
        }
    }
    let mut endpoints = Vec::with_capacity(2 * signs.len());
    let mut pos = 0usize;
    for _ in 0..w.strands() {
        for (l, &chord) in w.letters().iter().zip(&chord_of_letter) {
            let left = l.index() - 1;
            let entering_left = if pos == left {
                true
            } else if pos == left + 1 {
                false
            } else {
                continue;
            };
            if l.kind() == LetterKind::Classical {
                let over = entering_left == (l.sign() == Sign::Pos);
                endpoints.push(Endpoint {
                    chord,
                    role: if over { Role::Over } else { Role::Under },
                });
            }
            pos = if entering_left { left + 1 } else { left };
        }
    }
    debug_assert_eq!(pos, 0);
    GaussDiagram::new(endpoints, signs)
}

/// One crossing change: reverses the arrow of `c` and negates its sign.
pub fn flip(gd: &GaussDiagram, c: ChordRef) -> Result<GaussDiagram> {
    gd.check(c)?;
    let mut out = gd.clone();
    for e in out.endpoints.iter_mut().filter(|e| e.chord == c.0) {
        e.role = e.role.swap();
    }
    out.signs[c.0] = out.signs[c.0].negate();
    out.positions[c.0].swap(0, 1);
    Ok(out)
}

/// Flips every negative chord.
pub fn normalize_positive(gd: &GaussDiagram) -> GaussDiagram {
    let mut out = gd.clone();
    for e in out.endpoints.iter_mut() {
        if gd.signs[e.chord] == Sign::Neg {
            e.role = e.role.swap();
        }
    }
    for (c, s) in out.signs.iter_mut().enumerate() {
        if *s == Sign::Neg {
            *s = Sign::Pos;
            out.positions[c].swap(0, 1);
        }
    }
    out
}

/// True iff the endpoints of `d` interleave with those of `c`.
///
/// Panics if either chord is out of range.
pub fn linked(gd: &GaussDiagram, c: ChordRef, d: ChordRef) -> bool {
    if c == d {
        return false;
    }
    let [a, b] = gd.positions[c.0];
    let [x, y] = gd.positions[d.0];
    gd.on_open_arc(a, b, x) != gd.on_open_arc(a, b, y)
}

fn cyclic_adjacent(len: usize, a: usize, b: usize) -> bool {
    (a + 1) % len == b || (b + 1) % len == a
}

/// Removes the first chord (in chord order) whose endpoints are adjacent.
pub fn r1_reduce(gd: &GaussDiagram) -> GaussDiagram {
    let len = gd.endpoints.len();
    match (0..gd.chord_count()).find(|&c| {
        let [a, b] = gd.positions[c];
        cyclic_adjacent(len, a, b)
    }) {
        Some(c) => gd.retain_chords(|x| x != c),
        None => gd.clone(),
    }
}

/// Finds a chord pair removable by R2: the endpoints form two cyclically
/// adjacent pairs, signs are opposite, and one pair holds both `Over`
/// endpoints (hence the other holds both `Under` endpoints).
pub fn find_r2_pair(gd: &GaussDiagram) -> Option<(ChordRef, ChordRef)> {
    let len = gd.endpoints.len();
    if len < 4 {
        return None;
    }
    for start in 0..len {
        let e0 = gd.endpoints[start];
        let e1 = gd.endpoints[(start + 1) % len];
        if e0.chord == e1.chord || e0.role != e1.role || e0.role != Role::Over {
            continue;
        }
        let (c, d) = (e0.chord, e1.chord);
        if gd.signs[c] == gd.signs[d] {
            continue;
        }
        let (uc, ud) = (gd.positions[c][1], gd.positions[d][1]);
        if cyclic_adjacent(len, uc, ud) {
            return Some((ChordRef(c.min(d)), ChordRef(c.max(d))));
        }
    }
    None
}

pub fn r2_reduce(gd: &GaussDiagram) -> GaussDiagram {
    match find_r2_pair(gd) {
        Some((c, d)) => gd.retain_chords(|x| x != c.0 && x != d.0),
        None => gd.clone(),
    }
}

/// Applies R1 and R2 reductions until neither applies.
pub fn simplify(gd: &GaussDiagram) -> GaussDiagram {
    let mut cur = gd.clone();
    loop {
        let next = r2_reduce(&r1_reduce(&cur));
        if next.chord_count() == cur.chord_count() {
            return cur;
        }
        cur = next;
    }
}

impl fmt::Display for GaussDiagram {
    /// Gauss code, e.g. `U2+ O1+ O2+ U1+`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, e) in self.endpoints.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            let r = match e.role {
                Role::Over => 'O',
                Role::Under => 'U',
            };
            let s = match self.signs[e.chord] {
                Sign::Pos => '+',
                Sign::Neg => '-',
            };
            write!(f, "{r}{}{s}", e.chord + 1)?;
        }
        Ok(())
    }
}

impl FromStr for GaussDiagram {
    type Err = Error;

    /// Parses a Gauss code. Chord labels must be exactly `1..=N`.
    fn from_str(text: &str) -> Result<Self> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if !tokens.len().is_multiple_of(2) {
            return Err(Error::MalformedGauss(format!("odd number of endpoints ({})", tokens.len())));
        }
        let n = tokens.len() / 2;
        let mut signs: Vec<Option<Sign>> = vec![None; n];
        let mut endpoints = Vec::with_capacity(tokens.len());
        for tok in tokens {
            let bad = || Error::MalformedGauss(format!("bad token `{tok}`"));
            let mut chars = tok.chars();
            let role = match chars.next() {
                Some('O') => Role::Over,
                Some('U') => Role::Under,
                _ => return Err(bad()),
            };
            let sign = match chars.next_back() {
                Some('+') => Sign::Pos,
                Some('-') => Sign::Neg,
                _ => return Err(bad()),
            };
            let digits = chars.as_str();
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let label: usize = digits.parse().map_err(|_| bad())?;
            if label == 0 || label > n {
                return Err(Error::MalformedGauss(format!("label {label} outside 1..={n}")));
            }
            let chord = label - 1;
            match signs[chord] {
                None => signs[chord] = Some(sign),
                Some(s) if s != sign => {
                    return Err(Error::MalformedGauss(format!("chord {label} has inconsistent signs")))
                }
                Some(_) => {}
            }
            endpoints.push(Endpoint { chord, role });
        }
        let signs = signs
            .into_iter()
            .map(|s| s.ok_or_else(|| Error::MalformedGauss("missing chord label".into())))
            .collect::<Result<Vec<_>>>()?;
        GaussDiagram::new(endpoints, signs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{make_ijk, make_vt, parse_braid};

    fn vt321() -> GaussDiagram {
        gauss_from_closure(&make_vt(3, 2, 1).unwrap()).unwrap()
    }

    #[test]
    fn closure_examples() {
        assert_eq!(vt321().to_string(), "U2+ O1+ O2+ U1+");
        assert!(gauss_from_closure(&make_ijk(2, 1, 0).unwrap()).unwrap().is_empty());
        assert!(matches!(
            gauss_from_closure(&make_ijk(4, 3, 1).unwrap()),
            Err(Error::MultiComponent { components }) if components >= 2
        ));
    }

    #[test]
    fn flip_examples() {
        let gd = vt321();
        let f = flip(&gd, ChordRef(0)).unwrap();
        assert_eq!(f.sign(ChordRef(0)), Sign::Neg);
        assert_eq!(f.sign(ChordRef(1)), Sign::Pos);
        assert_eq!(f.to_string(), "U2+ U1- O2+ O1-");
        assert_eq!(flip(&f, ChordRef(0)).unwrap(), gd);
        let all = flip(&f, ChordRef(1)).unwrap();
        assert_eq!(all.to_string(), "O2- U1- U2- O1-");
        assert!(flip(&gd, ChordRef(2)).is_err());
    }

    #[test]
    fn normalize_examples() {
        let gd = vt321();
        assert_eq!(normalize_positive(&gd), gd);
        assert_eq!(normalize_positive(&flip(&gd, ChordRef(1)).unwrap()), gd);
        assert!(normalize_positive(&GaussDiagram::empty()).is_empty());
    }

    #[test]
    fn linked_examples() {
        let gd = vt321();
        assert!(linked(&gd, ChordRef(0), ChordRef(1)));
        assert!(linked(&gd, ChordRef(1), ChordRef(0)));
        let nested: GaussDiagram = "O1+ O2+ U2+ U1+".parse().unwrap();
        assert!(!linked(&nested, ChordRef(0), ChordRef(1)));
        assert!(!linked(&nested, ChordRef(1), ChordRef(0)));
    }

    #[test]
    fn reduction_examples() {
        for code in ["O1+ U1+", "U1- O1-"] {
            let gd: GaussDiagram = code.parse().unwrap();
            assert!(r1_reduce(&gd).is_empty());
        }
        let cancel = gauss_from_closure(&parse_braid("1 -1", Some(2)).unwrap());
        // "1 -1" on 2 strands closes to two components; trace the R2 pair on
        // a one-component word instead.
        assert!(cancel.is_err());
        let w = parse_braid("v1 1 -1", Some(2)).unwrap();
        let gd = gauss_from_closure(&w).unwrap();
        assert_eq!(gd.chord_count(), 2);
        assert!(r2_reduce(&gd).is_empty());

        let gd = vt321();
        assert_eq!(simplify(&gd), gd);
    }

    #[test]
    fn r2_requires_opposite_signs_and_matched_roles() {
        let same_sign: GaussDiagram = "O1+ O2+ U2+ U1+".parse().unwrap();
        assert_eq!(r2_reduce(&same_sign), same_sign);
        let mixed_roles: GaussDiagram = "O1+ U2- O2- U1+".parse().unwrap();
        assert_eq!(r2_reduce(&mixed_roles), mixed_roles);
        let parallel: GaussDiagram = "O1+ O2- U3+ U1+ U2- O3+".parse().unwrap();
        let r = r2_reduce(&parallel);
        assert_eq!(r.to_string(), "U1+ O1+");
    }

    #[test]
    fn reindexing_is_dense() {
        let gd: GaussDiagram = "O1+ U2+ O3- U3- U1+ O2+".parse().unwrap();
        let r = r1_reduce(&gd);
        assert_eq!(r.to_string(), "O1+ U2+ U1+ O2+");
    }

    #[test]
    fn gauss_code_errors() {
        for bad in ["O1+", "O1+ O1+", "O1+ U1-", "X1+ U1+", "O1 U1", "O2+ U2+", "O+ U+", "O1+ U1+ O3+ U3+"] {
            assert!(bad.parse::<GaussDiagram>().is_err(), "{bad}");
        }
        assert!("".parse::<GaussDiagram>().unwrap().is_empty());
    }

    #[test]
    fn rotation_is_cyclic() {
        let gd = vt321();
        assert_eq!(gd.rotated(1).to_string(), "O1+ O2+ U1+ U2+");
        assert_eq!(gd.rotated(4), gd);
    }
}
