//! Virtual braid words.
//!
//! A word on `n` strands is a left-to-right sequence of classical generators
//! `σ_k^{±1}` and virtual generators `v_k`, each acting on strand positions
//! `k` and `k + 1` (1-based). The closure joins right endpoint `m` to left
//! endpoint `m`.
//!
//! Handedness: in `σ_k` (positive) the strand entering at position `k` passes
//! over the strand entering at `k + 1`; in `σ_k^{-1}` the strand entering at
//! `k + 1` is the overstrand. With co-oriented strands every letter's crossing
//! sign equals the letter's sign.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Upper bound on strand counts accepted by the parser.
pub const MAX_STRANDS: usize = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LetterKind {
    Classical,
    Virtual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    kind: LetterKind,
    index: usize,
    sign: Sign,
}

impl BraidLetter {
    pub fn classical(index: usize, sign: Sign) -> Self {
        BraidLetter {
            kind: LetterKind::Classical,
            index,
            sign,
        }
    }

    pub fn pos(index: usize) -> Self {
        Self::classical(index, Sign::Pos)
    }

    pub fn neg(index: usize) -> Self {
        Self::classical(index, Sign::Neg)
    }

    /// Virtual crossing at positions `index`, `index + 1`. Always carries `Sign::Pos`.
    pub fn virt(index: usize) -> Self {
        BraidLetter {
            kind: LetterKind::Virtual,
            index,
            sign: Sign::Pos,
        }
    }

    pub fn kind(&self) -> LetterKind {
        self.kind
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn is_classical(&self) -> bool {
        self.kind == LetterKind::Classical
    }

    pub fn is_virtual(&self) -> bool {
        self.kind == LetterKind::Virtual
    }

    fn inverse(self) -> Self {
        match self.kind {
            LetterKind::Virtual => self,
            LetterKind::Classical => Self::classical(self.index, self.sign.negate()),
        }
    }

    fn with_index(self, index: usize) -> Self {
        BraidLetter { index, ..self }
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.sign) {
            (LetterKind::Virtual, _) => write!(f, "v{}", self.index),
            (LetterKind::Classical, Sign::Pos) => write!(f, "{}", self.index),
            (LetterKind::Classical, Sign::Neg) => write!(f, "-{}", self.index),
        }
    }
}

impl FromStr for BraidLetter {
    type Err = Error;

    fn from_str(token: &str) -> Result<Self> {
        let malformed = || Error::MalformedToken(token.to_string());
        let (digits, build): (&str, fn(usize) -> BraidLetter) =
            if let Some(rest) = token.strip_prefix('v') {
                (rest, BraidLetter::virt)
            } else if let Some(rest) = token.strip_prefix('-') {
                (rest, BraidLetter::neg)
            } else {
                (token, BraidLetter::pos)
            };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        let index: usize = digits.parse().map_err(|_| malformed())?;
        if index == 0 {
            return Err(malformed());
        }
        Ok(build(index))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        if strands == 0 || strands > MAX_STRANDS {
            return Err(Error::InvalidStrands(strands));
        }
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(Error::IndexOutOfRange {
                    index: l.index,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of classical letters (the crossing count `N` of the closure).
    pub fn classical_count(&self) -> usize {
        self.letters.iter().filter(|l| l.is_classical()).count()
    }

    pub fn permutation(&self) -> Permutation {
        let mut at_position: Vec<usize> = (0..self.strands).collect();
        // at_position[pos] = left endpoint of the strand currently at pos
        for l in &self.letters {
            at_position.swap(l.index - 1, l.index);
        }
        let mut image = vec![0; self.strands];
        for (pos, &start) in at_position.iter().enumerate() {
            image[start] = pos;
        }
        Permutation(image)
    }

    pub fn component_count(&self) -> usize {
        self.permutation().cycle_count()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::InvalidStrands(other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, l) in self.letters.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Parses whitespace-separated tokens `K`, `-K`, `vK`. When `strands` is
/// omitted it is inferred as one more than the largest index.
pub fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord> {
    let letters = text
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<Vec<BraidLetter>>>()?;
    let strands = match strands {
        Some(s) => s,
        None => letters
            .iter()
            .map(|l| l.index)
            .max()
            .map_or(1, |m| m.saturating_add(1)),
    };
    BraidWord::new(strands, letters)
}

/// A permutation of strand positions, 0-based. `image(a) = b` means the strand
/// entering at left position `a` leaves at right position `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn image(&self, a: usize) -> usize {
        self.0[a]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                cycle.push(a);
                a = self.0[a];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// Standard `(p,q)` torus braid with the first `n` overstrand blocks virtualized.
    Vt { p: usize, q: usize, n: usize },
    /// `(v_1…v_{i−1}) (σ_1…σ_{i−1})^{j−1} (σ_k…σ_1)` on `i` strands.
    Ijk { i: usize, j: usize, k: usize },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Vt { p, q, n } => {
                if p < 2 || q < 1 || n < 1 || n > q {
                    return Err(Error::InvalidFamily(format!(
                        "vt:{p},{q},{n} requires p >= 2, q >= 1, 1 <= n <= q"
                    )));
                }
            }
            FamilySpec::Ijk { i, j, k } => {
                if i < 2 || j < 1 || k >= i {
                    return Err(Error::InvalidFamily(format!(
                        "ijk:{i},{j},{k} requires i >= 2, j >= 1, 0 <= k < i"
                    )));
                }
            }
        }
        let strands = match *self {
            FamilySpec::Vt { p, .. } => p,
            FamilySpec::Ijk { i, .. } => i,
        };
        if strands > MAX_STRANDS {
            return Err(Error::InvalidStrands(strands));
        }
        Ok(())
    }

    pub fn build(&self) -> Result<BraidWord> {
        match *self {
            FamilySpec::Vt { p, q, n } => make_vt(p, q, n),
            FamilySpec::Ijk { i, j, k } => make_ijk(i, j, k),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Vt { p, q, n } => write!(f, "vt:{p},{q},{n}"),
            FamilySpec::Ijk { i, j, k } => write!(f, "ijk:{i},{j},{k}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// `vt:P,Q,N` or `ijk:I,J,K`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidFamily(format!("cannot parse `{s}`; expected vt:P,Q,N or ijk:I,J,K"));
        let (name, params) = s.split_once(':').ok_or_else(bad)?;
        let nums = params
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad())?;
        let [a, b, c] = nums[..] else {
            return Err(bad());
        };
        let spec = match name.trim() {
            "vt" => FamilySpec::Vt { p: a, q: b, n: c },
            "ijk" => FamilySpec::Ijk { i: a, j: b, k: c },
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn ascending_block(strands: usize, letter: fn(usize) -> BraidLetter) -> impl Iterator<Item = BraidLetter> {
    (1..strands).map(letter)
}

pub fn make_vt(p: usize, q: usize, n: usize) -> Result<BraidWord> {
    FamilySpec::Vt { p, q, n }.validate()?;
    let mut letters = Vec::with_capacity((p - 1) * q);
    for _ in 0..n {
        letters.extend(ascending_block(p, BraidLetter::virt));
    }
    for _ in n..q {
        letters.extend(ascending_block(p, BraidLetter::pos));
    }
    BraidWord::new(p, letters)
}

pub fn make_ijk(i: usize, j: usize, k: usize) -> Result<BraidWord> {
    FamilySpec::Ijk { i, j, k }.validate()?;
    let mut letters = Vec::with_capacity((i - 1) * j + k);
    letters.extend(ascending_block(i, BraidLetter::virt));
    for _ in 1..j {
        letters.extend(ascending_block(i, BraidLetter::pos));
    }
    letters.extend((1..=k).rev().map(BraidLetter::pos));
    BraidWord::new(i, letters)
}

/// A braid-level move that preserves the closure as a virtual link.
///
/// Positions index into the word's letter list. Relations are applied in
/// whichever direction matches the letters found at `at`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rewrite {
    /// Swap letters `at`, `at + 1` whose indices differ by at least 2.
    FarCommute { at: usize },
    /// `σ_a σ_b σ_a ↔ σ_b σ_a σ_b`, `|a − b| = 1`, all three signs equal.
    BraidRelation { at: usize },
    /// `v_a v_b v_a ↔ v_b v_a v_b`, `|a − b| = 1`.
    VirtualBraidRelation { at: usize },
    /// `v_k v_{k+1} σ_k^e ↔ σ_{k+1}^e v_k v_{k+1}` and
    /// `σ_k^e v_{k+1} v_k ↔ v_{k+1} v_k σ_{k+1}^e`.
    MixedRelation { at: usize },
    /// Delete `v_k v_k`.
    VirtualInvolution { at: usize },
    /// Insert `v_index v_index` before position `at`.
    InsertVirtualPair { at: usize, index: usize },
    /// Delete `σ_k^e σ_k^{−e}`.
    Cancel { at: usize },
    /// Insert `σ_index^e σ_index^{−e}` before position `at`.
    InsertCancelPair { at: usize, index: usize, sign: Sign },
    /// Move the first letter to the end.
    RotateForward,
    /// Move the last letter to the front.
    RotateBackward,
}

impl fmt::Display for Rewrite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

fn braid_triple_swap(w: &[BraidLetter], at: usize, kind: LetterKind) -> Option<[BraidLetter; 3]> {
    let t = w.get(at..at + 3)?;
    let (x, y, z) = (t[0], t[1], t[2]);
    if x.kind != kind || y.kind != kind || z != x || x.index.abs_diff(y.index) != 1 {
        return None;
    }
    if kind == LetterKind::Classical && x.sign != y.sign {
        return None;
    }
    Some([y, x, y])
}

fn mixed_swap(w: &[BraidLetter], at: usize) -> Option<[BraidLetter; 3]> {
    let t = w.get(at..at + 3)?;
    let (x, y, z) = (t[0], t[1], t[2]);
    match (x.kind, y.kind, z.kind) {
        // v_k v_{k+1} σ_k^e -> σ_{k+1}^e v_k v_{k+1}
        (LetterKind::Virtual, LetterKind::Virtual, LetterKind::Classical)
            if y.index == x.index + 1 && z.index == x.index =>
        {
            Some([z.with_index(x.index + 1), x, y])
        }
        // v_{k+1} v_k σ_{k+1}^e -> σ_k^e v_{k+1} v_k
        (LetterKind::Virtual, LetterKind::Virtual, LetterKind::Classical)
            if x.index == y.index + 1 && z.index == x.index =>
        {
            Some([z.with_index(y.index), x, y])
        }
        // σ_{k+1}^e v_k v_{k+1} -> v_k v_{k+1} σ_k^e
        (LetterKind::Classical, LetterKind::Virtual, LetterKind::Virtual)
            if z.index == y.index + 1 && x.index == z.index =>
        {
            Some([y, z, x.with_index(y.index)])
        }
        // σ_k^e v_{k+1} v_k -> v_{k+1} v_k σ_{k+1}^e
        (LetterKind::Classical, LetterKind::Virtual, LetterKind::Virtual)
            if y.index == z.index + 1 && x.index == z.index =>
        {
            Some([y, z, x.with_index(y.index)])
        }
        _ => None,
    }
}

fn replacement(w: &BraidWord, rw: Rewrite) -> Option<Vec<BraidLetter>> {
    let l = &w.letters;
    let splice = |at: usize, width: usize, with: &[BraidLetter]| {
        let mut out = Vec::with_capacity(l.len() + with.len());
        out.extend_from_slice(&l[..at]);
        out.extend_from_slice(with);
        out.extend_from_slice(&l[at + width..]);
        out
    };
    match rw {
        Rewrite::FarCommute { at } => {
            let t = l.get(at..at + 2)?;
            (t[0].index.abs_diff(t[1].index) >= 2).then(|| splice(at, 2, &[t[1], t[0]]))
        }
        Rewrite::BraidRelation { at } => {
            braid_triple_swap(l, at, LetterKind::Classical).map(|r| splice(at, 3, &r))
        }
        Rewrite::VirtualBraidRelation { at } => {
            braid_triple_swap(l, at, LetterKind::Virtual).map(|r| splice(at, 3, &r))
        }
        Rewrite::MixedRelation { at } => mixed_swap(l, at).map(|r| splice(at, 3, &r)),
        Rewrite::VirtualInvolution { at } => {
            let t = l.get(at..at + 2)?;
            (t[0].is_virtual() && t[0] == t[1]).then(|| splice(at, 2, &[]))
        }
        Rewrite::Cancel { at } => {
            let t = l.get(at..at + 2)?;
            (t[0].is_classical() && t[1] == t[0].inverse()).then(|| splice(at, 2, &[]))
        }
        Rewrite::InsertVirtualPair { at, index } => {
            (at <= l.len() && index >= 1 && index < w.strands).then(|| {
                let v = BraidLetter::virt(index);
                splice(at, 0, &[v, v])
            })
        }
        Rewrite::InsertCancelPair { at, index, sign } => {
            (at <= l.len() && index >= 1 && index < w.strands).then(|| {
                let s = BraidLetter::classical(index, sign);
                splice(at, 0, &[s, s.inverse()])
            })
        }
        Rewrite::RotateForward => {
            let (first, rest) = l.split_first()?;
            let mut out = rest.to_vec();
            out.push(*first);
            Some(out)
        }
        Rewrite::RotateBackward => {
            let (last, rest) = l.split_last()?;
            let mut out = Vec::with_capacity(l.len());
            out.push(*last);
            out.extend_from_slice(rest);
            Some(out)
        }
    }
}

/// Every rewrite applicable to `w`, including insertions at every position.
pub fn rewrite_moves(w: &BraidWord) -> Vec<Rewrite> {
    let n = w.letters.len();
    let mut out = Vec::new();
    for at in 0..n {
        for rw in [
            Rewrite::FarCommute { at },
            Rewrite::BraidRelation { at },
            Rewrite::VirtualBraidRelation { at },
            Rewrite::MixedRelation { at },
            Rewrite::VirtualInvolution { at },
            Rewrite::Cancel { at },
        ] {
            if replacement(w, rw).is_some() {
                out.push(rw);
            }
        }
    }
    for at in 0..=n {
        for index in 1..w.strands {
            out.push(Rewrite::InsertVirtualPair { at, index });
            out.push(Rewrite::InsertCancelPair {
                at,
                index,
                sign: Sign::Pos,
            });
            out.push(Rewrite::InsertCancelPair {
                at,
                index,
                sign: Sign::Neg,
            });
        }
    }
    if n > 0 {
        out.push(Rewrite::RotateForward);
        out.push(Rewrite::RotateBackward);
    }
    out
}

pub fn apply_rewrite(w: &BraidWord, rw: Rewrite) -> Result<BraidWord> {
    let letters = replacement(w, rw).ok_or_else(|| Error::RewriteNotApplicable(rw.to_string()))?;
    Ok(BraidWord {
        strands: w.strands,
        letters,
    })
}
