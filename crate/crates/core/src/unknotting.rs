//! Explicit unknotting sequences for the `(i,j,k)` family.
//!
//! Each state `(i,j,k)` names the closure of `make_ijk(i,j,k)`. A sequence
//! first strips full twists while `j > i`, then applies operations A, B and C
//! until it reaches `(i,1,0)`, the unknot. Operations are tracked by their net
//! effect on the triple together with the number of crossing changes spent.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::braid::make_ijk;
use crate::error::{Error, Result};
use crate::gauss::gauss_from_closure;
use crate::invariants::{u_invariant, vu_lower_bound};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IJKState {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl IJKState {
    pub fn new(i: usize, j: usize, k: usize) -> Self {
        IJKState { i, j, k }
    }

    pub fn validate(&self) -> Result<()> {
        if self.i < 2 || self.j < 1 || self.k >= self.i {
            return Err(Error::InvalidFamily(format!(
                "({},{},{}) requires i >= 2, j >= 1, 0 <= k < i",
                self.i, self.j, self.k
            )));
        }
        Ok(())
    }

    pub fn component_count(&self) -> Result<usize> {
        Ok(make_ijk(self.i, self.j, self.k)?.component_count())
    }

    /// Number of classical crossings, `(i−1)(j−1)+k`.
    pub fn crossings(&self) -> usize {
        (self.i - 1) * (self.j - 1) + self.k
    }

    pub fn is_terminal(&self) -> bool {
        self.j == 1 && self.k == 0
    }

    fn ensure_knot(&self) -> Result<()> {
        self.validate()?;
        let components = self.component_count()?;
        if components != 1 {
            return Err(Error::NotAKnot {
                i: self.i,
                j: self.j,
                k: self.k,
                components,
            });
        }
        Ok(())
    }
}

impl fmt::Display for IJKState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.k)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum StepKind {
    /// Undo one full twist on `i` strands.
    Reduce,
    A,
    B,
    C,
}

impl StepKind {
    /// Transition and crossing-change cost, or `None` when the kind's
    /// precondition fails at `s`.
    pub fn apply(self, s: IJKState) -> Option<(IJKState, usize)> {
        let IJKState { i, j, k } = s;
        match self {
            StepKind::Reduce => (j > i).then(|| (IJKState::new(i, j - i, k), i * (i - 1) / 2)),
            StepKind::A => {
                (j >= 2 && k + j >= 2 && k + j < i).then(|| (IJKState::new(i - 1, j, j + k - 1), 0))
            }
            StepKind::B => (j >= 2 && i < k + j && k + j < 2 * i - 1 && i != k + 1)
                .then(|| (IJKState::new(i - 1, j - 1, j + k - i - 1), i - 1)),
            StepKind::C => (j >= 2 && i == k + 1).then(|| (IJKState::new(i, j - 1, 0), i - 1)),
        }
    }
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StepKind::Reduce => "Reduce",
            StepKind::A => "A",
            StepKind::B => "B",
            StepKind::C => "C",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UnknottingStep {
    pub kind: StepKind,
    pub before: IJKState,
    pub after: IJKState,
    pub changes: usize,
}

impl UnknottingStep {
    fn build(kind: StepKind, before: IJKState) -> Self {
        let (after, changes) = kind
            .apply(before)
            .unwrap_or_else(|| panic!("step {kind} not applicable at {before}"));
        UnknottingStep {
            kind,
            before,
            after,
            changes,
        }
    }

    /// Re-derives the transition and cost from `kind` and `before`.
    pub fn is_consistent(&self) -> bool {
        self.kind.apply(self.before) == Some((self.after, self.changes))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnknottingSequence {
    pub start: IJKState,
    pub steps: Vec<UnknottingStep>,
    pub total_changes: usize,
    /// Number of A, B and C operations (full-twist reductions excluded).
    pub op_count: usize,
}

impl UnknottingSequence {
    pub fn final_state(&self) -> IJKState {
        self.steps.last().map_or(self.start, |s| s.after)
    }

    pub fn states(&self) -> impl Iterator<Item = IJKState> + '_ {
        std::iter::once(self.start).chain(self.steps.iter().map(|s| s.after))
    }
}

/// Chooses the next move for a knotted state.
pub fn next_step(s: IJKState) -> Result<UnknottingStep> {
    s.ensure_knot()?;
    let IJKState { i, j, k } = s;
    if j > i {
        return Ok(UnknottingStep::build(StepKind::Reduce, s));
    }
    if j == 1 {
        debug_assert_eq!(k, 0, "one-component (i,1,k) has k = 0");
        return Err(Error::Terminal { i, j, k });
    }
    let kind = if k + j < i {
        StepKind::A
    } else if i < k + j && k + j < 2 * i - 1 && i != k + 1 {
        StepKind::B
    } else if i == k + 1 {
        // k + j = 2i − 1 with j <= i forces i = j = k + 1
        debug_assert!(k + j < 2 * i - 1 || (i == j && j == k + 1));
        StepKind::C
    } else {
        unreachable!("{s} is one component but matches no case");
    };
    Ok(UnknottingStep::build(kind, s))
}

pub fn unknotting_sequence(i: usize, j: usize, k: usize) -> Result<UnknottingSequence> {
    let start = IJKState::new(i, j, k);
    start.ensure_knot()?;
    let mut steps = Vec::new();
    let mut cur = start;
    while !cur.is_terminal() {
        let step = next_step(cur)?;
        debug_assert!(step.after.i < cur.i || step.after.j < cur.j);
        cur = step.after;
        steps.push(step);
    }
    let total_changes = steps.iter().map(|s| s.changes).sum();
    let op_count = steps.iter().filter(|s| s.kind != StepKind::Reduce).count();
    Ok(UnknottingSequence {
        start,
        steps,
        total_changes,
        op_count,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem2Row {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// `⌈Σ|b_m|/2⌉` from the P-polynomial.
    pub lower: u64,
    /// Crossing changes spent by the explicit sequence.
    pub upper: usize,
    /// `((i−1)(j−1)+k)/2`.
    pub formula: usize,
    /// Every state along the sequence is a knot with vanishing u-polynomial.
    pub states_null_homotopic: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem2Report {
    pub max_i: usize,
    pub rows: Vec<Theorem2Row>,
}

impl Theorem2Report {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Theorem2Row> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn to_table(&self) -> String {
        let mut out = String::from(" i  j  k  lower  upper  formula  u=0   pass\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{:>2} {:>2} {:>2}  {:>5}  {:>5}  {:>7}  {:<5} {}\n",
                r.i,
                r.j,
                r.k,
                r.lower,
                r.upper,
                r.formula,
                r.states_null_homotopic,
                if r.pass { "pass" } else { "FAIL" }
            ));
        }
        out
    }
}

fn state_is_null_homotopic_knot(s: IJKState) -> bool {
    make_ijk(s.i, s.j, s.k)
        .and_then(|w| gauss_from_closure(&w))
        .map(|gd| u_invariant(&gd).is_zero())
        .unwrap_or(false)
}

/// Checks one knotted triple: lower bound, sequence cost and closed form agree,
/// and every intermediate state is a knot with `u = 0`.
pub fn verify_state(s: IJKState) -> Result<Theorem2Row> {
    let seq = unknotting_sequence(s.i, s.j, s.k)?;
    let gd = gauss_from_closure(&make_ijk(s.i, s.j, s.k)?)?;
    let lower = vu_lower_bound(&gd);
    let crossings = s.crossings();
    let formula = crossings / 2;
    let steps_ok = seq.steps.iter().all(UnknottingStep::is_consistent)
        && seq.steps.windows(2).all(|w| w[0].after == w[1].before)
        && seq.final_state().is_terminal();
    let states_null_homotopic = seq.states().all(state_is_null_homotopic_knot);
    let pass = crossings.is_multiple_of(2)
        && lower == formula as u64
        && seq.total_changes == formula
        && steps_ok
        && states_null_homotopic;
    Ok(Theorem2Row {
        i: s.i,
        j: s.j,
        k: s.k,
        lower,
        upper: seq.total_changes,
        formula,
        states_null_homotopic,
        pass,
    })
}

/// One-component triples with `2 <= i <= max_i`, `1 <= j <= i`, `0 <= k < i`,
/// in lexicographic order.
pub fn knotted_states(max_i: usize) -> Vec<IJKState> {
    let mut out = Vec::new();
    for i in 2..=max_i {
        for j in 1..=i {
            for k in 0..i {
                let s = IJKState::new(i, j, k);
                if s.component_count().is_ok_and(|c| c == 1) {
                    out.push(s);
                }
            }
        }
    }
    out
}

/// Runs [`verify_state`] over [`knotted_states`]; rows stay in triple order
/// regardless of how the work is scheduled.
pub fn verify_theorem2(max_i: usize) -> Theorem2Report {
    let rows = knotted_states(max_i)
        .into_par_iter()
        .map(|s| verify_state(s).expect("knotted state"))
        .collect();
    Theorem2Report { max_i, rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(seq: &UnknottingSequence) -> Vec<StepKind> {
        seq.steps.iter().map(|s| s.kind).collect()
    }

    #[test]
    fn next_step_examples() {
        let s = next_step(IJKState::new(3, 2, 0)).unwrap();
        assert_eq!((s.kind, s.after, s.changes), (StepKind::A, IJKState::new(2, 2, 1), 0));
        // i = k + 1 routes to C even though i < k + j < 2i − 1
        let s = next_step(IJKState::new(3, 2, 2)).unwrap();
        assert_eq!((s.kind, s.after, s.changes), (StepKind::C, IJKState::new(3, 1, 0), 2));
        assert_eq!(StepKind::B.apply(IJKState::new(3, 2, 2)), None);
        let s = next_step(IJKState::new(4, 3, 2)).unwrap();
        assert_eq!((s.kind, s.after, s.changes), (StepKind::B, IJKState::new(3, 2, 0), 3));
        let s = next_step(IJKState::new(2, 2, 1)).unwrap();
        assert_eq!((s.kind, s.after, s.changes), (StepKind::C, IJKState::new(2, 1, 0), 1));
    }

    #[test]
    fn next_step_errors() {
        assert!(matches!(next_step(IJKState::new(4, 3, 1)), Err(Error::NotAKnot { .. })));
        assert!(matches!(next_step(IJKState::new(5, 1, 0)), Err(Error::Terminal { .. })));
        assert!(matches!(next_step(IJKState::new(3, 1, 2)), Err(Error::NotAKnot { .. })));
        assert!(next_step(IJKState::new(3, 2, 3)).is_err());
    }

    #[test]
    fn sequence_examples() {
        let seq = unknotting_sequence(3, 2, 0).unwrap();
        assert_eq!(kinds(&seq), [StepKind::A, StepKind::C]);
        assert_eq!(seq.total_changes, 1);
        assert_eq!(seq.op_count, 2);

        let seq = unknotting_sequence(2, 1, 0).unwrap();
        assert!(seq.steps.is_empty());
        assert_eq!(seq.total_changes, 0);

        let seq = unknotting_sequence(3, 5, 0).unwrap();
        assert_eq!(kinds(&seq), [StepKind::Reduce, StepKind::A, StepKind::C]);
        assert_eq!(seq.steps[0].changes, 3);
        assert_eq!(seq.total_changes, 4);
        assert_eq!(seq.op_count, 2);
    }

    #[test]
    fn small_verification() {
        let report = verify_theorem2(3);
        let triples: Vec<_> = report.rows.iter().map(|r| (r.i, r.j, r.k)).collect();
        assert_eq!(triples, [(2, 1, 0), (2, 2, 1), (3, 1, 0), (3, 2, 0), (3, 2, 2), (3, 3, 2)]);
        assert!(report.all_pass(), "{}", report.to_table());

        let report = verify_theorem2(2);
        let totals: Vec<_> = report.rows.iter().map(|r| r.upper).collect();
        assert_eq!(totals, [0, 1]);
    }

    #[test]
    fn accounting_identities() {
        for s in knotted_states(9) {
            let seq = unknotting_sequence(s.i, s.j, s.k).unwrap();
            for step in &seq.steps {
                let half = |t: IJKState| t.crossings() as i64;
                let delta = half(step.before) - half(step.after);
                assert_eq!(delta, 2 * step.changes as i64, "{step:?}");
                match step.kind {
                    StepKind::A => assert_eq!(step.changes, 0),
                    StepKind::B | StepKind::C => assert_eq!(step.changes, step.before.i - 1),
                    StepKind::Reduce => assert_eq!(step.changes, step.before.i * (step.before.i - 1) / 2),
                }
            }
        }
    }
}
