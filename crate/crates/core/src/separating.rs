//! Increasing sets and families of them that separate elements.
//!
//! A family separates `x` from `y` when some member contains `y` but not
//! `x`. Three separation conditions are distinguished:
//!
//! * **I**: every `x ≺ y` is separated from `x` to `y`, and every
//!   incomparable pair in both directions (indicators form a multi-utility);
//! * **II**: every `x ≺ y` is separated (a strict monotone exists);
//! * **III**: as II, and every incomparable pair in at least one direction
//!   (an injective monotone exists).
//!
//! Minimum families are found by exact set cover over the up-sets of the
//! preorder, see [`crate::cover`].

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::cover::{CoverProblem, Minimum};
use crate::error::{Error, Result};
use crate::preorder::Preorder;
use crate::structure::linear_extension;

/// Default cap on the number of up-sets enumerated for a search.
pub const DEFAULT_UPSET_CAP: usize = 1 << 16;

/// A subset of the ground set, usually increasing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UpSet {
    members: FixedBitSet,
}

impl fmt::Debug for UpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.ones()).finish()
    }
}

impl UpSet {
    pub fn empty(n: usize) -> Self {
        UpSet {
            members: FixedBitSet::with_capacity(n),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut members = FixedBitSet::with_capacity(n);
        members.insert_range(..);
        UpSet { members }
    }

    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut members = FixedBitSet::with_capacity(n);
        for i in indices {
            members.insert(i);
        }
        UpSet { members }
    }

    pub fn from_membership(membership: &[bool]) -> Self {
        Self::from_indices(
            membership.len(),
            membership
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| i),
        )
    }

    /// The principal up-set `{y : x ⪯ y}`.
    pub fn principal(p: &Preorder, x: usize) -> Self {
        Self::from_indices(p.len(), p.up_of(x))
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn ground_len(&self) -> usize {
        self.members.len()
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn indices(&self) -> Vec<usize> {
        self.members.ones().collect()
    }

    pub fn membership(&self) -> Vec<bool> {
        (0..self.ground_len()).map(|i| self.contains(i)).collect()
    }

    /// First `(below, above)` with `below` in the set, `below ⪯ above` and
    /// `above` outside it.
    pub fn increasing_violation(&self, p: &Preorder) -> Option<(usize, usize)> {
        self.members.ones().find_map(|x| {
            (0..p.len())
                .find(|&y| p.leq(x, y) && !self.contains(y))
                .map(|y| (x, y))
        })
    }

    pub fn is_increasing(&self, p: &Preorder) -> bool {
        self.increasing_violation(p).is_none()
    }

    /// `x ∉ A` and `y ∈ A`.
    pub fn separates(&self, x: usize, y: usize) -> bool {
        !self.contains(x) && self.contains(y)
    }

    /// Canonical order: by cardinality, then by the sorted member list.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.members.ones().cmp(other.members.ones()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeparationKind {
    I,
    II,
    III,
}

impl SeparationKind {
    pub const ALL: [SeparationKind; 3] =
        [SeparationKind::I, SeparationKind::II, SeparationKind::III];
}

/// One unmet separation demand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Requirement {
    /// Need a set containing `to` but not `from`.
    Separate { from: usize, to: usize },
    /// Need a set separating `x` from `y` or `y` from `x`.
    Either { x: usize, y: usize },
}

impl Requirement {
    fn met_by(&self, set: &UpSet) -> bool {
        match *self {
            Requirement::Separate { from, to } => set.separates(from, to),
            Requirement::Either { x, y } => set.separates(x, y) || set.separates(y, x),
        }
    }
}

/// Demands of `kind` over the given elements (all elements, or one
/// representative per class), in lexicographic pair order.
fn requirements(p: &Preorder, elems: &[usize], kind: SeparationKind) -> Vec<Requirement> {
    let mut out = Vec::new();
    for (i, &x) in elems.iter().enumerate() {
        for (j, &y) in elems.iter().enumerate() {
            if p.lt(x, y) {
                out.push(Requirement::Separate { from: x, to: y });
            } else if p.incomparable(x, y) {
                match kind {
                    SeparationKind::I => out.push(Requirement::Separate { from: x, to: y }),
                    SeparationKind::II => {}
                    SeparationKind::III if i < j => out.push(Requirement::Either { x, y }),
                    SeparationKind::III => {}
                }
            }
        }
    }
    out
}

/// Demands of `kind` that `sets` leave unmet. Every set must be increasing.
pub fn separation_deficit(
    p: &Preorder,
    sets: &[UpSet],
    kind: SeparationKind,
) -> Result<Vec<Requirement>> {
    for (index, s) in sets.iter().enumerate() {
        if s.ground_len() != p.len() {
            return Err(Error::SizeMismatch {
                expected: p.len(),
                found: s.ground_len(),
            });
        }
        if let Some((below, above)) = s.increasing_violation(p) {
            return Err(Error::NotIncreasing {
                index,
                below: p.label(below).to_string(),
                above: p.label(above).to_string(),
            });
        }
    }
    let all: Vec<usize> = (0..p.len()).collect();
    Ok(requirements(p, &all, kind)
        .into_iter()
        .filter(|r| !sets.iter().any(|s| r.met_by(s)))
        .collect())
}

/// A family of increasing sets with the separation condition it satisfies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatingFamily {
    pub sets: Vec<UpSet>,
    pub kind: SeparationKind,
}

impl SeparatingFamily {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// All increasing subsets, including `∅` and `X`, in canonical order.
pub fn enumerate_upsets(p: &Preorder, cap: usize) -> Result<Vec<UpSet>> {
    let q = p.quotient();
    let ext = linear_extension(p, None);
    // decide classes from the top of the extension down: a class may join
    // only if all classes above it already have
    let top_down: Vec<usize> = ext.order().iter().rev().copied().collect();
    let mut out = Vec::new();
    let mut included = vec![false; q.len()];

    fn rec(
        depth: usize,
        top_down: &[usize],
        q: &crate::preorder::QuotientPoset,
        included: &mut Vec<bool>,
        out: &mut Vec<Vec<bool>>,
        cap: usize,
    ) -> Result<()> {
        if depth == top_down.len() {
            if out.len() == cap {
                return Err(Error::SizeOverflow {
                    what: "up-set enumeration",
                    size: cap + 1,
                    cap,
                });
            }
            out.push(included.clone());
            return Ok(());
        }
        let c = top_down[depth];
        rec(depth + 1, top_down, q, included, out, cap)?;
        if (0..q.len()).all(|d| !q.lt(c, d) || included[d]) {
            included[c] = true;
            rec(depth + 1, top_down, q, included, out, cap)?;
            included[c] = false;
        }
        Ok(())
    }
    rec(0, &top_down, &q, &mut included, &mut out, cap)?;

    let mut sets: Vec<UpSet> = out
        .into_iter()
        .map(|classes| {
            UpSet::from_indices(p.len(), (0..p.len()).filter(|&x| classes[q.class_of(x)]))
        })
        .collect();
    sets.sort_by(UpSet::canonical_cmp);
    Ok(sets)
}

/// Minimum family satisfying `kind` with at most `budget` sets; ties go to
/// the lexicographically least family under the canonical up-set order.
pub fn min_separating_family(
    p: &Preorder,
    kind: SeparationKind,
    budget: usize,
    upset_cap: usize,
) -> Result<Minimum<SeparatingFamily>> {
    let q = p.quotient();
    let reps: Vec<usize> = (0..q.len()).map(|c| q.representative(c)).collect();
    let atoms = requirements(p, &reps, kind);
    let pool: Vec<UpSet> = enumerate_upsets(p, upset_cap)?
        .into_iter()
        .filter(|s| !s.is_empty() && s.len() < p.len())
        .collect();
    let candidates = pool
        .iter()
        .map(|s| {
            let mut b = FixedBitSet::with_capacity(atoms.len());
            for (i, a) in atoms.iter().enumerate() {
                if a.met_by(s) {
                    b.insert(i);
                }
            }
            b
        })
        .collect();
    let problem = CoverProblem::new(atoms.len(), candidates);
    Ok(problem.solve(budget).map(|chosen| SeparatingFamily {
        sets: chosen.into_iter().map(|i| pool[i].clone()).collect(),
        kind,
    }))
}
