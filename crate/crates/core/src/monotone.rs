//! Real-valued monotones with exact rational values, multi-utilities, and
//! the constructions that turn separating families into monotones and plain
//! multi-utilities into strict or injective ones.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::preorder::Preorder;
use crate::rational::{dyadic, int, ratio, Rat};
use crate::separating::{separation_deficit, Requirement, SeparationKind, UpSet};
use crate::structure::linear_extension;

/// A valuation of the ground elements, indexed like the ground set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonotoneFn {
    values: Vec<Rat>,
}

impl MonotoneFn {
    pub fn new(values: Vec<Rat>) -> Self {
        MonotoneFn { values }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        MonotoneFn::new(values.iter().map(|&v| int(v)).collect())
    }

    pub fn constant(n: usize, value: Rat) -> Self {
        MonotoneFn::new(vec![value; n])
    }

    /// `1` on the set, `0` elsewhere.
    pub fn indicator(set: &UpSet) -> Self {
        MonotoneFn::new(
            (0..set.ground_len())
                .map(|x| if set.contains(x) { int(1) } else { int(0) })
                .collect(),
        )
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn value(&self, x: usize) -> &Rat {
        &self.values[x]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `a + b·self`.
    pub fn affine(&self, a: &Rat, b: &Rat) -> Self {
        MonotoneFn::new(self.values.iter().map(|v| a + b * v).collect())
    }

    /// `self + alpha·other`.
    pub fn plus_scaled(&self, alpha: &Rat, other: &MonotoneFn) -> Self {
        MonotoneFn::new(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(u, v)| u + alpha * v)
                .collect(),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MultiUtilityKind {
    Plain,
    Strict,
    Injective,
}

impl MultiUtilityKind {
    pub const ALL: [MultiUtilityKind; 3] = [
        MultiUtilityKind::Plain,
        MultiUtilityKind::Strict,
        MultiUtilityKind::Injective,
    ];
}

/// An ordered family of monotones tagged with the kind it claims.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiUtility {
    pub members: Vec<MonotoneFn>,
    pub kind: MultiUtilityKind,
}

impl MultiUtility {
    pub fn new(members: Vec<MonotoneFn>, kind: MultiUtilityKind) -> Self {
        MultiUtility { members, kind }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Whether a property holds, with the first offending pair otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Fails(usize, usize),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    fn first(pairs: impl Iterator<Item = (usize, usize)>) -> Verdict {
        let mut pairs = pairs;
        match pairs.next() {
            Some((x, y)) => Verdict::Fails(x, y),
            None => Verdict::Holds,
        }
    }

    fn and_then(self, f: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Holds => f(),
            fail => fail,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FunctionClass {
    pub monotone: Verdict,
    pub strict: Verdict,
    pub injective: Verdict,
    pub utility: Verdict,
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

/// Which monotone properties `f` has on `p`. Strict and injective include
/// monotonicity, so a non-monotone `f` fails them with the same witness.
pub fn classify_function(p: &Preorder, f: &MonotoneFn) -> Result<FunctionClass> {
    let n = p.len();
    if f.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: f.len(),
        });
    }
    let v = f.values();
    let monotone = Verdict::first(pairs(n).filter(|&(x, y)| p.leq(x, y) && v[x] > v[y]));
    let strict =
        monotone.and_then(|| Verdict::first(pairs(n).filter(|&(x, y)| p.lt(x, y) && v[x] == v[y])));
    let injective = monotone.and_then(|| {
        Verdict::first(pairs(n).filter(|&(x, y)| x < y && !p.equiv(x, y) && v[x] == v[y]))
    });
    let utility = Verdict::first(pairs(n).filter(|&(x, y)| p.leq(x, y) != (v[x] <= v[y])));
    Ok(FunctionClass {
        monotone,
        strict,
        injective,
        utility,
    })
}

fn has_kind(class: &FunctionClass, kind: MultiUtilityKind) -> Verdict {
    match kind {
        MultiUtilityKind::Plain => class.monotone,
        MultiUtilityKind::Strict => class.strict,
        MultiUtilityKind::Injective => class.injective,
    }
}

/// Why a family is not a multi-utility of the requested kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MuFailure {
    Empty,
    SizeMismatch {
        member: usize,
    },
    /// `x ⪯ y` but `member(x) > member(y)`.
    NotMonotone {
        member: usize,
        x: usize,
        y: usize,
    },
    /// `¬(x ⪯ y)` yet every member has `v(x) ≤ v(y)`.
    Unseparated {
        x: usize,
        y: usize,
    },
    /// The member is a monotone but not of the requested kind.
    Kind {
        member: usize,
        x: usize,
        y: usize,
    },
}

/// Checks `x ⪯ y ⇔ v(x) ≤ v(y) for all members` and that every member has
/// `kind`. The first failure in pair order is reported.
pub fn verify_multi_utility(
    p: &Preorder,
    mu: &MultiUtility,
    kind: MultiUtilityKind,
) -> std::result::Result<(), MuFailure> {
    if mu.is_empty() {
        return Err(MuFailure::Empty);
    }
    if let Some(member) = mu.members.iter().position(|m| m.len() != p.len()) {
        return Err(MuFailure::SizeMismatch { member });
    }
    for (x, y) in pairs(p.len()) {
        if p.leq(x, y) {
            if let Some(member) = mu.members.iter().position(|m| m.value(x) > m.value(y)) {
                return Err(MuFailure::NotMonotone { member, x, y });
            }
        } else if mu.members.iter().all(|m| m.value(x) <= m.value(y)) {
            return Err(MuFailure::Unseparated { x, y });
        }
    }
    for (member, m) in mu.members.iter().enumerate() {
        let class = classify_function(p, m).expect("sizes checked");
        if let Verdict::Fails(x, y) = has_kind(&class, kind) {
            return Err(MuFailure::Kind { member, x, y });
        }
    }
    Ok(())
}

/// Indicators of the principal up-sets `{y : x ⪯ y}`, one per class.
pub fn indicator_multi_utility(p: &Preorder) -> MultiUtility {
    let q = p.quotient();
    let members = (0..q.len())
        .map(|c| MonotoneFn::indicator(&UpSet::principal(p, q.representative(c))))
        .collect();
    MultiUtility::new(members, MultiUtilityKind::Plain)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyMode {
    /// Family must satisfy separation condition II.
    Strict,
    /// Family must satisfy separation condition III.
    Injective,
}

/// `f = Σ_k 2^(-k-1) χ_{A_k}`. Values lie in `[0, 1)`; distinct membership
/// signatures get distinct values.
pub fn monotone_from_family(
    p: &Preorder,
    family: &[UpSet],
    mode: FamilyMode,
) -> Result<MonotoneFn> {
    let kind = match mode {
        FamilyMode::Strict => SeparationKind::II,
        FamilyMode::Injective => SeparationKind::III,
    };
    if let Some(r) = separation_deficit(p, family, kind)?.first() {
        let (x, y) = match *r {
            Requirement::Separate { from, to } => (from, to),
            Requirement::Either { x, y } => (x, y),
        };
        return Err(Error::FamilyDoesNotSeparate(
            p.label(x).to_string(),
            p.label(y).to_string(),
        ));
    }
    let values = (0..p.len())
        .map(|x| {
            family
                .iter()
                .enumerate()
                .filter(|(_, a)| a.contains(x))
                .fold(int(0), |acc, (k, _)| acc + dyadic(k as u32 + 1))
        })
        .collect();
    Ok(MonotoneFn::new(values))
}

/// Values `k/(q+1)·scale` for `k = 1..q` along the default linear extension
/// of the `q` classes: an injective monotone into `(0, scale)`.
pub fn rank_injective_monotone_scaled(p: &Preorder, scale: &Rat) -> MonotoneFn {
    let q = p.quotient();
    let ranks = linear_extension(p, None).ranks();
    let denom = q.len() as i64 + 1;
    MonotoneFn::new(
        (0..p.len())
            .map(|x| ratio(ranks[q.class_of(x)] as i64 + 1, denom) * scale)
            .collect(),
    )
}

/// Injective monotone into `(0, 1)`.
pub fn rank_injective_monotone(p: &Preorder) -> MonotoneFn {
    rank_injective_monotone_scaled(p, &int(1))
}

/// `{u_i + α·v : u_i ∈ V, α ∈ alphas}`, members ordered by `i` then `α`.
/// Always strict monotones when `V` is monotone and `v` strict; whether they
/// form a multi-utility depends on how fine `alphas` is.
pub fn combine_members(mu: &MultiUtility, strict: &MonotoneFn, alphas: &[Rat]) -> MultiUtility {
    let members = mu
        .members
        .iter()
        .flat_map(|u| alphas.iter().map(move |a| u.plus_scaled(a, strict)))
        .collect();
    MultiUtility::new(members, MultiUtilityKind::Strict)
}

/// Strict multi-utility from a plain one and a strict monotone.
pub fn combine_strict_mu(
    p: &Preorder,
    mu: &MultiUtility,
    strict: &MonotoneFn,
    alphas: &[Rat],
) -> Result<MultiUtility> {
    if alphas.is_empty() || alphas.iter().any(|a| *a <= int(0)) {
        return Err(Error::InvalidParameter {
            name: "alphas",
            reason: "must be non-empty and positive".into(),
        });
    }
    if let Err(f) = verify_multi_utility(p, mu, MultiUtilityKind::Plain) {
        return Err(Error::KindViolation(format!(
            "input is not a multi-utility: {f:?}"
        )));
    }
    let class = classify_function(p, strict)?;
    if let Verdict::Fails(x, y) = class.strict {
        return Err(Error::KindViolation(format!(
            "function is not a strict monotone at ({}, {})",
            p.label(x),
            p.label(y)
        )));
    }
    let out = combine_members(mu, strict, alphas);
    match verify_multi_utility(p, &out, MultiUtilityKind::Strict) {
        Ok(()) => Ok(out),
        Err(_) => Err(Error::AlphasInsufficient),
    }
}

/// `{2^-j : j = 0..=depth}`.
pub fn dyadic_alphas(depth: u32) -> Vec<Rat> {
    (0..=depth).map(dyadic).collect()
}

/// Densifies a dyadic `α` truncation until [`combine_strict_mu`] succeeds.
/// Returns the result and the depth that was needed.
pub fn combine_strict_mu_dyadic(
    p: &Preorder,
    mu: &MultiUtility,
    strict: &MonotoneFn,
    max_depth: u32,
) -> Result<(MultiUtility, u32)> {
    for depth in 0..=max_depth {
        match combine_strict_mu(p, mu, strict, &dyadic_alphas(depth)) {
            Ok(out) => return Ok((out, depth)),
            Err(Error::AlphasInsufficient) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::AlphasInsufficient)
}

/// Values `r` attained by two non-equivalent elements, ascending.
pub fn non_injective_values(p: &Preorder, f: &MonotoneFn) -> Vec<Rat> {
    let n = p.len();
    let mut out = BTreeSet::new();
    for x in 0..n {
        for y in x + 1..n {
            if f.value(x) == f.value(y) && !p.equiv(x, y) {
                out.insert(f.value(x).clone());
            }
        }
    }
    out.into_iter().collect()
}

/// Intermediate functions of one member's tie-breaking: `steps[0]` is the
/// input and `steps[n+1]` is `w_n`. `pivots[n]` is the element whose level
/// was split at step `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectivizeTrace {
    pub steps: Vec<MonotoneFn>,
    pub pivots: Vec<usize>,
}

/// Breaks ties one non-injective level at a time: elements on the level get
/// `c_n` added (an injective monotone into `(0, 2^-n)`), elements above
/// shift up by `2^-n`. Levels are processed in increasing value order with
/// the lowest-index element attaining each level as its representative.
fn injectivize_member(p: &Preorder, u: &MonotoneFn, base: &MonotoneFn) -> InjectivizeTrace {
    let levels = non_injective_values(p, u);
    let pivots: Vec<usize> = levels
        .iter()
        .map(|r| (0..p.len()).find(|&x| u.value(x) == r).expect("attained"))
        .collect();
    let mut steps = vec![u.clone()];
    for (n, &y) in pivots.iter().enumerate() {
        let w = steps.last().unwrap();
        let shift = dyadic(n as u32);
        let pivot = w.value(y).clone();
        let next = (0..p.len())
            .map(|x| {
                let wx = w.value(x);
                if *wx < pivot {
                    wx.clone()
                } else if *wx == pivot {
                    wx + base.value(x) * &shift
                } else {
                    wx + &shift
                }
            })
            .collect();
        steps.push(MonotoneFn::new(next));
    }
    InjectivizeTrace { steps, pivots }
}

/// Injective multi-utility of the same size, with one trace per member.
pub fn injectivize_traced(
    p: &Preorder,
    mu: &MultiUtility,
) -> Result<(MultiUtility, Vec<InjectivizeTrace>)> {
    if let Err(f) = verify_multi_utility(p, mu, MultiUtilityKind::Plain) {
        return Err(Error::KindViolation(format!(
            "input is not a multi-utility: {f:?}"
        )));
    }
    let base = rank_injective_monotone(p);
    let traces: Vec<InjectivizeTrace> = mu
        .members
        .iter()
        .map(|u| injectivize_member(p, u, &base))
        .collect();
    let members = traces
        .iter()
        .map(|t| t.steps.last().unwrap().clone())
        .collect();
    Ok((
        MultiUtility::new(members, MultiUtilityKind::Injective),
        traces,
    ))
}

pub fn injectivize(p: &Preorder, mu: &MultiUtility) -> Result<MultiUtility> {
    injectivize_traced(p, mu).map(|(out, _)| out)
}

/// Threshold sets `{x : f(x) > t}` for every `t` between consecutive
/// attained values, lowest threshold first. With `include_trivial`, `X` is
/// prepended and `∅` appended.
pub fn upsets_from_monotone(
    p: &Preorder,
    f: &MonotoneFn,
    include_trivial: bool,
) -> Result<Vec<UpSet>> {
    let class = classify_function(p, f)?;
    if let Verdict::Fails(x, y) = class.monotone {
        return Err(Error::KindViolation(format!(
            "function is not monotone at ({}, {})",
            p.label(x),
            p.label(y)
        )));
    }
    let levels: BTreeSet<&Rat> = f.values().iter().collect();
    let levels: Vec<&Rat> = levels.into_iter().collect();
    let n = p.len();
    let mut out = Vec::new();
    if include_trivial {
        out.push(UpSet::full(n));
    }
    for t in levels.iter().take(levels.len().saturating_sub(1)) {
        out.push(UpSet::from_indices(n, (0..n).filter(|&x| f.value(x) > *t)));
    }
    if include_trivial {
        out.push(UpSet::empty(n));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{antichain, chain, standard_example};
    use crate::structure::linear_extension;

    #[test]
    fn chain_identity_is_everything() {
        let p = chain(3).unwrap();
        let c = classify_function(&p, &MonotoneFn::from_integers(&[0, 1, 2])).unwrap();
        assert!(c.monotone.holds() && c.strict.holds() && c.injective.holds() && c.utility.holds());
    }

    #[test]
    fn constant_on_antichain() {
        let p = antichain(2).unwrap();
        let c = classify_function(&p, &MonotoneFn::from_integers(&[0, 0])).unwrap();
        assert!(c.monotone.holds() && c.strict.holds());
        assert_eq!(c.injective, Verdict::Fails(0, 1));
        assert!(!c.utility.holds());
    }

    #[test]
    fn extension_rank_on_standard_example() {
        let p = standard_example(2).unwrap();
        let ranks = linear_extension(&p, None).ranks();
        let f = MonotoneFn::new(ranks.iter().map(|&r| int(r as i64)).collect());
        let c = classify_function(&p, &f).unwrap();
        assert!(c.strict.holds() && c.injective.holds());
        assert!(!c.utility.holds());
    }

    #[test]
    fn non_monotone_fails_every_kind_with_same_witness() {
        let p = chain(2).unwrap();
        let c = classify_function(&p, &MonotoneFn::from_integers(&[1, 0])).unwrap();
        assert_eq!(c.monotone, Verdict::Fails(0, 1));
        assert_eq!(c.strict, Verdict::Fails(0, 1));
        assert_eq!(c.injective, Verdict::Fails(0, 1));
    }

    #[test]
    fn size_mismatch() {
        let p = chain(2).unwrap();
        assert!(matches!(
            classify_function(&p, &MonotoneFn::from_integers(&[1])),
            Err(Error::SizeMismatch {
                expected: 2,
                found: 1
            })
        ));
    }

    #[test]
    fn single_utility_on_chain_verifies_every_kind() {
        let p = chain(3).unwrap();
        let mu = MultiUtility::new(
            vec![MonotoneFn::from_integers(&[0, 1, 2])],
            MultiUtilityKind::Plain,
        );
        for k in MultiUtilityKind::ALL {
            assert_eq!(verify_multi_utility(&p, &mu, k), Ok(()));
        }
        let empty = MultiUtility::new(vec![], MultiUtilityKind::Plain);
        assert_eq!(
            verify_multi_utility(&p, &empty, MultiUtilityKind::Plain),
            Err(MuFailure::Empty)
        );
    }

    #[test]
    fn verification_failures() {
        let p = antichain(2).unwrap();
        let one = MultiUtility::new(
            vec![MonotoneFn::from_integers(&[0, 1])],
            MultiUtilityKind::Plain,
        );
        assert_eq!(
            verify_multi_utility(&p, &one, MultiUtilityKind::Plain),
            Err(MuFailure::Unseparated { x: 0, y: 1 })
        );
        let c = chain(2).unwrap();
        let bad = MultiUtility::new(
            vec![MonotoneFn::from_integers(&[1, 0])],
            MultiUtilityKind::Plain,
        );
        assert_eq!(
            verify_multi_utility(&c, &bad, MultiUtilityKind::Plain),
            Err(MuFailure::NotMonotone {
                member: 0,
                x: 0,
                y: 1
            })
        );
    }

    #[test]
    fn indicators() {
        let s = chain(1).unwrap();
        let mu = indicator_multi_utility(&s);
        assert_eq!(mu.members, vec![MonotoneFn::from_integers(&[1])]);

        let a = antichain(2).unwrap();
        let mu = indicator_multi_utility(&a);
        assert_eq!(
            mu.members,
            vec![
                MonotoneFn::from_integers(&[1, 0]),
                MonotoneFn::from_integers(&[0, 1])
            ]
        );

        let p = standard_example(2).unwrap();
        let mu = indicator_multi_utility(&p);
        assert_eq!(mu.len(), 4);
        assert_eq!(
            verify_multi_utility(&p, &mu, MultiUtilityKind::Plain),
            Ok(())
        );
    }

    #[test]
    fn family_on_chain_is_strictly_increasing() {
        let p = chain(3).unwrap();
        let family: Vec<UpSet> = (0..3).map(|x| UpSet::principal(&p, x)).collect();
        let f = monotone_from_family(&p, &family, FamilyMode::Strict).unwrap();
        assert!(f.value(0) < f.value(1) && f.value(1) < f.value(2));
        assert!(*f.value(2) < int(1));
    }

    #[test]
    fn empty_family_on_singleton() {
        let p = chain(1).unwrap();
        let f = monotone_from_family(&p, &[], FamilyMode::Strict).unwrap();
        assert_eq!(f.values(), &[int(0)]);
        assert!(classify_function(&p, &f).unwrap().strict.holds());
    }

    #[test]
    fn family_must_separate() {
        let p = antichain(2).unwrap();
        let err = monotone_from_family(&p, &[], FamilyMode::Injective).unwrap_err();
        assert_eq!(err, Error::FamilyDoesNotSeparate("0".into(), "1".into()));
    }

    #[test]
    fn combine_with_unit_alpha() {
        let p = chain(3).unwrap();
        let f = MonotoneFn::from_integers(&[0, 1, 2]);
        let mu = MultiUtility::new(vec![f.clone()], MultiUtilityKind::Plain);
        let out = combine_strict_mu(&p, &mu, &f, &[int(1)]).unwrap();
        assert_eq!(out.members, vec![MonotoneFn::from_integers(&[0, 2, 4])]);
    }

    #[test]
    fn combine_rejects_bad_inputs() {
        let p = chain(2).unwrap();
        let f = MonotoneFn::from_integers(&[0, 1]);
        let mu = MultiUtility::new(vec![f.clone()], MultiUtilityKind::Plain);
        assert!(matches!(
            combine_strict_mu(&p, &mu, &f, &[]),
            Err(Error::InvalidParameter { .. })
        ));
        assert!(matches!(
            combine_strict_mu(&p, &mu, &MonotoneFn::from_integers(&[0, 0]), &[int(1)]),
            Err(Error::KindViolation(_))
        ));
    }

    #[test]
    fn combine_on_standard_example_needs_small_alpha() {
        let p = standard_example(2).unwrap();
        let mu = indicator_multi_utility(&p);
        // a steep strict monotone makes α = 1 too coarse
        let v = MonotoneFn::from_integers(&[0, 0, 5, 5]);
        assert_eq!(
            combine_strict_mu(&p, &mu, &v, &[int(1)]),
            Err(Error::AlphasInsufficient)
        );
        let (out, depth) = combine_strict_mu_dyadic(&p, &mu, &v, 10).unwrap();
        assert!(depth > 0);
        assert_eq!(
            verify_multi_utility(&p, &out, MultiUtilityKind::Strict),
            Ok(())
        );
    }

    #[test]
    fn injectivize_leaves_injective_input_alone() {
        let p = chain(3).unwrap();
        let mu = MultiUtility::new(
            vec![MonotoneFn::from_integers(&[0, 1, 2])],
            MultiUtilityKind::Plain,
        );
        let (out, traces) = injectivize_traced(&p, &mu).unwrap();
        assert_eq!(out.members, mu.members);
        assert_eq!(traces[0].steps.len(), 1);
    }

    #[test]
    fn injectivize_indicators_of_standard_example() {
        let p = standard_example(2).unwrap();
        let out = injectivize(&p, &indicator_multi_utility(&p)).unwrap();
        assert_eq!(out.len(), 4);
        assert_eq!(
            verify_multi_utility(&p, &out, MultiUtilityKind::Injective),
            Ok(())
        );
    }

    #[test]
    fn injectivize_rejects_non_multi_utility() {
        let p = chain(3).unwrap();
        let mu = MultiUtility::new(
            vec![MonotoneFn::constant(3, int(0))],
            MultiUtilityKind::Plain,
        );
        assert!(matches!(injectivize(&p, &mu), Err(Error::KindViolation(_))));
    }

    #[test]
    fn rank_monotone_examples() {
        assert_eq!(
            rank_injective_monotone(&chain(1).unwrap()).values(),
            &[ratio(1, 2)]
        );
        let a = rank_injective_monotone(&antichain(2).unwrap());
        assert_ne!(a.value(0), a.value(1));
        assert!(a.values().iter().all(|v| *v > int(0) && *v < int(1)));
    }

    #[test]
    fn threshold_sets() {
        let p = chain(3).unwrap();
        let ups = upsets_from_monotone(&p, &MonotoneFn::from_integers(&[0, 1, 2]), false).unwrap();
        let idx: Vec<Vec<usize>> = ups.iter().map(UpSet::indices).collect();
        assert_eq!(idx, vec![vec![1, 2], vec![2]]);
        let with = upsets_from_monotone(&p, &MonotoneFn::from_integers(&[0, 1, 2]), true).unwrap();
        assert_eq!(with.len(), 4);
        assert!(
            upsets_from_monotone(&p, &MonotoneFn::constant(3, int(4)), false)
                .unwrap()
                .is_empty()
        );
        assert!(upsets_from_monotone(&p, &MonotoneFn::from_integers(&[2, 1, 0]), false).is_err());
    }
}
