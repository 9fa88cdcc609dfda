//! Finite preorders stored as dense boolean matrices.
//!
//! Elements are identified by their index in the ground set; labels are for
//! presentation and parsing only.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Ordered, duplicate-free list of element labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyGroundSet);
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(GroundSet { labels, index })
    }

    /// Labels `0, 1, ..., n-1`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }
}

/// How `build` treats the supplied pairs.
/// An ordered pair of element indices.
pub type Pair = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosureMode {
    /// The pairs plus the diagonal must already be reflexive and transitive.
    AsGiven,
    /// Take the smallest reflexive-transitive relation containing the pairs.
    ReflexiveTransitiveClosure,
}

/// Exactly one of these holds for any ordered pair `(x, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Equivalent,
    /// `x ≺ y`
    Less,
    /// `y ≺ x`
    Greater,
    Incomparable,
}

/// A reflexive and transitive relation on a finite ground set.
#[derive(Clone, PartialEq, Eq)]
pub struct Preorder {
    ground: GroundSet,
    leq: Vec<bool>,
}

impl fmt::Debug for Preorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.len();
        writeln!(f, "Preorder({:?})", self.ground.labels)?;
        for x in 0..n {
            let row: String = (0..n)
                .map(|y| if self.leq(x, y) { '1' } else { '.' })
                .collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

impl Preorder {
    /// Builds a preorder from labels and `(below, above)` label pairs.
    pub fn build<S: AsRef<str>>(labels: &[S], pairs: &[(S, S)], mode: ClosureMode) -> Result<Self> {
        let ground = GroundSet::new(labels.iter().map(|l| l.as_ref().to_string()))?;
        let n = ground.len();
        let mut leq = vec![false; n * n];
        for (a, b) in pairs {
            let a = lookup(&ground, a.as_ref())?;
            let b = lookup(&ground, b.as_ref())?;
            leq[a * n + b] = true;
        }
        match mode {
            ClosureMode::AsGiven => {
                for i in 0..n {
                    leq[i * n + i] = true;
                }
                Self::from_matrix(ground, leq)
            }
            ClosureMode::ReflexiveTransitiveClosure => {
                close(&mut leq, n);
                Ok(Preorder { ground, leq })
            }
        }
    }

    /// Validates a full `n × n` row-major matrix.
    pub fn from_matrix(ground: GroundSet, leq: Vec<bool>) -> Result<Self> {
        let n = ground.len();
        assert_eq!(leq.len(), n * n, "matrix does not match ground set");
        let p = Preorder { ground, leq };
        p.validate()?;
        Ok(p)
    }

    /// Builds from a predicate `rule(x, y) ⇔ x ⪯ y`; the diagonal is forced
    /// true and transitivity is checked.
    pub fn from_rule(
        ground: GroundSet,
        mut rule: impl FnMut(usize, usize) -> bool,
    ) -> Result<Self> {
        let n = ground.len();
        let mut leq = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                leq[x * n + y] = x == y || rule(x, y);
            }
        }
        Self::from_matrix(ground, leq)
    }

    /// Reflexive-transitive closure of an arbitrary relation given by index pairs.
    pub fn closure_of(ground: GroundSet, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let n = ground.len();
        let mut leq = vec![false; n * n];
        for (a, b) in pairs {
            leq[a * n + b] = true;
        }
        close(&mut leq, n);
        Preorder { ground, leq }
    }

    /// Checks reflexivity, then transitivity; the first violation in index
    /// order is returned.
    pub fn validate(&self) -> Result<()> {
        let n = self.len();
        for x in 0..n {
            if !self.leq(x, x) {
                return Err(Error::NotReflexive(self.label(x).to_string()));
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !self.leq(x, y) {
                    continue;
                }
                for z in 0..n {
                    if self.leq(y, z) && !self.leq(x, z) {
                        return Err(Error::NotTransitive(
                            self.label(x).to_string(),
                            self.label(y).to_string(),
                            self.label(z).to_string(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn labels(&self) -> &[String] {
        self.ground.labels()
    }

    pub fn label(&self, x: usize) -> &str {
        self.ground.label(x)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.ground.index_of(label)
    }

    /// Row-major relation matrix.
    pub fn matrix(&self) -> &[bool] {
        &self.leq
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.len() + y]
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) && !self.leq(y, x)
    }

    #[inline]
    pub fn equiv(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) && self.leq(y, x)
    }

    #[inline]
    pub fn incomparable(&self, x: usize, y: usize) -> bool {
        !self.leq(x, y) && !self.leq(y, x)
    }

    pub fn relation(&self, x: usize, y: usize) -> Relation {
        match (self.leq(x, y), self.leq(y, x)) {
            (true, true) => Relation::Equivalent,
            (true, false) => Relation::Less,
            (false, true) => Relation::Greater,
            (false, false) => Relation::Incomparable,
        }
    }

    /// No incomparable pairs.
    pub fn is_total(&self) -> bool {
        self.first_incomparable().is_none()
    }

    pub fn first_incomparable(&self) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .find(|&(x, y)| self.incomparable(x, y))
    }

    /// All `(x, y)` with `x ≺ y`, and all unordered `{x, y}` (as `x < y`
    /// index pairs) with `x ⋈ y`.
    pub fn strict_and_incomparable(&self) -> (Vec<Pair>, Vec<Pair>) {
        let n = self.len();
        let mut strict = Vec::new();
        let mut incomparable = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.lt(x, y) {
                    strict.push((x, y));
                } else if x < y && self.incomparable(x, y) {
                    incomparable.push((x, y));
                }
            }
        }
        (strict, incomparable)
    }

    /// Principal up-set `{y : x ⪯ y}`.
    pub fn up_of(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&y| self.leq(x, y))
    }

    /// Restriction to `subset`, keeping the given element order.
    pub fn induced(&self, subset: &[usize]) -> Result<Self> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(&bad) = subset.iter().find(|&&i| i >= self.len()) {
            return Err(Error::IndexOutOfRange(bad));
        }
        let ground = GroundSet::new(subset.iter().map(|&i| self.label(i).to_string()))?;
        let k = subset.len();
        let mut leq = vec![false; k * k];
        for (a, &x) in subset.iter().enumerate() {
            for (b, &y) in subset.iter().enumerate() {
                leq[a * k + b] = self.leq(x, y);
            }
        }
        Ok(Preorder { ground, leq })
    }

    /// Same relation under different labels.
    pub fn relabel<S: Into<String>>(&self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let ground = GroundSet::new(labels)?;
        if ground.len() != self.len() {
            return Err(Error::SizeMismatch {
                expected: self.len(),
                found: ground.len(),
            });
        }
        Ok(Preorder {
            ground,
            leq: self.leq.clone(),
        })
    }

    pub fn quotient(&self) -> QuotientPoset {
        QuotientPoset::of(self)
    }
}

fn lookup(ground: &GroundSet, label: &str) -> Result<usize> {
    ground
        .index_of(label)
        .ok_or_else(|| Error::UnknownLabel(label.to_string()))
}

/// Reflexive-transitive closure in place (Warshall).
fn close(leq: &mut [bool], n: usize) {
    for i in 0..n {
        leq[i * n + i] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if !leq[i * n + k] {
                continue;
            }
            for j in 0..n {
                if leq[k * n + j] {
                    leq[i * n + j] = true;
                }
            }
        }
    }
}

/// The partial order induced on equivalence classes.
///
/// Classes are ordered by their smallest member, and members within a class
/// are listed in increasing index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPoset {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    leq: Vec<bool>,
}

impl QuotientPoset {
    fn of(p: &Preorder) -> Self {
        let n = p.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let members: Vec<usize> = (x..n).filter(|&y| p.equiv(x, y)).collect();
            for &m in &members {
                class_of[m] = id;
            }
            classes.push(members);
        }
        let q = classes.len();
        let mut leq = vec![false; q * q];
        for a in 0..q {
            for b in 0..q {
                leq[a * q + b] = p.leq(classes[a][0], classes[b][0]);
            }
        }
        QuotientPoset {
            classes,
            class_of,
            leq,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn incomparable(&self, a: usize, b: usize) -> bool {
        !self.leq(a, b) && !self.leq(b, a)
    }

    pub fn is_total(&self) -> bool {
        let q = self.len();
        (0..q).all(|a| (0..q).all(|b| !self.incomparable(a, b)))
    }

    /// The quotient as a preorder on its classes, labelled by the label of
    /// each class representative.
    pub fn to_preorder(&self, p: &Preorder) -> Preorder {
        let ground = GroundSet::new(self.classes.iter().map(|c| p.label(c[0]).to_string()))
            .expect("representatives are distinct");
        Preorder {
            ground,
            leq: self.leq.clone(),
        }
    }

    /// Covering pairs `(a, b)`: `a ≺ b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let q = self.len();
        let mut out = Vec::new();
        for a in 0..q {
            for b in 0..q {
                if self.lt(a, b) && !(0..q).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(labels: &[&str]) -> Preorder {
        let pairs: Vec<(&str, &str)> = labels.windows(2).map(|w| (w[0], w[1])).collect();
        Preorder::build(labels, &pairs, ClosureMode::ReflexiveTransitiveClosure).unwrap()
    }

    #[test]
    fn singleton_is_reflexive() {
        let p =
            Preorder::build::<&str>(&["a"], &[], ClosureMode::ReflexiveTransitiveClosure).unwrap();
        assert_eq!(p.matrix(), &[true]);
    }

    #[test]
    fn closure_infers_transitive_pair() {
        let p = chain(&["a", "b", "c"]);
        assert!(p.leq(0, 2));
        assert!(!p.leq(2, 0));
    }

    #[test]
    fn symmetric_pair_merges_classes() {
        let p = Preorder::build(
            &["a", "b"],
            &[("a", "b"), ("b", "a")],
            ClosureMode::ReflexiveTransitiveClosure,
        )
        .unwrap();
        assert_eq!(p.relation(0, 1), Relation::Equivalent);
        assert_eq!(p.quotient().len(), 1);
    }

    #[test]
    fn as_given_reports_transitivity_witness() {
        let err = Preorder::build(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c")],
            ClosureMode::AsGiven,
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::NotTransitive("a".into(), "b".into(), "c".into())
        );
    }

    #[test]
    fn as_given_fills_diagonal() {
        let p = Preorder::build(&["a", "b"], &[("a", "b")], ClosureMode::AsGiven).unwrap();
        assert!(p.leq(1, 1) && p.lt(0, 1));
    }

    #[test]
    fn from_matrix_rejects_missing_diagonal() {
        let g = GroundSet::new(["a", "b"]).unwrap();
        let err = Preorder::from_matrix(g, vec![true, false, false, false]).unwrap_err();
        assert_eq!(err, Error::NotReflexive("b".into()));
    }

    #[test]
    fn label_errors() {
        assert_eq!(
            Preorder::build::<&str>(&["a", "a"], &[], ClosureMode::AsGiven).unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
        assert_eq!(
            Preorder::build(&["a"], &[("a", "z")], ClosureMode::AsGiven).unwrap_err(),
            Error::UnknownLabel("z".into())
        );
        assert_eq!(
            Preorder::build::<&str>(&[], &[], ClosureMode::AsGiven).unwrap_err(),
            Error::EmptyGroundSet
        );
    }

    #[test]
    fn chain_strict_pairs() {
        let p = chain(&["a", "b", "c"]);
        let (strict, inc) = p.strict_and_incomparable();
        assert_eq!(strict, vec![(0, 1), (0, 2), (1, 2)]);
        assert!(inc.is_empty());
    }

    #[test]
    fn antichain_incomparable_pair() {
        let p = Preorder::build::<&str>(&["a", "b"], &[], ClosureMode::AsGiven).unwrap();
        let (strict, inc) = p.strict_and_incomparable();
        assert!(strict.is_empty());
        assert_eq!(inc, vec![(0, 1)]);
    }

    #[test]
    fn quotient_merges_equivalent_pair_below_top() {
        let p = Preorder::build(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "a"), ("a", "c")],
            ClosureMode::ReflexiveTransitiveClosure,
        )
        .unwrap();
        let q = p.quotient();
        assert_eq!(q.classes(), &[vec![0, 1], vec![2]]);
        assert!(q.lt(0, 1) && q.is_total());
    }

    #[test]
    fn quotient_of_antichain_is_identity() {
        let p = Preorder::build::<&str>(&["a", "b", "c"], &[], ClosureMode::AsGiven).unwrap();
        let q = p.quotient();
        assert_eq!(q.len(), 3);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(q.leq(a, b), a == b);
            }
        }
    }

    #[test]
    fn induced_restricts_relation() {
        let p = chain(&["a", "b", "c"]);
        let r = p.induced(&[0, 2]).unwrap();
        assert_eq!(r.labels(), &["a", "c"]);
        assert!(r.lt(0, 1));
        let s = p.induced(&[1]).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(p.induced(&[]).unwrap_err(), Error::EmptySubset);
    }

    #[test]
    fn covers_of_chain() {
        let p = chain(&["a", "b", "c"]);
        assert_eq!(p.quotient().covers(), vec![(0, 1), (1, 2)]);
    }
}
