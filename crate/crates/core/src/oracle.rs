//! Brute-force ground truth.
//!
//! A size-`k` multi-utility of a given kind exists exactly when `k` total
//! preorders of that kind intersect to the preorder: every monotone induces
//! the weak order `v(x) ≤ v(y)`, and rank valuations turn weak orders back
//! into monotones. That turns the search over functions into a finite
//! search over weak orders, which [`min_multi_utility_size`] runs exactly.
//! [`cross_check`] ties the constructive modules to these minima.

use std::fmt;

use crate::cover::{Certificate, Minimum};
use crate::monotone::{
    classify_function, indicator_multi_utility, injectivize_traced, monotone_from_family,
    non_injective_values, upsets_from_monotone, verify_multi_utility, FamilyMode, MonotoneFn,
    MultiUtility, MultiUtilityKind,
};
use crate::preorder::{Preorder, QuotientPoset};
use crate::rational::int;
use crate::separating::{
    min_separating_family, separation_deficit, SeparatingFamily, SeparationKind, UpSet,
    DEFAULT_UPSET_CAP,
};
use crate::structure::{
    debreu_check, fits_powerset, min_debreu_subset, powerset_bound_check,
    upper_dense_signatures_injective, width_by_antichain_search, width_by_chain_cover, DebreuMode,
};

/// The kinds of realizer coincide with the kinds of multi-utility.
pub type RealizerKind = MultiUtilityKind;

/// A total preorder given by a rank per ground element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeakOrder {
    rank: Vec<usize>,
}

impl WeakOrder {
    pub fn from_ranks(rank: Vec<usize>) -> Self {
        WeakOrder { rank }
    }

    /// Dense ranking of `f`'s values: equal values share a rank.
    pub fn from_values(f: &MonotoneFn) -> Self {
        let mut sorted: Vec<_> = f.values().iter().collect();
        sorted.sort();
        sorted.dedup();
        WeakOrder {
            rank: f
                .values()
                .iter()
                .map(|v| sorted.binary_search(&v).unwrap())
                .collect(),
        }
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.rank[x] <= self.rank[y]
    }

    pub fn to_monotone(&self) -> MonotoneFn {
        MonotoneFn::new(self.rank.iter().map(|&r| int(r as i64)).collect())
    }
}

/// Whether the intersection of `orders` is exactly `p`.
pub fn intersects_to(p: &Preorder, orders: &[WeakOrder]) -> bool {
    let n = p.len();
    (0..n).all(|x| (0..n).all(|y| p.leq(x, y) == orders.iter().all(|o| o.leq(x, y))))
}

/// Rank valuations of a realizer, tagged with `kind`.
pub fn realizer_to_multi_utility(orders: &[WeakOrder], kind: RealizerKind) -> MultiUtility {
    MultiUtility::new(orders.iter().map(WeakOrder::to_monotone).collect(), kind)
}

/// Value orderings of the members of a multi-utility.
pub fn value_orderings(mu: &MultiUtility) -> Vec<WeakOrder> {
    mu.members.iter().map(WeakOrder::from_values).collect()
}

/// `Err` carries an incomparable pair. Finite total preorders always have a
/// utility (the rank in the quotient chain), and non-total ones never do.
pub fn exists_utility(p: &Preorder) -> Result<(), (usize, usize)> {
    match p.first_incomparable() {
        Some(pair) => Err(pair),
        None => Ok(()),
    }
}

/// One weak order under construction, on quotient classes: `le` and `lt`
/// are transitively closed and `lt ⊆ le`.
#[derive(Clone)]
struct Member {
    n: usize,
    le: Vec<bool>,
    lt: Vec<bool>,
}

impl Member {
    fn initial(q: &QuotientPoset, kind: RealizerKind) -> Self {
        let n = q.len();
        let mut le = vec![false; n * n];
        let mut lt = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                le[a * n + b] = q.leq(a, b);
                lt[a * n + b] = kind != RealizerKind::Plain && q.lt(a, b);
            }
        }
        Member { n, le, lt }
    }

    fn le(&self, a: usize, b: usize) -> bool {
        self.le[a * self.n + b]
    }

    fn lt(&self, a: usize, b: usize) -> bool {
        self.lt[a * self.n + b]
    }

    fn can_order_strictly(&self, lo: usize, hi: usize) -> bool {
        !self.le(hi, lo)
    }

    /// Adds `lo < hi` and closes; every new path runs through the new edge,
    /// so all new pairs are strict.
    fn order_strictly(&mut self, lo: usize, hi: usize) {
        let n = self.n;
        let below: Vec<usize> = (0..n).filter(|&a| self.le(a, lo)).collect();
        let above: Vec<usize> = (0..n).filter(|&b| self.le(hi, b)).collect();
        for &a in &below {
            for &b in &above {
                self.le[a * n + b] = true;
                self.lt[a * n + b] = true;
            }
        }
    }

    /// Longest strict chain ending at each class.
    fn levels(&self) -> Vec<usize> {
        let n = self.n;
        let mut level = vec![usize::MAX; n];
        fn go(m: &Member, a: usize, level: &mut [usize]) -> usize {
            if level[a] != usize::MAX {
                return level[a];
            }
            let l = (0..m.n)
                .filter(|&b| m.lt(b, a))
                .map(|b| go(m, b, level) + 1)
                .max()
                .unwrap_or(0);
            level[a] = l;
            l
        }
        for a in 0..n {
            go(self, a, &mut level);
        }
        level
    }

    /// Class ranks of a weak order extending this member; a linear order
    /// when `linear`.
    fn class_ranks(&self, linear: bool) -> Vec<usize> {
        let levels = self.levels();
        if !linear {
            return levels;
        }
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&a| (levels[a], a));
        let mut rank = vec![0; self.n];
        for (i, &a) in order.iter().enumerate() {
            rank[a] = i;
        }
        rank
    }
}

struct RealizerSearch<'a> {
    q: &'a QuotientPoset,
    kind: RealizerKind,
    /// `(x, y)` with `¬(x ⪯ y)`: some member must put `y` strictly below `x`.
    demands: Vec<(usize, usize)>,
    nodes: u64,
}

impl<'a> RealizerSearch<'a> {
    fn new(q: &'a QuotientPoset, kind: RealizerKind) -> Self {
        let n = q.len();
        let demands = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| !q.leq(x, y))
            .collect();
        RealizerSearch {
            q,
            kind,
            demands,
            nodes: 0,
        }
    }

    fn run(&mut self, k: usize) -> Option<Vec<Member>> {
        let mut members = vec![Member::initial(self.q, self.kind); k];
        self.dfs(&mut members, 0).then_some(members)
    }

    fn dfs(&mut self, members: &mut Vec<Member>, used: usize) -> bool {
        self.nodes += 1;
        // most constrained unmet demand
        let mut pick: Option<((usize, usize), Vec<usize>)> = None;
        for &(x, y) in &self.demands {
            if members.iter().any(|m| m.lt(y, x)) {
                continue;
            }
            let options: Vec<usize> = (0..members.len().min(used + 1))
                .filter(|&i| members[i].can_order_strictly(y, x))
                .collect();
            if options.is_empty() {
                return false;
            }
            if pick.as_ref().is_none_or(|(_, o)| options.len() < o.len()) {
                let done = options.len() == 1;
                pick = Some(((x, y), options));
                if done {
                    break;
                }
            }
        }
        let Some(((x, y), options)) = pick else {
            return true;
        };
        for i in options {
            let saved = members[i].clone();
            members[i].order_strictly(y, x);
            if self.dfs(members, used.max(i + 1)) {
                return true;
            }
            members[i] = saved;
        }
        false
    }

    fn to_weak_orders(&self, p: &Preorder, members: &[Member]) -> Vec<WeakOrder> {
        let linear = self.kind == RealizerKind::Injective;
        members
            .iter()
            .map(|m| {
                let class_rank = m.class_ranks(linear);
                WeakOrder::from_ranks(
                    (0..p.len())
                        .map(|x| class_rank[self.q.class_of(x)])
                        .collect(),
                )
            })
            .collect()
    }
}

/// `k` weak orders of `kind` intersecting to `p`, if any exist.
pub fn realizer(p: &Preorder, kind: RealizerKind, k: usize) -> Option<Vec<WeakOrder>> {
    assert!(k >= 1, "a realizer has at least one member");
    let q = p.quotient();
    let mut search = RealizerSearch::new(&q, kind);
    search.run(k).map(|m| search.to_weak_orders(p, &m))
}

/// Smallest realizer of `kind` with at most `budget` members. Every smaller
/// size is refuted by exhaustive search; the certificate records this.
pub fn min_multi_utility_size(
    p: &Preorder,
    kind: RealizerKind,
    budget: usize,
) -> Minimum<Vec<WeakOrder>> {
    let q = p.quotient();
    let mut search = RealizerSearch::new(&q, kind);
    for k in 1..=budget {
        if let Some(members) = search.run(k) {
            return Minimum::Found {
                value: search.to_weak_orders(p, &members),
                certificate: Certificate {
                    infeasible_below: k,
                    nodes: search.nodes,
                },
            };
        }
    }
    Minimum::Exceeded {
        budget,
        certificate: Certificate {
            infeasible_below: budget.max(1) + 1,
            nodes: search.nodes,
        },
    }
}

/// Search limits for [`cross_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    /// Largest realizer size tried.
    pub mu_k: usize,
    /// Largest separating family size tried.
    pub sep_k: usize,
    /// Quotients with more classes skip the realizer search.
    pub class_cap: usize,
    pub upset_cap: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            mu_k: 6,
            sep_k: 16,
            class_cap: 14,
            upset_cap: DEFAULT_UPSET_CAP,
        }
    }
}

/// An exact minimum, or the lower bound reached when the budget ran out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bounded {
    Exact(usize),
    Exceeded { at_least: usize },
}

impl Bounded {
    pub fn exact(&self) -> Option<usize> {
        match *self {
            Bounded::Exact(n) => Some(n),
            Bounded::Exceeded { .. } => None,
        }
    }

    pub fn lower_bound(&self) -> usize {
        match *self {
            Bounded::Exact(n) => n,
            Bounded::Exceeded { at_least } => at_least,
        }
    }

    fn of<T>(m: &Minimum<T>, size: impl Fn(&T) -> usize) -> Bounded {
        match m {
            Minimum::Found { value, .. } => Bounded::Exact(size(value)),
            Minimum::Exceeded { certificate, .. } => Bounded::Exceeded {
                at_least: certificate.infeasible_below,
            },
        }
    }
}

impl fmt::Display for Bounded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bounded::Exact(n) => write!(f, "{n}"),
            Bounded::Exceeded { at_least } => write!(f, ">= {at_least} (budget exceeded)"),
        }
    }
}

/// Computed metrics for one preorder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub quotient_size: usize,
    pub width: usize,
    pub has_utility: bool,
    pub min_mu_plain: Bounded,
    pub min_mu_strict: Bounded,
    pub min_mu_injective: Bounded,
    pub min_sep_i: Bounded,
    pub min_sep_ii: Bounded,
    pub min_sep_iii: Bounded,
    pub debreu_dense_min: usize,
    pub debreu_upper_min: usize,
}

impl ClassificationReport {
    pub fn min_mu(&self, kind: MultiUtilityKind) -> Bounded {
        match kind {
            MultiUtilityKind::Plain => self.min_mu_plain,
            MultiUtilityKind::Strict => self.min_mu_strict,
            MultiUtilityKind::Injective => self.min_mu_injective,
        }
    }

    pub fn min_sep(&self, kind: SeparationKind) -> Bounded {
        match kind {
            SeparationKind::I => self.min_sep_i,
            SeparationKind::II => self.min_sep_ii,
            SeparationKind::III => self.min_sep_iii,
        }
    }

    pub fn is_complete(&self) -> bool {
        MultiUtilityKind::ALL
            .iter()
            .all(|&k| self.min_mu(k).exact().is_some())
            && SeparationKind::ALL
                .iter()
                .all(|&k| self.min_sep(k).exact().is_some())
    }
}

/// Objects backing the report's numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witnesses {
    /// An incomparable pair when no utility exists.
    pub incomparable_pair: Option<(usize, usize)>,
    pub max_antichain: Vec<usize>,
    pub realizers: Vec<(MultiUtilityKind, Vec<WeakOrder>)>,
    pub families: Vec<SeparatingFamily>,
    pub debreu_dense: Vec<usize>,
    pub debreu_upper: Vec<usize>,
}

/// A consistency check that failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub check: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct CrossCheck {
    pub report: ClassificationReport,
    pub witnesses: Witnesses,
    pub discrepancies: Vec<Discrepancy>,
}

impl CrossCheck {
    /// True when every search finished within budget.
    pub fn complete(&self) -> bool {
        self.report.is_complete()
    }
}

struct Log(Vec<Discrepancy>);

impl Log {
    fn check(&mut self, ok: bool, check: &'static str, detail: impl FnOnce() -> String) {
        if !ok {
            self.0.push(Discrepancy {
                check,
                detail: detail(),
            });
        }
    }
}

/// Steps of an injectivization must keep strict order, keep monotonicity on
/// comparable pairs, and remove exactly one non-injective level each.
pub fn injectivize_step_violation(p: &Preorder, steps: &[MonotoneFn]) -> Option<String> {
    let n = p.len();
    for (i, w) in steps.windows(2).enumerate() {
        let (a, b) = (&w[0], &w[1]);
        for x in 0..n {
            for y in 0..n {
                if a.value(x) < a.value(y) && b.value(x) >= b.value(y) {
                    return Some(format!("step {i}: strict order lost at ({x}, {y})"));
                }
                if p.leq(x, y) && b.value(x) > b.value(y) {
                    return Some(format!("step {i}: monotonicity lost at ({x}, {y})"));
                }
            }
        }
        let before = non_injective_values(p, a).len();
        let after = non_injective_values(p, b).len();
        if after + 1 != before {
            return Some(format!(
                "step {i}: non-injective levels {before} -> {after}"
            ));
        }
    }
    None
}

/// Fills the classification report and checks the constructive modules
/// against the oracle minima. An empty discrepancy list means everything
/// agreed; budget overruns show up as [`Bounded::Exceeded`] fields.
pub fn cross_check(p: &Preorder, budgets: &Budgets) -> crate::error::Result<CrossCheck> {
    let q = p.quotient();
    let mut log = Log(Vec::new());

    // width, two ways
    let (chain_width, chains) = width_by_chain_cover(p);
    let width = if q.len() <= 128 {
        let w = width_by_antichain_search(p);
        log.check(w.size == chain_width.size, "width", || {
            format!(
                "antichain search {} vs chain cover {}",
                w.size, chain_width.size
            )
        });
        w
    } else {
        chain_width.clone()
    };
    log.check(chains.len() == chain_width.size, "width", || {
        format!("{} chains for width {}", chains.len(), chain_width.size)
    });
    let antichain_ok = width.antichain.iter().enumerate().all(|(i, &a)| {
        width.antichain[i + 1..]
            .iter()
            .all(|&b| p.incomparable(a, b))
    });
    log.check(antichain_ok, "width", || {
        "witness is not an antichain".into()
    });

    // utilities
    let utility = exists_utility(p);
    let has_utility = utility.is_ok();
    log.check(has_utility == q.is_total(), "utility", || {
        "utility existence disagrees with totality".into()
    });

    // multi-utility minima via realizers
    let mut realizers = Vec::new();
    let mut mu_bounds = Vec::new();
    for kind in MultiUtilityKind::ALL {
        let bound = if q.len() > budgets.class_cap {
            Bounded::Exceeded { at_least: 1 }
        } else {
            let m = min_multi_utility_size(p, kind, budgets.mu_k);
            if let Some(orders) = m.found() {
                log.check(intersects_to(p, orders), "realizer", || {
                    format!("{kind:?} realizer does not intersect to the preorder")
                });
                let mu = realizer_to_multi_utility(orders, kind);
                let verified = verify_multi_utility(p, &mu, kind);
                log.check(verified.is_ok(), "realizer", || {
                    format!("{kind:?} rank valuation fails verification: {verified:?}")
                });
                let back = value_orderings(&mu);
                log.check(
                    intersects_to(p, &back) && back.len() == orders.len(),
                    "realizer",
                    || format!("{kind:?} value orderings do not round-trip"),
                );
                realizers.push((kind, orders.clone()));
            }
            Bounded::of(&m, Vec::len)
        };
        mu_bounds.push(bound);
    }

    // separating family minima
    let mut families = Vec::new();
    let mut sep_bounds = Vec::new();
    for kind in SeparationKind::ALL {
        let bound = match min_separating_family(p, kind, budgets.sep_k, budgets.upset_cap) {
            Ok(m) => {
                if let Some(fam) = m.found() {
                    families.push(fam.clone());
                }
                Bounded::of(&m, SeparatingFamily::len)
            }
            Err(_) => Bounded::Exceeded { at_least: 0 },
        };
        sep_bounds.push(bound);
    }

    for fam in &families {
        let deficit = separation_deficit(p, &fam.sets, fam.kind)?;
        log.check(deficit.is_empty(), "separating family", || {
            format!("minimum kind {:?} family leaves {:?}", fam.kind, deficit)
        });
        match fam.kind {
            SeparationKind::I => {
                // the empty family is a vacuous multi-utility of a one-class preorder
                if !(fam.is_empty() && q.len() == 1) {
                    let mu = MultiUtility::new(
                        fam.sets.iter().map(MonotoneFn::indicator).collect(),
                        MultiUtilityKind::Plain,
                    );
                    let v = verify_multi_utility(p, &mu, MultiUtilityKind::Plain);
                    log.check(v.is_ok(), "(a) indicators", || format!("{v:?}"));
                }
                let bound = powerset_bound_check(p, &fam.sets)?;
                log.check(bound.holds(), "power set bound", || format!("{bound:?}"));
            }
            SeparationKind::II | SeparationKind::III => {
                let (mode, kind_name) = if fam.kind == SeparationKind::II {
                    (FamilyMode::Strict, "strict")
                } else {
                    (FamilyMode::Injective, "injective")
                };
                let f = monotone_from_family(p, &fam.sets, mode)?;
                let class = classify_function(p, &f)?;
                let ok = match mode {
                    FamilyMode::Strict => class.strict.holds(),
                    FamilyMode::Injective => class.injective.holds(),
                };
                log.check(ok, "(b) family monotone", || {
                    format!(
                        "monotone from kind {:?} family is not {kind_name}: {class:?}",
                        fam.kind
                    )
                });
            }
        }
    }

    // constructions on plain multi-utilities
    let mut plain_mus = vec![indicator_multi_utility(p)];
    if let Some((_, orders)) = realizers
        .iter()
        .find(|(k, _)| *k == MultiUtilityKind::Plain)
    {
        plain_mus.push(realizer_to_multi_utility(orders, MultiUtilityKind::Plain));
    }
    for mu in &plain_mus {
        let (inj, traces) = injectivize_traced(p, mu)?;
        let v = verify_multi_utility(p, &inj, MultiUtilityKind::Injective);
        log.check(
            v.is_ok() && inj.len() == mu.len(),
            "(c) injectivize",
            || format!("{v:?}, sizes {} -> {}", mu.len(), inj.len()),
        );
        for t in &traces {
            if let Some(msg) = injectivize_step_violation(p, &t.steps) {
                log.check(false, "(c) injectivize", || msg);
            }
        }
        let mut sets: Vec<UpSet> = Vec::new();
        for m in &mu.members {
            sets.extend(upsets_from_monotone(p, m, false)?);
        }
        let deficit = separation_deficit(p, &sets, SeparationKind::I)?;
        log.check(deficit.is_empty(), "threshold family", || {
            format!("threshold sets leave {deficit:?}")
        });
    }

    // (d) and (e)
    let sep_i = sep_bounds[0];
    if let (Some(mu), Some(s)) = (mu_bounds[0].exact(), sep_i.exact()) {
        log.check(mu <= s.max(1), "(d) mu vs kind I", || {
            format!("min multi-utility {mu} > min kind-I family {s}")
        });
        log.check(fits_powerset(q.len(), s), "power set bound", || {
            format!("{} classes > 2^{s}", q.len())
        });
    }
    let exact_chain = |bounds: &[Bounded], order: &[usize]| -> bool {
        order
            .windows(2)
            .all(|w| match (bounds[w[0]].exact(), bounds[w[1]].exact()) {
                (Some(a), Some(b)) => a <= b,
                _ => true,
            })
    };
    log.check(
        exact_chain(&mu_bounds, &[0, 1, 2]),
        "(e) multi-utility chain",
        || format!("{mu_bounds:?}"),
    );
    // II ≤ III ≤ I
    log.check(
        exact_chain(&sep_bounds, &[1, 2, 0]),
        "(e) separation chain",
        || format!("{sep_bounds:?}"),
    );
    if let Some(mu) = mu_bounds[0].exact() {
        log.check(has_utility == (mu == 1), "(e) utility", || {
            format!("has_utility {has_utility} but min multi-utility {mu}")
        });
    }

    // Debreu density
    let dense = min_debreu_subset(p, DebreuMode::Dense);
    let upper = min_debreu_subset(p, DebreuMode::Upper);
    log.check(
        debreu_check(p, &dense, DebreuMode::Dense).is_ok(),
        "debreu",
        || "dense minimum fails its check".into(),
    );
    log.check(
        debreu_check(p, &upper, DebreuMode::Upper).is_ok(),
        "debreu",
        || "upper minimum fails its check".into(),
    );
    log.check(
        fits_powerset(width.size, upper.len()),
        "width bound",
        || format!("width {} > 2^{}", width.size, upper.len()),
    );
    log.check(
        upper_dense_signatures_injective(p, &upper, &width.antichain),
        "width bound",
        || "upper dense signatures collide on the maximum antichain".into(),
    );

    let report = ClassificationReport {
        quotient_size: q.len(),
        width: width.size,
        has_utility,
        min_mu_plain: mu_bounds[0],
        min_mu_strict: mu_bounds[1],
        min_mu_injective: mu_bounds[2],
        min_sep_i: sep_bounds[0],
        min_sep_ii: sep_bounds[1],
        min_sep_iii: sep_bounds[2],
        debreu_dense_min: dense.len(),
        debreu_upper_min: upper.len(),
    };
    Ok(CrossCheck {
        report,
        witnesses: Witnesses {
            incomparable_pair: utility.err(),
            max_antichain: width.antichain,
            realizers,
            families,
            debreu_dense: dense,
            debreu_upper: upper,
        },
        discrepancies: log.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        antichain, bridge, chain, majorization, standard_example, BridgeVariant,
    };

    #[test]
    fn chain_has_one_member_realizers() {
        let p = chain(4).unwrap();
        for kind in MultiUtilityKind::ALL {
            let m = min_multi_utility_size(&p, kind, 3);
            assert_eq!(m.found().map(Vec::len), Some(1));
        }
        assert!(exists_utility(&p).is_ok());
    }

    #[test]
    fn antichain_two_realizer() {
        let p = antichain(2).unwrap();
        let r = realizer(&p, MultiUtilityKind::Plain, 2).unwrap();
        assert!(intersects_to(&p, &r));
        assert!(r[0].leq(0, 1) != r[1].leq(0, 1));
        assert!(realizer(&p, MultiUtilityKind::Plain, 1).is_none());
    }

    #[test]
    fn standard_example_two() {
        let p = standard_example(2).unwrap();
        let m = min_multi_utility_size(&p, MultiUtilityKind::Plain, 4);
        assert_eq!(m.found().map(Vec::len), Some(2));
        assert_eq!(m.lower_bound(), 2);
    }

    #[test]
    fn total_preorder_realizer_is_its_chain() {
        let p = majorization(3, 2, 100).unwrap();
        for kind in MultiUtilityKind::ALL {
            let r = realizer(&p, kind, 1).unwrap();
            assert!(intersects_to(&p, &r));
        }
    }

    #[test]
    fn bridge_injective_pairs() {
        let p = bridge(2, BridgeVariant::Strict).unwrap();
        let r = realizer(&p, MultiUtilityKind::Injective, 2);
        let r = r.expect("two linear extensions suffice for four elements of width 2");
        assert!(intersects_to(&p, &r));
        for o in &r {
            let mut ranks = o.ranks().to_vec();
            ranks.sort();
            ranks.dedup();
            assert_eq!(ranks.len(), 4);
        }
    }

    #[test]
    fn utility_witness_is_incomparable() {
        let p = majorization(3, 6, 100).unwrap();
        let (x, y) = exists_utility(&p).unwrap_err();
        assert_eq!((p.label(x), p.label(y)), ("(4,1,1)/6", "(3,3,0)/6"));
    }

    #[test]
    fn cross_check_small_instances_are_clean() {
        for p in [
            chain(3).unwrap(),
            antichain(3).unwrap(),
            standard_example(2).unwrap(),
        ] {
            let cc = cross_check(&p, &Budgets::default()).unwrap();
            assert!(cc.discrepancies.is_empty(), "{:?}", cc.discrepancies);
            assert!(cc.complete());
        }
    }
}
