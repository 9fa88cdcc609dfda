use proptest::prelude::*;

use ordrep::generators::{enumerate_preorders, random_preorder};
use ordrep::monotone::{
    indicator_multi_utility, injectivize_traced, rank_injective_monotone, verify_multi_utility,
    MonotoneFn, MultiUtility, MultiUtilityKind,
};
use ordrep::oracle::{injectivize_step_violation, intersects_to, value_orderings};
use ordrep::rational::{int, ratio};
use ordrep::structure::{
    debreu_check, extension_preorder, fits_powerset, linear_extension, min_debreu_subset,
    width_by_antichain_search, width_by_chain_cover, DebreuMode,
};
use ordrep::{
    enumerate_upsets, min_separating_family, upsets_from_monotone, GroundSet, Preorder, Relation,
    SeparationKind, UpSet,
};

fn preorder(max_n: usize) -> impl Strategy<Value = Preorder> {
    (1..=max_n, 0i64..=8, any::<u64>())
        .prop_map(|(n, d, seed)| random_preorder(n, &ratio(d, 8), seed).unwrap())
}

/// Warshall-free closure: repeat relational composition until nothing changes.
fn naive_closure(n: usize, pairs: &[(usize, usize)]) -> Vec<bool> {
    let mut m = vec![false; n * n];
    for i in 0..n {
        m[i * n + i] = true;
    }
    for &(a, b) in pairs {
        m[a * n + b] = true;
    }
    loop {
        let mut changed = false;
        for x in 0..n {
            for y in 0..n {
                if !m[x * n + y] && (0..n).any(|z| m[x * n + z] && m[z * n + y]) {
                    m[x * n + y] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            return m;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn closure_is_the_least_fixed_point(
        n in 1usize..7,
        raw in proptest::collection::vec((0usize..7, 0usize..7), 0..20),
    ) {
        let pairs: Vec<_> = raw.into_iter().filter(|&(a, b)| a < n && b < n).collect();
        let p = Preorder::closure_of(GroundSet::numbered(n).unwrap(), pairs.iter().copied());
        prop_assert_eq!(p.matrix(), &naive_closure(n, &pairs)[..]);
        prop_assert!(p.validate().is_ok());
    }

    #[test]
    fn exactly_one_relation_per_pair(p in preorder(7)) {
        for x in 0..p.len() {
            for y in 0..p.len() {
                let flags = [p.equiv(x, y), p.lt(x, y), p.lt(y, x), p.incomparable(x, y)];
                prop_assert_eq!(flags.iter().filter(|&&f| f).count(), 1);
                let dual = match p.relation(x, y) {
                    Relation::Less => Relation::Greater,
                    Relation::Greater => Relation::Less,
                    r => r,
                };
                prop_assert_eq!(p.relation(y, x), dual);
            }
        }
    }

    #[test]
    fn quotient_is_idempotent(p in preorder(7)) {
        let q = p.quotient();
        let qp = q.to_preorder(&p);
        let qq = qp.quotient();
        prop_assert_eq!(qq.len(), q.len());
        prop_assert!(qq.classes().iter().all(|c| c.len() == 1));
        for a in 0..q.len() {
            for b in 0..q.len() {
                prop_assert_eq!(qp.leq(a, b), q.leq(a, b));
                prop_assert_eq!(
                    q.leq(a, b),
                    p.leq(q.representative(a), q.representative(b))
                );
            }
        }
    }

    #[test]
    fn widths_agree(p in preorder(9)) {
        let a = width_by_antichain_search(&p);
        let (b, chains) = width_by_chain_cover(&p);
        prop_assert_eq!(a.size, b.size);
        prop_assert_eq!(chains.len(), b.size);
        for w in [&a.antichain, &b.antichain] {
            for (i, &x) in w.iter().enumerate() {
                for &y in &w[i + 1..] {
                    prop_assert!(p.incomparable(x, y));
                }
            }
        }
    }

    #[test]
    fn linear_extension_is_total_and_contains_the_order(p in preorder(8)) {
        let ext = linear_extension(&p, None);
        let e = extension_preorder(&p, &ext);
        prop_assert!(e.is_total());
        for x in 0..p.len() {
            for y in 0..p.len() {
                if p.leq(x, y) {
                    prop_assert!(e.leq(x, y));
                }
                if p.lt(x, y) {
                    prop_assert!(e.lt(x, y));
                }
            }
        }
    }

    #[test]
    fn upsets_match_subset_filter(p in preorder(7)) {
        let n = p.len();
        let mut brute: Vec<UpSet> = (0u32..1 << n)
            .map(|m| UpSet::from_indices(n, (0..n).filter(|i| m >> i & 1 == 1)))
            .filter(|s| s.is_increasing(&p))
            .collect();
        brute.sort_by(|a, b| a.canonical_cmp(b));
        prop_assert_eq!(enumerate_upsets(&p, 1 << 16).unwrap(), brute);
    }

    #[test]
    fn scaling_members_never_changes_verification(
        p in preorder(6),
        a in -5i64..5,
        b in 1i64..7,
        bd in 1i64..4,
        member in 0usize..8,
        kind in prop::sample::select(MultiUtilityKind::ALL.to_vec()),
    ) {
        let mu = indicator_multi_utility(&p);
        // a perturbed family that may or may not verify
        let mut members = mu.members.clone();
        members.pop();
        let candidates = [mu.clone(), MultiUtility::new(members, MultiUtilityKind::Plain)];
        for fam in candidates.iter().filter(|f| !f.is_empty()) {
            let i = member % fam.len();
            let mut scaled = fam.clone();
            scaled.members[i] = fam.members[i].affine(&int(a), &ratio(b, bd));
            prop_assert_eq!(
                verify_multi_utility(&p, fam, kind).is_ok(),
                verify_multi_utility(&p, &scaled, kind).is_ok()
            );
        }
    }

    #[test]
    fn injectivize_steps_keep_order(p in preorder(8)) {
        let mu = indicator_multi_utility(&p);
        let (out, traces) = injectivize_traced(&p, &mu).unwrap();
        prop_assert!(verify_multi_utility(&p, &out, MultiUtilityKind::Injective).is_ok());
        prop_assert_eq!(out.len(), mu.len());
        for t in &traces {
            prop_assert_eq!(injectivize_step_violation(&p, &t.steps), None);
        }
    }

    #[test]
    fn value_orderings_form_a_realizer(p in preorder(8)) {
        let mu = indicator_multi_utility(&p);
        let orders = value_orderings(&mu);
        prop_assert_eq!(orders.len(), mu.len());
        prop_assert!(intersects_to(&p, &orders));
    }

    #[test]
    fn threshold_sets_separate(p in preorder(7)) {
        let f = rank_injective_monotone(&p);
        let sets = upsets_from_monotone(&p, &f, false).unwrap();
        prop_assert!(sets.iter().all(|s| s.is_increasing(&p)));
        let g = MonotoneFn::new(
            (0..p.len()).map(|x| int(sets.iter().filter(|s| s.contains(x)).count() as i64)).collect(),
        );
        // counting membership recovers the ordering of f
        for x in 0..p.len() {
            for y in 0..p.len() {
                prop_assert_eq!(f.value(x) < f.value(y), g.value(x) < g.value(y));
            }
        }
    }

    #[test]
    fn upper_dense_supersets_bound_width(p in preorder(7), extra in any::<u16>()) {
        let z = min_debreu_subset(&p, DebreuMode::Upper);
        let mut bigger = z.clone();
        bigger.extend((0..p.len()).filter(|i| extra >> i & 1 == 1 && !z.contains(i)));
        prop_assert!(debreu_check(&p, &bigger, DebreuMode::Upper).is_ok());
        let w = width_by_chain_cover(&p).0.size;
        prop_assert!(fits_powerset(w, z.len()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn min_kind_one_family_is_a_multi_utility(p in preorder(6)) {
        let fam = min_separating_family(&p, SeparationKind::I, 12, 1 << 16)
            .unwrap()
            .found()
            .cloned()
            .unwrap();
        if p.quotient().len() > 1 {
            let mu = MultiUtility::new(
                fam.sets.iter().map(MonotoneFn::indicator).collect(),
                MultiUtilityKind::Plain,
            );
            prop_assert!(verify_multi_utility(&p, &mu, MultiUtilityKind::Plain).is_ok());
        }
        prop_assert!(fits_powerset(p.quotient().len(), fam.len()));
    }
}

#[test]
fn enumeration_covers_every_preorder_once() {
    for n in 1..=4 {
        let all: Vec<Preorder> = enumerate_preorders(n).unwrap().collect();
        let mut matrices: Vec<Vec<bool>> = all.iter().map(|p| p.matrix().to_vec()).collect();
        matrices.sort();
        matrices.dedup();
        assert_eq!(matrices.len(), all.len());
        for p in &all {
            let pairs: Vec<_> = (0..n)
                .flat_map(|x| (0..n).map(move |y| (x, y)))
                .filter(|&(x, y)| p.leq(x, y))
                .collect();
            assert_eq!(p.matrix(), &naive_closure(n, &pairs)[..]);
        }
    }
}
