//! Worked instances checked against brute force written here, independently
//! of the library's search code.

use ordrep::generators::{
    antichain, bridge, chain, majorization, majorization_utilities, majorization_vectors,
    standard_example, two_wings, two_wings_utilities, BridgeVariant, DEFAULT_ELEMENT_CAP,
};
use ordrep::monotone::{classify_function, monotone_from_family, FamilyMode};
use ordrep::oracle::{cross_check, intersects_to, Budgets, WeakOrder};
use ordrep::structure::{powerset_bound_check, width_by_antichain_search};
use ordrep::{
    min_multi_utility_size, min_separating_family, realizer, upsets_from_monotone,
    verify_multi_utility, MultiUtilityKind, Preorder, SeparationKind, UpSet,
};

/// All linear extensions of a poset (no two elements equivalent), as rank
/// vectors.
fn linear_extensions(p: &Preorder) -> Vec<Vec<usize>> {
    fn go(p: &Preorder, placed: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = p.len();
        if placed.len() == n {
            let mut rank = vec![0; n];
            for (r, &x) in placed.iter().enumerate() {
                rank[x] = r;
            }
            out.push(rank);
            return;
        }
        for x in 0..n {
            if placed.contains(&x) {
                continue;
            }
            // every strict predecessor already placed
            if (0..n).all(|y| !p.lt(y, x) || placed.contains(&y)) {
                placed.push(x);
                go(p, placed, out);
                placed.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(p, &mut Vec::new(), &mut out);
    out
}

fn is_realized_by(p: &Preorder, ranks: &[&Vec<usize>]) -> bool {
    let n = p.len();
    (0..n).all(|x| (0..n).all(|y| p.leq(x, y) == ranks.iter().all(|r| r[x] <= r[y])))
}

#[test]
fn bridge_injective_pair_matches_exhaustive_extension_pairs() {
    let p = bridge(2, BridgeVariant::Strict).unwrap();
    let exts = linear_extensions(&p);
    let exists = exts
        .iter()
        .any(|a| exts.iter().any(|b| is_realized_by(&p, &[a, b])));
    let found = realizer(&p, MultiUtilityKind::Injective, 2);
    assert_eq!(found.is_some(), exists);
    if let Some(r) = found {
        assert!(intersects_to(&p, &r));
    }
}

#[test]
fn standard_example_dimension_matches_extension_search() {
    for n in 2..=3 {
        let p = standard_example(n).unwrap();
        let exts = linear_extensions(&p);
        // smallest k with k extensions realizing p, by brute force
        let mut dim = None;
        'k: for k in 1..=n {
            let mut idx = vec![0usize; k];
            loop {
                let pick: Vec<&Vec<usize>> = idx.iter().map(|&i| &exts[i]).collect();
                if is_realized_by(&p, &pick) {
                    dim = Some(k);
                    break 'k;
                }
                // next non-decreasing index tuple
                let mut j = k;
                loop {
                    if j == 0 {
                        continue 'k;
                    }
                    j -= 1;
                    if idx[j] + 1 < exts.len() {
                        idx[j] += 1;
                        for t in j + 1..k {
                            idx[t] = idx[j];
                        }
                        break;
                    }
                }
            }
        }
        assert_eq!(dim, Some(n));
        let m = min_multi_utility_size(&p, MultiUtilityKind::Injective, n + 1);
        assert_eq!(m.found().map(Vec::len), dim);
    }
}

#[test]
fn standard_example_restriction_is_smaller_example() {
    let p3 = standard_example(3).unwrap();
    let sub = p3.induced(&[0, 1, 3, 4]).unwrap();
    let p2 = standard_example(2).unwrap();
    assert_eq!(sub.matrix(), p2.matrix());
    assert_eq!(width_by_antichain_search(&p3).size, 3);
}

#[test]
fn majorization_six_has_seven_classes() {
    let p = majorization(3, 6, DEFAULT_ELEMENT_CAP).unwrap();
    assert_eq!(p.len(), 28);
    // group by sorted entries
    let mut keys: Vec<Vec<u32>> = majorization_vectors(3, 6)
        .iter()
        .map(|v| {
            let mut c = v.counts().to_vec();
            c.sort_unstable_by(|a, b| b.cmp(a));
            c
        })
        .collect();
    keys.sort();
    keys.dedup();
    assert_eq!(keys.len(), 7);
    assert_eq!(p.quotient().len(), 7);

    let e = |s: &str| p.index_of(s).unwrap();
    assert!(p.leq(e("(6,0,0)/6"), e("(2,2,2)/6")));
    assert!(p.incomparable(e("(4,1,1)/6"), e("(3,3,0)/6")));

    let mu = majorization_utilities(3, 6);
    assert!(verify_multi_utility(&p, &mu, MultiUtilityKind::Plain).is_ok());
    for sets in mu
        .members
        .iter()
        .map(|u| upsets_from_monotone(&p, u, true).unwrap())
    {
        assert!(sets.iter().all(|s| s.is_increasing(&p)));
    }
}

#[test]
fn majorization_six_report() {
    let p = majorization(3, 6, DEFAULT_ELEMENT_CAP).unwrap();
    let cc = cross_check(&p, &Budgets::default()).unwrap();
    assert!(cc.discrepancies.is_empty(), "{:?}", cc.discrepancies);
    assert!(!cc.report.has_utility);
    assert_eq!(cc.report.min_mu_plain.exact(), Some(2));
    assert!(cc.report.min_sep_i.exact().unwrap() > 2);
}

#[test]
fn two_wings_strict_minimum_is_two() {
    for n in 1..=3 {
        let p = two_wings(n).unwrap();
        let mu = two_wings_utilities(n);
        assert!(verify_multi_utility(&p, &mu, MultiUtilityKind::Strict).is_ok());
    }
    let p = two_wings(2).unwrap();
    assert_eq!(p.quotient().len(), 8);
    let m = min_multi_utility_size(&p, MultiUtilityKind::Strict, 4);
    assert_eq!(m.found().map(Vec::len), Some(2));
    let cc = cross_check(&p, &Budgets::default()).unwrap();
    assert!(cc.discrepancies.is_empty(), "{:?}", cc.discrepancies);
    assert_eq!(cc.report.min_mu_strict.exact(), Some(2));
}

#[test]
fn antichain_of_four_needs_four_kind_one_sets() {
    // Sperner: pairwise incomparable signatures need an antichain of
    // subsets of the index set, and 2 or 3 indices give antichains of size
    // at most 2 or 3
    let p = antichain(4).unwrap();
    let fam = min_separating_family(&p, SeparationKind::I, 8, 1 << 16).unwrap();
    let fam = fam.found().unwrap();
    assert_eq!(fam.len(), 4);
    let bound = powerset_bound_check(&p, &fam.sets).unwrap();
    assert!(bound.holds());
}

#[test]
fn bridge_kind_three_family_gives_injective_monotone() {
    let p = bridge(2, BridgeVariant::Incomparable).unwrap();
    let fam = min_separating_family(&p, SeparationKind::III, 8, 1 << 16).unwrap();
    let f = monotone_from_family(&p, &fam.found().unwrap().sets, FamilyMode::Injective).unwrap();
    assert!(classify_function(&p, &f).unwrap().injective.holds());
}

#[test]
fn chain_of_three_kind_two_needs_two_sets() {
    let p = chain(3).unwrap();
    // no single up-set separates all three strict pairs
    let single = (0u32..8)
        .map(|m| UpSet::from_indices(3, (0..3).filter(|i| m >> i & 1 == 1)))
        .filter(|s| s.is_increasing(&p))
        .any(|s| s.separates(0, 1) && s.separates(1, 2));
    assert!(!single);
    let fam = min_separating_family(&p, SeparationKind::II, 4, 1 << 16).unwrap();
    assert_eq!(fam.found().map(|f| f.len()), Some(2));
}

#[test]
fn weak_order_round_trip() {
    let p = standard_example(2).unwrap();
    let r = realizer(&p, MultiUtilityKind::Plain, 2).unwrap();
    let back: Vec<WeakOrder> = r
        .iter()
        .map(|o| WeakOrder::from_values(&o.to_monotone()))
        .collect();
    assert!(intersects_to(&p, &back));
}
