//! Order-structural quantities: width, linear extensions, Debreu density and
//! the cardinality bounds that separating families and upper dense subsets
//! impose.
//!
//! Linear extensions are the finite, constructive case of the Szpilrajn
//! extension theorem: a topological order of the quotient that breaks ties
//! by a caller-supplied priority.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use fixedbitset::FixedBitSet;

use crate::cover::CoverProblem;
use crate::error::{Error, Result};
use crate::preorder::Preorder;
use crate::separating::{separation_deficit, Requirement, SeparationKind, UpSet};

/// Classes at or below this count use the exact antichain search for width;
/// larger quotients use a chain cover.
pub const ANTICHAIN_SEARCH_LIMIT: usize = 20;

/// Size of a maximum antichain with a witness (one representative element
/// per class, ascending).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Width {
    pub size: usize,
    pub antichain: Vec<usize>,
}

pub fn width(p: &Preorder) -> Width {
    if p.quotient().len() <= ANTICHAIN_SEARCH_LIMIT {
        width_by_antichain_search(p)
    } else {
        width_by_chain_cover(p).0
    }
}

/// Maximum independent set of the comparability graph of the quotient.
pub fn width_by_antichain_search(p: &Preorder) -> Width {
    let q = p.quotient();
    let n = q.len();
    assert!(n <= 128, "antichain search is limited to 128 classes");
    let incomparable: Vec<u128> = (0..n)
        .map(|a| {
            (0..n)
                .filter(|&b| q.incomparable(a, b))
                .fold(0u128, |m, b| m | 1 << b)
        })
        .collect();

    fn grow(cur: &mut Vec<usize>, cand: u128, inc: &[u128], best: &mut Vec<usize>) {
        if cand == 0 {
            if cur.len() > best.len() {
                *best = cur.clone();
            }
            return;
        }
        if cur.len() + cand.count_ones() as usize <= best.len() {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        cur.push(v);
        grow(cur, cand & inc[v] & !(1u128 << v), inc, best);
        cur.pop();
        grow(cur, cand & !(1u128 << v), inc, best);
    }

    let all = if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    };
    let mut best = Vec::new();
    grow(&mut Vec::new(), all, &incomparable, &mut best);
    Width {
        size: best.len(),
        antichain: best.into_iter().map(|c| q.representative(c)).collect(),
    }
}

/// Width as the minimum number of chains covering the quotient, from a
/// maximum matching in the strict-order bipartite graph. Returns the
/// antichain witness (via König's theorem) and the chains (class
/// representatives, bottom to top).
pub fn width_by_chain_cover(p: &Preorder) -> (Width, Vec<Vec<usize>>) {
    let q = p.quotient();
    let n = q.len();
    let succ: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).filter(|&b| q.lt(a, b)).collect())
        .collect();
    // match_right[b] = a when edge a -> b is in the matching
    let mut match_right: Vec<Option<usize>> = vec![None; n];
    let mut match_left: Vec<Option<usize>> = vec![None; n];

    fn augment(
        a: usize,
        succ: &[Vec<usize>],
        seen: &mut [bool],
        match_left: &mut [Option<usize>],
        match_right: &mut [Option<usize>],
    ) -> bool {
        for &b in &succ[a] {
            if seen[b] {
                continue;
            }
            seen[b] = true;
            if match_right[b].is_none_or(|a2| augment(a2, succ, seen, match_left, match_right)) {
                match_right[b] = Some(a);
                match_left[a] = Some(b);
                return true;
            }
        }
        false
    }
    for a in 0..n {
        let mut seen = vec![false; n];
        augment(a, &succ, &mut seen, &mut match_left, &mut match_right);
    }
    let matched = match_left.iter().filter(|m| m.is_some()).count();

    // alternating reachability from unmatched left vertices
    let mut z_left = vec![false; n];
    let mut z_right = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&a| match_left[a].is_none()).collect();
    for &a in &stack {
        z_left[a] = true;
    }
    while let Some(a) = stack.pop() {
        for &b in &succ[a] {
            if match_left[a] == Some(b) || z_right[b] {
                continue;
            }
            z_right[b] = true;
            if let Some(a2) = match_right[b] {
                if !z_left[a2] {
                    z_left[a2] = true;
                    stack.push(a2);
                }
            }
        }
    }
    // cover = (L \ Z) ∪ (R ∩ Z); its complement on both sides is an antichain
    let antichain: Vec<usize> = (0..n)
        .filter(|&c| z_left[c] && !z_right[c])
        .map(|c| q.representative(c))
        .collect();

    let chains = (0..n)
        .filter(|&c| match_right[c].is_none())
        .map(|start| {
            let mut chain = vec![q.representative(start)];
            let mut cur = start;
            while let Some(next) = match_left[cur] {
                chain.push(q.representative(next));
                cur = next;
            }
            chain
        })
        .collect();

    let size = n - matched;
    debug_assert_eq!(antichain.len(), size);
    (Width { size, antichain }, chains)
}

/// A total order of the quotient classes containing the quotient order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearExtension {
    order: Vec<usize>,
}

impl LinearExtension {
    /// Classes, bottom first.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Position of each class in the extension.
    pub fn ranks(&self) -> Vec<usize> {
        let mut r = vec![0; self.order.len()];
        for (i, &c) in self.order.iter().enumerate() {
            r[c] = i;
        }
        r
    }
}

/// Topological order of the quotient in which, among the classes whose
/// predecessors are all placed, the one containing the earliest element of
/// `seed_order` goes next. The default seed is the ground set order.
pub fn linear_extension(p: &Preorder, seed_order: Option<&[usize]>) -> LinearExtension {
    let q = p.quotient();
    let n = q.len();
    let mut seed_pos = vec![usize::MAX; p.len()];
    match seed_order {
        Some(seed) => {
            for (pos, &x) in seed.iter().enumerate() {
                seed_pos[x] = seed_pos[x].min(pos);
            }
        }
        None => {
            for (x, s) in seed_pos.iter_mut().enumerate() {
                *s = x;
            }
        }
    }
    let priority: Vec<(usize, usize)> = (0..n)
        .map(|c| {
            let best = q.classes()[c].iter().map(|&x| seed_pos[x]).min().unwrap();
            (best, c)
        })
        .collect();
    let mut missing: Vec<usize> = (0..n)
        .map(|b| (0..n).filter(|&a| q.lt(a, b)).count())
        .collect();
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = (0..n)
        .filter(|&c| missing[c] == 0)
        .map(|c| Reverse(priority[c]))
        .collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse((_, c))) = heap.pop() {
        order.push(c);
        for d in 0..n {
            if q.lt(c, d) {
                missing[d] -= 1;
                if missing[d] == 0 {
                    heap.push(Reverse(priority[d]));
                }
            }
        }
    }
    LinearExtension { order }
}

/// The extension as a preorder on the ground set (equivalent elements stay
/// equivalent).
pub fn extension_preorder(p: &Preorder, ext: &LinearExtension) -> Preorder {
    let q = p.quotient();
    let rank = ext.ranks();
    Preorder::from_rule(p.ground().clone(), |x, y| {
        rank[q.class_of(x)] <= rank[q.class_of(y)]
    })
    .expect("a ranking is a total preorder")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DebreuMode {
    /// `x ≺ y` ⇒ some `z ∈ Z` with `x ⪯ z ⪯ y`.
    Dense,
    /// `x ⋈ y` ⇒ some `z ∈ Z` with `x ⋈ z ⪯ y`.
    Upper,
    Both,
}

/// Ordered pairs the mode constrains, each with the elements that would
/// satisfy it.
fn debreu_demands(p: &Preorder, mode: DebreuMode) -> Vec<((usize, usize), Vec<usize>)> {
    let n = p.len();
    let mut out = Vec::new();
    let dense = matches!(mode, DebreuMode::Dense | DebreuMode::Both);
    let upper = matches!(mode, DebreuMode::Upper | DebreuMode::Both);
    if dense {
        for x in 0..n {
            for y in 0..n {
                if p.lt(x, y) {
                    let c = (0..n).filter(|&z| p.leq(x, z) && p.leq(z, y)).collect();
                    out.push(((x, y), c));
                }
            }
        }
    }
    if upper {
        for x in 0..n {
            for y in 0..n {
                if p.incomparable(x, y) {
                    let c = (0..n)
                        .filter(|&z| p.incomparable(x, z) && p.leq(z, y))
                        .collect();
                    out.push(((x, y), c));
                }
            }
        }
    }
    out
}

/// `Err((x, y))` names the first pair the subset fails to serve.
pub fn debreu_check(
    p: &Preorder,
    subset: &[usize],
    mode: DebreuMode,
) -> Result<(), (usize, usize)> {
    let mut member = vec![false; p.len()];
    for &z in subset {
        member[z] = true;
    }
    for (pair, cands) in debreu_demands(p, mode) {
        if !cands.iter().any(|&z| member[z]) {
            return Err(pair);
        }
    }
    Ok(())
}

/// Smallest subset passing [`debreu_check`], lexicographically least among
/// those of minimum size. Ascending element indices.
pub fn min_debreu_subset(p: &Preorder, mode: DebreuMode) -> Vec<usize> {
    let demands = debreu_demands(p, mode);
    let candidates = (0..p.len())
        .map(|z| {
            let mut b = FixedBitSet::with_capacity(demands.len());
            for (i, (_, c)) in demands.iter().enumerate() {
                if c.contains(&z) {
                    b.insert(i);
                }
            }
            b
        })
        .collect();
    CoverProblem::new(demands.len(), candidates)
        .solve(p.len())
        .found()
        .cloned()
        .expect("the whole ground set always passes")
}

/// Outcome of checking the class-signature map of a kind-I family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowersetBound {
    pub classes: usize,
    pub family_size: usize,
    /// Two classes sharing a signature, if any.
    pub collision: Option<(usize, usize)>,
}

impl PowersetBound {
    /// Injective signatures and `|X/∼| ≤ 2^|family|`.
    pub fn holds(&self) -> bool {
        self.collision.is_none() && fits_powerset(self.classes, self.family_size)
    }
}

/// `count ≤ 2^exponent`.
pub fn fits_powerset(count: usize, exponent: usize) -> bool {
    exponent >= usize::BITS as usize || count <= 1usize << exponent
}

/// Checks that `[x] ↦ {i : [x] ⊆ A_i}` is injective for a kind-I family.
pub fn powerset_bound_check(p: &Preorder, sets: &[UpSet]) -> Result<PowersetBound> {
    if let Some(r) = separation_deficit(p, sets, SeparationKind::I)?.first() {
        let (a, b) = match *r {
            Requirement::Separate { from, to } => (from, to),
            Requirement::Either { x, y } => (x, y),
        };
        return Err(Error::NotSeparatingFamily(
            p.label(a).to_string(),
            p.label(b).to_string(),
        ));
    }
    let q = p.quotient();
    let signatures: Vec<Vec<bool>> = (0..q.len())
        .map(|c| {
            sets.iter()
                .map(|s| q.classes()[c].iter().all(|&x| s.contains(x)))
                .collect()
        })
        .collect();
    let collision = (0..q.len())
        .flat_map(|a| (a + 1..q.len()).map(move |b| (a, b)))
        .find(|&(a, b)| signatures[a] == signatures[b]);
    Ok(PowersetBound {
        classes: q.len(),
        family_size: sets.len(),
        collision,
    })
}

/// For an upper dense `z`, the map `x ↦ {z : z ⪯ x}` is injective on every
/// antichain, so `width ≤ 2^|z|`. Checks injectivity on the given antichain.
pub fn upper_dense_signatures_injective(p: &Preorder, z: &[usize], antichain: &[usize]) -> bool {
    let sig = |x: usize| -> Vec<bool> { z.iter().map(|&d| p.leq(d, x)).collect() };
    let sigs: Vec<Vec<bool>> = antichain.iter().map(|&x| sig(x)).collect();
    (0..sigs.len()).all(|i| (i + 1..sigs.len()).all(|j| sigs[i] != sigs[j]))
}
