//! Named preorders and preorder sources.
//!
//! The counterexample generators are finite truncations of preorders on
//! infinite ground sets: intervals become evenly spaced grids and power sets
//! of infinite sets become power sets of `{0..m-1}`. The per-pair injectivity
//! arguments behind their lower bounds survive truncation (they bound the
//! size of separating families by the grid size); cardinality statements do
//! not, and are only visible as growth in the grid parameter.

use num::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::monotone::{MonotoneFn, MultiUtility, MultiUtilityKind};
use crate::preorder::{GroundSet, Preorder};
use crate::rational::{int, ratio, Rat};
use crate::structure::linear_extension;

/// Default guard on generated ground sets; downstream exact searches are
/// exponential.
pub const DEFAULT_ELEMENT_CAP: usize = 512;

fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::SizeOverflow { what, size, cap })
    } else {
        Ok(())
    }
}

fn require(cond: bool, name: &'static str, reason: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            reason: reason.into(),
        })
    }
}

/// `0 ⪯ 1 ⪯ … ⪯ n-1`.
pub fn chain(n: usize) -> Result<Preorder> {
    require(n >= 1, "n", "must be at least 1")?;
    Preorder::from_rule(GroundSet::numbered(n)?, |x, y| x <= y)
}

/// `n` pairwise incomparable elements.
pub fn antichain(n: usize) -> Result<Preorder> {
    require(n >= 1, "n", "must be at least 1")?;
    Preorder::from_rule(GroundSet::numbered(n)?, |_, _| false)
}

/// A probability vector with entries `counts[i] / denominator`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProbVector {
    counts: Vec<u32>,
    denominator: u32,
}

impl ProbVector {
    pub fn new(counts: Vec<u32>, denominator: u32) -> Result<Self> {
        require(denominator >= 1, "denominator", "must be at least 1")?;
        let total: u64 = counts.iter().map(|&c| c as u64).sum();
        require(
            total == denominator as u64,
            "counts",
            format!("sum to {total}, expected {denominator}"),
        )?;
        Ok(ProbVector {
            counts,
            denominator,
        })
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn denominator(&self) -> u32 {
        self.denominator
    }

    pub fn entries(&self) -> Vec<Rat> {
        self.counts
            .iter()
            .map(|&c| ratio(c as i64, self.denominator as i64))
            .collect()
    }

    /// Numerators of the decreasing rearrangement.
    pub fn decreasing(&self) -> Vec<u32> {
        let mut v = self.counts.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// Numerators of the partial sums of the `i` largest entries, `i = 1..len`.
    pub fn top_sums(&self) -> Vec<u64> {
        self.decreasing()
            .iter()
            .scan(0u64, |acc, &c| {
                *acc += c as u64;
                Some(*acc)
            })
            .collect()
    }

    /// `u_i(p) = -Σ_{n ≤ i} p↓_n`, for `i = 1..len-1`.
    pub fn uncertainty_values(&self) -> Vec<Rat> {
        let d = self.denominator as i64;
        self.top_sums()
            .iter()
            .take(self.counts.len() - 1)
            .map(|&s| ratio(-(s as i64), d))
            .collect()
    }

    pub fn label(&self) -> String {
        let inner: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        format!("({})/{}", inner.join(","), self.denominator)
    }

    /// `self` is at most as uncertain as `other`: every top-`i` partial sum of
    /// `self` dominates that of `other`.
    pub fn precedes(&self, other: &ProbVector) -> bool {
        let (a, b) = (self.top_sums(), other.top_sums());
        let k = self.counts.len() - 1;
        // compare over a common denominator
        let (da, db) = (self.denominator as u64, other.denominator as u64);
        a.iter()
            .zip(&b)
            .take(k)
            .all(|(&sa, &sb)| sa * db >= sb * da)
    }
}

/// All vectors with `omega_size` entries that are multiples of
/// `1/denominator`, first entry descending.
pub fn majorization_vectors(omega_size: usize, denominator: u32) -> Vec<ProbVector> {
    fn rec(left: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for c in (0..=left).rev() {
            cur.push(c);
            rec(left - c, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(denominator, omega_size, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|counts| ProbVector {
            counts,
            denominator,
        })
        .collect()
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// The uncertainty preorder (majorization) on the grid of probability
/// vectors with common denominator.
pub fn majorization(omega_size: usize, denominator: u32, cap: usize) -> Result<Preorder> {
    require(omega_size >= 2, "omega", "must be at least 2")?;
    require(denominator >= 1, "denominator", "must be at least 1")?;
    let size = binomial(
        denominator as u64 + omega_size as u64 - 1,
        omega_size as u64 - 1,
    );
    check_cap(
        "majorization grid",
        size.min(usize::MAX as u64) as usize,
        cap,
    )?;
    let vectors = majorization_vectors(omega_size, denominator);
    let ground = GroundSet::new(vectors.iter().map(ProbVector::label))?;
    Preorder::from_rule(ground, |x, y| vectors[x].precedes(&vectors[y]))
}

/// The `|Ω|-1` monotones `u_i(p) = -Σ_{n≤i} p↓_n` on the grid produced by
/// [`majorization`] with the same parameters.
pub fn majorization_utilities(omega_size: usize, denominator: u32) -> MultiUtility {
    let vectors = majorization_vectors(omega_size, denominator);
    let per_vector: Vec<Vec<Rat>> = vectors.iter().map(ProbVector::uncertainty_values).collect();
    let members = (0..omega_size - 1)
        .map(|i| MonotoneFn::new(per_vector.iter().map(|v| v[i].clone()).collect()))
        .collect();
    MultiUtility::new(members, MultiUtilityKind::Plain)
}

/// Standard example: ground `1..n, -1..-n` (in that order) with `i ⪯ -j`
/// iff `i ≠ j`.
pub fn standard_example(n: usize) -> Result<Preorder> {
    require(n >= 1, "n", "must be at least 1")?;
    let labels = (1..=n)
        .map(|i| i.to_string())
        .chain((1..=n).map(|i| format!("-{i}")));
    Preorder::from_rule(GroundSet::new(labels)?, |x, y| {
        x < n && y >= n && x != y - n
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BridgeVariant {
    /// `x ⪯ y` across the bridge only when `x + 2 < y`: `x ⋈ x+2`.
    Incomparable,
    /// `x ⪯ y` across the bridge when `x + 2 ≤ y`: `x ≺ x+2`.
    Strict,
}

/// Two copies of the grid `{0, 1/(n-1), …, 1}`, the second shifted by 2.
/// Elements `0..n` are the lower grid and `n..2n` the shifted copy.
pub fn bridge(n: usize, variant: BridgeVariant) -> Result<Preorder> {
    require(n >= 2, "n", "must be at least 2")?;
    let step = n as i64 - 1;
    let labels = (0..n)
        .map(|k| ratio(k as i64, step).to_string())
        .chain((0..n).map(|k| (int(2) + ratio(k as i64, step)).to_string()));
    Preorder::from_rule(GroundSet::new(labels)?, |x, y| {
        let (lower_x, kx) = (x < n, x % n);
        let (lower_y, ky) = (y < n, y % n);
        match (lower_x, lower_y) {
            (true, true) | (false, false) => kx <= ky,
            (true, false) => match variant {
                BridgeVariant::Incomparable => kx < ky,
                BridgeVariant::Strict => kx <= ky,
            },
            (false, true) => kx < ky,
        }
    })
}

/// Two wings `A`, `B`, each a copy of `{-n..-1, 1..n}` with the integer
/// order; negative elements of one wing lie below positive elements of the
/// other. Element order: `A` ascending, then `B` ascending.
pub fn two_wings(n: usize) -> Result<Preorder> {
    require(n >= 1, "n", "must be at least 1")?;
    let values = wing_values(n);
    let labels = ["A", "B"]
        .iter()
        .flat_map(|w| values.iter().map(move |v| format!("{w}{v}")))
        .collect::<Vec<_>>();
    let w = values.len();
    Preorder::from_rule(GroundSet::new(labels)?, |x, y| {
        let (vx, vy) = (values[x % w], values[y % w]);
        if (x < w) == (y < w) {
            vx <= vy
        } else {
            vx < 0 && vy > 0
        }
    })
}

fn wing_values(n: usize) -> Vec<i64> {
    let n = n as i64;
    (-n..=-1).chain(1..=n).collect()
}

/// The two-member strict multi-utility of [`two_wings`].
///
/// Each member is the identity shifted outward by one on its "own" wing and
/// squashed into `(-1, 1)` by `x / (1 + |x|)` on the other wing. The squash
/// replaces the exponential squash `e^x - 1`, `1 - e^{-x}` so values stay
/// rational; only its range and monotonicity matter.
pub fn two_wings_utilities(n: usize) -> MultiUtility {
    let values = wing_values(n);
    let squash = |x: i64| ratio(x, 1 + x.abs());
    let outward = |x: i64| int(if x < 0 { x - 1 } else { x + 1 });
    let member = |own_first: bool| {
        let own = values.iter().map(|&x| outward(x));
        let other = values.iter().map(|&x| squash(x));
        let vals: Vec<Rat> = if own_first {
            own.chain(other).collect()
        } else {
            other.chain(own).collect()
        };
        MonotoneFn::new(vals)
    };
    MultiUtility::new(vec![member(true), member(false)], MultiUtilityKind::Strict)
}

fn set_label(mask: u32, m: usize) -> String {
    let items: Vec<String> = (0..m)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i.to_string())
        .collect();
    format!("{{{}}}", items.join(","))
}

/// Two copies `B`, `C` of the power set of `{0..m-1}`, each totally ordered
/// by a fixed linear extension `⪯_S` of inclusion, with `x ⪯ y` for
/// `x ∈ B, y ∈ C` iff `x ⪯_S y`, and `x ⪯ y` for `x ∈ C, y ∈ B` iff
/// `x ≺_S y`. Element order: `B` in `⪯_S` order, then `C` likewise.
pub fn double_powerset(m: usize, cap: usize) -> Result<Preorder> {
    require((1..=4).contains(&m), "m", "must be in 1..=4")?;
    let k = 1usize << m;
    check_cap("double power set", 2 * k, cap)?;
    let inclusion = Preorder::from_rule(GroundSet::numbered(k)?, |a, b| a & !b == 0)?;
    let ext = linear_extension(&inclusion, None);
    // rank of each subset in the extension; the quotient of an inclusion
    // order is the order itself, so classes coincide with masks
    let order: Vec<u32> = ext
        .order()
        .iter()
        .map(|&c| inclusion.quotient().representative(c) as u32)
        .collect();
    let labels = ["B", "C"]
        .iter()
        .flat_map(|w| {
            order
                .iter()
                .map(move |&mask| format!("{w}{}", set_label(mask, m)))
        })
        .collect::<Vec<_>>();
    // positions in the ground set are ranks in ⪯_S
    Preorder::from_rule(GroundSet::new(labels)?, |x, y| {
        let (bx, rx) = (x < k, x % k);
        let (by, ry) = (y < k, y % k);
        match (bx, by) {
            (true, true) | (false, false) => rx <= ry,
            (true, false) => rx <= ry,
            (false, true) => rx < ry,
        }
    })
}

/// Numbers `0..m-1` and the subsets of `{0..m-1}` with at least `min_size`
/// elements; a number lies below exactly the sets containing it. Large sets
/// stand in for infinite subsets of the naturals.
pub fn nat_vs_sets(m: usize, min_size: usize, cap: usize) -> Result<Preorder> {
    require((2..=5).contains(&m), "m", "must be in 2..=5")?;
    require(
        (2..=m).contains(&min_size),
        "min_size",
        format!("must be in 2..={m}"),
    )?;
    let sets: Vec<u32> = (0u32..1 << m)
        .filter(|s| s.count_ones() as usize >= min_size)
        .collect();
    check_cap("number/set preorder", m + sets.len(), cap)?;
    let labels = (0..m)
        .map(|i| i.to_string())
        .chain(sets.iter().map(|&s| set_label(s, m)));
    Preorder::from_rule(GroundSet::new(labels)?, |x, y| {
        x < m && y >= m && sets[y - m] >> x & 1 == 1
    })
}

/// Every preorder on `n ≤ 4` labelled elements, each exactly once.
pub fn enumerate_preorders(n: usize) -> Result<impl Iterator<Item = Preorder>> {
    require(n >= 1, "n", "must be at least 1")?;
    check_cap("exhaustive enumeration", n, 4)?;
    let ground = GroundSet::numbered(n)?;
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let total = 1u32 << off.len();
    Ok((0..total).filter_map(move |mask| {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (bit, &(x, y)) in off.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                leq[x * n + y] = true;
            }
        }
        Preorder::from_matrix(ground.clone(), leq).ok()
    }))
}

/// Reflexive-transitive closure of a random relation: every ordered pair of
/// distinct elements is drawn independently with probability `density`.
pub fn random_preorder(n: usize, density: &Rat, seed: u64) -> Result<Preorder> {
    require(n >= 1, "n", "must be at least 1")?;
    require(
        *density >= int(0) && *density <= int(1),
        "density",
        "must lie in [0, 1]",
    )?;
    let num = density.numer().to_u64();
    let den = density.denom().to_u64();
    let (Some(num), Some(den)) = (num, den) else {
        return Err(Error::InvalidParameter {
            name: "density",
            reason: "denominator too large".into(),
        });
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x != y && rng.gen_range(0..den) < num {
                pairs.push((x, y));
            }
        }
    }
    Ok(Preorder::closure_of(GroundSet::numbered(n)?, pairs))
}
