//! Exact minimum set cover by branch and bound.
//!
//! Used for minimum separating families (atoms are separation demands,
//! candidates are up-sets) and minimum Debreu dense subsets (atoms are pairs,
//! candidates are elements). Among all minimum covers the lexicographically
//! least sorted index list is returned, so the result does not depend on how
//! the search explores the tree.

use fixedbitset::FixedBitSet;

/// Proof of a lower bound: every cover size below `infeasible_below` was
/// refuted by exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub infeasible_below: usize,
    /// Search nodes spent on the refutations and on the optimum.
    pub nodes: u64,
}

/// Outcome of a bounded minimization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Minimum<T> {
    Found {
        value: T,
        certificate: Certificate,
    },
    /// No solution of size `≤ budget`; the certificate says how far the
    /// refutation got (`infeasible_below == budget + 1`).
    Exceeded {
        budget: usize,
        certificate: Certificate,
    },
}

impl<T> Minimum<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            Minimum::Found { value, .. } => Some(value),
            Minimum::Exceeded { .. } => None,
        }
    }

    pub fn certificate(&self) -> &Certificate {
        match self {
            Minimum::Found { certificate, .. } | Minimum::Exceeded { certificate, .. } => {
                certificate
            }
        }
    }

    /// Proven lower bound on the optimum.
    pub fn lower_bound(&self) -> usize {
        self.certificate().infeasible_below
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Minimum<U> {
        match self {
            Minimum::Found { value, certificate } => Minimum::Found {
                value: f(value),
                certificate,
            },
            Minimum::Exceeded {
                budget,
                certificate,
            } => Minimum::Exceeded {
                budget,
                certificate,
            },
        }
    }
}

/// `candidates[i]` is the set of atoms covered by candidate `i`.
#[derive(Clone, Debug)]
pub struct CoverProblem {
    atoms: usize,
    candidates: Vec<FixedBitSet>,
}

impl CoverProblem {
    pub fn new(atoms: usize, candidates: Vec<FixedBitSet>) -> Self {
        debug_assert!(candidates.iter().all(|c| c.len() == atoms));
        CoverProblem { atoms, candidates }
    }

    pub fn atoms(&self) -> usize {
        self.atoms
    }

    pub fn candidates(&self) -> &[FixedBitSet] {
        &self.candidates
    }

    pub fn is_cover(&self, chosen: &[usize]) -> bool {
        let mut acc = FixedBitSet::with_capacity(self.atoms);
        for &i in chosen {
            acc.union_with(&self.candidates[i]);
        }
        acc.count_ones(..) == self.atoms
    }

    /// Minimum cover of size at most `budget`.
    pub fn solve(&self, budget: usize) -> Minimum<Vec<usize>> {
        let mut all = FixedBitSet::with_capacity(self.atoms);
        all.insert_range(..);
        let pool: Vec<usize> = (0..self.candidates.len()).collect();
        let mut nodes = 0u64;
        let mut size = None;
        for k in 0..=budget {
            if self.feasible(&all, &pool, k, &mut nodes) {
                size = Some(k);
                break;
            }
        }
        let Some(size) = size else {
            return Minimum::Exceeded {
                budget,
                certificate: Certificate {
                    infeasible_below: budget + 1,
                    nodes,
                },
            };
        };

        // fix positions left to right, smallest index first
        let mut chosen = Vec::with_capacity(size);
        let mut uncovered = all;
        let mut start = 0;
        for pos in 0..size {
            let mut picked = None;
            for i in start..self.candidates.len() {
                if uncovered.is_disjoint(&self.candidates[i]) {
                    continue;
                }
                let mut rest = uncovered.clone();
                rest.difference_with(&self.candidates[i]);
                let tail: Vec<usize> = (i + 1..self.candidates.len()).collect();
                if self.feasible(&rest, &tail, size - pos - 1, &mut nodes) {
                    picked = Some((i, rest));
                    break;
                }
            }
            let (i, rest) = picked.expect("optimum size was proven feasible");
            chosen.push(i);
            uncovered = rest;
            start = i + 1;
        }
        Minimum::Found {
            value: chosen,
            certificate: Certificate {
                infeasible_below: size,
                nodes,
            },
        }
    }

    /// Can `uncovered` be covered by at most `r` candidates from `pool`?
    fn feasible(&self, uncovered: &FixedBitSet, pool: &[usize], r: usize, nodes: &mut u64) -> bool {
        *nodes += 1;
        let need = uncovered.count_ones(..);
        if need == 0 {
            return true;
        }
        if r == 0 {
            return false;
        }

        // restrict to the uncovered atoms and drop dominated candidates
        let mut restricted: Vec<(usize, FixedBitSet, usize)> = pool
            .iter()
            .filter_map(|&i| {
                let mut c = self.candidates[i].clone();
                c.intersect_with(uncovered);
                let n = c.count_ones(..);
                (n > 0).then_some((i, c, n))
            })
            .collect();
        restricted.sort_by(|a, b| b.2.cmp(&a.2).then(a.0.cmp(&b.0)));
        let mut kept: Vec<(usize, FixedBitSet, usize)> = Vec::with_capacity(restricted.len());
        for cand in restricted {
            if !kept.iter().any(|k| cand.1.is_subset(&k.1)) {
                kept.push(cand);
            }
        }

        let best: usize = kept.iter().take(r).map(|k| k.2).sum();
        if best < need {
            return false;
        }
        if kept.len() <= r {
            let mut acc = FixedBitSet::with_capacity(self.atoms);
            for k in &kept {
                acc.union_with(&k.1);
            }
            return acc.count_ones(..) == need;
        }

        // branch on the atom with the fewest covering candidates
        let mut pivot = None;
        let mut fewest = usize::MAX;
        for atom in uncovered.ones() {
            let cnt = kept.iter().filter(|k| k.1.contains(atom)).count();
            if cnt < fewest {
                fewest = cnt;
                pivot = Some(atom);
                if cnt <= 1 {
                    break;
                }
            }
        }
        let pivot = pivot.expect("uncovered is non-empty");
        if fewest == 0 {
            return false;
        }
        let sub_pool: Vec<usize> = kept.iter().map(|k| k.0).collect();
        for k in kept.iter().filter(|k| k.1.contains(pivot)) {
            let mut rest = uncovered.clone();
            rest.difference_with(&k.1);
            if self.feasible(&rest, &sub_pool, r - 1, nodes) {
                return true;
            }
        }
        false
    }
}
