//! Finite posets stored as dense `≤` tables.
//!
//! A [`Poset`] is immutable once built. Every constructor and transform
//! re-checks the three order axioms, so downstream code can assume a valid
//! relation.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::PosetError;

/// Largest ground set accepted by [`all_labeled_posets`].
pub const MAX_LABELED_ENUMERATION: usize = 5;

/// Identifier of the pseudo-random source behind [`random_poset`].
pub const RNG_ALGORITHM: &str = "chacha8-seed_from_u64";

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    names: Vec<String>,
    // row-major n*n, leq[i * n + j] iff x_i <= x_j
    leq: Vec<bool>,
}

/// How the pairs of a [`PosetSpec`] are read. Both modes close the pairs
/// reflexively and transitively; `covers` does not check that the pairs
/// actually form a transitive reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Covers,
    Relations,
}

/// Ingestion format: `{"names": [..], "mode": "covers", "pairs": [["a", "b"], ..]}`
/// with each pair ordered `[lesser, greater]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetSpec {
    pub names: Vec<String>,
    pub mode: Mode,
    #[serde(default)]
    pub pairs: Vec<(String, String)>,
}

impl PosetSpec {
    pub fn from_json(text: &str) -> Result<Self, PosetError> {
        serde_json::from_str(text).map_err(|e| PosetError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }
}

fn warshall(n: usize, rel: &mut [bool]) {
    for k in 0..n {
        for i in 0..n {
            if !rel[i * n + k] {
                continue;
            }
            for j in 0..n {
                if rel[k * n + j] {
                    rel[i * n + j] = true;
                }
            }
        }
    }
}

fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

fn check_axioms(n: usize, leq: &[bool]) -> Result<(), PosetError> {
    for i in 0..n {
        if !leq[i * n + i] {
            return Err(PosetError::NotReflexive(i));
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if leq[i * n + j] && leq[j * n + i] {
                return Err(PosetError::NotAntisymmetric(i, j));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if !leq[i * n + j] {
                continue;
            }
            for k in 0..n {
                if leq[j * n + k] && !leq[i * n + k] {
                    return Err(PosetError::NotTransitive(i, j, k));
                }
            }
        }
    }
    Ok(())
}

fn check_names(names: &[String]) -> Result<(), PosetError> {
    let mut seen = HashSet::with_capacity(names.len());
    for name in names {
        if !seen.insert(name.as_str()) {
            return Err(PosetError::DuplicateName(name.clone()));
        }
    }
    Ok(())
}

impl Poset {
    /// Builds a poset from an explicit `≤` table (row-major, `n * n`),
    /// validating names and all three order axioms.
    pub fn from_table(names: Vec<String>, leq: Vec<bool>) -> Result<Self, PosetError> {
        let n = names.len();
        if leq.len() != n * n {
            return Err(PosetError::TableSize {
                expected: n * n,
                found: leq.len(),
            });
        }
        check_names(&names)?;
        check_axioms(n, &leq)?;
        Ok(Poset { names, leq })
    }

    /// Closes the spec's pairs reflexively and transitively. Cycles surface
    /// as [`PosetError::Cycle`] naming the first input pair that lies on one.
    pub fn build(spec: &PosetSpec) -> Result<Self, PosetError> {
        check_names(&spec.names)?;
        let n = spec.names.len();
        let index = |label: &str| {
            spec.names
                .iter()
                .position(|name| name == label)
                .ok_or_else(|| PosetError::UnknownLabel(label.to_string()))
        };
        let mut pairs = Vec::with_capacity(spec.pairs.len());
        for (pos, (a, b)) in spec.pairs.iter().enumerate() {
            if a == b {
                return Err(PosetError::SelfPair {
                    pair: pos,
                    label: a.clone(),
                });
            }
            pairs.push((index(a)?, index(b)?));
        }

        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in &pairs {
            leq[a * n + b] = true;
        }
        warshall(n, &mut leq);

        for (pos, &(a, b)) in pairs.iter().enumerate() {
            if leq[b * n + a] {
                return Err(PosetError::Cycle {
                    pair: pos,
                    lesser: spec.names[a].clone(),
                    greater: spec.names[b].clone(),
                });
            }
        }
        debug_assert!(check_axioms(n, &leq).is_ok());
        Ok(Poset {
            names: spec.names.clone(),
            leq,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// `x_i ≤ x_j`.
    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        let n = self.len();
        assert!(i < n && j < n, "element index out of range");
        self.leq[i * n + j]
    }

    /// `x_i < x_j`.
    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn is_total(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (i + 1..n).all(|j| self.leq(i, j) || self.leq(j, i)))
    }

    /// Lists the elements so that `x_i ≤ x_j` forces `i` to come no later
    /// than `j`. Among the currently available minimal elements the one with
    /// the smallest original index is taken first. Entry `k` of the result
    /// is the original index placed at position `k`.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut below: Vec<usize> = (0..n)
            .map(|j| (0..n).filter(|&i| self.lt(i, j)).count())
            .collect();
        let mut ready: BTreeSet<usize> = (0..n).filter(|&j| below[j] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(i) = ready.pop_first() {
            order.push(i);
            for (j, count) in below.iter_mut().enumerate() {
                if self.lt(i, j) {
                    *count -= 1;
                    if *count == 0 {
                        ready.insert(j);
                    }
                }
            }
        }
        debug_assert_eq!(order.len(), n);
        order
    }

    /// New poset whose element `i` is old element `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, PosetError> {
        let n = self.len();
        if perm.len() != n {
            return Err(PosetError::InvalidPermutation);
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(PosetError::InvalidPermutation);
            }
            seen[p] = true;
        }
        let names = perm.iter().map(|&p| self.names[p].clone()).collect();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = self.leq(perm[i], perm[j]);
            }
        }
        Poset::from_table(names, leq)
    }

    /// Induced subposet on every element except `index`.
    pub fn remove_element(&self, index: usize) -> Result<Self, PosetError> {
        let n = self.len();
        if index >= n {
            return Err(PosetError::IndexOutOfRange { index, len: n });
        }
        let keep: Vec<usize> = (0..n).filter(|&i| i != index).collect();
        let names = keep.iter().map(|&i| self.names[i].clone()).collect();
        let leq = keep
            .iter()
            .flat_map(|&i| keep.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.leq(i, j))
            .collect();
        Poset::from_table(names, leq)
    }

    /// The element above every other one, if any.
    pub fn find_maximum(&self) -> Option<usize> {
        let n = self.len();
        (0..n).find(|&x| (0..n).all(|y| self.leq(y, x)))
    }

    /// The element below every other one, if any.
    pub fn find_minimum(&self) -> Option<usize> {
        let n = self.len();
        (0..n).find(|&x| (0..n).all(|y| self.leq(x, y)))
    }

    /// Converts back to the ingestion format, listing every strict relation.
    pub fn to_spec(&self) -> PosetSpec {
        let n = self.len();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) {
                    pairs.push((self.names[i].clone(), self.names[j].clone()));
                }
            }
        }
        PosetSpec {
            names: self.names.clone(),
            mode: Mode::Relations,
            pairs,
        }
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.len();
        let mut rel = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) {
                    rel.push(format!("{}<{}", self.names[i], self.names[j]));
                }
            }
        }
        f.debug_struct("Poset")
            .field("names", &self.names)
            .field("lt", &rel)
            .finish()
    }
}

/// Total order `x0 < x1 < … < x(n-1)`.
pub fn chain(n: usize) -> Poset {
    let mut leq = vec![false; n * n];
    for i in 0..n {
        for j in i..n {
            leq[i * n + j] = true;
        }
    }
    Poset {
        names: default_names(n),
        leq,
    }
}

/// `n` pairwise incomparable elements.
pub fn antichain(n: usize) -> Poset {
    let mut leq = vec![false; n * n];
    for i in 0..n {
        leq[i * n + i] = true;
    }
    Poset {
        names: default_names(n),
        leq,
    }
}

/// Subsets of `{0, …, k-1}` under inclusion, indexed by their bitmask.
pub fn boolean_lattice(k: u32) -> Poset {
    let n = 1usize << k;
    let names = (0..n)
        .map(|mask| {
            let members: Vec<String> = (0..k)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| b.to_string())
                .collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    let mut leq = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            leq[a * n + b] = a & b == a;
        }
    }
    Poset { names, leq }
}

/// Divisors of `m` in increasing order under divisibility.
pub fn divisor_poset(m: u64) -> Result<Poset, PosetError> {
    if m == 0 {
        return Err(PosetError::InvalidParameter(
            "divisor poset needs m >= 1".into(),
        ));
    }
    let mut divisors = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            divisors.push(d);
            if d != m / d {
                divisors.push(m / d);
            }
        }
        d += 1;
    }
    divisors.sort_unstable();
    let n = divisors.len();
    let mut leq = vec![false; n * n];
    for (i, a) in divisors.iter().enumerate() {
        for (j, b) in divisors.iter().enumerate() {
            leq[i * n + j] = b % a == 0;
        }
    }
    let names = divisors.iter().map(u64::to_string).collect();
    Ok(Poset { names, leq })
}

/// Seeded random poset: each pair `i < j` is related with probability
/// `density`, the ground set is shuffled, and the result is closed
/// transitively. Same arguments, same poset.
pub fn random_poset(n: usize, density: f64, seed: u64) -> Result<Poset, PosetError> {
    if !(0.0..=1.0).contains(&density) {
        return Err(PosetError::InvalidParameter(format!(
            "density must lie in [0, 1], got {density}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut strict = vec![false; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            strict[i * n + j] = rng.gen_bool(density);
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);

    let mut leq = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            leq[i * n + j] = i == j || strict[perm[i] * n + perm[j]];
        }
    }
    warshall(n, &mut leq);
    Poset::from_table(default_names(n), leq)
}

/// Every partial order on the labeled set `{x0, …, x(n-1)}`, each exactly
/// once, in a fixed order.
///
/// Built one element at a time: a poset on `k + 1` points is a poset on the
/// first `k` together with the down-set `D` and up-set `U` of the new point,
/// where `D` is an order ideal, `U` an order filter, the two are disjoint,
/// and every member of `D` lies below every member of `U`.
pub fn all_labeled_posets(n: usize) -> Result<Vec<Poset>, PosetError> {
    if n > MAX_LABELED_ENUMERATION {
        return Err(PosetError::SizeGuard {
            requested: n,
            limit: MAX_LABELED_ENUMERATION,
        });
    }
    // tables of size k*k
    let mut level: Vec<Vec<bool>> = vec![Vec::new()];
    for k in 0..n {
        let mut next = Vec::new();
        for table in &level {
            let le = |i: usize, j: usize| table[i * k + j];
            let is_ideal = |set: u32| {
                (0..k).all(|j| set >> j & 1 == 0 || (0..k).all(|i| !le(i, j) || set >> i & 1 == 1))
            };
            let is_filter = |set: u32| {
                (0..k).all(|i| set >> i & 1 == 0 || (0..k).all(|j| !le(i, j) || set >> j & 1 == 1))
            };
            let ideals: Vec<u32> = (0..1u32 << k).filter(|&s| is_ideal(s)).collect();
            let filters: Vec<u32> = (0..1u32 << k).filter(|&s| is_filter(s)).collect();
            for &down in &ideals {
                for &up in &filters {
                    if down & up != 0 {
                        continue;
                    }
                    let compatible = (0..k).all(|d| {
                        down >> d & 1 == 0 || (0..k).all(|u| up >> u & 1 == 0 || le(d, u))
                    });
                    if !compatible {
                        continue;
                    }
                    let m = k + 1;
                    let mut grown = vec![false; m * m];
                    for i in 0..k {
                        for j in 0..k {
                            grown[i * m + j] = le(i, j);
                        }
                        grown[i * m + k] = down >> i & 1 == 1;
                        grown[k * m + i] = up >> i & 1 == 1;
                    }
                    grown[k * m + k] = true;
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|leq| Poset::from_table(default_names(n), leq))
        .collect()
}
