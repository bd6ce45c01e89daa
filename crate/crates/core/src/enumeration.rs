//! Enumeration of small commutative monoids up to isomorphism.
//!
//! Tables are built with the neutral element at index 0. The representative
//! of an isomorphism class is its lexicographically least table among all
//! relabellings fixing 0, comparing the upper triangle in row-major order.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::monoid::FiniteMonoid;
use crate::morphisms::is_subdirectly_irreducible;
use crate::varieties::{satisfies, VarietySignature};

/// Largest order the enumerator accepts.
pub const ENUMERATION_HARD_CAP: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("max order {requested} exceeds the enumeration cap {cap}")]
    OrderCap { requested: usize, cap: usize },
    #[error("max order must be at least 1")]
    ZeroOrder,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub max_order: usize,
    pub variety_filter: Option<VarietySignature>,
    pub si_only: bool,
}

impl EnumerationConfig {
    pub fn new(max_order: usize) -> Result<Self, EnumerationError> {
        let cfg = EnumerationConfig {
            max_order,
            variety_filter: None,
            si_only: false,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_variety(mut self, sig: VarietySignature) -> Self {
        self.variety_filter = Some(sig);
        self
    }

    pub fn si_only(mut self) -> Self {
        self.si_only = true;
        self
    }

    pub fn validate(&self) -> Result<(), EnumerationError> {
        if self.max_order == 0 {
            return Err(EnumerationError::ZeroOrder);
        }
        if self.max_order > ENUMERATION_HARD_CAP {
            return Err(EnumerationError::OrderCap {
                requested: self.max_order,
                cap: ENUMERATION_HARD_CAP,
            });
        }
        Ok(())
    }

    pub fn accepts(&self, monoid: &FiniteMonoid) -> bool {
        self.variety_filter.is_none_or(|sig| satisfies(monoid, sig))
            && (!self.si_only || is_subdirectly_irreducible(monoid))
    }
}

/// Every commutative monoid of order at most `cfg.max_order`, one per
/// isomorphism class, passing the filters. Ordered by order, then by table.
pub fn enumerate_monoids(
    cfg: &EnumerationConfig,
) -> Result<Vec<Arc<FiniteMonoid>>, EnumerationError> {
    cfg.validate()?;
    let mut out = Vec::new();
    for k in 1..=cfg.max_order {
        out.extend(
            monoids_of_order(k)
                .iter()
                .filter(|m| cfg.accepts(m))
                .cloned(),
        );
    }
    Ok(out)
}

/// Isomorphism classes of one order, by canonical pruning. Cached.
pub fn monoids_of_order(k: usize) -> Arc<Vec<Arc<FiniteMonoid>>> {
    assert!(
        (1..=ENUMERATION_HARD_CAP).contains(&k),
        "order {k} out of range"
    );
    static CACHE: Cache<Vec<Arc<FiniteMonoid>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(found) = cache.lock().expect("cache lock").get(&k) {
        return Arc::clone(found);
    }
    let tables = search_tables(k, true);
    let monoids: Vec<Arc<FiniteMonoid>> = tables
        .into_iter()
        .enumerate()
        .map(|(i, t)| {
            Arc::new(FiniteMonoid::from_table_unchecked(
                format!("cm{k}_{i}"),
                k,
                0,
                t,
            ))
        })
        .collect();
    let monoids = Arc::new(monoids);
    cache
        .lock()
        .expect("cache lock")
        .entry(k)
        .or_insert_with(|| Arc::clone(&monoids));
    monoids
}

/// Isomorphism-class count at order `k` by the canonical-pruning search.
pub fn count_canonical(k: usize) -> usize {
    monoids_of_order(k).len()
}

/// Isomorphism-class count at order `k` by enumerating every table with
/// neutral 0 and deduplicating canonical forms.
pub fn count_naive(k: usize) -> usize {
    assert!(
        (1..=ENUMERATION_HARD_CAP).contains(&k),
        "order {k} out of range"
    );
    search_tables(k, false)
        .into_iter()
        .map(|t| canonical_table(k, &t))
        .collect::<BTreeSet<_>>()
        .len()
}

/// Canonical table of `monoid`: equal for two monoids exactly when they are
/// isomorphic.
pub fn canonical_form(monoid: &FiniteMonoid) -> Vec<usize> {
    let k = monoid.order();
    assert!(
        k <= ENUMERATION_HARD_CAP + 2,
        "canonical form is factorial in the order"
    );
    // move the neutral element to 0
    let e = monoid.neutral().0;
    let perm: Vec<usize> = (0..k)
        .map(|x| match x {
            _ if x == e => 0,
            _ if x < e => x + 1,
            _ => x,
        })
        .collect();
    let moved = monoid.relabel(&perm);
    canonical_table(k, moved.table())
}

fn canonical_table(k: usize, table: &[usize]) -> Vec<usize> {
    let mut best = table.to_vec();
    for sigma in permutations_fixing_zero(k).iter() {
        let candidate = permuted(k, table, sigma);
        if candidate < best {
            best = candidate;
        }
    }
    best
}

/// `T^s[p][q] = s(T[s^-1 p][s^-1 q])`, with `sigma` given as the map
/// `x -> s(x)`.
fn permuted(k: usize, table: &[usize], sigma: &[usize]) -> Vec<usize> {
    let mut out = vec![0; k * k];
    for a in 0..k {
        for b in 0..k {
            out[sigma[a] * k + sigma[b]] = sigma[table[a * k + b]];
        }
    }
    out
}

/// Pairs `(sigma, sigma^-1)` of permutations fixing 0, memoized per order.
fn permutation_pairs(k: usize) -> Arc<Vec<(Vec<usize>, Vec<usize>)>> {
    static CACHE: Cache<Vec<(Vec<usize>, Vec<usize>)>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut guard = cache.lock().expect("cache lock");
    let entry = guard.entry(k).or_insert_with(|| {
        let mut perms = Vec::new();
        let mut rest: Vec<usize> = (1..k).collect();
        let len = rest.len();
        heap_permutations(&mut rest, len, &mut |p| {
            let mut sigma = vec![0];
            sigma.extend_from_slice(p);
            let mut inverse = vec![0; k];
            for (x, &y) in sigma.iter().enumerate() {
                inverse[y] = x;
            }
            perms.push((sigma, inverse));
        });
        perms.sort();
        Arc::new(perms)
    });
    Arc::clone(entry)
}

fn permutations_fixing_zero(k: usize) -> Vec<Vec<usize>> {
    permutation_pairs(k)
        .iter()
        .map(|(s, _)| s.clone())
        .collect()
}

fn heap_permutations(items: &mut [usize], n: usize, visit: &mut impl FnMut(&[usize])) {
    if n <= 1 {
        visit(items);
        return;
    }
    for i in 0..n - 1 {
        heap_permutations(items, n - 1, visit);
        let j = if n.is_multiple_of(2) { i } else { 0 };
        items.swap(j, n - 1);
    }
    heap_permutations(items, n - 1, visit);
}

type Cache<T> = OnceLock<Mutex<HashMap<usize, Arc<T>>>>;

const UNSET: usize = usize::MAX;

struct Search {
    k: usize,
    table: Vec<usize>,
    /// Free positions `(i, j)` with `1 <= i <= j`, row-major.
    positions: Vec<(usize, usize)>,
    perms: Arc<Vec<(Vec<usize>, Vec<usize>)>>,
    canonical: bool,
    found: Vec<Vec<usize>>,
}

/// All associative commutative tables with neutral 0; with `canonical`, only
/// the least table of each isomorphism class.
fn search_tables(k: usize, canonical: bool) -> Vec<Vec<usize>> {
    let mut table = vec![UNSET; k * k];
    for x in 0..k {
        table[x] = x;
        table[x * k] = x;
    }
    let positions = (1..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    let mut search = Search {
        k,
        table,
        positions,
        perms: permutation_pairs(k),
        canonical,
        found: Vec::new(),
    };
    search.extend(0);
    search.found.sort();
    search.found
}

impl Search {
    fn extend(&mut self, depth: usize) {
        if depth == self.positions.len() {
            if !self.canonical || self.is_minimal(true) {
                self.found.push(self.table.clone());
            }
            return;
        }
        let (i, j) = self.positions[depth];
        let k = self.k;
        for v in 0..k {
            self.table[i * k + j] = v;
            self.table[j * k + i] = v;
            if self.associative_so_far() && (!self.canonical || self.is_minimal(false)) {
                self.extend(depth + 1);
            }
        }
        self.table[i * k + j] = UNSET;
        self.table[j * k + i] = UNSET;
    }

    fn associative_so_far(&self) -> bool {
        let k = self.k;
        let t = &self.table;
        for a in 1..k {
            for b in 1..k {
                let ab = t[a * k + b];
                if ab == UNSET {
                    continue;
                }
                for c in 1..k {
                    let bc = t[b * k + c];
                    if bc == UNSET {
                        continue;
                    }
                    let left = t[ab * k + c];
                    let right = t[a * k + bc];
                    if left != UNSET && right != UNSET && left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// False when some relabelling is already known to give a smaller table.
    /// At a leaf (`complete`) every comparison is decided.
    fn is_minimal(&self, complete: bool) -> bool {
        let k = self.k;
        let t = &self.table;
        'perm: for (sigma, inverse) in self.perms.iter() {
            for &(p, q) in &self.positions {
                let own = t[p * k + q];
                let source = t[inverse[p] * k + inverse[q]];
                if own == UNSET || source == UNSET {
                    debug_assert!(!complete);
                    continue 'perm;
                }
                let theirs = sigma[source];
                if theirs < own {
                    return false;
                }
                if theirs > own {
                    continue 'perm;
                }
            }
        }
        true
    }
}
