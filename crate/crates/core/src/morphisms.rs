//! Homomorphisms, submonoids, congruences and subdirect irreducibility.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use thiserror::Error;

use crate::monoid::{ElementId, FiniteMonoid};

/// Default bound on the number of candidate generator assignments tried by
/// [`enumerate_homomorphisms`].
pub const DEFAULT_HOM_SEARCH_CAP: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("map has {got} entries but the source has order {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("image {image} of element {element} is out of range")]
    ImageOutOfRange { element: usize, image: usize },
    #[error("neutral element is sent to {image}, not to the target neutral")]
    NeutralNotPreserved { image: usize },
    #[error("map is not multiplicative at ({a}, {b})")]
    NotMultiplicative { a: usize, b: usize },
    #[error("{0} is not a submonoid: it misses the neutral element")]
    MissingNeutral(String),
    #[error("not a submonoid: {a}*{b} = {product} escapes")]
    NotClosed { a: usize, b: usize, product: usize },
    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("partition is not compatible: {a} ~ {b} but {a}*{c} !~ {b}*{c}")]
    NotCompatible { a: usize, b: usize, c: usize },
    #[error("partition does not cover the universe exactly once")]
    BadPartition,
    #[error("homomorphism search needs {needed} candidate assignments, cap is {cap}")]
    SearchCap { needed: u128, cap: usize },
}

/// A monoid homomorphism between finite commutative monoids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    source: Arc<FiniteMonoid>,
    target: Arc<FiniteMonoid>,
    map: Vec<ElementId>,
}

impl Homomorphism {
    pub fn new(
        source: Arc<FiniteMonoid>,
        target: Arc<FiniteMonoid>,
        map: Vec<ElementId>,
    ) -> Result<Self, MorphismError> {
        if map.len() != source.order() {
            return Err(MorphismError::LengthMismatch {
                expected: source.order(),
                got: map.len(),
            });
        }
        if let Some((element, image)) = map
            .iter()
            .enumerate()
            .find(|(_, img)| img.0 >= target.order())
        {
            return Err(MorphismError::ImageOutOfRange {
                element,
                image: image.0,
            });
        }
        let hom = Homomorphism {
            source,
            target,
            map,
        };
        hom.check()?;
        Ok(hom)
    }

    pub(crate) fn new_unchecked(
        source: Arc<FiniteMonoid>,
        target: Arc<FiniteMonoid>,
        map: Vec<ElementId>,
    ) -> Self {
        let hom = Homomorphism {
            source,
            target,
            map,
        };
        debug_assert_eq!(hom.check(), Ok(()));
        hom
    }

    fn check(&self) -> Result<(), MorphismError> {
        let image = self.map[self.source.neutral().0];
        if image != self.target.neutral() {
            return Err(MorphismError::NeutralNotPreserved { image: image.0 });
        }
        for a in self.source.elements() {
            for b in self.source.elements().skip(a.0) {
                let lhs = self.map[self.source.mul(a, b).0];
                let rhs = self.target.mul(self.map[a.0], self.map[b.0]);
                if lhs != rhs {
                    return Err(MorphismError::NotMultiplicative { a: a.0, b: b.0 });
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Arc<FiniteMonoid> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteMonoid> {
        &self.target
    }

    pub fn map(&self) -> &[ElementId] {
        &self.map
    }

    pub fn apply(&self, a: ElementId) -> ElementId {
        self.map[a.0]
    }

    pub fn image(&self) -> BTreeSet<ElementId> {
        self.map.iter().copied().collect()
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.map.len()
    }

    pub fn kernel(&self) -> Congruence {
        let mut first = vec![usize::MAX; self.target.order()];
        let reps = self
            .map
            .iter()
            .enumerate()
            .map(|(a, img)| {
                if first[img.0] == usize::MAX {
                    first[img.0] = a;
                }
                first[img.0]
            })
            .collect();
        Congruence { reps }
    }

    /// `hom <name> <src> -> <dst> map: i0 i1 ...`
    pub fn render(&self, name: &str) -> String {
        let mut out = format!(
            "hom {name} {} -> {} map:",
            self.source.name(),
            self.target.name()
        );
        for img in &self.map {
            let _ = write!(out, " {img}");
        }
        out
    }

    /// Reads back a line produced by [`Self::render`].
    pub fn parse(
        line: &str,
        source: Arc<FiniteMonoid>,
        target: Arc<FiniteMonoid>,
    ) -> Result<(String, Homomorphism), String> {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[..] {
            ["hom", name, _, "->", _, "map:", ..] => {
                let map = tokens[6..]
                    .iter()
                    .map(|t| {
                        t.parse()
                            .map(ElementId)
                            .map_err(|_| format!("bad index {t:?}"))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let hom = Homomorphism::new(source, target, map).map_err(|e| e.to_string())?;
                Ok((name.to_string(), hom))
            }
            _ => Err("expected `hom <name> <src> -> <dst> map: ...`".to_string()),
        }
    }
}

/// An equivalence on `0..order` stored as least-representative block map.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Congruence {
    reps: Vec<usize>,
}

impl Congruence {
    pub fn identity(order: usize) -> Self {
        Congruence {
            reps: (0..order).collect(),
        }
    }

    pub fn total(order: usize) -> Self {
        Congruence {
            reps: vec![0; order],
        }
    }

    /// Accepts any partition of the universe and checks compatibility.
    pub fn from_blocks(
        monoid: &FiniteMonoid,
        blocks: &[Vec<ElementId>],
    ) -> Result<Self, MorphismError> {
        let mut reps = vec![usize::MAX; monoid.order()];
        for block in blocks {
            let Some(least) = block.iter().map(|e| e.0).min() else {
                return Err(MorphismError::BadPartition);
            };
            for e in block {
                if e.0 >= monoid.order() || reps[e.0] != usize::MAX {
                    return Err(MorphismError::BadPartition);
                }
                reps[e.0] = least;
            }
        }
        if reps.contains(&usize::MAX) {
            return Err(MorphismError::BadPartition);
        }
        let cong = Congruence { reps };
        cong.check_compatible(monoid)?;
        Ok(cong)
    }

    fn from_union_find(uf: &mut UnionFind) -> Self {
        let n = uf.len();
        let mut least = vec![usize::MAX; n];
        for x in 0..n {
            let root = uf.find(x);
            if least[root] == usize::MAX {
                least[root] = x;
            }
        }
        Congruence {
            reps: (0..n).map(|x| least[uf.find(x)]).collect(),
        }
    }

    pub fn check_compatible(&self, monoid: &FiniteMonoid) -> Result<(), MorphismError> {
        for a in 0..self.reps.len() {
            let b = self.reps[a];
            if a == b {
                continue;
            }
            for c in 0..self.reps.len() {
                if self.reps[monoid.op(a, c)] != self.reps[monoid.op(b, c)] {
                    return Err(MorphismError::NotCompatible { a: b, b: a, c });
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.reps.len()
    }

    pub fn representative(&self, a: ElementId) -> ElementId {
        ElementId(self.reps[a.0])
    }

    pub fn related(&self, a: ElementId, b: ElementId) -> bool {
        self.reps[a.0] == self.reps[b.0]
    }

    pub fn is_identity(&self) -> bool {
        self.reps.iter().enumerate().all(|(i, &r)| i == r)
    }

    pub fn block_count(&self) -> usize {
        self.reps
            .iter()
            .enumerate()
            .filter(|(i, &r)| *i == r)
            .count()
    }

    /// Blocks ordered by least element, each sorted ascending.
    pub fn blocks(&self) -> Vec<Vec<ElementId>> {
        let mut slot = vec![usize::MAX; self.reps.len()];
        let mut blocks: Vec<Vec<ElementId>> = Vec::new();
        for (x, &r) in self.reps.iter().enumerate() {
            if slot[r] == usize::MAX {
                slot[r] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[slot[r]].push(ElementId(x));
        }
        blocks
    }

    /// Common refinement.
    pub fn meet(&self, other: &Congruence) -> Congruence {
        assert_eq!(self.order(), other.order());
        let n = self.reps.len();
        let mut seen = std::collections::HashMap::new();
        let reps = (0..n)
            .map(|x| *seen.entry((self.reps[x], other.reps[x])).or_insert(x))
            .collect();
        Congruence { reps }
    }

    /// `self` is contained in `other` as a set of pairs.
    pub fn refines(&self, other: &Congruence) -> bool {
        (0..self.reps.len()).all(|x| other.reps[x] == other.reps[self.reps[x]])
    }

    /// `cong <name> blocks: {i,j,...} {k,...} ...`
    pub fn render(&self, name: &str) -> String {
        let mut out = format!("cong {name} blocks:");
        for block in self.blocks() {
            let items: Vec<String> = block.iter().map(|e| e.to_string()).collect();
            let _ = write!(out, " {{{}}}", items.join(","));
        }
        out
    }
}

#[derive(Debug, Clone)]
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn len(&self) -> usize {
        self.parent.len()
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Least congruence containing `pairs`.
///
/// Every time two classes merge through a pair `(x, y)`, the translates
/// `(x*c, y*c)` are queued; chaining these over the merge edges gives
/// compatibility for every related pair.
pub fn generated_congruence(
    monoid: &FiniteMonoid,
    pairs: impl IntoIterator<Item = (ElementId, ElementId)>,
) -> Congruence {
    let n = monoid.order();
    let mut uf = UnionFind::new(n);
    let mut pending: Vec<(usize, usize)> = pairs.into_iter().map(|(a, b)| (a.0, b.0)).collect();
    while let Some((x, y)) = pending.pop() {
        if uf.union(x, y) {
            for c in 0..n {
                pending.push((monoid.op(x, c), monoid.op(y, c)));
            }
        }
    }
    Congruence::from_union_find(&mut uf)
}

/// The distinct principal congruences `Cg(a, b)` for `a != b`.
pub fn all_principal_congruences(monoid: &FiniteMonoid) -> BTreeSet<Congruence> {
    let mut out = BTreeSet::new();
    for a in monoid.elements() {
        for b in monoid.elements().skip(a.0 + 1) {
            out.insert(generated_congruence(monoid, [(a, b)]));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdirectAnalysis {
    pub irreducible: bool,
    /// Least nonidentity congruence, present exactly when irreducible.
    pub monolith: Option<Congruence>,
}

/// A finite monoid is subdirectly irreducible when the meet of its principal
/// congruences is not the identity. The trivial monoid is not.
pub fn subdirect_analysis(monoid: &FiniteMonoid) -> SubdirectAnalysis {
    let principal = all_principal_congruences(monoid);
    let meet = principal.iter().cloned().reduce(|acc, c| acc.meet(&c));
    match meet {
        Some(m) if !m.is_identity() => SubdirectAnalysis {
            irreducible: true,
            monolith: Some(m),
        },
        _ => SubdirectAnalysis {
            irreducible: false,
            monolith: None,
        },
    }
}

pub fn is_subdirectly_irreducible(monoid: &FiniteMonoid) -> bool {
    subdirect_analysis(monoid).irreducible
}

/// Pairs `a < b` lying in every nonidentity congruence.
pub fn pairs_in_every_congruence(monoid: &FiniteMonoid) -> Vec<(ElementId, ElementId)> {
    let principal = all_principal_congruences(monoid);
    let mut out = Vec::new();
    for a in monoid.elements() {
        for b in monoid.elements().skip(a.0 + 1) {
            if !principal.is_empty() && principal.iter().all(|c| c.related(a, b)) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Block monoid and canonical projection. Blocks are numbered in order of
/// their least element.
pub fn quotient(monoid: &FiniteMonoid, cong: &Congruence) -> (FiniteMonoid, Homomorphism) {
    let n = monoid.order();
    let mut block_of_rep = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        let r = cong.reps[x];
        if block_of_rep[r] == usize::MAX {
            block_of_rep[r] = reps.len();
            reps.push(r);
        }
    }
    let k = reps.len();
    let block = |x: usize| block_of_rep[cong.reps[x]];
    let table = (0..k * k)
        .map(|p| block(monoid.op(reps[p / k], reps[p % k])))
        .collect();
    let quotient = FiniteMonoid::from_table_unchecked(
        format!("{}_quot", monoid.name()),
        k,
        block(monoid.neutral().0),
        table,
    );
    let map = (0..n).map(|x| ElementId(block(x))).collect();
    let projection =
        Homomorphism::new_unchecked(Arc::new(monoid.clone()), Arc::new(quotient.clone()), map);
    (quotient, projection)
}

/// A submonoid given by its universe inside an ambient monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubmonoidEmbedding {
    ambient: Arc<FiniteMonoid>,
    universe: BTreeSet<ElementId>,
}

impl SubmonoidEmbedding {
    pub fn new(
        ambient: Arc<FiniteMonoid>,
        universe: BTreeSet<ElementId>,
    ) -> Result<Self, MorphismError> {
        if let Some(bad) = universe.iter().find(|e| e.0 >= ambient.order()) {
            return Err(MorphismError::ElementOutOfRange(bad.0));
        }
        if !universe.contains(&ambient.neutral()) {
            let items: Vec<String> = universe.iter().map(|e| e.to_string()).collect();
            return Err(MorphismError::MissingNeutral(format!(
                "{{{}}}",
                items.join(", ")
            )));
        }
        for &a in &universe {
            for &b in universe.range(a..) {
                let product = ambient.mul(a, b);
                if !universe.contains(&product) {
                    return Err(MorphismError::NotClosed {
                        a: a.0,
                        b: b.0,
                        product: product.0,
                    });
                }
            }
        }
        Ok(SubmonoidEmbedding { ambient, universe })
    }

    pub fn generated(
        ambient: Arc<FiniteMonoid>,
        generators: impl IntoIterator<Item = ElementId>,
    ) -> Result<Self, MorphismError> {
        let generators: Vec<ElementId> = generators.into_iter().collect();
        if let Some(bad) = generators.iter().find(|e| e.0 >= ambient.order()) {
            return Err(MorphismError::ElementOutOfRange(bad.0));
        }
        let universe = ambient.subuniverse_generate(generators);
        Ok(SubmonoidEmbedding { ambient, universe })
    }

    pub fn whole(ambient: Arc<FiniteMonoid>) -> Self {
        let universe = ambient.elements().collect();
        SubmonoidEmbedding { ambient, universe }
    }

    pub fn ambient(&self) -> &Arc<FiniteMonoid> {
        &self.ambient
    }

    pub fn universe(&self) -> &BTreeSet<ElementId> {
        &self.universe
    }

    pub fn contains(&self, a: ElementId) -> bool {
        self.universe.contains(&a)
    }

    pub fn len(&self) -> usize {
        self.universe.len()
    }

    pub fn is_empty(&self) -> bool {
        self.universe.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.universe.len() == self.ambient.order()
    }

    /// Inverse monoid condition evaluated inside the submonoid.
    pub fn is_inverse(&self) -> bool {
        self.universe.iter().all(|&a| {
            let square = self.ambient.mul(a, a);
            self.universe
                .iter()
                .any(|&b| self.ambient.mul(square, b) == a)
        })
    }

    /// The submonoid as a monoid in its own right, with the list of ambient
    /// elements in new-index order.
    pub fn to_monoid(&self) -> (FiniteMonoid, Vec<ElementId>) {
        let members: Vec<ElementId> = self.universe.iter().copied().collect();
        let k = members.len();
        let index_of = |a: ElementId| members.binary_search(&a).expect("closed");
        let table = (0..k * k)
            .map(|p| index_of(self.ambient.mul(members[p / k], members[p % k])))
            .collect();
        let mut sub = FiniteMonoid::from_table_unchecked(
            format!("{}_sub", self.ambient.name()),
            k,
            index_of(self.ambient.neutral()),
            table,
        );
        if self.ambient.labels().is_some() {
            sub = sub
                .with_labels(members.iter().map(|&a| self.ambient.label(a)).collect())
                .expect("ambient labels are valid");
        }
        (sub, members)
    }

    /// `{i, j, ...}`
    pub fn render(&self) -> String {
        render_set(&self.universe)
    }
}

pub(crate) fn render_set(set: &BTreeSet<ElementId>) -> String {
    let items: Vec<String> = set.iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

/// Every submonoid of `monoid`, in order of the bitmask of their non-neutral
/// members. Exponential; intended for small orders.
pub fn all_submonoids(monoid: &Arc<FiniteMonoid>) -> Vec<SubmonoidEmbedding> {
    let others: Vec<ElementId> = monoid
        .elements()
        .filter(|&e| e != monoid.neutral())
        .collect();
    assert!(others.len() < 24, "too many subsets to enumerate");
    let mut out = Vec::new();
    for mask in 0u32..(1 << others.len()) {
        let mut universe: BTreeSet<ElementId> = others
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        universe.insert(monoid.neutral());
        let closed = universe.iter().all(|&a| {
            universe
                .iter()
                .all(|&b| universe.contains(&monoid.mul(a, b)))
        });
        if closed {
            out.push(SubmonoidEmbedding {
                ambient: Arc::clone(monoid),
                universe,
            });
        }
    }
    out
}

/// A small generating set, chosen greedily in index order.
pub fn generating_set(monoid: &FiniteMonoid) -> Vec<ElementId> {
    let mut gens = Vec::new();
    let mut reached = monoid.subuniverse_generate([]);
    for a in monoid.elements() {
        if !reached.contains(&a) {
            gens.push(a);
            reached = monoid.subuniverse_generate(gens.iter().copied());
        }
    }
    gens
}

/// All homomorphisms `source -> target`, found by backtracking over the images
/// of a generating set of `source`. `cap` bounds the number of candidate
/// generator assignments, `|target|^|generators|`.
pub fn enumerate_homomorphisms(
    source: &FiniteMonoid,
    target: &FiniteMonoid,
    cap: usize,
) -> Result<Vec<Homomorphism>, MorphismError> {
    let mut out = Vec::new();
    search_homomorphisms(source, target, cap, false, |h| {
        out.push(h);
        true
    })?;
    Ok(out)
}

/// Some isomorphism `left -> right`, if the two are isomorphic.
pub fn find_isomorphism(left: &FiniteMonoid, right: &FiniteMonoid) -> Option<Homomorphism> {
    if left.order() != right.order() {
        return None;
    }
    let mut found = None;
    search_homomorphisms(left, right, usize::MAX, true, |h| {
        found = Some(h);
        false
    })
    .expect("uncapped search");
    found
}

pub fn is_isomorphic(left: &FiniteMonoid, right: &FiniteMonoid) -> bool {
    find_isomorphism(left, right).is_some()
}

fn search_homomorphisms(
    source: &FiniteMonoid,
    target: &FiniteMonoid,
    cap: usize,
    injective_only: bool,
    mut visit: impl FnMut(Homomorphism) -> bool,
) -> Result<(), MorphismError> {
    let gens = generating_set(source);
    let needed = (target.order() as u128)
        .checked_pow(gens.len() as u32)
        .unwrap_or(u128::MAX);
    if needed > cap as u128 {
        return Err(MorphismError::SearchCap { needed, cap });
    }
    let src = Arc::new(source.clone());
    let dst = Arc::new(target.clone());
    let mut partial = vec![usize::MAX; source.order()];
    partial[source.neutral().0] = target.neutral().0;
    let mut assigned: Vec<usize> = Vec::with_capacity(gens.len());
    backtrack(
        source,
        target,
        &gens,
        &mut assigned,
        &mut partial,
        injective_only,
        &mut |map: &[usize]| {
            let map = map.iter().map(|&i| ElementId(i)).collect();
            // Full check: the closure only certifies products with generators.
            match Homomorphism::new(Arc::clone(&src), Arc::clone(&dst), map) {
                Ok(h) if !injective_only || h.is_injective() => visit(h),
                _ => true,
            }
        },
    );
    Ok(())
}

/// Returns false when the visitor asked to stop.
fn backtrack(
    source: &FiniteMonoid,
    target: &FiniteMonoid,
    gens: &[ElementId],
    assigned: &mut Vec<usize>,
    partial: &mut [usize],
    injective_only: bool,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if assigned.len() == gens.len() {
        return visit(partial);
    }
    let g = gens[assigned.len()].0;
    for image in 0..target.order() {
        let mut next = partial.to_vec();
        if next[g] != usize::MAX && next[g] != image {
            continue;
        }
        next[g] = image;
        assigned.push(image);
        let consistent = close_partial_map(source, target, &gens[..assigned.len()], &mut next)
            && (!injective_only || is_injective_partial(&next, target.order()));
        if consistent
            && !backtrack(
                source,
                target,
                gens,
                assigned,
                &mut next,
                injective_only,
                visit,
            )
        {
            return false;
        }
        assigned.pop();
    }
    true
}

fn is_injective_partial(partial: &[usize], target_order: usize) -> bool {
    let mut seen = vec![false; target_order];
    for &img in partial.iter().filter(|&&i| i != usize::MAX) {
        if seen[img] {
            return false;
        }
        seen[img] = true;
    }
    true
}

/// Extends the map across the submonoid generated by the assigned generators,
/// failing on the first conflicting image.
fn close_partial_map(
    source: &FiniteMonoid,
    target: &FiniteMonoid,
    gens: &[ElementId],
    map: &mut [usize],
) -> bool {
    let mut queue: Vec<usize> = (0..map.len()).filter(|&x| map[x] != usize::MAX).collect();
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = source.op(x, g.0);
            let img = target.op(map[x], map[g.0]);
            if map[y] == usize::MAX {
                map[y] = img;
                queue.push(y);
            } else if map[y] != img {
                return false;
            }
        }
    }
    true
}
