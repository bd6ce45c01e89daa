//! Amalgamated pushouts `B *_A B` and dominions.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::monoid::{ElementId, FiniteMonoid};
use crate::morphisms::{
    enumerate_homomorphisms, generated_congruence, quotient, render_set, Homomorphism,
    SubmonoidEmbedding, DEFAULT_HOM_SEARCH_CAP,
};
use crate::zigzag::{default_cap, search_witness, ZigzagWitness};

/// `B x B` with its two injections `b -> (b, 1)` and `b -> (1, b)`.
#[derive(Debug, Clone)]
pub struct CoproductPair {
    pub monoid: Arc<FiniteMonoid>,
    pub left: Homomorphism,
    pub right: Homomorphism,
}

/// The binary coproduct of `b` with itself.
pub fn coproduct_pair(b: &Arc<FiniteMonoid>) -> CoproductPair {
    let k = b.order();
    let e = b.neutral().0;
    let monoid = Arc::new(b.direct_product(b));
    let left = (0..k).map(|x| ElementId(x * k + e)).collect();
    let right = (0..k).map(|x| ElementId(e * k + x)).collect();
    CoproductPair {
        left: Homomorphism::new_unchecked(Arc::clone(b), Arc::clone(&monoid), left),
        right: Homomorphism::new_unchecked(Arc::clone(b), Arc::clone(&monoid), right),
        monoid,
    }
}

#[derive(Debug, Clone)]
pub struct PushoutResult {
    pub monoid: Arc<FiniteMonoid>,
    pub p1: Homomorphism,
    pub p2: Homomorphism,
    /// `B x B -> B *_A B`.
    pub projection: Homomorphism,
}

impl PushoutResult {
    /// The induced map `B *_A B -> C` for `g, h : B -> C`, or `None` when `g`
    /// and `h` do not agree on the amalgamated part.
    pub fn factor_through(&self, g: &Homomorphism, h: &Homomorphism) -> Option<Homomorphism> {
        let b = self.p1.source();
        let k = b.order();
        let target = g.target();
        if !Arc::ptr_eq(target, h.target()) && **target != **h.target() {
            return None;
        }
        let mut map = vec![None; self.monoid.order()];
        for x in 0..k {
            for y in 0..k {
                let class = self.projection.apply(ElementId(x * k + y)).0;
                let value = target.mul(g.apply(ElementId(x)), h.apply(ElementId(y)));
                match map[class] {
                    None => map[class] = Some(value),
                    Some(prev) if prev != value => return None,
                    Some(_) => {}
                }
            }
        }
        let map = map
            .into_iter()
            .map(|v| v.expect("projection is onto"))
            .collect();
        Homomorphism::new(Arc::clone(&self.monoid), Arc::clone(target), map).ok()
    }
}

/// Quotient of `B x B` by the congruence generated by `(a, 1) ~ (1, a)` for
/// `a` in `A`.
pub fn pushout_over(sub: &SubmonoidEmbedding) -> PushoutResult {
    let b = sub.ambient();
    let pair = coproduct_pair(b);
    let seeds = sub
        .universe()
        .iter()
        .map(|&a| (pair.left.apply(a), pair.right.apply(a)));
    let cong = generated_congruence(&pair.monoid, seeds);
    let (monoid, projection) = quotient(&pair.monoid, &cong);
    let monoid = Arc::new(monoid.with_name(format!("{}_pushout", b.name())));
    let projection = Homomorphism::new_unchecked(
        Arc::clone(&pair.monoid),
        Arc::clone(&monoid),
        projection.map().to_vec(),
    );
    let compose = |inj: &Homomorphism| {
        let map = b
            .elements()
            .map(|x| projection.apply(inj.apply(x)))
            .collect();
        Homomorphism::new_unchecked(Arc::clone(b), Arc::clone(&monoid), map)
    };
    PushoutResult {
        p1: compose(&pair.left),
        p2: compose(&pair.right),
        monoid,
        projection,
    }
}

pub fn dominion_pushout(sub: &SubmonoidEmbedding) -> BTreeSet<ElementId> {
    let po = pushout_over(sub);
    sub.ambient()
        .elements()
        .filter(|&x| po.p1.apply(x) == po.p2.apply(x))
        .collect()
}

pub fn dominion_zigzag(sub: &SubmonoidEmbedding, cap: usize) -> BTreeSet<ElementId> {
    sub.ambient()
        .elements()
        .filter(|&x| search_witness(sub, x, cap).is_some())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DominionMethod {
    Pushout,
    Zigzag,
    #[default]
    Both,
}

impl fmt::Display for DominionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DominionMethod::Pushout => "pushout",
            DominionMethod::Zigzag => "zigzag",
            DominionMethod::Both => "both",
        })
    }
}

impl FromStr for DominionMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pushout" => Ok(DominionMethod::Pushout),
            "zigzag" => Ok(DominionMethod::Zigzag),
            "both" => Ok(DominionMethod::Both),
            other => Err(format!(
                "unknown method {other:?}: expected both, pushout or zigzag"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DominionError {
    /// The two methods disagree on `element`: either a bug or a zigzag cap
    /// that is too small.
    #[error(
        "dominion methods disagree on element {element} (pushout: {in_pushout}, zigzag within cap {cap}: {})",
        !in_pushout
    )]
    Discrepancy {
        element: ElementId,
        cap: usize,
        in_pushout: bool,
    },
}

#[derive(Debug, Clone)]
pub struct DominionReport {
    pub sub: SubmonoidEmbedding,
    pub dominion: BTreeSet<ElementId>,
    pub method: DominionMethod,
    /// Shortest witnesses for each dominion member, when the zigzag search ran.
    pub witnesses: Vec<ZigzagWitness>,
}

impl DominionReport {
    /// Whether the dominion is strictly larger than the submonoid.
    pub fn escapes(&self) -> bool {
        self.dominion.len() > self.sub.len()
    }

    /// `dominion <B> over {a, b}: {i, j} method: both`
    pub fn render(&self) -> String {
        format!(
            "dominion {} over {}: {} method: {}",
            self.sub.ambient().name(),
            self.sub.render(),
            render_set(&self.dominion),
            self.method
        )
    }
}

/// Dominion with the pushout and the zigzag search at the default cap.
pub fn dominion(sub: &SubmonoidEmbedding) -> Result<DominionReport, DominionError> {
    dominion_with(sub, DominionMethod::Both, default_cap(sub.ambient()))
}

pub fn dominion_with(
    sub: &SubmonoidEmbedding,
    method: DominionMethod,
    cap: usize,
) -> Result<DominionReport, DominionError> {
    let report = |dominion, witnesses| DominionReport {
        sub: sub.clone(),
        dominion,
        method,
        witnesses,
    };
    if method == DominionMethod::Pushout {
        return Ok(report(dominion_pushout(sub), Vec::new()));
    }
    let witnesses: Vec<ZigzagWitness> = sub
        .ambient()
        .elements()
        .filter_map(|x| search_witness(sub, x, cap))
        .collect();
    let by_zigzag: BTreeSet<ElementId> = witnesses.iter().map(|w| w.value()).collect();
    if method == DominionMethod::Both {
        let by_pushout = dominion_pushout(sub);
        if let Some(&element) = by_pushout.symmetric_difference(&by_zigzag).next() {
            return Err(DominionError::Discrepancy {
                element,
                cap,
                in_pushout: by_pushout.contains(&element),
            });
        }
    }
    Ok(report(by_zigzag, witnesses))
}

/// Elements of the ambient monoid told apart by some pair of homomorphisms
/// into one of `targets` that agree on `sub`. Each such element lies outside
/// the dominion; the converse needs arbitrary targets.
pub fn separated_elements(
    sub: &SubmonoidEmbedding,
    targets: &[FiniteMonoid],
) -> BTreeSet<ElementId> {
    let b = sub.ambient();
    let mut out = BTreeSet::new();
    for target in targets {
        let Ok(homs) = enumerate_homomorphisms(b, target, DEFAULT_HOM_SEARCH_CAP) else {
            continue;
        };
        for (i, g) in homs.iter().enumerate() {
            for h in &homs[i + 1..] {
                if sub.universe().iter().all(|&a| g.apply(a) == h.apply(a)) {
                    out.extend(b.elements().filter(|&x| g.apply(x) != h.apply(x)));
                }
            }
        }
    }
    out
}
