//! Exhaustive checks of structural laws over enumerated monoids.
//!
//! Each check returns a [`LawReport`]; a report passes when it lists no
//! counterexamples. Reports are deterministic for a given configuration.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::enumeration::{
    count_canonical, count_naive, enumerate_monoids, EnumerationConfig, EnumerationError,
};
use crate::monoid::{ElementClass, ElementId, FiniteMonoid};
use crate::morphisms::{all_submonoids, SubmonoidEmbedding};
use crate::pushout::{dominion_pushout, dominion_with, DominionMethod};
use crate::varieties::{satisfies, VarietySignature};
use crate::zigzag::{default_cap, isbell_value, search_witness, ZigzagWitness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LawError {
    #[error("unknown law {0:?}")]
    UnknownLaw(String),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("law {law} needs a proper variety (m >= 1), got {sig}")]
    NeedsProperVariety {
        law: &'static str,
        sig: VarietySignature,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub law: String,
    pub instances: usize,
    pub counterexamples: Vec<String>,
    pub elapsed: Duration,
    /// Named tallies specific to the law, such as how often a precondition
    /// applied.
    pub counters: BTreeMap<String, usize>,
}

impl LawReport {
    fn new(law: &str) -> Self {
        LawReport {
            law: law.to_string(),
            instances: 0,
            counterexamples: Vec::new(),
            elapsed: Duration::ZERO,
            counters: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn counter(&self, key: &str) -> usize {
        self.counters.get(key).copied().unwrap_or(0)
    }

    fn bump(&mut self, key: &str, by: usize) {
        *self.counters.entry(key.to_string()).or_default() += by;
    }

    fn absorb(&mut self, part: Partial) {
        self.instances += part.instances;
        self.counterexamples.extend(part.counterexamples);
        for (k, v) in part.counters {
            self.bump(&k, v);
        }
    }

    fn finish(mut self, started: Instant) -> Self {
        self.elapsed = started.elapsed();
        self
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} instances, {} counterexamples, {:.3}s",
            if self.passed() { "PASS" } else { "FAIL" },
            self.law,
            self.instances,
            self.counterexamples.len(),
            self.elapsed.as_secs_f64()
        )
    }
}

/// Per-task results, merged into a report in task order.
#[derive(Default)]
struct Partial {
    instances: usize,
    counterexamples: Vec<String>,
    counters: BTreeMap<String, usize>,
}

impl Partial {
    fn fail(&mut self, message: String) {
        self.counterexamples.push(message);
    }

    fn bump(&mut self, key: &str) {
        *self.counters.entry(key.to_string()).or_default() += 1;
    }
}

fn run_parallel<T: Sync>(
    report: &mut LawReport,
    items: &[T],
    check: impl Fn(&T) -> Partial + Sync + Send,
) {
    let parts: Vec<Partial> = items.par_iter().map(check).collect();
    for part in parts {
        report.absorb(part);
    }
}

/// Zigzag cap used when comparing dominion methods.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CapPolicy {
    /// The square of the ambient order.
    #[default]
    OrderSquared,
    Fixed(usize),
}

impl CapPolicy {
    pub fn cap_for(self, ambient: &FiniteMonoid) -> usize {
        match self {
            CapPolicy::OrderSquared => default_cap(ambient),
            CapPolicy::Fixed(cap) => cap,
        }
    }
}

/// The nine-element monoid with the submonoid generated by `<1,1,0>`,
/// `<0,1,0>` and `<0,1,1>`.
pub fn pinned_pair() -> SubmonoidEmbedding {
    let b = Arc::new(FiniteMonoid::nine_element());
    SubmonoidEmbedding::generated(b, [ElementId(6), ElementId(2), ElementId(3)])
        .expect("generated submonoid")
}

/// Signatures used when a law needs a variety and none is configured.
pub const DEFAULT_SIGNATURES: [VarietySignature; 5] = [
    VarietySignature::new(1, 1),
    VarietySignature::new(1, 2),
    VarietySignature::new(2, 1),
    VarietySignature::new(2, 2),
    VarietySignature::new(3, 1),
];

/// Enumerated monoids passing `cfg`, plus the nine-element monoid when it
/// passes the filters.
fn monoids_with_pinned(cfg: &EnumerationConfig) -> Result<Vec<Arc<FiniteMonoid>>, LawError> {
    let mut out = enumerate_monoids(cfg)?;
    let nine = FiniteMonoid::nine_element();
    if cfg.accepts(&nine) {
        out.push(Arc::new(nine));
    }
    Ok(out)
}

fn signatures_for(cfg: &EnumerationConfig) -> Vec<VarietySignature> {
    match cfg.variety_filter {
        Some(sig) => vec![sig],
        None => DEFAULT_SIGNATURES.to_vec(),
    }
}

fn describe(m: &FiniteMonoid, a: ElementId) -> String {
    format!("{} element {}", m.name(), m.label(a))
}

/// SI members of `V(m,n)`: each element is n-nilpotent, or invertible with
/// inverse `a^(m-1)`.
pub fn check_si_dichotomy(cfg: &EnumerationConfig) -> Result<LawReport, LawError> {
    let started = Instant::now();
    let mut report = LawReport::new("si-dichotomy");
    for sig in signatures_for(cfg) {
        if !sig.is_proper() {
            return Err(LawError::NeedsProperVariety {
                law: "si-dichotomy",
                sig,
            });
        }
        let sub_cfg = cfg.clone().with_variety(sig).si_only();
        let monoids = monoids_with_pinned(&sub_cfg)?;
        run_parallel(&mut report, &monoids, |m| {
            let mut part = Partial::default();
            for a in m.elements() {
                part.instances += 1;
                match m.classify_element(a) {
                    ElementClass::Nilpotent { degree } if degree <= sig.n => {}
                    ElementClass::Invertible { inverse } if inverse == m.pow(a, sig.m - 1) => {}
                    other => part.fail(format!("{} in {sig}: {other}", describe(m, a))),
                }
            }
            part
        });
    }
    Ok(report.finish(started))
}

/// Finite SI monoids: every element is nilpotent or invertible.
pub fn check_grillet(cfg: &EnumerationConfig) -> Result<LawReport, LawError> {
    let started = Instant::now();
    let mut report = LawReport::new("grillet");
    let monoids = monoids_with_pinned(&cfg.clone().si_only())?;
    run_parallel(&mut report, &monoids, |m| {
        let mut part = Partial::default();
        for a in m.elements() {
            part.instances += 1;
            if m.classify_element(a) == ElementClass::Neither {
                part.fail(format!(
                    "{} is neither nilpotent nor invertible",
                    describe(m, a)
                ));
            }
        }
        part
    });
    Ok(report.finish(started))
}

/// Finite SI monoids: every idempotent is the neutral element or the zero.
pub fn check_idempotent_dichotomy(cfg: &EnumerationConfig) -> Result<LawReport, LawError> {
    let started = Instant::now();
    let mut report = LawReport::new("idempotent-dichotomy");
    let monoids = monoids_with_pinned(&cfg.clone().si_only())?;
    run_parallel(&mut report, &monoids, |m| {
        let mut part = Partial::default();
        for a in m.elements().filter(|&a| m.mul(a, a) == a) {
            part.instances += 1;
            if a != m.neutral() && !m.is_zero(a) {
                part.fail(format!(
                    "{} is an idempotent other than 1 and 0",
                    describe(m, a)
                ));
            }
        }
        part
    });
    Ok(report.finish(started))
}

/// Every submonoid of every enumerated monoid, plus the pinned pair.
fn submonoid_pairs(cfg: &EnumerationConfig) -> Result<Vec<SubmonoidEmbedding>, LawError> {
    let mut pairs: Vec<SubmonoidEmbedding> = enumerate_monoids(cfg)?
        .iter()
        .flat_map(all_submonoids)
        .collect();
    let pinned = pinned_pair();
    if cfg.accepts(pinned.ambient()) {
        pairs.push(pinned);
    }
    Ok(pairs)
}

fn describe_pair(sub: &SubmonoidEmbedding) -> String {
    format!("{} over {}", sub.ambient().name(), sub.render())
}

/// Zigzag and pushout dominions agree on every pair.
pub fn check_dominion_equivalence(
    cfg: &EnumerationConfig,
    policy: CapPolicy,
) -> Result<LawReport, LawError> {
    let started = Instant::now();
    let mut report = LawReport::new("dominion-equivalence");
    let pairs = submonoid_pairs(cfg)?;
    run_parallel(&mut report, &pairs, |sub| {
        let mut part = Partial::default();
        part.instances += 1;
        let cap = policy.cap_for(sub.ambient());
        match dominion_with(sub, DominionMethod::Both, cap) {
            Ok(r) if r.escapes() => part.bump("escaping pairs"),
            Ok(_) => {}
            Err(e) => part.fail(format!("{}: {e}", describe_pair(sub))),
        }
        part
    });
    Ok(report.finish(started))
}

/// Inverse submonoids are their own dominions.
pub fn check_inverse_closure(cfg: &EnumerationConfig) -> Result<LawReport, LawError> {
    let started = Instant::now();
    let mut report = LawReport::new("inverse-closure");
    let pairs: Vec<SubmonoidEmbedding> = submonoid_pairs(cfg)?
        .into_iter()
        .filter(SubmonoidEmbedding::is_inverse)
        .collect();
    run_parallel(&mut report, &pairs, |sub| {
        let mut part = Partial::default();
        part.instances += 1;
        let dom = dominion_pushout(sub);
        if dom != *sub.universe() {
            part.fail(format!(
                "{}: inverse submonoid has dominion {dom:?}",
                describe_pair(sub)
            ));
        }
        part
    });
    Ok(report.finish(started))
}

/// A proper submonoid of a finite monoid never has the whole monoid as
/// dominion.
pub fn check_weak_es(cfg: &EnumerationConfig) -> Result<LawReport, LawError> {
    let started = Instant::now();
    let mut report = LawReport::new("weak-es");
    let pairs: Vec<SubmonoidEmbedding> = submonoid_pairs(cfg)?
        .into_iter()
        .filter(|s| !s.is_whole())
        .collect();
    run_parallel(&mut report, &pairs, |sub| {
        let mut part = Partial::default();
        part.instances += 1;
        if dominion_pushout(sub).len() == sub.ambient().order() {
            part.fail(format!("{}: dominion is everything", describe_pair(sub)));
        }
        part
    });
    Ok(report.finish(started))
}

/// In an inverse variety every dominion is trivial; in any other variety the
/// pinned pair escapes.
pub fn check_main_theorem(
    cfg: &EnumerationConfig,
    sig: VarietySignature,
) -> Result<LawReport, LawError> {
    let started = Instant::now();
    let mut report = LawReport::new("main-theorem");
    let sub_cfg = cfg.clone().with_variety(sig);
    let pairs = submonoid_pairs(&sub_cfg)?;
    let inverse = sig.is_inverse();
    run_parallel(&mut report, &pairs, |sub| {
        let mut part = Partial::default();
        part.instances += 1;
        let dom = dominion_pushout(sub);
        if dom != *sub.universe() {
            part.bump("escaping pairs");
            if inverse {
                part.fail(format!(
                    "{}: escapes in inverse variety {sig}",
                    describe_pair(sub)
                ));
            }
        }
        part
    });
    if !inverse {
        let pinned = pinned_pair();
        report.instances += 1;
        if !satisfies(pinned.ambient(), sig) {
            report.counterexamples.push(format!(
                "pinned monoid does not lie in noninverse variety {sig}"
            ));
        } else if dominion_pushout(&pinned).len() <= pinned.len() {
            report
                .counterexamples
                .push(format!("pinned pair does not escape in {sig}"));
        }
    }
    Ok(report.finish(started))
}

/// SI members of `V(m,n)`: the extendable inverse is a singleton, `a^n` on
/// nilpotents and `a^(m-1)` on units.
pub fn check_extendable_inverse(cfg: &EnumerationConfig) -> Result<LawReport, LawError> {
    let started = Instant::now();
    let mut report = LawReport::new("extendable-inverse");
    for sig in signatures_for(cfg) {
        if !sig.is_proper() {
            return Err(LawError::NeedsProperVariety {
                law: "extendable-inverse",
                sig,
            });
        }
        let monoids = monoids_with_pinned(&cfg.clone().with_variety(sig).si_only())?;
        run_parallel(&mut report, &monoids, |m| {
            let mut part = Partial::default();
            for a in m.elements() {
                part.instances += 1;
                let found = crate::zigzag::extendable_inverse(m, sig, a)
                    .expect("member of a proper variety");
                let expected = match m.classify_element(a) {
                    ElementClass::Invertible { .. } => Some(m.pow(a, sig.m - 1)),
                    ElementClass::Nilpotent { degree } if degree <= sig.n => Some(m.pow(a, sig.n)),
                    _ => None,
                };
                if expected.map(|b| BTreeSet::from([b])) != Some(found.clone()) {
                    part.fail(format!(
                        "{} in {sig}: extendable inverse {found:?}, expected {expected:?}",
                        describe(m, a)
                    ));
                }
            }
            part
        });
    }
    Ok(report.finish(started))
}

/// Largest zigzag length covered by [`check_isbell_functionality`].
pub const ISBELL_MAX_LENGTH: usize = 2;

/// Zigzags define partial operations: every argument tuple of length at
/// most `2 * ISBELL_MAX_LENGTH + 1` has at most one value.
pub fn check_isbell_functionality(cfg: &EnumerationConfig) -> Result<LawReport, LawError> {
    let started = Instant::now();
    let mut report = LawReport::new("isbell-functionality");
    let monoids = enumerate_monoids(cfg)?;
    run_parallel(&mut report, &monoids, |m| {
        let mut part = Partial::default();
        let k = m.order();
        for n in 0..=ISBELL_MAX_LENGTH {
            let arity = 2 * n + 1;
            let mut args = vec![ElementId(0); arity];
            for code in 0..k.pow(arity as u32) {
                let mut rest = code;
                for slot in args.iter_mut() {
                    *slot = ElementId(rest % k);
                    rest /= k;
                }
                part.instances += 1;
                let values = isbell_value(m, &args);
                if values.len() > 1 {
                    part.fail(format!("{} args {args:?}: values {values:?}", m.name()));
                }
                if let Some(zero) = m.find_zero() {
                    if args.contains(&zero) && values.iter().any(|&v| v != zero) {
                        part.fail(format!(
                            "{} args {args:?}: zero argument with nonzero value",
                            m.name()
                        ));
                    }
                }
            }
        }
        part
    });
    Ok(report.finish(started))
}

/// Settings for the random witness generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessConfig {
    pub seed: u64,
    /// Minimum number of verified random witnesses.
    pub target: usize,
    pub max_length: usize,
}

impl Default for WitnessConfig {
    fn default() -> Self {
        WitnessConfig {
            seed: 0x5eed,
            target: 1000,
            max_length: 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum WitnessShape {
    Free,
    UnitSecond,
    EqualHead,
}

/// Builds a zigzag by choosing each rung from the factorizations that keep
/// the equations satisfied; only the final equation can fail, in which case
/// `None` is returned.
fn random_witness(
    m: &Arc<FiniteMonoid>,
    n: usize,
    shape: WitnessShape,
    rng: &mut ChaCha8Rng,
) -> Option<ZigzagWitness> {
    let k = m.order();
    let elements: Vec<ElementId> = m.elements().collect();
    let pick = |rng: &mut ChaCha8Rng| elements[rng.gen_range(0..k)];
    let split = |rng: &mut ChaCha8Rng, target: ElementId| {
        let options: Vec<(ElementId, ElementId)> = elements
            .iter()
            .flat_map(|&a| elements.iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| m.mul(a, b) == target)
            .collect();
        *options.choose(rng).expect("target = target * 1")
    };

    let (x1, x2, w1) = match shape {
        WitnessShape::Free => {
            let x1 = pick(rng);
            let (w1, x2) = split(rng, x1);
            (x1, x2, w1)
        }
        WitnessShape::UnitSecond => {
            let x1 = pick(rng);
            (x1, m.neutral(), x1)
        }
        WitnessShape::EqualHead => {
            let units: Vec<ElementId> = elements
                .iter()
                .copied()
                .filter(|&u| m.inverse_of(u).is_some())
                .collect();
            let w1 = *units.choose(rng).expect("neutral is a unit");
            let fixed: Vec<ElementId> = elements
                .iter()
                .copied()
                .filter(|&x| m.mul(w1, x) == x)
                .collect();
            let x1 = *fixed.choose(rng)?;
            (x1, x1, w1)
        }
    };
    let z1 = pick(rng);
    let y = m.mul(x1, z1);
    let mut args = vec![x1, x2];
    let mut zs = vec![z1];
    let mut ws = vec![w1];
    for i in 1..n {
        let right = m.mul(args[2 * i - 1], zs[i - 1]);
        let (x_odd, z_next) = split(rng, right);
        let left = m.mul(ws[i - 1], x_odd);
        let (w_next, x_even) = split(rng, left);
        args.extend([x_odd, x_even]);
        zs.push(z_next);
        ws.push(w_next);
    }
    args.push(m.mul(args[2 * n - 1], zs[n - 1]));
    let w = ZigzagWitness::new(Arc::clone(m), args, zs, ws, y);
    w.holds().then_some(w)
}

fn check_witness(w: &ZigzagWitness, e: ElementId, part: &mut Partial) {
    let m = w.ambient();
    let name = w.render();
    part.instances += 1;
    let mut fail = |what: &str, detail: String| {
        part.counterexamples
            .push(format!("{} in {}: {what} {detail}", name, m.name()))
    };
    if !w.is_empty() {
        if let Err(err) = w.spine_chain() {
            fail("spine chain", err.to_string());
        }
        if let Err(err) = w.drop_head() {
            fail("drop head", err.to_string());
        }
    }
    if let Err(err) = w.scale(e) {
        fail("scale", err.to_string());
    }
    if let Some(zero) = m.find_zero() {
        if w.args().contains(&zero) && w.value() != zero {
            fail("zero propagation", format!("value {}", w.value()));
        }
    }
    let mut applied = Vec::new();
    if !w.is_empty() {
        if w.args()[1] == m.neutral() {
            applied.push("shorten-unit");
            if let Err(err) = w.shorten_unit() {
                fail("shorten unit", err.to_string());
            }
        }
        if let Some(inv) = m
            .inverse_of(w.spine_w()[0])
            .filter(|_| w.args()[0] == w.args()[1])
        {
            applied.push("shorten-equal");
            if let Err(err) = w.shorten_equal(inv) {
                fail("shorten equal", err.to_string());
            }
        }
    }
    if m.find_zero().is_some_and(|z| w.args().contains(&z)) {
        applied.push("zero-argument");
    }
    for key in applied {
        part.bump(key);
    }
}

/// Generated witnesses satisfy the spine chain, zero propagation, and every
/// transform whose precondition holds.
pub fn check_witness_transforms(
    cfg: &EnumerationConfig,
    wcfg: WitnessConfig,
) -> Result<LawReport, LawError> {
    let started = Instant::now();
    let mut report = LawReport::new("witness-transforms");
    let mut monoids = enumerate_monoids(cfg)?;
    monoids.push(Arc::new(FiniteMonoid::nine_element()));

    // witnesses found by search over every submonoid pair
    let mut pairs = submonoid_pairs(cfg)?;
    pairs.push(pinned_pair());
    run_parallel(&mut report, &pairs, |sub| {
        let mut part = Partial::default();
        let b = sub.ambient();
        for x in b.elements() {
            if let Some(w) = search_witness(sub, x, default_cap(b)) {
                part.bump("searched");
                let e = ElementId(x.0 * 7 % b.order());
                check_witness(&w, e, &mut part);
            }
        }
        part
    });

    let mut rng = ChaCha8Rng::seed_from_u64(wcfg.seed);
    let shapes = [
        WitnessShape::Free,
        WitnessShape::UnitSecond,
        WitnessShape::EqualHead,
    ];
    let mut generated = Vec::new();
    let mut attempts = 0usize;
    let max_attempts = wcfg.target.saturating_mul(200).max(1000);
    while generated.len() < wcfg.target && attempts < max_attempts {
        attempts += 1;
        let m = &monoids[rng.gen_range(0..monoids.len())];
        let n = rng.gen_range(1..=wcfg.max_length.max(1));
        let shape = shapes[attempts % shapes.len()];
        if let Some(w) = random_witness(m, n, shape, &mut rng) {
            let e = ElementId(rng.gen_range(0..m.order()));
            generated.push((w, e));
        }
    }
    report.bump("generated", generated.len());
    report.bump("generation attempts", attempts);
    if generated.len() < wcfg.target {
        report.counterexamples.push(format!(
            "generator produced {} of {} witnesses",
            generated.len(),
            wcfg.target
        ));
    }
    run_parallel(&mut report, &generated, |(w, e)| {
        let mut part = Partial::default();
        check_witness(w, *e, &mut part);
        part
    });
    Ok(report.finish(started))
}

/// Largest order at which the two enumeration strategies are compared.
pub const CONSISTENCY_MAX_ORDER: usize = 4;

/// Canonical pruning and naive deduplication find the same number of
/// isomorphism classes.
pub fn check_enumeration_consistency(cfg: &EnumerationConfig) -> Result<LawReport, LawError> {
    cfg.validate()?;
    let started = Instant::now();
    let mut report = LawReport::new("enumeration-consistency");
    for k in 1..=cfg.max_order.min(CONSISTENCY_MAX_ORDER) {
        report.instances += 1;
        let (canonical, naive) = (count_canonical(k), count_naive(k));
        report.bump(&format!("order {k}"), canonical);
        if canonical != naive {
            report
                .counterexamples
                .push(format!("order {k}: canonical {canonical}, naive {naive}"));
        }
    }
    Ok(report.finish(started))
}

/// Registered law names, in run order.
pub const LAW_NAMES: [&str; 11] = [
    "si-dichotomy",
    "grillet",
    "idempotent-dichotomy",
    "dominion-equivalence",
    "inverse-closure",
    "weak-es",
    "main-theorem",
    "witness-transforms",
    "extendable-inverse",
    "isbell-functionality",
    "enumeration-consistency",
];

/// Runs one registered law with default settings.
///
/// Laws that quantify over a variety use `cfg.variety_filter`, falling back
/// to [`DEFAULT_SIGNATURES`] (and all commutative monoids for the main
/// theorem).
pub fn run_law(name: &str, cfg: &EnumerationConfig) -> Result<LawReport, LawError> {
    match name {
        "si-dichotomy" => check_si_dichotomy(cfg),
        "grillet" => check_grillet(cfg),
        "idempotent-dichotomy" => check_idempotent_dichotomy(cfg),
        "dominion-equivalence" => check_dominion_equivalence(cfg, CapPolicy::default()),
        "inverse-closure" => check_inverse_closure(cfg),
        "weak-es" => check_weak_es(cfg),
        "main-theorem" => {
            let sigs = match cfg.variety_filter {
                Some(sig) => vec![sig],
                None => DEFAULT_SIGNATURES
                    .into_iter()
                    .chain([VarietySignature::cm()])
                    .collect(),
            };
            let started = Instant::now();
            let mut merged = LawReport::new("main-theorem");
            let unfiltered = EnumerationConfig {
                variety_filter: None,
                ..cfg.clone()
            };
            for sig in sigs {
                let r = check_main_theorem(&unfiltered, sig)?;
                merged.instances += r.instances;
                merged.bump(
                    &format!("escaping pairs in {sig}"),
                    r.counter("escaping pairs"),
                );
                merged.counterexamples.extend(r.counterexamples);
            }
            Ok(merged.finish(started))
        }
        "witness-transforms" => check_witness_transforms(cfg, WitnessConfig::default()),
        "extendable-inverse" => check_extendable_inverse(cfg),
        "isbell-functionality" => check_isbell_functionality(cfg),
        "enumeration-consistency" => check_enumeration_consistency(cfg),
        other => Err(LawError::UnknownLaw(other.to_string())),
    }
}

pub fn run_all(cfg: &EnumerationConfig) -> Result<Vec<LawReport>, LawError> {
    LAW_NAMES.iter().map(|name| run_law(name, cfg)).collect()
}
