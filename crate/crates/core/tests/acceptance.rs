//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. All comparisons are exact.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use dominion_lab::enumeration::{count_canonical, count_naive, enumerate_monoids};
use dominion_lab::laws::{
    check_extendable_inverse, check_grillet, check_idempotent_dichotomy, check_inverse_closure,
    check_isbell_functionality, check_si_dichotomy, check_weak_es, check_witness_transforms,
    pinned_pair, LawReport, WitnessConfig,
};
use dominion_lab::morphisms::{all_submonoids, subdirect_analysis, SubmonoidEmbedding};
use dominion_lab::pushout::{dominion_pushout, dominion_zigzag};
use dominion_lab::varieties::satisfies;
use dominion_lab::zigzag::{default_cap, isbell_value, ZigzagWitness};
use dominion_lab::{
    parse_monoid, render_monoid, ElementId, EnumerationConfig, FiniteMonoid, VarietySignature,
};

type Outcome = Result<String, String>;

/// Name, check, and optional runtime budget.
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

const SI_SIGNATURES: [(usize, usize); 5] = [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)];

fn e(i: usize) -> ElementId {
    ElementId(i)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn law_outcome(reports: &[LawReport]) -> Outcome {
    let mut instances = 0;
    for r in reports {
        instances += r.instances;
        ensure(r.passed(), || {
            format!("{r}; first: {:?}", r.counterexamples.first())
        })?;
        ensure(r.instances > 0, || format!("{} checked nothing", r.law))?;
    }
    Ok(format!("{instances} instances, 0 counterexamples"))
}

fn cfg(k: usize) -> EnumerationConfig {
    EnumerationConfig::new(k).expect("order within cap")
}

/// <k,m,n> sits at index 4k + 2m + n; the sink at 8.
fn pinned_monoid() -> Outcome {
    let b = FiniteMonoid::nine_element();
    let reparsed = parse_monoid(&render_monoid(&b)).map_err(|err| err.to_string())?;
    ensure(reparsed == b, || {
        "nine-element table does not re-validate".into()
    })?;
    ensure(b.order() == 9, || format!("order {}", b.order()))?;
    ensure(satisfies(&b, VarietySignature::new(1, 2)), || {
        "not in V(1,2)".into()
    })?;
    let analysis = subdirect_analysis(&b);
    ensure(analysis.irreducible, || {
        "not subdirectly irreducible".into()
    })?;
    let monolith = analysis.monolith.expect("irreducible");
    let mut expected: Vec<Vec<ElementId>> = (0..7).map(|i| vec![e(i)]).collect();
    expected.push(vec![e(7), e(8)]);
    ensure(monolith.blocks() == expected, || {
        format!("monolith {:?}", monolith.blocks())
    })?;
    ensure(!b.is_inverse_monoid(), || "reported as inverse".into())?;
    Ok("order 9, V(1,2), SI with monolith {<1,1,1>, sink}, not inverse".into())
}

fn pinned_zigzag() -> Outcome {
    let b = Arc::new(FiniteMonoid::nine_element());
    // args <1,1,0>, <0,1,0>, <0,1,1>; spine <0,0,1>, <1,0,0>; value <1,1,1>
    let w = ZigzagWitness::new(
        Arc::clone(&b),
        vec![e(6), e(2), e(3)],
        vec![e(1)],
        vec![e(4)],
        e(7),
    );
    w.verify().map_err(|err| err.to_string())?;
    let values = isbell_value(&b, &[e(6), e(2), e(3)]);
    ensure(values == BTreeSet::from([e(7)]), || {
        format!("isbell value {values:?}")
    })?;
    let sub = pinned_pair();
    ensure(
        *sub.universe() == BTreeSet::from([e(0), e(2), e(3), e(6), e(8)]),
        || format!("generated submonoid {}", sub.render()),
    )?;
    let dom = dominion_pushout(&sub);
    ensure(
        dom.contains(&e(7)) && dom.is_superset(sub.universe()) && dom.len() > sub.len(),
        || format!("dominion {dom:?}"),
    )?;
    // independently computed by brute force over zigzags and pushout classes
    let expected = BTreeSet::from([e(0), e(2), e(3), e(6), e(7), e(8)]);
    ensure(dom == expected, || format!("dominion {dom:?}"))?;
    let ids: Vec<String> = dom.iter().map(|x| x.0.to_string()).collect();
    Ok(format!(
        "witness verifies, value {{7}}, dominion {{{}}}",
        ids.join(", ")
    ))
}

fn central_equivalence() -> Outcome {
    let mut pairs: Vec<SubmonoidEmbedding> = enumerate_monoids(&cfg(4))
        .map_err(|err| err.to_string())?
        .iter()
        .flat_map(all_submonoids)
        .collect();
    pairs.push(pinned_pair());
    let mut escapes = 0;
    for sub in &pairs {
        let cap = default_cap(sub.ambient());
        let by_zigzag = dominion_zigzag(sub, cap);
        let by_pushout = dominion_pushout(sub);
        ensure(by_zigzag == by_pushout, || {
            format!(
                "{} over {}: zigzag {by_zigzag:?} pushout {by_pushout:?} (cap {cap})",
                sub.ambient().name(),
                sub.render()
            )
        })?;
        escapes += usize::from(by_pushout.len() > sub.len());
    }
    Ok(format!(
        "{} pairs, 0 discrepancies, {escapes} with dominion larger than A",
        pairs.len()
    ))
}

fn si_dichotomy() -> Outcome {
    let reports = SI_SIGNATURES
        .iter()
        .map(|&(m, n)| check_si_dichotomy(&cfg(5).with_variety(VarietySignature::new(m, n))))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|err| err.to_string())?;
    law_outcome(&reports)
}

fn grillet_and_idempotents() -> Outcome {
    let reports = vec![
        check_grillet(&cfg(5)).map_err(|err| err.to_string())?,
        check_idempotent_dichotomy(&cfg(5)).map_err(|err| err.to_string())?,
    ];
    law_outcome(&reports)
}

fn inverse_and_weak_es() -> Outcome {
    let reports = vec![
        check_inverse_closure(&cfg(4)).map_err(|err| err.to_string())?,
        check_weak_es(&cfg(4)).map_err(|err| err.to_string())?,
    ];
    law_outcome(&reports)
}

fn witness_transforms() -> Outcome {
    let report = check_witness_transforms(&cfg(4), WitnessConfig::default())
        .map_err(|err| err.to_string())?;
    ensure(report.counter("generated") >= 1000, || {
        format!("only {} generated", report.counter("generated"))
    })?;
    for key in ["shorten-unit", "shorten-equal", "zero-argument", "searched"] {
        ensure(report.counter(key) > 0, || {
            format!("no witness exercised {key}")
        })?;
    }
    law_outcome(std::slice::from_ref(&report))?;
    Ok(format!(
        "{} witnesses ({} generated, {} searched), shorten-unit {}, shorten-equal {}, zero-argument {}, 0 failures",
        report.instances,
        report.counter("generated"),
        report.counter("searched"),
        report.counter("shorten-unit"),
        report.counter("shorten-equal"),
        report.counter("zero-argument")
    ))
}

fn extendable_inverse() -> Outcome {
    let mut reports = Vec::new();
    for m in 1..=4 {
        for n in 0..=3 {
            let c = cfg(5).with_variety(VarietySignature::new(m, n));
            reports.push(check_extendable_inverse(&c).map_err(|err| err.to_string())?);
        }
    }
    // signatures whose SI members are all excluded by order still count
    let checked: Vec<LawReport> = reports.into_iter().filter(|r| r.instances > 0).collect();
    ensure(checked.len() >= 10, || {
        format!("only {} signatures had SI members", checked.len())
    })?;
    law_outcome(&checked)
}

fn isbell_functionality() -> Outcome {
    law_outcome(&[check_isbell_functionality(&cfg(4)).map_err(|err| err.to_string())?])
}

fn enumeration_consistency() -> Outcome {
    let mut counts = Vec::new();
    for k in 1..=4 {
        let (canonical, naive) = (count_canonical(k), count_naive(k));
        ensure(canonical == naive, || {
            format!("order {k}: canonical {canonical}, naive {naive}")
        })?;
        counts.push(canonical);
    }
    Ok(format!("class counts at orders 1..=4: {counts:?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "1 pinned nine-element monoid",
            pinned_monoid,
            Some(Duration::from_secs(1)),
        ),
        (
            "2 pinned zigzag and dominion escape",
            pinned_zigzag,
            Some(Duration::from_secs(1)),
        ),
        (
            "3 zigzag and pushout dominions agree",
            central_equivalence,
            Some(Duration::from_secs(300)),
        ),
        ("4 SI dichotomy", si_dichotomy, None),
        (
            "5 Grillet and idempotent dichotomy",
            grillet_and_idempotents,
            None,
        ),
        ("6 inverse closure and weak ES", inverse_and_weak_es, None),
        ("7 witness transforms", witness_transforms, None),
        ("8 extendable inverse uniqueness", extendable_inverse, None),
        ("9 Isbell functionality", isbell_functionality, None),
        (
            "10 enumeration self-consistency",
            enumeration_consistency,
            Some(Duration::from_secs(60)),
        ),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let started = Instant::now();
        let outcome = run();
        let elapsed = started.elapsed();
        let outcome = match (outcome, budget) {
            (Ok(_), Some(limit)) if elapsed >= limit => Err(format!(
                "took {:.3}s, limit {}s",
                elapsed.as_secs_f64(),
                limit.as_secs()
            )),
            (other, _) => other,
        };
        match outcome {
            Ok(detail) => println!(
                "PASS criterion {name}: {detail} [{:.3}s]",
                elapsed.as_secs_f64()
            ),
            Err(why) => {
                failed += 1;
                println!(
                    "FAIL criterion {name}: {why} [{:.3}s]",
                    elapsed.as_secs_f64()
                );
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
