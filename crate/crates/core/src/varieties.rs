//! Varieties of commutative monoids, each named by a power identity
//! `x^(m+n) = x^n`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::monoid::{ElementId, FiniteMonoid};
use crate::morphisms::SubmonoidEmbedding;

/// The variety `V(m,n)` axiomatized by `x^(m+n) = x^n`. `m = 0` names the
/// variety of all commutative monoids for every `n`.
///
/// Names are not canonical: `V(2,1)` and `V(4,1)` are different values even
/// though the first variety is contained in the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarietySignature {
    pub m: usize,
    pub n: usize,
}

impl VarietySignature {
    pub const fn new(m: usize, n: usize) -> Self {
        VarietySignature { m, n }
    }

    /// All commutative monoids.
    pub const fn cm() -> Self {
        VarietySignature::new(0, 0)
    }

    /// `x^n = 1`.
    pub const fn abelian(n: usize) -> Self {
        VarietySignature::new(n, 0)
    }

    /// `x^n = x^(n+1)`.
    pub const fn aperiodic(n: usize) -> Self {
        VarietySignature::new(1, n)
    }

    pub fn is_proper(self) -> bool {
        self.m >= 1
    }

    /// Whether `inner` is a subvariety of `self`, decided on the free
    /// one-generated member of `inner`.
    pub fn contains(self, inner: VarietySignature) -> bool {
        if self.m == 0 {
            return true;
        }
        if inner.m == 0 {
            return false;
        }
        let free = FiniteMonoid::monogenic(inner.n, inner.m).expect("period is positive");
        satisfies(&free, self)
    }

    /// Mutual containment.
    pub fn same_variety(self, other: VarietySignature) -> bool {
        self.contains(other) && other.contains(self)
    }

    /// Every member is an inverse monoid.
    pub fn is_inverse(self) -> bool {
        let by_shape = self.m >= 1 && self.n <= 1;
        let by_containment = !self.contains(VarietySignature::aperiodic(2));
        assert_eq!(
            by_shape, by_containment,
            "inverse-variety criteria disagree on {self}"
        );
        by_shape
    }
}

impl fmt::Display for VarietySignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V({},{})", self.m, self.n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse variety {0:?}: expected V(m,n), A(n), C(n) or CM")]
pub struct SignatureParseError(pub String);

impl FromStr for VarietySignature {
    type Err = SignatureParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || SignatureParseError(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "CM" {
            return Ok(VarietySignature::cm());
        }
        let open = compact.find('(').ok_or_else(err)?;
        let args = compact[open + 1..].strip_suffix(')').ok_or_else(err)?;
        let nums = args
            .split(',')
            .map(|t| t.parse::<usize>().map_err(|_| err()))
            .collect::<Result<Vec<_>, _>>()?;
        match (&compact[..open], &nums[..]) {
            ("V", &[m, n]) => Ok(VarietySignature::new(m, n)),
            ("A", &[n]) => Ok(VarietySignature::abelian(n)),
            ("C", &[n]) => Ok(VarietySignature::aperiodic(n)),
            _ => Err(err()),
        }
    }
}

pub fn satisfies(monoid: &FiniteMonoid, sig: VarietySignature) -> bool {
    (0..monoid.order()).all(|a| element_satisfies(monoid, a, sig))
}

fn element_satisfies(monoid: &FiniteMonoid, a: usize, sig: VarietySignature) -> bool {
    monoid.pow_index(a, sig.m + sig.n) == monoid.pow_index(a, sig.n)
}

/// Index and period of the cyclic submonoid generated by `a`: the least
/// `i >= 0` and `p >= 1` with `a^(i+p) = a^i`.
pub fn index_and_period(monoid: &FiniteMonoid, a: ElementId) -> (usize, usize) {
    let mut first_seen = vec![usize::MAX; monoid.order()];
    let mut power = monoid.neutral().0;
    for exponent in 0.. {
        if first_seen[power] != usize::MAX {
            let index = first_seen[power];
            return (index, exponent - index);
        }
        first_seen[power] = exponent;
        power = monoid.op(power, a.0);
    }
    unreachable!()
}

/// Least signature satisfied by `monoid`: the lcm of the element periods and
/// the largest element index.
pub fn generated_variety(monoid: &FiniteMonoid) -> VarietySignature {
    let (mut m, mut n) = (1, 0);
    for a in monoid.elements() {
        let (index, period) = index_and_period(monoid, a);
        m = lcm(m, period);
        n = n.max(index);
    }
    let sig = VarietySignature::new(m, n);
    debug_assert!(satisfies(monoid, sig));
    sig
}

/// Confirms minimality of a signature for `monoid`: it holds, no proper
/// divisor of `m` works with the same `n`, and `n - 1` fails with the same
/// `m`.
pub fn is_minimal_signature(monoid: &FiniteMonoid, sig: VarietySignature) -> bool {
    if !satisfies(monoid, sig) {
        return false;
    }
    let divisor_works = (1..sig.m)
        .filter(|&d| sig.m.is_multiple_of(d))
        .any(|d| satisfies(monoid, VarietySignature::new(d, sig.n)));
    let smaller_index_works =
        sig.n > 0 && satisfies(monoid, VarietySignature::new(sig.m, sig.n - 1));
    !divisor_works && !smaller_index_works
}

/// The largest submonoid of `monoid` lying in the variety `sig`.
pub fn variety_core(monoid: &Arc<FiniteMonoid>, sig: VarietySignature) -> SubmonoidEmbedding {
    if sig.m == 0 {
        return SubmonoidEmbedding::whole(Arc::clone(monoid));
    }
    let universe = (0..monoid.order())
        .filter(|&a| element_satisfies(monoid, a, sig))
        .map(ElementId)
        .collect();
    SubmonoidEmbedding::new(Arc::clone(monoid), universe)
        .expect("power identities cut out a submonoid")
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(m: usize, n: usize) -> VarietySignature {
        VarietySignature::new(m, n)
    }

    #[test]
    fn membership() {
        let b = FiniteMonoid::nine_element();
        assert!(satisfies(&b, sig(1, 2)));
        assert!(!satisfies(&b, sig(1, 1)));
        assert!(satisfies(&FiniteMonoid::cyclic(3).unwrap(), sig(3, 0)));
    }

    #[test]
    fn generated_signatures() {
        let b = FiniteMonoid::nine_element();
        assert_eq!(generated_variety(&b), sig(1, 2));
        assert!(is_minimal_signature(&b, sig(1, 2)));
        for s in 1..7 {
            assert_eq!(
                generated_variety(&FiniteMonoid::cyclic(s).unwrap()),
                sig(s, 0)
            );
        }
        for n in 0..4 {
            for m in 1..4 {
                let mono = FiniteMonoid::monogenic(n, m).unwrap();
                assert_eq!(generated_variety(&mono), sig(m, n));
                assert!(is_minimal_signature(&mono, sig(m, n)));
            }
        }
        let c2 = FiniteMonoid::cyclic(2).unwrap();
        let c3 = FiniteMonoid::cyclic(3).unwrap();
        assert_eq!(generated_variety(&c2.direct_product(&c3)), sig(6, 0));
    }

    #[test]
    fn monogenic_power_identities() {
        for t in 0..5 {
            let m = FiniteMonoid::monogenic(t, 1).unwrap();
            assert!(satisfies(&m, sig(1, t)));
            for n in 0..t {
                assert!(!satisfies(&m, sig(1, n)));
            }
        }
    }

    #[test]
    fn containment() {
        assert!(sig(1, 2).contains(sig(1, 1)));
        assert!(!sig(2, 1).contains(sig(1, 2)));
        assert!(sig(0, 5).contains(sig(7, 3)));
        assert!(!sig(3, 1).contains(sig(0, 0)));
        assert!(sig(4, 1).contains(sig(2, 1)));
        assert!(!sig(2, 1).contains(sig(4, 1)));
        assert!(sig(2, 3).same_variety(sig(2, 3)));
        assert!(sig(0, 0).same_variety(sig(0, 7)));
    }

    #[test]
    fn containment_matches_divisibility_formula() {
        for m in 0..7 {
            for n in 0..4 {
                for m2 in 0..7 {
                    for n2 in 0..4 {
                        let formula = m == 0 || (m2 != 0 && m % m2 == 0 && n2 <= n);
                        assert_eq!(
                            sig(m, n).contains(sig(m2, n2)),
                            formula,
                            "{m},{n} vs {m2},{n2}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_varieties() {
        assert!(sig(2, 1).is_inverse());
        assert!(!sig(1, 2).is_inverse());
        assert!(!sig(0, 0).is_inverse());
        assert!(sig(5, 0).is_inverse());
    }

    #[test]
    fn cores() {
        let b = Arc::new(FiniteMonoid::nine_element());
        assert_eq!(variety_core(&b, sig(1, 2)).len(), 9);
        let m = Arc::new(FiniteMonoid::monogenic(3, 1).unwrap());
        let core = variety_core(&m, sig(1, 2));
        let expected: Vec<usize> = core.universe().iter().map(|e| e.0).collect();
        assert_eq!(expected, vec![0, 2, 3]);
        assert!(satisfies(&core.to_monoid().0, sig(1, 2)));
        assert!(variety_core(&m, sig(0, 4)).is_whole());
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("V(2,1)".parse::<VarietySignature>().unwrap(), sig(2, 1));
        assert_eq!("A(3)".parse::<VarietySignature>().unwrap(), sig(3, 0));
        assert_eq!("C(2)".parse::<VarietySignature>().unwrap(), sig(1, 2));
        assert_eq!("CM".parse::<VarietySignature>().unwrap(), sig(0, 0));
        assert_eq!("V( 1 , 2 )".parse::<VarietySignature>().unwrap(), sig(1, 2));
        assert!("V(1)".parse::<VarietySignature>().is_err());
        assert!("B(1,2)".parse::<VarietySignature>().is_err());
        assert_eq!(sig(1, 2).to_string(), "V(1,2)");
    }
}
