//! Isbell zigzags in finite commutative monoids.
//!
//! A zigzag of length `n >= 1` over arguments `x_1, ..., x_{2n+1}` with value
//! `y` is a choice of spine elements `z_1..z_n` and `w_1..w_n` such that
//!
//! ```text
//! (1) y            = x_1 z_1
//! (2) x_1          = w_1 x_2
//! (3) x_{2i} z_i   = x_{2i+1} z_{i+1}      for i = 1..n-1
//! (4) w_i x_{2i+1} = w_{i+1} x_{2i+2}      for i = 1..n-1
//! (5) x_{2n} z_n   = x_{2n+1}
//! (6) w_n x_{2n+1} = y
//! ```
//!
//! For `n = 0` there is a single argument and the only equation is `x_1 = y`.
//! An element lies in the dominion of a submonoid exactly when some zigzag
//! with arguments in the submonoid has it as value.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::monoid::{ElementId, FiniteMonoid};
use crate::morphisms::SubmonoidEmbedding;
use crate::varieties::{satisfies, VarietySignature};

/// One of the equation families of a zigzag; `i` is 1-based as in the table
/// above.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZigzagEquation {
    /// `x_1 = y` for length zero.
    Degenerate,
    ValueFromFirst,
    FirstFactor,
    RightLink(usize),
    LeftLink(usize),
    LastArgument,
    ValueFromLast,
}

impl fmt::Display for ZigzagEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZigzagEquation::Degenerate => f.write_str("(0) x1 = y"),
            ZigzagEquation::ValueFromFirst => f.write_str("(1) y = x1 z1"),
            ZigzagEquation::FirstFactor => f.write_str("(2) x1 = w1 x2"),
            ZigzagEquation::RightLink(i) => write!(f, "(3) at i={i}"),
            ZigzagEquation::LeftLink(i) => write!(f, "(4) at i={i}"),
            ZigzagEquation::LastArgument => f.write_str("(5) x2n zn = x2n+1"),
            ZigzagEquation::ValueFromLast => f.write_str("(6) wn x2n+1 = y"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZigzagError {
    #[error("malformed witness: {0}")]
    Malformed(String),
    #[error("equation {0} fails")]
    EquationFails(ZigzagEquation),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("spine chain broken at step {step}: {left} / {value} / {right}")]
    BrokenChain {
        step: usize,
        left: ElementId,
        value: ElementId,
        right: ElementId,
    },
    #[error("zigzag values are not unique: {0:?}")]
    NotFunctional(Vec<ElementId>),
}

/// A full instantiation of a zigzag inside an ambient monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZigzagWitness {
    ambient: Arc<FiniteMonoid>,
    args: Vec<ElementId>,
    spine_z: Vec<ElementId>,
    spine_w: Vec<ElementId>,
    value: ElementId,
}

impl ZigzagWitness {
    /// Assembles a witness without checking the equations; see
    /// [`Self::verify`].
    pub fn new(
        ambient: Arc<FiniteMonoid>,
        args: Vec<ElementId>,
        spine_z: Vec<ElementId>,
        spine_w: Vec<ElementId>,
        value: ElementId,
    ) -> Self {
        ZigzagWitness {
            ambient,
            args,
            spine_z,
            spine_w,
            value,
        }
    }

    /// The length-zero witness `a = a`.
    pub fn trivial(ambient: Arc<FiniteMonoid>, a: ElementId) -> Self {
        ZigzagWitness::new(ambient, vec![a], vec![], vec![], a)
    }

    pub fn ambient(&self) -> &Arc<FiniteMonoid> {
        &self.ambient
    }

    /// Zigzag length `n`.
    pub fn len(&self) -> usize {
        self.spine_z.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spine_z.is_empty()
    }

    pub fn args(&self) -> &[ElementId] {
        &self.args
    }

    pub fn spine_z(&self) -> &[ElementId] {
        &self.spine_z
    }

    pub fn spine_w(&self) -> &[ElementId] {
        &self.spine_w
    }

    pub fn value(&self) -> ElementId {
        self.value
    }

    fn check_shape(&self) -> Result<(), ZigzagError> {
        let n = self.spine_z.len();
        if self.spine_w.len() != n {
            return Err(ZigzagError::Malformed(format!(
                "{} z entries but {} w entries",
                n,
                self.spine_w.len()
            )));
        }
        if self.args.len() != 2 * n + 1 {
            return Err(ZigzagError::Malformed(format!(
                "length {n} needs {} arguments, got {}",
                2 * n + 1,
                self.args.len()
            )));
        }
        let order = self.ambient.order();
        let all = self
            .args
            .iter()
            .chain(&self.spine_z)
            .chain(&self.spine_w)
            .chain(std::iter::once(&self.value));
        if let Some(bad) = all.into_iter().find(|e| e.0 >= order) {
            return Err(ZigzagError::Malformed(format!(
                "element {bad} out of range for order {order}"
            )));
        }
        Ok(())
    }

    /// Checks every equation, reporting the first that fails.
    pub fn verify(&self) -> Result<(), ZigzagError> {
        self.check_shape()?;
        match self.first_failure() {
            None => Ok(()),
            Some(eq) => Err(ZigzagError::EquationFails(eq)),
        }
    }

    pub fn holds(&self) -> bool {
        self.verify().is_ok()
    }

    fn first_failure(&self) -> Option<ZigzagEquation> {
        let m = &self.ambient;
        let n = self.len();
        // 1-based accessors
        let x = |i: usize| self.args[i - 1];
        let z = |i: usize| self.spine_z[i - 1];
        let w = |i: usize| self.spine_w[i - 1];
        let y = self.value;
        if n == 0 {
            return (x(1) != y).then_some(ZigzagEquation::Degenerate);
        }
        if y != m.mul(x(1), z(1)) {
            return Some(ZigzagEquation::ValueFromFirst);
        }
        if x(1) != m.mul(w(1), x(2)) {
            return Some(ZigzagEquation::FirstFactor);
        }
        for i in 1..n {
            if m.mul(x(2 * i), z(i)) != m.mul(x(2 * i + 1), z(i + 1)) {
                return Some(ZigzagEquation::RightLink(i));
            }
            if m.mul(w(i), x(2 * i + 1)) != m.mul(w(i + 1), x(2 * i + 2)) {
                return Some(ZigzagEquation::LeftLink(i));
            }
        }
        if m.mul(x(2 * n), z(n)) != x(2 * n + 1) {
            return Some(ZigzagEquation::LastArgument);
        }
        if m.mul(w(n), x(2 * n + 1)) != y {
            return Some(ZigzagEquation::ValueFromLast);
        }
        None
    }

    fn require_valid(&self) -> Result<(), ZigzagError> {
        self.verify()
            .map_err(|e| ZigzagError::Precondition(format!("input witness does not verify: {e}")))
    }

    /// The products `d_m a_{2m+1} z_{m+1}` and `d_{m+1} a_{2m+2} z_{m+1}`
    /// for `m = 0..n-1`, with `d_0` the neutral element. Each equals the value
    /// in any verified witness; a mismatch is reported as an error.
    pub fn spine_chain(&self) -> Result<Vec<(ElementId, ElementId)>, ZigzagError> {
        self.require_valid()?;
        if self.is_empty() {
            return Err(ZigzagError::Precondition(
                "spine chain needs length at least 1".into(),
            ));
        }
        let m = &self.ambient;
        let d = |k: usize| {
            if k == 0 {
                m.neutral()
            } else {
                self.spine_w[k - 1]
            }
        };
        let mut chain = Vec::with_capacity(self.len());
        for step in 0..self.len() {
            let z = self.spine_z[step];
            let left = m.mul(m.mul(d(step), self.args[2 * step]), z);
            let right = m.mul(m.mul(d(step + 1), self.args[2 * step + 1]), z);
            if left != self.value || right != self.value {
                return Err(ZigzagError::BrokenChain {
                    step,
                    left,
                    value: self.value,
                    right,
                });
            }
            chain.push((left, right));
        }
        Ok(chain)
    }

    fn checked(self) -> Result<ZigzagWitness, ZigzagError> {
        self.verify()?;
        Ok(self)
    }

    /// Drops the first rung: the result has length `n - 1`, first argument
    /// `w_1 x_3`, and the same value.
    pub fn drop_head(&self) -> Result<ZigzagWitness, ZigzagError> {
        self.require_valid()?;
        if self.is_empty() {
            return Err(ZigzagError::Precondition(
                "cannot drop the head of a length-zero witness".into(),
            ));
        }
        let m = &self.ambient;
        let mut args = Vec::with_capacity(self.args.len() - 2);
        args.push(m.mul(self.spine_w[0], self.args[2]));
        args.extend_from_slice(&self.args[3..]);
        ZigzagWitness::new(
            Arc::clone(&self.ambient),
            args,
            self.spine_z[1..].to_vec(),
            self.spine_w[1..].to_vec(),
            self.value,
        )
        .checked()
    }

    /// Multiplies `x_1`, every `w_i` and the value by `e`.
    pub fn scale(&self, e: ElementId) -> Result<ZigzagWitness, ZigzagError> {
        self.require_valid()?;
        if e.0 >= self.ambient.order() {
            return Err(ZigzagError::Precondition(format!(
                "element {e} out of range"
            )));
        }
        let m = &self.ambient;
        let mut args = self.args.clone();
        args[0] = m.mul(e, args[0]);
        ZigzagWitness::new(
            Arc::clone(&self.ambient),
            args,
            self.spine_z.clone(),
            self.spine_w.iter().map(|&w| m.mul(e, w)).collect(),
            m.mul(e, self.value),
        )
        .checked()
    }

    /// For `x_2 = 1`: a witness of length `n - 1` with arguments
    /// `x_1 x_3, x_4, ..., x_{2n+1}`.
    pub fn shorten_unit(&self) -> Result<ZigzagWitness, ZigzagError> {
        self.require_valid()?;
        if self.is_empty() {
            return Err(ZigzagError::Precondition(
                "length must be at least 1".into(),
            ));
        }
        let m = &self.ambient;
        if self.args[1] != m.neutral() {
            return Err(ZigzagError::Precondition(format!(
                "second argument {} is not the neutral element",
                self.args[1]
            )));
        }
        let mut args = Vec::with_capacity(self.args.len() - 2);
        args.push(m.mul(self.args[0], self.args[2]));
        args.extend_from_slice(&self.args[3..]);
        ZigzagWitness::new(
            Arc::clone(&self.ambient),
            args,
            self.spine_z[1..].to_vec(),
            self.spine_w[1..].to_vec(),
            self.value,
        )
        .checked()
    }

    /// For `x_1 = x_2` with `w_1` a unit of inverse `w1_inverse`: a witness
    /// of length `n - 1` with arguments `x_3, ..., x_{2n+1}` and left spine
    /// `w1_inverse * w_i`.
    pub fn shorten_equal(&self, w1_inverse: ElementId) -> Result<ZigzagWitness, ZigzagError> {
        self.require_valid()?;
        if self.is_empty() {
            return Err(ZigzagError::Precondition(
                "length must be at least 1".into(),
            ));
        }
        let m = &self.ambient;
        if self.args[0] != self.args[1] {
            return Err(ZigzagError::Precondition(format!(
                "first two arguments differ ({} vs {})",
                self.args[0], self.args[1]
            )));
        }
        if w1_inverse.0 >= m.order() || m.mul(self.spine_w[0], w1_inverse) != m.neutral() {
            return Err(ZigzagError::Precondition(format!(
                "{w1_inverse} is not an inverse of w1 = {}",
                self.spine_w[0]
            )));
        }
        ZigzagWitness::new(
            Arc::clone(&self.ambient),
            self.args[2..].to_vec(),
            self.spine_z[1..].to_vec(),
            self.spine_w[1..]
                .iter()
                .map(|&w| m.mul(w1_inverse, w))
                .collect(),
            self.value,
        )
        .checked()
    }

    /// `zigzag n=<n> args: i... z: i... w: i... value: i`
    pub fn render(&self) -> String {
        let join = |v: &[ElementId]| v.iter().map(|e| format!(" {e}")).collect::<String>();
        format!(
            "zigzag n={} args:{} z:{} w:{} value: {}",
            self.len(),
            join(&self.args),
            join(&self.spine_z),
            join(&self.spine_w),
            self.value
        )
    }

    /// Reads a line produced by [`Self::render`]. The result is not verified.
    pub fn parse(line: &str, ambient: Arc<FiniteMonoid>) -> Result<ZigzagWitness, ZigzagError> {
        let bad = |msg: &str| ZigzagError::Malformed(msg.to_string());
        let mut tokens = line.split_whitespace();
        if tokens.next() != Some("zigzag") {
            return Err(bad("expected `zigzag`"));
        }
        let n: usize = tokens
            .next()
            .and_then(|t| t.strip_prefix("n="))
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| bad("expected `n=<n>`"))?;
        let mut sections: Vec<Vec<ElementId>> = Vec::new();
        let mut expect = ["args:", "z:", "w:", "value:"].into_iter();
        let mut current: Option<Vec<ElementId>> = None;
        let mut next_key = expect.next();
        for t in tokens {
            if Some(t) == next_key {
                if let Some(done) = current.take() {
                    sections.push(done);
                }
                current = Some(Vec::new());
                next_key = expect.next();
                continue;
            }
            let index: usize = t.parse().map_err(|_| bad("bad element index"))?;
            current
                .as_mut()
                .ok_or_else(|| bad("element before section"))?
                .push(ElementId(index));
        }
        sections.extend(current);
        let [args, z, w, value] = <[Vec<ElementId>; 4]>::try_from(sections)
            .map_err(|_| bad("expected args:, z:, w:, value: sections"))?;
        let [value] = value[..] else {
            return Err(bad("value needs exactly one element"));
        };
        let witness = ZigzagWitness::new(ambient, args, z, w, value);
        witness.check_shape()?;
        if witness.len() != n {
            return Err(bad("n does not match the spine length"));
        }
        Ok(witness)
    }
}

impl fmt::Display for ZigzagWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Default bound on zigzag length: the square of the ambient order.
///
/// Zigzags are paths through pairs `(x_{2i} z_i, w_i)` of ambient elements,
/// so a shortest one never repeats a pair and has length at most `|B|^2`.
pub fn default_cap(ambient: &FiniteMonoid) -> usize {
    ambient.order() * ambient.order()
}

/// For each `r`, the pairs `(a, c)` with `a` in `allowed`, `c` anywhere,
/// and `a * c = r`.
fn factorizations(ambient: &FiniteMonoid, allowed: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let mut out = vec![Vec::new(); ambient.order()];
    for &a in allowed {
        for c in 0..ambient.order() {
            out[ambient.op(a, c)].push((a, c));
        }
    }
    out
}

#[derive(Clone, Copy)]
struct Step {
    prev: Option<usize>,
    /// `(x_{2i-1}, z_i, w_i, x_{2i})` for the rung that reached this state.
    rung: [usize; 4],
}

/// Shortest zigzag with arguments in `sub` and value `target`, of length at
/// most `cap`.
///
/// Breadth-first search over states `(x_{2i} z_i, w_i)`: these determine
/// every remaining equation, so the search is complete up to `cap` and the
/// first witness found has minimal length.
pub fn search_witness(
    sub: &SubmonoidEmbedding,
    target: ElementId,
    cap: usize,
) -> Option<ZigzagWitness> {
    let ambient = sub.ambient();
    assert!(target.0 < ambient.order(), "target out of range");
    if sub.contains(target) {
        return Some(ZigzagWitness::trivial(Arc::clone(ambient), target));
    }
    if cap == 0 {
        return None;
    }
    let k = ambient.order();
    let allowed: Vec<usize> = sub.universe().iter().map(|e| e.0).collect();
    let splits = factorizations(ambient, &allowed);
    let state = |r: usize, w: usize| r * k + w;

    let mut visited: Vec<Option<Step>> = vec![None; k * k];
    let mut frontier = Vec::new();
    for &(x1, z1) in &splits[target.0] {
        for &(x2, w1) in &splits[x1] {
            let s = state(ambient.op(x2, z1), w1);
            if visited[s].is_none() {
                visited[s] = Some(Step {
                    prev: None,
                    rung: [x1, z1, w1, x2],
                });
                frontier.push(s);
            }
        }
    }

    let mut level = 1;
    while !frontier.is_empty() {
        for &s in &frontier {
            let (r, w) = (s / k, s % k);
            if sub.contains(ElementId(r)) && ambient.op(w, r) == target.0 {
                let witness = reconstruct(ambient, &visited, s, target);
                debug_assert_eq!(witness.verify(), Ok(()));
                return Some(witness);
            }
        }
        if level == cap {
            return None;
        }
        let mut next = Vec::new();
        for &s in &frontier {
            let (r, w) = (s / k, s % k);
            for &(x_odd, z) in &splits[r] {
                let left = ambient.op(w, x_odd);
                for &(x_even, w_next) in &splits[left] {
                    let t = state(ambient.op(x_even, z), w_next);
                    if visited[t].is_none() {
                        visited[t] = Some(Step {
                            prev: Some(s),
                            rung: [x_odd, z, w_next, x_even],
                        });
                        next.push(t);
                    }
                }
            }
        }
        frontier = next;
        level += 1;
    }
    None
}

fn reconstruct(
    ambient: &Arc<FiniteMonoid>,
    visited: &[Option<Step>],
    last: usize,
    target: ElementId,
) -> ZigzagWitness {
    let k = ambient.order();
    let mut rungs = Vec::new();
    let mut cursor = Some(last);
    while let Some(s) = cursor {
        let step = visited[s].expect("visited state");
        rungs.push(step.rung);
        cursor = step.prev;
    }
    rungs.reverse();
    let mut args = Vec::with_capacity(2 * rungs.len() + 1);
    let mut spine_z = Vec::with_capacity(rungs.len());
    let mut spine_w = Vec::with_capacity(rungs.len());
    for [x_odd, z, w, x_even] in rungs {
        args.push(ElementId(x_odd));
        args.push(ElementId(x_even));
        spine_z.push(ElementId(z));
        spine_w.push(ElementId(w));
    }
    args.push(ElementId(last / k));
    ZigzagWitness::new(Arc::clone(ambient), args, spine_z, spine_w, target)
}

/// Whether some spine makes the zigzag with these arguments and value hold.
pub fn zigzag_holds(ambient: &FiniteMonoid, args: &[ElementId], value: ElementId) -> bool {
    assert!(args.len() % 2 == 1, "zigzag arguments come in odd number");
    let n = args.len() / 2;
    if n == 0 {
        return args[0] == value;
    }
    let k = ambient.order();
    let x = |i: usize| args[i - 1].0;
    // states (x_{2i} z_i, w_i) reachable after rung i
    let mut states = vec![false; k * k];
    for z1 in 0..k {
        if ambient.op(x(1), z1) != value.0 {
            continue;
        }
        for w1 in 0..k {
            if ambient.op(w1, x(2)) == x(1) {
                states[ambient.op(x(2), z1) * k + w1] = true;
            }
        }
    }
    for i in 1..n {
        let mut next = vec![false; k * k];
        for s in (0..k * k).filter(|&s| states[s]) {
            let (r, w) = (s / k, s % k);
            for z in (0..k).filter(|&z| ambient.op(x(2 * i + 1), z) == r) {
                let left = ambient.op(w, x(2 * i + 1));
                for w_next in (0..k).filter(|&w2| ambient.op(w2, x(2 * i + 2)) == left) {
                    next[ambient.op(x(2 * i + 2), z) * k + w_next] = true;
                }
            }
        }
        states = next;
    }
    let last = x(2 * n + 1);
    (0..k).any(|w| states[last * k + w] && ambient.op(w, last) == value.0)
}

/// Every value some zigzag with these arguments can take. On monoids this
/// has at most one element.
pub fn isbell_value(ambient: &FiniteMonoid, args: &[ElementId]) -> BTreeSet<ElementId> {
    ambient
        .elements()
        .filter(|&y| zigzag_holds(ambient, args, y))
        .collect()
}

/// The partial operation defined by zigzags of a fixed length, with a
/// uniqueness failure surfaced as an error.
pub fn isbell_operation(
    ambient: &FiniteMonoid,
    args: &[ElementId],
) -> Result<Option<ElementId>, ZigzagError> {
    let values = isbell_value(ambient, args);
    match values.len() {
        0 => Ok(None),
        1 => Ok(values.into_iter().next()),
        _ => Err(ZigzagError::NotFunctional(values.into_iter().collect())),
    }
}

/// All `b` with `a^(n+1) b = a^n` and `b^2 a = b`, for `sig = V(m,n)`.
pub fn extendable_inverse(
    monoid: &FiniteMonoid,
    sig: VarietySignature,
    a: ElementId,
) -> Result<BTreeSet<ElementId>, ZigzagError> {
    if sig.m == 0 {
        return Err(ZigzagError::Precondition(
            "the variety must be proper (m >= 1)".into(),
        ));
    }
    if a.0 >= monoid.order() {
        return Err(ZigzagError::Precondition(format!(
            "element {a} out of range"
        )));
    }
    if !satisfies(monoid, sig) {
        return Err(ZigzagError::Precondition(format!(
            "{} does not lie in {sig}",
            monoid.name()
        )));
    }
    let high = monoid.pow(a, sig.n + 1);
    let low = monoid.pow(a, sig.n);
    Ok(monoid
        .elements()
        .filter(|&b| monoid.mul(high, b) == low && monoid.mul(monoid.mul(b, b), a) == b)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> ElementId {
        ElementId(i)
    }

    fn nine() -> Arc<FiniteMonoid> {
        Arc::new(FiniteMonoid::nine_element())
    }

    // <1,1,0> = 6, <0,1,0> = 2, <0,1,1> = 3, <0,0,1> = 1, <1,0,0> = 4, <1,1,1> = 7
    fn pinned_witness(value: usize) -> ZigzagWitness {
        ZigzagWitness::new(
            nine(),
            vec![e(6), e(2), e(3)],
            vec![e(1)],
            vec![e(4)],
            e(value),
        )
    }

    /// Every value over all spines, by exhaustive enumeration.
    fn brute_force_values(m: &Arc<FiniteMonoid>, args: &[ElementId]) -> BTreeSet<ElementId> {
        let n = args.len() / 2;
        let k = m.order();
        let mut out = BTreeSet::new();
        for code in 0..k.pow(2 * n as u32) {
            let digits: Vec<ElementId> =
                (0..2 * n).map(|i| e(code / k.pow(i as u32) % k)).collect();
            for y in m.elements() {
                let w = ZigzagWitness::new(
                    Arc::clone(m),
                    args.to_vec(),
                    digits[..n].to_vec(),
                    digits[n..].to_vec(),
                    y,
                );
                if w.holds() {
                    out.insert(y);
                }
            }
        }
        out
    }

    #[test]
    fn verifies_pinned_witness() {
        assert_eq!(pinned_witness(7).verify(), Ok(()));
        assert_eq!(
            pinned_witness(6).verify(),
            Err(ZigzagError::EquationFails(ZigzagEquation::ValueFromFirst))
        );
        for a in 0..9 {
            assert!(ZigzagWitness::trivial(nine(), e(a)).holds());
        }
    }

    #[test]
    fn malformed_witnesses() {
        let w = ZigzagWitness::new(nine(), vec![e(6), e(2)], vec![e(1)], vec![e(4)], e(7));
        assert!(matches!(w.verify(), Err(ZigzagError::Malformed(_))));
        let w = ZigzagWitness::new(nine(), vec![e(6), e(2), e(3)], vec![e(1)], vec![], e(7));
        assert!(matches!(w.verify(), Err(ZigzagError::Malformed(_))));
        let w = ZigzagWitness::new(nine(), vec![e(60)], vec![], vec![], e(60));
        assert!(matches!(w.verify(), Err(ZigzagError::Malformed(_))));
    }

    #[test]
    fn spine_chain_of_pinned_witness() {
        let chain = pinned_witness(7).spine_chain().unwrap();
        assert_eq!(chain, vec![(e(7), e(7))]);
        let b = nine();
        assert_eq!(b.mul(b.mul(e(4), e(2)), e(1)), e(7));
        let all_neutral = ZigzagWitness::new(
            Arc::new(FiniteMonoid::cyclic(3).unwrap()),
            vec![e(0); 3],
            vec![e(0)],
            vec![e(0)],
            e(0),
        );
        assert_eq!(all_neutral.spine_chain().unwrap(), vec![(e(0), e(0))]);
    }

    #[test]
    fn drop_head_and_scale() {
        let w = pinned_witness(7);
        let dropped = w.drop_head().unwrap();
        assert_eq!(dropped.len(), 0);
        assert_eq!(dropped.args(), &[e(7)]);
        assert_eq!(w.scale(e(0)).unwrap(), w);
        let zeroed = w.scale(e(8)).unwrap();
        assert_eq!(zeroed.value(), e(8));
        assert!(ZigzagWitness::trivial(nine(), e(3)).drop_head().is_err());
    }

    #[test]
    fn shortening() {
        let c3 = Arc::new(FiniteMonoid::cyclic(3).unwrap());
        let w = ZigzagWitness::new(
            Arc::clone(&c3),
            vec![e(1), e(1), e(0)],
            vec![e(2)],
            vec![e(0)],
            e(0),
        );
        assert_eq!(w.verify(), Ok(()));
        let short = w.shorten_equal(e(0)).unwrap();
        assert_eq!(short, ZigzagWitness::trivial(Arc::clone(&c3), e(0)));
        assert!(matches!(
            w.shorten_unit(),
            Err(ZigzagError::Precondition(_))
        ));
        assert!(matches!(
            w.shorten_equal(e(1)),
            Err(ZigzagError::Precondition(_))
        ));

        // a2 = neutral forces x1 = w1 and w1 x3 = y
        let unit = ZigzagWitness::new(
            Arc::clone(&c3),
            vec![e(2), e(0), e(1)],
            vec![e(1)],
            vec![e(2)],
            e(0),
        );
        assert_eq!(unit.verify(), Ok(()));
        let short = unit.shorten_unit().unwrap();
        assert_eq!(short.args(), &[e(0)]);
        assert!(pinned_witness(7).shorten_unit().is_err());
    }

    #[test]
    fn search_finds_pinned_witness() {
        let b = nine();
        let sub = SubmonoidEmbedding::generated(Arc::clone(&b), [e(6), e(2), e(3)]).unwrap();
        let w = search_witness(&sub, e(7), default_cap(&b)).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w.verify(), Ok(()));
        assert!(w.args().iter().all(|&a| sub.contains(a)));
        let w0 = search_witness(&sub, e(3), 5).unwrap();
        assert_eq!(w0.len(), 0);
        assert!(search_witness(&sub, e(7), 0).is_none());
        // nothing else escapes
        for b_el in [1, 4, 5] {
            assert!(search_witness(&sub, e(b_el), 81).is_none());
        }
    }

    #[test]
    fn trivial_submonoid_of_cyclic_group_is_closed() {
        let c2 = Arc::new(FiniteMonoid::cyclic(2).unwrap());
        let sub = SubmonoidEmbedding::generated(Arc::clone(&c2), []).unwrap();
        for cap in 0..6 {
            assert!(search_witness(&sub, e(1), cap).is_none());
        }
    }

    #[test]
    fn isbell_values() {
        let b = FiniteMonoid::nine_element();
        assert_eq!(isbell_value(&b, &[e(6), e(2), e(3)]), [e(7)].into());
        assert_eq!(isbell_value(&b, &[e(5)]), [e(5)].into());
        for args in [[e(8), e(2), e(3)], [e(6), e(8), e(3)], [e(1), e(2), e(8)]] {
            assert!(isbell_value(&b, &args).is_subset(&[e(8)].into()));
        }
    }

    #[test]
    fn isbell_values_match_brute_force() {
        let m = Arc::new(
            FiniteMonoid::monogenic(1, 2)
                .unwrap()
                .direct_product(&FiniteMonoid::cyclic(2).unwrap()),
        );
        let k = m.order();
        for code in 0..k.pow(3) {
            let args = [e(code % k), e(code / k % k), e(code / k / k)];
            assert_eq!(isbell_value(&m, &args), brute_force_values(&m, &args));
        }
        let b = nine();
        for args in [[e(6), e(2), e(3)], [e(1), e(1), e(0)], [e(4), e(2), e(2)]] {
            assert_eq!(isbell_value(&b, &args), brute_force_values(&b, &args));
        }
    }

    #[test]
    fn extendable_inverses() {
        let b = FiniteMonoid::nine_element();
        let sig = VarietySignature::new(1, 2);
        assert_eq!(extendable_inverse(&b, sig, e(4)).unwrap(), [e(8)].into());
        let c3 = FiniteMonoid::cyclic(3).unwrap();
        assert_eq!(
            extendable_inverse(&c3, VarietySignature::new(3, 0), e(1)).unwrap(),
            [e(2)].into()
        );
        assert!(extendable_inverse(&b, sig, b.neutral())
            .unwrap()
            .contains(&b.neutral()));
        assert!(extendable_inverse(&b, VarietySignature::new(1, 1), e(1)).is_err());
        assert!(extendable_inverse(&b, VarietySignature::cm(), e(1)).is_err());
    }

    #[test]
    fn render_and_parse() {
        let w = pinned_witness(7);
        let line = w.render();
        assert_eq!(line, "zigzag n=1 args: 6 2 3 z: 1 w: 4 value: 7");
        assert_eq!(ZigzagWitness::parse(&line, nine()).unwrap(), w);
        let t = ZigzagWitness::trivial(nine(), e(3));
        assert_eq!(t.render(), "zigzag n=0 args: 3 z: w: value: 3");
        assert_eq!(ZigzagWitness::parse(&t.render(), nine()).unwrap(), t);
        assert!(ZigzagWitness::parse("zigzag n=2 args: 3 z: w: value: 3", nine()).is_err());
    }
}
