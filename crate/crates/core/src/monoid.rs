//! Finite commutative monoids stored as dense Cayley tables.
//!
//! Elements are the indices `0..order`. Labels, when present, are for
//! display only and never take part in equality of tables.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Largest order accepted by [`FiniteMonoid::validate`].
pub const DEFAULT_ORDER_CAP: usize = 64;

/// Index of an element inside a particular [`FiniteMonoid`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub usize);

impl ElementId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for ElementId {
    fn from(index: usize) -> Self {
        ElementId(index)
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("a monoid needs at least one element")]
    Empty,
    #[error("order {order} exceeds the construction cap of {cap}")]
    OrderCap { order: usize, cap: usize },
    #[error("table has {rows} rows, expected {order}")]
    RowCount { rows: usize, order: usize },
    #[error("row {row} has {len} entries, expected {order}")]
    RowLength {
        row: usize,
        len: usize,
        order: usize,
    },
    #[error("entry {row}*{col} = {value} is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("element {index} is out of range for order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("not commutative: {a}*{b} = {ab} but {b}*{a} = {ba}")]
    NotCommutative {
        a: usize,
        b: usize,
        ab: usize,
        ba: usize,
    },
    #[error("{neutral} is not neutral: {neutral}*{a} = {product}")]
    NotNeutral {
        neutral: usize,
        a: usize,
        product: usize,
    },
    #[error(
        "not associative at ({a}, {b}, {c}): ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}"
    )]
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
        left: usize,
        right: usize,
    },
    #[error("expected {order} labels, got {got}")]
    LabelCount { order: usize, got: usize },
    #[error("label {0:?} is empty or contains whitespace")]
    BadLabel(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// How an element sits in its monoid: a unit, a nilpotent, or neither.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElementClass {
    Invertible {
        inverse: ElementId,
    },
    /// `degree` is the least `k >= 1` with `a^k` the zero element.
    Nilpotent {
        degree: usize,
    },
    Neither,
}

impl fmt::Display for ElementClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementClass::Invertible { inverse } => write!(f, "invertible (inverse {inverse})"),
            ElementClass::Nilpotent { degree } => write!(f, "nilpotent (degree {degree})"),
            ElementClass::Neither => f.write_str("neither"),
        }
    }
}

/// A finite commutative monoid given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteMonoid {
    name: String,
    order: usize,
    neutral: usize,
    table: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteMonoid {
    /// Checks the table against the commutative monoid laws, with the
    /// default order cap.
    pub fn validate(
        order: usize,
        neutral: usize,
        rows: Vec<Vec<usize>>,
    ) -> Result<Self, MonoidError> {
        Self::validate_with_cap(order, neutral, rows, DEFAULT_ORDER_CAP)
    }

    pub fn validate_with_cap(
        order: usize,
        neutral: usize,
        rows: Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<Self, MonoidError> {
        if order == 0 {
            return Err(MonoidError::Empty);
        }
        if order > cap {
            return Err(MonoidError::OrderCap { order, cap });
        }
        if neutral >= order {
            return Err(MonoidError::ElementOutOfRange {
                index: neutral,
                order,
            });
        }
        if rows.len() != order {
            return Err(MonoidError::RowCount {
                rows: rows.len(),
                order,
            });
        }
        let mut table = Vec::with_capacity(order * order);
        for (row, entries) in rows.into_iter().enumerate() {
            if entries.len() != order {
                return Err(MonoidError::RowLength {
                    row,
                    len: entries.len(),
                    order,
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= order {
                    return Err(MonoidError::EntryOutOfRange {
                        row,
                        col,
                        value,
                        order,
                    });
                }
            }
            table.extend(entries);
        }
        let monoid = FiniteMonoid {
            name: "M".to_string(),
            order,
            neutral,
            table,
            labels: None,
        };
        monoid.check_laws()?;
        Ok(monoid)
    }

    /// Builds a monoid from a row-major table the caller already knows to be
    /// lawful (products, quotients, canonical relabellings).
    pub(crate) fn from_table_unchecked(
        name: impl Into<String>,
        order: usize,
        neutral: usize,
        table: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let monoid = FiniteMonoid {
            name: name.into(),
            order,
            neutral,
            table,
            labels: None,
        };
        debug_assert_eq!(monoid.check_laws(), Ok(()));
        monoid
    }

    fn check_laws(&self) -> Result<(), MonoidError> {
        let k = self.order;
        for a in 0..k {
            for b in (a + 1)..k {
                let (ab, ba) = (self.op(a, b), self.op(b, a));
                if ab != ba {
                    return Err(MonoidError::NotCommutative { a, b, ab, ba });
                }
            }
        }
        for a in 0..k {
            let product = self.op(self.neutral, a);
            if product != a {
                return Err(MonoidError::NotNeutral {
                    neutral: self.neutral,
                    a,
                    product,
                });
            }
        }
        for a in 0..k {
            for b in 0..k {
                let ab = self.op(a, b);
                for c in 0..k {
                    let left = self.op(ab, c);
                    let right = self.op(a, self.op(b, c));
                    if left != right {
                        return Err(MonoidError::NotAssociative {
                            a,
                            b,
                            c,
                            left,
                            right,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, MonoidError> {
        if labels.len() != self.order {
            return Err(MonoidError::LabelCount {
                order: self.order,
                got: labels.len(),
            });
        }
        if let Some(bad) = labels
            .iter()
            .find(|l| l.is_empty() || l.chars().any(char::is_whitespace))
        {
            return Err(MonoidError::BadLabel(bad.clone()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn neutral(&self) -> ElementId {
        ElementId(self.neutral)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element: its label if any, else its index.
    pub fn label(&self, a: ElementId) -> String {
        match &self.labels {
            Some(labels) => labels[a.0].clone(),
            None => a.0.to_string(),
        }
    }

    /// Resolves a token that is either an element index or a label.
    pub fn lookup(&self, token: &str) -> Option<ElementId> {
        if let Ok(index) = token.parse::<usize>() {
            return (index < self.order).then_some(ElementId(index));
        }
        self.labels
            .as_ref()?
            .iter()
            .position(|l| l == token)
            .map(ElementId)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.order).map(ElementId)
    }

    pub fn element(&self, index: usize) -> Result<ElementId, MonoidError> {
        if index < self.order {
            Ok(ElementId(index))
        } else {
            Err(MonoidError::ElementOutOfRange {
                index,
                order: self.order,
            })
        }
    }

    /// Flattened row-major table.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn row(&self, a: ElementId) -> &[usize] {
        &self.table[a.0 * self.order..(a.0 + 1) * self.order]
    }

    /// Tables and neutral element agree; names and labels are ignored.
    pub fn same_structure(&self, other: &FiniteMonoid) -> bool {
        self.order == other.order && self.neutral == other.neutral && self.table == other.table
    }

    #[inline]
    pub(crate) fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    /// Product of two elements.
    ///
    /// Panics if either index is out of range; see [`Self::checked_mul`].
    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        assert!(
            a.0 < self.order && b.0 < self.order,
            "element out of range for order {}",
            self.order
        );
        ElementId(self.op(a.0, b.0))
    }

    pub fn checked_mul(&self, a: ElementId, b: ElementId) -> Result<ElementId, MonoidError> {
        self.element(a.0)?;
        self.element(b.0)?;
        Ok(ElementId(self.op(a.0, b.0)))
    }

    /// `a^k` by repeated squaring; `a^0` is the neutral element.
    pub fn pow(&self, a: ElementId, k: usize) -> ElementId {
        assert!(
            a.0 < self.order,
            "element out of range for order {}",
            self.order
        );
        ElementId(self.pow_index(a.0, k))
    }

    pub fn checked_pow(&self, a: ElementId, k: usize) -> Result<ElementId, MonoidError> {
        self.element(a.0)?;
        Ok(ElementId(self.pow_index(a.0, k)))
    }

    pub(crate) fn pow_index(&self, a: usize, mut k: usize) -> usize {
        let mut result = self.neutral;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                result = self.op(result, base);
            }
            base = self.op(base, base);
            k >>= 1;
        }
        result
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_zero(&self, a: ElementId) -> bool {
        (0..self.order).all(|b| self.op(a.0, b) == a.0)
    }

    /// The unique absorbing element, if there is one.
    pub fn find_zero(&self) -> Option<ElementId> {
        self.elements().find(|&a| self.is_zero(a))
    }

    pub fn inverse_of(&self, a: ElementId) -> Option<ElementId> {
        (0..self.order)
            .find(|&b| self.op(a.0, b) == self.neutral)
            .map(ElementId)
    }

    /// Units take precedence, so the neutral element of the trivial monoid is
    /// reported as invertible.
    pub fn classify_element(&self, a: ElementId) -> ElementClass {
        if let Some(inverse) = self.inverse_of(a) {
            return ElementClass::Invertible { inverse };
        }
        if let Some(zero) = self.find_zero() {
            let mut power = a.0;
            // Powers of `a` enter their cycle within `order` steps, and the
            // zero is a fixed point of that cycle if it is reached at all.
            for degree in 1..=self.order {
                if power == zero.0 {
                    return ElementClass::Nilpotent { degree };
                }
                power = self.op(power, a.0);
            }
        }
        ElementClass::Neither
    }

    pub fn is_cancellative_element(&self, a: ElementId) -> bool {
        let mut seen = vec![false; self.order];
        for b in 0..self.order {
            let ab = self.op(a.0, b);
            if seen[ab] {
                return false;
            }
            seen[ab] = true;
        }
        true
    }

    /// Every `a` admits some `b` with `a = a^2 b`.
    pub fn is_inverse_monoid(&self) -> bool {
        self.elements().all(|a| {
            let square = self.op(a.0, a.0);
            (0..self.order).any(|b| self.op(square, b) == a.0)
        })
    }

    /// Least submonoid containing `generators`.
    pub fn subuniverse_generate(
        &self,
        generators: impl IntoIterator<Item = ElementId>,
    ) -> BTreeSet<ElementId> {
        let mut inside = vec![false; self.order];
        inside[self.neutral] = true;
        let mut members = vec![self.neutral];
        let mut queue = Vec::new();
        for g in generators {
            assert!(g.0 < self.order, "generator out of range");
            if !inside[g.0] {
                inside[g.0] = true;
                members.push(g.0);
                queue.push(g.0);
            }
        }
        while let Some(x) = queue.pop() {
            let mut i = 0;
            while i < members.len() {
                let y = self.op(x, members[i]);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                    queue.push(y);
                }
                i += 1;
            }
        }
        members.into_iter().map(ElementId).collect()
    }

    /// Componentwise product; the pair `(a, b)` has index `a * |M2| + b`.
    pub fn direct_product(&self, other: &FiniteMonoid) -> FiniteMonoid {
        let (k1, k2) = (self.order, other.order);
        let order = k1 * k2;
        let mut table = Vec::with_capacity(order * order);
        for p in 0..order {
            let (a1, a2) = (p / k2, p % k2);
            for q in 0..order {
                let (b1, b2) = (q / k2, q % k2);
                table.push(self.op(a1, b1) * k2 + other.op(a2, b2));
            }
        }
        let neutral = self.neutral * k2 + other.neutral;
        let mut product = FiniteMonoid::from_table_unchecked(
            format!("{}x{}", self.name, other.name),
            order,
            neutral,
            table,
        );
        if self.labels.is_some() || other.labels.is_some() {
            let labels = (0..order)
                .map(|p| {
                    format!(
                        "({},{})",
                        self.label(ElementId(p / k2)),
                        other.label(ElementId(p % k2))
                    )
                })
                .collect();
            product.labels = Some(labels);
        }
        product
    }

    /// The one-element monoid.
    pub fn trivial() -> FiniteMonoid {
        FiniteMonoid::from_table_unchecked("trivial", 1, 0, vec![0])
    }

    /// Integers modulo `s` under addition.
    pub fn cyclic(s: usize) -> Result<FiniteMonoid, MonoidError> {
        if s == 0 {
            return Err(MonoidError::InvalidParameter(
                "cyclic order must be at least 1".into(),
            ));
        }
        let table = (0..s * s).map(|p| (p / s + p % s) % s).collect();
        Ok(FiniteMonoid::from_table_unchecked(
            format!("cyclic{s}"),
            s,
            0,
            table,
        ))
    }

    /// Quotient of the naturals under addition identifying `k` with `k + period`
    /// for every `k >= index`. Element `i` stands for the `i`-th power of the
    /// generator.
    pub fn monogenic(index: usize, period: usize) -> Result<FiniteMonoid, MonoidError> {
        if period == 0 {
            return Err(MonoidError::InvalidParameter(
                "monogenic period must be at least 1".into(),
            ));
        }
        let order = index + period;
        let reduce = |s: usize| {
            if s < order {
                s
            } else {
                index + (s - index) % period
            }
        };
        let table = (0..order * order)
            .map(|p| reduce(p / order + p % order))
            .collect();
        Ok(FiniteMonoid::from_table_unchecked(
            format!("monogenic{index}_{period}"),
            order,
            0,
            table,
        ))
    }

    /// The nine-element monoid on `{0,1}^3` plus a sink: triples add
    /// componentwise and any sum leaving `{0,1}^3` collapses to the sink.
    ///
    /// The triple `<k,m,n>` has index `4k + 2m + n`; the sink is index 8.
    pub fn nine_element() -> FiniteMonoid {
        const SINK: usize = 8;
        let mul = |a: usize, b: usize| {
            if a == SINK || b == SINK || a & b != 0 {
                SINK
            } else {
                a | b
            }
        };
        let table = (0..81).map(|p| mul(p / 9, p % 9)).collect();
        let mut labels: Vec<String> = (0..8)
            .map(|t| format!("<{},{},{}>", t >> 2, (t >> 1) & 1, t & 1))
            .collect();
        labels.push("sink".to_string());
        let mut monoid = FiniteMonoid::from_table_unchecked("nine", 9, 0, table);
        monoid.labels = Some(labels);
        monoid
    }

    /// Applies a bijection `perm` (old index to new index) to the elements.
    pub fn relabel(&self, perm: &[usize]) -> FiniteMonoid {
        assert_eq!(perm.len(), self.order);
        let k = self.order;
        let mut inverse = vec![0; k];
        for (old, &new) in perm.iter().enumerate() {
            inverse[new] = old;
        }
        let table = (0..k * k)
            .map(|p| perm[self.op(inverse[p / k], inverse[p % k])])
            .collect();
        let mut out =
            FiniteMonoid::from_table_unchecked(self.name.clone(), k, perm[self.neutral], table);
        out.labels = self
            .labels
            .as_ref()
            .map(|labels| (0..k).map(|new| labels[inverse[new]].clone()).collect());
        out
    }
}
