//! Bounded finite posets stored as full down/up cone rows.

use std::collections::HashSet;

use crate::error::{Error, OrderViolation, Result};
use crate::mask::{ElementId, SubsetMask, MAX_ELEMENTS};

/// Direction of a cone: common lower bounds `L(A)` or common upper bounds `U(A)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cone {
    Down,
    Up,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extremum {
    Min,
    Max,
}

/// A validated finite bounded poset.
///
/// Row `down[y]` holds every `x <= y` and `up[x]` every `y >= x`, so the
/// lower cone of a set is the intersection of its members' `down` rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    names: Vec<String>,
    down: Vec<SubsetMask>,
    up: Vec<SubsetMask>,
    bottom: ElementId,
    top: ElementId,
}

/// Checks the bounded-poset axioms on a label list and a boolean `leq` matrix.
///
/// On failure every violated axiom is reported, not only the first.
pub fn validate_order<S: AsRef<str>>(names: &[S], leq: &[Vec<bool>], bottom: &str, top: &str) -> Result<FinitePoset> {
    let n = names.len();
    if leq.len() != n || leq.iter().any(|row| row.len() != n) {
        return Err(Error::NotSquare(n));
    }
    let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
    let mut seen = HashSet::new();
    for name in &names {
        if !seen.insert(name.as_str()) {
            return Err(Error::DuplicateLabel(name.clone()));
        }
    }
    let find = |label: &str| {
        names
            .iter()
            .position(|s| s == label)
            .map(ElementId)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    };
    let bottom = find(bottom)?;
    let top = find(top)?;
    FinitePoset::from_fn(names, |x, y| leq[x][y], bottom, top)
}

impl FinitePoset {
    /// Builds and validates a poset from an order predicate on indices.
    pub fn from_fn(
        names: Vec<String>,
        leq: impl Fn(usize, usize) -> bool,
        bottom: ElementId,
        top: ElementId,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 || n > MAX_ELEMENTS {
            return Err(Error::SizeLimitExceeded {
                what: "poset",
                limit: MAX_ELEMENTS,
                got: n,
            });
        }
        let mut down = vec![SubsetMask::EMPTY; n];
        let mut up = vec![SubsetMask::EMPTY; n];
        for x in 0..n {
            for y in 0..n {
                if leq(x, y) {
                    down[y].insert(ElementId(x));
                    up[x].insert(ElementId(y));
                }
            }
        }
        let label = |i: usize| names[i].clone();
        let mut violations = Vec::new();
        for x in 0..n {
            if !down[x].contains(ElementId(x)) {
                violations.push(OrderViolation::NotReflexive(label(x)));
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if up[x].contains(ElementId(y)) && up[y].contains(ElementId(x)) {
                    violations.push(OrderViolation::NotAntisymmetric(label(x), label(y)));
                }
            }
        }
        for x in 0..n {
            for y in up[x].iter().filter(|&y| y.0 != x) {
                let missing = up[y.0].minus(up[x]);
                for z in missing.iter().filter(|&z| z != y) {
                    violations.push(OrderViolation::NotTransitive(label(x), label(y.0), label(z.0)));
                }
            }
        }
        let all = SubsetMask::full(n);
        if up[bottom.0] != all {
            violations.push(OrderViolation::NoBottom(label(bottom.0)));
        }
        if down[top.0] != all {
            violations.push(OrderViolation::NoTop(label(top.0)));
        }
        if !violations.is_empty() {
            return Err(Error::InvalidOrder(violations));
        }
        Ok(FinitePoset {
            names,
            down,
            up,
            bottom,
            top,
        })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    #[inline]
    pub fn bottom(&self) -> ElementId {
        self.bottom
    }

    #[inline]
    pub fn top(&self) -> ElementId {
        self.top
    }

    #[inline]
    pub fn universe(&self) -> SubsetMask {
        SubsetMask::full(self.len())
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.len()).map(ElementId)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, e: ElementId) -> &str {
        &self.names[e.0]
    }

    pub fn id(&self, label: &str) -> Option<ElementId> {
        self.names.iter().position(|s| s == label).map(ElementId)
    }

    /// Labels of the members of `m`, in index order.
    pub fn labels(&self, m: SubsetMask) -> Vec<String> {
        m.iter().map(|e| self.names[e.0].clone()).collect()
    }

    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.down[y.0].contains(x)
    }

    #[inline]
    pub fn lt(&self, x: ElementId, y: ElementId) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn comparable(&self, x: ElementId, y: ElementId) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `L(x)`.
    #[inline]
    pub fn down(&self, x: ElementId) -> SubsetMask {
        self.down[x.0]
    }

    /// `U(x)`.
    #[inline]
    pub fn up(&self, x: ElementId) -> SubsetMask {
        self.up[x.0]
    }

    /// `L(A)`; the empty set has the whole universe as its lower cone.
    pub fn lower(&self, a: SubsetMask) -> SubsetMask {
        a.iter().fold(self.universe(), |acc, x| acc & self.down[x.0])
    }

    /// `U(A)`; the empty set has the whole universe as its upper cone.
    pub fn upper(&self, a: SubsetMask) -> SubsetMask {
        a.iter().fold(self.universe(), |acc, x| acc & self.up[x.0])
    }

    pub fn cone(&self, dir: Cone, a: SubsetMask) -> SubsetMask {
        match dir {
            Cone::Down => self.lower(a),
            Cone::Up => self.upper(a),
        }
    }

    /// Minimal elements of `A`.
    pub fn min(&self, a: SubsetMask) -> SubsetMask {
        a.iter()
            .filter(|&x| (self.down[x.0] & a).as_singleton().is_some())
            .collect()
    }

    /// Maximal elements of `A`.
    pub fn max(&self, a: SubsetMask) -> SubsetMask {
        a.iter()
            .filter(|&x| (self.up[x.0] & a).as_singleton().is_some())
            .collect()
    }

    pub fn extremal(&self, dir: Extremum, a: SubsetMask) -> SubsetMask {
        match dir {
            Extremum::Min => self.min(a),
            Extremum::Max => self.max(a),
        }
    }

    /// Least element of `A`, if it has one.
    pub fn least(&self, a: SubsetMask) -> Option<ElementId> {
        self.min(a).as_singleton()
    }

    /// Greatest element of `A`, if it has one.
    pub fn greatest(&self, a: SubsetMask) -> Option<ElementId> {
        self.max(a).as_singleton()
    }

    /// `x ∨ y` when it exists.
    pub fn join(&self, x: ElementId, y: ElementId) -> Option<ElementId> {
        self.least(self.up[x.0] & self.up[y.0])
    }

    /// `x ∧ y` when it exists.
    pub fn meet(&self, x: ElementId, y: ElementId) -> Option<ElementId> {
        self.greatest(self.down[x.0] & self.down[y.0])
    }

    /// `A <= B`: every member of `A` is below every member of `B`.
    /// Vacuously true when either side is empty.
    pub fn le_sets(&self, a: SubsetMask, b: SubsetMask) -> bool {
        b.is_subset(self.upper(a))
    }

    /// `true` when no two members of `A` are comparable.
    pub fn is_antichain(&self, a: SubsetMask) -> bool {
        a.iter().all(|x| (self.up[x.0] & a) == SubsetMask::singleton(x))
    }

    /// Covering pairs `(x, y)` with `x < y` and nothing strictly between,
    /// sorted by `(x, y)`.
    pub fn covers(&self) -> Vec<(ElementId, ElementId)> {
        let mut out = Vec::new();
        for x in self.elements() {
            let above = self.up[x.0].minus(SubsetMask::singleton(x));
            for y in self.min(above).iter() {
                out.push((x, y));
            }
        }
        out.sort();
        out
    }

    /// Length of the longest chain from the bottom to each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<ElementId> = self.elements().collect();
        order.sort_by_key(|x| self.down[x.0].len());
        let mut h = vec![0usize; self.len()];
        for &y in &order {
            let below = self.down[y.0].minus(SubsetMask::singleton(y));
            h[y.0] = below.iter().map(|x| h[x.0] + 1).max().unwrap_or(0);
        }
        h
    }
}
