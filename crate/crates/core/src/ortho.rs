//! Orthoposets: bounded posets with an antitone involutive complementation.

use std::fmt;

use crate::error::{Error, OrthoViolation, Result};
use crate::mask::{ElementId, SubsetMask};
use crate::ops::Memo;
use crate::poset::{Cone, Extremum, FinitePoset};

/// The complementation `x ↦ x'` as a permutation of element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    image: Vec<ElementId>,
}

impl Involution {
    pub fn apply(&self, x: ElementId) -> ElementId {
        self.image[x.0]
    }

    pub fn as_slice(&self) -> &[ElementId] {
        &self.image
    }
}

/// A validated orthoposet. Immutable; operator tables are filled lazily.
#[derive(Clone)]
pub struct OrthoPoset {
    name: String,
    poset: FinitePoset,
    prime: Involution,
    pub(crate) memo: Memo,
}

impl PartialEq for OrthoPoset {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.poset == other.poset && self.prime == other.prime
    }
}

impl Eq for OrthoPoset {}

impl fmt::Debug for OrthoPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrthoPoset")
            .field("name", &self.name)
            .field("elements", &self.poset.names())
            .finish()
    }
}

/// Attaches a complementation given as label pairs. The pair `0 = 1` is
/// implicit; every other element must occur in exactly one pair.
pub fn validate_ortho<S: AsRef<str>>(poset: FinitePoset, pairs: &[(S, S)]) -> Result<OrthoPoset> {
    let n = poset.len();
    let mut image: Vec<Option<ElementId>> = vec![None; n];
    let mut violations = Vec::new();
    image[poset.bottom().0] = Some(poset.top());
    image[poset.top().0] = Some(poset.bottom());
    let lookup = |s: &str| poset.id(s).ok_or_else(|| Error::UnknownLabel(s.to_string()));
    for (x, y) in pairs {
        let (x, y) = (lookup(x.as_ref())?, lookup(y.as_ref())?);
        let bounds = [poset.bottom(), poset.top()];
        if bounds.contains(&x) || bounds.contains(&y) {
            if !(bounds.contains(&x) && bounds.contains(&y) && x != y) {
                violations.push(OrthoViolation::BoundsNotSwapped);
            }
            continue;
        }
        for (a, b) in [(x, y), (y, x)] {
            match image[a.0] {
                Some(prev) if prev != b => violations.push(OrthoViolation::NotInvolutive(poset.name(a).to_string())),
                _ => image[a.0] = Some(b),
            }
        }
    }
    let mut total = Vec::with_capacity(n);
    for (i, img) in image.iter().enumerate() {
        match img {
            Some(e) => total.push(*e),
            None => {
                violations.push(OrthoViolation::NotTotal(poset.names()[i].clone()));
                total.push(ElementId(i));
            }
        }
    }
    if !violations.is_empty() {
        violations.dedup();
        return Err(Error::InvalidOrtho(violations));
    }
    OrthoPoset::new("unnamed", poset, total)
}

impl OrthoPoset {
    /// Validates `prime` (indexed by element) against the orthoposet axioms.
    pub fn new(name: impl Into<String>, poset: FinitePoset, prime: Vec<ElementId>) -> Result<Self> {
        let n = poset.len();
        let label = |e: ElementId| poset.name(e).to_string();
        let mut violations = Vec::new();
        if prime.len() != n || prime.iter().any(|e| e.0 >= n) {
            return Err(Error::InvalidOrtho(vec![OrthoViolation::NotTotal(format!(
                "prime has {} entries for {} elements",
                prime.len(),
                n
            ))]));
        }
        for x in poset.elements() {
            if prime[x.0] == x {
                violations.push(OrthoViolation::FixedPoint(label(x)));
            } else if prime[prime[x.0].0] != x {
                violations.push(OrthoViolation::NotInvolutive(label(x)));
            }
        }
        if prime[poset.bottom().0] != poset.top() {
            violations.push(OrthoViolation::BoundsNotSwapped);
        }
        if !violations.is_empty() {
            return Err(Error::InvalidOrtho(violations));
        }
        for x in poset.elements() {
            for y in poset.up(x).iter() {
                if !poset.leq(prime[y.0], prime[x.0]) {
                    violations.push(OrthoViolation::NotAntitone(label(x), label(y)));
                }
            }
        }
        let single_bottom = SubsetMask::singleton(poset.bottom());
        let single_top = SubsetMask::singleton(poset.top());
        for x in poset.elements() {
            let xp = prime[x.0];
            let lower = poset.down(x) & poset.down(xp);
            let upper = poset.up(x) & poset.up(xp);
            if lower != single_bottom || upper != single_top {
                violations.push(OrthoViolation::NotComplementation {
                    x: label(x),
                    lower: poset.labels(lower),
                    upper: poset.labels(upper),
                });
            }
        }
        if !violations.is_empty() {
            return Err(Error::InvalidOrtho(violations));
        }
        Ok(OrthoPoset {
            name: name.into(),
            poset,
            prime: Involution { image: prime },
            memo: Memo::default(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn involution(&self) -> &Involution {
        &self.prime
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.poset.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    #[inline]
    pub fn zero(&self) -> ElementId {
        self.poset.bottom()
    }

    #[inline]
    pub fn one(&self) -> ElementId {
        self.poset.top()
    }

    #[inline]
    pub fn universe(&self) -> SubsetMask {
        self.poset.universe()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        self.poset.elements()
    }

    pub fn label(&self, e: ElementId) -> &str {
        self.poset.name(e)
    }

    pub fn labels(&self, m: SubsetMask) -> Vec<String> {
        self.poset.labels(m)
    }

    pub fn id(&self, label: &str) -> Option<ElementId> {
        self.poset.id(label)
    }

    /// Looks up several labels at once; panics on an unknown label.
    pub fn ids<const N: usize>(&self, labels: [&str; N]) -> [ElementId; N] {
        labels.map(|l| self.id(l).unwrap_or_else(|| panic!("no element labelled {l}")))
    }

    /// Mask of the given labels; panics on an unknown label.
    pub fn set(&self, labels: &[&str]) -> SubsetMask {
        labels
            .iter()
            .map(|l| self.id(l).unwrap_or_else(|| panic!("no element labelled {l}")))
            .collect()
    }

    #[inline]
    pub fn prime(&self, x: ElementId) -> ElementId {
        self.prime.image[x.0]
    }

    /// `A' = {x' | x ∈ A}`.
    #[doc(alias = "involute_set")]
    pub fn prime_set(&self, a: SubsetMask) -> SubsetMask {
        a.iter().map(|x| self.prime(x)).collect()
    }

    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.poset.leq(x, y)
    }

    /// `x ⊥ y`, i.e. `x <= y'`.
    #[inline]
    pub fn orthogonal(&self, x: ElementId, y: ElementId) -> bool {
        self.poset.leq(x, self.prime(y))
    }

    #[inline]
    pub fn down(&self, x: ElementId) -> SubsetMask {
        self.poset.down(x)
    }

    #[inline]
    pub fn up(&self, x: ElementId) -> SubsetMask {
        self.poset.up(x)
    }

    pub fn lower(&self, a: SubsetMask) -> SubsetMask {
        self.poset.lower(a)
    }

    pub fn upper(&self, a: SubsetMask) -> SubsetMask {
        self.poset.upper(a)
    }

    /// `L(x, y)`.
    #[inline]
    pub fn lower2(&self, x: ElementId, y: ElementId) -> SubsetMask {
        self.poset.down(x) & self.poset.down(y)
    }

    /// `U(x, y)`.
    #[inline]
    pub fn upper2(&self, x: ElementId, y: ElementId) -> SubsetMask {
        self.poset.up(x) & self.poset.up(y)
    }

    pub fn cone(&self, dir: Cone, a: SubsetMask) -> SubsetMask {
        self.poset.cone(dir, a)
    }

    pub fn min(&self, a: SubsetMask) -> SubsetMask {
        self.poset.min(a)
    }

    pub fn max(&self, a: SubsetMask) -> SubsetMask {
        self.poset.max(a)
    }

    pub fn extremal(&self, dir: Extremum, a: SubsetMask) -> SubsetMask {
        self.poset.extremal(dir, a)
    }

    /// `A <= B`: every element of `A` is below every element of `B`.
    #[doc(alias = "subset_le")]
    pub fn le_sets(&self, a: SubsetMask, b: SubsetMask) -> bool {
        self.poset.le_sets(a, b)
    }

    pub fn single(&self, x: ElementId) -> SubsetMask {
        SubsetMask::singleton(x)
    }

    /// `{0}`.
    pub fn zero_set(&self) -> SubsetMask {
        SubsetMask::singleton(self.zero())
    }

    /// `{1}`.
    pub fn one_set(&self) -> SubsetMask {
        SubsetMask::singleton(self.one())
    }

    /// Non-bound elements `x` with `x < x'` in index order, one per pair.
    pub fn pair_representatives(&self) -> Vec<ElementId> {
        self.elements()
            .filter(|&x| x != self.zero() && x != self.one() && x < self.prime(x))
            .collect()
    }
}
