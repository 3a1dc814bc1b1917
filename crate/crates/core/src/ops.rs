//! Subset-valued operators on an orthoposet.
//!
//! Every operator is a cone term and returns a [`SubsetMask`]:
//!
//! | operator | term |
//! |---|---|
//! | sharp `S(x,y)` | `U(L(x,y), L(x,y'), L(x',y))` |
//! | flat `F(x,y)` | `L(U(x,y), U(x,y'), U(x',y))` |
//! | commutator `c(x,y)` | `U(L(x,y), L(x,y'), L(x',y), L(x',y'))` |
//! | Pixley `T(x,y,z)` | `Min U(L(x,z), L(x,y',z'), L(x',y',z))` |
//! | sharp conjunction `x ⊙ y` | `Max L(y, U(x,y'))` |
//! | sharp implication `x → y` | `Min U(x', L(x,y))` |
//!
//! Results are compared against singleton masks when an identity speaks of
//! an element (`c(a,b) = 1` means `c(a,b) == {1}`); sets are never coerced.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::mask::{ElementId, SubsetMask};
use crate::ortho::OrthoPoset;

/// `S(x, y)`, the sharp operator. Always contains 1.
pub fn sharp(o: &OrthoPoset, x: ElementId, y: ElementId) -> SubsetMask {
    let (xp, yp) = (o.prime(x), o.prime(y));
    o.upper(o.lower2(x, y) | o.lower2(x, yp) | o.lower2(xp, y))
}

/// `F(x, y)`, the flat operator. Always contains 0.
pub fn flat(o: &OrthoPoset, x: ElementId, y: ElementId) -> SubsetMask {
    let (xp, yp) = (o.prime(x), o.prime(y));
    o.lower(o.upper2(x, y) | o.upper2(x, yp) | o.upper2(xp, y))
}

/// `c(x, y)`, the commutator.
pub fn commutator(o: &OrthoPoset, x: ElementId, y: ElementId) -> SubsetMask {
    let (xp, yp) = (o.prime(x), o.prime(y));
    o.upper(o.lower2(x, y) | o.lower2(x, yp) | o.lower2(xp, y) | o.lower2(xp, yp))
}

/// `x C y`: `U(x) = U(L(x,y), L(x,y'))`.
pub fn compatible(o: &OrthoPoset, x: ElementId, y: ElementId) -> bool {
    o.up(x) == o.upper(o.lower2(x, y) | o.lower2(x, o.prime(y)))
}

/// `T(x, y, z)`, the ternary Pixley candidate.
pub fn pixley(o: &OrthoPoset, x: ElementId, y: ElementId, z: ElementId) -> SubsetMask {
    let (xp, yp, zp) = (o.prime(x), o.prime(y), o.prime(z));
    let parts = o.lower2(x, z) | (o.lower2(x, yp) & o.down(zp)) | (o.lower2(xp, yp) & o.down(z));
    o.min(o.upper(parts))
}

/// `A ⊙ y = Max L(y, U(A, y'))`.
///
/// With `A = {x}` this is the binary sharp conjunction. Larger `A` lets an
/// antichain-valued implication feed back into the conjunction.
pub fn sharp_conj(o: &OrthoPoset, a: SubsetMask, y: ElementId) -> SubsetMask {
    let u = o.upper(a.with(o.prime(y)));
    o.max(o.down(y) & o.lower(u))
}

/// `x → y = Min U(x', L(x, y))`.
pub fn sharp_impl(o: &OrthoPoset, x: ElementId, y: ElementId) -> SubsetMask {
    o.min(o.up(o.prime(x)) & o.upper(o.lower2(x, y)))
}

/// Identifies one of the tabulated operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OpId {
    #[serde(rename = "S")]
    Sharp,
    #[serde(rename = "F")]
    Flat,
    #[serde(rename = "c")]
    Commutator,
    #[serde(rename = "T")]
    Pixley,
    Conj,
    Impl,
}

impl OpId {
    pub const ALL: [OpId; 6] = [
        OpId::Sharp,
        OpId::Flat,
        OpId::Commutator,
        OpId::Pixley,
        OpId::Conj,
        OpId::Impl,
    ];

    pub fn arity(self) -> usize {
        match self {
            OpId::Pixley => 3,
            _ => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            OpId::Sharp => "S",
            OpId::Flat => "F",
            OpId::Commutator => "c",
            OpId::Pixley => "T",
            OpId::Conj => "conj",
            OpId::Impl => "impl",
        }
    }

    pub fn parse(s: &str) -> Option<OpId> {
        OpId::ALL.into_iter().find(|op| op.as_str() == s)
    }

    fn slot(self) -> usize {
        self as usize
    }

    fn eval(self, o: &OrthoPoset, args: &[ElementId]) -> SubsetMask {
        match self {
            OpId::Sharp => sharp(o, args[0], args[1]),
            OpId::Flat => flat(o, args[0], args[1]),
            OpId::Commutator => commutator(o, args[0], args[1]),
            OpId::Pixley => pixley(o, args[0], args[1], args[2]),
            OpId::Conj => sharp_conj(o, SubsetMask::singleton(args[0]), args[1]),
            OpId::Impl => sharp_impl(o, args[0], args[1]),
        }
    }
}

impl fmt::Display for OpId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Full table of one operator over every argument tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorTable {
    op: OpId,
    n: usize,
    entries: Vec<SubsetMask>,
}

impl OperatorTable {
    pub fn compute(o: &OrthoPoset, op: OpId) -> Self {
        let n = o.len();
        let size = n.pow(op.arity() as u32);
        let mut entries = Vec::with_capacity(size);
        let mut args = vec![ElementId(0); op.arity()];
        for idx in 0..size {
            let mut rest = idx;
            for slot in args.iter_mut().rev() {
                *slot = ElementId(rest % n);
                rest /= n;
            }
            entries.push(op.eval(o, &args));
        }
        OperatorTable { op, n, entries }
    }

    pub fn op(&self) -> OpId {
        self.op
    }

    pub fn arity(&self) -> usize {
        self.op.arity()
    }

    /// Entry for an argument tuple of the table's arity.
    pub fn get(&self, args: &[ElementId]) -> SubsetMask {
        assert_eq!(args.len(), self.arity(), "wrong arity for {}", self.op);
        let idx = args.iter().fold(0, |acc, a| acc * self.n + a.0);
        self.entries[idx]
    }

    /// `(arguments, value)` rows in lexicographic argument order.
    pub fn rows(&self) -> impl Iterator<Item = (Vec<ElementId>, SubsetMask)> + '_ {
        let (n, k) = (self.n, self.arity());
        self.entries.iter().enumerate().map(move |(idx, &v)| {
            let mut args = vec![ElementId(0); k];
            let mut rest = idx;
            for slot in args.iter_mut().rev() {
                *slot = ElementId(rest % n);
                rest /= n;
            }
            (args, v)
        })
    }
}

/// Lazily filled operator tables attached to an orthoposet.
#[derive(Clone, Default)]
pub(crate) struct Memo {
    tables: [OnceLock<OperatorTable>; 6],
}

impl OrthoPoset {
    /// The memoized table for `op`, computed on first use.
    pub fn table(&self, op: OpId) -> &OperatorTable {
        self.memo.tables[op.slot()].get_or_init(|| OperatorTable::compute(self, op))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{benzene, example1, power_set};

    #[test]
    fn sharp_basics() {
        let o = example1(4).unwrap();
        let [z, a, b, ap] = o.ids(["0", "a", "b", "a'"]);
        assert_eq!(sharp(&o, z, a), o.up(a));
        assert_eq!(sharp(&o, a, ap), o.one_set());
        assert_eq!(sharp(&o, a, b), o.set(&["c'", "d'", "1"]));
        assert_eq!(sharp(&o, a, b), o.upper2(a, b));
    }

    #[test]
    fn flat_basics() {
        let o = example1(4).unwrap();
        let [a, b, ap] = o.ids(["a", "b", "a'"]);
        assert_eq!(flat(&o, a, ap), o.zero_set());
        assert_eq!(flat(&o, a, o.one()), o.down(a));
        assert_eq!(flat(&o, a, b), o.zero_set());
    }

    #[test]
    fn commutator_examples() {
        let o = example1(4).unwrap();
        let [a, b] = o.ids(["a", "b"]);
        assert_eq!(commutator(&o, a, b), o.one_set());
        let hex = benzene();
        let [a, b] = hex.ids(["a", "b"]);
        assert_eq!(commutator(&hex, a, b), hex.one_set());
    }

    #[test]
    fn compatibility_is_not_symmetric_on_hexagon() {
        let o = benzene();
        let [a, b] = o.ids(["a", "b"]);
        assert!(compatible(&o, a, b));
        assert!(!compatible(&o, b, a));
    }

    #[test]
    fn pixley_examples() {
        let o = example1(4).unwrap();
        let [a, c] = o.ids(["a", "c"]);
        assert_eq!(pixley(&o, a, a, c), o.single(c));
        for x in o.elements() {
            for y in o.elements() {
                assert_eq!(pixley(&o, x, y, x), o.single(x));
            }
        }
    }

    #[test]
    fn conjunction_examples() {
        let o = power_set(2).unwrap();
        let [a, b] = o.ids(["a", "b"]);
        assert_eq!(sharp_conj(&o, o.single(a), b), o.zero_set());
        for x in o.elements() {
            assert_eq!(sharp_conj(&o, o.single(x), o.one()), o.single(x));
            assert_eq!(sharp_conj(&o, o.single(x), o.zero()), o.zero_set());
        }
    }

    #[test]
    fn conjunction_is_boolean_meet_on_power_set() {
        // oracle: elements of power_set(k) are labelled by their member letters
        let o = power_set(3).unwrap();
        let letters = |e: ElementId| -> u32 { e.0 as u32 };
        for x in o.elements() {
            for y in o.elements() {
                let meet = ElementId((letters(x) & letters(y)) as usize);
                assert_eq!(sharp_conj(&o, o.single(x), y), o.single(meet));
            }
        }
    }

    #[test]
    fn implication_examples() {
        let o = power_set(2).unwrap();
        let [a, b] = o.ids(["a", "b"]);
        assert_eq!(sharp_impl(&o, a, b), o.single(o.prime(a)));
        for x in o.elements() {
            assert_eq!(sharp_impl(&o, x, x), o.one_set());
            assert_eq!(sharp_impl(&o, o.zero(), x), o.one_set());
        }
    }

    #[test]
    fn tables_match_direct_evaluation() {
        let o = benzene();
        for op in OpId::ALL {
            let t = o.table(op);
            let fresh = OperatorTable::compute(&o, op);
            assert_eq!(t, &fresh);
            for (args, v) in t.rows() {
                assert_eq!(op.eval(&o, &args), v);
            }
        }
        let [a, b] = o.ids(["a", "b"]);
        assert_eq!(o.table(OpId::Sharp).get(&[a, b]), sharp(&o, a, b));
    }
}
