//! Decides where an orthoposet sits in the hierarchy
//! lattice / orthomodular / skew orthomodular / strong skew orthomodular /
//! Boolean, and whether the residuation conditions hold.
//!
//! Each check scans pairs (or triples, or subsets) in index order and
//! reports the first counterexample it meets. [`Checker::all_witnesses`]
//! collects every counterexample instead.

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mask::{subsets, ElementId, SubsetMask};
use crate::ortho::OrthoPoset;

/// Largest universe the all-subsets quantification runs on.
pub const ALL_SUBSETS_LIMIT: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Lattice,
    Orthomodular,
    SkewOmp,
    StrongSkewOmp,
    Boolean,
    Cond1,
    Cond2,
    AdjointConditions,
    Lemma1,
}

impl Property {
    pub const ALL: [Property; 9] = [
        Property::Lattice,
        Property::Orthomodular,
        Property::SkewOmp,
        Property::StrongSkewOmp,
        Property::Boolean,
        Property::Cond1,
        Property::Cond2,
        Property::AdjointConditions,
        Property::Lemma1,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Property::Lattice => "lattice",
            Property::Orthomodular => "orthomodular",
            Property::SkewOmp => "skew_omp",
            Property::StrongSkewOmp => "strong_skew_omp",
            Property::Boolean => "boolean",
            Property::Cond1 => "cond1",
            Property::Cond2 => "cond2",
            Property::AdjointConditions => "adjoint_conditions",
            Property::Lemma1 => "lemma1",
        }
    }

    /// Accepts the report id as well as the short command-line spelling
    /// (`somp`, `strong-somp`, `adjoint`, ...).
    pub fn parse(s: &str) -> Option<Property> {
        let norm = s.replace('-', "_");
        let p = match norm.as_str() {
            "somp" => Property::SkewOmp,
            "strong_somp" => Property::StrongSkewOmp,
            "adjoint" => Property::AdjointConditions,
            other => return Property::ALL.into_iter().find(|p| p.as_str() == other),
        };
        Some(p)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A counterexample: the offending elements plus the cone sets that differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub elements: Vec<ElementId>,
    pub sets: Vec<(String, SubsetMask)>,
    pub note: String,
}

impl Witness {
    pub fn new(elements: impl Into<Vec<ElementId>>, note: impl Into<String>) -> Self {
        Witness {
            elements: elements.into(),
            sets: Vec::new(),
            note: note.into(),
        }
    }

    pub fn set(mut self, name: impl Into<String>, mask: SubsetMask) -> Self {
        self.sets.push((name.into(), mask));
        self
    }

    /// Looks up a named set attached to the witness.
    pub fn get(&self, name: &str) -> Option<SubsetMask> {
        self.sets.iter().find(|(n, _)| n == name).map(|&(_, m)| m)
    }
}

/// Verdict of one structural property.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub property: Property,
    pub holds: bool,
    pub witnesses: Vec<Witness>,
    pub mode: String,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn first_witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }
}

/// Quantification used by [`Checker::strong_skew_omp`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SubsetMode {
    AllSubsets,
    #[default]
    Antichains,
}

impl SubsetMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SubsetMode::AllSubsets => "subsets",
            SubsetMode::Antichains => "antichains",
        }
    }
}

/// Which distributive identity [`Checker::boolean`] evaluates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum IdentitySelect {
    One(u8),
    #[default]
    All,
}

/// Accumulates witnesses, stopping after the first unless asked for all.
#[derive(Debug)]
pub(crate) struct Collector {
    all: bool,
    pub(crate) found: Vec<Witness>,
}

impl Collector {
    pub(crate) fn new(all: bool) -> Self {
        Collector { all, found: Vec::new() }
    }

    /// Records a witness; returns `true` when scanning should stop.
    pub(crate) fn push(&mut self, w: Witness) -> bool {
        self.found.push(w);
        !self.all
    }

    pub(crate) fn done(&self) -> bool {
        !self.all && !self.found.is_empty()
    }

    pub(crate) fn finish(mut self) -> Vec<Witness> {
        if self.all {
            self.found.sort_by(|a, b| a.elements.cmp(&b.elements));
        }
        self.found
    }
}

/// Runs structural checks on one orthoposet.
#[derive(Clone, Copy)]
pub struct Checker<'a> {
    o: &'a OrthoPoset,
    all: bool,
}

impl<'a> Checker<'a> {
    pub fn new(o: &'a OrthoPoset) -> Self {
        Checker { o, all: false }
    }

    /// Report every counterexample rather than the first.
    pub fn all_witnesses(mut self) -> Self {
        self.all = true;
        self
    }

    fn report(&self, property: Property, mode: &str, start: Instant, c: Collector) -> CheckReport {
        let witnesses = c.finish();
        CheckReport {
            property,
            holds: witnesses.is_empty(),
            witnesses,
            mode: mode.to_string(),
            notes: Vec::new(),
            elapsed: start.elapsed(),
        }
    }

    /// Dispatches on `property` with default modes.
    pub fn check(&self, property: Property) -> Result<CheckReport> {
        Ok(match property {
            Property::Lattice => self.lattice(),
            Property::Orthomodular => self.orthomodular(),
            Property::SkewOmp => self.skew_omp(),
            Property::StrongSkewOmp => self.strong_skew_omp(SubsetMode::Antichains)?,
            Property::Boolean => self.boolean(IdentitySelect::All),
            Property::Cond1 => self.cond1(),
            Property::Cond2 => self.cond2(),
            Property::AdjointConditions => self.adjoint_conditions(),
            Property::Lemma1 => self.lemma1_violation(),
        })
    }

    /// Every pair has a join and a meet.
    pub fn lattice(&self) -> CheckReport {
        let (o, start) = (self.o, Instant::now());
        let mut c = Collector::new(self.all);
        'scan: for x in o.elements() {
            for y in o.elements().filter(|&y| y > x) {
                let ub = o.upper2(x, y);
                let mins = o.min(ub);
                if mins.len() != 1 && c.push(Witness::new([x, y], "no join").set("Min U(x,y)", mins)) {
                    break 'scan;
                }
                let lb = o.lower2(x, y);
                let maxs = o.max(lb);
                if maxs.len() != 1 && c.push(Witness::new([x, y], "no meet").set("Max L(x,y)", maxs)) {
                    break 'scan;
                }
            }
        }
        self.report(Property::Lattice, "pairs", start, c)
    }

    /// Orthogonal pairs have joins, and `x <= y` implies
    /// `y = x ∨ (y ∧ x')`.
    pub fn orthomodular(&self) -> CheckReport {
        let (o, start) = (self.o, Instant::now());
        let p = o.poset();
        let mut c = Collector::new(self.all);
        'a: for x in o.elements() {
            for y in o.elements().filter(|&y| y >= x) {
                if o.orthogonal(x, y) && p.join(x, y).is_none() {
                    let w = Witness::new([x, y], "orthogonal pair without join")
                        .set("U(x,y)", o.upper2(x, y))
                        .set("Min U(x,y)", o.min(o.upper2(x, y)));
                    if c.push(w) {
                        break 'a;
                    }
                }
            }
        }
        if !c.done() {
            'b: for x in o.elements() {
                for y in o.up(x).iter() {
                    let xp = o.prime(x);
                    let w = match p.meet(y, xp) {
                        None => Some(
                            Witness::new([x, y, xp], "y ∧ x' does not exist")
                                .set("Max L(y,x')", o.max(o.lower2(y, xp))),
                        ),
                        Some(m) => match p.join(x, m) {
                            Some(j) if j == y => None,
                            Some(j) => Some(
                                Witness::new([x, y, xp], "x ∨ (y ∧ x') differs from y")
                                    .set("y ∧ x'", o.single(m))
                                    .set("x ∨ (y ∧ x')", o.single(j)),
                            ),
                            None => Some(
                                Witness::new([x, y, xp], "x ∨ (y ∧ x') does not exist")
                                    .set("y ∧ x'", o.single(m))
                                    .set("Min U(x, y ∧ x')", o.min(o.upper2(x, m))),
                            ),
                        },
                    };
                    if let Some(w) = w {
                        if c.push(w) {
                            break 'b;
                        }
                    }
                }
            }
        }
        self.report(Property::Orthomodular, "pairs", start, c)
    }

    /// `x <= y` implies `U(y) = U(x, L(y, x'))`.
    pub fn skew_omp(&self) -> CheckReport {
        let (o, start) = (self.o, Instant::now());
        let mut c = Collector::new(self.all);
        'scan: for x in o.elements() {
            for y in o.up(x).iter() {
                let lhs = o.up(y);
                let rhs = o.upper(o.lower2(y, o.prime(x)).with(x));
                if lhs != rhs {
                    let w = Witness::new([x, y], "U(y) != U(x,L(y,x'))")
                        .set("U(y)", lhs)
                        .set("U(x,L(y,x'))", rhs);
                    if c.push(w) {
                        break 'scan;
                    }
                }
            }
        }
        self.report(Property::SkewOmp, "upper form", start, c)
    }

    /// The lower-cone form: `x <= y` implies `L(x) = L(y, U(x, y'))`.
    pub fn skew_omp_lower_form(&self) -> CheckReport {
        let (o, start) = (self.o, Instant::now());
        let mut c = Collector::new(self.all);
        'scan: for x in o.elements() {
            for y in o.up(x).iter() {
                let lhs = o.down(x);
                let rhs = o.lower(o.upper2(x, o.prime(y)).with(y));
                if lhs != rhs {
                    let w = Witness::new([x, y], "L(x) != L(y,U(x,y'))")
                        .set("L(x)", lhs)
                        .set("L(y,U(x,y'))", rhs);
                    if c.push(w) {
                        break 'scan;
                    }
                }
            }
        }
        self.report(Property::SkewOmp, "lower form", start, c)
    }

    /// `A <= y` implies `U(y) = U(A, L(y, A'))`, for every subset `A` or
    /// only for antichains.
    pub fn strong_skew_omp(&self, mode: SubsetMode) -> Result<CheckReport> {
        let (o, start) = (self.o, Instant::now());
        let mut c = Collector::new(self.all);
        let mut visit = |a: SubsetMask| -> bool {
            let lower_primes = o.lower(o.prime_set(a));
            for y in o.upper(a).iter() {
                let lhs = o.up(y);
                let rhs = o.upper(a | (o.down(y) & lower_primes));
                if lhs != rhs {
                    let mut elements: Vec<ElementId> = a.iter().collect();
                    elements.push(y);
                    let w = Witness::new(elements, "U(y) != U(A,L(y,A'))")
                        .set("A", a)
                        .set("U(y)", lhs)
                        .set("U(A,L(y,A'))", rhs);
                    if c.push(w) {
                        return true;
                    }
                }
            }
            false
        };
        match mode {
            SubsetMode::AllSubsets => {
                if o.len() > ALL_SUBSETS_LIMIT {
                    return Err(Error::SizeLimitExceeded {
                        what: "all-subsets quantification",
                        limit: ALL_SUBSETS_LIMIT,
                        got: o.len(),
                    });
                }
                for a in subsets(o.universe()) {
                    if visit(a) {
                        break;
                    }
                }
            }
            SubsetMode::Antichains => {
                for_each_antichain(o, &mut visit);
            }
        }
        Ok(self.report(Property::StrongSkewOmp, mode.as_str(), start, c))
    }

    /// Distributivity in cone form; `All` evaluates the four identities and
    /// notes whether their verdicts agree.
    pub fn boolean(&self, which: IdentitySelect) -> CheckReport {
        let (o, start) = (self.o, Instant::now());
        let ids: Vec<u8> = match which {
            IdentitySelect::One(k) => vec![k],
            IdentitySelect::All => vec![1, 2, 3, 4],
        };
        let mut witnesses = Vec::new();
        let mut notes = Vec::new();
        let mut verdicts = Vec::new();
        for &k in &ids {
            let mut c = Collector::new(self.all);
            'scan: for x in o.elements() {
                for y in o.elements() {
                    for z in o.elements() {
                        let (lhs, rhs) = distributive_sides(o, k, x, y, z);
                        if lhs != rhs {
                            let w = Witness::new([x, y, z], format!("identity {k}"))
                                .set("lhs", lhs)
                                .set("rhs", rhs);
                            if c.push(w) {
                                break 'scan;
                            }
                        }
                    }
                }
            }
            let found = c.finish();
            verdicts.push(found.is_empty());
            notes.push(format!(
                "identity {k}: {}",
                if found.is_empty() { "holds" } else { "fails" }
            ));
            witnesses.extend(found);
        }
        if ids.len() > 1 {
            let agree = verdicts.iter().all(|&v| v == verdicts[0]);
            notes.push(format!("identities {}", if agree { "agree" } else { "disagree" }));
        }
        let mode = match which {
            IdentitySelect::One(k) => format!("identity {k}"),
            IdentitySelect::All => "all identities".to_string(),
        };
        CheckReport {
            property: Property::Boolean,
            holds: witnesses.is_empty(),
            witnesses,
            mode,
            notes,
            elapsed: start.elapsed(),
        }
    }

    fn cond1_scan(&self, c: &mut Collector) {
        let o = self.o;
        'scan: for x in o.elements() {
            for y in o.elements() {
                let inner = o.upper(o.lower2(x, y).with(o.prime(y)));
                let lhs = o.lower(inner) & o.down(y);
                if !lhs.is_subset(o.down(x)) {
                    let w = Witness::new([x, y], "cond1: L(U(L(x,y),y'),y) not within L(x)")
                        .set("L(U(L(x,y),y'),y)", lhs)
                        .set("L(x)", o.down(x));
                    if c.push(w) {
                        break 'scan;
                    }
                }
            }
        }
    }

    fn cond2_scan(&self, c: &mut Collector) {
        let o = self.o;
        'scan: for x in o.elements() {
            for y in o.elements() {
                let inner = o.lower(o.upper2(x, y).with(o.prime(y)));
                let lhs = o.upper(inner) & o.up(y);
                if !lhs.is_subset(o.up(x)) {
                    let w = Witness::new([x, y], "cond2: U(L(U(x,y),y'),y) not within U(x)")
                        .set("U(L(U(x,y),y'),y)", lhs)
                        .set("U(x)", o.up(x));
                    if c.push(w) {
                        break 'scan;
                    }
                }
            }
        }
    }

    /// `L(U(L(x,y), y'), y) ⊆ L(x)` for all `x, y`.
    pub fn cond1(&self) -> CheckReport {
        let start = Instant::now();
        let mut c = Collector::new(self.all);
        self.cond1_scan(&mut c);
        self.report(Property::Cond1, "pairs", start, c)
    }

    /// `U(L(U(x,y), y'), y) ⊆ U(x)` for all `x, y`.
    pub fn cond2(&self) -> CheckReport {
        let start = Instant::now();
        let mut c = Collector::new(self.all);
        self.cond2_scan(&mut c);
        self.report(Property::Cond2, "pairs", start, c)
    }

    /// Both residuation conditions; witnesses are tagged `cond1`/`cond2`.
    pub fn adjoint_conditions(&self) -> CheckReport {
        let start = Instant::now();
        let mut c1 = Collector::new(self.all);
        self.cond1_scan(&mut c1);
        let mut c2 = Collector::new(self.all);
        self.cond2_scan(&mut c2);
        let (w1, w2) = (c1.finish(), c2.finish());
        let notes = vec![
            format!("cond1: {}", if w1.is_empty() { "holds" } else { "fails" }),
            format!("cond2: {}", if w2.is_empty() { "holds" } else { "fails" }),
        ];
        let witnesses: Vec<Witness> = w1.into_iter().chain(w2).collect();
        CheckReport {
            property: Property::AdjointConditions,
            holds: witnesses.is_empty(),
            witnesses,
            mode: "pairs".into(),
            notes,
            elapsed: start.elapsed(),
        }
    }

    /// Looks for `a < b` with `L(b, a') = {0}` or `U(a, b') = {1}`: the
    /// hexagon obstruction that no skew orthomodular poset contains.
    pub fn lemma1_violation(&self) -> CheckReport {
        let (o, start) = (self.o, Instant::now());
        let mut c = Collector::new(self.all);
        'scan: for a in o.elements() {
            for b in o.up(a).iter().filter(|&b| b != a) {
                let l = o.lower2(b, o.prime(a));
                if l == o.zero_set() && c.push(Witness::new([a, b], "a < b and L(b,a') = {0}").set("L(b,a')", l)) {
                    break 'scan;
                }
                let u = o.upper2(a, o.prime(b));
                if u == o.one_set() && c.push(Witness::new([a, b], "a < b and U(a,b') = {1}").set("U(a,b')", u)) {
                    break 'scan;
                }
            }
        }
        self.report(Property::Lemma1, "pairs", start, c)
    }
}

/// Both sides of distributive identity `k` (1 to 4) at `(x, y, z)`:
///
/// 1. `L(U(x,y), z) = LU(L(x,z), L(y,z))`
/// 2. `UL(U(x,y), z) = U(L(x,z), L(y,z))`
/// 3. `U(L(x,y), z) = UL(U(x,z), U(y,z))`
/// 4. `LU(L(x,y), z) = L(U(x,z), U(y,z))`
pub fn distributive_sides(o: &OrthoPoset, k: u8, x: ElementId, y: ElementId, z: ElementId) -> (SubsetMask, SubsetMask) {
    match k {
        1 => (
            o.lower(o.upper2(x, y).with(z)),
            o.lower(o.upper(o.lower2(x, z) | o.lower2(y, z))),
        ),
        2 => (
            o.upper(o.lower(o.upper2(x, y).with(z))),
            o.upper(o.lower2(x, z) | o.lower2(y, z)),
        ),
        3 => (
            o.upper(o.lower2(x, y).with(z)),
            o.upper(o.lower(o.upper2(x, z) | o.upper2(y, z))),
        ),
        4 => (
            o.lower(o.upper(o.lower2(x, y).with(z))),
            o.lower(o.upper2(x, z) | o.upper2(y, z)),
        ),
        _ => panic!("distributive identity {k} does not exist"),
    }
}

/// Calls `visit` on every antichain (the empty one first), extending in
/// index order. Stops early when `visit` returns `true`.
pub fn for_each_antichain(o: &OrthoPoset, mut visit: impl FnMut(SubsetMask) -> bool) {
    fn extend(
        o: &OrthoPoset,
        current: SubsetMask,
        candidates: SubsetMask,
        visit: &mut dyn FnMut(SubsetMask) -> bool,
    ) -> bool {
        if visit(current) {
            return true;
        }
        for x in candidates.iter() {
            let later = SubsetMask::from_bits(candidates.bits() & !((2u64 << x.0) - 1));
            let incomparable = (o.down(x) | o.up(x)).complement_in(o.universe());
            if extend(o, current.with(x), later & incomparable, visit) {
                return true;
            }
        }
        false
    }
    extend(o, SubsetMask::EMPTY, o.universe(), &mut visit);
}

/// All antichains, in the order [`for_each_antichain`] visits them.
pub fn antichains(o: &OrthoPoset) -> Vec<SubsetMask> {
    let mut out = Vec::new();
    for_each_antichain(o, |a| {
        out.push(a);
        false
    });
    out
}

pub fn check_lattice(o: &OrthoPoset) -> CheckReport {
    Checker::new(o).lattice()
}

pub fn check_orthomodular(o: &OrthoPoset) -> CheckReport {
    Checker::new(o).orthomodular()
}

pub fn check_skew_omp(o: &OrthoPoset) -> CheckReport {
    Checker::new(o).skew_omp()
}

pub fn check_strong_skew_omp(o: &OrthoPoset, mode: SubsetMode) -> Result<CheckReport> {
    Checker::new(o).strong_skew_omp(mode)
}

pub fn check_boolean(o: &OrthoPoset, which: IdentitySelect) -> CheckReport {
    Checker::new(o).boolean(which)
}

pub fn check_adjoint_conditions(o: &OrthoPoset) -> CheckReport {
    Checker::new(o).adjoint_conditions()
}

pub fn find_lemma1_violation(o: &OrthoPoset) -> CheckReport {
    Checker::new(o).lemma1_violation()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{benzene, example1, fig3, power_set};

    fn labels(o: &OrthoPoset, w: &Witness) -> Vec<String> {
        w.elements.iter().map(|&e| o.label(e).to_string()).collect()
    }

    #[test]
    fn lattice_verdicts() {
        assert!(check_lattice(&power_set(3).unwrap()).holds);
        assert!(check_lattice(&benzene()).holds);
        let o = example1(4).unwrap();
        let r = check_lattice(&o);
        assert!(!r.holds);
        let w = r.first_witness().unwrap();
        assert_eq!(labels(&o, w), ["a", "b"]);
        assert_eq!(w.get("Min U(x,y)"), Some(o.set(&["c'", "d'"])));
    }

    #[test]
    fn orthomodular_verdicts() {
        let o = example1(2).unwrap();
        let r = check_orthomodular(&o);
        assert!(!r.holds);
        let w = r.first_witness().unwrap();
        assert_eq!(labels(&o, w), ["a", "b'", "a'"]);
        assert_eq!(w.get("y ∧ x'"), Some(o.zero_set()));
        assert_eq!(w.get("x ∨ (y ∧ x')"), Some(o.set(&["a"])));

        let o = example1(4).unwrap();
        let w = check_orthomodular(&o).witnesses.remove(0);
        assert_eq!(labels(&o, &w), ["a", "b"]);
        assert_eq!(w.get("U(x,y)"), Some(o.set(&["c'", "d'", "1"])));

        for k in 1..=4 {
            assert!(check_orthomodular(&power_set(k).unwrap()).holds);
        }
    }

    #[test]
    fn skew_omp_verdicts() {
        let o = benzene();
        let r = check_skew_omp(&o);
        let w = r.first_witness().unwrap();
        assert_eq!(labels(&o, w), ["a", "b"]);
        assert_eq!(w.get("U(y)"), Some(o.set(&["b", "1"])));
        assert_eq!(w.get("U(x,L(y,x'))"), Some(o.set(&["a", "b", "1"])));
        assert!(check_skew_omp(&example1(4).unwrap()).holds);
        assert!(Checker::new(&o).skew_omp_lower_form().holds == r.holds);
    }

    #[test]
    fn strong_skew_both_modes() {
        for n in 0..=6 {
            let o = example1(n).unwrap();
            for mode in [SubsetMode::AllSubsets, SubsetMode::Antichains] {
                // example1(2) is the hexagon
                assert_eq!(check_strong_skew_omp(&o, mode).unwrap().holds, n != 2, "n={n} {mode:?}");
            }
        }
        let hex = benzene();
        assert!(!check_strong_skew_omp(&hex, SubsetMode::Antichains).unwrap().holds);
        assert!(!check_strong_skew_omp(&hex, SubsetMode::AllSubsets).unwrap().holds);
        let big = example1(7).unwrap();
        assert!(matches!(
            check_strong_skew_omp(&big, SubsetMode::AllSubsets),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn boolean_verdicts() {
        let r = check_boolean(&power_set(3).unwrap(), IdentitySelect::All);
        assert!(r.holds);
        assert!(r.notes.contains(&"identities agree".to_string()));
        assert!(check_boolean(&example1(3).unwrap(), IdentitySelect::All).holds);
        assert!(check_boolean(&example1(4).unwrap(), IdentitySelect::All).holds);
        let r = check_boolean(&example1(2).unwrap(), IdentitySelect::One(1));
        assert!(!r.holds);
        assert_eq!(r.witnesses[0].elements.len(), 3);
    }

    #[test]
    fn fig3_fails_distributivity_at_a_a_prime_c() {
        let o = fig3();
        let [a, ap, c] = o.ids(["a", "a'", "c"]);
        let (lhs, rhs) = distributive_sides(&o, 2, a, ap, c);
        assert_eq!(lhs, o.up(c));
        assert_eq!(rhs, o.universe());
    }

    #[test]
    fn adjoint_conditions_on_boolean() {
        for k in 1..=4 {
            assert!(check_adjoint_conditions(&power_set(k).unwrap()).holds);
        }
    }

    #[test]
    fn hexagon_is_the_lemma1_obstruction() {
        let o = benzene();
        let r = find_lemma1_violation(&o);
        assert_eq!(labels(&o, r.first_witness().unwrap()), ["a", "b"]);
        assert!(find_lemma1_violation(&example1(4).unwrap()).holds);
        assert!(find_lemma1_violation(&power_set(3).unwrap()).holds);
    }

    #[test]
    fn antichains_of_example1() {
        // antichains: empty, singletons, non-empty subsets of A and of A'
        // with at least two members, and pairs {x, x'}
        for n in 0..=5usize {
            let o = example1(n).unwrap();
            let count = antichains(&o).len();
            let expected = 1 + (2 * n + 2) + 2 * ((1usize << n) - 1 - n) + n;
            assert_eq!(count, expected, "n={n}");
            assert!(antichains(&o).iter().all(|&a| o.poset().is_antichain(a)));
        }
    }

    #[test]
    fn all_witnesses_collects_more() {
        let o = benzene();
        let first = Checker::new(&o).skew_omp();
        let all = Checker::new(&o).all_witnesses().skew_omp();
        assert_eq!(first.witnesses.len(), 1);
        assert!(all.witnesses.len() > 1);
        assert_eq!(all.witnesses[0], first.witnesses[0]);
    }

    #[test]
    fn property_names_parse() {
        for p in Property::ALL {
            assert_eq!(Property::parse(p.as_str()), Some(p));
        }
        assert_eq!(Property::parse("strong-somp"), Some(Property::StrongSkewOmp));
        assert_eq!(Property::parse("somp"), Some(Property::SkewOmp));
        assert_eq!(Property::parse("nope"), None);
    }
}
