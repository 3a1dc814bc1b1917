//! Quantified law suites over a single orthoposet.
//!
//! Every law is evaluated exhaustively over all pairs or triples (or all
//! subsets, for the join law) and yields a [`LawReport`]. Laws with a
//! structural hypothesis are gated on the matching check from
//! [`crate::checks`]; in [`RunMode::Informational`] they are evaluated
//! anyway and their counterexamples are tagged `outside hypothesis`.

use std::fmt;

use serde::Serialize;

use crate::checks::{Checker, Collector, SubsetMode, Witness, ALL_SUBSETS_LIMIT};
use crate::error::{Error, Result};
use crate::mask::{subsets, ElementId};
use crate::ops::{commutator, compatible, flat, pixley, sharp, sharp_conj, OpId};
use crate::ortho::OrthoPoset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LawId {
    /// The commutator is unchanged by priming either argument or swapping them.
    CommutatorInvariance,
    /// `a C b` iff `a C b'`.
    CompatibilityPrime,
    /// `S` and `F` are symmetric.
    SharpFlatSymmetry,
    /// `F(a,b) = S(a',b')'` and `S(a,b) = F(a',b')'`.
    SharpFlatDuality,
    /// Values of `S` at bounds, at `a`, and at `a'`.
    SharpBoundaryValues,
    /// Values of `F` at bounds, at `a`, and at `a'`.
    FlatBoundaryValues,
    /// `U(a,b) ⊆ S(a,b)` and `L(a,b) ⊆ F(a,b)`.
    ConeInclusion,
    /// `c(a,b) = S(a,b) ∩ UL(a',b')` and `c(a,b)' = F(a,b) ∩ LU(a',b')`.
    CommutatorSplit,
    /// Consequences of `a <= b` for `C` and `c`.
    ComparableCompatible,
    /// Orthogonal arguments make `S` (resp. `F`) a cone.
    OrthogonalCones,
    /// Mutual compatibility makes `S(a,b) = U(a,b)`.
    MutualSharp,
    /// Mutual compatibility of the primes makes `F(a,b) = L(a,b)`.
    MutualFlat,
    /// `a C b` and `a' C b'` force `c(a,b) = {1}`.
    CommutatorOne,
    /// In skew orthomodular posets `a <= b` gives `S = U(b)`, `F = L(a)`, `c = {1}`.
    SkewComparable,
    /// In strong skew orthomodular posets `a C b`, `b C a`, `c(a,b) = {1}` coincide.
    CompatibilityCommutator,
    /// Symmetric compatibility forces skew orthomodularity.
    SymmetricCompatibility,
    /// `T(x,y,x) = {x}` in every orthoposet.
    PixleyProjection,
    /// The three Pixley identities for `T` are equivalent to the cone identity.
    PixleyEquivalence,
    /// Boolean posets satisfy the Pixley identities.
    PixleyBoolean,
    /// Under the residuation conditions, `a ⊙ b <= c` iff `a <= b → c`.
    Adjointness,
    /// Boolean posets satisfy the residuation conditions.
    AdjointBoolean,
    /// `(x → y) ⊙ x <= y`.
    ModusPonens,
    /// In strong skew orthomodular posets, `A <= a` and `L(a,A') = {0}` give `⋁A = a`.
    StrongJoin,
    /// Boolean posets are skew orthomodular with total compatibility.
    BooleanCompatibility,
}

impl LawId {
    pub fn as_str(self) -> &'static str {
        match self {
            LawId::CommutatorInvariance => "prop1_i",
            LawId::CompatibilityPrime => "prop1_ii",
            LawId::SharpFlatSymmetry => "prop1_iii",
            LawId::SharpFlatDuality => "prop1_iv",
            LawId::SharpBoundaryValues => "prop1_v",
            LawId::FlatBoundaryValues => "prop1_vi",
            LawId::ConeInclusion => "prop1_vii",
            LawId::CommutatorSplit => "prop1_viii",
            LawId::ComparableCompatible => "prop1_ix",
            LawId::OrthogonalCones => "prop1_x",
            LawId::MutualSharp => "prop1_xi",
            LawId::MutualFlat => "prop1_xii",
            LawId::CommutatorOne => "prop1_xiii",
            LawId::SkewComparable => "prop2",
            LawId::CompatibilityCommutator => "thm1",
            LawId::SymmetricCompatibility => "symmetry_prop",
            LawId::PixleyProjection => "pixley_xyx",
            LawId::PixleyEquivalence => "prop3",
            LawId::PixleyBoolean => "pixley_cor",
            LawId::Adjointness => "thm2",
            LawId::AdjointBoolean => "adjoint_cor",
            LawId::ModusPonens => "modus_ponens",
            LawId::StrongJoin => "lemma_strong_join",
            LawId::BooleanCompatibility => "boolean_lemma",
        }
    }
}

impl Serialize for LawId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How an ambiguous statement was read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reading {
    /// Exactly as written.
    Literal,
    /// `Min` applied to both sides of the cone identity.
    MinBothSides,
    /// Sharp conjunction applied to a set-valued left operand.
    Extended,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Checked,
    SkippedHypothesis,
    OutsideHypothesis,
    SkippedSize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RunMode {
    /// Skip laws whose hypothesis fails.
    #[default]
    Gated,
    /// Evaluate such laws anyway, tagging counterexamples.
    Informational,
}

#[derive(Clone, Debug)]
pub struct LawReport {
    pub law: LawId,
    pub applicable: bool,
    pub holds: bool,
    pub status: Status,
    pub reading: Option<Reading>,
    pub witnesses: Vec<Witness>,
}

impl LawReport {
    pub fn first_witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }

    fn with_reading(mut self, r: Reading) -> Self {
        self.reading = Some(r);
        self
    }
}

/// Groups of laws runnable on their own.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Prop1,
    Prop2,
    Thm1,
    Symmetry,
    Pixley,
    Adjointness,
    ModusPonens,
    StrongJoin,
    Boolean,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Prop1,
        Suite::Prop2,
        Suite::Thm1,
        Suite::Symmetry,
        Suite::Pixley,
        Suite::Adjointness,
        Suite::ModusPonens,
        Suite::StrongJoin,
        Suite::Boolean,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Prop1 => "prop1",
            Suite::Prop2 => "prop2",
            Suite::Thm1 => "thm1",
            Suite::Symmetry => "symmetry",
            Suite::Pixley => "prop3",
            Suite::Adjointness => "thm2",
            Suite::ModusPonens => "modus_ponens",
            Suite::StrongJoin => "strong_join",
            Suite::Boolean => "boolean",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        let norm = s.replace('-', "_");
        match norm.as_str() {
            "pixley" => Some(Suite::Pixley),
            "adjointness" => Some(Suite::Adjointness),
            other => Suite::ALL.into_iter().find(|x| x.as_str() == other),
        }
    }
}

/// Runs law suites on one orthoposet.
#[derive(Clone, Copy)]
pub struct Verifier<'a> {
    o: &'a OrthoPoset,
    mode: RunMode,
    all: bool,
}

type Scan<'s> = dyn FnMut(&mut Collector) + 's;

impl<'a> Verifier<'a> {
    pub fn new(o: &'a OrthoPoset) -> Self {
        Verifier {
            o,
            mode: RunMode::Gated,
            all: false,
        }
    }

    pub fn mode(mut self, mode: RunMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn informational(self) -> Self {
        self.mode(RunMode::Informational)
    }

    pub fn all_witnesses(mut self) -> Self {
        self.all = true;
        self
    }

    fn unconditional(&self, law: LawId, scan: &mut Scan<'_>) -> LawReport {
        let mut c = Collector::new(self.all);
        scan(&mut c);
        let witnesses = c.finish();
        LawReport {
            law,
            applicable: true,
            holds: witnesses.is_empty(),
            status: Status::Checked,
            reading: None,
            witnesses,
        }
    }

    fn gated(&self, law: LawId, applicable: bool, scan: &mut Scan<'_>) -> LawReport {
        if applicable {
            return self.unconditional(law, scan);
        }
        let mut report = LawReport {
            law,
            applicable: false,
            holds: true,
            status: Status::SkippedHypothesis,
            reading: None,
            witnesses: Vec::new(),
        };
        if self.mode == RunMode::Informational {
            let mut c = Collector::new(self.all);
            scan(&mut c);
            report.status = Status::OutsideHypothesis;
            report.witnesses = c
                .finish()
                .into_iter()
                .map(|mut w| {
                    w.note = format!("outside hypothesis: {}", w.note);
                    w
                })
                .collect();
        }
        report
    }

    pub fn run(&self, suite: Suite) -> Result<Vec<LawReport>> {
        Ok(match suite {
            Suite::Prop1 => self.prop1(),
            Suite::Prop2 => vec![self.prop2()],
            Suite::Thm1 => vec![self.theorem1()],
            Suite::Symmetry => vec![self.symmetry()],
            Suite::Pixley => self.pixley(),
            Suite::Adjointness => vec![self.adjointness(), self.adjoint_boolean()],
            Suite::ModusPonens => vec![self.modus_ponens()],
            Suite::StrongJoin => vec![self.strong_join()?],
            Suite::Boolean => vec![self.boolean_compatibility()],
        })
    }

    /// Every suite; the subset-scanning join law is reported as
    /// `skipped-size` on posets beyond its size limit.
    pub fn run_all(&self) -> Vec<LawReport> {
        let mut out = Vec::new();
        for suite in Suite::ALL {
            match self.run(suite) {
                Ok(r) => out.extend(r),
                Err(_) => out.push(LawReport {
                    law: LawId::StrongJoin,
                    applicable: false,
                    holds: true,
                    status: Status::SkippedSize,
                    reading: None,
                    witnesses: Vec::new(),
                }),
            }
        }
        out
    }

    /// The thirteen unconditional identities for `S`, `F`, `c` and `C`.
    pub fn prop1(&self) -> Vec<LawReport> {
        let o = self.o;
        let p = |x: ElementId| o.prime(x);
        let pairs = || o.elements().flat_map(move |a| o.elements().map(move |b| (a, b)));
        let each = |c: &mut Collector, f: &dyn Fn(ElementId, ElementId) -> Option<Witness>| {
            for (a, b) in pairs() {
                if let Some(w) = f(a, b) {
                    if c.push(w) {
                        return;
                    }
                }
            }
        };
        let fail = |a, b, note: &str| Some(Witness::new([a, b], note));
        let mut out = Vec::with_capacity(13);

        out.push(self.unconditional(LawId::CommutatorInvariance, &mut |c| {
            each(c, &|a, b| {
                let base = commutator(o, a, b);
                let variants = [
                    (a, p(b)),
                    (p(a), b),
                    (p(a), p(b)),
                    (b, a),
                    (b, p(a)),
                    (p(b), a),
                    (p(b), p(a)),
                ];
                variants
                    .iter()
                    .find(|&&(x, y)| commutator(o, x, y) != base)
                    .map(|&(x, y)| {
                        Witness::new([a, b, x, y], "c(a,b) != c(x,y)")
                            .set("c(a,b)", base)
                            .set("c(x,y)", commutator(o, x, y))
                    })
            })
        }));

        out.push(self.unconditional(LawId::CompatibilityPrime, &mut |c| {
            each(c, &|a, b| {
                (compatible(o, a, b) != compatible(o, a, p(b)))
                    .then(|| Witness::new([a, b], "a C b differs from a C b'"))
            })
        }));

        out.push(self.unconditional(LawId::SharpFlatSymmetry, &mut |c| {
            each(c, &|a, b| {
                if sharp(o, a, b) != sharp(o, b, a) {
                    fail(a, b, "S(a,b) != S(b,a)")
                } else if flat(o, a, b) != flat(o, b, a) {
                    fail(a, b, "F(a,b) != F(b,a)")
                } else {
                    None
                }
            })
        }));

        out.push(self.unconditional(LawId::SharpFlatDuality, &mut |c| {
            each(c, &|a, b| {
                if flat(o, a, b) != o.prime_set(sharp(o, p(a), p(b))) {
                    fail(a, b, "F(a,b) != S(a',b')'")
                } else if sharp(o, a, b) != o.prime_set(flat(o, p(a), p(b))) {
                    fail(a, b, "S(a,b) != F(a',b')'")
                } else {
                    None
                }
            })
        }));

        out.push(self.unconditional(LawId::SharpBoundaryValues, &mut |c| {
            let (zero, one) = (o.zero(), o.one());
            for a in o.elements() {
                let ua = o.up(a);
                let bad_up = [(zero, a), (a, zero), (a, a)]
                    .into_iter()
                    .find(|&(x, y)| sharp(o, x, y) != ua);
                let bad_one = [(a, p(a)), (a, one), (one, a)]
                    .into_iter()
                    .find(|&(x, y)| sharp(o, x, y) != o.one_set());
                if let Some((x, y)) = bad_up.or(bad_one) {
                    if c.push(
                        Witness::new([a, x, y], "S(x,y) has the wrong boundary value").set("S(x,y)", sharp(o, x, y)),
                    ) {
                        return;
                    }
                }
            }
        }));

        out.push(self.unconditional(LawId::FlatBoundaryValues, &mut |c| {
            let (zero, one) = (o.zero(), o.one());
            for a in o.elements() {
                let la = o.down(a);
                let bad_zero = [(zero, a), (a, zero), (a, p(a))]
                    .into_iter()
                    .find(|&(x, y)| flat(o, x, y) != o.zero_set());
                let bad_down = [(a, a), (a, one), (one, a)]
                    .into_iter()
                    .find(|&(x, y)| flat(o, x, y) != la);
                if let Some((x, y)) = bad_zero.or(bad_down) {
                    if c.push(
                        Witness::new([a, x, y], "F(x,y) has the wrong boundary value").set("F(x,y)", flat(o, x, y)),
                    ) {
                        return;
                    }
                }
            }
        }));

        out.push(self.unconditional(LawId::ConeInclusion, &mut |c| {
            each(c, &|a, b| {
                if !o.upper2(a, b).is_subset(sharp(o, a, b)) {
                    fail(a, b, "U(a,b) not within S(a,b)")
                } else if !o.lower2(a, b).is_subset(flat(o, a, b)) {
                    fail(a, b, "L(a,b) not within F(a,b)")
                } else {
                    None
                }
            })
        }));

        out.push(self.unconditional(LawId::CommutatorSplit, &mut |c| {
            each(c, &|a, b| {
                let cab = commutator(o, a, b);
                let (ap, bp) = (p(a), p(b));
                if cab != sharp(o, a, b) & o.upper(o.lower2(ap, bp)) {
                    fail(a, b, "c(a,b) != S(a,b) ∩ UL(a',b')")
                } else if o.prime_set(cab) != flat(o, a, b) & o.lower(o.upper2(ap, bp)) {
                    fail(a, b, "c(a,b)' != F(a,b) ∩ LU(a',b')")
                } else {
                    None
                }
            })
        }));

        out.push(self.unconditional(LawId::ComparableCompatible, &mut |c| {
            each(c, &|a, b| {
                if !o.leq(a, b) {
                    return None;
                }
                let cab = commutator(o, a, b);
                if !compatible(o, a, b) {
                    fail(a, b, "a <= b but not a C b")
                } else if !compatible(o, p(b), p(a)) {
                    fail(a, b, "a <= b but not b' C a'")
                } else if cab != sharp(o, a, b) & o.up(p(b)) {
                    fail(a, b, "c(a,b) != S(a,b) ∩ U(b')")
                } else if o.prime_set(cab) != flat(o, a, b) & o.down(p(a)) {
                    fail(a, b, "c(a,b)' != F(a,b) ∩ L(a')")
                } else {
                    None
                }
            })
        }));

        out.push(self.unconditional(LawId::OrthogonalCones, &mut |c| {
            each(c, &|a, b| {
                if o.orthogonal(a, b) && sharp(o, a, b) != o.upper2(a, b) {
                    fail(a, b, "a ⊥ b but S(a,b) != U(a,b)")
                } else if o.orthogonal(p(a), p(b)) && flat(o, a, b) != o.lower2(a, b) {
                    fail(a, b, "a' ⊥ b' but F(a,b) != L(a,b)")
                } else {
                    None
                }
            })
        }));

        out.push(self.unconditional(LawId::MutualSharp, &mut |c| {
            each(c, &|a, b| {
                (compatible(o, a, b) && compatible(o, b, a) && sharp(o, a, b) != o.upper2(a, b))
                    .then(|| Witness::new([a, b], "a C b, b C a but S(a,b) != U(a,b)"))
            })
        }));

        out.push(self.unconditional(LawId::MutualFlat, &mut |c| {
            each(c, &|a, b| {
                (compatible(o, p(a), p(b)) && compatible(o, p(b), p(a)) && flat(o, a, b) != o.lower2(a, b))
                    .then(|| Witness::new([a, b], "a' C b', b' C a' but F(a,b) != L(a,b)"))
            })
        }));

        out.push(self.unconditional(LawId::CommutatorOne, &mut |c| {
            each(c, &|a, b| {
                (compatible(o, a, b) && compatible(o, p(a), p(b)) && commutator(o, a, b) != o.one_set()).then(|| {
                    Witness::new([a, b], "a C b, a' C b' but c(a,b) != {1}").set("c(a,b)", commutator(o, a, b))
                })
            })
        }));

        out
    }

    /// Comparable pairs in a skew orthomodular poset.
    pub fn prop2(&self) -> LawReport {
        let o = self.o;
        let applicable = Checker::new(o).skew_omp().holds;
        self.gated(LawId::SkewComparable, applicable, &mut |c| {
            for a in o.elements() {
                for b in o.up(a).iter() {
                    let w = if sharp(o, a, b) != o.up(b) {
                        Some(Witness::new([a, b], "a <= b but S(a,b) != U(b)").set("S(a,b)", sharp(o, a, b)))
                    } else if flat(o, a, b) != o.down(a) {
                        Some(Witness::new([a, b], "a <= b but F(a,b) != L(a)").set("F(a,b)", flat(o, a, b)))
                    } else if commutator(o, a, b) != o.one_set() {
                        Some(Witness::new([a, b], "a <= b but c(a,b) != {1}").set("c(a,b)", commutator(o, a, b)))
                    } else {
                        None
                    };
                    if let Some(w) = w {
                        if c.push(w) {
                            return;
                        }
                    }
                }
            }
        })
    }

    /// `a C b`, `b C a` and `c(a,b) = {1}` agree on every pair; gated on
    /// strong skew orthomodularity.
    pub fn theorem1(&self) -> LawReport {
        let o = self.o;
        let applicable = Checker::new(o)
            .strong_skew_omp(SubsetMode::Antichains)
            .map(|r| r.holds)
            .unwrap_or(false);
        let cm = o.table(OpId::Commutator);
        self.gated(LawId::CompatibilityCommutator, applicable, &mut |c| {
            for a in o.elements() {
                for b in o.elements() {
                    let ab = compatible(o, a, b);
                    let ba = compatible(o, b, a);
                    let cab = cm.get(&[a, b]);
                    let one = cab == o.one_set();
                    if !(ab == ba && ba == one) {
                        let w = Witness::new([a, b], format!("a C b = {ab}, b C a = {ba}, c(a,b) = 1: {one}"))
                            .set("c(a,b)", cab);
                        if c.push(w) {
                            return;
                        }
                    }
                }
            }
        })
    }

    /// Symmetric `C` implies skew orthomodularity.
    pub fn symmetry(&self) -> LawReport {
        let o = self.o;
        let symmetric = o
            .elements()
            .all(|a| o.elements().all(|b| compatible(o, a, b) == compatible(o, b, a)));
        let checker = if self.all {
            Checker::new(o).all_witnesses()
        } else {
            Checker::new(o)
        };
        self.gated(LawId::SymmetricCompatibility, symmetric, &mut |c| {
            for w in checker.skew_omp().witnesses {
                if c.push(w) {
                    return;
                }
            }
        })
    }

    /// `T(x,y,x) = {x}`, the equivalence of the three `T` identities with
    /// the cone identity under both readings, and the Boolean case.
    pub fn pixley(&self) -> Vec<LawReport> {
        let o = self.o;
        let mut out = Vec::new();
        out.push(self.unconditional(LawId::PixleyProjection, &mut |c| {
            for x in o.elements() {
                for y in o.elements() {
                    let t = pixley(o, x, y, x);
                    if t != o.single(x) && c.push(Witness::new([x, y], "T(x,y,x) != {x}").set("T(x,y,x)", t)) {
                        return;
                    }
                }
            }
        }));

        let identities = first_pixley_failure(o);
        let holds_i = identities.is_none();
        for reading in [Reading::Literal, Reading::MinBothSides] {
            let cone_failure = first_cone_identity_failure(o, reading);
            let holds_ii = cone_failure.is_none();
            let mut r = self.unconditional(LawId::PixleyEquivalence, &mut |c| {
                if holds_i != holds_ii {
                    let w = identities.clone().or(cone_failure.clone()).map(|mut w| {
                        w.note = format!(
                            "T identities {}, cone identity {}: {}",
                            if holds_i { "hold" } else { "fail" },
                            if holds_ii { "holds" } else { "fails" },
                            w.note
                        );
                        w
                    });
                    c.push(w.expect("one side failed"));
                }
            });
            r.reading = Some(reading);
            out.push(r);
        }

        let boolean = Checker::new(o).boolean(crate::checks::IdentitySelect::All).holds;
        out.push(self.gated(LawId::PixleyBoolean, boolean, &mut |c| {
            if let Some(w) = first_pixley_failure(o) {
                c.push(w);
            }
        }));
        out
    }

    /// `a ⊙ b <= c` iff `a <= b → c` on all triples; gated on the
    /// residuation conditions.
    pub fn adjointness(&self) -> LawReport {
        let o = self.o;
        let applicable = Checker::new(o).adjoint_conditions().holds;
        let conj = o.table(OpId::Conj);
        let imp = o.table(OpId::Impl);
        self.gated(LawId::Adjointness, applicable, &mut |c| {
            for a in o.elements() {
                for b in o.elements() {
                    let ab = conj.get(&[a, b]);
                    for z in o.elements() {
                        let bz = imp.get(&[b, z]);
                        let left = o.le_sets(ab, o.single(z));
                        let right = o.le_sets(o.single(a), bz);
                        if left != right {
                            let w = Witness::new([a, b, z], format!("a⊙b <= c is {left}, a <= b→c is {right}"))
                                .set("a⊙b", ab)
                                .set("b→c", bz);
                            if c.push(w) {
                                return;
                            }
                        }
                    }
                }
            }
        })
    }

    /// Boolean posets satisfy both residuation conditions.
    pub fn adjoint_boolean(&self) -> LawReport {
        let o = self.o;
        let boolean = Checker::new(o).boolean(crate::checks::IdentitySelect::All).holds;
        let checker = if self.all {
            Checker::new(o).all_witnesses()
        } else {
            Checker::new(o)
        };
        self.gated(LawId::AdjointBoolean, boolean, &mut |c| {
            for w in checker.adjoint_conditions().witnesses {
                if c.push(w) {
                    return;
                }
            }
        })
    }

    /// `(x → y) ⊙ x <= y`, with `⊙` taking the set `x → y` as its left
    /// operand.
    pub fn modus_ponens(&self) -> LawReport {
        let o = self.o;
        let applicable = Checker::new(o).adjoint_conditions().holds;
        let imp = o.table(OpId::Impl);
        self.gated(LawId::ModusPonens, applicable, &mut |c| {
            for x in o.elements() {
                for y in o.elements() {
                    let xy = imp.get(&[x, y]);
                    let lhs = sharp_conj(o, xy, x);
                    if !o.le_sets(lhs, o.single(y)) {
                        let w = Witness::new([x, y], "(x→y)⊙x not below y")
                            .set("x→y", xy)
                            .set("(x→y)⊙x", lhs);
                        if c.push(w) {
                            return;
                        }
                    }
                }
            }
        })
        .with_reading(Reading::Extended)
    }

    /// Subsets `A <= a` with `L(a, A') = {0}` have `a` as least upper bound.
    pub fn strong_join(&self) -> Result<LawReport> {
        let o = self.o;
        if o.len() > ALL_SUBSETS_LIMIT {
            return Err(Error::SizeLimitExceeded {
                what: "strong join law",
                limit: ALL_SUBSETS_LIMIT,
                got: o.len(),
            });
        }
        let applicable = Checker::new(o).strong_skew_omp(SubsetMode::Antichains)?.holds;
        Ok(self.gated(LawId::StrongJoin, applicable, &mut |c| {
            for a in subsets(o.universe()) {
                let lower_primes = o.lower(o.prime_set(a));
                let ub = o.upper(a);
                for y in ub.iter() {
                    if o.down(y) & lower_primes == o.zero_set() && ub != o.up(y) {
                        let mut elements: Vec<ElementId> = a.iter().collect();
                        elements.push(y);
                        let w = Witness::new(elements, "a is not the join of A")
                            .set("A", a)
                            .set("U(A)", ub)
                            .set("U(a)", o.up(y));
                        if c.push(w) {
                            return;
                        }
                    }
                }
            }
        }))
    }

    /// Boolean posets are skew orthomodular and every pair is compatible.
    pub fn boolean_compatibility(&self) -> LawReport {
        let o = self.o;
        let boolean = Checker::new(o).boolean(crate::checks::IdentitySelect::All).holds;
        self.gated(LawId::BooleanCompatibility, boolean, &mut |c| {
            if let Some(w) = Checker::new(o).skew_omp().witnesses.into_iter().next() {
                if c.push(w) {
                    return;
                }
            }
            for a in o.elements() {
                for b in o.elements() {
                    if !compatible(o, a, b) && c.push(Witness::new([a, b], "not a C b")) {
                        return;
                    }
                }
            }
        })
    }
}

/// First failure among `T(x,x,z) = {z}`, `T(x,z,z) = {x}`, `T(x,y,x) = {x}`.
pub fn first_pixley_failure(o: &OrthoPoset) -> Option<Witness> {
    for x in o.elements() {
        for z in o.elements() {
            let t = pixley(o, x, x, z);
            if t != o.single(z) {
                return Some(Witness::new([x, x, z], "T(x,x,z) != {z}").set("T", t));
            }
            let t = pixley(o, x, z, z);
            if t != o.single(x) {
                return Some(Witness::new([x, z, z], "T(x,z,z) != {x}").set("T", t));
            }
            let t = pixley(o, x, z, x);
            if t != o.single(x) {
                return Some(Witness::new([x, z, x], "T(x,y,x) != {x}").set("T", t));
            }
        }
    }
    None
}

/// First `(x, y)` where `Min UL(U(x,x'), y)` differs from
/// `U(L(x,y), L(x',y))` (literal) or from its `Min` (both sides).
pub fn first_cone_identity_failure(o: &OrthoPoset, reading: Reading) -> Option<Witness> {
    for x in o.elements() {
        let xp = o.prime(x);
        for y in o.elements() {
            let lhs = o.min(o.upper(o.lower(o.upper2(x, xp).with(y))));
            let cone = o.upper(o.lower2(x, y) | o.lower2(xp, y));
            let rhs = match reading {
                Reading::MinBothSides => o.min(cone),
                _ => cone,
            };
            if lhs != rhs {
                return Some(
                    Witness::new([x, y], "Min UL(U(x,x'),y) differs from the right side")
                        .set("lhs", lhs)
                        .set("rhs", rhs),
                );
            }
        }
    }
    None
}

/// All suites with default options.
pub fn verify_all(o: &OrthoPoset) -> Vec<LawReport> {
    Verifier::new(o).run_all()
}

pub fn suite_prop1(o: &OrthoPoset) -> Vec<LawReport> {
    Verifier::new(o).prop1()
}

pub fn suite_theorem1(o: &OrthoPoset) -> LawReport {
    Verifier::new(o).theorem1()
}

pub fn suite_symmetry(o: &OrthoPoset) -> LawReport {
    Verifier::new(o).symmetry()
}

pub fn suite_pixley(o: &OrthoPoset) -> Vec<LawReport> {
    Verifier::new(o).pixley()
}

pub fn suite_adjointness(o: &OrthoPoset) -> LawReport {
    Verifier::new(o).adjointness()
}

pub fn suite_modus_ponens(o: &OrthoPoset) -> LawReport {
    Verifier::new(o).modus_ponens()
}

pub fn suite_strong_join_lemma(o: &OrthoPoset) -> Result<LawReport> {
    Verifier::new(o).strong_join()
}
