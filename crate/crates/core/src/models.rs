//! Named orthoposets and exhaustive enumeration of small ones.
//!
//! Enumeration grows orthoposets one complementary pair at a time. Removing
//! a pair `{x, x'}` from an orthoposet leaves an orthoposet, so every model
//! with `2k + 2` elements is a one-pair extension of a model with `2k`.
//! A new pair `p, p'` is fixed by the strict down-set `D` and up-set `U` of
//! `p` among the old middle elements; antitonicity then forces
//! `down(p') = U'` and `up(p') = D'`.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::mask::{subsets, ElementId, SubsetMask};
use crate::ortho::OrthoPoset;
use crate::poset::FinitePoset;

pub const EXAMPLE1_LIMIT: usize = 31;
pub const POWER_SET_LIMIT: usize = 6;
pub const ENUMERATION_LIMIT: usize = 12;
/// Largest orthoposet for which [`certificate`] is computed.
pub const CERTIFICATE_LIMIT: usize = 16;

fn letter(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("x{i}")
    }
}

fn build(
    name: &str,
    names: Vec<String>,
    leq: impl Fn(usize, usize) -> bool,
    prime: impl Fn(usize) -> usize,
) -> Result<OrthoPoset> {
    let n = names.len();
    let poset = FinitePoset::from_fn(names, leq, ElementId(0), ElementId(n - 1))?;
    let prime = (0..n).map(|i| ElementId(prime(i))).collect();
    OrthoPoset::new(name, poset, prime)
}

/// The orthoposet on `{0, 1} ∪ A ∪ A'` with `|A| = n`, where `x <= y` iff
/// `x = y`, `x = 0`, `y = 1`, or `x ∈ A` and `y ∈ A' \ {x'}`.
///
/// Elements are ordered `0, a, b, …, a', b', …, 1`. `n = 4` gives the
/// ten-element poset with two distinct minimal upper bounds of `a` and `b`.
pub fn example1(n: usize) -> Result<OrthoPoset> {
    if n > EXAMPLE1_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "example1",
            limit: EXAMPLE1_LIMIT,
            got: n,
        });
    }
    let size = 2 * n + 2;
    let top = size - 1;
    let mut names = vec!["0".to_string()];
    names.extend((0..n).map(letter));
    names.extend((0..n).map(|i| format!("{}'", letter(i))));
    names.push("1".into());
    let in_a = |x: usize| (1..=n).contains(&x);
    let in_ap = |x: usize| (n + 1..=2 * n).contains(&x);
    let prime = move |x: usize| match x {
        0 => top,
        x if x == top => 0,
        x if in_a(x) => x + n,
        x => x - n,
    };
    let leq = |x: usize, y: usize| x == y || x == 0 || y == top || (in_a(x) && in_ap(y) && y != prime(x));
    build(&format!("example1-{n}"), names, leq, prime)
}

/// The six-element hexagon `0 < a < b < 1`, `0 < b' < a' < 1`.
pub fn benzene() -> OrthoPoset {
    let names = ["0", "a", "b", "b'", "a'", "1"].map(String::from).to_vec();
    let strict = [(1, 2), (3, 4)];
    let leq = |x: usize, y: usize| x == y || x == 0 || y == 5 || strict.contains(&(x, y));
    let prime = |x: usize| 5 - x;
    build("benzene", names, leq, prime).expect("hexagon is an orthoposet")
}

/// The twelve-element non-lattice diagram with covers
/// `a < d', b'`; `b < e, a'`; `c < d', e'`; `d < c', a'`; `e < c'`; `e' < b'`.
pub fn fig3() -> OrthoPoset {
    let names: Vec<String> = ["0", "a", "b", "c", "d", "e", "e'", "d'", "c'", "b'", "a'", "1"]
        .map(String::from)
        .to_vec();
    let idx = |s: &str| names.iter().position(|n| n == s).unwrap();
    let covers = [
        ("a", "d'"),
        ("a", "b'"),
        ("b", "e"),
        ("b", "a'"),
        ("c", "d'"),
        ("c", "e'"),
        ("d", "c'"),
        ("d", "a'"),
        ("e", "c'"),
        ("e'", "b'"),
    ];
    let n = names.len();
    let mut leq = vec![vec![false; n]; n];
    for x in 0..n {
        leq[x][x] = true;
        leq[0][x] = true;
        leq[x][n - 1] = true;
    }
    for (x, y) in covers {
        leq[idx(x)][idx(y)] = true;
    }
    transitive_close(&mut leq);
    let prime = |x: usize| n - 1 - x;
    build("fig3", names.clone(), |x, y| leq[x][y], prime).expect("fig3 transcription is an orthoposet")
}

/// The Boolean algebra of subsets of a `k`-set. Element `i` is the subset
/// with bit pattern `i`; labels list member letters, with `0` and `1` for
/// the bounds.
pub fn power_set(k: usize) -> Result<OrthoPoset> {
    if k > POWER_SET_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "power_set",
            limit: POWER_SET_LIMIT,
            got: k,
        });
    }
    let n = 1usize << k;
    let full = n - 1;
    let names = (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            i if i == full => "1".to_string(),
            i => (0..k).filter(|b| i >> b & 1 == 1).map(letter).collect(),
        })
        .collect();
    let leq = |x: usize, y: usize| x & !y == 0;
    if n == 1 {
        let poset = FinitePoset::from_fn(names, leq, ElementId(0), ElementId(0))?;
        return OrthoPoset::new("powerset-0", poset, vec![ElementId(0)]);
    }
    build(&format!("powerset-{k}"), names, leq, |x| full & !x)
}

pub(crate) fn transitive_close(leq: &mut [Vec<bool>]) {
    let n = leq.len();
    for k in 0..n {
        for i in 0..n {
            if leq[i][k] {
                for j in 0..n {
                    if leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// pair form: middle elements 0..2k, element 2i paired with 2i + 1

const EVEN: u64 = 0x5555_5555_5555_5555;

#[derive(Clone, Debug, PartialEq, Eq)]
struct PairForm {
    pairs: usize,
    /// `above[x]`: middle elements strictly above `x`.
    above: Vec<u64>,
}

#[inline]
fn swap_pairs(s: u64) -> u64 {
    ((s & EVEN) << 1) | ((s >> 1) & EVEN)
}

#[inline]
fn holds_a_pair(s: u64) -> bool {
    s & (s >> 1) & EVEN != 0
}

impl PairForm {
    fn empty() -> Self {
        PairForm {
            pairs: 0,
            above: Vec::new(),
        }
    }

    fn middle(&self) -> usize {
        2 * self.pairs
    }

    fn below(&self) -> Vec<u64> {
        let m = self.middle();
        let mut below = vec![0u64; m];
        for x in 0..m {
            for y in 0..m {
                if self.above[x] >> y & 1 == 1 {
                    below[y] |= 1 << x;
                }
            }
        }
        below
    }

    /// Every one-pair extension, in a fixed order.
    fn extensions(&self) -> Vec<PairForm> {
        let m = self.middle();
        let below = self.below();
        let all = if m == 0 { 0 } else { u64::MAX >> (64 - m) };
        let downsets: Vec<u64> = subsets(SubsetMask::from_bits(all))
            .map(|s| s.bits())
            .filter(|&s| !holds_a_pair(s))
            .filter(|&s| (0..m).all(|x| s >> x & 1 == 0 || below[x] & !s == 0))
            .collect();
        let mut out = Vec::new();
        for &d in &downsets {
            let mut allowed = all & !d & !swap_pairs(d);
            for x in 0..m {
                if d >> x & 1 == 1 {
                    allowed &= self.above[x];
                }
            }
            for &dn in &downsets {
                let u = swap_pairs(dn);
                if u & !allowed != 0 {
                    continue;
                }
                let (p, q) = (m, m + 1);
                let mut above = self.above.clone();
                above.push(u);
                above.push(swap_pairs(d));
                for x in 0..m {
                    if d >> x & 1 == 1 {
                        above[x] |= 1 << p;
                    }
                    if swap_pairs(u) >> x & 1 == 1 {
                        above[x] |= 1 << q;
                    }
                }
                out.push(PairForm {
                    pairs: self.pairs + 1,
                    above,
                });
            }
        }
        out
    }

    fn to_orthoposet(&self, name: String) -> Result<OrthoPoset> {
        let m = self.middle();
        let n = m + 2;
        let mut names = vec!["0".to_string()];
        for i in 0..self.pairs {
            names.push(letter(i));
            names.push(format!("{}'", letter(i)));
        }
        names.push("1".into());
        let top = n - 1;
        let leq = |x: usize, y: usize| {
            x == y || x == 0 || y == top || (x != top && y != 0 && self.above[x - 1] >> (y - 1) & 1 == 1)
        };
        let prime = |x: usize| match x {
            0 => top,
            x if x == top => 0,
            x => ((x - 1) ^ 1) + 1,
        };
        build(&name, names, leq, prime)
    }

    fn from_orthoposet(o: &OrthoPoset) -> Self {
        let reps = o.pair_representatives();
        let mut order = Vec::with_capacity(2 * reps.len());
        for &x in &reps {
            order.push(x);
            order.push(o.prime(x));
        }
        let above = order
            .iter()
            .map(|&x| {
                order
                    .iter()
                    .enumerate()
                    .filter(|&(_, &y)| o.poset().lt(x, y))
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        PairForm {
            pairs: reps.len(),
            above,
        }
    }

    /// Colour refinement of `(|down|, |up|)` to a stable partition.
    fn invariants(&self) -> Vec<usize> {
        let m = self.middle();
        let below = self.below();
        let mut colour: Vec<usize> = (0..m)
            .map(|x| below[x].count_ones() as usize * 64 + self.above[x].count_ones() as usize)
            .collect();
        loop {
            let sigs: Vec<(usize, Vec<usize>, Vec<usize>, usize)> = (0..m)
                .map(|x| {
                    let collect = |s: u64| {
                        let mut v: Vec<usize> = (0..m).filter(|&y| s >> y & 1 == 1).map(|y| colour[y]).collect();
                        v.sort_unstable();
                        v
                    };
                    (colour[x], collect(below[x]), collect(self.above[x]), colour[x ^ 1])
                })
                .collect();
            let mut distinct = sigs.clone();
            distinct.sort();
            distinct.dedup();
            let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
            let classes = |c: &[usize]| c.iter().collect::<HashSet<_>>().len();
            let done = classes(&next) == classes(&colour);
            colour = next;
            if done {
                return colour;
            }
        }
    }

    /// Least relabelled relation over all pair-preserving relabellings that
    /// list pairs in non-decreasing invariant order.
    fn canonical(&self) -> Vec<u64> {
        let inv = self.invariants();
        let k = self.pairs;
        // candidate orientations per old pair
        let mut keyed: Vec<((usize, usize), usize, bool)> = Vec::new();
        for j in 0..k {
            let (p, q) = (2 * j, 2 * j + 1);
            if inv[p] <= inv[q] {
                keyed.push(((inv[p], inv[q]), j, false));
            }
            if inv[q] <= inv[p] {
                keyed.push(((inv[q], inv[p]), j, true));
            }
        }
        keyed.sort();
        let mut best: Option<Vec<u64>> = None;
        let mut placement = Vec::with_capacity(k);
        let mut used = vec![false; k];
        self.search(&keyed, &mut used, &mut placement, &mut best);
        best.unwrap_or_default()
    }

    fn search(
        &self,
        keyed: &[((usize, usize), usize, bool)],
        used: &mut [bool],
        placement: &mut Vec<(usize, bool)>,
        best: &mut Option<Vec<u64>>,
    ) {
        if placement.len() == self.pairs {
            let code = self.relabel(placement);
            if best.as_ref().is_none_or(|b| code < *b) {
                *best = Some(code);
            }
            return;
        }
        // the next position takes the smallest key still available
        let Some(next_key) = keyed.iter().find(|(_, j, _)| !used[*j]).map(|(key, _, _)| *key) else {
            return;
        };
        for &(key, j, flip) in keyed {
            if key != next_key || used[j] {
                continue;
            }
            used[j] = true;
            placement.push((j, flip));
            self.search(keyed, used, placement, best);
            placement.pop();
            used[j] = false;
        }
    }

    fn relabel(&self, placement: &[(usize, bool)]) -> Vec<u64> {
        let m = self.middle();
        let mut new_of = vec![0usize; m];
        for (pos, &(j, flip)) in placement.iter().enumerate() {
            let (p, q) = if flip { (2 * j + 1, 2 * j) } else { (2 * j, 2 * j + 1) };
            new_of[p] = 2 * pos;
            new_of[q] = 2 * pos + 1;
        }
        let mut rows = vec![0u64; m];
        for x in 0..m {
            let mut r = 0u64;
            for y in 0..m {
                if self.above[x] >> y & 1 == 1 {
                    r |= 1 << new_of[y];
                }
            }
            rows[new_of[x]] = r;
        }
        rows
    }
}

/// Isomorphism-invariant fingerprint of an orthoposet: equal certificates
/// mean isomorphic orthoposets (as ordered sets with involution).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Certificate {
    size: usize,
    rows: Vec<u64>,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.size)?;
        for r in &self.rows {
            write!(f, "{r:x}.")?;
        }
        Ok(())
    }
}

pub fn certificate(o: &OrthoPoset) -> Result<Certificate> {
    if o.len() > CERTIFICATE_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "certificate",
            limit: CERTIFICATE_LIMIT,
            got: o.len(),
        });
    }
    let form = PairForm::from_orthoposet(o);
    Ok(Certificate {
        size: o.len(),
        rows: form.canonical(),
    })
}

pub fn isomorphic(a: &OrthoPoset, b: &OrthoPoset) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    Ok(certificate(a)? == certificate(b)?)
}

type Filter = Box<dyn Fn(&OrthoPoset) -> bool + Send>;

/// A sequence of validated orthoposets, optionally filtered.
pub struct ModelStream {
    source: String,
    yielded: usize,
    filter: Option<Filter>,
    models: std::vec::IntoIter<OrthoPoset>,
}

impl ModelStream {
    pub fn from_models(source: impl Into<String>, models: Vec<OrthoPoset>) -> Self {
        ModelStream {
            source: source.into(),
            yielded: 0,
            filter: None,
            models: models.into_iter(),
        }
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// Number of models handed out so far.
    pub fn yielded(&self) -> usize {
        self.yielded
    }

    /// Keeps only models satisfying `pred`.
    pub fn with_filter(mut self, pred: impl Fn(&OrthoPoset) -> bool + Send + 'static) -> Self {
        self.filter = Some(Box::new(pred));
        self
    }
}

impl Iterator for ModelStream {
    type Item = OrthoPoset;

    fn next(&mut self) -> Option<OrthoPoset> {
        loop {
            let m = self.models.next()?;
            if self.filter.as_ref().is_none_or(|f| f(&m)) {
                self.yielded += 1;
                return Some(m);
            }
        }
    }
}

/// Every orthoposet with at most `max_n` elements, smallest first.
///
/// With `dedup`, exactly one representative per isomorphism class is
/// yielded. Without it the raw extension tree is walked and isomorphic
/// copies appear.
pub fn enumerate_orthoposets(max_n: usize, dedup: bool) -> Result<ModelStream> {
    if max_n > ENUMERATION_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "enumeration",
            limit: ENUMERATION_LIMIT,
            got: max_n,
        });
    }
    let mut out = Vec::new();
    if max_n < 2 {
        return Ok(ModelStream::from_models("enumeration", out));
    }
    let mut level = vec![PairForm::empty()];
    let mut size = 2;
    loop {
        for (i, form) in level.iter().enumerate() {
            out.push(form.to_orthoposet(format!("ortho{size}-{i}"))?);
        }
        if size + 2 > max_n {
            break;
        }
        let mut next = Vec::new();
        let mut seen = HashSet::new();
        for form in &level {
            for child in form.extensions() {
                if !dedup || seen.insert(child.canonical()) {
                    next.push(child);
                }
            }
        }
        level = next;
        size += 2;
    }
    Ok(ModelStream::from_models(
        format!("enumerate(max_n={max_n}, dedup={dedup})"),
        out,
    ))
}
