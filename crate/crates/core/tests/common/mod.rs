//! Reference implementations built on `BTreeSet` and the bare order
//! relation; they share no code with the bitmask cone algebra.

#![allow(dead_code)]

use std::collections::BTreeSet;

use orthoposet::{ElementId, OrthoPoset, SubsetMask};

pub type Set = BTreeSet<usize>;

pub struct Naive {
    pub n: usize,
    leq: Vec<Vec<bool>>,
    prime: Vec<usize>,
}

impl Naive {
    pub fn of(o: &OrthoPoset) -> Self {
        let n = o.len();
        let leq = (0..n)
            .map(|x| (0..n).map(|y| o.leq(ElementId(x), ElementId(y))).collect())
            .collect();
        let prime = (0..n).map(|x| o.prime(ElementId(x)).0).collect();
        Naive { n, leq, prime }
    }

    pub fn all(&self) -> Set {
        (0..self.n).collect()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    pub fn prime(&self, x: usize) -> usize {
        self.prime[x]
    }

    pub fn primes(&self, a: &Set) -> Set {
        a.iter().map(|&x| self.prime[x]).collect()
    }

    pub fn lower(&self, a: &Set) -> Set {
        (0..self.n).filter(|&p| a.iter().all(|&s| self.leq[p][s])).collect()
    }

    pub fn upper(&self, a: &Set) -> Set {
        (0..self.n).filter(|&p| a.iter().all(|&s| self.leq[s][p])).collect()
    }

    pub fn min(&self, a: &Set) -> Set {
        a.iter()
            .copied()
            .filter(|&x| !a.iter().any(|&y| y != x && self.leq[y][x]))
            .collect()
    }

    pub fn max(&self, a: &Set) -> Set {
        a.iter()
            .copied()
            .filter(|&x| !a.iter().any(|&y| y != x && self.leq[x][y]))
            .collect()
    }

    /// `A <= B`.
    pub fn le_sets(&self, a: &Set, b: &Set) -> bool {
        a.iter().all(|&x| b.iter().all(|&y| self.leq[x][y]))
    }

    pub fn compatible(&self, x: usize, y: usize) -> bool {
        let yp = self.prime(y);
        let parts: Set = self
            .lower(&set([x, y]))
            .union(&self.lower(&set([x, yp])))
            .copied()
            .collect();
        self.upper(&set([x])) == self.upper(&parts)
    }

    pub fn commutator(&self, x: usize, y: usize) -> Set {
        let (xp, yp) = (self.prime(x), self.prime(y));
        let mut parts = Set::new();
        for (a, b) in [(x, y), (x, yp), (xp, y), (xp, yp)] {
            parts.extend(self.lower(&set([a, b])));
        }
        self.upper(&parts)
    }

    /// `Max L(y, U(x, y'))`.
    pub fn conj(&self, x: usize, y: usize) -> Set {
        let u = self.upper(&set([x, self.prime(y)]));
        let mut args = u;
        args.insert(y);
        self.max(&self.lower(&args))
    }

    /// `Max L(y, U(A, y'))`.
    pub fn conj_set(&self, a: &Set, y: usize) -> Set {
        let mut args = a.clone();
        args.insert(self.prime(y));
        let mut outer = self.upper(&args);
        outer.insert(y);
        self.max(&self.lower(&outer))
    }

    /// `Min U(x', L(x, y))`.
    pub fn imp(&self, x: usize, y: usize) -> Set {
        let mut args = self.lower(&set([x, y]));
        args.insert(self.prime(x));
        self.min(&self.upper(&args))
    }

    pub fn cond1(&self, x: usize, y: usize) -> bool {
        let mut inner = self.lower(&set([x, y]));
        inner.insert(self.prime(y));
        let mut outer = self.upper(&inner);
        outer.insert(y);
        self.lower(&outer).is_subset(&self.lower(&set([x])))
    }

    pub fn cond2(&self, x: usize, y: usize) -> bool {
        let mut inner = self.upper(&set([x, y]));
        inner.insert(self.prime(y));
        let mut outer = self.lower(&inner);
        outer.insert(y);
        self.upper(&outer).is_subset(&self.upper(&set([x])))
    }

    /// `x <= y` implies `U(y) = U(x, L(y, x'))`.
    pub fn skew_omp(&self) -> bool {
        (0..self.n).all(|x| {
            (0..self.n).filter(|&y| self.leq[x][y]).all(|y| {
                let mut args = self.lower(&set([y, self.prime(x)]));
                args.insert(x);
                self.upper(&set([y])) == self.upper(&args)
            })
        })
    }

    /// Cone distributivity, identity 2.
    pub fn distributive(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    let mut l = self.upper(&set([x, y]));
                    l.insert(z);
                    let lhs = self.upper(&self.lower(&l));
                    let r: Set = self
                        .lower(&set([x, z]))
                        .union(&self.lower(&set([y, z])))
                        .copied()
                        .collect();
                    lhs == self.upper(&r)
                })
            })
        })
    }
}

pub fn set<const N: usize>(xs: [usize; N]) -> Set {
    xs.into_iter().collect()
}

pub fn to_mask(a: &Set) -> SubsetMask {
    a.iter().map(|&i| ElementId(i)).collect()
}

pub fn from_mask(m: SubsetMask) -> Set {
    m.iter().map(|e| e.0).collect()
}
