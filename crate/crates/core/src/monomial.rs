//! Monomial ideals of `S = k[x̄, ȳ]`: minimal generators, radicals, minimal
//! primes and Krull dimension.

use std::collections::BTreeSet;
use std::fmt;

use crate::poly::{fmt_monomial, Monomial};

/// A monomial ideal stored by its minimal generators (an antichain under
/// divisibility), kept sorted so that equal ideals compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            assert_eq!(g.nvars(), nvars, "generator arity");
        }
        gens.sort();
        gens.dedup();
        let mut min: Vec<Monomial> = Vec::new();
        // Sorting by total degree first means a divisor is always seen before
        // the monomials it divides.
        gens.sort_by_key(|g| g.degree());
        for g in gens {
            if !min.iter().any(|h| h.divides(&g)) {
                min.push(g);
            }
        }
        min.sort();
        MonomialIdeal { nvars, gens: min }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.exps().iter().all(|&e| e <= 1))
    }

    /// Generated by the square-free parts of the generators.
    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal::new(
            self.nvars,
            self.gens.iter().map(|g| {
                Monomial::new(g.exps().iter().map(|&e| e.min(1)).collect())
            }),
        )
    }

    /// `J : m`.
    pub fn quotient(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(
            self.nvars,
            self.gens.iter().map(|g| {
                Monomial::new(
                    g.exps()
                        .iter()
                        .zip(m.exps())
                        .map(|(&a, &b)| a.saturating_sub(b))
                        .collect(),
                )
            }),
        )
    }

    pub fn add(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut out = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.nvars, out)
    }

    /// Minimal primes as sorted variable sets: the minimal transversals of the
    /// generator supports. Empty for the unit ideal; `[{}]` for the zero ideal.
    pub fn minimal_primes(&self) -> Vec<Vec<usize>> {
        if self.is_unit() {
            return Vec::new();
        }
        let edges: Vec<Vec<usize>> = self.radical().gens.iter().map(|g| g.support()).collect();
        let mut covers: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
        for e in &edges {
            let mut next: Vec<BTreeSet<usize>> = Vec::new();
            for t in &covers {
                if e.iter().any(|v| t.contains(v)) {
                    next.push(t.clone());
                } else {
                    for &v in e {
                        let mut s = t.clone();
                        s.insert(v);
                        next.push(s);
                    }
                }
            }
            next.sort();
            next.dedup();
            let keep: Vec<BTreeSet<usize>> = next
                .iter()
                .filter(|s| !next.iter().any(|o| o != *s && o.is_subset(s)))
                .cloned()
                .collect();
            covers = keep;
        }
        let mut out: Vec<Vec<usize>> = covers.into_iter().map(|s| s.into_iter().collect()).collect();
        out.sort();
        out
    }

    /// `nvars − (smallest prime height)`, or `None` (−∞) for the unit ideal.
    pub fn krull_dim(&self) -> Option<usize> {
        self.minimal_primes()
            .iter()
            .map(|p| self.nvars - p.len())
            .max()
    }

    /// The prime generated by a set of variables.
    pub fn prime(nvars: usize, vars: &[usize]) -> MonomialIdeal {
        MonomialIdeal::new(nvars, vars.iter().map(|&v| Monomial::var(nvars, v)))
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.is_unit() {
            return "<1>".to_string();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| fmt_monomial(g, names)).collect();
        format!("<{}>", parts.join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("z{}", i)).collect();
        f.write_str(&self.fmt_with(&names))
    }
}

/// Krull dimension with the "−∞ for the empty variety" convention spelled out.
pub fn krull_dim_monomial(j: &MonomialIdeal) -> Option<usize> {
    j.krull_dim()
}

pub fn radical_monomial(j: &MonomialIdeal) -> MonomialIdeal {
    j.radical()
}

pub fn minimal_primes_monomial(j: &MonomialIdeal) -> Vec<Vec<usize>> {
    j.minimal_primes()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn radical_and_primes_of_the_nontrivial_example() {
        // variables x1 x2 y1 y2
        let j = MonomialIdeal::new(4, [m(&[0, 0, 0, 1]), m(&[0, 1, 2, 0])]);
        let r = j.radical();
        assert_eq!(r, MonomialIdeal::new(4, [m(&[0, 0, 0, 1]), m(&[0, 1, 1, 0])]));
        assert_eq!(j.minimal_primes(), vec![vec![1, 3], vec![2, 3]]);
        assert_eq!(j.krull_dim(), Some(2));
    }

    #[test]
    fn degenerate_ideals() {
        assert_eq!(MonomialIdeal::unit(4).krull_dim(), None);
        assert!(MonomialIdeal::unit(4).minimal_primes().is_empty());
        assert_eq!(MonomialIdeal::zero(4).krull_dim(), Some(4));
        let xy = MonomialIdeal::new(2, [m(&[1, 1])]);
        assert_eq!(xy.minimal_primes(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn minimalization() {
        let j = MonomialIdeal::new(2, [m(&[2, 1]), m(&[1, 0]), m(&[1, 0]), m(&[0, 3])]);
        assert_eq!(j.gens(), &[m(&[0, 3]), m(&[1, 0])]);
    }
}
