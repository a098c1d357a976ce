//! Exact rational feasibility by Fourier–Motzkin elimination, and relatively
//! open polyhedral cones in canonical form.

use num_traits::{One, Signed, Zero};

use crate::poly::{dot_rat, primitive, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rel {
    /// `a·z + b > 0`
    Gt,
    /// `a·z + b >= 0`
    Ge,
    /// `a·z + b = 0`
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub a: Vec<Rat>,
    pub b: Rat,
    pub rel: Rel,
}

impl Constraint {
    pub fn new(a: Vec<Rat>, b: Rat, rel: Rel) -> Self {
        Constraint { a, b, rel }
    }

    pub fn gt(a: Vec<Rat>) -> Self {
        Self::new(a, Rat::zero(), Rel::Gt)
    }

    pub fn ge(a: Vec<Rat>) -> Self {
        Self::new(a, Rat::zero(), Rel::Ge)
    }

    pub fn eq(a: Vec<Rat>) -> Self {
        Self::new(a, Rat::zero(), Rel::Eq)
    }

    pub fn holds(&self, z: &[Rat]) -> bool {
        let v = dot_rat(&self.a, z) + &self.b;
        match self.rel {
            Rel::Gt => v.is_positive(),
            Rel::Ge => !v.is_negative(),
            Rel::Eq => v.is_zero(),
        }
    }
}

/// An inequality `a·z + b (>|>=) 0` carrying the set of original rows it was
/// derived from (for Chernikov's redundancy rule).
#[derive(Clone, Debug)]
struct Row {
    a: Vec<Rat>,
    b: Rat,
    strict: bool,
    history: Vec<usize>,
}

impl Row {
    /// Scale so the first nonzero entry of `(a, b)` has absolute value one.
    fn normalize(&mut self) {
        let pivot = self
            .a
            .iter()
            .chain(std::iter::once(&self.b))
            .find(|x| !x.is_zero())
            .map(|x| x.abs());
        if let Some(p) = pivot {
            for x in self.a.iter_mut() {
                *x /= &p;
            }
            self.b /= &p;
        }
    }

    fn constant_ok(&self) -> bool {
        if self.strict {
            self.b.is_positive()
        } else {
            !self.b.is_negative()
        }
    }
}

fn merge_history(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut h: Vec<usize> = a.iter().chain(b).copied().collect();
    h.sort_unstable();
    h.dedup();
    h
}

/// Finds a rational point satisfying all constraints, or `None` when the
/// system is infeasible.
pub fn feasible_point(dim: usize, constraints: &[Constraint]) -> Option<Vec<Rat>> {
    // For a homogeneous system `a·z > 0` may be replaced by `a·z >= 1`, which
    // keeps the whole elimination non-strict.
    let homogeneous = constraints.iter().all(|c| c.b.is_zero());
    let mut rows: Vec<Row> = Vec::new();
    let mut eqs: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for (k, c) in constraints.iter().enumerate() {
        assert_eq!(c.a.len(), dim, "constraint dimension");
        match c.rel {
            Rel::Eq => eqs.push((c.a.clone(), c.b.clone())),
            Rel::Gt if homogeneous => rows.push(Row {
                a: c.a.clone(),
                b: -Rat::one(),
                strict: false,
                history: vec![k],
            }),
            Rel::Gt | Rel::Ge => rows.push(Row {
                a: c.a.clone(),
                b: c.b.clone(),
                strict: c.rel == Rel::Gt,
                history: vec![k],
            }),
        }
    }
    // Chernikov's rule is only used when every row is non-strict.
    let prune = rows.iter().all(|r| !r.strict);
    // Solve the equalities first: each pivot expresses one variable as an
    // affine function of the others.
    // substitutions[i] = (var, coeffs, constant): z_var = coeffs·z + constant
    let mut subs: Vec<(usize, Vec<Rat>, Rat)> = Vec::new();
    let mut pending = eqs;
    while let Some((a, b)) = pending.pop() {
        let Some(piv) = a.iter().position(|x| !x.is_zero()) else {
            if b.is_zero() {
                continue;
            }
            return None;
        };
        let c = a[piv].clone();
        let mut coeffs: Vec<Rat> = a.iter().map(|x| -x / &c).collect();
        coeffs[piv] = Rat::zero();
        let constant = -&b / &c;
        let apply = |v: &mut Vec<Rat>, k: &mut Rat| {
            let f = v[piv].clone();
            if f.is_zero() {
                return;
            }
            v[piv] = Rat::zero();
            for (x, y) in v.iter_mut().zip(&coeffs) {
                *x += &f * y;
            }
            *k += &f * &constant;
        };
        for (pa, pb) in pending.iter_mut() {
            apply(pa, pb);
        }
        for r in rows.iter_mut() {
            apply(&mut r.a, &mut r.b);
        }
        for (_, sa, sb) in subs.iter_mut() {
            apply(sa, sb);
        }
        subs.push((piv, coeffs, constant));
    }

    // Fourier–Motzkin on the remaining inequalities, eliminating the last
    // variable first and keeping every stage for back substitution.
    let mut stages: Vec<Vec<Row>> = Vec::with_capacity(dim);
    for r in rows.iter_mut() {
        r.normalize();
    }
    let mut current = dedupe(rows);
    for var in (0..dim).rev() {
        stages.push(current.clone());
        let eliminated = dim - var;
        let (mut lower, mut upper, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for r in current {
            if r.a[var].is_positive() {
                lower.push(r);
            } else if r.a[var].is_negative() {
                upper.push(r);
            } else {
                rest.push(r);
            }
        }
        for l in &lower {
            for u in &upper {
                let history = merge_history(&l.history, &u.history);
                if prune && history.len() > eliminated + 1 {
                    continue;
                }
                let (cl, cu) = (l.a[var].clone(), -u.a[var].clone());
                let a: Vec<Rat> = l
                    .a
                    .iter()
                    .zip(&u.a)
                    .map(|(x, y)| x * &cu + y * &cl)
                    .collect();
                let mut row = Row {
                    a,
                    b: &l.b * &cu + &u.b * &cl,
                    strict: l.strict || u.strict,
                    history,
                };
                row.normalize();
                rest.push(row);
            }
        }
        for r in &rest {
            if r.a.iter().all(Zero::is_zero) && !r.constant_ok() {
                return None;
            }
        }
        current = dedupe(
            rest.into_iter()
                .filter(|r| !r.a.iter().all(Zero::is_zero))
                .collect(),
        );
    }
    if current.iter().any(|r| !r.constant_ok()) {
        return None;
    }

    // Back substitution: stage for variable `var` only involves z_0..z_var.
    let mut z = vec![Rat::zero(); dim];
    for var in 0..dim {
        let stage = &stages[dim - 1 - var];
        let mut lo: Option<(Rat, bool)> = None;
        let mut hi: Option<(Rat, bool)> = None;
        for r in stage {
            let c = &r.a[var];
            if c.is_zero() {
                continue;
            }
            let mut rest = r.b.clone();
            for k in 0..var {
                rest += &r.a[k] * &z[k];
            }
            let bound = -rest / c;
            if c.is_positive() {
                let tighter = match &lo {
                    None => true,
                    Some((v, s)) => bound > *v || (bound == *v && r.strict && !s),
                };
                if tighter {
                    lo = Some((bound, r.strict));
                }
            } else {
                let tighter = match &hi {
                    None => true,
                    Some((v, s)) => bound < *v || (bound == *v && r.strict && !s),
                };
                if tighter {
                    hi = Some((bound, r.strict));
                }
            }
        }
        z[var] = match (lo, hi) {
            (None, None) => Rat::zero(),
            (Some((l, _)), None) => l + Rat::one(),
            (None, Some((h, _))) => h - Rat::one(),
            (Some((l, ls)), Some((h, hs))) => {
                if l == h {
                    if ls || hs {
                        return None;
                    }
                    l
                } else if l < h {
                    (l + h) / Rat::from_integer(2.into())
                } else {
                    return None;
                }
            }
        };
    }
    // Recover the pivoted variables, latest substitution first.
    for (var, coeffs, constant) in subs.iter().rev() {
        z[*var] = dot_rat(coeffs, &z) + constant;
    }
    debug_assert!(constraints.iter().all(|c| c.holds(&z)));
    if constraints.iter().all(|c| c.holds(&z)) {
        Some(z)
    } else {
        None
    }
}

fn dedupe(rows: Vec<Row>) -> Vec<Row> {
    let mut out: Vec<Row> = Vec::with_capacity(rows.len());
    for r in rows {
        if let Some(o) = out.iter_mut().find(|o| o.a == r.a && o.b == r.b) {
            o.strict |= r.strict;
            if r.history.len() < o.history.len() {
                o.history = r.history;
            }
            continue;
        }
        out.push(r);
    }
    out
}

pub fn is_feasible(dim: usize, constraints: &[Constraint]) -> bool {
    feasible_point(dim, constraints).is_some()
}

/// Reduced row echelon form of the span of `rows` (pivots scaled to one).
pub fn rref(dim: usize, rows: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let mut out_rank = 0;
    for col in 0..dim {
        let Some(p) = (out_rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(out_rank, p);
        let piv = m[out_rank][col].clone();
        for x in m[out_rank].iter_mut() {
            *x /= &piv;
        }
        let prow = m[out_rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != out_rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
        out_rank += 1;
    }
    m.truncate(out_rank);
    m
}

/// A relatively open cone `{z : E z = 0, S z > 0}` in canonical form:
/// equalities in reduced echelon form, strict constraints reduced modulo the
/// equalities, made primitive, irredundant and sorted. Two cones are equal as
/// sets iff their canonical forms are equal (for nonempty cones).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cone {
    pub dim: usize,
    pub equalities: Vec<Vec<Rat>>,
    pub strict: Vec<Vec<Rat>>,
}

impl Cone {
    pub fn new(dim: usize, equalities: Vec<Vec<Rat>>, strict: Vec<Vec<Rat>>) -> Self {
        let eq = rref(dim, &equalities);
        let mut s: Vec<Vec<Rat>> = Vec::new();
        for v in strict {
            let mut v = v;
            for row in &eq {
                let piv = row.iter().position(|x| !x.is_zero()).unwrap();
                let f = v[piv].clone();
                if !f.is_zero() {
                    for (x, y) in v.iter_mut().zip(row) {
                        *x -= &f * y;
                    }
                }
            }
            let v = primitive(&v);
            if !s.contains(&v) {
                s.push(v);
            }
        }
        let mut cone = Cone {
            dim,
            equalities: eq.iter().map(|r| primitive(r)).collect(),
            strict: s,
        };
        cone.remove_redundant();
        cone.strict.sort();
        cone
    }

    fn constraints(&self, skip: Option<usize>) -> Vec<Constraint> {
        let mut c: Vec<Constraint> = self.equalities.iter().map(|e| Constraint::eq(e.clone())).collect();
        for (k, s) in self.strict.iter().enumerate() {
            if Some(k) != skip {
                c.push(Constraint::gt(s.clone()));
            }
        }
        c
    }

    fn remove_redundant(&mut self) {
        // A zero strict row is either trivially false or, after reduction,
        // signals an empty cone; keep it so emptiness stays visible.
        if self.strict.iter().any(|s| s.iter().all(Zero::is_zero)) {
            self.strict.retain(|s| s.iter().all(Zero::is_zero));
            self.strict.truncate(1);
            return;
        }
        let mut k = 0;
        while k < self.strict.len() {
            let mut sys = self.constraints(Some(k));
            let neg: Vec<Rat> = self.strict[k].iter().map(|x| -x).collect();
            sys.push(Constraint::ge(neg));
            if is_feasible(self.dim, &sys) {
                k += 1;
            } else {
                self.strict.remove(k);
            }
        }
    }

    pub fn all_constraints(&self) -> Vec<Constraint> {
        self.constraints(None)
    }

    pub fn contains(&self, z: &[Rat]) -> bool {
        self.all_constraints().iter().all(|c| c.holds(z))
    }

    pub fn relative_interior_point(&self) -> Option<Vec<Rat>> {
        feasible_point(self.dim, &self.all_constraints())
    }

    pub fn is_empty(&self) -> bool {
        self.relative_interior_point().is_none()
    }

    /// Dimension of the linear span (ambient dimension minus equalities).
    pub fn span_dim(&self) -> usize {
        self.dim - self.equalities.len()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equalities.is_empty()
    }

    /// True when the cone contains a point with every coordinate positive.
    pub fn meets_positive_orthant(&self) -> Option<Vec<Rat>> {
        let mut c = self.all_constraints();
        for i in 0..self.dim {
            let mut e = vec![Rat::zero(); self.dim];
            e[i] = Rat::one();
            c.push(Constraint::gt(e));
        }
        feasible_point(self.dim, &c)
    }

    /// A relative interior point of the facet `strict[k] = 0`, if that
    /// facet is nonempty.
    pub fn facet_point(&self, k: usize) -> Option<Vec<Rat>> {
        let mut sys = self.constraints(Some(k));
        sys.push(Constraint::eq(self.strict[k].clone()));
        feasible_point(self.dim, &sys)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_vec;

    #[test]
    fn simple_feasibility() {
        // x > 0, y > 0, x + y < 1
        let c = vec![
            Constraint::gt(rat_vec(&[1, 0])),
            Constraint::gt(rat_vec(&[0, 1])),
            Constraint::new(rat_vec(&[-1, -1]), Rat::one(), Rel::Gt),
        ];
        let z = feasible_point(2, &c).unwrap();
        assert!(c.iter().all(|k| k.holds(&z)));
        // x > 0, -x >= 0 is infeasible
        let c = vec![Constraint::gt(rat_vec(&[1])), Constraint::ge(rat_vec(&[-1]))];
        assert!(feasible_point(1, &c).is_none());
    }

    #[test]
    fn equalities_are_substituted() {
        let c = vec![
            Constraint::eq(rat_vec(&[1, -2, 0])),
            Constraint::gt(rat_vec(&[0, 1, 1])),
            Constraint::gt(rat_vec(&[0, 0, -1])),
        ];
        let z = feasible_point(3, &c).unwrap();
        assert!(c.iter().all(|k| k.holds(&z)));
    }

    #[test]
    fn redundancy_removed() {
        let cone = Cone::new(
            2,
            vec![],
            vec![rat_vec(&[1, 0]), rat_vec(&[0, 1]), rat_vec(&[1, 1]), rat_vec(&[2, 0])],
        );
        assert_eq!(cone.strict, vec![rat_vec(&[0, 1]), rat_vec(&[1, 0])]);
    }
}
