//! Exact sparse multivariate polynomials over the Gaussian rationals.
//!
//! Terms are kept in a BTreeMap keyed by exponent vectors, so iteration order
//! (and everything serialized from it) is deterministic. Zero coefficients are
//! never stored.

use crate::error::Error;
use crate::exact::{GaussRat, Rat};
use num_complex::Complex64;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, GaussRat>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: GaussRat) -> Self {
        let mut p = SparsePoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        SparsePoly::constant(nvars, GaussRat::one())
    }

    /// The monomial x_i.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut e = vec![0; nvars];
        e[i] = 1;
        SparsePoly::monomial(nvars, e, GaussRat::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: GaussRat) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = SparsePoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, GaussRat)>) -> Self {
        let mut p = SparsePoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &GaussRat)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exps: Vec<u32>, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> SparsePoly {
        let mut out = SparsePoly::zero(self.nvars);
        for (e, c) in self.terms.iter() {
            out.terms.insert(e.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &GaussRat) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        let mut out = SparsePoly::zero(self.nvars);
        for (e, k) in self.terms.iter() {
            out.terms.insert(e.clone(), k * c);
        }
        out
    }

    pub fn mul(&self, rhs: &SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = SparsePoly::zero(self.nvars);
        for (ea, ca) in self.terms.iter() {
            for (eb, cb) in rhs.terms.iter() {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> SparsePoly {
        let mut acc = SparsePoly::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn mul_monomial(&self, exps: &[u32], c: &GaussRat) -> SparsePoly {
        assert_eq!(exps.len(), self.nvars);
        let mut out = SparsePoly::zero(self.nvars);
        for (e, k) in self.terms.iter() {
            let ne: Vec<u32> = e.iter().zip(exps).map(|(a, b)| a + b).collect();
            out.add_term(ne, k * c);
        }
        out
    }

    /// Exact division by the monomial with the given exponents; errors if some
    /// term has a smaller exponent in any variable.
    pub fn div_monomial(&self, exps: &[u32]) -> Result<SparsePoly, Error> {
        assert_eq!(exps.len(), self.nvars);
        let mut out = SparsePoly::zero(self.nvars);
        for (e, c) in self.terms.iter() {
            let mut ne = Vec::with_capacity(self.nvars);
            for (a, b) in e.iter().zip(exps) {
                if a < b {
                    return Err(Error::MonomialDivision);
                }
                ne.push(a - b);
            }
            out.terms.insert(ne, c.clone());
        }
        Ok(out)
    }

    /// Minimal exponent of variable `i` across all terms (the order of
    /// vanishing along {x_i = 0}); None for the zero polynomial.
    pub fn min_degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).min()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum::<u32>()).max()
    }

    /// Minimal total degree of the surviving monomials (vanishing order at 0).
    pub fn min_total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum::<u32>()).min()
    }

    /// Total degree restricted to a group of variables.
    pub fn degree_in_group(&self, group: &[usize]) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| group.iter().map(|&i| e[i]).sum::<u32>())
            .max()
    }

    /// Some(d) if every term has total degree d.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = it.next()?;
        if it.all(|x| x == d) {
            Some(d)
        } else {
            None
        }
    }

    /// Some(d) if every term has the same total degree within the group.
    pub fn homogeneous_degree_in_group(&self, group: &[usize]) -> Option<u32> {
        let mut it = self
            .terms
            .keys()
            .map(|e| group.iter().map(|&i| e[i]).sum::<u32>());
        let d = it.next()?;
        if it.all(|x| x == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn eval_gauss(&self, point: &[GaussRat]) -> GaussRat {
        assert_eq!(point.len(), self.nvars);
        // Cache powers per variable.
        let mut pow_cache: Vec<Vec<GaussRat>> = point.iter().map(|z| vec![GaussRat::one(), z.clone()]).collect();
        let mut acc = GaussRat::zero();
        for (e, c) in self.terms.iter() {
            let mut term = c.clone();
            for (i, &ei) in e.iter().enumerate() {
                if ei == 0 {
                    continue;
                }
                let cache = &mut pow_cache[i];
                while cache.len() <= ei as usize {
                    let next = &cache[cache.len() - 1] * &point[i];
                    cache.push(next);
                }
                term = &term * &cache[ei as usize];
            }
            acc += &term;
        }
        acc
    }

    pub fn eval_complex(&self, point: &[Complex64]) -> Complex64 {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in self.terms.iter() {
            let mut term = c.to_complex();
            for (i, &ei) in e.iter().enumerate() {
                if ei > 0 {
                    term *= point[i].powi(ei as i32);
                }
            }
            acc += term;
        }
        acc
    }

    /// Substitute each variable by the given polynomial (full composition).
    /// All substituted polynomials must share a variable count.
    pub fn substitute(&self, subs: &[SparsePoly]) -> SparsePoly {
        assert_eq!(subs.len(), self.nvars);
        let out_vars = if subs.is_empty() { 0 } else { subs[0].nvars };
        for s in subs {
            assert_eq!(s.nvars, out_vars);
        }
        // Power caches: for each variable the list [x^1, x^2, x^4, ...] of squarings.
        let mut sq_cache: Vec<Vec<SparsePoly>> = subs.iter().map(|s| vec![s.clone()]).collect();
        let mut acc = SparsePoly::zero(out_vars);
        for (e, c) in self.terms.iter() {
            let mut term = SparsePoly::constant(out_vars, c.clone());
            for (i, &ei) in e.iter().enumerate() {
                if ei == 0 {
                    continue;
                }
                let mut rem = ei;
                let mut bit = 0usize;
                while rem > 0 {
                    while sq_cache[i].len() <= bit {
                        let last = sq_cache[i].last().unwrap();
                        let next = last.mul(last);
                        sq_cache[i].push(next);
                    }
                    if rem & 1 == 1 {
                        term = term.mul(&sq_cache[i][bit]);
                    }
                    rem >>= 1;
                    bit += 1;
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Restrict to the affine chart where variable `i` is set to 1; the
    /// result keeps the remaining variables in their original order.
    pub fn set_var_to_one(&self, i: usize) -> SparsePoly {
        let mut out = SparsePoly::zero(self.nvars - 1);
        for (e, c) in self.terms.iter() {
            let ne: Vec<u32> = e
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, &x)| x)
                .collect();
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Shift variables: x_i -> x_i + c_i (exact translation).
    pub fn translate(&self, shift: &[GaussRat]) -> SparsePoly {
        assert_eq!(shift.len(), self.nvars);
        let subs: Vec<SparsePoly> = (0..self.nvars)
            .map(|i| SparsePoly::var(self.nvars, i).add(&SparsePoly::constant(self.nvars, shift[i].clone())))
            .collect();
        self.substitute(&subs)
    }

    /// Homogenize an affine polynomial to the given total degree by inserting
    /// a new variable at position `slot`.
    pub fn homogenize_at(&self, slot: usize, degree: u32) -> Result<SparsePoly, Error> {
        let mut out = SparsePoly::zero(self.nvars + 1);
        for (e, c) in self.terms.iter() {
            let d: u32 = e.iter().sum();
            if d > degree {
                return Err(Error::Degree(format!(
                    "term of degree {d} exceeds homogenization degree {degree}"
                )));
            }
            let mut ne = Vec::with_capacity(self.nvars + 1);
            ne.extend_from_slice(&e[..slot]);
            ne.push(degree - d);
            ne.extend_from_slice(&e[slot..]);
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Map variables into a wider polynomial ring: `mapping[i]` is the new
    /// index of old variable i.
    pub fn embed(&self, new_nvars: usize, mapping: &[usize]) -> SparsePoly {
        assert_eq!(mapping.len(), self.nvars);
        let mut out = SparsePoly::zero(new_nvars);
        for (e, c) in self.terms.iter() {
            let mut ne = vec![0u32; new_nvars];
            for (i, &x) in e.iter().enumerate() {
                ne[mapping[i]] += x;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// True if all coefficients are Gaussian integers.
    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_gaussian_integer())
    }

    /// Largest coefficient magnitude, squared (diagnostics and guards).
    pub fn max_coeff_norm_sqr(&self) -> Rat {
        self.terms
            .values()
            .map(|c| c.norm_sqr())
            .max()
            .unwrap_or_else(Rat::zero)
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = ["x0", "x1", "x2", "x3", "x4", "x5"];
        let mut first = true;
        for (e, c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &ei) in e.iter().enumerate() {
                if ei > 0 {
                    let name = names.get(i).copied().unwrap_or("x?");
                    write!(f, "*{name}^{ei}")?;
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Univariate helpers (used for elimination and indeterminacy bookkeeping)
// ---------------------------------------------------------------------------

/// Dense univariate polynomial over the Gaussian rationals, lowest degree first.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly {
    pub coeffs: Vec<GaussRat>,
}

impl UniPoly {
    pub fn from_sparse(p: &SparsePoly) -> UniPoly {
        assert_eq!(p.nvars(), 1);
        let deg = p.degree_in(0).map(|d| d as usize);
        let mut coeffs = vec![GaussRat::zero(); deg.map_or(0, |d| d + 1)];
        for (e, c) in p.terms() {
            coeffs[e[0] as usize] = c.clone();
        }
        UniPoly { coeffs }
    }

    pub fn trim(mut self) -> UniPoly {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, z: &GaussRat) -> GaussRat {
        let mut acc = GaussRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * z + c;
        }
        acc
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_complex();
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly { coeffs: vec![] };
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &GaussRat::from_int(i as i64))
            .collect();
        UniPoly { coeffs }.trim()
    }

    /// Euclidean division; panics on zero divisor.
    pub fn divmod(&self, div: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = div.degree().expect("division by zero polynomial");
        let lead = div.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![GaussRat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let q = rem[k].clone() / lead.clone();
            if !q.is_zero() {
                quot[k - dd] = q.clone();
                for j in 0..=dd {
                    let delta = &div.coeffs[j] * &q;
                    rem[k - dd + j] = &rem[k - dd + j] - &delta;
                }
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        (UniPoly { coeffs: quot }.trim(), UniPoly { coeffs: rem }.trim())
    }

    /// Monic gcd over Q(i).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone().trim();
        let mut b = other.clone().trim();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        if let Some(d) = a.degree() {
            let lead = a.coeffs[d].inv();
            a.coeffs = a.coeffs.iter().map(|c| c * &lead).collect();
        }
        a
    }

    /// All roots, numerically (Durand-Kerner). Intended for small degrees.
    pub fn complex_roots(&self) -> Vec<Complex64> {
        let coeffs: Vec<Complex64> = self.coeffs.iter().map(|c| c.to_complex()).collect();
        complex_roots_c64(&coeffs)
    }
}

/// Durand-Kerner on f64 complex coefficients (lowest degree first).
pub fn complex_roots_c64(coeffs: &[Complex64]) -> Vec<Complex64> {
    let mut coeffs = coeffs.to_vec();
    while coeffs.last().is_some_and(|c| c.norm() == 0.0) {
        coeffs.pop();
    }
    if coeffs.len() <= 1 {
        return vec![];
    }
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let mut roots: Vec<Complex64> = (0..deg)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64) / (deg as f64) + 0.7;
            Complex64::from_polar(1.0 + 0.3 * k as f64, angle)
        })
        .collect();
    for _ in 0..400 {
        let mut max_delta = 0.0f64;
        for i in 0..deg {
            let mut num = Complex64::new(0.0, 0.0);
            for c in monic.iter().rev() {
                num = num * roots[i] + c;
            }
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if j != i {
                    den *= roots[i] - roots[j];
                }
            }
            if den.norm() < 1e-300 {
                continue;
            }
            let delta = num / den;
            roots[i] -= delta;
            max_delta = max_delta.max(delta.norm());
        }
        if max_delta < 1e-14 {
            break;
        }
    }
    roots
}

/// Resultant of two univariate polynomials via the Sylvester determinant,
/// computed exactly by Gaussian elimination over Q(i).
pub fn resultant(p: &UniPoly, q: &UniPoly) -> GaussRat {
    let p = p.clone().trim();
    let q = q.clone().trim();
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return GaussRat::zero();
    };
    if dp == 0 {
        return p.coeffs[0].pow(dq as u32);
    }
    if dq == 0 {
        return q.coeffs[0].pow(dp as u32);
    }
    let n = dp + dq;
    let mut m = vec![vec![GaussRat::zero(); n]; n];
    for (row, mrow) in m.iter_mut().enumerate().take(dq) {
        for (j, c) in p.coeffs.iter().rev().enumerate() {
            mrow[row + j] = c.clone();
        }
    }
    for row in 0..dp {
        for (j, c) in q.coeffs.iter().rev().enumerate() {
            m[dq + row][row + j] = c.clone();
        }
    }
    // Exact Gaussian elimination tracking the determinant.
    let mut det = GaussRat::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(pr) = pivot else {
            return GaussRat::zero();
        };
        if pr != col {
            m.swap(pr, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det = &det * &pv;
        let inv = pv.inv();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            let (head, tail) = m.split_at_mut(r);
            let src = &head[col];
            let dst = &mut tail[0];
            for j in col..n {
                let delta = &src[j] * &factor;
                dst[j] = &dst[j] - &delta;
            }
        }
    }
    det
}

/// Resultant of two bivariate polynomials with respect to the second variable:
/// entries of the Sylvester matrix are univariate in the first variable.
/// Uses cofactor expansion; intended for the small matrices of degree <= 2 inputs.
pub fn resultant_bivar_second(p: &SparsePoly, q: &SparsePoly) -> SparsePoly {
    assert_eq!(p.nvars(), 2);
    assert_eq!(q.nvars(), 2);
    let dp = p.degree_in(1).unwrap_or(0) as usize;
    let dq = q.degree_in(1).unwrap_or(0) as usize;
    if dp == 0 && dq == 0 {
        // Res of two constants (in v): conventionally 1 when both nonzero.
        return SparsePoly::one(1);
    }
    // coefficient of v^k as univariate poly in u
    let coeff = |f: &SparsePoly, k: usize| -> SparsePoly {
        let mut out = SparsePoly::zero(1);
        for (e, c) in f.terms() {
            if e[1] as usize == k {
                out = out.add(&SparsePoly::monomial(1, vec![e[0]], c.clone()));
            }
        }
        out
    };
    if dp == 0 {
        return coeff(p, 0).pow(dq as u32);
    }
    if dq == 0 {
        return coeff(q, 0).pow(dp as u32);
    }
    let n = dp + dq;
    let mut m: Vec<Vec<SparsePoly>> = vec![vec![SparsePoly::zero(1); n]; n];
    for row in 0..dq {
        for j in 0..=dp {
            m[row][row + j] = coeff(p, dp - j);
        }
    }
    for row in 0..dp {
        for j in 0..=dq {
            m[dq + row][row + j] = coeff(q, dq - j);
        }
    }
    det_poly(&m)
}

fn det_poly(m: &[Vec<SparsePoly>]) -> SparsePoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = SparsePoly::zero(1);
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<SparsePoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let sub = det_poly(&minor);
        let signed = if col % 2 == 0 { sub } else { sub.neg() };
        acc = acc.add(&m[0][col].mul(&signed));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    fn gi(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    #[test]
    fn arithmetic_and_eval_agree() {
        // (x+y)^2 = x^2 + 2xy + y^2
        let x = SparsePoly::var(2, 0);
        let y = SparsePoly::var(2, 1);
        let s = x.add(&y);
        let sq = s.pow(2);
        assert_eq!(sq.num_terms(), 3);
        let p = [gi(3), gi(-2)];
        assert_eq!(sq.eval_gauss(&p), gi(1));
        let pc = [Complex64::new(3.0, 0.0), Complex64::new(-2.0, 0.0)];
        assert!((sq.eval_complex(&pc).re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn substitution_composes() {
        // p = x^2 + y, substitute x -> u+v, y -> uv gives (u+v)^2 + uv
        let p = SparsePoly::var(2, 0).pow(2).add(&SparsePoly::var(2, 1));
        let u = SparsePoly::var(2, 0);
        let v = SparsePoly::var(2, 1);
        let composed = p.substitute(&[u.add(&v), u.mul(&v)]);
        let point = [gi(2), gi(5)];
        assert_eq!(composed.eval_gauss(&point), gi(49 + 10));
    }

    #[test]
    fn translation_shifts_vanishing_order() {
        // x^2 - 1 vanishes to order 1 at x=1
        let p = SparsePoly::var(1, 0).pow(2).sub(&SparsePoly::one(1));
        let t = p.translate(&[gi(1)]);
        assert_eq!(t.min_total_degree(), Some(1));
    }

    #[test]
    fn homogenize_and_chart_roundtrip() {
        // x^2 + y  ->  degree-2 in (t,x,y): x^2 + y t
        let p = SparsePoly::from_terms(
            2,
            [(vec![2, 0], gi(1)), (vec![0, 1], gi(1))],
        );
        let h = p.homogenize_at(0, 2).unwrap();
        assert_eq!(h.homogeneous_degree(), Some(2));
        let back = h.set_var_to_one(0);
        assert_eq!(back, p);
    }

    #[test]
    fn monomial_division() {
        let p = SparsePoly::from_terms(2, [(vec![2, 1], gi(3)), (vec![1, 1], gi(-1))]);
        let q = p.div_monomial(&[1, 1]).unwrap();
        assert_eq!(q.total_degree(), Some(1));
        assert!(p.div_monomial(&[2, 0]).is_err());
    }

    #[test]
    fn univariate_gcd_and_roots() {
        // (x-1)(x-2)(x+3) and (x-2)(x+3) share (x-2)(x+3)
        let x = SparsePoly::var(1, 0);
        let f1 = x.sub(&SparsePoly::one(1));
        let f2 = x.sub(&SparsePoly::constant(1, gi(2)));
        let f3 = x.add(&SparsePoly::constant(1, gi(3)));
        let a = UniPoly::from_sparse(&f1.mul(&f2).mul(&f3));
        let b = UniPoly::from_sparse(&f2.mul(&f3));
        let g = a.gcd(&b);
        assert_eq!(g.degree(), Some(2));
        let roots = g.complex_roots();
        let mut vals: Vec<f64> = roots.iter().map(|r| r.re).collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((vals[0] + 3.0).abs() < 1e-9 && (vals[1] - 2.0).abs() < 1e-9);
    }

    #[test]
    fn resultant_detects_common_roots() {
        let x = SparsePoly::var(1, 0);
        let f = UniPoly::from_sparse(&x.pow(2).sub(&SparsePoly::one(1))); // x^2-1
        let g = UniPoly::from_sparse(&x.sub(&SparsePoly::one(1))); // x-1
        assert!(resultant(&f, &g).is_zero());
        let h = UniPoly::from_sparse(&x.sub(&SparsePoly::constant(1, gi(2))));
        assert!(!resultant(&f, &h).is_zero());
    }

    #[test]
    fn bivariate_resultant_eliminates() {
        // p = u^2 - 1 (no v), q = v^2 - 1: Res_v = (u^2-1)^2
        let u = SparsePoly::var(2, 0);
        let v = SparsePoly::var(2, 1);
        let p = u.pow(2).sub(&SparsePoly::one(2));
        let q = v.pow(2).sub(&SparsePoly::one(2));
        let r = resultant_bivar_second(&p, &q);
        let expected = SparsePoly::var(1, 0)
            .pow(2)
            .sub(&SparsePoly::one(1))
            .pow(2);
        assert_eq!(r, expected);
    }

    #[test]
    fn big_exponent_eval_is_exact() {
        let x = SparsePoly::var(1, 0);
        let p = x.pow(64);
        let v = p.eval_gauss(&[GaussRat::new(rat_int(2), rat_int(0))]);
        assert_eq!(v.re, rat_int(2).pow(64.into()));
    }
}
