//! Constructors for the named potential families: rational-map Green
//! functions, the cusp family, the one-pole family on P^1 x P^1, hyperplane
//! averages, and the isotropic-pole model potentials.

use crate::error::{Error, Result};
use crate::exact::{GaussRat, Rat};
use crate::geometry::{ProjPoint, Space};
use crate::poly::{resultant, resultant_bivar_second, SparsePoly, UniPoly};
use crate::potential::{LogNormPotential, LogTerm};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A rational-map Green function together with its recorded pole set.
#[derive(Clone, Debug)]
pub struct RationalGreen {
    pub potential: LogNormPotential,
    /// The indeterminacy set, when known exactly (supplied, or solved for
    /// degree <= 2).
    pub indeterminacy: Option<Vec<ProjPoint>>,
}

/// Green function of a rational map with finite indeterminacy set: the
/// potential (1/d)·log|F| - log|z|.
///
/// On P^2 finiteness is certified by restricting the two components to random
/// rational lines and checking a nonzero resultant. The pole set is recorded
/// when supplied by the caller, or solved exactly by elimination when d <= 2.
pub fn make_rational_green(
    components: Vec<SparsePoly>,
    space: Space,
    supplied_poles: Option<Vec<ProjPoint>>,
) -> Result<RationalGreen> {
    let n = space.dim();
    if matches!(space, Space::P1xP1) {
        return Err(Error::SpaceMismatch(
            "rational Green functions are built on projective spaces".into(),
        ));
    }
    if components.len() != n {
        return Err(Error::Parameter(format!(
            "expected {n} components on {space}, got {}",
            components.len()
        )));
    }
    let nv = space.num_coords();
    let mut degree = None;
    for c in &components {
        if c.nvars() != nv {
            return Err(Error::Parameter("component variable count mismatch".into()));
        }
        let d = c
            .homogeneous_degree()
            .ok_or_else(|| Error::Degree("components must be homogeneous".into()))?;
        match degree {
            None => degree = Some(d),
            Some(d0) if d0 == d => {}
            _ => return Err(Error::Degree("components have different degrees".into())),
        }
    }
    let d = degree.unwrap();
    if d == 0 {
        return Err(Error::Degree("degree must be >= 1".into()));
    }

    if space == Space::P2 {
        certify_finite_intersection(&components[0], &components[1])?;
    }

    let scale = Rat::new(BigInt::one(), BigInt::from(d));
    let potential = LogNormPotential::new(
        space,
        components.clone(),
        scale,
        vec![Rat::one()],
        vec![],
    )?;

    let indeterminacy = if let Some(poles) = supplied_poles {
        let mut seen: Vec<ProjPoint> = Vec::new();
        for p in poles {
            if p.space() != space {
                return Err(Error::SpaceMismatch("pole on wrong space".into()));
            }
            for c in &components {
                let chart = p.natural_chart();
                let aff = p.chart_affine_exact(chart)?.ok_or(Error::InexactPoint)?;
                let restricted = crate::potential::restrict_to_chart(c, space, chart);
                if !restricted.eval_gauss(&aff).is_zero() {
                    return Err(Error::Parameter(format!(
                        "supplied pole {p} does not annihilate all components"
                    )));
                }
            }
            if !seen.iter().any(|q| q.same_point(&p)) {
                seen.push(p);
            }
        }
        Some(seen)
    } else if d <= 2 {
        Some(match space {
            Space::P1 => binary_form_points(&components[0])?,
            Space::P2 => common_zeros_p2(&components[0], &components[1])?,
            Space::P1xP1 => unreachable!(),
        })
    } else {
        None
    };

    Ok(RationalGreen {
        potential,
        indeterminacy,
    })
}

/// Restrict both components to random rational lines; a nonzero resultant on
/// some line certifies that the common zero set is finite.
fn certify_finite_intersection(p: &SparsePoly, q: &SparsePoly) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_11ae);
    for _ in 0..8 {
        let line: Vec<SparsePoly> = (0..3)
            .map(|_| {
                let a = GaussRat::from_int(rng.gen_range(-9..=9));
                let b = GaussRat::from_int(rng.gen_range(-9..=9));
                SparsePoly::constant(1, a).add(&SparsePoly::var(1, 0).scale(&b))
            })
            .collect();
        let pu = UniPoly::from_sparse(&p.substitute(&line));
        let qu = UniPoly::from_sparse(&q.substitute(&line));
        if pu.is_zero() || qu.is_zero() {
            continue;
        }
        if !resultant(&pu, &qu).is_zero() {
            return Ok(());
        }
    }
    Err(Error::NotFinite(
        "components share a positive-dimensional zero set (resultant vanished on every test line)"
            .into(),
    ))
}

/// Partially evaluate a bivariate polynomial at an exact value of its first
/// variable, leaving a univariate polynomial in the second.
fn partial_eval_first(p: &SparsePoly, value: &GaussRat) -> SparsePoly {
    let subs = [
        SparsePoly::constant(1, value.clone()),
        SparsePoly::var(1, 0),
    ];
    p.substitute(&subs)
}

/// Exact common zeros of two homogeneous polynomials of degree <= 2 on P^2.
fn common_zeros_p2(p: &SparsePoly, q: &SparsePoly) -> Result<Vec<ProjPoint>> {
    let mut found: Vec<ProjPoint> = Vec::new();
    for chart in 0..3 {
        let pk = crate::potential::restrict_to_chart(p, Space::P2, chart);
        let qk = crate::potential::restrict_to_chart(q, Space::P2, chart);
        if pk.is_zero() && qk.is_zero() {
            return Err(Error::NotFinite("both components vanish on a chart".into()));
        }
        let res = resultant_bivar_second(&pk, &qk);
        if res.is_zero() {
            return Err(Error::NotFinite(
                "chart resultant vanishes identically".into(),
            ));
        }
        let res_uni = UniPoly::from_sparse(&res);
        for u0 in res_uni.complex_roots() {
            match crate::exact::reconstruct_gauss(u0, 1_000_000, 1e-6) {
                Some(u) if res_uni.eval(&u).is_zero() => {
                    let pv = UniPoly::from_sparse(&partial_eval_first(&pk, &u));
                    let qv = UniPoly::from_sparse(&partial_eval_first(&qk, &u));
                    if pv.is_zero() && qv.is_zero() {
                        return Err(Error::NotFinite(format!(
                            "components share the line u = {u:?} in chart {chart}"
                        )));
                    }
                    let candidates: Vec<GaussRat> = if pv.is_zero() || qv.is_zero() {
                        let nz = if pv.is_zero() { &qv } else { &pv };
                        gauss_rational_roots(nz)?
                    } else {
                        let g = pv.gcd(&qv);
                        if g.degree().unwrap_or(0) == 0 {
                            continue;
                        }
                        gauss_rational_roots(&g)?
                    };
                    for v in candidates {
                        if pv.eval(&v).is_zero() && qv.eval(&v).is_zero() {
                            let pt = point_from_chart_p2(chart, &u, &v);
                            if !found.iter().any(|f| f.same_point(&pt)) {
                                found.push(pt);
                            }
                        }
                    }
                }
                _ => {
                    // Not reconstructible: decide whether it is a genuine
                    // common point (then the pole set is irrational) or an
                    // extraneous resultant root.
                    if has_numeric_common_root(&pk, &qk, u0) {
                        return Err(Error::IrrationalIndeterminacy);
                    }
                }
            }
        }
    }
    Ok(found)
}

/// All Gaussian-rational roots of a univariate polynomial, found numerically
/// and verified exactly. Errors if a numeric root resists reconstruction.
fn gauss_rational_roots(p: &UniPoly) -> Result<Vec<GaussRat>> {
    let mut out = Vec::new();
    for r in p.complex_roots() {
        match crate::exact::reconstruct_gauss(r, 1_000_000, 1e-6) {
            Some(g) if p.eval(&g).is_zero() => {
                if !out.contains(&g) {
                    out.push(g);
                }
            }
            _ => return Err(Error::IrrationalIndeterminacy),
        }
    }
    Ok(out)
}

fn has_numeric_common_root(pk: &SparsePoly, qk: &SparsePoly, u0: num_complex::Complex64) -> bool {
    let sub = |f: &SparsePoly| {
        let mut coeffs = vec![num_complex::Complex64::new(0.0, 0.0); 8];
        for (e, c) in f.terms() {
            let k = e[1] as usize;
            if k >= coeffs.len() {
                coeffs.resize(k + 1, num_complex::Complex64::new(0.0, 0.0));
            }
            coeffs[k] += c.to_complex() * u0.powi(e[0] as i32);
        }
        coeffs
    };
    let pc = sub(pk);
    let qc = sub(qk);
    // roots of the numerically restricted pk, tested against qk
    for v in crate::poly::complex_roots_c64(&pc) {
        let qval: num_complex::Complex64 = qc
            .iter()
            .enumerate()
            .map(|(k, c)| c * v.powi(k as i32))
            .sum();
        if qval.norm() < 1e-6 {
            return true;
        }
    }
    false
}

fn point_from_chart_p2(chart: usize, u: &GaussRat, v: &GaussRat) -> ProjPoint {
    let one = GaussRat::one();
    let coords = match chart {
        0 => vec![one, u.clone(), v.clone()],
        1 => vec![u.clone(), one, v.clone()],
        _ => vec![u.clone(), v.clone(), one],
    };
    ProjPoint::new(Space::P2, coords).expect("valid chart point")
}

/// Projective zeros of a binary form (exact, Gaussian-rational ones).
fn binary_form_points(p: &SparsePoly) -> Result<Vec<ProjPoint>> {
    let mut out: Vec<ProjPoint> = Vec::new();
    // Point at infinity [0:1] iff the z1-pure coefficient is absent.
    let d = p.homogeneous_degree().unwrap();
    if p.terms().all(|(e, _)| e[1] != d) {
        out.push(ProjPoint::from_ints(Space::P1, &[0, 1])?);
    }
    let affine = UniPoly::from_sparse(&p.set_var_to_one(0));
    for r in gauss_rational_roots(&affine)? {
        let pt = ProjPoint::new(Space::P1, vec![GaussRat::one(), r])?;
        if !out.iter().any(|q| q.same_point(&pt)) {
            out.push(pt);
        }
    }
    Ok(out)
}

/// The cusp family on P^2 in coordinates [t:x:y]: components
/// (y^k t^(n-k) - x^n, y^n) with scale 1/n; pole at [1:0:0] with Lelong
/// number k/n and unit Dirac Monge-Ampere mass.
pub fn make_cusp_green(n: u32, k: u32) -> Result<(LogNormPotential, ProjPoint)> {
    if k < 1 || k >= n {
        return Err(Error::Parameter(format!(
            "cusp family needs 1 <= k < n, got (n,k)=({n},{k})"
        )));
    }
    let c1 = SparsePoly::from_terms(
        3,
        [
            (vec![n - k, 0, k], GaussRat::one()),
            (vec![0, n, 0], -GaussRat::one()),
        ],
    );
    let c2 = SparsePoly::monomial(3, vec![0, 0, n], GaussRat::one());
    let pot = LogNormPotential::new(
        Space::P2,
        vec![c1, c2],
        Rat::new(BigInt::one(), BigInt::from(n)),
        vec![Rat::one()],
        vec![],
    )?;
    let pole = ProjPoint::from_ints(Space::P2, &[1, 0, 0])?;
    Ok((pot, pole))
}

/// One-pole Green potentials on P^1 x P^1 from the three-pole rational maps
/// on P^2: the bihomogeneous potential with components
/// z1^(nk) w1^(mk) and z1^(nk) w0^(mk) + z0^(nk) w1^(mk) + (z1 w1 Q) written
/// bihomogeneously, scale 1/(nk), reference weights (1, m/n).
///
/// `q` is a homogeneous polynomial in (t0,t1,t2) of degree (m+n)k-2 with
/// deg_t1 <= nk-1 and deg_t2 <= mk-1 (it may be zero).
pub fn make_greenp1_family(
    n: u32,
    m: u32,
    k: u32,
    q: &SparsePoly,
) -> Result<(LogNormPotential, ProjPoint)> {
    if n < 1 || m < n || k < 1 {
        return Err(Error::Parameter(format!(
            "need 1 <= n <= m and k >= 1, got (n,m,k)=({n},{m},{k})"
        )));
    }
    if q.nvars() != 3 {
        return Err(Error::Parameter("Q must live in (t0,t1,t2)".into()));
    }
    let want_deg = (m + n) * k;
    if want_deg < 2 {
        return Err(Error::Parameter("degree (m+n)k must be >= 2".into()));
    }
    if !q.is_zero() {
        match q.homogeneous_degree() {
            Some(d) if d == want_deg - 2 => {}
            _ => {
                return Err(Error::Degree(format!(
                    "Q must be homogeneous of degree {}",
                    want_deg - 2
                )))
            }
        }
        if q.degree_in(1).unwrap_or(0) > n * k - 1 {
            return Err(Error::Degree(format!("deg_t1 Q must be <= {}", n * k - 1)));
        }
        if q.degree_in(2).unwrap_or(0) > m * k - 1 {
            return Err(Error::Degree(format!("deg_t2 Q must be <= {}", m * k - 1)));
        }
    }
    let nk = n * k;
    let mk = m * k;
    let c1 = SparsePoly::monomial(4, vec![0, nk, 0, mk], GaussRat::one());
    let mut c2 = SparsePoly::from_terms(
        4,
        [
            (vec![0, nk, mk, 0], GaussRat::one()),
            (vec![nk, 0, 0, mk], GaussRat::one()),
        ],
    );
    for (e, c) in q.terms() {
        let (q1, q2) = (e[1], e[2]);
        // z1 w1 Q bihomogenized to bidegree (nk, mk)
        let exps = vec![nk - 1 - q1, 1 + q1, mk - 1 - q2, 1 + q2];
        c2 = c2.add(&SparsePoly::monomial(4, exps, c.clone()));
    }
    let pot = LogNormPotential::new(
        Space::P1xP1,
        vec![c1, c2],
        Rat::new(BigInt::one(), BigInt::from(nk)),
        vec![Rat::one(), Rat::new(BigInt::from(m), BigInt::from(n))],
        vec![],
    )?;
    let pole = ProjPoint::from_ints(Space::P1xP1, &[1, 0, 1, 0])?;
    Ok((pot, pole))
}

/// Average of n+1 hyperplane currents in general position on P^n:
/// (1/(n+1))·log|l_1 ... l_(n+1)| - log|z|, a single product component.
pub fn make_hyperplane_avg(lines: Vec<SparsePoly>, space: Space) -> Result<LogNormPotential> {
    let nv = space.num_coords();
    if matches!(space, Space::P1xP1) {
        return Err(Error::SpaceMismatch("hyperplane averages live on P^n".into()));
    }
    if lines.len() != nv {
        return Err(Error::Parameter(format!(
            "expected {} linear forms on {space}",
            nv
        )));
    }
    for l in &lines {
        if l.nvars() != nv || l.homogeneous_degree() != Some(1) {
            return Err(Error::Parameter("each form must be linear homogeneous".into()));
        }
    }
    // general position: every n of the n+1 forms are linearly independent
    let n = space.dim();
    for omit in 0..lines.len() {
        let rows: Vec<Vec<GaussRat>> = lines
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != omit)
            .map(|(_, l)| linear_form_coeffs(l, nv))
            .collect();
        if exact_rank(rows) != n {
            return Err(Error::Parameter(format!(
                "degenerate position: forms excluding #{omit} are dependent"
            )));
        }
    }
    let mut product = SparsePoly::one(nv);
    for l in &lines {
        product = product.mul(l);
    }
    LogNormPotential::new(
        space,
        vec![product],
        Rat::new(BigInt::one(), BigInt::from(nv as u32)),
        vec![Rat::one()],
        vec![],
    )
}

fn linear_form_coeffs(l: &SparsePoly, nv: usize) -> Vec<GaussRat> {
    let mut row = vec![GaussRat::zero(); nv];
    for (e, c) in l.terms() {
        let i = e.iter().position(|&x| x == 1).unwrap();
        row[i] = c.clone();
    }
    row
}

fn exact_rank(mut rows: Vec<Vec<GaussRat>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(pr) = pivot else { continue };
        rows.swap(rank, pr);
        let inv = rows[rank][col].inv();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] * &inv;
            for c in col..ncols {
                let delta = &rows[rank][c] * &factor;
                rows[r][c] = &rows[r][c] - &delta;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Intersection point of two independent linear forms on P^2 (exact cross
/// product of the coefficient vectors).
pub fn line_intersection_p2(l1: &SparsePoly, l2: &SparsePoly) -> Result<ProjPoint> {
    let a = linear_form_coeffs(l1, 3);
    let b = linear_form_coeffs(l2, 3);
    let coords = vec![
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ];
    ProjPoint::new(Space::P2, coords)
}

/// The model potential with an isotropic pole of Lelong number min{a,b} at a
/// point of P^1 x P^1: m·log|(z1 w0, w1 z0)| + (a-m)·log|z0| + (b-m)·log|w0|,
/// moved to the requested pole by an exact linear change of coordinates.
pub fn make_rab(a: &Rat, b: &Rat, pole: &ProjPoint) -> Result<LogNormPotential> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::Parameter("need a, b > 0".into()));
    }
    if pole.space() != Space::P1xP1 {
        return Err(Error::SpaceMismatch("pole must lie on P1xP1".into()));
    }
    let m = a.clone().min(b.clone());
    let pc = pole.coords();
    let (p0, p1, q0, q1) = (&pc[0], &pc[1], &pc[2], &pc[3]);

    // Per-factor linear change sending the pole to ([1:0],[1:0]).
    let z0 = SparsePoly::var(4, 0);
    let z1 = SparsePoly::var(4, 1);
    let w0 = SparsePoly::var(4, 2);
    let w1 = SparsePoly::var(4, 3);
    let nz0 = z0.scale(&p0.conj()).add(&z1.scale(&p1.conj()));
    let nz1 = z0.scale(p1).sub(&z1.scale(p0));
    let nw0 = w0.scale(&q0.conj()).add(&w1.scale(&q1.conj()));
    let nw1 = w0.scale(q1).sub(&w1.scale(q0));

    let c1 = nz1.mul(&nw0);
    let c2 = nw1.mul(&nz0);
    let mut log_terms = Vec::new();
    let wa = a - &m;
    if !wa.is_zero() {
        log_terms.push(LogTerm {
            poly: nz0.clone(),
            weight: wa,
        });
    }
    let wb = b - &m;
    if !wb.is_zero() {
        log_terms.push(LogTerm {
            poly: nw0.clone(),
            weight: wb,
        });
    }
    LogNormPotential::new(
        Space::P1xP1,
        vec![c1, c2],
        m,
        vec![a.clone(), b.clone()],
        log_terms,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};
    use crate::geometry::ProjPoint;

    fn gi(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    fn two_conic_components() -> Vec<SparsePoly> {
        // (z1^2 - z0^2, z2^2 - z0^2)
        let z0sq = SparsePoly::monomial(3, vec![2, 0, 0], gi(1));
        let c1 = SparsePoly::monomial(3, vec![0, 2, 0], gi(1)).sub(&z0sq);
        let c2 = SparsePoly::monomial(3, vec![0, 0, 2], gi(1)).sub(&z0sq);
        vec![c1, c2]
    }

    #[test]
    fn two_conic_indeterminacy() {
        // Spec: I_f = {[1:+-1:+-1]}, 4 points.
        let g = make_rational_green(two_conic_components(), Space::P2, None).unwrap();
        let poles = g.indeterminacy.unwrap();
        assert_eq!(poles.len(), 4);
        for (s1, s2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let p = ProjPoint::from_ints(Space::P2, &[1, s1, s2]).unwrap();
            assert!(poles.iter().any(|q| q.same_point(&p)));
        }
        // Lelong number 1/d = 1/2 at each pole (Example of degree-2 maps).
        for p in &poles {
            assert_eq!(g.potential.lelong_exact(p).unwrap(), rat(1, 2));
        }
    }

    #[test]
    fn linear_projection_indeterminacy() {
        // F = (z1, z2): I_f = {[1:0:0]}.
        let comps = vec![SparsePoly::var(3, 1), SparsePoly::var(3, 2)];
        let g = make_rational_green(comps, Space::P2, None).unwrap();
        let poles = g.indeterminacy.unwrap();
        assert_eq!(poles.len(), 1);
        assert!(poles[0].same_point(&ProjPoint::from_ints(Space::P2, &[1, 0, 0]).unwrap()));
    }

    #[test]
    fn common_line_is_rejected() {
        // F = (z1 z2, z1 z0) shares the line z1 = 0.
        let c1 = SparsePoly::var(3, 1).mul(&SparsePoly::var(3, 2));
        let c2 = SparsePoly::var(3, 1).mul(&SparsePoly::var(3, 0));
        let err = make_rational_green(vec![c1, c2], Space::P2, None).unwrap_err();
        assert!(matches!(err, Error::NotFinite(_)));
    }

    #[test]
    fn supplied_poles_are_verified() {
        let g = make_rational_green(
            two_conic_components(),
            Space::P2,
            Some(vec![ProjPoint::from_ints(Space::P2, &[1, 1, 1]).unwrap()]),
        )
        .unwrap();
        assert_eq!(g.indeterminacy.unwrap().len(), 1);

        let bad = make_rational_green(
            two_conic_components(),
            Space::P2,
            Some(vec![ProjPoint::from_ints(Space::P2, &[1, 2, 1]).unwrap()]),
        );
        assert!(bad.is_err());
    }

    #[test]
    fn cusp_lelong_numbers() {
        // Spec: nu = k/n for (n,k) = (2,1), (3,2), (5,3).
        for (n, k) in [(2u32, 1u32), (3, 2), (5, 3)] {
            let (pot, pole) = make_cusp_green(n, k).unwrap();
            assert_eq!(
                pot.lelong_exact(&pole).unwrap(),
                Rat::new(BigInt::from(k), BigInt::from(n))
            );
        }
        assert!(make_cusp_green(3, 3).is_err());
        assert!(make_cusp_green(3, 0).is_err());
    }

    #[test]
    fn cusp_hand_example_value() {
        // (n,k) = (2,1): g([1:x:y]) = (1/4) log(|y - x^2|^2 + |y^2|^2)
        //                             - (1/2) log(1 + |x|^2 + |y|^2)
        let (pot, _) = make_cusp_green(2, 1).unwrap();
        let p = ProjPoint::from_ints(Space::P2, &[1, 2, 1]).unwrap();
        let v = pot.eval_exact(&p).unwrap();
        let expected = 0.25 * ((1.0f64 - 4.0).powi(2) + 1.0).ln() - 0.5 * 6.0f64.ln();
        assert!((v - expected).abs() < 1e-12);
    }

    #[test]
    fn greenp1_lelong_values() {
        // (n,m,k) = (1,1,3): Q of degree 4 with bounds deg_t1, deg_t2 <= 2.
        // Q with nonzero constant term (in the chart t0=1): nu = 2/3.
        let q = SparsePoly::monomial(3, vec![4, 0, 0], gi(1));
        let (pot, pole) = make_greenp1_family(1, 1, 3, &q).unwrap();
        assert_eq!(pot.lelong_exact(&pole).unwrap(), rat(2, 3));

        // Q(1,0,0) = 0 with generic linear part: nu = 1.
        let q = SparsePoly::monomial(3, vec![3, 1, 0], gi(1));
        let (pot, pole) = make_greenp1_family(1, 1, 3, &q).unwrap();
        assert_eq!(pot.lelong_exact(&pole).unwrap(), rat_int(1));

        // n=m=k=1, Q nonzero constant: nu = 1 (minimal order 2 ... wait nk=1)
        let q = SparsePoly::constant(3, gi(1));
        let (pot, pole) = make_greenp1_family(1, 1, 1, &q).unwrap();
        assert_eq!(pot.lelong_exact(&pole).unwrap(), rat_int(1));
    }

    #[test]
    fn greenp1_validates_bounds() {
        // deg_t1 Q too big for (1,1,3): t1^3 t0 has deg_t1 = 3 > 2.
        let q = SparsePoly::monomial(3, vec![1, 3, 0], gi(1));
        assert!(make_greenp1_family(1, 1, 3, &q).is_err());
        // wrong total degree
        let q = SparsePoly::monomial(3, vec![3, 0, 0], gi(1));
        assert!(make_greenp1_family(1, 1, 3, &q).is_err());
        // m < n
        let q = SparsePoly::zero(3);
        assert!(make_greenp1_family(2, 1, 1, &q).is_err());
    }

    #[test]
    fn hyperplane_avg_orders() {
        // Lines z0, z1, z2 on P^2: nu = 2/3 at [1:0:0]; 0 at a generic point.
        let lines = vec![
            SparsePoly::var(3, 0),
            SparsePoly::var(3, 1),
            SparsePoly::var(3, 2),
        ];
        let pot = make_hyperplane_avg(lines, Space::P2).unwrap();
        let corner = ProjPoint::from_ints(Space::P2, &[1, 0, 0]).unwrap();
        assert_eq!(pot.lelong_exact(&corner).unwrap(), rat(2, 3));
        let generic = ProjPoint::from_ints(Space::P2, &[1, 2, 3]).unwrap();
        assert_eq!(pot.lelong_exact(&generic).unwrap(), rat_int(0));

        // P^1: two points, nu = 1/2 at each.
        let lines = vec![SparsePoly::var(2, 0), SparsePoly::var(2, 1)];
        let pot = make_hyperplane_avg(lines, Space::P1).unwrap();
        let p = ProjPoint::from_ints(Space::P1, &[1, 0]).unwrap();
        assert_eq!(pot.lelong_exact(&p).unwrap(), rat(1, 2));
    }

    #[test]
    fn hyperplane_avg_rejects_degenerate() {
        // Repeated form: the pair (z0, z0) is dependent.
        let lines = vec![
            SparsePoly::var(3, 0),
            SparsePoly::var(3, 0),
            SparsePoly::var(3, 1),
        ];
        assert!(make_hyperplane_avg(lines, Space::P2).is_err());
    }

    #[test]
    fn rab_lelong_and_pole_value() {
        // a=b=1 at the origin chart point (0,0) = [1:0]x[1:0]: nu = 1, -inf at p.
        let pole = ProjPoint::from_ints(Space::P1xP1, &[1, 0, 1, 0]).unwrap();
        let pot = make_rab(&rat_int(1), &rat_int(1), &pole).unwrap();
        assert_eq!(pot.lelong_exact(&pole).unwrap(), rat_int(1));
        assert_eq!(pot.eval_exact(&pole).unwrap(), f64::NEG_INFINITY);

        // a=2, b=3: nu = 2 at a generic pole.
        let pole = ProjPoint::from_ints(Space::P1xP1, &[1, 2, 3, -1]).unwrap();
        let pot = make_rab(&rat_int(2), &rat_int(3), &pole).unwrap();
        assert_eq!(pot.lelong_exact(&pole).unwrap(), rat_int(2));
        assert_eq!(pot.eval_exact(&pole).unwrap(), f64::NEG_INFINITY);
    }

    #[test]
    fn rab_matches_model_at_origin() {
        // At the origin pole the translated potential reduces to the model
        // m log sqrt(|z1 w0|^2 + |w1 z0|^2) + ... up to the unitary |.|
        // factors; check the value at a sample point directly for a=b=1.
        let pole = ProjPoint::from_ints(Space::P1xP1, &[1, 0, 1, 0]).unwrap();
        let pot = make_rab(&rat_int(1), &rat_int(1), &pole).unwrap();
        // point ([1:2],[1:3]): u_{1,1} = log sqrt(|2|^2+|3|^2) - ref
        let p = ProjPoint::from_ints(Space::P1xP1, &[1, 2, 1, 3]).unwrap();
        let expected = 0.5 * (4.0f64 + 9.0).ln() - 0.5 * 5.0f64.ln() - 0.5 * 10.0f64.ln();
        assert!((pot.eval_exact(&p).unwrap() - expected).abs() < 1e-12);
    }
}
