//! The evaluable-potential trait and exact log-norm potentials.
//!
//! A `LogNormPotential` is s·log|F| + sum_j w_j·log|T_j| minus the weighted
//! reference log-norms, for homogeneous (or bihomogeneous) polynomial tuples
//! F = (C_1,...,C_m) and extra factors T_j. All degree bookkeeping is exact;
//! floats appear only in the final logarithms.

use crate::error::{Error, Result};
use crate::exact::{rat_ln, rat_to_f64, GaussRat, Rat};
use crate::geometry::{NumPoint, ProjPoint, Space};
use crate::poly::SparsePoly;
use num_complex::Complex64;
use num_traits::{Signed, Zero};

/// Anything that can be evaluated as an upper-semicontinuous potential on a
/// space; -inf marks poles. Implementations must be pure and thread-safe.
pub trait Potential: Send + Sync {
    fn space(&self) -> Space;

    /// Value at a numeric homogeneous point.
    fn eval(&self, p: &NumPoint) -> f64;

    /// Value at affine chart coordinates.
    fn eval_chart(&self, chart: usize, affine: &[Complex64]) -> Result<f64> {
        let p = NumPoint::from_chart(self.space(), chart, affine)?;
        Ok(self.eval(&p))
    }
}

impl<T: Potential + ?Sized> Potential for &T {
    fn space(&self) -> Space {
        (**self).space()
    }
    fn eval(&self, p: &NumPoint) -> f64 {
        (**self).eval(p)
    }
}

/// An extra logarithmic factor w·log|T| in a potential.
#[derive(Clone, Debug, PartialEq)]
pub struct LogTerm {
    pub poly: SparsePoly,
    pub weight: Rat,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LogNormPotential {
    space: Space,
    components: Vec<SparsePoly>,
    scale: Rat,
    ref_weights: Vec<Rat>,
    log_terms: Vec<LogTerm>,
}

impl LogNormPotential {
    /// Build and validate. The exact identity
    /// scale·deg_g(F) + sum_j weight_j·deg_g(T_j) = ref_weights[g]
    /// must hold per factor g; it is what makes the value descend to the space.
    pub fn new(
        space: Space,
        components: Vec<SparsePoly>,
        scale: Rat,
        ref_weights: Vec<Rat>,
        log_terms: Vec<LogTerm>,
    ) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Parameter("no components".into()));
        }
        if !scale.is_positive() {
            return Err(Error::Parameter("scale must be positive".into()));
        }
        let factors = space.factors();
        if ref_weights.len() != factors.len() {
            return Err(Error::Parameter(format!(
                "expected {} reference weights",
                factors.len()
            )));
        }
        let nv = space.num_coords();
        let mut group_degrees: Option<Vec<u32>> = None;
        for c in &components {
            if c.nvars() != nv {
                return Err(Error::Parameter("component variable count mismatch".into()));
            }
            if c.is_zero() {
                return Err(Error::Parameter("zero component".into()));
            }
            let mut degs = Vec::new();
            for f in factors {
                let group: Vec<usize> = f.clone().collect();
                let d = c
                    .homogeneous_degree_in_group(&group)
                    .ok_or_else(|| Error::Degree("component not homogeneous per factor".into()))?;
                degs.push(d);
            }
            match &group_degrees {
                None => group_degrees = Some(degs),
                Some(g) if *g == degs => {}
                _ => return Err(Error::Degree("components have mixed degrees".into())),
            }
        }
        let degs = group_degrees.unwrap();
        for t in &log_terms {
            if t.poly.nvars() != nv || t.poly.is_zero() {
                return Err(Error::Parameter("bad extra log term".into()));
            }
            if t.weight.is_negative() {
                return Err(Error::Parameter("extra log weights must be >= 0".into()));
            }
        }
        for (g, f) in factors.iter().enumerate() {
            let group: Vec<usize> = f.clone().collect();
            let mut total = &scale * Rat::from_integer(degs[g].into());
            for t in &log_terms {
                let d = t
                    .poly
                    .homogeneous_degree_in_group(&group)
                    .ok_or_else(|| Error::Degree("log term not homogeneous per factor".into()))?;
                total += &t.weight * Rat::from_integer(d.into());
            }
            if total != ref_weights[g] {
                return Err(Error::Degree(format!(
                    "logarithmic homogeneity violated in factor {g}: total weight {total} != reference {}",
                    ref_weights[g]
                )));
            }
        }
        Ok(LogNormPotential {
            space,
            components,
            scale,
            ref_weights,
            log_terms,
        })
    }

    pub fn components(&self) -> &[SparsePoly] {
        &self.components
    }

    pub fn scale(&self) -> &Rat {
        &self.scale
    }

    pub fn ref_weights(&self) -> &[Rat] {
        &self.ref_weights
    }

    pub fn log_terms(&self) -> &[LogTerm] {
        &self.log_terms
    }

    /// Degrees of the components per factor group.
    pub fn group_degrees(&self) -> Vec<u32> {
        self.space
            .factors()
            .iter()
            .map(|f| {
                let group: Vec<usize> = f.clone().collect();
                self.components[0].homogeneous_degree_in_group(&group).unwrap()
            })
            .collect()
    }

    /// Exact evaluation at an exact point; -inf exactly when all components
    /// (or a weighted extra factor) vanish there.
    pub fn eval_exact(&self, p: &ProjPoint) -> Result<f64> {
        if p.space() != self.space {
            return Err(Error::SpaceMismatch(format!(
                "potential on {}, point on {}",
                self.space,
                p.space()
            )));
        }
        // Scale each factor by the largest-modulus coordinate: exact, and the
        // logarithmic homogeneity makes the result independent of the choice.
        let scaled = scale_factors_exact(p);
        let mut norm_sqr_total = Rat::zero();
        for c in &self.components {
            norm_sqr_total += c.eval_gauss(&scaled).norm_sqr();
        }
        if norm_sqr_total.is_zero() {
            return Ok(f64::NEG_INFINITY);
        }
        let mut value = rat_to_f64(&self.scale) * 0.5 * rat_ln(&norm_sqr_total);
        for t in &self.log_terms {
            if t.weight.is_zero() {
                continue;
            }
            let v = t.poly.eval_gauss(&scaled).norm_sqr();
            if v.is_zero() {
                return Ok(f64::NEG_INFINITY);
            }
            value += rat_to_f64(&t.weight) * 0.5 * rat_ln(&v);
        }
        for (g, f) in self.space.factors().iter().enumerate() {
            let mut ns = Rat::zero();
            for i in f.clone() {
                ns += scaled[i].norm_sqr();
            }
            value -= rat_to_f64(&self.ref_weights[g]) * 0.5 * rat_ln(&ns);
        }
        Ok(value)
    }

    /// Exact Lelong number at an exact point: scale times the minimal
    /// vanishing order over components, plus the orders of extra log factors.
    pub fn lelong_exact(&self, p: &ProjPoint) -> Result<Rat> {
        if p.space() != self.space {
            return Err(Error::SpaceMismatch(format!(
                "potential on {}, point on {}",
                self.space,
                p.space()
            )));
        }
        let chart = p.natural_chart();
        let affine = p
            .chart_affine_exact(chart)?
            .ok_or(Error::InexactPoint)?;
        let min_ord = self
            .components
            .iter()
            .map(|c| vanishing_order_in_chart(c, self.space, chart, &affine))
            .min()
            .expect("components nonempty");
        let mut nu = &self.scale * Rat::from_integer(min_ord.into());
        for t in &self.log_terms {
            let ord = vanishing_order_in_chart(&t.poly, self.space, chart, &affine);
            nu += &t.weight * Rat::from_integer(ord.into());
        }
        Ok(nu)
    }
}

/// Restrict a homogeneous polynomial to a chart and return the vanishing
/// order at the given exact affine point.
fn vanishing_order_in_chart(
    poly: &SparsePoly,
    space: Space,
    chart: usize,
    affine: &[GaussRat],
) -> u32 {
    let restricted = restrict_to_chart(poly, space, chart);
    let shifted = restricted.translate(affine);
    // A nonzero homogeneous polynomial cannot vanish identically on a chart
    // that meets its support, but guard anyway.
    shifted.min_total_degree().unwrap_or(0)
}

/// Set the pivot coordinate of each factor to 1.
pub fn restrict_to_chart(poly: &SparsePoly, space: Space, chart: usize) -> SparsePoly {
    let mut pivots = space.chart_pivots(chart).expect("valid chart");
    pivots.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = poly.clone();
    for pv in pivots {
        out = out.set_var_to_one(pv);
    }
    out
}

fn scale_factors_exact(p: &ProjPoint) -> Vec<GaussRat> {
    let mut scaled = p.coords().to_vec();
    for f in p.space().factors() {
        let mut best = f.start;
        let mut best_norm = Rat::zero();
        for i in f.clone() {
            let n = scaled[i].norm_sqr();
            if n > best_norm {
                best_norm = n;
                best = i;
            }
        }
        let inv = scaled[best].inv();
        for i in f.clone() {
            scaled[i] = &scaled[i] * &inv;
        }
    }
    scaled
}

impl Potential for LogNormPotential {
    fn space(&self) -> Space {
        self.space
    }

    fn eval(&self, p: &NumPoint) -> f64 {
        debug_assert_eq!(p.space, self.space);
        let q = p.normalized();
        let coords = q.coords();
        let mut norm_sqr = 0.0f64;
        for c in &self.components {
            norm_sqr += c.eval_complex(coords).norm_sqr();
        }
        if norm_sqr == 0.0 {
            return f64::NEG_INFINITY;
        }
        let mut value = rat_to_f64(&self.scale) * 0.5 * norm_sqr.ln();
        for t in &self.log_terms {
            let v = t.poly.eval_complex(coords).norm_sqr();
            if v == 0.0 {
                return f64::NEG_INFINITY;
            }
            value += rat_to_f64(&t.weight) * 0.5 * v.ln();
        }
        for (g, f) in self.space.factors().iter().enumerate() {
            let ns: f64 = coords[f.clone()].iter().map(|z| z.norm_sqr()).sum();
            value -= rat_to_f64(&self.ref_weights[g]) * 0.5 * ns.ln();
        }
        value
    }
}

/// The reference potential itself, read in a fixed chart, as a global (smooth
/// off the chart divisor) test function.
#[derive(Clone, Debug)]
pub struct FsChartPotential {
    pub class: crate::geometry::KClass,
    pub chart: usize,
}

impl Potential for FsChartPotential {
    fn space(&self) -> Space {
        self.class.space
    }

    fn eval(&self, p: &NumPoint) -> f64 {
        match p.chart_affine(self.chart) {
            Ok(Some(aff)) => crate::geometry::fs_potential(&self.class, self.chart, &aff)
                .unwrap_or(f64::INFINITY),
            _ => f64::INFINITY,
        }
    }
}

/// A potential multiplied by a constant (diagnostics and scaling tests).
pub struct Scaled<P> {
    pub inner: P,
    pub factor: f64,
}

impl<P: Potential> Potential for Scaled<P> {
    fn space(&self) -> Space {
        self.inner.space()
    }
    fn eval(&self, p: &NumPoint) -> f64 {
        self.factor * self.inner.eval(p)
    }
}

// ---------------------------------------------------------------------------
// JSON serialization (exact rational strings, no floats)
// ---------------------------------------------------------------------------

mod json {
    use super::*;
    use serde::{Deserialize, Serialize};

    #[derive(Serialize, Deserialize)]
    struct MonomialJson {
        exponents: Vec<u32>,
        re: String,
        im: String,
    }

    #[derive(Serialize, Deserialize)]
    struct LogTermJson {
        weight: String,
        terms: Vec<MonomialJson>,
    }

    #[derive(Serialize, Deserialize)]
    struct PotentialJson {
        space: Space,
        scale_den: String,
        ref_weights: Vec<String>,
        components: Vec<Vec<MonomialJson>>,
        monomial_terms: Vec<LogTermJson>,
    }

    fn poly_to_json(p: &SparsePoly) -> Vec<MonomialJson> {
        p.terms()
            .map(|(e, c)| MonomialJson {
                exponents: e.clone(),
                re: c.re.to_string(),
                im: c.im.to_string(),
            })
            .collect()
    }

    fn poly_from_json(nvars: usize, terms: &[MonomialJson]) -> Result<SparsePoly> {
        let mut items = Vec::new();
        for t in terms {
            if t.exponents.len() != nvars {
                return Err(Error::Serde("exponent vector length mismatch".into()));
            }
            let re = crate::exact::rat_from_str(&t.re).map_err(Error::Serde)?;
            let im = crate::exact::rat_from_str(&t.im).map_err(Error::Serde)?;
            items.push((t.exponents.clone(), GaussRat::new(re, im)));
        }
        Ok(SparsePoly::from_terms(nvars, items))
    }

    impl LogNormPotential {
        pub fn to_json(&self) -> serde_json::Value {
            let doc = PotentialJson {
                space: self.space,
                scale_den: self.scale.recip().to_string(),
                ref_weights: self.ref_weights.iter().map(|r| r.to_string()).collect(),
                components: self.components.iter().map(poly_to_json).collect(),
                monomial_terms: self
                    .log_terms
                    .iter()
                    .map(|t| LogTermJson {
                        weight: t.weight.to_string(),
                        terms: poly_to_json(&t.poly),
                    })
                    .collect(),
            };
            serde_json::to_value(doc).expect("potential serialization")
        }

        pub fn from_json(v: &serde_json::Value) -> Result<Self> {
            let doc: PotentialJson =
                serde_json::from_value(v.clone()).map_err(|e| Error::Serde(e.to_string()))?;
            let nv = doc.space.num_coords();
            let scale_den = crate::exact::rat_from_str(&doc.scale_den).map_err(Error::Serde)?;
            if scale_den.is_zero() {
                return Err(Error::Serde("scale_den must be nonzero".into()));
            }
            let scale = scale_den.recip();
            let mut ref_weights = Vec::new();
            for w in &doc.ref_weights {
                ref_weights.push(crate::exact::rat_from_str(w).map_err(Error::Serde)?);
            }
            let mut components = Vec::new();
            for c in &doc.components {
                components.push(poly_from_json(nv, c)?);
            }
            let mut log_terms = Vec::new();
            for t in &doc.monomial_terms {
                log_terms.push(LogTerm {
                    weight: crate::exact::rat_from_str(&t.weight).map_err(Error::Serde)?,
                    poly: poly_from_json(nv, &t.terms)?,
                });
            }
            LogNormPotential::new(doc.space, components, scale, ref_weights, log_terms)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    fn gi(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    /// g_f for f = [z1:z2] on P2 (linear projection from [1:0:0]).
    fn linear_projection_green() -> LogNormPotential {
        LogNormPotential::new(
            Space::P2,
            vec![SparsePoly::var(3, 1), SparsePoly::var(3, 2)],
            Rat::one(),
            vec![Rat::one()],
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn eval_linear_projection() {
        // Spec: g_f at [1:1:0] -> -(1/2) log 2
        let g = linear_projection_green();
        let p = ProjPoint::from_ints(Space::P2, &[1, 1, 0]).unwrap();
        let v = g.eval_exact(&p).unwrap();
        assert!((v + 0.5 * 2.0f64.ln()).abs() < 1e-12);

        // Same via the float path.
        let vf = g.eval(&p.to_numeric());
        assert!((vf + 0.5 * 2.0f64.ln()).abs() < 1e-12);

        // At the projection center the potential is -inf.
        let center = ProjPoint::from_ints(Space::P2, &[1, 0, 0]).unwrap();
        assert_eq!(g.eval_exact(&center).unwrap(), f64::NEG_INFINITY);
    }

    #[test]
    fn eval_identity_on_p1() {
        // One component z1 of degree 1 on P1: |F| = |z1|; at [0:1] the value
        // is log(|z1|/|z|) = 0 at [0:1].
        let g = LogNormPotential::new(
            Space::P1,
            vec![SparsePoly::var(2, 1)],
            Rat::one(),
            vec![Rat::one()],
            vec![],
        )
        .unwrap();
        let p = ProjPoint::from_ints(Space::P1, &[0, 1]).unwrap();
        assert!((g.eval_exact(&p).unwrap()).abs() < 1e-14);
    }

    #[test]
    fn homogeneity_validation() {
        // Mixed-degree components must be rejected.
        let bad = LogNormPotential::new(
            Space::P2,
            vec![SparsePoly::var(3, 1), SparsePoly::var(3, 2).pow(2)],
            Rat::one(),
            vec![Rat::one()],
            vec![],
        );
        assert!(bad.is_err());

        // Wrong reference weight must be rejected.
        let bad = LogNormPotential::new(
            Space::P2,
            vec![SparsePoly::var(3, 1)],
            Rat::one(),
            vec![rat_int(2)],
            vec![],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn log_homogeneity_numeric() {
        // Evaluating at lambda-scaled homogeneous coordinates must give the
        // same value (the float path normalizes internally).
        let g = linear_projection_green();
        let base = [
            Complex64::new(0.3, -0.1),
            Complex64::new(1.2, 0.4),
            Complex64::new(-0.7, 0.2),
        ];
        let p = NumPoint::new(Space::P2, &base).unwrap();
        let v0 = g.eval(&p);
        let lam = Complex64::new(-3.4e200, 1.2e200);
        let scaled: Vec<Complex64> = base.iter().map(|z| z * lam).collect();
        let v1 = g.eval(&NumPoint::new(Space::P2, &scaled).unwrap());
        assert!((v0 - v1).abs() < 1e-10);
    }

    #[test]
    fn lelong_exact_linear_projection() {
        let g = linear_projection_green();
        let center = ProjPoint::from_ints(Space::P2, &[1, 0, 0]).unwrap();
        assert_eq!(g.lelong_exact(&center).unwrap(), rat_int(1));
        let elsewhere = ProjPoint::from_ints(Space::P2, &[1, 1, 1]).unwrap();
        assert_eq!(g.lelong_exact(&elsewhere).unwrap(), rat_int(0));
    }

    #[test]
    fn lelong_invariant_under_unit_and_linear_change() {
        // Multiply a component by i (unit Gaussian rational): order unchanged.
        let g = linear_projection_green();
        let p = ProjPoint::from_ints(Space::P2, &[1, 0, 0]).unwrap();
        let scaled = LogNormPotential::new(
            Space::P2,
            vec![
                SparsePoly::var(3, 1).scale(&GaussRat::i()),
                SparsePoly::var(3, 2),
            ],
            Rat::one(),
            vec![Rat::one()],
            vec![],
        )
        .unwrap();
        assert_eq!(scaled.lelong_exact(&p).unwrap(), g.lelong_exact(&p).unwrap());

        // Exact linear change fixing p = [1:0:0]: z1 -> z1 + 2 z2.
        let z1 = SparsePoly::var(3, 1);
        let z2 = SparsePoly::var(3, 2);
        let changed = LogNormPotential::new(
            Space::P2,
            vec![z1.add(&z2.scale(&gi(2))), z2.clone()],
            Rat::one(),
            vec![Rat::one()],
            vec![],
        )
        .unwrap();
        assert_eq!(changed.lelong_exact(&p).unwrap(), rat_int(1));
    }

    #[test]
    fn extra_log_terms_contribute_to_lelong() {
        // m log|(z1 w0, w1 z0)| + (a-m) log|z0| + (b-m) log|w0| with a=2,b=3:
        // at ([0:1], [1:0]) the factor z0 vanishes (order 1) and component
        // z1*w0 does not vanish... both components: z1w0 = 1, w1z0 = 0:
        // min order 0; z0 term vanishes: contributes (a-m)*1 = 1.
        let z0 = SparsePoly::var(4, 0);
        let z1 = SparsePoly::var(4, 1);
        let w0 = SparsePoly::var(4, 2);
        let w1 = SparsePoly::var(4, 3);
        let pot = LogNormPotential::new(
            Space::P1xP1,
            vec![z1.mul(&w0), w1.mul(&z0)],
            rat_int(2),
            vec![rat_int(2), rat_int(3)],
            vec![LogTerm {
                poly: w0.clone(),
                weight: rat_int(1),
            }],
        )
        .unwrap();
        // at ([1:0],[1:0]) both components vanish to order 1: nu = 2*1 + 0 = 2
        let p = ProjPoint::from_ints(Space::P1xP1, &[1, 0, 1, 0]).unwrap();
        assert_eq!(pot.lelong_exact(&p).unwrap(), rat_int(2));
        // at ([1:0],[0:1]): w0 vanishes: z1w0 -> 0*?; compute: z1=0 so z1w0=0;
        // w1z0: w1=1,z0=1 -> 1: min component order 0; w0 term order 1: nu = 1.
        let q = ProjPoint::from_ints(Space::P1xP1, &[1, 0, 0, 1]).unwrap();
        assert_eq!(pot.lelong_exact(&q).unwrap(), rat_int(1));
    }

    #[test]
    fn json_roundtrip() {
        let g = LogNormPotential::new(
            Space::P2,
            vec![
                SparsePoly::from_terms(
                    3,
                    [(vec![0, 2, 0], gi(1)), (vec![2, 0, 0], gi(-1))],
                ),
                SparsePoly::from_terms(
                    3,
                    [(vec![0, 0, 2], GaussRat::new(rat(1, 3), rat(-2, 5))), (vec![2, 0, 0], gi(-1))],
                ),
            ],
            rat(1, 2),
            vec![Rat::one()],
            vec![],
        )
        .unwrap();
        let j = g.to_json();
        let back = LogNormPotential::from_json(&j).unwrap();
        assert_eq!(g, back);
        // no floats in the document
        let text = serde_json::to_string(&j).unwrap();
        assert!(!text.contains('.'));
    }
}
