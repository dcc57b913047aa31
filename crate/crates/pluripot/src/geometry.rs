//! Projective points, affine charts, reference potentials and class bookkeeping
//! for the three spaces handled by this crate: P^1, P^2 and P^1 x P^1.

use crate::error::{Error, Result};
use crate::exact::{rat_to_f64, GaussRat, Rat};
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Space {
    #[serde(rename = "P1")]
    P1,
    #[serde(rename = "P2")]
    P2,
    #[serde(rename = "P1xP1")]
    P1xP1,
}

impl Space {
    /// Complex dimension.
    pub fn dim(self) -> usize {
        match self {
            Space::P1 => 1,
            Space::P2 | Space::P1xP1 => 2,
        }
    }

    /// Total number of homogeneous coordinates (all factors flattened).
    pub fn num_coords(self) -> usize {
        match self {
            Space::P1 => 2,
            Space::P2 => 3,
            Space::P1xP1 => 4,
        }
    }

    /// Ranges of the flat coordinate vector belonging to each factor.
    pub fn factors(self) -> &'static [std::ops::Range<usize>] {
        match self {
            Space::P1 => &[0..2],
            Space::P2 => &[0..3],
            Space::P1xP1 => &[0..2, 2..4],
        }
    }

    pub fn num_charts(self) -> usize {
        match self {
            Space::P1 => 2,
            Space::P2 => 3,
            Space::P1xP1 => 4,
        }
    }

    /// Global indices of the pivot coordinate (the one set to 1) per factor.
    pub fn chart_pivots(self, chart: usize) -> Result<Vec<usize>> {
        let bad = || Error::InvalidChart {
            chart,
            space: format!("{self:?}"),
        };
        match self {
            Space::P1 => {
                if chart < 2 {
                    Ok(vec![chart])
                } else {
                    Err(bad())
                }
            }
            Space::P2 => {
                if chart < 3 {
                    Ok(vec![chart])
                } else {
                    Err(bad())
                }
            }
            Space::P1xP1 => {
                if chart < 4 {
                    Ok(vec![chart / 2, 2 + chart % 2])
                } else {
                    Err(bad())
                }
            }
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::P1 => write!(f, "P1"),
            Space::P2 => write!(f, "P2"),
            Space::P1xP1 => write!(f, "P1xP1"),
        }
    }
}

// ---------------------------------------------------------------------------
// Numeric points
// ---------------------------------------------------------------------------

/// Numeric homogeneous coordinates, flattened across factors. Fixed storage,
/// cheap to copy; only the first `space.num_coords()` entries are meaningful.
#[derive(Clone, Copy, Debug)]
pub struct NumPoint {
    pub space: Space,
    pub coords: [Complex64; 4],
}

impl NumPoint {
    pub fn new(space: Space, coords: &[Complex64]) -> Result<Self> {
        if coords.len() != space.num_coords() {
            return Err(Error::SpaceMismatch(format!(
                "expected {} coordinates for {space}, got {}",
                space.num_coords(),
                coords.len()
            )));
        }
        if coords.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        for f in space.factors() {
            if coords[f.clone()].iter().all(|c| c.norm_sqr() == 0.0) {
                return Err(Error::SpaceMismatch("zero factor in homogeneous point".into()));
            }
        }
        let mut arr = [Complex64::new(0.0, 0.0); 4];
        arr[..coords.len()].copy_from_slice(coords);
        Ok(NumPoint { space, coords: arr })
    }

    /// Point of the chart with the given affine coordinates (pivot set to 1).
    pub fn from_chart(space: Space, chart: usize, affine: &[Complex64]) -> Result<Self> {
        if affine.len() != space.dim() {
            return Err(Error::SpaceMismatch(format!(
                "expected {} affine coordinates, got {}",
                space.dim(),
                affine.len()
            )));
        }
        if affine.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let pivots = space.chart_pivots(chart)?;
        let mut coords = [Complex64::new(0.0, 0.0); 4];
        let mut ai = 0;
        for i in 0..space.num_coords() {
            if pivots.contains(&i) {
                coords[i] = Complex64::new(1.0, 0.0);
            } else {
                coords[i] = affine[ai];
                ai += 1;
            }
        }
        Ok(NumPoint { space, coords })
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords[..self.space.num_coords()]
    }

    /// Rescale each factor so its sup-norm coordinate is 1; keeps the point
    /// evaluable for coordinate magnitudes up to 1e+-300.
    pub fn normalized(&self) -> NumPoint {
        let mut out = *self;
        for f in self.space.factors() {
            let (mut best, mut best_norm) = (f.start, 0.0f64);
            for i in f.clone() {
                let n = self.coords[i].norm_sqr();
                if n > best_norm {
                    best_norm = n;
                    best = i;
                }
            }
            let pivot = self.coords[best];
            for i in f.clone() {
                out.coords[i] = self.coords[i] / pivot;
            }
        }
        out
    }

    /// Affine coordinates in the given chart, or None if the point lies on
    /// the chart's boundary divisor.
    pub fn chart_affine(&self, chart: usize) -> Result<Option<Vec<Complex64>>> {
        let pivots = self.space.chart_pivots(chart)?;
        let mut out = Vec::with_capacity(self.space.dim());
        for f in self.space.factors() {
            let pivot = pivots.iter().find(|p| f.contains(p)).copied().unwrap();
            let pv = self.coords[pivot];
            if pv.norm_sqr() == 0.0 {
                return Ok(None);
            }
            for i in f.clone() {
                if i != pivot {
                    out.push(self.coords[i] / pv);
                }
            }
        }
        Ok(Some(out))
    }
}

// ---------------------------------------------------------------------------
// Exact points
// ---------------------------------------------------------------------------

/// A projective point with exact Gaussian-rational homogeneous coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjPoint {
    space: Space,
    coords: Vec<GaussRat>,
}

impl ProjPoint {
    pub fn new(space: Space, coords: Vec<GaussRat>) -> Result<Self> {
        if coords.len() != space.num_coords() {
            return Err(Error::SpaceMismatch(format!(
                "expected {} coordinates for {space}, got {}",
                space.num_coords(),
                coords.len()
            )));
        }
        for f in space.factors() {
            if coords[f.clone()].iter().all(|c| c.is_zero()) {
                return Err(Error::SpaceMismatch(
                    "all coordinates of a factor vanish".into(),
                ));
            }
        }
        Ok(ProjPoint { space, coords })
    }

    pub fn from_ints(space: Space, coords: &[i64]) -> Result<Self> {
        ProjPoint::new(space, coords.iter().map(|&n| GaussRat::from_int(n)).collect())
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn coords(&self) -> &[GaussRat] {
        &self.coords
    }

    /// Canonical representative: each factor scaled so its first nonzero
    /// coordinate is exactly 1. Exact, hence usable for deduplication.
    pub fn canonical(&self) -> ProjPoint {
        let mut coords = self.coords.clone();
        for f in self.space.factors() {
            let lead = f
                .clone()
                .find(|&i| !coords[i].is_zero())
                .expect("factor invariant");
            let inv = coords[lead].inv();
            for i in f.clone() {
                coords[i] = &coords[i] * &inv;
            }
        }
        ProjPoint {
            space: self.space,
            coords,
        }
    }

    /// Exact projective equality.
    pub fn same_point(&self, other: &ProjPoint) -> bool {
        self.space == other.space && self.canonical().coords == other.canonical().coords
    }

    /// Equality predicate on normalized representatives (largest-modulus
    /// coordinate scaled to 1), with tolerance.
    pub fn approx_eq(&self, other: &ProjPoint, tol: f64) -> bool {
        if self.space != other.space {
            return false;
        }
        let a = self.to_numeric().normalized();
        let b = other.to_numeric().normalized();
        // Normalized pivots are 1, but the pivot index may differ; compare
        // via the projective cross terms per factor.
        for f in self.space.factors() {
            let ac = &a.coords[f.clone()];
            let bc = &b.coords[f.clone()];
            let mut cross: f64 = 0.0;
            for i in 0..ac.len() {
                for j in (i + 1)..ac.len() {
                    cross = cross.max((ac[i] * bc[j] - ac[j] * bc[i]).norm());
                }
            }
            if cross > tol {
                return false;
            }
        }
        true
    }

    pub fn to_numeric(&self) -> NumPoint {
        // Scale each factor by its largest-|.|^2 coordinate exactly before
        // converting, so huge rationals do not overflow f64.
        let mut coords = [Complex64::new(0.0, 0.0); 4];
        let mut scaled = self.coords.clone();
        for f in self.space.factors() {
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
        for (i, g) in scaled.iter().enumerate() {
            coords[i] = g.to_complex();
        }
        NumPoint {
            space: self.space,
            coords,
        }
    }

    /// The chart whose pivot has maximal modulus per factor.
    pub fn natural_chart(&self) -> usize {
        let mut pivots = Vec::new();
        for f in self.space.factors() {
            let mut best = f.start;
            let mut best_norm = Rat::zero();
            for i in f.clone() {
                let n = self.coords[i].norm_sqr();
                if n > best_norm {
                    best_norm = n;
                    best = i;
                }
            }
            pivots.push(best);
        }
        match self.space {
            Space::P1 | Space::P2 => pivots[0],
            Space::P1xP1 => pivots[0] * 2 + (pivots[1] - 2),
        }
    }

    /// Exact affine coordinates in the given chart; None on the boundary.
    pub fn chart_affine_exact(&self, chart: usize) -> Result<Option<Vec<GaussRat>>> {
        let pivots = self.space.chart_pivots(chart)?;
        let mut out = Vec::with_capacity(self.space.dim());
        for f in self.space.factors() {
            let pivot = pivots.iter().find(|p| f.contains(p)).copied().unwrap();
            if self.coords[pivot].is_zero() {
                return Ok(None);
            }
            let inv = self.coords[pivot].inv();
            for i in f.clone() {
                if i != pivot {
                    out.push(&self.coords[i] * &inv);
                }
            }
        }
        Ok(Some(out))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first_factor = true;
        for fr in self.space.factors() {
            if !first_factor {
                write!(f, " x ")?;
            }
            first_factor = false;
            write!(f, "[")?;
            let mut first = true;
            for i in fr.clone() {
                if !first {
                    write!(f, ":")?;
                }
                first = false;
                write!(f, "{}", self.coords[i])?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Cohomology classes
// ---------------------------------------------------------------------------

/// A (1,1) class: a multiple of the Fubini-Study class on P^n, or a pair
/// (a, b) on P^1 x P^1.
#[derive(Clone, Debug, PartialEq)]
pub struct KClass {
    pub space: Space,
    coeffs: Vec<Rat>,
}

impl KClass {
    pub fn projective(space: Space, c: Rat) -> Result<Self> {
        if matches!(space, Space::P1xP1) {
            return Err(Error::SpaceMismatch(
                "use KClass::product for P1xP1".into(),
            ));
        }
        if c.is_negative() {
            return Err(Error::Parameter("class coefficient must be >= 0".into()));
        }
        Ok(KClass {
            space,
            coeffs: vec![c],
        })
    }

    pub fn product(a: Rat, b: Rat) -> Result<Self> {
        if a.is_negative() || b.is_negative() {
            return Err(Error::Parameter("class coefficients must be >= 0".into()));
        }
        Ok(KClass {
            space: Space::P1xP1,
            coeffs: vec![a, b],
        })
    }

    /// The Fubini-Study class alpha_n on P^n.
    pub fn fubini_study(space: Space) -> Self {
        match space {
            Space::P1xP1 => KClass::product(Rat::one(), Rat::one()).unwrap(),
            s => KClass::projective(s, Rat::one()).unwrap(),
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_kahler(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_positive())
    }

    /// Top self-intersection alpha^n, exact.
    pub fn volume(&self) -> Rat {
        match self.space {
            Space::P1 => self.coeffs[0].clone(),
            Space::P2 => &self.coeffs[0] * &self.coeffs[0],
            Space::P1xP1 => Rat::from_integer(2.into()) * &self.coeffs[0] * &self.coeffs[1],
        }
    }

    /// Closed forms for the maximal Lelong number and the Seshadri constant
    /// of the class at any point: (c, c) on P^n, (a+b, min{a,b}) on P^1xP^1.
    pub fn indicators(&self) -> Result<(Rat, Rat)> {
        if !self.is_kahler() {
            return Err(Error::NotKahler);
        }
        Ok(match self.space {
            Space::P1 | Space::P2 => (self.coeffs[0].clone(), self.coeffs[0].clone()),
            Space::P1xP1 => {
                let sum = &self.coeffs[0] + &self.coeffs[1];
                let min = self.coeffs[0].clone().min(self.coeffs[1].clone());
                (sum, min)
            }
        })
    }

    /// Weight of the reference log-norm term per factor.
    pub fn ref_weights(&self) -> Vec<Rat> {
        self.coeffs.clone()
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.space {
            Space::P1 | Space::P2 => write!(f, "{}*alpha({})", self.coeffs[0], self.space),
            Space::P1xP1 => write!(f, "alpha({},{})", self.coeffs[0], self.coeffs[1]),
        }
    }
}

// ---------------------------------------------------------------------------
// Reference potentials and distances
// ---------------------------------------------------------------------------

/// Local potential of the weighted reference form in the given chart:
/// (c/2)·log(1+|z|^2) on P^n, a/2·log(1+|z1|^2)+b/2·log(1+|w1|^2) on P^1xP^1.
/// Vanishes at the chart origin.
pub fn fs_potential(class: &KClass, chart: usize, affine: &[Complex64]) -> Result<f64> {
    let space = class.space;
    space.chart_pivots(chart)?;
    if affine.len() != space.dim() {
        return Err(Error::SpaceMismatch(format!(
            "expected {} affine coordinates, got {}",
            space.dim(),
            affine.len()
        )));
    }
    if affine.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    let value = match space {
        Space::P1 | Space::P2 => {
            let norm_sqr: f64 = affine.iter().map(|z| z.norm_sqr()).sum();
            0.5 * rat_to_f64(&class.coeffs()[0]) * norm_sqr.ln_1p()
        }
        Space::P1xP1 => {
            0.5 * rat_to_f64(&class.coeffs()[0]) * affine[0].norm_sqr().ln_1p()
                + 0.5 * rat_to_f64(&class.coeffs()[1]) * affine[1].norm_sqr().ln_1p()
        }
    };
    Ok(value)
}

/// Fubini-Study chordal distance: per factor |z ^ w| / (|z||w|), factors
/// combined as a Euclidean norm. Symmetric, zero iff the points coincide.
pub fn chordal_distance(p: &ProjPoint, q: &ProjPoint) -> Result<f64> {
    if p.space() != q.space() {
        return Err(Error::SpaceMismatch(format!(
            "{} vs {}",
            p.space(),
            q.space()
        )));
    }
    let a = p.to_numeric().normalized();
    let b = q.to_numeric().normalized();
    Ok(chordal_distance_numeric(&a, &b))
}

pub fn chordal_distance_numeric(a: &NumPoint, b: &NumPoint) -> f64 {
    let mut total = 0.0f64;
    for f in a.space.factors() {
        let za = &a.coords[f.clone()];
        let zb = &b.coords[f.clone()];
        let mut wedge = 0.0f64;
        for i in 0..za.len() {
            for j in (i + 1)..za.len() {
                wedge += (za[i] * zb[j] - za[j] * zb[i]).norm_sqr();
            }
        }
        let na: f64 = za.iter().map(|z| z.norm_sqr()).sum();
        let nb: f64 = zb.iter().map(|z| z.norm_sqr()).sum();
        total += wedge / (na * nb);
    }
    total.sqrt()
}
