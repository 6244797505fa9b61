//! Numerical checks on the representation variety behind the moduli
//! space: the commutator-product map on `(SU(2))^{2g}`, regularity of
//! `-I` as a value, freeness of the conjugation action, and the
//! dimension count `6g / 6g-3 / 6g-6`.
//!
//! SU(2) is modeled as the unit quaternions. That halves the arithmetic
//! relative to 2x2 complex matrices and turns the centralizer computation
//! into a 4-dimensional real-linear problem. The matrix pair
//! `diag(i, -i)`, `[[0, i], [i, 0]]` corresponds to the quaternions `i`
//! and an imaginary unit orthogonal to it; any two orthogonal choices are
//! conjugate, so the code fixes `i` and `j` and tests only the
//! commutator identity `[i, j] = -1`.

use crate::error::{Error, Result};
use crate::monomial::Genus;
use nalgebra::DMatrix;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

/// Relative singular-value cutoff for numerical rank.
const SV_RELATIVE_CUTOFF: f64 = 1e-6;
/// Largest singular value below this means the rank is meaningless.
const DEGENERATE_SV: f64 = 1e-12;
/// Finite-difference steps above this are rejected.
const MAX_FD_STEP: f64 = 1e-2;
/// Default finite-difference step.
pub const DEFAULT_FD_STEP: f64 = 1e-5;

/// A point of SU(2) stored as a unit quaternion `w + xi + yj + zk`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitQuaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl UnitQuaternion {
    pub fn identity() -> Self {
        UnitQuaternion { w: 1.0, x: 0.0, y: 0.0, z: 0.0 }
    }

    pub fn i() -> Self {
        UnitQuaternion { w: 0.0, x: 1.0, y: 0.0, z: 0.0 }
    }

    pub fn j() -> Self {
        UnitQuaternion { w: 0.0, x: 0.0, y: 1.0, z: 0.0 }
    }

    pub fn k() -> Self {
        UnitQuaternion { w: 0.0, x: 0.0, y: 0.0, z: 1.0 }
    }

    pub fn coords(&self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn norm(&self) -> f64 {
        (self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        UnitQuaternion {
            w: self.w / n,
            x: self.x / n,
            y: self.y / n,
            z: self.z / n,
        }
    }

    /// Hamilton product.
    pub fn mul(&self, o: &UnitQuaternion) -> UnitQuaternion {
        UnitQuaternion {
            w: self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            x: self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            y: self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            z: self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        }
    }

    /// Conjugate, which inverts a unit quaternion.
    pub fn inv(&self) -> UnitQuaternion {
        UnitQuaternion { w: self.w, x: -self.x, y: -self.y, z: -self.z }
    }

    /// `exp(angle * axis)` for a unit imaginary axis:
    /// `cos(angle) + sin(angle) * axis`.
    pub fn from_axis_angle(axis: [f64; 3], angle: f64) -> UnitQuaternion {
        let (s, c) = angle.sin_cos();
        UnitQuaternion {
            w: c,
            x: s * axis[0],
            y: s * axis[1],
            z: s * axis[2],
        }
        .normalized()
    }

    /// Euclidean distance in coordinates.
    pub fn distance(&self, o: &UnitQuaternion) -> f64 {
        let d = [self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z];
        d.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Group commutator `a b a^-1 b^-1`, renormalized after the chain.
    pub fn commutator(&self, o: &UnitQuaternion) -> UnitQuaternion {
        self.mul(o).mul(&self.inv()).mul(&o.inv()).normalized()
    }
}

/// A point of `(SU(2))^{2g}`: the images `(A_1..A_g, B_1..B_g)` of the
/// standard surface-group generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Su2Tuple {
    pub a: Vec<UnitQuaternion>,
    pub b: Vec<UnitQuaternion>,
}

impl Su2Tuple {
    pub fn genus(&self) -> usize {
        debug_assert_eq!(self.a.len(), self.b.len());
        self.a.len()
    }

    fn component(&self, idx: usize) -> &UnitQuaternion {
        let g = self.genus();
        if idx < g {
            &self.a[idx]
        } else {
            &self.b[idx - g]
        }
    }

    fn component_mut(&mut self, idx: usize) -> &mut UnitQuaternion {
        let g = self.genus();
        if idx < g {
            &mut self.a[idx]
        } else {
            &mut self.b[idx - g]
        }
    }

    /// Conjugates every component by `u`.
    pub fn conjugate(&self, u: &UnitQuaternion) -> Su2Tuple {
        let conj = |q: &UnitQuaternion| u.mul(q).mul(&u.inv()).normalized();
        Su2Tuple {
            a: self.a.iter().map(conj).collect(),
            b: self.b.iter().map(conj).collect(),
        }
    }
}

/// The commutator-product map: ordered product of `[A_k, B_k]`, left to
/// right.
pub fn mu(t: &Su2Tuple) -> UnitQuaternion {
    let mut acc = UnitQuaternion::identity();
    for (a, b) in t.a.iter().zip(&t.b) {
        acc = acc.mul(&a.commutator(b)).normalized();
    }
    acc
}

/// Residual `|mu(t) - (-1)|`, the distance to the fiber over `-I`.
pub fn fiber_residual(t: &Su2Tuple) -> f64 {
    let minus_one = UnitQuaternion { w: -1.0, x: 0.0, y: 0.0, z: 0.0 };
    mu(t).distance(&minus_one)
}

/// The canonical fiber point `(i, 1, ..., 1; j, 1, ..., 1)`: the first
/// handle carries the commutator `[i, j] = -1`, every other handle is
/// trivial.
pub fn base_point(g: Genus) -> Su2Tuple {
    let g = g.get() as usize;
    let mut a = vec![UnitQuaternion::identity(); g];
    let mut b = vec![UnitQuaternion::identity(); g];
    a[0] = UnitQuaternion::i();
    b[0] = UnitQuaternion::j();
    Su2Tuple { a, b }
}

fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    // Box-Muller; 1 - u keeps the log argument in (0, 1].
    let u1: f64 = 1.0 - rng.random::<f64>();
    let u2: f64 = rng.random();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

fn random_unit_quaternion(rng: &mut ChaCha8Rng) -> UnitQuaternion {
    loop {
        let q = UnitQuaternion {
            w: gaussian(rng),
            x: gaussian(rng),
            y: gaussian(rng),
            z: gaussian(rng),
        };
        if q.norm() > 1e-6 {
            return q.normalized();
        }
    }
}

fn random_imaginary_axis(rng: &mut ChaCha8Rng) -> [f64; 3] {
    loop {
        let v = [gaussian(rng), gaussian(rng), gaussian(rng)];
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-6 {
            return [v[0] / n, v[1] / n, v[2] / n];
        }
    }
}

/// A deterministic pseudo-random point of the fiber over `-I`: the base
/// commutator pair conjugated by a uniform element, padded with handles
/// whose two components share a rotation axis and therefore commute. The
/// construction is algebraic, so membership in the fiber is exact up to
/// roundoff.
pub fn random_fiber_point(g: Genus, seed: u64) -> Su2Tuple {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = g.get() as usize;
    let u = random_unit_quaternion(&mut rng);
    let conj = |q: &UnitQuaternion| u.mul(q).mul(&u.inv()).normalized();
    let mut a = Vec::with_capacity(g);
    let mut b = Vec::with_capacity(g);
    a.push(conj(&UnitQuaternion::i()));
    b.push(conj(&UnitQuaternion::j()));
    for _ in 1..g {
        let axis = random_imaginary_axis(&mut rng);
        let alpha = rng.random::<f64>() * std::f64::consts::TAU;
        let beta = rng.random::<f64>() * std::f64::consts::TAU;
        a.push(UnitQuaternion::from_axis_angle(axis, alpha));
        b.push(UnitQuaternion::from_axis_angle(axis, beta));
    }
    Su2Tuple { a, b }
}

/// Numerical rank of the differential of [`mu`] at `t`, by central finite
/// differences: each of the `2g` components is perturbed by
/// `exp(±h e)` in the three tangent directions and the four quaternion
/// coordinates of `mu` are read off. Rank counts singular values above
/// `1e-6` relative to the largest.
///
/// A regular point of the fiber has rank 3, the dimension of SU(2); the
/// derivative along the fourth coordinate vanishes identically because
/// `mu` stays on the unit sphere.
pub fn jacobian_rank(t: &Su2Tuple, h: f64) -> Result<usize> {
    if h > MAX_FD_STEP {
        return Err(Error::StepTooLarge(h));
    }
    let g = t.genus();
    let directions = [
        UnitQuaternion::i(),
        UnitQuaternion::j(),
        UnitQuaternion::k(),
    ];
    let mut jac = DMatrix::<f64>::zeros(4, 6 * g);
    for comp in 0..2 * g {
        for (d, dir) in directions.iter().enumerate() {
            let step = UnitQuaternion::from_axis_angle([dir.x, dir.y, dir.z], h);
            let mut plus = t.clone();
            *plus.component_mut(comp) = step.mul(plus.component(comp)).normalized();
            let mut minus = t.clone();
            *minus.component_mut(comp) = step.inv().mul(minus.component(comp)).normalized();
            let mp = mu(&plus).coords();
            let mm = mu(&minus).coords();
            for r in 0..4 {
                jac[(r, 3 * comp + d)] = (mp[r] - mm[r]) / (2.0 * h);
            }
        }
    }
    let sv = jac.singular_values();
    let smax = sv.iter().cloned().fold(0.0f64, f64::max);
    if smax < DEGENERATE_SV {
        return Err(Error::DegenerateInput(smax));
    }
    Ok(sv.iter().filter(|&&s| s / smax > SV_RELATIVE_CUTOFF).count())
}

/// Rank of the linearized conjugation action at `t`: the map sending a
/// quaternion `q` to the stacked commutators `(qX - Xq)` over all
/// components `X`. Rank 3 means the kernel is exactly the span of 1, so
/// the stabilizer in SU(2) is the center `{+-1}` and the action on the
/// quotient by the center is free. A tuple of commuting components (for
/// instance all identity) gives rank 0.
pub fn stabilizer_rank(t: &Su2Tuple) -> usize {
    let g = t.genus();
    let basis = [
        UnitQuaternion::identity(),
        UnitQuaternion::i(),
        UnitQuaternion::j(),
        UnitQuaternion::k(),
    ];
    let mut m = DMatrix::<f64>::zeros(8 * g, 4);
    for (c, q) in basis.iter().enumerate() {
        for (idx, comp) in t.a.iter().chain(&t.b).enumerate() {
            let left = q.mul(comp).coords();
            let right = comp.mul(q).coords();
            for r in 0..4 {
                m[(4 * idx + r, c)] = left[r] - right[r];
            }
        }
    }
    let sv = m.singular_values();
    let smax = sv.iter().cloned().fold(0.0f64, f64::max);
    if smax < DEGENERATE_SV {
        return 0;
    }
    sv.iter().filter(|&&s| s / smax > SV_RELATIVE_CUTOFF).count()
}

/// Dimension accounting at the base point: ambient `6g`, fiber
/// `6g - jacobian rank`, quotient `fiber - stabilizer rank`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub ambient: u32,
    pub fiber: u32,
    pub quotient: u32,
}

pub fn dimension_report(g: Genus) -> Result<DimensionReport> {
    let base = base_point(g);
    let ambient = 6 * g.get();
    let fiber = ambient - jacobian_rank(&base, DEFAULT_FD_STEP)? as u32;
    let quotient = fiber - stabilizer_rank(&base) as u32;
    Ok(DimensionReport { ambient, fiber, quotient })
}

/// Aggregated verification report over seeded fiber samples.
#[derive(Clone, Debug, Serialize)]
pub struct RepReport {
    pub genus: u32,
    pub samples: u32,
    pub mu_residual_max: f64,
    pub jacobian_rank_histogram: BTreeMap<usize, usize>,
    pub stabilizer_rank_histogram: BTreeMap<usize, usize>,
    pub dims: DimensionReport,
}

impl RepReport {
    /// The interface JSON object: `{genus, samples, mu_residual_max,
    /// jacobian_rank_histogram, stabilizer_rank_histogram, dims}`.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Runs the full suite: fiber residual, Jacobian rank and stabilizer rank
/// at the base point and at `samples` seeded fiber points (sample `s`
/// uses seed `seed + s`). Returns the report plus the list of violated
/// expectations; empty means everything passed `tol` and the rank
/// expectations. Deterministic for a fixed seed.
pub fn verify(g: Genus, samples: u32, seed: u64, tol: f64) -> Result<(RepReport, Vec<String>)> {
    let mut failures = Vec::new();
    let mut residual_max = 0.0f64;
    let mut jac_hist = BTreeMap::new();
    let mut stab_hist = BTreeMap::new();

    let base = base_point(g);
    let base_residual = fiber_residual(&base);
    residual_max = residual_max.max(base_residual);
    if base_residual > tol {
        failures.push(format!(
            "base point residual {base_residual:e} exceeds tol {tol:e}"
        ));
    }
    let base_jac = jacobian_rank(&base, DEFAULT_FD_STEP)?;
    if base_jac != 3 {
        failures.push(format!("base point jacobian rank {base_jac}, expected 3"));
    }
    let base_stab = stabilizer_rank(&base);
    if base_stab != 3 {
        failures.push(format!("base point stabilizer rank {base_stab}, expected 3"));
    }

    // Samples are independent; evaluate them in parallel and aggregate
    // in seed order so reports are identical for any schedule.
    let outcomes: Vec<Result<(u64, f64, usize, usize)>> = (0..samples)
        .into_par_iter()
        .map(|s| {
            let sample_seed = seed.wrapping_add(s as u64);
            let t = random_fiber_point(g, sample_seed);
            let residual = fiber_residual(&t);
            let jr = jacobian_rank(&t, DEFAULT_FD_STEP)?;
            let sr = stabilizer_rank(&t);
            Ok((sample_seed, residual, jr, sr))
        })
        .collect();
    for outcome in outcomes {
        let (sample_seed, residual, jr, sr) = outcome?;
        residual_max = residual_max.max(residual);
        if residual > tol {
            failures.push(format!(
                "seed {sample_seed}: residual {residual:e} exceeds tol {tol:e}"
            ));
        }
        *jac_hist.entry(jr).or_insert(0) += 1;
        if jr != 3 {
            failures.push(format!("seed {sample_seed}: jacobian rank {jr}, expected 3"));
        }
        *stab_hist.entry(sr).or_insert(0) += 1;
        if sr != 3 {
            failures.push(format!(
                "seed {sample_seed}: stabilizer rank {sr}, expected 3"
            ));
        }
    }

    let dims = DimensionReport {
        ambient: 6 * g.get(),
        fiber: 6 * g.get() - base_jac as u32,
        quotient: 6 * g.get() - base_jac as u32 - base_stab as u32,
    };
    let expected = DimensionReport {
        ambient: 6 * g.get(),
        fiber: 6 * g.get() - 3,
        quotient: 6 * g.get() - 6,
    };
    if dims != expected {
        failures.push(format!("dimensions {dims:?}, expected {expected:?}"));
    }

    Ok((
        RepReport {
            genus: g.get(),
            samples,
            mu_residual_max: residual_max,
            jacobian_rank_histogram: jac_hist,
            stabilizer_rank_histogram: stab_hist,
            dims,
        },
        failures,
    ))
}
