//! Certified complex roots of integer polynomials.
//!
//! Approximations come from Aberth-Ehrlich iteration at the working precision
//! plus guard bits. Each approximation `z_i` is then enclosed in the disk of
//! radius `n |f(z_i) / (a_n prod_{j != i} (z_i - z_j))|`; when these disks are
//! pairwise disjoint each one holds exactly one root. A disk centred on the
//! real axis then holds a real root, and a disk that misses the axis holds a
//! non-real one.

use rug::float::Round;
use rug::{Assign, Complete, Float, Integer, Rational};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{discriminant, BinaryForm};
use crate::interval::{CInterval, Interval};
use crate::poly::IntPoly;

pub const GUARD_BITS: u32 = 32;
pub const DEFAULT_BITS: u32 = 256;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrecisionConfig {
    pub bits: u32,
    pub max_iterations: usize,
    pub certify: bool,
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        PrecisionConfig {
            bits: DEFAULT_BITS,
            max_iterations: 1000,
            certify: true,
        }
    }
}

impl PrecisionConfig {
    pub fn new(bits: u32) -> Result<Self> {
        if bits < 64 {
            return Err(Error::InvalidInput(format!(
                "precision must be at least 64 bits, got {bits}"
            )));
        }
        Ok(PrecisionConfig {
            bits,
            ..Default::default()
        })
    }

    pub fn with_bits(&self, bits: u32) -> Self {
        PrecisionConfig {
            bits,
            ..self.clone()
        }
    }

    /// Largest precision an escalation may reach.
    pub fn ceiling(&self) -> u32 {
        self.bits * 8
    }
}

#[derive(Clone, Debug)]
struct Cf {
    re: Float,
    im: Float,
}

impl Cf {
    fn new(prec: u32) -> Cf {
        Cf {
            re: Float::new(prec),
            im: Float::new(prec),
        }
    }

    fn with_prec(&self, prec: u32) -> Cf {
        Cf {
            re: Float::with_val(prec, &self.re),
            im: Float::with_val(prec, &self.im),
        }
    }

    fn add(&self, o: &Cf) -> Cf {
        let p = self.re.prec();
        Cf {
            re: Float::with_val(p, &self.re + &o.re),
            im: Float::with_val(p, &self.im + &o.im),
        }
    }

    fn sub(&self, o: &Cf) -> Cf {
        let p = self.re.prec();
        Cf {
            re: Float::with_val(p, &self.re - &o.re),
            im: Float::with_val(p, &self.im - &o.im),
        }
    }

    fn mul(&self, o: &Cf) -> Cf {
        let p = self.re.prec();
        let rr = Float::with_val(p, &self.re * &o.re);
        let ii = Float::with_val(p, &self.im * &o.im);
        let ri = Float::with_val(p, &self.re * &o.im);
        let ir = Float::with_val(p, &self.im * &o.re);
        Cf {
            re: rr - ii,
            im: ri + ir,
        }
    }

    fn norm_sqr(&self) -> Float {
        let p = self.re.prec();
        Float::with_val(p, self.re.square_ref()) + Float::with_val(p, self.im.square_ref())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `None` on division by zero.
    fn div(&self, o: &Cf) -> Option<Cf> {
        let d = o.norm_sqr();
        if d.is_zero() {
            return None;
        }
        let conj = Cf {
            re: o.re.clone(),
            im: Float::with_val(o.im.prec(), -&o.im),
        };
        let n = self.mul(&conj);
        Some(Cf {
            re: n.re / &d,
            im: n.im / &d,
        })
    }

    fn abs(&self) -> Float {
        self.norm_sqr().sqrt()
    }
}

fn horner(coeffs: &[Float], z: &Cf) -> (Cf, Cf) {
    let p = z.re.prec();
    let mut val = Cf::new(p);
    let mut der = Cf::new(p);
    for c in coeffs {
        der = der.mul(z).add(&val);
        val = val.mul(z);
        val.re += c;
    }
    (val, der)
}

fn initial_points(f: &IntPoly, prec: u32) -> Vec<Cf> {
    let n = f.degree();
    let lead = Float::with_val(prec, &f.leading()).abs();
    let c0 = Float::with_val(prec, &f.constant_term()).abs();
    let radius = if c0.is_zero() {
        Float::with_val(prec, 1)
    } else {
        let mut r = c0 / lead;
        r.ln_mut();
        r /= n as u32;
        r.exp_mut();
        r
    };
    let two_pi = Float::with_val(prec, rug::float::Constant::Pi) * 2u32;
    (0..n)
        .map(|k| {
            let theta = Float::with_val(prec, &two_pi * (k as u32)) / (n as u32) + 0.4f64;
            let (s, c) = theta.sin_cos(Float::new(prec));
            Cf {
                re: c * &radius,
                im: s * &radius,
            }
        })
        .collect()
}

fn aberth(f: &IntPoly, prec: u32, start: Option<Vec<Cf>>, max_iter: usize) -> Vec<Cf> {
    let n = f.degree();
    let coeffs: Vec<Float> = f.coeffs().iter().map(|c| Float::with_val(prec, c)).collect();
    let mut z = match start {
        Some(s) => s.iter().map(|c| c.with_prec(prec)).collect(),
        None => initial_points(f, prec),
    };
    let threshold = Float::with_val(prec, 1) >> (prec * 2 / 3);
    let one = Float::with_val(prec, 1);
    let mut settled = 0;
    for _ in 0..max_iter {
        let mut worst = Float::new(prec);
        for k in 0..n {
            let (val, der) = horner(&coeffs, &z[k]);
            if val.is_zero() {
                continue;
            }
            let mut sum = Cf::new(prec);
            let mut degenerate = false;
            for j in 0..n {
                if j == k {
                    continue;
                }
                match one_cf(prec).div(&z[k].sub(&z[j])) {
                    Some(t) => sum = sum.add(&t),
                    None => degenerate = true,
                }
            }
            let ratio = match val.div(&der) {
                Some(r) if !degenerate => r,
                _ => {
                    // nudge off a critical point or a collision
                    let eps = Float::with_val(prec, 1) >> (prec / 4);
                    z[k].re += &eps;
                    z[k].im += eps;
                    worst.assign(1);
                    continue;
                }
            };
            let denom = one_cf(prec).sub(&ratio.mul(&sum));
            let corr = ratio.div(&denom).unwrap_or(ratio);
            z[k] = z[k].sub(&corr);
            let scale = z[k].abs().max(&one);
            let rel = corr.abs() / scale;
            if rel > worst {
                worst = rel;
            }
        }
        if !worst.is_finite() {
            break;
        }
        if worst < threshold {
            settled += 1;
            if settled >= 2 {
                break;
            }
        }
    }
    z
}

fn one_cf(prec: u32) -> Cf {
    Cf {
        re: Float::with_val(prec, 1),
        im: Float::new(prec),
    }
}

/// Snaps nearly real approximations onto the axis, makes the non-real ones
/// exact conjugates, and orders them: reals ascending, then the upper
/// half-plane roots, then their conjugates in the same order.
fn symmetrize(z: &[Cf], prec: u32) -> Option<(Vec<Cf>, usize)> {
    let mut reals = Vec::new();
    let mut upper = Vec::new();
    let mut lower = 0usize;
    for c in z {
        let scale = c.abs().max(&Float::with_val(prec, 1));
        let tol = scale >> (prec * 3 / 4);
        if Float::with_val(prec, c.im.abs_ref()) <= tol {
            reals.push(c.re.clone());
        } else if c.im > 0 {
            upper.push(c.clone());
        } else {
            lower += 1;
        }
    }
    if upper.len() != lower {
        return None;
    }
    reals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    upper.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    let r = reals.len();
    let mut out: Vec<Cf> = reals
        .into_iter()
        .map(|re| Cf {
            re,
            im: Float::new(prec),
        })
        .collect();
    let conj: Vec<Cf> = upper
        .iter()
        .map(|c| Cf {
            re: c.re.clone(),
            im: Float::with_val(prec, -&c.im),
        })
        .collect();
    out.extend(upper);
    out.extend(conj);
    Some((out, r))
}

/// Certified roots of a squarefree integer polynomial.
#[derive(Clone, Debug)]
pub struct RootSystem {
    poly: IntPoly,
    bits: u32,
    escalations: u32,
    centers: Vec<(Float, Float)>,
    radii: Vec<Float>,
    roots: Vec<CInterval>,
    pairing: Vec<usize>,
    derivative_abs: Vec<Interval>,
    r: usize,
    s: usize,
}

fn certify(f: &IntPoly, z: &[Cf], r: usize, bits: u32, work: u32, strict: bool) -> Option<RootSystem> {
    let n = z.len();
    let s = (n - r) / 2;
    let lead = Interval::from_int(&f.leading(), work);
    let points: Vec<CInterval> = z.iter().map(|c| CInterval::point(&c.re, &c.im)).collect();
    let mut radii: Vec<Float> = Vec::with_capacity(n);
    for i in 0..n {
        let val = f.eval_complex(&points[i]);
        let mut den = CInterval::from_real(lead.clone());
        for j in 0..n {
            if j != i {
                den = den.mul(&points[i].sub(&points[j]));
            }
        }
        let w = val.div(&den).abs().mul_int(n as i64);
        if !w.is_finite() {
            return None;
        }
        radii.push(w.hi().clone());
    }
    for k in 0..s {
        let (u, l) = (r + k, r + s + k);
        let m = radii[u].clone().max(&radii[l]);
        radii[u] = m.clone();
        radii[l] = m;
    }
    let mut ok = true;
    for i in 0..n {
        let scale = Float::with_val(work, z[i].abs()).max(&Float::with_val(work, 1));
        let target = scale >> (bits / 2);
        if radii[i] > target {
            ok = false;
        }
        if i >= r {
            let im = Float::with_val(work, z[i].im.abs_ref());
            if im <= radii[i] {
                ok = false;
            }
        }
        for j in i + 1..n {
            let dist = points[i].sub(&points[j]).abs();
            let reach = Float::with_val_round(work, &radii[i] + &radii[j], Round::Up).0;
            if *dist.lo() <= reach {
                ok = false;
            }
        }
    }
    if !ok && strict {
        return None;
    }
    let roots: Vec<CInterval> = (0..n)
        .map(|i| {
            if i < r {
                let rad = Interval::new(Float::with_val(work, -&radii[i]), radii[i].clone());
                CInterval::from_real(Interval::point(z[i].re.clone()).add(&rad))
            } else {
                CInterval::ball(&z[i].re, &z[i].im, &radii[i])
            }
        })
        .collect();
    let df = f.derivative();
    let derivative_abs: Vec<Interval> = roots.iter().map(|b| df.eval_complex(b).abs()).collect();
    if strict && derivative_abs.iter().any(|d| !d.is_positive()) {
        return None;
    }
    let pairing = (0..n)
        .map(|i| {
            if i < r {
                i
            } else if i < r + s {
                i + s
            } else {
                i - s
            }
        })
        .collect();
    Some(RootSystem {
        poly: f.clone(),
        bits,
        escalations: 0,
        centers: z.iter().map(|c| (c.re.clone(), c.im.clone())).collect(),
        radii,
        roots,
        pairing,
        derivative_abs,
        r,
        s,
    })
}

/// Certified roots of `F(x, 1)`.
pub fn find_roots(f: &BinaryForm, cfg: &PrecisionConfig) -> Result<RootSystem> {
    if *f.leading() == 0 {
        return Err(Error::LeadingCoefficientZero);
    }
    if f.degree() >= 2 && discriminant(f)? == 0 {
        return Err(Error::ZeroDiscriminant);
    }
    isolate_roots(&f.dehomogenize(), cfg)
}

/// Certified roots of a squarefree polynomial of any degree.
pub fn isolate_roots(f: &IntPoly, cfg: &PrecisionConfig) -> Result<RootSystem> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    if f.degree() == 0 {
        return Ok(RootSystem {
            poly: f.clone(),
            bits: cfg.bits,
            escalations: 0,
            centers: Vec::new(),
            radii: Vec::new(),
            roots: Vec::new(),
            pairing: Vec::new(),
            derivative_abs: Vec::new(),
            r: 0,
            s: 0,
        });
    }
    if !f.is_squarefree() {
        return Err(Error::ZeroDiscriminant);
    }
    let mut bits = cfg.bits;
    let mut approx: Option<Vec<Cf>> = None;
    let mut escalations = 0;
    loop {
        let work = bits + GUARD_BITS;
        let z = aberth(f, work, approx.take(), cfg.max_iterations);
        if let Some((sym, r)) = symmetrize(&z, work) {
            if let Some(mut rs) = certify(f, &sym, r, bits, work, cfg.certify) {
                rs.escalations = escalations;
                return Ok(rs);
            }
        }
        if bits * 2 > cfg.ceiling() {
            return Err(Error::PrecisionExhausted(bits));
        }
        bits *= 2;
        escalations += 1;
        approx = Some(z);
    }
}

impl RootSystem {
    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    /// Precision `P` at which certification succeeded.
    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Working precision of the stored intervals.
    pub fn prec(&self) -> u32 {
        self.bits + GUARD_BITS
    }

    pub fn escalations(&self) -> u32 {
        self.escalations
    }

    pub fn roots(&self) -> &[CInterval] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &CInterval {
        &self.roots[i]
    }

    pub fn center(&self, i: usize) -> (&Float, &Float) {
        (&self.centers[i].0, &self.centers[i].1)
    }

    pub fn radius(&self, i: usize) -> &Float {
        &self.radii[i]
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn is_real(&self, i: usize) -> bool {
        i < self.r
    }

    /// Index of the complex conjugate (itself for a real root).
    pub fn conjugate(&self, i: usize) -> usize {
        self.pairing[i]
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    /// `|f'(alpha_i)|`.
    pub fn derivative_abs(&self, i: usize) -> &Interval {
        &self.derivative_abs[i]
    }

    pub fn derivative_values(&self) -> &[Interval] {
        &self.derivative_abs
    }

    pub fn moduli(&self) -> Vec<Interval> {
        self.roots.iter().map(|z| z.abs()).collect()
    }

    /// Sum and product of the roots, for comparison with Vieta's formulas.
    pub fn vieta(&self) -> (CInterval, CInterval) {
        let p = self.prec();
        let mut sum = CInterval::from_real(Interval::zero(p));
        let mut prod = CInterval::from_real(Interval::one(p));
        for z in &self.roots {
            sum = sum.add(z);
            prod = prod.mul(z);
        }
        (sum, prod)
    }
}

/// Certified lower bound for `min_{i != j} |alpha_i - alpha_j|`.
pub fn min_root_distance(rs: &RootSystem) -> Interval {
    let n = rs.degree();
    let mut best: Option<Interval> = None;
    for i in 0..n {
        for j in i + 1..n {
            let d = rs.roots[i].sub(&rs.roots[j]).abs();
            best = Some(match best {
                Some(b) => b.min(&d),
                None => d,
            });
        }
    }
    best.unwrap_or_else(|| Interval::zero(rs.prec()))
}

/// Coefficients of `lead * prod (x - z)`, highest first.
pub fn expand_from_roots(roots: &[CInterval], lead: &Interval) -> Vec<CInterval> {
    let mut poly = vec![CInterval::from_real(lead.clone())];
    for z in roots {
        let mut next: Vec<CInterval> = poly.clone();
        next.push(CInterval::from_real(Interval::zero(lead.prec())));
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] = next[k + 1].sub(&c.mul(z));
        }
        poly = next;
    }
    poly
}

/// The unique integer in `iv`, provided the interval is narrower than the
/// rounding tolerance. `Err` means the precision is too low to decide.
fn round_to_integer(iv: &CInterval, tol_bits: u32) -> std::result::Result<Option<Integer>, ()> {
    if !iv.is_finite() {
        return Err(());
    }
    let scale = Float::with_val(iv.prec(), iv.re.mid().abs_ref()).max(&Float::with_val(iv.prec(), 1));
    let tol = scale >> tol_bits;
    if iv.re.width() > tol || iv.im.width() > tol || iv.re.width() >= 0.5 {
        return Err(());
    }
    if !iv.im.contains_zero() {
        return Ok(None);
    }
    let k = iv.re.mid().to_integer().expect("finite");
    Ok(if iv.re.contains_int(&k) { Some(k) } else { None })
}

fn next_combination(idx: &mut [usize], m: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < m - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// An irreducible factor of `g` (primitive, over Z) obtained from the roots in
/// `subset` that contain `first`, together with the chosen indices.
fn factor_containing(
    g: &IntPoly,
    roots: &[CInterval],
    first: usize,
    avail: &[usize],
    tol_bits: u32,
) -> Result<(IntPoly, Vec<usize>)> {
    let lead = Interval::from_int(&g.leading(), roots[first].prec());
    let m = avail.len();
    for size in 0..m {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let mut chosen = vec![first];
            chosen.extend(idx.iter().map(|&i| avail[i]));
            if let Some(h) = try_subset(g, roots, &chosen, &lead, tol_bits)? {
                return Ok((h, chosen));
            }
            if size == 0 || !next_combination(&mut idx, m) {
                break;
            }
        }
    }
    let mut all = vec![first];
    all.extend_from_slice(avail);
    Ok((g.primitive_part(), all))
}

fn try_subset(
    g: &IntPoly,
    roots: &[CInterval],
    chosen: &[usize],
    lead: &Interval,
    tol_bits: u32,
) -> Result<Option<IntPoly>> {
    let prec = lead.prec();
    let overflow = || Error::PrecisionExhausted(prec);
    // constant and subleading terms first, they reject most subsets cheaply
    let mut prod = CInterval::from_real(lead.clone());
    let mut sum = CInterval::from_real(Interval::zero(prec));
    for &i in chosen {
        prod = prod.mul(&roots[i]);
        sum = sum.add(&roots[i]);
    }
    if round_to_integer(&prod, tol_bits).map_err(|_| overflow())?.is_none() {
        return Ok(None);
    }
    if round_to_integer(&sum.scale(lead), tol_bits).map_err(|_| overflow())?.is_none() {
        return Ok(None);
    }
    let sel: Vec<CInterval> = chosen.iter().map(|&i| roots[i].clone()).collect();
    let mut coeffs = Vec::with_capacity(sel.len() + 1);
    for c in expand_from_roots(&sel, lead) {
        match round_to_integer(&c, tol_bits).map_err(|_| overflow())? {
            Some(k) => coeffs.push(k),
            None => return Ok(None),
        }
    }
    let h = IntPoly::new(coeffs).primitive_part();
    if h.degree() == sel.len() && g.div_exact(&h).is_some() {
        Ok(Some(h))
    } else {
        Ok(None)
    }
}

/// The factor search visits at most `2^MAX_SUBSET_BITS` candidate subsets.
pub const MAX_SUBSET_BITS: usize = 16;

/// Splits a squarefree `f` with certified roots `rs` into irreducible factors.
/// Each factor comes with the indices of its roots.
pub fn split_irreducible(rs: &RootSystem) -> Result<Vec<(IntPoly, Vec<usize>)>> {
    let n = rs.degree();
    if n.saturating_sub(1) > MAX_SUBSET_BITS {
        return Err(Error::OrbitTooLarge(n));
    }
    let tol_bits = rs.bits() / 2;
    let mut remaining = rs.poly().primitive_part();
    let mut left: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    while !left.is_empty() {
        let first = left[0];
        let (h, used) = factor_containing(&remaining, rs.roots(), first, &left[1..], tol_bits)?;
        remaining = remaining
            .div_exact(&h)
            .expect("factor search only returns exact divisors");
        left.retain(|i| !used.contains(i));
        out.push((h, used));
    }
    Ok(out)
}

fn simplest_between(a: &Rational, b: &Rational) -> Rational {
    if *a <= 0 && *b >= 0 {
        return Rational::new();
    }
    if *b < 0 {
        let (na, nb) = ((-b).complete(), (-a).complete());
        return -simplest_between(&na, &nb);
    }
    let fl = a.clone().floor();
    if fl == *a {
        return a.clone();
    }
    if fl < b.clone().floor() {
        return fl + 1u32;
    }
    let lo = (b - &fl).complete().recip();
    let hi = (a - &fl).complete().recip();
    fl + simplest_between(&lo, &hi).recip()
}

/// Rational with the smallest denominator in `[lo, hi]`.
pub fn simplest_rational(iv: &Interval) -> Option<Rational> {
    if !iv.is_finite() {
        return None;
    }
    let a = iv.lo().to_rational()?;
    let b = iv.hi().to_rational()?;
    Some(simplest_between(&a, &b))
}

/// Minimal polynomial of `conjugates[0]`, given a conjugation-closed set of
/// numbers whose elementary symmetric functions are rational.
pub fn reconstruct_min_poly(conjugates: &[CInterval], cfg: &PrecisionConfig) -> Result<IntPoly> {
    let mut orbit: Vec<CInterval> = Vec::new();
    let mut first_idx = None;
    for (k, z) in conjugates.iter().enumerate() {
        match orbit.iter().position(|o| o.overlaps(z)) {
            Some(i) => {
                if k == 0 {
                    first_idx = Some(i);
                }
            }
            None => {
                if k == 0 {
                    first_idx = Some(orbit.len());
                }
                orbit.push(z.clone());
            }
        }
    }
    let first = first_idx.ok_or_else(|| Error::NotClosedOrbit("empty orbit".into()))?;
    let m = orbit.len();
    if m.saturating_sub(1) > MAX_SUBSET_BITS {
        return Err(Error::OrbitTooLarge(m));
    }
    let prec = orbit.iter().map(|z| z.prec()).min().unwrap();
    let bits = cfg.bits.min(prec.saturating_sub(GUARD_BITS)).max(64);
    let monic = expand_from_roots(&orbit, &Interval::one(prec));
    let qbits = bits / 4;
    let q = Integer::from(1) << qbits;
    // a coefficient interval narrower than 1/(2Q^2) contains at most one rational of denominator <= Q
    let max_width = Float::with_val(prec, 1) >> (2 * qbits + 1);
    let mut rats = Vec::with_capacity(m + 1);
    for c in &monic {
        if !c.im.contains_zero() {
            return Err(Error::NotClosedOrbit("a coefficient is not real".into()));
        }
        if !c.re.is_finite() || c.re.width() > max_width {
            return Err(Error::PrecisionExhausted(bits));
        }
        let q_k = simplest_rational(&c.re).ok_or(Error::PrecisionExhausted(bits))?;
        if *q_k.denom() > q {
            return Err(Error::NotClosedOrbit(format!("coefficient near {} is not a small rational", c.re)));
        }
        rats.push(q_k);
    }
    let lcm = rats.iter().fold(Integer::from(1), |l, r| l.lcm(r.denom()));
    let g = IntPoly::new(
        rats.iter()
            .map(|r| (r * &lcm).complete().numer().clone())
            .collect(),
    )
    .primitive_part();
    for z in &orbit {
        if !g.eval_complex(z).contains_zero() {
            return Err(Error::NotClosedOrbit(format!("{z} is not a root of {g}")));
        }
    }
    let avail: Vec<usize> = (0..m).filter(|&i| i != first).collect();
    let (h, _) = factor_containing(&g, &orbit, first, &avail, bits / 2)?;
    Ok(h)
}

/// All values `(a_i - a_j) / (a_i - a_k)` over ordered triples of distinct
/// indices, the first entry being the one for `(i, j, k)` itself.
pub fn cross_ratio_orbit(rs: &RootSystem, i: usize, j: usize, k: usize) -> Vec<CInterval> {
    let n = rs.degree();
    let cr = |a: usize, b: usize, c: usize| {
        let z = rs.roots();
        z[a].sub(&z[b]).div(&z[a].sub(&z[c]))
    };
    let mut out = vec![cr(i, j, k)];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a != b && b != c && a != c && (a, b, c) != (i, j, k) {
                    out.push(cr(a, b, c));
                }
            }
        }
    }
    out
}
