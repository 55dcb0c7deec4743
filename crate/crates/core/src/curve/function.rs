use std::collections::BTreeMap;

use super::{Divisor, PlaneCurve};
use crate::error::{Error, Result};
use crate::field::{lift, Field, FieldElem};
use crate::geometry::{dot, ProjLine, ProjMatrix, ProjPoint};

/// A rational function `c · Π ℓ_i^(e_i)` with `Σ e_i = 0`, where the `ℓ_i`
/// are normalized linear forms over `ctx`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinFormProduct {
    ctx: Field,
    scale: FieldElem,
    factors: Vec<(ProjLine, i64)>,
}

impl LinFormProduct {
    /// Lines may live over any subfield of `ctx`.
    pub fn new(ctx: &Field, factors: impl IntoIterator<Item = (ProjLine, i64)>) -> Result<LinFormProduct> {
        let mut merged: BTreeMap<ProjLine, i64> = BTreeMap::new();
        for (l, e) in factors {
            *merged.entry(l.lift(ctx)?).or_insert(0) += e;
        }
        let factors: Vec<(ProjLine, i64)> = merged.into_iter().filter(|(_, e)| *e != 0).collect();
        let total: i64 = factors.iter().map(|f| f.1).sum();
        if total != 0 {
            return Err(Error::NotDegreeZero(total));
        }
        Ok(LinFormProduct { ctx: ctx.clone(), scale: ctx.one(), factors })
    }

    pub fn one(ctx: &Field) -> LinFormProduct {
        LinFormProduct { ctx: ctx.clone(), scale: ctx.one(), factors: Vec::new() }
    }

    /// `num / den`.
    pub fn ratio(ctx: &Field, num: ProjLine, den: ProjLine) -> Result<LinFormProduct> {
        LinFormProduct::new(ctx, [(num, 1), (den, -1)])
    }

    pub fn ctx(&self) -> &Field {
        &self.ctx
    }

    pub fn scale(&self) -> FieldElem {
        self.scale
    }

    pub fn factors(&self) -> &[(ProjLine, i64)] {
        &self.factors
    }

    pub fn lines(&self) -> Vec<ProjLine> {
        self.factors.iter().map(|f| f.0).collect()
    }

    pub fn with_scale(&self, c: FieldElem) -> Result<LinFormProduct> {
        Ok(LinFormProduct { scale: lift(c, &self.ctx)?, ..self.clone() })
    }

    pub fn mul(&self, o: &LinFormProduct) -> Result<LinFormProduct> {
        let k = crate::field::compositum(&self.ctx, &o.ctx)?;
        let mut out = LinFormProduct::new(&k, self.factors.iter().chain(&o.factors).copied())?;
        out.scale = k.mul(lift(self.scale, &k)?, lift(o.scale, &k)?);
        Ok(out)
    }

    pub fn pow(&self, e: i64) -> LinFormProduct {
        let k = &self.ctx;
        let scale = if e >= 0 { k.pow(self.scale, e as u64) } else { k.inv(k.pow(self.scale, (-e) as u64)) };
        let factors = if e == 0 { Vec::new() } else { self.factors.iter().map(|&(l, x)| (l, x * e)).collect() };
        LinFormProduct { ctx: k.clone(), scale, factors }
    }

    pub fn inverse(&self) -> LinFormProduct {
        self.pow(-1)
    }

    /// `P ↦ F(M P)`. Each form `ℓ` becomes `Mᵀ ℓ`; the scalars from
    /// renormalizing are folded into the constant.
    pub fn compose(&self, m: &ProjMatrix) -> Result<LinFormProduct> {
        let k = &self.ctx;
        let mt = super::lift_matrix(m, k)?.mat().transpose();
        let mut scale = self.scale;
        let mut factors = Vec::with_capacity(self.factors.len());
        for &(l, e) in &self.factors {
            let raw = mt.apply(k, &l.coords());
            let nl = ProjLine::new(k, raw)?;
            let lead = raw.iter().find(|x| !x.is_zero()).copied().unwrap();
            let f = if e >= 0 { k.pow(lead, e as u64) } else { k.inv(k.pow(lead, (-e) as u64)) };
            scale = k.mul(scale, f);
            factors.push((nl, e));
        }
        let mut out = LinFormProduct::new(k, factors)?;
        out.scale = scale;
        Ok(out)
    }

    /// Re-expresses the function over `dst ⊇ ctx`.
    pub fn lift(&self, dst: &Field) -> Result<LinFormProduct> {
        if dst.id() == self.ctx.id() {
            return Ok(self.clone());
        }
        let mut out = LinFormProduct::new(dst, self.factors.iter().copied())?;
        out.scale = lift(self.scale, dst)?;
        Ok(out)
    }

    /// Value at `P` (over `ctx`); `None` when `P` lies on a factor line.
    pub fn eval(&self, p: &ProjPoint) -> Option<FieldElem> {
        let k = &self.ctx;
        let c = p.coords();
        let mut num = self.scale;
        let mut den = k.one();
        for &(l, e) in &self.factors {
            let v = dot(k, &l.coords(), &c);
            if v.is_zero() {
                return None;
            }
            if e > 0 {
                num = k.mul(num, k.pow(v, e as u64));
            } else {
                den = k.mul(den, k.pow(v, (-e) as u64));
            }
        }
        Some(k.div(num, den))
    }

    /// `(F) = Σ e_i (ℓ_i · C)`, points over `ext`.
    pub fn divisor(&self, c: &PlaneCurve, ext: &Field) -> Result<Divisor> {
        let mut out = Divisor::zero(ext);
        for &(l, e) in &self.factors {
            out = out.add(&c.line_intersection_divisor(&l, ext)?.scale(e))?;
        }
        Ok(out)
    }

    /// Checks that no factor line is a component of `c`.
    pub fn validate_on(&self, c: &PlaneCurve) -> Result<()> {
        for &(l, _) in &self.factors {
            let k = c.splitting_field(&l)?;
            c.line_intersection_divisor(&l, &k)?;
        }
        Ok(())
    }

    pub fn display(&self) -> String {
        let k = &self.ctx;
        let mut s = if self.scale == k.one() { String::new() } else { format!("{} * ", k.format(self.scale)) };
        let parts: Vec<String> = self.factors.iter().map(|(l, e)| format!("{}^{}", l.display(k), e)).collect();
        s.push_str(&parts.join(" * "));
        s
    }
}
