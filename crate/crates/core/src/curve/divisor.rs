use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::field::{compositum, Field};
use crate::geometry::{ProjMatrix, ProjPoint};

/// A finite formal sum of points, all with coordinates in `ctx`.
#[derive(Clone, Debug)]
pub struct Divisor {
    ctx: Field,
    terms: BTreeMap<ProjPoint, i64>,
}

impl Divisor {
    pub fn zero(ctx: &Field) -> Divisor {
        Divisor { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    /// Builds a divisor from points over any subfield of `ctx`.
    pub fn from_terms(ctx: &Field, terms: impl IntoIterator<Item = (ProjPoint, i64)>) -> Result<Divisor> {
        let mut d = Divisor::zero(ctx);
        for (p, c) in terms {
            d.add_point(p.lift(ctx)?, c);
        }
        Ok(d)
    }

    pub fn point(ctx: &Field, p: ProjPoint, c: i64) -> Result<Divisor> {
        Divisor::from_terms(ctx, [(p, c)])
    }

    fn add_point(&mut self, p: ProjPoint, c: i64) {
        let e = self.terms.entry(p).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&p);
        }
    }

    pub fn ctx(&self) -> &Field {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ProjPoint, &i64)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &ProjPoint) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn support(&self) -> Vec<ProjPoint> {
        self.terms.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    pub fn positive_part(&self) -> Divisor {
        Divisor { ctx: self.ctx.clone(), terms: self.terms.iter().filter(|(_, &c)| c > 0).map(|(p, &c)| (*p, c)).collect() }
    }

    /// The pole part, with positive coefficients.
    pub fn negative_part(&self) -> Divisor {
        Divisor { ctx: self.ctx.clone(), terms: self.terms.iter().filter(|(_, &c)| c < 0).map(|(p, &c)| (*p, -c)).collect() }
    }

    pub fn scale(&self, n: i64) -> Divisor {
        if n == 0 {
            return Divisor::zero(&self.ctx);
        }
        Divisor { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(p, &c)| (*p, c * n)).collect() }
    }

    pub fn neg(&self) -> Divisor {
        self.scale(-1)
    }

    /// Same divisor with points re-expressed over `dst ⊇ ctx`.
    pub fn embed(&self, dst: &Field) -> Result<Divisor> {
        if dst.id() == self.ctx.id() {
            return Ok(self.clone());
        }
        let mut terms = BTreeMap::new();
        for (p, &c) in &self.terms {
            terms.insert(p.embed(&self.ctx, dst)?, c);
        }
        Ok(Divisor { ctx: dst.clone(), terms })
    }

    /// Sum, computed over the compositum of both contexts.
    pub fn add(&self, o: &Divisor) -> Result<Divisor> {
        let k = compositum(&self.ctx, &o.ctx)?;
        let mut out = self.embed(&k)?;
        for (p, &c) in &o.embed(&k)?.terms {
            out.add_point(*p, c);
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Divisor) -> Result<Divisor> {
        self.add(&o.neg())
    }

    /// Exact equality after embedding both into their compositum.
    pub fn same_as(&self, o: &Divisor) -> Result<bool> {
        let k = compositum(&self.ctx, &o.ctx)?;
        Ok(self.embed(&k)?.terms == o.embed(&k)?.terms)
    }

    /// Image under a projective map defined over a subfield of `ctx`.
    pub fn pushforward(&self, m: &ProjMatrix) -> Result<Divisor> {
        let m = lift_matrix(m, &self.ctx)?;
        let mut out = Divisor::zero(&self.ctx);
        for (p, &c) in &self.terms {
            out.add_point(m.apply(&self.ctx, p), c);
        }
        Ok(out)
    }

    pub fn display(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self.terms.iter().map(|(p, c)| format!("{}*{}", c, p.display(&self.ctx))).collect();
        parts.join(" + ")
    }
}

impl PartialEq for Divisor {
    fn eq(&self, o: &Divisor) -> bool {
        self.same_as(o).unwrap_or(false)
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

/// Re-expresses a matrix over `dst`, from whichever cached subfield owns it.
pub fn lift_matrix(m: &ProjMatrix, dst: &Field) -> Result<ProjMatrix> {
    if m.ctx_id() == dst.id() {
        return Ok(*m);
    }
    let e = m.mat().0;
    let mut out = [dst.zero(); 9];
    for i in 0..9 {
        out[i] = crate::field::lift(e[i], dst)?;
    }
    ProjMatrix::new(dst, crate::geometry::Mat3(out))
}
