use std::collections::BTreeMap;

use serde::Serialize;

use super::orbit_sum;
use crate::curve::{interpolate_curve, Divisor, Interpolation, LinFormProduct, PlaneCurve};
use crate::error::{Error, Result};
use crate::field::{extension, Field};
use crate::galois::{fixed_field_generator_check, is_galois_point, FixedFieldCertificate, GaloisReport};
use crate::geometry::{collinear, AutGroup, ProjPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelKind {
    Inner,
    Outer,
}

#[derive(Clone, Copy, Debug)]
pub struct ModelOptions {
    /// Reject generators whose divisors differ from the required orbit sums.
    pub check_prescription: bool,
    pub interpolate: bool,
    /// Degree over the base field of the field the image is sampled in.
    pub ext_degree: u32,
}

impl Default for ModelOptions {
    fn default() -> Self {
        ModelOptions { check_prescription: true, interpolate: true, ext_degree: 3 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Incidence {
    pub point: usize,
    pub line: &'static str,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum InterpolationOutcome {
    Skipped,
    Curve { degree: u32, reduced: bool },
    Underdetermined { nullity: usize },
    NoCurve,
}

/// `φ = (f : g : 1)` on a source curve, with the data needed to verify it.
#[derive(Clone, Debug)]
pub struct PlaneModel {
    pub kind: ModelKind,
    pub source: PlaneCurve,
    pub groups: [AutGroup; 3],
    pub points: [ProjPoint; 3],
    pub f: LinFormProduct,
    pub g: LinFormProduct,
    pub div_f: Divisor,
    pub div_g: Divisor,
    /// Common pole bound `D`; the pullback of `Z = 0`.
    pub poles: Divisor,
    /// Pullbacks of `X = 0`, `Y = 0`, `Z = 0`.
    pub pullbacks: [Divisor; 3],
    pub base_point_free: bool,
    pub poles_agree: bool,
    pub incidences: Vec<Incidence>,
    pub sample_field: Field,
    /// `(P, φ(P))` over the sample field, sorted by `P`.
    pub samples: Vec<(ProjPoint, ProjPoint)>,
    /// `(image, first preimage, other preimage)` for every repeated image.
    pub collisions: Vec<(ProjPoint, ProjPoint, ProjPoint)>,
    pub expected_degree: u32,
    pub interpolation: InterpolationOutcome,
    pub image: Option<PlaneCurve>,
    /// `(0:1:0)`, `(1:0:0)`, `(0:0:1)` over the base field.
    pub vertices: [ProjPoint; 3],
}

fn pointwise_max(a: &Divisor, b: &Divisor) -> Result<Divisor> {
    let mut m: BTreeMap<ProjPoint, i64> = BTreeMap::new();
    for (p, c) in a.terms().chain(b.terms()) {
        let e = m.entry(*p).or_insert(0);
        *e = (*e).max(*c);
    }
    Divisor::from_terms(a.ctx(), m)
}

/// Builds `φ = (f : g : 1)`. `groups` and `points` are `G_i` and `Q_i`
/// (outer) or `P_i` (inner), over the base field of `source`.
pub fn build_plane_model(
    kind: ModelKind,
    source: &PlaneCurve,
    groups: &[AutGroup; 3],
    points: &[ProjPoint; 3],
    f: &LinFormProduct,
    g: &LinFormProduct,
    opts: ModelOptions,
) -> Result<PlaneModel> {
    let base = source.base();
    let mut lines = f.lines();
    lines.extend(g.lines());
    let k = source.splitting_field_for_lines(&lines)?;
    let div_f = f.divisor(source, &k)?;
    let div_g = g.divisor(source, &k)?;

    let (fz, fp, gz, gp) = match kind {
        ModelKind::Outer => (1, 2, 0, 2),
        ModelKind::Inner => (2, 1, 2, 0),
    };
    let want_f = orbit_sum(&k, &groups[0], &points[fz])?.sub(&orbit_sum(&k, &groups[0], &points[fp])?)?;
    let want_g = orbit_sum(&k, &groups[1], &points[gz])?.sub(&orbit_sum(&k, &groups[1], &points[gp])?)?;
    if opts.check_prescription {
        for (which, want, got) in [("f", &want_f, &div_f), ("g", &want_g, &div_g)] {
            if !want.same_as(got)? {
                return Err(Error::PrescriptionMismatch {
                    which: which.into(),
                    expected: want.display(),
                    got: got.display(),
                });
            }
        }
    }

    let poles = pointwise_max(&div_f.negative_part(), &div_g.negative_part())?;
    let poles_agree = div_f.negative_part().same_as(&div_g.negative_part())?;
    let pullbacks = [div_f.add(&poles)?, div_g.add(&poles)?, poles.clone()];
    let base_point_free = pullbacks[0].support().iter().all(|p| pullbacks[1].coeff(p) == 0 || pullbacks[2].coeff(p) == 0);

    let on = |i: usize, line: usize| -> Result<bool> { Ok(pullbacks[line].coeff(&points[i].lift(&k)?) > 0) };
    let names = ["X=0", "Y=0", "Z=0"];
    let wanted: &[(usize, usize)] = match kind {
        ModelKind::Outer => &[(1, 0), (0, 1), (2, 2)],
        ModelKind::Inner => &[(0, 0), (0, 2), (1, 1), (1, 2), (2, 0), (2, 1)],
    };
    let mut incidences = Vec::new();
    for &(i, line) in wanted {
        incidences.push(Incidence { point: i + 1, line: names[line], holds: on(i, line)? });
    }

    let expected_degree = match kind {
        ModelKind::Outer => groups[0].order() as u32,
        ModelKind::Inner => groups[0].order() as u32 + 1,
    };

    let ext = extension(base, opts.ext_degree)?;
    let fe = f.lift(&ext)?;
    let ge = g.lift(&ext)?;
    let mut samples = Vec::new();
    let mut seen: BTreeMap<ProjPoint, ProjPoint> = BTreeMap::new();
    let mut collisions = Vec::new();
    for p in source.enumerate_points(&ext)? {
        let (Some(a), Some(b)) = (fe.eval(&p), ge.eval(&p)) else { continue };
        let img = ProjPoint::new(&ext, [a, b, ext.one()])?;
        match seen.get(&img) {
            Some(first) => collisions.push((img, *first, p)),
            None => {
                seen.insert(img, p);
            }
        }
        samples.push((p, img));
    }
    let d = expected_degree as usize;
    let allowed = d.saturating_sub(1) * d.saturating_sub(2) / 2;
    let distinct_bad: std::collections::BTreeSet<ProjPoint> = collisions.iter().map(|c| c.0).collect();
    if distinct_bad.len() > allowed {
        let shown: Vec<String> =
            collisions.iter().take(5).map(|(_, a, b)| format!("{} ~ {}", a.display(&ext), b.display(&ext))).collect();
        return Err(Error::NotBirational(format!(
            "{} image points with several preimages (allowed {}): {}",
            distinct_bad.len(),
            allowed,
            shown.join(", ")
        )));
    }

    let (interpolation, image) = if opts.interpolate {
        let pts: Vec<ProjPoint> = seen.keys().copied().collect();
        match interpolate_curve(&ext, &pts, expected_degree) {
            Interpolation::Curve { poly, reduced } => {
                let outcome = InterpolationOutcome::Curve { degree: expected_degree, reduced };
                let poly = poly
                    .restrict(&ext, base)?
                    .ok_or_else(|| Error::Internal("image equation not defined over the base field".into()))?;
                (outcome, Some(PlaneCurve::new(base, poly)?))
            }
            Interpolation::Underdetermined { nullity } => (InterpolationOutcome::Underdetermined { nullity }, None),
            Interpolation::NoCurve => (InterpolationOutcome::NoCurve, None),
        }
    } else {
        (InterpolationOutcome::Skipped, None)
    };

    let pt = |c| ProjPoint::from_ints(base, c);
    let vertices = [pt([0, 1, 0])?, pt([1, 0, 0])?, pt([0, 0, 1])?];
    Ok(PlaneModel {
        kind,
        source: source.clone(),
        groups: groups.clone(),
        points: *points,
        f: f.clone(),
        g: g.clone(),
        div_f,
        div_g,
        poles,
        pullbacks,
        base_point_free,
        poles_agree,
        incidences,
        sample_field: ext,
        samples,
        collisions,
        expected_degree,
        interpolation,
        image,
        vertices,
    })
}

impl PlaneModel {
    pub fn image_degree(&self) -> Option<u32> {
        self.image.as_ref().map(|c| c.degree())
    }

    pub fn incidences_hold(&self) -> bool {
        self.incidences.iter().all(|i| i.holds)
    }
}

#[derive(Clone, Debug)]
pub struct VertexReport {
    pub vertex: ProjPoint,
    /// The function the projection from this vertex induces on the source.
    pub function: LinFormProduct,
    pub group_order: usize,
    pub certificate: FixedFieldCertificate,
    pub projection_degree: u32,
    /// Curve-preserving perspectivities of the image at this vertex.
    pub image_side: std::result::Result<GaloisReport, String>,
    pub galois: bool,
}

#[derive(Clone, Debug)]
pub struct ModelGaloisReport {
    pub vertices: Vec<VertexReport>,
    pub non_collinear: bool,
    pub all_galois: bool,
}

/// Certifies each vertex as a Galois point of the image: the projection
/// from it pulls back to `f`, `g` or `g/f`, which must generate the fixed
/// field of `G_1`, `G_2` or `G_3` and have pole degree equal to the
/// projection degree.
pub fn verify_model_galois(model: &PlaneModel) -> Result<ModelGaloisReport> {
    let image = model
        .image
        .as_ref()
        .ok_or_else(|| Error::Scenario("model has no interpolated image curve".into()))?;
    let base = model.source.base();
    let deg = image.degree();
    let projection_degree = match model.kind {
        ModelKind::Outer => deg,
        ModelKind::Inner => deg - 1,
    };
    let gf = model.g.mul(&model.f.inverse())?;
    let fns = [model.f.clone(), model.g.clone(), gf];
    let mut vertices = Vec::new();
    for i in 0..3 {
        let certificate = fixed_field_generator_check(&model.source, &model.groups[i], &fns[i])?;
        let group_order = model.groups[i].order();
        let galois = certificate.holds && group_order == projection_degree as usize;
        let image_side = is_galois_point(image, &model.vertices[i], base).map_err(|e| e.to_string());
        vertices.push(VertexReport {
            vertex: model.vertices[i],
            function: fns[i].clone(),
            group_order,
            certificate,
            projection_degree,
            image_side,
            galois,
        });
    }
    let [a, b, c] = model.vertices;
    let non_collinear = !collinear(base, &a, &b, &c);
    let all_galois = non_collinear && vertices.iter().all(|v| v.galois);
    Ok(ModelGaloisReport { vertices, non_collinear, all_galois })
}
