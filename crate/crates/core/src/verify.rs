//! A catalogue of named theorem checks evaluated on a single triangle.
//!
//! Checks are emitted in a fixed order for a given [`CheckFamily`] set, so
//! callers that evaluate many triangles can aggregate by position and ask
//! for the names once. Each check either passes, fails, or is skipped
//! because an object it needs is undefined (a null line, or 3 not invertible).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::affine::{
    brackets, centroid, centroid_of, collinear, join, midpoint_unchecked, other_two, BracketSet,
    Line, Point, Triangle,
};
use crate::centers::{
    circumcenter_by_meet, circumcenter_from, nine_point_center_by_meet, nine_point_center_from,
    one_third_two_thirds, orthocenter_by_meet, orthocenter_from,
};
use crate::circle::{visit_incidences, Outcome};
use crate::error::{Error, Result};
use crate::laws::{
    cross_law_holds_at, measures, pythagoras_holds, quadrea_by_brackets, spread_law_holds,
    triple_quad_holds, triple_spread_holds, TriangleMeasures,
};
use crate::metric::{
    altitude, foot, foot_by_meet, foot_coefficients, is_null_line, perpendicular,
    quadrance_unchecked, spread, spread_by_vectors, Colour,
};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckFamily {
    /// Triple quad, Pythagoras, Spread law, Cross law, Triple spread, per colour.
    Laws,
    /// `A_b = -A_r = -A_g = 4 ([x1y2]^-)^2`.
    Quadrea,
    /// `Q_b^2 = Q_r^2 + Q_g^2` and `1/s_b + 1/s_r + 1/s_g = 2`, plus the two spread definitions.
    Coloured,
    /// Closed-form centers against meets of their defining lines.
    Centers,
    /// Circumcenters and nine-point centers as midpoints across colours.
    Midpoints,
    /// Euler line relations, the orthocenter triangle and the cross-colour collinearities.
    Euler,
    /// Circumcircles, nine-point circles and their incidences.
    Circles,
    /// Perpendicularity of altitudes, Pythagorean means and feet.
    Altitudes,
}

impl CheckFamily {
    pub const ALL: [CheckFamily; 8] = [
        CheckFamily::Laws,
        CheckFamily::Quadrea,
        CheckFamily::Coloured,
        CheckFamily::Centers,
        CheckFamily::Midpoints,
        CheckFamily::Euler,
        CheckFamily::Circles,
        CheckFamily::Altitudes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckFamily::Laws => "laws",
            CheckFamily::Quadrea => "quadrea",
            CheckFamily::Coloured => "coloured",
            CheckFamily::Centers => "centers",
            CheckFamily::Midpoints => "midpoints",
            CheckFamily::Euler => "euler",
            CheckFamily::Circles => "circles",
            CheckFamily::Altitudes => "altitudes",
        }
    }
}

impl fmt::Display for CheckFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckFamily::ALL
            .into_iter()
            .find(|f| f.name() == s.trim())
            .ok_or_else(|| Error::Parse {
                input: s.to_string(),
                reason: format!(
                    "unknown check family; expected one of {}",
                    CheckFamily::ALL.map(|f| f.name()).join(", ")
                ),
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl From<Outcome> for Verdict {
    fn from(o: Outcome) -> Self {
        match o {
            Outcome::Holds => Verdict::Pass,
            Outcome::Fails => Verdict::Fail,
            Outcome::SkippedNull => Verdict::Skip,
        }
    }
}

/// Verdicts of one triangle, in catalogue order, with names if requested.
#[derive(Clone, Debug, Default)]
pub struct Record {
    names: Option<Vec<String>>,
    verdicts: Vec<Verdict>,
}

impl Record {
    fn new(with_names: bool) -> Self {
        Record {
            names: with_names.then(Vec::new),
            verdicts: Vec::new(),
        }
    }

    fn check(&mut self, name: impl FnOnce() -> String, verdict: impl Into<Verdict>) {
        if let Some(names) = self.names.as_mut() {
            names.push(name());
        }
        self.verdicts.push(verdict.into());
    }

    /// A check that is skipped when its inputs are undefined.
    fn check_opt(&mut self, name: impl FnOnce() -> String, verdict: Option<bool>) {
        self.check(name, verdict.map_or(Verdict::Skip, Verdict::from));
    }

    pub fn verdicts(&self) -> &[Verdict] {
        &self.verdicts
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// `(name, verdict)` pairs; empty if names were not requested.
    pub fn named(&self) -> impl Iterator<Item = (&str, Verdict)> {
        self.names
            .iter()
            .flatten()
            .map(String::as_str)
            .zip(self.verdicts.iter().copied())
    }

    pub fn failures(&self) -> impl Iterator<Item = (&str, Verdict)> {
        self.named().filter(|(_, v)| *v == Verdict::Fail)
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.verdicts.iter().filter(|v| **v == verdict).count()
    }
}

/// Evaluates every check of the selected families on `t`.
pub fn verify_triangle(t: &Triangle, families: &[CheckFamily], with_names: bool) -> Record {
    let mut rec = Record::new(with_names);
    let ctx = Context::new(t);
    for family in CheckFamily::ALL {
        if !families.contains(&family) {
            continue;
        }
        match family {
            CheckFamily::Laws => laws(&ctx, &mut rec),
            CheckFamily::Quadrea => quadreas(&ctx, &mut rec),
            CheckFamily::Coloured => coloured(&ctx, &mut rec),
            CheckFamily::Centers => center_oracles(&ctx, &mut rec),
            CheckFamily::Midpoints => midpoints(&ctx, &mut rec),
            CheckFamily::Euler => euler(&ctx, &mut rec),
            CheckFamily::Circles => circles(&ctx, &mut rec),
            CheckFamily::Altitudes => altitudes(&ctx, &mut rec),
        }
    }
    rec
}

/// Names of the checks for `families`, in evaluation order.
pub fn check_names(families: &[CheckFamily]) -> Vec<String> {
    let f = crate::scalar::FieldSpec::RATIONAL;
    let t = Triangle::from_i64([(0, 0), (6, 1), (2, 3)], f).expect("fixed triangle");
    verify_triangle(&t, families, true)
        .names
        .expect("names requested")
}

struct Context<'a> {
    t: &'a Triangle,
    b: BracketSet,
    measures: [TriangleMeasures; 3],
    orthos: [Point; 3],
    circums: [Point; 3],
    nines: [Point; 3],
    centroid: Option<Point>,
}

impl<'a> Context<'a> {
    fn new(t: &'a Triangle) -> Self {
        let b = brackets(t);
        Context {
            measures: Colour::ALL.map(|c| measures(c, t)),
            orthos: Colour::ALL.map(|c| orthocenter_from(c, &b)),
            circums: Colour::ALL.map(|c| circumcenter_from(c, &b)),
            nines: Colour::ALL.map(|c| nine_point_center_from(c, &b)),
            centroid: centroid(t).ok(),
            b,
            t,
        }
    }

    fn o(&self, c: Colour) -> &Point {
        &self.orthos[c as usize]
    }

    fn c(&self, c: Colour) -> &Point {
        &self.circums[c as usize]
    }

    fn n(&self, c: Colour) -> &Point {
        &self.nines[c as usize]
    }
}

fn parallel(p1: &Point, p2: &Point, q1: &Point, q2: &Point) -> bool {
    let d = p2.minus(p1);
    let e = q2.minus(q1);
    (d.x() * e.y() - d.y() * e.x()).is_zero()
}

fn laws(ctx: &Context, rec: &mut Record) {
    let t = ctx.t;
    for colour in Colour::ALL {
        let m = &ctx.measures[colour as usize];
        let [q1, q2, q3] = &m.quadrances;
        rec.check(
            || format!("{colour}.triple_quad_fails_for_triangle"),
            !triple_quad_holds(q1, q2, q3),
        );
        for k in 1..=3 {
            // right vertex at A_k: Q_i + Q_j = Q_k iff the two lines at A_k are perpendicular
            let (i, j) = other_two(k);
            let perp = perpendicular(colour, &t.line(i), &t.line(j)).expect("single field");
            let pyth = pythagoras_holds(m.q(i), m.q(j), m.q(k));
            rec.check(
                || format!("{colour}.pythagoras_iff_perpendicular.A{k}"),
                perp == pyth,
            );
        }
        rec.check_opt(|| format!("{colour}.spread_law"), spread_law_holds(m).ok());
        for k in 1..=3 {
            rec.check_opt(
                || format!("{colour}.cross_law.A{k}"),
                cross_law_holds_at(m, k).ok(),
            );
        }
        let triple = match &m.spreads {
            [Some(s1), Some(s2), Some(s3)] => Some(triple_spread_holds(s1, s2, s3)),
            _ => None,
        };
        rec.check_opt(|| format!("{colour}.triple_spread"), triple);
    }
}

fn quadreas(ctx: &Context, rec: &mut Record) {
    let four_area_sq = ctx.b.x1y2.square().scale(4);
    for colour in Colour::ALL {
        let a = &ctx.measures[colour as usize].quadrea;
        let expected = match colour {
            Colour::Blue => four_area_sq.clone(),
            _ => -&four_area_sq,
        };
        rec.check(
            || format!("quadrea.{colour}"),
            *a == expected && *a == quadrea_by_brackets(colour, ctx.t),
        );
    }
}

fn coloured(ctx: &Context, rec: &mut Record) {
    let t = ctx.t;
    for i in 1..=3 {
        let [qb, qr, qg] = ctx.measures.each_ref().map(|m| m.q(i));
        rec.check(
            || format!("coloured_quadrances.side{i}"),
            qb.square() == qr.square() + qg.square(),
        );
    }
    for k in 1..=3 {
        let (i, j) = other_two(k);
        let (l1, l2) = (t.line(j), t.line(i));
        let spreads: Option<Vec<Scalar>> = Colour::ALL
            .iter()
            .map(|&c| spread(c, &l1, &l2).ok())
            .collect();
        let holds = spreads.and_then(|s| {
            let total = s
                .iter()
                .map(|x| x.inv().ok())
                .collect::<Option<Vec<_>>>()?
                .into_iter()
                .fold(Scalar::zero(t.field()), |acc, x| acc + x);
            Some(total == Scalar::from_i64(2, t.field()))
        });
        rec.check_opt(|| format!("coloured_spreads.A{k}"), holds);
    }
    for colour in Colour::ALL {
        for k in 1..=3 {
            let (i, j) = other_two(k);
            let v = t.vertex(i).minus(t.vertex(k));
            let w = t.vertex(j).minus(t.vertex(k));
            let by_coeff = spread(colour, &t.line(j), &t.line(i)).ok();
            let by_vec = spread_by_vectors(colour, &v, &w).ok();
            let agree = match (by_coeff, by_vec) {
                (Some(a), Some(b)) => Some(a == b),
                (None, None) => None,
                _ => Some(false),
            };
            rec.check_opt(|| format!("{colour}.spread_definitions_agree.A{k}"), agree);
        }
    }
}

fn center_oracles(ctx: &Context, rec: &mut Record) {
    let t = ctx.t;
    for colour in Colour::ALL {
        rec.check(
            || format!("{colour}.orthocenter_closed_form_vs_meet"),
            orthocenter_by_meet(colour, t).as_ref() == Ok(ctx.o(colour)),
        );
        rec.check(
            || format!("{colour}.circumcenter_closed_form_vs_meet"),
            circumcenter_by_meet(colour, t).as_ref() == Ok(ctx.c(colour)),
        );
        rec.check(
            || format!("{colour}.nine_point_center_closed_form_vs_meet"),
            nine_point_center_by_meet(colour, t).as_ref() == Ok(ctx.n(colour)),
        );
    }
}

fn midpoints(ctx: &Context, rec: &mut Record) {
    for colour in Colour::ALL {
        let [u, v] = colour.others();
        rec.check(
            || {
                format!(
                    "C_{} = midpoint(O_{}, O_{})",
                    colour.initial(),
                    u.initial(),
                    v.initial()
                )
            },
            midpoint_unchecked(ctx.o(u), ctx.o(v)) == *ctx.c(colour),
        );
        rec.check(
            || {
                format!(
                    "N_{} = midpoint(C_{}, C_{})",
                    colour.initial(),
                    u.initial(),
                    v.initial()
                )
            },
            midpoint_unchecked(ctx.c(u), ctx.c(v)) == *ctx.n(colour),
        );
    }
}

fn euler(ctx: &Context, rec: &mut Record) {
    let g = ctx.centroid.as_ref();
    let omega = Triangle::new(
        ctx.o(Colour::Blue).clone(),
        ctx.o(Colour::Red).clone(),
        ctx.o(Colour::Green).clone(),
    )
    .ok();
    for colour in Colour::ALL {
        let (o, c, n) = (ctx.o(colour), ctx.c(colour), ctx.n(colour));
        rec.check(
            || format!("{colour}.N = midpoint(O, C)"),
            midpoint_unchecked(o, c) == *n,
        );
        rec.check_opt(
            || format!("{colour}.G = O/3 + 2C/3"),
            g.map(|g| one_third_two_thirds(o, c).as_ref() == Ok(g)),
        );
        rec.check_opt(
            || format!("{colour}.G = C/3 + 2N/3"),
            g.map(|g| one_third_two_thirds(c, n).as_ref() == Ok(g)),
        );
        rec.check_opt(
            || format!("{colour}.O N G C collinear"),
            g.map(|g| {
                collinear(o, n, g).unwrap_or(false)
                    && collinear(o, c, g).unwrap_or(false)
                    && collinear(n, c, g).unwrap_or(false)
            }),
        );
        // Euler line is the median of the orthocenter triangle from O_colour
        let median = omega.as_ref().and_then(|w| {
            let euler = join(o, c).ok()?;
            let [u, v] = colour.others();
            let i = colour as usize + 1;
            let m = join(w.vertex(i), &midpoint_unchecked(ctx.o(u), ctx.o(v))).ok()?;
            Some(euler == m)
        });
        rec.check_opt(|| format!("{colour}.euler_line_is_median_of_omega"), median);
    }
    rec.check_opt(
        || "centroid(omega) = G".to_string(),
        g.map(|g| {
            centroid_of(
                ctx.o(Colour::Blue),
                ctx.o(Colour::Red),
                ctx.o(Colour::Green),
            )
            .as_ref()
                == Ok(g)
        }),
    );
    for colour in Colour::ALL {
        let [u, v] = colour.others();
        let (su, s, sv) = (u.initial(), colour.initial(), v.initial());
        rec.check(
            || format!("O_{su} C_{s} O_{sv} collinear"),
            collinear(ctx.o(u), ctx.c(colour), ctx.o(v)).unwrap_or(false),
        );
        rec.check(
            || format!("C_{su} N_{s} C_{sv} collinear"),
            collinear(ctx.c(u), ctx.n(colour), ctx.c(v)).unwrap_or(false),
        );
        rec.check(
            || format!("C_{su} C_{sv} parallel to O_{su} O_{sv}"),
            parallel(ctx.c(u), ctx.c(v), ctx.o(u), ctx.o(v)),
        );
    }
}

fn circles(ctx: &Context, rec: &mut Record) {
    let t = ctx.t;
    let medial = t.medial();
    for colour in Colour::ALL {
        let c = ctx.c(colour);
        let k = quadrance_unchecked(colour, c, t.vertex(1));
        rec.check(
            || format!("{colour}.circumcircle_through_vertices"),
            t.points()
                .iter()
                .all(|v| quadrance_unchecked(colour, c, v) == k),
        );
        let n = ctx.n(colour);
        let kn = quadrance_unchecked(colour, n, medial.vertex(1));
        rec.check(
            || format!("{colour}.nine_point_circle_through_side_midpoints"),
            medial
                .points()
                .iter()
                .all(|v| quadrance_unchecked(colour, n, v) == kn),
        );
        rec.check(
            || format!("{colour}.nine_point_K_is_circumcircle_K_over_4"),
            kn.scale(4) == k,
        );
    }
    visit_incidences(t, &ctx.b, |name, outcome| rec.check(name, outcome));
}

fn altitude_checks_for(rec: &mut Record, p: &Point, l: &Line, tag: &str) {
    let [nb, nr, ng] = Colour::ALL.map(|c| altitude(c, p, l).expect("single field"));
    let perp = |c, x: &Line, y: &Line| perpendicular(c, x, y).expect("single field");
    rec.check(
        || format!("{tag}.n_b green-perpendicular n_r"),
        perp(Colour::Green, &nb, &nr),
    );
    rec.check(
        || format!("{tag}.n_r blue-perpendicular n_g"),
        perp(Colour::Blue, &nr, &ng),
    );
    rec.check(
        || format!("{tag}.n_g red-perpendicular n_b"),
        perp(Colour::Red, &ng, &nb),
    );
    let means = foot_coefficients(l).ok().map(|fc| {
        let feet = Colour::ALL.map(|c| foot(c, p, l).expect("line is non-null"));
        let combo = feet[1].times(&fc.lambda).plus(&feet[2].times(&fc.mu));
        combo == feet[0] && (&fc.lambda + &fc.mu).is_one()
    });
    rec.check_opt(|| format!("{tag}.pythagorean_means"), means);
    for colour in Colour::ALL {
        let agree = (!is_null_line(colour, l)).then(|| {
            let f = foot(colour, p, l);
            f.is_ok() && f == foot_by_meet(colour, p, l)
        });
        rec.check_opt(|| format!("{tag}.{colour}.foot_closed_form_vs_meet"), agree);
    }
}

fn altitudes(ctx: &Context, rec: &mut Record) {
    for i in 1..=3 {
        let tag = format!("A{i}_to_l{i}");
        altitude_checks_for(rec, ctx.t.vertex(i), &ctx.t.line(i), &tag);
    }
}

/// Altitude checks for an arbitrary point and line, named under `tag`.
pub fn verify_point_line(p: &Point, l: &Line, with_names: bool) -> Record {
    let mut rec = Record::new(with_names);
    altitude_checks_for(&mut rec, p, l, "point_line");
    rec
}
