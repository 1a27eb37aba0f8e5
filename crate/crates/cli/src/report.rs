//! The `report` dossier: every measure, center, circle and theorem check of
//! one triangle, exact and in canonical text form.

use std::fmt::Write as _;

use chromogeometry::centers::{center_set, euler_line, omega_triangle};
use chromogeometry::circle::{circumcircle, incidence_report, nine_point_circle};
use chromogeometry::laws::measures;
use chromogeometry::verify::verify_triangle;
use chromogeometry::{
    CenterSet, CheckFamily, Circle, Colour, Error as GeomError, FieldSpec, IncidenceCheck, Line,
    Point, Triangle, TriangleMeasures, Verdict,
};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

/// A value stored once per colour, serialized as `{"blue", "red", "green"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerColour<T> {
    pub blue: T,
    pub red: T,
    pub green: T,
}

impl<T> PerColour<T> {
    pub fn from_fn(mut f: impl FnMut(Colour) -> T) -> Self {
        PerColour {
            blue: f(Colour::Blue),
            red: f(Colour::Red),
            green: f(Colour::Green),
        }
    }

    pub fn get(&self, colour: Colour) -> &T {
        match colour {
            Colour::Blue => &self.blue,
            Colour::Red => &self.red,
            Colour::Green => &self.green,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CirclePair {
    pub circumcircle: Circle,
    pub nine_point_circle: Circle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaReport {
    pub vertices: Option<[Point; 3]>,
    pub degenerate: bool,
}

/// Named verdicts, serialized as an ordered map of `true | false | "skipped-null"`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NamedChecks(pub Vec<(String, Verdict)>);

impl NamedChecks {
    pub fn all_hold(&self) -> bool {
        self.0.iter().all(|(_, v)| *v != Verdict::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &str> {
        self.0
            .iter()
            .filter(|(_, v)| *v == Verdict::Fail)
            .map(|(n, _)| n.as_str())
    }
}

fn verdict_json<S: SerializeMap>(m: &mut S, name: &str, v: Verdict) -> Result<(), S::Error> {
    match v {
        Verdict::Pass => m.serialize_entry(name, &true),
        Verdict::Fail => m.serialize_entry(name, &false),
        Verdict::Skip => m.serialize_entry(name, "skipped-null"),
    }
}

impl Serialize for NamedChecks {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (name, v) in &self.0 {
            verdict_json(&mut m, name, *v)?;
        }
        m.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub field: FieldSpec,
    pub triangle: [Point; 3],
    pub colours: PerColour<TriangleMeasures>,
    pub centers: CenterSet,
    pub circles: PerColour<CirclePair>,
    pub euler_lines: PerColour<Option<Line>>,
    pub omega: OmegaReport,
    pub incidence: NamedChecks,
    pub checks: NamedChecks,
    pub all_checks_hold: bool,
}

fn incidence_checks(list: Vec<IncidenceCheck>) -> NamedChecks {
    NamedChecks(
        list.into_iter()
            .map(|c| (c.name, Verdict::from(c.outcome)))
            .collect(),
    )
}

/// Every check family except the circle incidences, which are reported separately.
pub fn law_families() -> Vec<CheckFamily> {
    CheckFamily::ALL
        .into_iter()
        .filter(|f| *f != CheckFamily::Circles)
        .collect()
}

/// Builds the dossier. Fails on fields of characteristic 3, where the centroid is undefined.
pub fn build_report(t: &Triangle) -> Result<ReportDocument, CliError> {
    let centers = center_set(t)?;
    let omega = match omega_triangle(t) {
        Ok(o) => OmegaReport {
            vertices: Some(o.vertices.points().clone()),
            degenerate: false,
        },
        Err(GeomError::OmegaDegenerate) => OmegaReport {
            vertices: None,
            degenerate: true,
        },
        Err(e) => return Err(e.into()),
    };
    let record = verify_triangle(t, &law_families(), true);
    let checks = NamedChecks(record.named().map(|(n, v)| (n.to_string(), v)).collect());
    let incidence = incidence_checks(incidence_report(t));
    let all_checks_hold = checks.all_hold() && incidence.all_hold();
    Ok(ReportDocument {
        schema_version: SCHEMA_VERSION,
        field: t.field(),
        triangle: t.points().clone(),
        colours: PerColour::from_fn(|c| measures(c, t)),
        centers,
        circles: PerColour::from_fn(|c| CirclePair {
            circumcircle: circumcircle(c, t),
            nine_point_circle: nine_point_circle(c, t),
        }),
        euler_lines: PerColour::from_fn(|c| euler_line(c, t).ok()),
        omega,
        incidence,
        checks,
        all_checks_hold,
    })
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let [a1, a2, a3] = &self.triangle;
        let _ = writeln!(s, "field: {}", self.field);
        let _ = writeln!(s, "triangle: A1 = {a1}, A2 = {a2}, A3 = {a3}");
        let _ = writeln!(s, "centroid G = {}", self.centers.centroid);
        for c in Colour::ALL {
            let m = self.colours.get(c);
            let cc = self.centers.get(c);
            let circ = self.circles.get(c);
            let spreads: Vec<String> = m
                .spreads
                .iter()
                .map(|s| s.as_ref().map_or("undefined".into(), ToString::to_string))
                .collect();
            let _ = writeln!(s, "\n[{c}]");
            let _ = writeln!(
                s,
                "  quadrances  Q1 = {}, Q2 = {}, Q3 = {}",
                m.quadrances[0], m.quadrances[1], m.quadrances[2]
            );
            let _ = writeln!(
                s,
                "  spreads     s1 = {}, s2 = {}, s3 = {}",
                spreads[0], spreads[1], spreads[2]
            );
            let _ = writeln!(s, "  quadrea     {}", m.quadrea);
            let _ = writeln!(s, "  orthocenter O = {}", cc.orthocenter);
            let _ = writeln!(s, "  circumcenter C = {}", cc.circumcenter);
            let _ = writeln!(s, "  nine-point center N = {}", cc.nine_point_center);
            let _ = writeln!(s, "  circumcircle K = {}", circ.circumcircle.quadrance);
            let _ = writeln!(
                s,
                "  nine-point circle K = {}",
                circ.nine_point_circle.quadrance
            );
            match self.euler_lines.get(c) {
                Some(l) => {
                    let _ = writeln!(s, "  Euler line {l}");
                }
                None => {
                    let _ = writeln!(s, "  Euler line undefined (O = C)");
                }
            }
        }
        match &self.omega.vertices {
            Some([p, q, r]) => {
                let _ = writeln!(s, "\northocenter triangle: {p}, {q}, {r}");
            }
            None => {
                let _ = writeln!(s, "\northocenter triangle: degenerate");
            }
        }
        let count =
            |checks: &NamedChecks, v: Verdict| checks.0.iter().filter(|(_, x)| *x == v).count();
        for (label, checks) in [
            ("theorem checks", &self.checks),
            ("circle incidences", &self.incidence),
        ] {
            let _ = writeln!(
                s,
                "{label}: {} hold, {} skipped (null), {} fail",
                count(checks, Verdict::Pass),
                count(checks, Verdict::Skip),
                count(checks, Verdict::Fail)
            );
            for name in checks.failures() {
                let _ = writeln!(s, "  FAILED {name}");
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked() -> Triangle {
        Triangle::from_i64([(0, 0), (6, 1), (2, 3)], FieldSpec::RATIONAL).unwrap()
    }

    #[test]
    fn worked_report_values() {
        let doc = build_report(&worked()).unwrap();
        assert!(doc.all_checks_hold);
        let v: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(
            v["centers"]["blue"]["O"],
            serde_json::json!(["15/8", "15/4"])
        );
        assert_eq!(v["centers"]["G"], serde_json::json!(["8/3", "4/3"]));
        assert_eq!(v["circles"]["red"]["circumcircle"]["K"], "525/256");
        assert_eq!(
            v["colours"]["blue"]["quadrances"],
            serde_json::json!(["20", "13", "37"])
        );
        assert_eq!(v["omega"]["degenerate"], false);
    }

    #[test]
    fn text_format_mentions_centers() {
        let text = build_report(&worked()).unwrap().to_text();
        assert!(text.contains("orthocenter O = [15/8, 15/4]"));
        assert!(text.contains("0 fail"));
    }

    #[test]
    fn characteristic_three_is_a_field_error() {
        let f = FieldSpec::prime(3).unwrap();
        let t = Triangle::from_i64([(0, 0), (1, 0), (0, 1)], f).unwrap();
        assert_eq!(build_report(&t).unwrap_err().exit_code(), 4);
    }
}
