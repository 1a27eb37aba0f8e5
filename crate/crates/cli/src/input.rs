//! Command-line input syntax: `--points "x1,y1;x2,y2;x3,y3"` and `--field`.

use chromogeometry::{FieldSpec, Point, Triangle};

use crate::error::CliError;

/// Parses a field flag; any failure is a field error (exit 4).
pub fn parse_field(text: &str) -> Result<FieldSpec, CliError> {
    text.parse::<FieldSpec>()
        .map_err(|e| CliError::Field(e.to_string()))
}

/// Parses three `;`-separated points.
pub fn parse_points(text: &str, field: FieldSpec) -> Result<[Point; 3], CliError> {
    let parts: Vec<&str> = text.split(';').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(CliError::Input(format!(
            "expected three points `x,y` separated by `;`, got {}",
            parts.len()
        )));
    }
    let mut points = Vec::with_capacity(3);
    for p in parts {
        points.push(Point::parse(p, field).map_err(|e| CliError::Input(e.to_string()))?);
    }
    let [a, b, c]: [Point; 3] = points.try_into().expect("three points");
    Ok([a, b, c])
}

pub fn parse_triangle(text: &str, field: FieldSpec) -> Result<Triangle, CliError> {
    let [a, b, c] = parse_points(text, field)?;
    Ok(Triangle::new(a, b, c)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_points_and_fields() {
        let f = parse_field("rational").unwrap();
        let t = parse_triangle("0,0; 6,1 ;2,3", f).unwrap();
        assert_eq!(t.vertex(2).to_string(), "[6, 1]");
        let t = parse_triangle("1/2,-3/4;5,0;0,5", f).unwrap();
        assert_eq!(t.vertex(1).to_string(), "[1/2, -3/4]");
        assert_eq!(parse_field("fp:13").unwrap().modulus(), Some(13));
    }

    #[test]
    fn exit_codes() {
        let f = FieldSpec::RATIONAL;
        assert_eq!(parse_triangle("0,0;1,1", f).unwrap_err().exit_code(), 2);
        assert_eq!(parse_triangle("0,0;1,x;2,2", f).unwrap_err().exit_code(), 2);
        assert_eq!(
            parse_triangle("0,0;1/0,1;2,2", f).unwrap_err().exit_code(),
            2
        );
        assert_eq!(parse_triangle("0,0;1,1;2,2", f).unwrap_err().exit_code(), 3);
        assert_eq!(parse_field("fp:4").unwrap_err().exit_code(), 4);
        assert_eq!(parse_field("reals").unwrap_err().exit_code(), 4);
    }
}
