//! The three coloured metrics and what follows directly from them:
//! quadrance, spread, null lines, perpendicularity, altitudes, feet and
//! perpendicular bisectors.
//!
//! Each colour is a symmetric bilinear form on the plane:
//!
//! | colour | form            | quadrance of `[x, y]` |
//! |--------|-----------------|-----------------------|
//! | blue   | `diag(1, 1)`    | `x^2 + y^2`           |
//! | red    | `diag(1, -1)`   | `x^2 - y^2`           |
//! | green  | `antidiag(1, 1)`| `2xy`                 |

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::affine::{join, meet, midpoint_unchecked, same_field, Line, Point};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colour {
    Blue,
    Red,
    Green,
}

impl Colour {
    pub const ALL: [Colour; 3] = [Colour::Blue, Colour::Red, Colour::Green];

    /// Gram matrix of the form.
    pub const fn form(self) -> [[i8; 2]; 2] {
        match self {
            Colour::Blue => [[1, 0], [0, 1]],
            Colour::Red => [[1, 0], [0, -1]],
            Colour::Green => [[0, 1], [1, 0]],
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            Colour::Blue => "blue",
            Colour::Red => "red",
            Colour::Green => "green",
        }
    }

    /// One-letter subscript used in point labels (`O_b`, `C_r`, ...).
    pub const fn initial(self) -> char {
        match self {
            Colour::Blue => 'b',
            Colour::Red => 'r',
            Colour::Green => 'g',
        }
    }

    /// The other two colours, in blue/red/green order.
    pub fn others(self) -> [Colour; 2] {
        match self {
            Colour::Blue => [Colour::Red, Colour::Green],
            Colour::Red => [Colour::Blue, Colour::Green],
            Colour::Green => [Colour::Blue, Colour::Red],
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Colour {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "blue" => Ok(Colour::Blue),
            "red" => Ok(Colour::Red),
            "green" => Ok(Colour::Green),
            _ => Err(Error::Parse {
                input: s.to_string(),
                reason: "expected blue, red or green".into(),
            }),
        }
    }
}

/// Affine weights `lambda + mu = 1` with `F_b = lambda F_r + mu F_g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FootCoefficients {
    pub lambda: Scalar,
    pub mu: Scalar,
}

/// Evaluates the form through its Gram matrix; coefficients are 0 or +-1.
pub(crate) fn dot_unchecked(colour: Colour, v: &Point, w: &Point) -> Scalar {
    let vs = [v.x(), v.y()];
    let ws = [w.x(), w.y()];
    let mut acc = Scalar::zero(v.field());
    for (i, row) in colour.form().iter().enumerate() {
        for (j, &k) in row.iter().enumerate() {
            match k {
                0 => {}
                1 => acc = acc + vs[i] * ws[j],
                -1 => acc = acc - vs[i] * ws[j],
                _ => unreachable!("forms have unit coefficients"),
            }
        }
    }
    acc
}

pub fn dot(colour: Colour, v: &Point, w: &Point) -> Result<Scalar> {
    v.check_field(w)?;
    Ok(dot_unchecked(colour, v, w))
}

pub(crate) fn quadrance_unchecked(colour: Colour, p: &Point, q: &Point) -> Scalar {
    let d = q.minus(p);
    dot_unchecked(colour, &d, &d)
}

pub fn quadrance(colour: Colour, p: &Point, q: &Point) -> Result<Scalar> {
    p.check_field(q)?;
    Ok(quadrance_unchecked(colour, p, q))
}

/// The form evaluated on line coefficients `(a, b)`; zero iff the line is null.
pub fn line_form(colour: Colour, l: &Line) -> Scalar {
    let (a, b) = (l.a(), l.b());
    match colour {
        Colour::Blue => a * a + b * b,
        Colour::Red => a * a - b * b,
        Colour::Green => a * b,
    }
}

pub fn is_null_line(colour: Colour, l: &Line) -> bool {
    line_form(colour, l).is_zero()
}

pub fn perpendicular(colour: Colour, l1: &Line, l2: &Line) -> Result<bool> {
    same_field(l1.a(), l2.a())?;
    let (a1, b1, a2, b2) = (l1.a(), l1.b(), l2.a(), l2.b());
    let v = match colour {
        Colour::Blue => a1 * a2 + b1 * b2,
        Colour::Red => a1 * a2 - b1 * b2,
        Colour::Green => a1 * b2 + b1 * a2,
    };
    Ok(v.is_zero())
}

/// Spread between two lines from their coefficients.
pub fn spread(colour: Colour, l1: &Line, l2: &Line) -> Result<Scalar> {
    same_field(l1.a(), l2.a())?;
    let n1 = line_form(colour, l1);
    if n1.is_zero() {
        return Err(Error::NullLine {
            colour,
            position: 1,
        });
    }
    let n2 = line_form(colour, l2);
    if n2.is_zero() {
        return Err(Error::NullLine {
            colour,
            position: 2,
        });
    }
    let cross = (l1.a() * l2.b() - l2.a() * l1.b()).square();
    let s = match colour {
        Colour::Blue => cross * (n1 * n2).inv()?,
        Colour::Red => -(cross * (n1 * n2).inv()?),
        // n1 n2 = a1 b1 a2 b2, so the denominator is 4 n1 n2
        Colour::Green => -(cross * (n1 * n2).scale(4).inv()?),
    };
    Ok(s)
}

/// Spread between the lines spanned by direction vectors `v` and `w`:
/// `1 - (v.w)^2 / (Q(v) Q(w))`.
pub fn spread_by_vectors(colour: Colour, v: &Point, w: &Point) -> Result<Scalar> {
    v.check_field(w)?;
    let qv = dot_unchecked(colour, v, v);
    if qv.is_zero() {
        return Err(Error::NullLine {
            colour,
            position: 1,
        });
    }
    let qw = dot_unchecked(colour, w, w);
    if qw.is_zero() {
        return Err(Error::NullLine {
            colour,
            position: 2,
        });
    }
    let d = dot_unchecked(colour, v, w);
    Ok(Scalar::one(v.field()) - d.square() * (qv * qw).inv()?)
}

/// The unique line through `p` that is `colour`-perpendicular to `l`.
pub fn altitude(colour: Colour, p: &Point, l: &Line) -> Result<Line> {
    same_field(p.x(), l.a())?;
    let (a, b) = (l.a(), l.b());
    let (x0, y0) = (p.x(), p.y());
    let (na, nb, nc) = match colour {
        Colour::Blue => (b.clone(), -a, a * y0 - b * x0),
        Colour::Red => (b.clone(), a.clone(), -(b * x0) - a * y0),
        Colour::Green => (a.clone(), -b, b * y0 - a * x0),
    };
    Line::new(na, nb, nc)
}

/// Foot of the `colour` altitude from `p` to `l`, from the closed forms.
pub fn foot(colour: Colour, p: &Point, l: &Line) -> Result<Point> {
    same_field(p.x(), l.a())?;
    let n = line_form(colour, l);
    if n.is_zero() {
        return Err(Error::NullLine {
            colour,
            position: 1,
        });
    }
    let (a, b, c) = (l.a(), l.b(), l.c());
    let (x0, y0) = (p.x(), p.y());
    let ab = a * b;
    let (x, y) = match colour {
        Colour::Blue => {
            let k = n.inv()?;
            (
                (b * b * x0 - &ab * y0 - a * c) * &k,
                (a * a * y0 - &ab * x0 - b * c) * &k,
            )
        }
        Colour::Red => {
            let k = n.inv()?;
            (
                (-(b * b * x0) - &ab * y0 - c * a) * &k,
                (&ab * x0 + a * a * y0 + b * c) * &k,
            )
        }
        Colour::Green => (
            (a * x0 - b * y0 - c) * a.scale(2).inv()?,
            (b * y0 - a * x0 - c) * b.scale(2).inv()?,
        ),
    };
    Point::new(x, y)
}

/// Foot computed as the meet of the altitude with the line.
pub fn foot_by_meet(colour: Colour, p: &Point, l: &Line) -> Result<Point> {
    if is_null_line(colour, l) {
        return Err(Error::NullLine {
            colour,
            position: 1,
        });
    }
    meet(&altitude(colour, p, l)?, l)
}

pub fn foot_coefficients(l: &Line) -> Result<FootCoefficients> {
    for colour in Colour::ALL {
        if is_null_line(colour, l) {
            return Err(Error::NullLine {
                colour,
                position: 1,
            });
        }
    }
    let a2 = l.a().square();
    let b2 = l.b().square();
    let denom = (&a2 + &b2).square().inv()?;
    Ok(FootCoefficients {
        lambda: (&a2 - &b2).square() * &denom,
        mu: (a2 * b2).scale(4) * denom,
    })
}

/// The `colour` perpendicular bisector of the segment `p q`.
pub fn perpendicular_bisector(colour: Colour, p: &Point, q: &Point) -> Result<Line> {
    p.check_field(q)?;
    if p == q {
        return Err(Error::CoincidentPoints);
    }
    let (x1, y1, x2, y2) = (p.x(), p.y(), q.x(), q.y());
    let (a, b, c) = match colour {
        Colour::Blue => (
            x1 - x2,
            y1 - y2,
            -(x1 * x1 - x2 * x2 + y1 * y1 - y2 * y2).halve(),
        ),
        Colour::Red => (
            x1 - x2,
            y2 - y1,
            -(x1 * x1 - x2 * x2 - y1 * y1 + y2 * y2).halve(),
        ),
        Colour::Green => (y2 - y1, x2 - x1, x1 * y1 - y2 * x2),
    };
    Line::new(a, b, c)
}

/// Perpendicular bisector as the altitude from the midpoint to the join.
pub fn perpendicular_bisector_by_altitude(colour: Colour, p: &Point, q: &Point) -> Result<Line> {
    let l = join(p, q)?;
    altitude(colour, &midpoint_unchecked(p, q), &l)
}
