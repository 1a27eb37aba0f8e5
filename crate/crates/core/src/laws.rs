//! The five laws of rational trigonometry and the quadrea.
//!
//! Every predicate is exact and division-free. Spreads that involve a null
//! line are kept as `None` rather than failing [`measures`].

use serde::Serialize;

use crate::affine::{brackets, other_two, Triangle};
use crate::error::{Error, Result};
use crate::metric::{quadrance_unchecked, spread, Colour};
use crate::scalar::Scalar;

/// Quadrances, spreads and quadrea of a triangle in one colour.
///
/// `quadrances[i-1]` is `Q_i`, the quadrance of the side opposite `A_i`;
/// `spreads[i-1]` is `s_i`, the spread at vertex `A_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleMeasures {
    #[serde(skip)]
    pub colour: Colour,
    pub quadrances: [Scalar; 3],
    pub spreads: [Option<Scalar>; 3],
    pub quadrea: Scalar,
}

impl TriangleMeasures {
    pub fn q(&self, i: usize) -> &Scalar {
        &self.quadrances[i - 1]
    }

    pub fn s(&self, i: usize) -> Result<&Scalar> {
        self.spreads[i - 1]
            .as_ref()
            .ok_or(Error::UndefinedSpread { vertex: i as u8 })
    }

    pub fn is_non_null(&self) -> bool {
        self.spreads.iter().all(Option::is_some)
    }
}

pub fn quadrea_of(q1: &Scalar, q2: &Scalar, q3: &Scalar) -> Scalar {
    (q1 + q2 + q3).square() - (q1.square() + q2.square() + q3.square()).scale(2)
}

pub fn measures(colour: Colour, t: &Triangle) -> TriangleMeasures {
    let quadrances = [1, 2, 3].map(|i| {
        let (j, k) = other_two(i);
        quadrance_unchecked(colour, t.vertex(j), t.vertex(k))
    });
    let lines = [1, 2, 3].map(|i| t.line(i));
    let spreads = [1, 2, 3].map(|i| {
        let (j, k) = other_two(i);
        // the two lines through A_i are l_k and l_j
        spread(colour, &lines[k - 1], &lines[j - 1]).ok()
    });
    let quadrea = quadrea_of(&quadrances[0], &quadrances[1], &quadrances[2]);
    TriangleMeasures {
        colour,
        quadrances,
        spreads,
        quadrea,
    }
}

/// `(Q1 + Q2 + Q3)^2 = 2(Q1^2 + Q2^2 + Q3^2)`: the points are collinear.
pub fn triple_quad_holds(q1: &Scalar, q2: &Scalar, q3: &Scalar) -> bool {
    quadrea_of(q1, q2, q3).is_zero()
}

/// `Q1 + Q2 = Q3`.
pub fn pythagoras_holds(q1: &Scalar, q2: &Scalar, q3: &Scalar) -> bool {
    q1 + q2 == *q3
}

/// `s1 / Q1 = s2 / Q2 = s3 / Q3`, cross-multiplied.
pub fn spread_law_holds(m: &TriangleMeasures) -> Result<bool> {
    let (s1, s2, s3) = (m.s(1)?, m.s(2)?, m.s(3)?);
    let (q1, q2, q3) = (m.q(1), m.q(2), m.q(3));
    Ok(s1 * q2 == s2 * q1 && s2 * q3 == s3 * q2 && s1 * q3 == s3 * q1)
}

/// Cross law at vertex `k`: `(Q_i + Q_j - Q_k)^2 = 4 Q_i Q_j (1 - s_k)`.
pub fn cross_law_holds_at(m: &TriangleMeasures, k: usize) -> Result<bool> {
    let (i, j) = other_two(k);
    let sk = m.s(k)?;
    let (qi, qj, qk) = (m.q(i), m.q(j), m.q(k));
    let lhs = (qi + qj - qk).square();
    let rhs = (qi * qj).scale(4) * (Scalar::one(sk.field()) - sk);
    Ok(lhs == rhs)
}

/// Cross law at the third vertex.
pub fn cross_law_holds(m: &TriangleMeasures) -> Result<bool> {
    cross_law_holds_at(m, 3)
}

/// `(s1 + s2 + s3)^2 = 2(s1^2 + s2^2 + s3^2) + 4 s1 s2 s3`.
pub fn triple_spread_holds(s1: &Scalar, s2: &Scalar, s3: &Scalar) -> bool {
    let lhs = (s1 + s2 + s3).square();
    let rhs = (s1.square() + s2.square() + s3.square()).scale(2) + (s1 * s2 * s3).scale(4);
    lhs == rhs
}

/// Quadrea from the quadrances of `t`.
pub fn quadrea(colour: Colour, t: &Triangle) -> Scalar {
    let q = [1, 2, 3].map(|i| {
        let (j, k) = other_two(i);
        quadrance_unchecked(colour, t.vertex(j), t.vertex(k))
    });
    let a = quadrea_of(&q[0], &q[1], &q[2]);
    debug_assert_eq!(a, quadrea_by_brackets(colour, t));
    a
}

/// Quadrea from the signed area: `4 [x1y2]^2` for blue, its negative for red and green.
pub fn quadrea_by_brackets(colour: Colour, t: &Triangle) -> Scalar {
    let a = brackets(t).x1y2.square().scale(4);
    match colour {
        Colour::Blue => a,
        Colour::Red | Colour::Green => -a,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::Point;
    use crate::scalar::FieldSpec;

    const Q: FieldSpec = FieldSpec::RATIONAL;

    fn qs(s: &str) -> Scalar {
        Scalar::parse(s, Q).unwrap()
    }

    fn ints(v: [i64; 3]) -> [Scalar; 3] {
        v.map(|n| Scalar::from_i64(n, Q))
    }

    fn worked() -> Triangle {
        Triangle::from_i64([(0, 0), (6, 1), (2, 3)], Q).unwrap()
    }

    #[test]
    fn worked_triangle_measures() {
        let t = worked();
        let b = measures(Colour::Blue, &t);
        assert_eq!(b.quadrances, ints([20, 13, 37]));
        assert_eq!(
            b.spreads,
            [Some(qs("256/481")), Some(qs("64/185")), Some(qs("64/65"))]
        );
        assert_eq!(b.quadrea, qs("1024"));
        let r = measures(Colour::Red, &t);
        assert_eq!(r.quadrances, ints([12, -5, 35]));
        assert_eq!(r.quadrea, qs("-1024"));
        let g = measures(Colour::Green, &t);
        assert_eq!(g.quadrances, ints([-16, 12, 12]));
        assert_eq!(g.quadrea, qs("-1024"));
    }

    #[test]
    fn triple_quad() {
        let [a, b, c] = ints([2, 8, 2]);
        assert!(triple_quad_holds(&a, &b, &c));
        let [a, b, c] = ints([20, 13, 37]);
        assert!(!triple_quad_holds(&a, &b, &c));
        let [a, b, c] = ints([0, 5, 5]);
        assert!(triple_quad_holds(&a, &b, &c));
    }

    #[test]
    fn pythagoras() {
        let [a, b, c] = ints([1, 1, 2]);
        assert!(pythagoras_holds(&a, &b, &c));
        let [a, b, c] = ints([-4, 1, -3]);
        assert!(pythagoras_holds(&a, &b, &c));
        let [a, b, c] = ints([20, 13, 37]);
        assert!(!pythagoras_holds(&a, &b, &c));
    }

    #[test]
    fn spread_and_cross_laws() {
        for colour in Colour::ALL {
            let m = measures(colour, &worked());
            assert!(m.is_non_null());
            assert!(spread_law_holds(&m).unwrap());
            for k in 1..=3 {
                assert!(cross_law_holds_at(&m, k).unwrap());
            }
            let [s1, s2, s3] = m.spreads.clone().map(Option::unwrap);
            assert!(triple_spread_holds(&s1, &s2, &s3));
        }
        let b = measures(Colour::Blue, &worked());
        assert_eq!(
            (b.q(1) + b.q(2) - b.q(3)).square(),
            (b.q(1) * b.q(2)).scale(4) * (Scalar::one(Q) - b.s(3).unwrap())
        );
    }

    #[test]
    fn null_vertex_gives_undefined_spread() {
        // side A1A2 has slope 1, red null
        let t = Triangle::from_i64([(0, 0), (1, 1), (3, 0)], Q).unwrap();
        let m = measures(Colour::Red, &t);
        assert!(m.spreads[0].is_none() && m.spreads[1].is_none());
        assert!(m.spreads[2].is_some());
        assert_eq!(
            spread_law_holds(&m),
            Err(Error::UndefinedSpread { vertex: 1 })
        );
        assert_eq!(
            cross_law_holds_at(&m, 2),
            Err(Error::UndefinedSpread { vertex: 2 })
        );
        assert!(cross_law_holds(&m).unwrap());
    }

    #[test]
    fn triple_spread_special_cases() {
        let one = Scalar::one(Q);
        for s in ["1/3", "-7/2", "0", "5"] {
            let s = qs(s);
            assert!(triple_spread_holds(&one, &s, &(&one - &s)));
        }
        let z = Scalar::zero(Q);
        assert!(triple_spread_holds(&z, &z, &z));
    }

    #[test]
    fn quadreas() {
        let t = worked();
        assert_eq!(quadrea(Colour::Blue, &t), qs("1024"));
        assert_eq!(quadrea(Colour::Red, &t), qs("-1024"));
        assert_eq!(quadrea(Colour::Green, &t), qs("-1024"));
        let f = FieldSpec::prime(11).unwrap();
        let t = Triangle::new(
            Point::from_i64(3, 9, f),
            Point::from_i64(7, 2, f),
            Point::from_i64(10, 6, f),
        )
        .unwrap();
        for c in Colour::ALL {
            assert_eq!(quadrea(c, &t), quadrea_by_brackets(c, &t));
            assert!(!quadrea(c, &t).is_zero());
        }
    }
}
