use chromogeometry::affine::{antisymmetrize, brackets, join, lies_on, meet};
use chromogeometry::centers::{
    center_set, circumcenter, circumcenter_by_meet, nine_point_center, nine_point_center_by_meet,
    orthocenter, orthocenter_by_meet,
};
use chromogeometry::circle::{circumcircle, nine_point_circle, on_circle};
use chromogeometry::laws::measures;
use chromogeometry::metric::{quadrance, spread, spread_by_vectors};
use chromogeometry::verify::verify_triangle;
use chromogeometry::{CheckFamily, Colour, FieldSpec, Line, Point, Scalar, Triangle, Verdict};
use proptest::prelude::*;

const Q: FieldSpec = FieldSpec::RATIONAL;

fn rational() -> impl Strategy<Value = Scalar> {
    (1i64..=20).prop_flat_map(|d| {
        (-50 * d..=50 * d).prop_map(move |n| Scalar::from_ratio(n, d, Q).unwrap())
    })
}

fn point() -> impl Strategy<Value = Point> {
    (rational(), rational()).prop_map(|(x, y)| Point::new(x, y).unwrap())
}

fn triangle() -> impl Strategy<Value = Triangle> {
    (point(), point(), point())
        .prop_filter_map("collinear", |(a, b, c)| Triangle::new(a, b, c).ok())
}

fn prime() -> impl Strategy<Value = FieldSpec> {
    prop::sample::select(vec![5u64, 7, 11, 13, 101, 65_521, 4_294_967_291])
        .prop_map(|p| FieldSpec::prime(p).unwrap())
}

fn residue(field: FieldSpec) -> impl Strategy<Value = Scalar> {
    any::<i64>().prop_map(move |n| Scalar::from_i64(n, field))
}

fn fp_triangle() -> impl Strategy<Value = Triangle> {
    prop::sample::select(vec![5u64, 7, 11, 13, 31])
        .prop_flat_map(|p| prop::array::uniform6(0..p as i64).prop_map(move |v| (p, v)))
        .prop_filter_map("collinear", |(p, v)| {
            let f = FieldSpec::prime(p).unwrap();
            Triangle::from_i64([(v[0], v[1]), (v[2], v[3]), (v[4], v[5])], f).ok()
        })
}

fn det3(m: [[Scalar; 3]; 3]) -> Scalar {
    let minor = |r: usize, c: usize| {
        let rows: Vec<usize> = (0..3).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..3).filter(|&j| j != c).collect();
        &m[rows[0]][cols[0]] * &m[rows[1]][cols[1]] - &m[rows[0]][cols[1]] * &m[rows[1]][cols[0]]
    };
    &m[0][0] * &minor(0, 0) - &m[0][1] * &minor(0, 1) + &m[0][2] * &minor(0, 2)
}

/// Circle of `colour` through three points from the general conic
/// `form(x, y) + D x + E y + F = 0`, solved by Cramer's rule.
fn circle_by_linear_solve(colour: Colour, t: &Triangle) -> (Point, Scalar) {
    let f = t.field();
    let one = Scalar::one(f);
    let rows: Vec<([Scalar; 3], Scalar)> = t
        .points()
        .iter()
        .map(|p| {
            let (x, y) = (p.x().clone(), p.y().clone());
            let form = match colour {
                Colour::Blue => x.square() + y.square(),
                Colour::Red => x.square() - y.square(),
                Colour::Green => (&x * &y).scale(2),
            };
            ([x, y, one.clone()], -form)
        })
        .collect();
    let a: [[Scalar; 3]; 3] = [0, 1, 2].map(|i| rows[i].0.clone());
    let det = det3(a.clone());
    let solve = |col: usize| {
        let mut m = a.clone();
        for (i, row) in m.iter_mut().enumerate() {
            row[col] = rows[i].1.clone();
        }
        det3(m).try_div(&det).unwrap()
    };
    let (d, e, ff) = (solve(0), solve(1), solve(2));
    let center = match colour {
        Colour::Blue => Point::new((-&d).halve(), (-&e).halve()),
        Colour::Red => Point::new((-&d).halve(), e.halve()),
        Colour::Green => Point::new((-&e).halve(), (-&d).halve()),
    }
    .unwrap();
    let k = quadrance(
        colour,
        &center,
        &Point::new(Scalar::zero(f), Scalar::zero(f)).unwrap(),
    )
    .unwrap()
        - ff;
    (center, k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        prop_assert_eq!(a.halve().scale(2), a.clone());
    }

    #[test]
    fn prime_field_axioms((a, b, c) in prime().prop_flat_map(|f| (residue(f), residue(f), residue(f)))) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a + &(-&a)).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        } else {
            prop_assert!(a.inv().is_err());
        }
        prop_assert_eq!(a.halve().scale(2), a.clone());
    }

    #[test]
    fn scalar_text_round_trips(a in rational(), r in prime().prop_flat_map(residue)) {
        prop_assert_eq!(Scalar::parse(&a.to_string(), Q).unwrap(), a);
        prop_assert_eq!(Scalar::parse(&r.to_string(), r.field()).unwrap(), r);
    }

    #[test]
    fn join_meet_duality(t in triangle()) {
        let [p, q, r] = t.points();
        let pq = join(p, q).unwrap();
        let pr = join(p, r).unwrap();
        prop_assert!(lies_on(p, &pq).unwrap() && lies_on(q, &pq).unwrap());
        prop_assert!(!lies_on(r, &pq).unwrap());
        prop_assert_eq!(&meet(&pq, &pr).unwrap(), p);
        prop_assert_eq!(join(q, p).unwrap(), pq);
    }

    #[test]
    fn line_canonical_form_is_projective(a in rational(), b in rational(), c in rational(), k in rational()) {
        prop_assume!(!(a.is_zero() && b.is_zero()) && !k.is_zero());
        let l = Line::new(a.clone(), b.clone(), c.clone()).unwrap();
        let scaled = Line::new(&a * &k, &b * &k, &c * &k).unwrap();
        prop_assert_eq!(&scaled, &l);
        let again = Line::new(l.a().clone(), l.b().clone(), l.c().clone()).unwrap();
        prop_assert_eq!(again, l);
    }

    #[test]
    fn brackets_alternate_under_relabeling(t in triangle()) {
        let [a, b, c] = t.points().clone();
        let swapped = Triangle::new(b.clone(), a.clone(), c.clone()).unwrap();
        let rotated = Triangle::new(b, c, a).unwrap();
        let (bt, bs, br) = (brackets(&t), brackets(&swapped), brackets(&rotated));
        prop_assert_eq!(&bs.x1y2, &(-&bt.x1y2));
        prop_assert_eq!(&br.x1y2, &bt.x1y2);
        prop_assert_eq!(&bs.x1x1y2, &(-&bt.x1x1y2));
        prop_assert_eq!(&br.x1x2y1, &bt.x1x2y1);
        // a symmetric monomial vanishes
        let sym = antisymmetrize(&t, |p, q, r| p.x() * q.x() * r.x());
        prop_assert!(sym.is_zero());
    }

    #[test]
    fn coloured_quadrance_and_spread_identities(t in triangle()) {
        let m = Colour::ALL.map(|c| measures(c, &t));
        for i in 0..3 {
            let (qb, qr, qg) = (&m[0].quadrances[i], &m[1].quadrances[i], &m[2].quadrances[i]);
            prop_assert_eq!(qb.square(), qr.square() + qg.square());
            if let [Some(sb), Some(sr), Some(sg)] = [&m[0].spreads[i], &m[1].spreads[i], &m[2].spreads[i]] {
                let total = sb.inv().unwrap() + sr.inv().unwrap() + sg.inv().unwrap();
                prop_assert_eq!(total, Scalar::from_i64(2, Q));
            }
        }
    }

    #[test]
    fn spread_definitions_agree(t in triangle(), colour in prop::sample::select(Colour::ALL.to_vec())) {
        let [a1, a2, a3] = t.points();
        let by_lines = spread(colour, &t.line(3), &t.line(2));
        let by_vectors = spread_by_vectors(colour, &a2.minus(a1), &a3.minus(a1));
        match (by_lines, by_vectors) {
            (Ok(x), Ok(y)) => prop_assert_eq!(x, y),
            (Err(_), Err(_)) => {}
            (x, y) => prop_assert!(false, "definitions disagree on nullity: {:?} {:?}", x, y),
        }
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn all_checks_hold_on_rational_triangles(t in triangle()) {
        let rec = verify_triangle(&t, &CheckFamily::ALL, true);
        let failed: Vec<&str> = rec.failures().map(|(n, _)| n).collect();
        prop_assert!(failed.is_empty(), "{:?} failed on {}", failed, t);
    }

    #[test]
    fn all_checks_hold_on_prime_field_triangles(t in fp_triangle()) {
        let rec = verify_triangle(&t, &CheckFamily::ALL, true);
        prop_assert_eq!(rec.count(Verdict::Fail), 0, "failure on {}", t);
    }

    #[test]
    fn closed_forms_match_meets(t in triangle()) {
        for c in Colour::ALL {
            prop_assert_eq!(orthocenter(c, &t), orthocenter_by_meet(c, &t).unwrap());
            prop_assert_eq!(circumcenter(c, &t), circumcenter_by_meet(c, &t).unwrap());
            prop_assert_eq!(nine_point_center(c, &t), nine_point_center_by_meet(c, &t).unwrap());
        }
        prop_assert!(center_set(&t).is_ok());
    }

    #[test]
    fn circumcircle_is_the_unique_conic_through_the_vertices(t in triangle()) {
        for c in Colour::ALL {
            let circle = circumcircle(c, &t);
            let (center, k) = circle_by_linear_solve(c, &t);
            prop_assert_eq!(&circle.center, &center);
            prop_assert_eq!(&circle.quadrance, &k);
            let np = nine_point_circle(c, &t);
            prop_assert_eq!(np.quadrance.scale(4), circle.quadrance);
        }
    }

    #[test]
    fn circles_are_symmetric_about_their_centers(t in triangle()) {
        for c in Colour::ALL {
            let circle = circumcircle(c, &t);
            for v in t.points() {
                let mirrored = circle.center.times(&Scalar::from_i64(2, Q)).minus(v);
                prop_assert!(on_circle(&mirrored, &circle).unwrap());
            }
        }
    }

    #[test]
    fn centers_commute_with_translation(t in triangle(), d in point()) {
        let moved = t.map(|p| p.plus(&d)).unwrap();
        let (s, sm) = (center_set(&t).unwrap(), center_set(&moved).unwrap());
        prop_assert_eq!(&sm.centroid, &s.centroid.plus(&d));
        for c in Colour::ALL {
            let (a, b) = (s.get(c), sm.get(c));
            prop_assert_eq!(&b.orthocenter, &a.orthocenter.plus(&d));
            prop_assert_eq!(&b.circumcenter, &a.circumcenter.plus(&d));
            prop_assert_eq!(&b.nine_point_center, &a.nine_point_center.plus(&d));
            prop_assert_eq!(circumcircle(c, &moved).quadrance, circumcircle(c, &t).quadrance);
        }
    }
}
