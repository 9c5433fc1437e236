use qalg::models::Interval;
use qalg::{Rational, Scalar};
use qalg_cli::enclose;

fn q(n: i64, d: i64) -> Rational {
    Rational::ratio(n, d)
}

fn unit() -> Interval<Rational> {
    Interval::new(q(0, 1), q(1, 1)).unwrap()
}

/// `t^2 - t`
fn quad() -> Vec<Rational> {
    vec![q(0, 1), q(-1, 1), q(1, 1)]
}

#[test]
fn quadratic_depth_zero_and_one() {
    let e0 = enclose(&quad(), &unit(), 0).unwrap();
    assert_eq!(e0.enclosure, Interval::new(q(-1, 1), q(1, 1)).unwrap());
    let e1 = enclose(&quad(), &unit(), 1).unwrap();
    assert_eq!(e1.enclosure, Interval::new(q(-3, 4), q(1, 2)).unwrap());
    for e in [&e0, &e1] {
        assert_eq!(e.sampled, Interval::new(q(-1, 4), q(0, 1)).unwrap());
        assert!(e.is_sound());
    }
    assert!(e1.enclosure.width() < e0.enclosure.width());
}

#[test]
fn widths_shrink_with_depth() {
    let widths: Vec<Rational> = (0..=4).map(|d| enclose(&quad(), &unit(), d).unwrap().enclosure.width()).collect();
    assert!(widths.windows(2).all(|w| w[1] < w[0]), "{widths:?}");
}

#[test]
fn constant_polynomial_is_a_point() {
    let d = Interval::new(q(-3, 1), q(7, 2)).unwrap();
    for depth in 0..3 {
        let e = enclose(&[q(5, 3)], &d, depth).unwrap();
        assert_eq!(e.enclosure, Interval::point(q(5, 3)));
        assert_eq!(e.excess, q(0, 1));
    }
}

#[test]
fn enclosures_contain_samples() {
    let polys = [vec![q(1, 1), q(-3, 1), q(0, 1), q(1, 1)], vec![q(0, 1), q(0, 1), q(-1, 2)], vec![q(2, 1), q(1, 3)]];
    let d = Interval::new(q(-2, 1), q(3, 2)).unwrap();
    for p in &polys {
        let mut prev: Option<Rational> = None;
        for depth in 0..5 {
            let e = enclose(p, &d, depth).unwrap();
            assert!(e.is_sound(), "{p:?} at depth {depth}");
            let w = e.enclosure.width();
            if let Some(pw) = prev {
                assert!(w <= pw);
            }
            prev = Some(w);
        }
    }
}
