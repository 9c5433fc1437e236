use qalg::gen::{rng_for, GenConfig};
use qalg::models::{Disks, Functions, Interval, IntervalUnion, Intervals, MatrixSets, Unions};
use qalg::{Elem, Rational, Scalar, Tag};
use qalg_cli::expr::{parse_expr, Kind, Ty};
use qalg_cli::{evaluate, ExprError};
use qalg_conformance::Instance;

fn q(n: i64, d: i64) -> Rational {
    Rational::ratio(n, d)
}

fn iv(lo: i64, hi: i64) -> Elem<Rational> {
    Elem::Interval(Interval::new(q(lo, 1), q(hi, 1)).unwrap())
}

#[test]
fn parse_shapes() {
    assert_eq!(parse_expr("[1,2]+[3,4]").unwrap().shape(), "add(interval, interval)");
    assert_eq!(parse_expr("2*([0,1]+{3})").unwrap().shape(), "scale(2, add(interval, interval))");
    assert_eq!(parse_expr("[0,1]*1/2").unwrap().shape(), "scale(1/2, interval)");
    assert_eq!(parse_expr("-d(0,1)").unwrap().shape(), "neg(disk)");
    assert_eq!(parse_expr("[0,1]-{1}*[2,3]").unwrap().shape(), "sub(interval, mul(interval, interval))");
}

#[test]
fn operators_are_left_associative() {
    let e = parse_expr("[0,1]+[0,2]+[0,3]").unwrap();
    match e.kind {
        Kind::Add(l, _) => assert!(matches!(l.kind, Kind::Add(..))),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn mixed_tags_are_type_errors() {
    let err = parse_expr("[1,2]+d(0,1)").unwrap_err();
    assert_eq!(err, ExprError::Type { offset: 5, left: "interval".into(), right: "disk".into() });
    let msg = err.to_string();
    assert!(msg.contains("interval") && msg.contains("disk"), "{msg}");
    assert!(matches!(parse_expr("1+[0,1]"), Err(ExprError::Type { .. })));
    assert!(matches!(parse_expr("u([0,1],d(0,1))"), Err(ExprError::Type { .. })));
    assert!(matches!(parse_expr("f([0,1],[0,1])+f([0,1])"), Err(ExprError::Type { .. })));
}

#[test]
fn syntax_errors_carry_byte_offsets() {
    let cases = [("[1,2", 4), ("[1,2]+", 6), ("[1,2]]", 5), ("x", 0), ("[1;2]", 2), ("1/0", 0), ("  {1", 4)];
    for (text, offset) in cases {
        match parse_expr(text) {
            Err(ExprError::Syntax { offset: got, .. }) => assert_eq!(got, offset, "{text}"),
            other => panic!("{text}: {other:?}"),
        }
    }
    assert!(matches!(parse_expr("[2,1]"), Err(ExprError::Syntax { offset: 0, .. })));
    assert!(matches!(parse_expr("d(0,-1)"), Err(ExprError::Syntax { offset: 0, .. })));
}

#[test]
fn evaluation_examples() {
    assert_eq!(evaluate("[-2,2]*[-4,4]").unwrap(), iv(-8, 8));
    assert_eq!(evaluate("0*[5,7]").unwrap(), iv(0, 0));
    assert_eq!(
        evaluate("u([0,1],[1,2])").unwrap(),
        Elem::Union(IntervalUnion::from(Interval::new(q(0, 1), q(2, 1)).unwrap()))
    );
    assert_eq!(evaluate("[1,2]+[3,4]").unwrap(), iv(4, 6));
    assert_eq!(evaluate("2*([0,1]+{3})").unwrap(), iv(6, 8));
    assert_eq!(evaluate("-[1,2]").unwrap(), iv(-2, -1));
    assert_eq!(evaluate("[0,1]-[0,1]").unwrap(), iv(-1, 1));
}

#[test]
fn decimal_literals_are_exact() {
    let x = evaluate("[0.1,0.25]").unwrap();
    assert_eq!(x, Elem::Interval(Interval::new(q(1, 10), q(1, 4)).unwrap()));
    assert_eq!(evaluate("{-1.5/2}").unwrap(), Elem::Interval(Interval::point(q(-3, 4))));
}

#[test]
fn intervals_lift_to_unions() {
    let x = evaluate("[0,1]+u({0},{10})").unwrap();
    assert_eq!(x.tag(), Tag::Union);
    assert_eq!(x.to_string(), "u([0,1],[10,11])");
    let f = evaluate("f([0,1],u({2},{5}))").unwrap();
    assert_eq!(f.to_string(), "f(u([0,1]),u({2},{5}))");
    assert_eq!(parse_expr("[0,1]*u({1})").unwrap().ty, Ty::Model(Tag::Union));
}

#[test]
fn constant_expressions_are_reals() {
    assert_eq!(evaluate("(1/2+1)*2").unwrap(), Elem::Real(q(3, 1)));
    assert_eq!(evaluate("-3").unwrap(), Elem::Real(q(-3, 1)));
}

#[test]
fn matrix_and_disk_literals() {
    assert_eq!(evaluate("m([[1,0],[0,1]],[[1,0],[0,1]])").unwrap().to_string(), "m([[1,0],[0,1]])");
    assert_eq!(evaluate("d(1,1)*d(1,1)").unwrap().to_string(), "d(1,3)");
}

fn round_trips<M: Instance<Scalar = Rational>>(m: &M, seed: u64) {
    let mut rng = rng_for(seed);
    let cfg = GenConfig::default();
    for _ in 0..500 {
        let x = m.to_elem(&m.generate(&mut rng, &cfg));
        let text = x.to_string();
        let back = evaluate(&text).unwrap_or_else(|e| panic!("{text}: {e}"));
        assert_eq!(back, x, "{text}");
    }
}

#[test]
fn serialized_elements_round_trip() {
    round_trips(&qalg::models::Reals::new(), 1);
    round_trips(&Intervals::new(), 2);
    round_trips(&Unions::new(), 3);
    round_trips(&Disks::new(), 4);
    round_trips(&MatrixSets::new(), 5);
    round_trips(&Functions::new(Unions::new(), 3), 6);
}
