//! Set expressions: `[a,b]`, `{a}`, `u(..)`, `d(c,r)`, `m(..)`, `f(..)`,
//! exact scalars, `+`, `-`, `*` and parentheses.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := literal | scalar | '(' expr ')' | '-' factor
//! ```
//!
//! Scalars are `p/q` or decimals and convert to rationals exactly. A product
//! with a scalar on either side is scaling; `-e` is `(-1)e`. An expression
//! made of scalars alone evaluates in the real model.

use std::fmt;

use qalg::models::{FuncTuple, Interval, IntervalUnion, Matrix2, MatrixSet, RealDisk};
use qalg::{Elem, QaError, Rational, Scalar, Tag};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExprError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("type error at byte {offset}: cannot combine {left} with {right}")]
    Type { offset: usize, left: String, right: String },
    #[error(transparent)]
    Eval(#[from] QaError),
}

fn syntax<T>(offset: usize, message: impl Into<String>) -> Result<T, ExprError> {
    Err(ExprError::Syntax { offset, message: message.into() })
}

/// Static type of a subexpression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ty {
    Scalar,
    Model(Tag),
    /// Tuple length and value type.
    Func(usize, Box<Ty>),
}

impl fmt::Display for Ty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ty::Scalar => f.write_str("real"),
            Ty::Model(t) => write!(f, "{t}"),
            Ty::Func(n, v) => write!(f, "func({n} x {v})"),
        }
    }
}

/// Interval leaves lift to unions when the two meet.
fn unify(a: &Ty, b: &Ty) -> Option<Ty> {
    match (a, b) {
        _ if a == b => Some(a.clone()),
        (Ty::Model(Tag::Interval), Ty::Model(Tag::Union)) | (Ty::Model(Tag::Union), Ty::Model(Tag::Interval)) => {
            Some(Ty::Model(Tag::Union))
        }
        (Ty::Func(n, x), Ty::Func(m, y)) if n == m => Some(Ty::Func(*n, Box::new(unify(x, y)?))),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Kind {
    Scalar(Rational),
    /// Interval, point, disk or matrix-set literal.
    Leaf(Elem<Rational>),
    Union(Vec<Expr>),
    Func(Vec<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// Scalar expression times an element.
    Scale(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Expr {
    pub kind: Kind,
    /// Byte offset of the node in the source text.
    pub at: usize,
    pub ty: Ty,
}

impl Expr {
    /// Compact tree form, e.g. `scale(2, add(interval, interval))`.
    pub fn shape(&self) -> String {
        let list = |xs: &[Expr]| xs.iter().map(Expr::shape).collect::<Vec<_>>().join(", ");
        match &self.kind {
            Kind::Scalar(v) => v.to_string(),
            Kind::Leaf(e) => e.tag().to_string(),
            Kind::Union(xs) => format!("union({})", list(xs)),
            Kind::Func(xs) => format!("func({})", list(xs)),
            Kind::Add(a, b) => format!("add({}, {})", a.shape(), b.shape()),
            Kind::Sub(a, b) => format!("sub({}, {})", a.shape(), b.shape()),
            Kind::Mul(a, b) => format!("mul({}, {})", a.shape(), b.shape()),
            Kind::Scale(a, b) => format!("scale({}, {})", a.shape(), b.shape()),
            Kind::Neg(a) => format!("neg({})", a.shape()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Open(char),
    Close(char),
    Comma,
    Plus,
    Minus,
    Star,
    Name(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(v) => write!(f, "number {v}"),
            Tok::Open(c) | Tok::Close(c) | Tok::Name(c) => write!(f, "'{c}'"),
            Tok::Comma => f.write_str("','"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' | b'.' => {
                let number = |i: &mut usize| {
                    while *i < bytes.len() && (bytes[*i].is_ascii_digit() || bytes[*i] == b'.') {
                        *i += 1;
                    }
                };
                number(&mut i);
                if i < bytes.len() && bytes[i] == b'/' {
                    i += 1;
                    number(&mut i);
                }
                match Rational::parse_literal(&text[start..i]) {
                    Some(v) => Tok::Num(v),
                    None => return syntax(start, format!("invalid number '{}'", &text[start..i])),
                }
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                match &text[start..i] {
                    name @ ("u" | "d" | "m" | "f") => Tok::Name(name.chars().next().expect("one letter")),
                    name => return syntax(start, format!("unknown constructor '{name}'")),
                }
            }
            _ => {
                let ch = text[i..].chars().next().expect("in bounds");
                i += ch.len_utf8();
                match ch {
                    '(' | '[' | '{' => Tok::Open(ch),
                    ')' | ']' | '}' => Tok::Close(ch),
                    ',' => Tok::Comma,
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    _ => return syntax(start, format!("unexpected character '{ch}'")),
                }
            }
        };
        out.push((tok, start));
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn at(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ExprError> {
        let (got, at) = self.bump();
        if got == want {
            Ok(())
        } else {
            syntax(at, format!("expected {want}, found {got}"))
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            let at = self.at();
            let sub = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            let ty = binary_ty(&lhs, &rhs, at)?;
            let (l, r) = (Box::new(lhs), Box::new(rhs));
            lhs = Expr { kind: if sub { Kind::Sub(l, r) } else { Kind::Add(l, r) }, at, ty };
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            let at = self.at();
            self.bump();
            let rhs = self.factor()?;
            lhs = match (&lhs.ty, &rhs.ty) {
                (Ty::Scalar, Ty::Scalar) => Expr { ty: Ty::Scalar, kind: Kind::Mul(Box::new(lhs), Box::new(rhs)), at },
                (Ty::Scalar, t) => Expr { ty: t.clone(), kind: Kind::Scale(Box::new(lhs), Box::new(rhs)), at },
                (t, Ty::Scalar) => Expr { ty: t.clone(), kind: Kind::Scale(Box::new(rhs), Box::new(lhs)), at },
                _ => {
                    let ty = binary_ty(&lhs, &rhs, at)?;
                    Expr { kind: Kind::Mul(Box::new(lhs), Box::new(rhs)), at, ty }
                }
            };
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        let (tok, at) = self.bump();
        match tok {
            Tok::Minus => {
                let inner = self.factor()?;
                Ok(Expr { ty: inner.ty.clone(), kind: Kind::Neg(Box::new(inner)), at })
            }
            Tok::Open('(') => {
                let inner = self.expr()?;
                self.expect(Tok::Close(')'))?;
                Ok(inner)
            }
            Tok::Num(v) => Ok(Expr { kind: Kind::Scalar(v), at, ty: Ty::Scalar }),
            Tok::Open('[') => {
                let lo = self.signed()?;
                self.expect(Tok::Comma)?;
                let hi = self.signed()?;
                self.expect(Tok::Close(']'))?;
                leaf(Interval::new(lo, hi).map(Elem::Interval), at)
            }
            Tok::Open('{') => {
                let v = self.signed()?;
                self.expect(Tok::Close('}'))?;
                leaf(Ok(Elem::Interval(Interval::point(v))), at)
            }
            Tok::Name('d') => {
                self.expect(Tok::Open('('))?;
                let c = self.signed()?;
                self.expect(Tok::Comma)?;
                let r = self.signed()?;
                self.expect(Tok::Close(')'))?;
                leaf(RealDisk::new(c, r).map(Elem::Disk), at)
            }
            Tok::Name('m') => {
                self.expect(Tok::Open('('))?;
                let mut members = vec![self.matrix()?];
                while *self.peek() == Tok::Comma {
                    self.bump();
                    members.push(self.matrix()?);
                }
                self.expect(Tok::Close(')'))?;
                leaf(MatrixSet::new(members).map(Elem::MatrixSet), at)
            }
            Tok::Name('u') => {
                let args = self.args()?;
                let mut ty = Ty::Model(Tag::Union);
                for a in &args {
                    ty = unify(&ty, &a.ty)
                        .filter(|t| *t == Ty::Model(Tag::Union))
                        .ok_or_else(|| type_error(a.at, &Ty::Model(Tag::Union), &a.ty))?;
                }
                Ok(Expr { kind: Kind::Union(args), at, ty })
            }
            Tok::Name('f') => {
                let args = self.args()?;
                let mut ty = args[0].ty.clone();
                for a in &args[1..] {
                    ty = unify(&ty, &a.ty).ok_or_else(|| type_error(a.at, &ty, &a.ty))?;
                }
                Ok(Expr { ty: Ty::Func(args.len(), Box::new(ty)), kind: Kind::Func(args), at })
            }
            other => syntax(at, format!("unexpected {other}")),
        }
    }

    /// `'(' expr (',' expr)* ')'`
    fn args(&mut self) -> Result<Vec<Expr>, ExprError> {
        self.expect(Tok::Open('('))?;
        let mut out = vec![self.expr()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            out.push(self.expr()?);
        }
        self.expect(Tok::Close(')'))?;
        Ok(out)
    }

    fn signed(&mut self) -> Result<Rational, ExprError> {
        let (tok, at) = self.bump();
        match tok {
            Tok::Num(v) => Ok(v),
            Tok::Plus | Tok::Minus => match self.bump() {
                (Tok::Num(v), _) if tok == Tok::Minus => Ok(-v),
                (Tok::Num(v), _) => Ok(v),
                (other, at) => syntax(at, format!("expected number, found {other}")),
            },
            other => syntax(at, format!("expected number, found {other}")),
        }
    }

    /// `[[a,b],[c,d]]`
    fn matrix(&mut self) -> Result<Matrix2<Rational>, ExprError> {
        let mut rows = Vec::with_capacity(2);
        self.expect(Tok::Open('['))?;
        for i in 0..2 {
            if i > 0 {
                self.expect(Tok::Comma)?;
            }
            self.expect(Tok::Open('['))?;
            let a = self.signed()?;
            self.expect(Tok::Comma)?;
            let b = self.signed()?;
            self.expect(Tok::Close(']'))?;
            rows.push((a, b));
        }
        self.expect(Tok::Close(']'))?;
        let [(a, b), (c, d)]: [_; 2] = rows.try_into().expect("two rows");
        Ok(Matrix2::new(a, b, c, d))
    }
}

fn leaf(e: Result<Elem<Rational>, QaError>, at: usize) -> Result<Expr, ExprError> {
    match e {
        Ok(e) => Ok(Expr { ty: Ty::Model(e.tag()), kind: Kind::Leaf(e), at }),
        Err(err) => syntax(at, err.to_string()),
    }
}

fn type_error(at: usize, left: &Ty, right: &Ty) -> ExprError {
    ExprError::Type { offset: at, left: left.to_string(), right: right.to_string() }
}

fn binary_ty(l: &Expr, r: &Expr, at: usize) -> Result<Ty, ExprError> {
    unify(&l.ty, &r.ty).ok_or_else(|| type_error(at, &l.ty, &r.ty))
}

/// Parses and type-checks `text`.
pub fn parse_expr(text: &str) -> Result<Expr, ExprError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr()?;
    match p.bump() {
        (Tok::End, _) => Ok(e),
        (other, at) => syntax(at, format!("unexpected {other} after expression")),
    }
}

enum Val {
    Scalar(Rational),
    Elem(Elem<Rational>),
}

fn has_union(e: &Elem<Rational>) -> bool {
    match e {
        Elem::Union(_) => true,
        Elem::Func(f) => f.values.iter().any(has_union),
        _ => false,
    }
}

fn to_union(e: Elem<Rational>) -> Elem<Rational> {
    match e {
        Elem::Interval(i) => Elem::Union(IntervalUnion::from(i)),
        Elem::Func(f) => Elem::Func(FuncTuple::new(f.values.into_iter().map(to_union).collect())),
        other => other,
    }
}

/// Brings two elements to a common model.
pub fn lift(a: Elem<Rational>, b: Elem<Rational>) -> (Elem<Rational>, Elem<Rational>) {
    if has_union(&a) != has_union(&b) {
        (to_union(a), to_union(b))
    } else {
        (a, b)
    }
}

fn as_elem(v: Val) -> Elem<Rational> {
    match v {
        Val::Scalar(s) => Elem::Real(s),
        Val::Elem(e) => e,
    }
}

fn scalar(v: Val) -> Rational {
    match v {
        Val::Scalar(s) | Val::Elem(Elem::Real(s)) => s,
        Val::Elem(_) => unreachable!("type-checked scalar"),
    }
}

fn eval(e: &Expr) -> Result<Val, ExprError> {
    if e.ty == Ty::Scalar {
        return Ok(Val::Scalar(eval_scalar(e)?));
    }
    let pair = |a: &Expr, b: &Expr| -> Result<_, ExprError> { Ok(lift(as_elem(eval(a)?), as_elem(eval(b)?))) };
    Ok(Val::Elem(match &e.kind {
        Kind::Leaf(x) => x.clone(),
        Kind::Union(args) => {
            let mut parts = Vec::new();
            for a in args {
                match as_elem(eval(a)?) {
                    Elem::Interval(i) => parts.push(i),
                    Elem::Union(u) => parts.extend(u.into_parts()),
                    _ => unreachable!("type-checked union member"),
                }
            }
            Elem::Union(IntervalUnion::normalize(parts)?)
        }
        Kind::Func(args) => {
            let values = args.iter().map(|a| eval(a).map(as_elem)).collect::<Result<Vec<_>, _>>()?;
            let values = if values.iter().any(has_union) { values.into_iter().map(to_union).collect() } else { values };
            Elem::func(values)?
        }
        Kind::Add(a, b) => {
            let (x, y) = pair(a, b)?;
            x.add(&y)?
        }
        Kind::Sub(a, b) => {
            let (x, y) = pair(a, b)?;
            x.sub(&y)?
        }
        Kind::Mul(a, b) => {
            let (x, y) = pair(a, b)?;
            x.mul(&y)?
        }
        Kind::Scale(k, x) => as_elem(eval(x)?).scale(&eval_scalar(k)?),
        Kind::Neg(x) => as_elem(eval(x)?).neg(),
        Kind::Scalar(_) => unreachable!("scalar nodes have scalar type"),
    }))
}

fn eval_scalar(e: &Expr) -> Result<Rational, ExprError> {
    let two = |a: &Expr, b: &Expr| -> Result<_, ExprError> { Ok((scalar(eval(a)?), scalar(eval(b)?))) };
    Ok(match &e.kind {
        Kind::Scalar(v) => v.clone(),
        Kind::Add(a, b) => {
            let (x, y) = two(a, b)?;
            x + y
        }
        Kind::Sub(a, b) => {
            let (x, y) = two(a, b)?;
            x - y
        }
        Kind::Mul(a, b) => {
            let (x, y) = two(a, b)?;
            x * y
        }
        Kind::Neg(a) => -scalar(eval(a)?),
        _ => unreachable!("non-scalar node typed as scalar"),
    })
}

/// Canonical value of a checked expression.
pub fn eval_expr(e: &Expr) -> Result<Elem<Rational>, ExprError> {
    eval(e).map(as_elem)
}

/// `parse_expr` then `eval_expr`.
pub fn evaluate(text: &str) -> Result<Elem<Rational>, ExprError> {
    eval_expr(&parse_expr(text)?)
}
