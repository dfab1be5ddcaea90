//! Closed-form expressions in the spatial variable `x` and the sequence
//! index `n`.
//!
//! Grammar, lowest to highest precedence:
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' unary)?          right associative
//! primary := number | 'x' | 'n' | 'pi' | '(' expr ')'
//!          | func '(' expr ')'             func in sin cos sqrt abs exp log
//!          | ('min' | 'max') '(' expr ',' expr ')'
//! ```
//!
//! Evaluation never produces NaN or infinities: any operation leaving the
//! real line is reported as an [`EvalError`] carrying the node position.

mod lexer;
mod parser;

use std::fmt;

use thiserror::Error;

use crate::scalar::Scalar;

pub use lexer::{tokenize, Token, TokenKind};
pub use parser::parse;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnaryOp {
    Neg,
    Sin,
    Cos,
    Sqrt,
    Abs,
    Exp,
    Log,
}

impl UnaryOp {
    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "sin" => Self::Sin,
            "cos" => Self::Cos,
            "sqrt" => Self::Sqrt,
            "abs" => Self::Abs,
            "exp" => Self::Exp,
            "log" => Self::Log,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Neg => "neg",
            Self::Sin => "sin",
            Self::Cos => "cos",
            Self::Sqrt => "sqrt",
            Self::Abs => "abs",
            Self::Exp => "exp",
            Self::Log => "log",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Min,
    Max,
}

impl BinaryOp {
    fn symbol(self) -> &'static str {
        match self {
            Self::Add => "+",
            Self::Sub => "-",
            Self::Mul => "*",
            Self::Div => "/",
            Self::Pow => "^",
            Self::Min => "min",
            Self::Max => "max",
        }
    }
}

#[derive(Debug, Clone)]
pub enum ExprKind {
    Number(f64),
    VarX,
    VarN,
    Unary(UnaryOp, Box<Expression>),
    Binary(BinaryOp, Box<Expression>, Box<Expression>),
}

/// A parsed expression node. `position` is the character offset of the
/// token that introduced the node and is ignored by equality.
#[derive(Debug, Clone)]
pub struct Expression {
    pub kind: ExprKind,
    pub position: usize,
}

impl PartialEq for Expression {
    fn eq(&self, other: &Self) -> bool {
        match (&self.kind, &other.kind) {
            (ExprKind::Number(a), ExprKind::Number(b)) => a.to_bits() == b.to_bits(),
            (ExprKind::VarX, ExprKind::VarX) | (ExprKind::VarN, ExprKind::VarN) => true,
            (ExprKind::Unary(o1, c1), ExprKind::Unary(o2, c2)) => o1 == o2 && c1 == c2,
            (ExprKind::Binary(o1, l1, r1), ExprKind::Binary(o2, l2, r2)) => {
                o1 == o2 && l1 == l2 && r1 == r2
            }
            _ => false,
        }
    }
}

impl Expression {
    pub fn number(value: f64) -> Self {
        Self::at(ExprKind::Number(value), 0)
    }

    pub fn var_x() -> Self {
        Self::at(ExprKind::VarX, 0)
    }

    pub fn var_n() -> Self {
        Self::at(ExprKind::VarN, 0)
    }

    pub fn unary(op: UnaryOp, child: Expression) -> Self {
        Self::at(ExprKind::Unary(op, Box::new(child)), 0)
    }

    pub fn binary(op: BinaryOp, left: Expression, right: Expression) -> Self {
        Self::at(ExprKind::Binary(op, Box::new(left), Box::new(right)), 0)
    }

    pub(crate) fn at(kind: ExprKind, position: usize) -> Self {
        Self { kind, position }
    }

    /// True when the expression references `n` anywhere.
    pub fn depends_on_n(&self) -> bool {
        match &self.kind {
            ExprKind::VarN => true,
            ExprKind::Number(_) | ExprKind::VarX => false,
            ExprKind::Unary(_, c) => c.depends_on_n(),
            ExprKind::Binary(_, l, r) => l.depends_on_n() || r.depends_on_n(),
        }
    }

    /// Evaluates with `x` and `n` bound.
    pub fn evaluate<T: Scalar>(&self, x: T, n: u32) -> Result<T, EvalError> {
        let v = self.eval_node(x, n)?;
        Ok(v)
    }

    fn eval_node<T: Scalar>(&self, x: T, n: u32) -> Result<T, EvalError> {
        let fail = |kind: DomainKind| EvalError::new(kind, self.position);
        let value = match &self.kind {
            ExprKind::Number(v) => T::from_f64(*v).ok_or_else(|| fail(DomainKind::NonFinite))?,
            ExprKind::VarX => x,
            ExprKind::VarN => T::from_index(n),
            ExprKind::Unary(op, child) => {
                let c = child.eval_node(x, n)?;
                match op {
                    UnaryOp::Neg => -c,
                    UnaryOp::Sin => c.sin(),
                    UnaryOp::Cos => c.cos(),
                    UnaryOp::Abs => c.abs(),
                    UnaryOp::Exp => c.exp(),
                    UnaryOp::Sqrt => {
                        if c < T::zero() {
                            return Err(fail(DomainKind::SqrtOfNegative));
                        }
                        c.sqrt()
                    }
                    UnaryOp::Log => {
                        if c <= T::zero() {
                            return Err(fail(DomainKind::LogOfNonPositive));
                        }
                        c.ln()
                    }
                }
            }
            ExprKind::Binary(op, left, right) => {
                let l = left.eval_node(x, n)?;
                let r = right.eval_node(x, n)?;
                match op {
                    BinaryOp::Add => l + r,
                    BinaryOp::Sub => l - r,
                    BinaryOp::Mul => l * r,
                    BinaryOp::Div => {
                        if r == T::zero() {
                            return Err(fail(DomainKind::DivisionByZero));
                        }
                        l / r
                    }
                    BinaryOp::Pow => {
                        if l < T::zero() && r.fract() != T::zero() {
                            return Err(fail(DomainKind::NegativeBaseFractionalPower));
                        }
                        if l == T::zero() && r < T::zero() {
                            return Err(fail(DomainKind::DivisionByZero));
                        }
                        l.powf(r)
                    }
                    BinaryOp::Min => l.min(r),
                    BinaryOp::Max => l.max(r),
                }
            }
        };
        if value.is_finite() {
            Ok(value)
        } else {
            Err(fail(DomainKind::NonFinite))
        }
    }
}

/// Fully parenthesized rendering that parses back to an equivalent tree.
impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Number(v) => {
                if v.is_sign_negative() {
                    write!(f, "(-{:?})", -v)
                } else {
                    write!(f, "{:?}", v)
                }
            }
            ExprKind::VarX => f.write_str("x"),
            ExprKind::VarN => f.write_str("n"),
            ExprKind::Unary(UnaryOp::Neg, c) => write!(f, "(-{})", c),
            ExprKind::Unary(op, c) => write!(f, "{}({})", op.name(), c),
            ExprKind::Binary(op @ (BinaryOp::Min | BinaryOp::Max), l, r) => {
                write!(f, "{}({}, {})", op.symbol(), l, r)
            }
            ExprKind::Binary(op, l, r) => write!(f, "({} {} {})", l, op.symbol(), r),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    UnexpectedCharacter(char),
    InvalidNumber,
    UnknownIdentifier(String),
    UnexpectedToken { expected: String, found: String },
    UnexpectedEnd { expected: String },
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Empty => f.write_str("empty expression"),
            Self::UnexpectedCharacter(c) => write!(f, "unexpected character '{}'", c),
            Self::InvalidNumber => f.write_str("malformed number"),
            Self::UnknownIdentifier(name) => write!(f, "unknown identifier '{}'", name),
            Self::UnexpectedToken { expected, found } => {
                write!(f, "expected {}, found '{}'", expected, found)
            }
            Self::UnexpectedEnd { expected } => {
                write!(f, "expected {}, found end of input", expected)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at position {position}: {kind}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub fn new(position: usize, kind: ParseErrorKind) -> Self {
        Self { position, kind }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainKind {
    SqrtOfNegative,
    LogOfNonPositive,
    DivisionByZero,
    NegativeBaseFractionalPower,
    NonFinite,
    IndexOutOfRange,
}

impl fmt::Display for DomainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::SqrtOfNegative => "square root of a negative number",
            Self::LogOfNonPositive => "logarithm of a non-positive number",
            Self::DivisionByZero => "division by zero",
            Self::NegativeBaseFractionalPower => "negative base raised to a non-integer power",
            Self::NonFinite => "non-finite intermediate value",
            Self::IndexOutOfRange => "sequence index out of supported range",
        })
    }
}

/// Domain error raised while evaluating. `x` and `n` are filled in by the
/// caller that knows the sampling context.
#[derive(Debug, Clone, PartialEq, Error)]
pub struct EvalError {
    pub kind: DomainKind,
    pub position: Option<usize>,
    pub x: Option<f64>,
    pub n: Option<u32>,
}

impl EvalError {
    pub fn new(kind: DomainKind, position: usize) -> Self {
        Self {
            kind,
            position: Some(position),
            x: None,
            n: None,
        }
    }

    pub fn builtin(kind: DomainKind) -> Self {
        Self {
            kind,
            position: None,
            x: None,
            n: None,
        }
    }

    pub fn at_sample(mut self, x: f64, n: u32) -> Self {
        self.x.get_or_insert(x);
        self.n.get_or_insert(n);
        self
    }
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if let Some(p) = self.position {
            write!(f, " at position {}", p)?;
        }
        if let Some(x) = self.x {
            write!(f, " (x = {}", x)?;
            if let Some(n) = self.n {
                write!(f, ", n = {}", n)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(src: &str, x: f64, n: u32) -> Result<f64, EvalError> {
        parse(src).unwrap().evaluate(x, n)
    }

    #[test]
    fn sqrt_expression_at_origin() {
        assert_eq!(eval("sqrt(x + 1/n)", 0.0, 4).unwrap(), 0.5);
    }

    #[test]
    fn bump_vanishes_at_zero() {
        assert_eq!(eval("x/(1+n*x^2)", 0.0, 7).unwrap(), 0.0);
    }

    #[test]
    fn tent_right_endpoint() {
        // 1 - 1/(2n) is inexact in binary, so the right foot lands one ulp off
        let v = eval("max(0, 1 - 2*n*abs(x - (1 - 1/(2*n))))", 1.0, 5).unwrap();
        assert!(v.abs() < 1e-15);
    }

    #[test]
    fn right_associative_power() {
        assert_eq!(eval("2^3^2", 0.0, 1).unwrap(), 512.0);
        assert_eq!(eval("-2^2", 0.0, 1).unwrap(), -4.0);
        assert_eq!(eval("2^-1", 0.0, 1).unwrap(), 0.5);
        assert_eq!(eval("(-2)^3", 0.0, 1).unwrap(), -8.0);
    }

    #[test]
    fn pi_and_min() {
        assert_eq!(eval("pi", 0.0, 1).unwrap(), std::f64::consts::PI);
        assert_eq!(eval("min(x, n)", 3.0, 2).unwrap(), 2.0);
    }

    #[test]
    fn domain_errors_carry_position() {
        let err = eval("1 + sqrt(x - 2)", 0.0, 1).unwrap_err();
        assert_eq!(err.kind, DomainKind::SqrtOfNegative);
        assert_eq!(err.position, Some(4));

        assert_eq!(
            eval("log(x)", 0.0, 1).unwrap_err().kind,
            DomainKind::LogOfNonPositive
        );
        assert_eq!(
            eval("1/(x-1)", 1.0, 1).unwrap_err().kind,
            DomainKind::DivisionByZero
        );
        assert_eq!(
            eval("(x-1)^0.5", 0.0, 1).unwrap_err().kind,
            DomainKind::NegativeBaseFractionalPower
        );
        assert_eq!(
            eval("exp(x)", 1000.0, 1).unwrap_err().kind,
            DomainKind::NonFinite
        );
        assert_eq!(
            eval("0^(-1)", 0.0, 1).unwrap_err().kind,
            DomainKind::DivisionByZero
        );
    }

    #[test]
    fn evaluates_in_single_precision() {
        let e = parse("sqrt(x + 1/n)").unwrap();
        let v: f32 = e.evaluate(0.0f32, 4).unwrap();
        assert_eq!(v, 0.5f32);
    }

    #[test]
    fn printing_is_fully_parenthesized() {
        let e = parse("-x^2 + max(1, n)/3").unwrap();
        assert_eq!(e.to_string(), "((-(x ^ 2.0)) + (max(1.0, n) / 3.0))");
        assert_eq!(parse(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn negative_literals_print_reparseably() {
        let e = Expression::binary(
            BinaryOp::Pow,
            Expression::number(-2.0),
            Expression::number(2.0),
        );
        let back = parse(&e.to_string()).unwrap();
        assert_eq!(back.evaluate(0.0, 1).unwrap(), 4.0);
    }

    #[test]
    fn dependence_on_index() {
        assert!(parse("x + 1/n").unwrap().depends_on_n());
        assert!(!parse("sin(x)*pi").unwrap().depends_on_n());
    }
}
