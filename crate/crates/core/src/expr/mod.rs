//! A small arithmetic expression language for map definitions.
//!
//! Expressions are real-valued functions of at most two variables,
//! conventionally `w` (the base point) and `x` (the fibre point).
//!
//! ```text
//! expr    := sum
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' unary)?              right associative
//! atom    := number | constant | variable | call | '(' expr ')'
//! call    := name '(' expr (',' expr)* ')'
//!          | 'if' '(' cond ',' expr ',' expr ')'
//! cond    := expr ('<' | '<=' | '>' | '>=' | '=') expr
//! ```
//!
//! Functions: `sin cos floor frac abs sqrt` (one argument), `min max` (two).
//! Constants: `pi` and `phi = (sqrt(5) - 1) / 2`.
//!
//! Comparisons exist only as the first argument of `if`, and are strict:
//! `if(w < 1/2, a, b)` picks `a` on `[0, 1/2)` and `b` on `[1/2, 1)`.

mod eval;
mod lexer;
mod parser;

use std::fmt;

use thiserror::Error;

pub use parser::{parse, parse_with_vars};

/// Variables accepted by [`parse`].
pub const DEFAULT_VARS: [&str; 2] = ["w", "x"];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("unexpected character '{found}' at position {pos}")]
    Lexical { pos: usize, found: String },
    #[error("syntax error at position {pos}: expected {expected}, found {found}")]
    Syntax {
        pos: usize,
        expected: String,
        found: String,
    },
    #[error("function '{name}' at position {pos} takes {expected} argument(s), got {found}")]
    Arity {
        pos: usize,
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("unknown identifier '{name}' at position {pos}")]
    UnknownIdentifier { pos: usize, name: String },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("unbound variable '{0}'")]
    Unbound(String),
    #[error("{func} is undefined at {arg}")]
    Domain { func: &'static str, arg: f64 },
    #[error("expression evaluated to a non-finite value")]
    NonFinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constant {
    Pi,
    Phi,
}

impl Constant {
    pub fn value(self) -> f64 {
        match self {
            Constant::Pi => std::f64::consts::PI,
            Constant::Phi => 0.618_033_988_749_894_9,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Constant::Pi => "pi",
            Constant::Phi => "phi",
        }
    }

    fn lookup(name: &str) -> Option<Self> {
        match name {
            "pi" => Some(Constant::Pi),
            "phi" => Some(Constant::Phi),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Floor,
    Frac,
    Abs,
    Sqrt,
    Min,
    Max,
}

impl Func {
    pub fn arity(self) -> usize {
        match self {
            Func::Min | Func::Max => 2,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Floor => "floor",
            Func::Frac => "frac",
            Func::Abs => "abs",
            Func::Sqrt => "sqrt",
            Func::Min => "min",
            Func::Max => "max",
        }
    }

    fn lookup(name: &str) -> Option<Self> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "floor" => Func::Floor,
            "frac" => Func::Frac,
            "abs" => Func::Abs,
            "sqrt" => Func::Sqrt,
            "min" => Func::Min,
            "max" => Func::Max,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Pow => "^",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmpOp {
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
}

impl CmpOp {
    fn symbol(self) -> &'static str {
        match self {
            CmpOp::Lt => "<",
            CmpOp::Le => "<=",
            CmpOp::Gt => ">",
            CmpOp::Ge => ">=",
            CmpOp::Eq => "=",
        }
    }

    fn holds(self, a: f64, b: f64) -> bool {
        match self {
            CmpOp::Lt => a < b,
            CmpOp::Le => a <= b,
            CmpOp::Gt => a > b,
            CmpOp::Ge => a >= b,
            CmpOp::Eq => a == b,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Cond {
    pub op: CmpOp,
    pub lhs: Expr,
    pub rhs: Expr,
}

/// Expression syntax tree.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Const(Constant),
    Var(String),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Vec<Expr>),
    If(Box<Cond>, Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Names of the variables referenced by this expression, sorted and deduplicated.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Num(_) | Expr::Const(_) => {}
            Expr::Var(name) => out.push(name.clone()),
            Expr::Neg(e) => e.collect_vars(out),
            Expr::Binary(_, a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Expr::Call(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
            Expr::If(c, a, b) => {
                c.lhs.collect_vars(out);
                c.rhs.collect_vars(out);
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }
}

/// Prints in a fully parenthesised form that parses back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(v) => write!(f, "{v}"),
            Expr::Const(c) => f.write_str(c.name()),
            Expr::Var(name) => f.write_str(name),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Binary(op, a, b) => write!(f, "({a} {} {b})", op.symbol()),
            Expr::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            Expr::If(c, a, b) => {
                write!(f, "if({} {} {}, {a}, {b})", c.lhs, c.op.symbol(), c.rhs)
            }
        }
    }
}
