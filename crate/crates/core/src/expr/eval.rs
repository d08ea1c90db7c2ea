use super::{BinOp, EvalError, Expr, Func};
use crate::circle::wrap_unit;

impl Expr {
    /// Evaluates with variables looked up in `bindings`.
    pub fn eval(&self, bindings: &[(&str, f64)]) -> Result<f64, EvalError> {
        self.eval_with(&|name: &str| bindings.iter().find(|(n, _)| *n == name).map(|&(_, v)| v))
    }

    /// Evaluates an expression that references no variables.
    pub fn eval_const(&self) -> Result<f64, EvalError> {
        self.eval_with(&|_: &str| None)
    }

    /// Evaluates with `w` bound.
    #[inline]
    pub fn eval_w(&self, w: f64) -> Result<f64, EvalError> {
        self.eval_with(&|name: &str| (name == "w").then_some(w))
    }

    /// Evaluates with `w` and `x` bound.
    #[inline]
    pub fn eval_wx(&self, w: f64, x: f64) -> Result<f64, EvalError> {
        self.eval_with(&|name: &str| match name {
            "w" => Some(w),
            "x" => Some(x),
            _ => None,
        })
    }

    pub fn eval_with<L>(&self, lookup: &L) -> Result<f64, EvalError>
    where
        L: Fn(&str) -> Option<f64>,
    {
        let v = match self {
            Expr::Num(v) => *v,
            Expr::Const(c) => c.value(),
            Expr::Var(name) => lookup(name).ok_or_else(|| EvalError::Unbound(name.clone()))?,
            Expr::Neg(e) => -e.eval_with(lookup)?,
            Expr::Binary(op, a, b) => {
                let a = a.eval_with(lookup)?;
                let b = b.eval_with(lookup)?;
                match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                    BinOp::Div => a / b,
                    BinOp::Pow => power(a, b)?,
                }
            }
            Expr::Call(func, args) => {
                let a = args[0].eval_with(lookup)?;
                match func {
                    Func::Sin => a.sin(),
                    Func::Cos => a.cos(),
                    Func::Floor => a.floor(),
                    Func::Frac => wrap_unit(a),
                    Func::Abs => a.abs(),
                    Func::Sqrt => {
                        if a < 0.0 {
                            return Err(EvalError::Domain { func: "sqrt", arg: a });
                        }
                        a.sqrt()
                    }
                    Func::Min => a.min(args[1].eval_with(lookup)?),
                    Func::Max => a.max(args[1].eval_with(lookup)?),
                }
            }
            Expr::If(cond, then_b, else_b) => {
                let l = cond.lhs.eval_with(lookup)?;
                let r = cond.rhs.eval_with(lookup)?;
                if cond.op.holds(l, r) {
                    then_b.eval_with(lookup)?
                } else {
                    else_b.eval_with(lookup)?
                }
            }
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(EvalError::NonFinite)
        }
    }
}

/// Non-negative integer exponents multiply exactly; other exponents need a
/// positive base and go through `exp(b ln a)`.
fn power(base: f64, exponent: f64) -> Result<f64, EvalError> {
    if exponent.fract() == 0.0 && exponent.abs() <= u32::MAX as f64 {
        let mut n = exponent.abs() as u32;
        let mut acc = 1.0;
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc *= sq;
            }
            n >>= 1;
            if n > 0 {
                sq *= sq;
            }
        }
        return Ok(if exponent < 0.0 { 1.0 / acc } else { acc });
    }
    if base > 0.0 {
        Ok((exponent * base.ln()).exp())
    } else if base == 0.0 && exponent > 0.0 {
        Ok(0.0)
    } else {
        Err(EvalError::Domain { func: "pow", arg: base })
    }
}
