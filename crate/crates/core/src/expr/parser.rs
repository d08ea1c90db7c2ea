use super::lexer::{tokenize, Spanned, Token};
use super::{BinOp, CmpOp, Cond, Constant, Expr, Func, ParseError, DEFAULT_VARS};

/// Parses an expression over the default variables `w` and `x`.
pub fn parse(source: &str) -> Result<Expr, ParseError> {
    parse_with_vars(source, &DEFAULT_VARS)
}

/// Parses an expression, accepting only the listed variable names.
pub fn parse_with_vars(source: &str, vars: &[&str]) -> Result<Expr, ParseError> {
    let tokens = tokenize(source)?;
    let mut p = Parser { tokens, at: 0, vars };
    let e = p.expr()?;
    p.expect_end()?;
    Ok(e)
}

struct Parser<'v> {
    tokens: Vec<Spanned>,
    at: usize,
    vars: &'v [&'v str],
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.at].tok
    }

    fn pos(&self) -> usize {
        self.tokens[self.at].pos
    }

    fn bump(&mut self) -> Spanned {
        let t = self.tokens[self.at].clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError::Syntax {
            pos: self.pos(),
            expected: expected.to_string(),
            found: self.peek().describe(),
        }
    }

    fn expect(&mut self, tok: Token, expected: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        match self.peek() {
            Token::End => Ok(()),
            _ => Err(self.error("operator or end of input")),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        loop {
            let op = match self.peek() {
                Token::Plus => BinOp::Add,
                Token::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.product()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Token::Star => BinOp::Mul,
                Token::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.unary()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Token::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() == Token::Caret {
            self.bump();
            let exponent = self.unary()?;
            return Ok(Expr::Binary(BinOp::Pow, Box::new(base), Box::new(exponent)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let Spanned { tok, pos } = self.bump();
        match tok {
            Token::Num(v) => Ok(Expr::Num(v)),
            Token::LParen => {
                let e = self.expr()?;
                self.expect(Token::RParen, "')'")?;
                Ok(e)
            }
            Token::Ident(name) => self.identifier(name, pos),
            other => Err(ParseError::Syntax {
                pos,
                expected: "number, identifier or '('".into(),
                found: other.describe(),
            }),
        }
    }

    fn identifier(&mut self, name: String, pos: usize) -> Result<Expr, ParseError> {
        if *self.peek() == Token::LParen {
            if name == "if" {
                return self.conditional(pos);
            }
            let func = Func::lookup(&name).ok_or(ParseError::UnknownIdentifier { pos, name: name.clone() })?;
            self.bump();
            let args = self.arguments()?;
            if args.len() != func.arity() {
                return Err(ParseError::Arity {
                    pos,
                    name,
                    expected: func.arity(),
                    found: args.len(),
                });
            }
            return Ok(Expr::Call(func, args));
        }
        if let Some(c) = Constant::lookup(&name) {
            return Ok(Expr::Const(c));
        }
        if self.vars.contains(&name.as_str()) {
            return Ok(Expr::Var(name));
        }
        if name == "if" || Func::lookup(&name).is_some() {
            return Err(self.error("'('"));
        }
        Err(ParseError::UnknownIdentifier { pos, name })
    }

    fn arguments(&mut self) -> Result<Vec<Expr>, ParseError> {
        let mut args = vec![self.expr()?];
        while *self.peek() == Token::Comma {
            self.bump();
            args.push(self.expr()?);
        }
        self.expect(Token::RParen, "',' or ')'")?;
        Ok(args)
    }

    fn conditional(&mut self, pos: usize) -> Result<Expr, ParseError> {
        self.bump(); // '('
        let lhs = self.expr()?;
        let op = match self.peek() {
            Token::Lt => CmpOp::Lt,
            Token::Le => CmpOp::Le,
            Token::Gt => CmpOp::Gt,
            Token::Ge => CmpOp::Ge,
            Token::Eq => CmpOp::Eq,
            _ => return Err(self.error("comparison operator")),
        };
        self.bump();
        let rhs = self.expr()?;
        let mut branches = Vec::with_capacity(2);
        while *self.peek() == Token::Comma {
            self.bump();
            branches.push(self.expr()?);
        }
        self.expect(Token::RParen, "',' or ')'")?;
        if branches.len() != 2 {
            return Err(ParseError::Arity {
                pos,
                name: "if".into(),
                expected: 3,
                found: branches.len() + 1,
            });
        }
        let else_branch = branches.pop().unwrap();
        let then_branch = branches.pop().unwrap();
        Ok(Expr::If(
            Box::new(Cond { op, lhs, rhs }),
            Box::new(then_branch),
            Box::new(else_branch),
        ))
    }
}
