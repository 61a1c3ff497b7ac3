//! Text syntax for tower polynomials: `coef*var^exp` terms joined by
//! `+`/`-`, with parenthesized subexpressions for nested coefficients,
//! e.g. `y^2 + z`, `x^3 - 2/3*z^5*x`, `(z^2 + 1)*y^3`.

use crate::algebra::poly::{Exp, FieldElem, Poly};
use crate::algebra::tower::{TowerCtx, XPoly};
use crate::values::parse_rational;
use num::bigint::BigUint;
use num::Zero;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigUint),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Token>, String> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '/' => {
                chars.next();
                out.push(Token::Slash);
            }
            '(' => {
                chars.next();
                out.push(Token::LParen);
            }
            ')' => {
                chars.next();
                out.push(Token::RParen);
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Int(BigUint::from_str(&digits).unwrap()));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(name));
            }
            other => return Err(format!("unexpected character {other:?}")),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ctx: &'a TowerCtx,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<XPoly, String> {
        let mut acc = match self.peek() {
            Some(Token::Minus) => {
                self.next();
                self.term()?.neg()
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<XPoly, String> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.next();
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<XPoly, String> {
        if matches!(self.peek(), Some(Token::Minus)) {
            self.next();
            return Ok(self.factor()?.neg());
        }
        let base = self.base()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.next();
            let e = match self.next() {
                Some(Token::Int(n)) => n,
                other => return Err(format!("expected integer exponent, got {other:?}")),
            };
            return pow_xpoly(&base, e, self.ctx);
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<XPoly, String> {
        match self.next() {
            Some(Token::Int(n)) => {
                // optional /den for a rational constant
                let mut text = n.to_string();
                if matches!(self.peek(), Some(Token::Slash)) {
                    self.next();
                    match self.next() {
                        Some(Token::Int(d)) => {
                            text.push('/');
                            text.push_str(&d.to_string());
                        }
                        other => return Err(format!("expected denominator, got {other:?}")),
                    }
                }
                let q = parse_rational(&text)?;
                let s = self.ctx.field.from_rational(&q);
                Ok(self
                    .ctx
                    .xp_const(self.ctx.k_from_yp(self.ctx.yp_const(self.ctx.zr(self.ctx.zp_const(s))))))
            }
            Some(Token::Ident(name)) => {
                let ctx = self.ctx;
                if name == ctx.x.name() {
                    Ok(ctx.xp_x())
                } else if name == ctx.y.name() {
                    Ok(ctx.xp_const(ctx.k_from_yp(ctx.yp_y())))
                } else if ctx.z_visible && name == ctx.z.name() {
                    Ok(ctx.xp_const(ctx.k_from_yp(ctx.yp_const(ctx.zr_zpow(Exp::one())))))
                } else {
                    Err(format!("unknown variable {name:?}"))
                }
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    other => Err(format!("expected ')', got {other:?}")),
                }
            }
            other => Err(format!("unexpected token {other:?}")),
        }
    }
}

fn pow_xpoly(base: &XPoly, e: BigUint, ctx: &TowerCtx) -> Result<XPoly, String> {
    if e.is_zero() {
        if base.is_zero() {
            return Err("0^0 is undefined".into());
        }
        return Ok(ctx.xp_const(ctx.k_one()));
    }
    if let Some(small) = e.to_u64_digits().first().filter(|_| e.bits() <= 64) {
        if e.bits() <= 20 {
            return Ok(base.pow(*small));
        }
        // huge exponent: only a bare monomial with trivial coefficient scales
        if base.len() == 1 {
            let (exp, c) = &base.terms()[0];
            if c.is_one() || c.is_zero() {
                return Ok(Poly::monomial(base.var().clone(), exp.mul_u64(*small), c.clone()));
            }
        }
        return Err("exponent too large for a non-monomial base".into());
    }
    Err("exponent exceeds supported range".into())
}

/// Parse polynomial text into an element of K[x] for the given tower.
pub fn parse_poly(text: &str, ctx: &TowerCtx) -> Result<XPoly, String> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut p = Parser { tokens, pos: 0, ctx };
    let poly = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(format!("trailing input at token {}", p.pos));
    }
    Ok(poly)
}

/// Render an x-polynomial back into parseable text. Fails when a
/// coefficient carries a genuine polynomial denominator (no text form).
pub fn format_xpoly(p: &XPoly, ctx: &TowerCtx) -> Result<String, String> {
    if p.is_zero() {
        return Ok("0".into());
    }
    let mut parts = Vec::new();
    for (e, c) in p.terms().iter().rev() {
        let coeff = format_kelem(c, ctx)?;
        let part = match (e.is_zero(), coeff.as_str()) {
            (true, _) => coeff,
            (false, "1") => format_power(ctx.x.name(), e),
            (false, _) => format!("({})*{}", coeff, format_power(ctx.x.name(), e)),
        };
        parts.push(part);
    }
    Ok(parts.join(" + "))
}

fn format_power(name: &str, e: &Exp) -> String {
    if *e == Exp::one() {
        name.to_string()
    } else {
        format!("{}^{}", name, e)
    }
}

fn format_kelem(c: &crate::algebra::tower::KElem, ctx: &TowerCtx) -> Result<String, String> {
    if !c.den().is_constant() {
        return Err("coefficient has a polynomial denominator".into());
    }
    format_ypoly(c.num(), ctx)
}

fn format_ypoly(p: &crate::algebra::tower::YPoly, ctx: &TowerCtx) -> Result<String, String> {
    if p.is_zero() {
        return Ok("0".into());
    }
    let mut parts = Vec::new();
    for (e, c) in p.terms().iter().rev() {
        if !c.den().is_constant() {
            return Err("coefficient has a polynomial denominator".into());
        }
        let coeff = format_zpoly(c.num());
        let part = match (e.is_zero(), coeff.as_str()) {
            (true, _) => coeff,
            (false, "1") => format_power(ctx.y.name(), e),
            (false, _) => format!("({})*{}", coeff, format_power(ctx.y.name(), e)),
        };
        parts.push(part);
    }
    Ok(parts.join(" + "))
}

fn format_zpoly(p: &crate::algebra::tower::ZPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let var = p.var().name().to_string();
    let parts: Vec<String> = p
        .terms()
        .iter()
        .rev()
        .map(|(e, c)| {
            let cs = c.to_string();
            if e.is_zero() {
                cs
            } else if cs == "1" {
                format_power(&var, e)
            } else {
                format!("{}*{}", cs, format_power(&var, e))
            }
        })
        .collect();
    parts.join(" + ")
}
