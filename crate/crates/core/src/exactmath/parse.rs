//! Recursive-descent parser for polynomial and rational-function text.
//!
//! Grammar: `expr := term (('+'|'-') term)*`, `term := unary (('*'|'/') unary)*`,
//! `unary := ('+'|'-') unary | power`, `power := atom ('^' integer)?`,
//! `atom := number | variable | '(' expr ')'`. Multiplication must be explicit.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::Zero;

use super::poly::{MultiPoly, Vars};
use super::ratfunc::RationalFunction;
use super::rational::{parse_rational, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            out.push((start, Token::Num(chars[start..i].iter().collect())));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((start, Token::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Token::Op(c)));
            i += 1;
        } else {
            return Err(Error::Syntax(format!("unexpected character '{}' at {}", c, i)));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    vars: &'a Vars,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                let at = self.offset();
                let d = self.unary()?;
                acc = acc.div(&d).ok_or_else(|| Error::Syntax(format!("division by zero at {}", at)))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.offset();
        let exp = match self.peek().cloned() {
            Some(Token::Num(n)) if n.chars().all(|c| c.is_ascii_digit()) => {
                self.pos += 1;
                n.parse::<u32>().map_err(|_| Error::Syntax(format!("exponent too large at {}", at)))?
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let n = match self.peek().cloned() {
                    Some(Token::Num(n)) if n.chars().all(|c| c.is_ascii_digit()) => n,
                    _ => return Err(Error::Syntax(format!("expected a non-negative integer exponent at {}", at))),
                };
                self.pos += 1;
                if !self.eat(')') {
                    return Err(Error::Syntax(format!("expected ')' at {}", self.offset())));
                }
                n.parse::<u32>().map_err(|_| Error::Syntax(format!("exponent too large at {}", at)))?
            }
            _ => return Err(Error::Syntax(format!("expected a non-negative integer exponent at {}", at))),
        };
        Ok(base.pow(exp))
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                let q: Rational = parse_rational(&n).ok_or_else(|| Error::Syntax(format!("bad number '{}' at {}", n, at)))?;
                Ok(RationalFunction::from_poly(MultiPoly::constant(q, self.vars.clone())))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(RationalFunction::from_poly(MultiPoly::var(i, self.vars.clone()))),
                    None => Err(Error::NonRationalCoefficient(format!("unknown symbol '{}' at {}", name, at))),
                }
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Syntax(format!("expected ')' at {}", self.offset())));
                }
                Ok(e)
            }
            Some(t) => Err(Error::Syntax(format!("unexpected {:?} at {}", t, at))),
            None => Err(Error::Syntax("unexpected end of input".to_string())),
        }
    }
}

/// Parses a rational function in the given variables.
pub fn parse_rational_function(text: &str, vars: &Vars) -> Result<RationalFunction> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Syntax("empty expression".to_string()));
    }
    let mut p = Parser { tokens, pos: 0, vars, end: text.len() };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Syntax(format!("trailing input at {}", p.offset())));
    }
    Ok(e)
}

/// Parses a polynomial. Division is allowed only by nonzero constants.
pub fn parse_poly(text: &str, vars: &Vars) -> Result<MultiPoly> {
    let f = parse_rational_function(text, vars)?;
    if !f.is_polynomial() {
        return Err(Error::Syntax("division by a non-constant expression".to_string()));
    }
    debug_assert!(!f.den.constant_term().is_zero());
    Ok(f.num)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::poly::{uv, xyz};
    use crate::exactmath::rational::{rat, ratio};

    #[test]
    fn sphere() {
        let p = parse_poly("x^2+y^2+z^2-1", &xyz()).unwrap();
        assert_eq!(p.num_terms(), 4);
        assert_eq!(p.coeff(&[0, 0, 0]), rat(-1));
    }

    #[test]
    fn parabolic_quartic_has_ten_terms() {
        let p = parse_poly("2*x*y^3-6*x*y^2*z+6*x*y*z^2-2*x*z^3+4*y^3*z-8*y^2*z^2+4*y*z^3-y+z-1", &xyz()).unwrap();
        assert_eq!(p.num_terms(), 10);
    }

    #[test]
    fn rejects_undeclared_symbol() {
        assert!(matches!(parse_poly("x+w", &xyz()), Err(Error::NonRationalCoefficient(_))));
    }

    #[test]
    fn syntax_errors() {
        for bad in ["x+", "2x", "x^-1", "(x", "x**2", "x/y", "x^1.5", ""] {
            assert!(matches!(parse_poly(bad, &xyz()), Err(Error::Syntax(_))), "{}", bad);
        }
    }

    #[test]
    fn decimals_and_fractions() {
        let p = parse_poly("0.25*x - 3/4", &xyz()).unwrap();
        assert_eq!(p.coeff(&[1, 0, 0]), ratio(1, 4));
        assert_eq!(p.coeff(&[0, 0, 0]), ratio(-3, 4));
    }

    #[test]
    fn unary_minus_binds_looser_than_power() {
        let p = parse_poly("-x^2", &xyz()).unwrap();
        assert_eq!(p.coeff(&[2, 0, 0]), rat(-1));
    }

    #[test]
    fn rational_function() {
        let f = parse_rational_function("(v^2+1)/(2*v)", &uv()).unwrap();
        assert_eq!(f.eval(&[rat(0), rat(2)]).unwrap(), ratio(5, 4));
    }

    #[test]
    fn display_round_trips() {
        let p = parse_poly("3*x^2*y - x*z/2 + 7 - z^3", &xyz()).unwrap();
        assert_eq!(parse_poly(&p.to_string(), &xyz()).unwrap(), p);
    }
}
