//! Canonical text form: `coeff*var1^e1*var2^e2 ± ...`, variables sorted,
//! terms in descending graded-lex order. Printing then parsing reproduces the
//! polynomial bit-exactly; the parser accepts a superset (whitespace, leading
//! signs, omitted `*`-free coefficients, any term order).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{grlex_cmp, MultiPoly, PolyError};

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Vec<u32>, &BigInt)> = self.terms.iter().collect();
        terms.sort_by(|(ea, _), (eb, _)| grlex_cmp(eb, ea));
        for (i, (exps, c)) in terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.magnitude();
            let mut wrote = false;
            let is_const = exps.iter().all(|&e| e == 0);
            if !mag.is_one() || is_const {
                write!(f, "{}", mag)?;
                wrote = true;
            }
            for (vi, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                wrote = true;
                write!(f, "{}", self.vars[vi])?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Int(BigInt),
    Ident(String),
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn next(&mut self) -> Result<Tok, PolyError> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(Tok::End);
        }
        let b = self.src[self.pos];
        self.pos += 1;
        match b {
            b'+' => Ok(Tok::Plus),
            b'-' => Ok(Tok::Minus),
            b'*' => Ok(Tok::Star),
            b'^' => Ok(Tok::Caret),
            b'0'..=b'9' => {
                let start = self.pos - 1;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if s.len() > 100_000 {
                    return Err(PolyError::Parse("integer literal too long".into()));
                }
                Ok(Tok::Int(s.parse().unwrap()))
            }
            b if b.is_ascii_alphabetic() || b == b'_' => {
                let start = self.pos - 1;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok(Tok::Ident(
                    std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string(),
                ))
            }
            other => Err(PolyError::Parse(format!(
                "unexpected byte `{}` at offset {}",
                other as char,
                self.pos - 1
            ))),
        }
    }

    fn peek(&mut self) -> Result<Tok, PolyError> {
        let save = self.pos;
        let t = self.next();
        self.pos = save;
        t
    }
}

/// Parses the canonical sparse text form.
pub fn parse_poly(src: &str) -> Result<MultiPoly, PolyError> {
    if src.len() > 1_000_000 {
        return Err(PolyError::Parse("input too long".into()));
    }
    let mut lx = Lexer::new(src);
    let mut acc = MultiPoly::zero();
    let mut any = false;
    loop {
        // sign prefix
        let mut sign = BigInt::one();
        loop {
            match lx.peek()? {
                Tok::Plus => {
                    lx.next()?;
                }
                Tok::Minus => {
                    sign = -sign;
                    lx.next()?;
                }
                Tok::End => {
                    if any {
                        return Ok(acc);
                    }
                    return Err(PolyError::Parse("empty input".into()));
                }
                _ => break,
            }
        }
        // term: [int] ('*'? factor)*  where factor = ident ['^' int]
        let mut coeff = sign;
        let mut factors: Vec<(String, u32)> = Vec::new();
        let mut saw_any_factor = false;
        if let Tok::Int(n) = lx.peek()? {
            lx.next()?;
            coeff *= n;
            saw_any_factor = true;
        }
        loop {
            match lx.peek()? {
                Tok::Star => {
                    lx.next()?;
                    match lx.next()? {
                        Tok::Ident(name) => {
                            let e = parse_exp(&mut lx)?;
                            factors.push((name, e));
                        }
                        Tok::Int(n) => {
                            // tolerate trailing numeric factors like `x*3`
                            coeff *= n;
                        }
                        t => {
                            return Err(PolyError::Parse(format!(
                                "expected factor after `*`, got {:?}",
                                t
                            )))
                        }
                    }
                    saw_any_factor = true;
                }
                Tok::Ident(_) => {
                    if let Tok::Ident(name) = lx.next()? {
                        let e = parse_exp(&mut lx)?;
                        factors.push((name, e));
                        saw_any_factor = true;
                    }
                }
                _ => break,
            }
        }
        if !saw_any_factor {
            return Err(PolyError::Parse("expected a term".into()));
        }
        // assemble the term as a polynomial and add
        let mut vars: Vec<String> = factors.iter().map(|(n, _)| n.clone()).collect();
        vars.sort();
        vars.dedup();
        if vars.len() > 64 {
            return Err(PolyError::Parse("too many variables".into()));
        }
        let mut exps = vec![0u32; vars.len()];
        for (name, e) in &factors {
            let i = vars.iter().position(|v| v == name).unwrap();
            exps[i] = exps[i]
                .checked_add(*e)
                .ok_or_else(|| PolyError::Parse("exponent overflow".into()))?;
        }
        let term = MultiPoly::from_terms(vars, [(exps, coeff)])?;
        acc = acc.add(&term);
        any = true;
        match lx.peek()? {
            Tok::Plus | Tok::Minus => continue,
            Tok::End => return Ok(acc),
            t => return Err(PolyError::Parse(format!("unexpected token {:?}", t))),
        }
    }
}

fn parse_exp(lx: &mut Lexer) -> Result<u32, PolyError> {
    if let Tok::Caret = lx.peek()? {
        lx.next()?;
        match lx.next()? {
            Tok::Int(n) => u32::try_from(n)
                .map_err(|_| PolyError::Parse("exponent out of range".into())),
            t => Err(PolyError::Parse(format!("expected exponent, got {:?}", t))),
        }
    } else {
        Ok(1)
    }
}
