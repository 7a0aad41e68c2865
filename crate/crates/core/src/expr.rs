//! A small expression language for elements of H.
//!
//! ```text
//! expr   := '-'? term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' uint)?
//! atom   := rational | 'i' | 'sqrt2' | 'sqrt3' | 'sqrt6' | 'x' uint
//!         | 't[' word ']' | func '(' expr ')' | '(' expr ')'
//! word   := ('s' uint)+ | 'e'
//! func   := 'star' | 'bullet' | 'delta' | 'epsA'
//! ```

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{Rational, Scalar};
use crate::hecke::{HeckeAlgebra, HeckeElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Star,
    Bullet,
    Delta,
    EpsA,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Star => "star",
            Func::Bullet => "bullet",
            Func::Delta => "delta",
            Func::EpsA => "epsA",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// Nonnegative rational literal.
    Rational(Rational),
    I,
    /// `sqrt2`, `sqrt3` or `sqrt6`.
    Sqrt(u8),
    /// `x_j`, 1-based as written.
    Var(usize),
    /// `t[word]` with 1-based letters; empty for `t[e]`.
    T(Vec<usize>),
    /// Terms with their signs (`true` = subtracted).
    Sum(Vec<(bool, Expr)>),
    Product(Vec<Expr>),
    Pow(Box<Expr>, u32),
    Apply(Func, Box<Expr>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error<T>(&self, at: usize, message: impl Into<String>) -> Result<T> {
        let before = &self.src[..at.min(self.src.len())];
        let line = before.iter().filter(|&&c| c == b'\n').count() + 1;
        let column = at - before.iter().rposition(|&c| c == b'\n').map_or(0, |p| p + 1) + 1;
        Err(Error::Syntax {
            line,
            column,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = self.describe();
            self.error(self.pos, format!("expected '{}', found {found}", c as char))
        }
    }

    fn describe(&mut self) -> String {
        match self.peek() {
            Some(c) => format!("'{}'", c as char),
            None => "end of input".into(),
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn uint(&mut self) -> Result<usize> {
        let at = self.pos;
        match self.digits() {
            Some(d) => d.parse().or_else(|_| self.error(at, "integer too large")),
            None => self.error(at, "expected an unsigned integer"),
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        let end = self.pos + word.len();
        if self.src.get(self.pos..end) == Some(word.as_bytes())
            && !self.src.get(end).is_some_and(|c| c.is_ascii_alphanumeric())
        {
            self.pos = end;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let neg = self.eat(b'-');
        terms.push((neg, self.term()?));
        loop {
            if self.eat(b'+') {
                terms.push((false, self.term()?));
            } else if self.eat(b'-') {
                terms.push((true, self.term()?));
            } else {
                break;
            }
        }
        if terms.len() == 1 && !terms[0].0 {
            return Ok(terms.pop().expect("one term").1);
        }
        Ok(Expr::Sum(terms))
    }

    fn term(&mut self) -> Result<Expr> {
        let mut factors = vec![self.factor()?];
        while self.eat(b'*') {
            factors.push(self.factor()?);
        }
        if factors.len() == 1 {
            return Ok(factors.pop().expect("one factor"));
        }
        Ok(Expr::Product(factors))
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let e = self.uint()?;
            let e = u32::try_from(e).or_else(|_| self.error(self.pos, "exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let Some(c) = self.peek() else {
            return self.error(start, "unexpected end of input");
        };
        if c.is_ascii_digit() {
            let num = self.digits().expect("digit");
            let mut value = Rational::from_integer(num.parse::<BigInt>().expect("digits"));
            // a '/' directly followed by digits continues the literal
            if self.src.get(self.pos) == Some(&b'/') {
                self.pos += 1;
                let at = self.pos;
                let den = match self.digits() {
                    Some(d) => d.parse::<BigInt>().expect("digits"),
                    None => return self.error(at, "expected a denominator"),
                };
                if den == BigInt::from(0) {
                    return self.error(at, "zero denominator");
                }
                value /= Rational::from_integer(den);
            }
            return Ok(Expr::Rational(value));
        }
        if c == b'(' {
            self.pos += 1;
            let e = self.expr()?;
            self.expect(b')')?;
            return Ok(e);
        }
        for (name, f) in [
            ("star", Func::Star),
            ("bullet", Func::Bullet),
            ("delta", Func::Delta),
            ("epsA", Func::EpsA),
        ] {
            if self.keyword(name) {
                self.expect(b'(')?;
                let e = self.expr()?;
                self.expect(b')')?;
                return Ok(Expr::Apply(f, Box::new(e)));
            }
        }
        for (name, s) in [("sqrt2", 2), ("sqrt3", 3), ("sqrt6", 6)] {
            if self.keyword(name) {
                return Ok(Expr::Sqrt(s));
            }
        }
        if self.keyword("i") {
            return Ok(Expr::I);
        }
        if c == b'x' {
            self.pos += 1;
            let j = self.uint()?;
            if j == 0 {
                return self.error(start, "variables are numbered from x1");
            }
            return Ok(Expr::Var(j));
        }
        if c == b't' && self.src.get(self.pos + 1) == Some(&b'[') {
            self.pos += 2;
            let word = self.word()?;
            self.expect(b']')?;
            return Ok(Expr::T(word));
        }
        let found = self.describe();
        self.error(start, format!("unexpected {found}"))
    }

    fn word(&mut self) -> Result<Vec<usize>> {
        if self.peek() == Some(b'e') {
            self.pos += 1;
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        while self.peek() == Some(b's') {
            self.pos += 1;
            let at = self.pos;
            let i = self.uint()?;
            if i == 0 {
                return self.error(at, "generators are numbered from s1");
            }
            out.push(i);
        }
        if out.is_empty() {
            let found = self.describe();
            return self.error(self.pos, format!("expected a word in s1, s2, ... or 'e', found {found}"));
        }
        Ok(out)
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        let found = p.describe();
        return p.error(p.pos, format!("unexpected {found} after expression"));
    }
    Ok(e)
}

fn needs_parens_in_product(e: &Expr) -> bool {
    matches!(e, Expr::Sum(_) | Expr::Product(_))
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Rational(q) => write!(f, "{q}"),
            Expr::I => write!(f, "i"),
            Expr::Sqrt(s) => write!(f, "sqrt{s}"),
            Expr::Var(j) => write!(f, "x{j}"),
            Expr::T(w) if w.is_empty() => write!(f, "t[e]"),
            Expr::T(w) => {
                let letters: Vec<String> = w.iter().map(|i| format!("s{i}")).collect();
                write!(f, "t[{}]", letters.join(" "))
            }
            Expr::Sum(terms) => {
                for (k, (neg, e)) in terms.iter().enumerate() {
                    match (k, neg) {
                        (0, true) => write!(f, "-")?,
                        (0, false) => {}
                        (_, true) => write!(f, " - ")?,
                        (_, false) => write!(f, " + ")?,
                    }
                    if matches!(e, Expr::Sum(_)) {
                        write!(f, "({e})")?;
                    } else {
                        write!(f, "{e}")?;
                    }
                }
                Ok(())
            }
            Expr::Product(factors) => {
                for (k, e) in factors.iter().enumerate() {
                    if k > 0 {
                        write!(f, "*")?;
                    }
                    if needs_parens_in_product(e) {
                        write!(f, "({e})")?;
                    } else {
                        write!(f, "{e}")?;
                    }
                }
                Ok(())
            }
            Expr::Pow(base, e) => {
                if matches!(**base, Expr::Sum(_) | Expr::Product(_) | Expr::Pow(..)) {
                    write!(f, "({base})^{e}")
                } else {
                    write!(f, "{base}^{e}")
                }
            }
            Expr::Apply(func, e) => write!(f, "{}({e})", func.name()),
        }
    }
}

impl Expr {
    pub fn eval(&self, alg: &Arc<HeckeAlgebra>) -> Result<HeckeElement> {
        Ok(match self {
            Expr::Rational(q) => HeckeElement::scalar(alg, Scalar::from(q.clone())),
            Expr::I => HeckeElement::scalar(alg, Scalar::i()),
            Expr::Sqrt(s) => {
                let r = Scalar::sqrt_rational(&Rational::from_integer(BigInt::from(*s)))
                    .expect("surds of the tower");
                HeckeElement::scalar(alg, r)
            }
            Expr::Var(j) => {
                if *j > alg.nvars() {
                    return Err(Error::Invalid(format!(
                        "unknown generator x{j}: {} has {} coordinates",
                        alg.rs.label,
                        alg.nvars()
                    )));
                }
                HeckeElement::var(alg, j - 1)
            }
            Expr::T(word) => {
                if let Some(bad) = word.iter().find(|&&i| i > alg.rs.rank()) {
                    return Err(Error::Invalid(format!(
                        "unknown generator s{bad}: {} has rank {}",
                        alg.rs.label,
                        alg.rs.rank()
                    )));
                }
                let letters: Vec<usize> = word.iter().map(|i| i - 1).collect();
                HeckeElement::t_word(alg, &letters)
            }
            Expr::Sum(terms) => {
                let mut acc = HeckeElement::zero(alg);
                for (neg, e) in terms {
                    let v = e.eval(alg)?;
                    acc = if *neg { &acc - &v } else { &acc + &v };
                }
                acc
            }
            Expr::Product(factors) => {
                let mut acc = HeckeElement::one(alg);
                for e in factors {
                    acc = &acc * &e.eval(alg)?;
                }
                acc
            }
            Expr::Pow(base, e) => base.eval(alg)?.pow(*e),
            Expr::Apply(func, e) => {
                let v = e.eval(alg)?;
                match func {
                    Func::Star => v.star()?,
                    Func::Bullet => v.bullet(),
                    Func::Delta => v.delta()?,
                    Func::EpsA => HeckeElement::from_poly(alg, v.epsilon_a()),
                }
            }
        })
    }
}

/// Parses and evaluates to normal form.
pub fn normalize(alg: &Arc<HeckeAlgebra>, text: &str) -> Result<HeckeElement> {
    parse(text)?.eval(alg)
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::hecke::random::random_element;

    fn alg(label: &str) -> Arc<HeckeAlgebra> {
        HeckeAlgebra::from_label(label, &[]).unwrap()
    }

    #[test]
    fn grammar_examples() {
        let e = parse("t[s1]*x1 + 2").unwrap();
        assert_eq!(
            e,
            Expr::Sum(vec![
                (false, Expr::Product(vec![Expr::T(vec![1]), Expr::Var(1)])),
                (false, Expr::Rational(Rational::from_integer(2.into()))),
            ])
        );
        assert!(matches!(parse("star(x1^2)").unwrap(), Expr::Apply(Func::Star, _)));
        let h = alg("A2");
        let w0 = normalize(&h, "t[s1 s2 s1]").unwrap();
        assert_eq!(w0, HeckeElement::t(&h, h.rs.weyl.longest()));
    }

    #[test]
    fn normalize_cross_relation() {
        let h = alg("A1");
        assert_eq!(normalize(&h, "x1*t[s1]").unwrap().render(), "t[s1]*(-x1) + 2");
    }

    #[test]
    fn positioned_errors() {
        assert_eq!(
            parse("x1 +\n  * 2"),
            Err(Error::Syntax {
                line: 2,
                column: 3,
                message: "unexpected '*'".into()
            })
        );
        assert!(matches!(parse("t[s1"), Err(Error::Syntax { line: 1, column: 5, .. })));
        assert!(matches!(parse("1/0"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("x1 x2"), Err(Error::Syntax { .. })));
        let h = alg("A1");
        assert!(matches!(normalize(&h, "t[s2]"), Err(Error::Invalid(_))));
        assert!(matches!(normalize(&h, "x3"), Err(Error::Invalid(_))));
    }

    #[test]
    fn ast_round_trip() {
        for text in [
            "-x1 + (x2 - 3/2)*t[s1 s2]",
            "star(x1^2) - bullet(t[e])*i*sqrt6",
            "(x1*x2)^3 - -1",
            "a",
        ] {
            let Ok(e) = parse(text) else { continue };
            assert_eq!(parse(&e.to_string()).unwrap(), e, "{text}");
        }
    }

    #[test]
    fn rendered_elements_reparse() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for label in ["A1", "A2", "B2", "G2"] {
            let h = alg(label);
            for _ in 0..40 {
                let e = random_element(&h, &mut rng, 2);
                assert_eq!(normalize(&h, &e.render()).unwrap(), e, "{}", e.render());
            }
        }
    }
}
