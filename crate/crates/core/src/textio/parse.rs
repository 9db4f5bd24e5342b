//! Recursive-descent parser for generator expressions.
//!
//! ```text
//! expr   := ('+' | '-')? term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' nat)?
//! atom   := nat ('/' nat)? | symbol | '(' expr ')'
//! symbol := label '[' nat ']' | letter nat | letter '(' nat ')'
//! ```
//!
//! `letter` is one of `x u y v c`; `label` is a basis label of the
//! coefficient algebra, which may itself be numeric as in `1[2]`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Pos, TextError};
use crate::frobenius::FrobeniusSuperalgebra;
use crate::linear::{sign_scalar, Element, Scalar};
use crate::presentation::{Gen, GeneratedAlgebra};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Number(Scalar),
    Symbol { gen: Gen, text: String, pos: Pos },
    /// Summands with a flag for subtraction.
    Sum(Vec<(bool, Expr)>),
    Product(Vec<Expr>),
    Power(Box<Expr>, u32),
}

/// What the parser needs to resolve symbols.
#[derive(Clone, Debug)]
pub struct Context {
    pub labels: Vec<String>,
    pub n: usize,
}

impl Context {
    pub fn new(labels: Vec<String>, n: usize) -> Self {
        Context { labels, n }
    }

    pub fn of(alg: &FrobeniusSuperalgebra, n: usize) -> Self {
        Context::new(alg.labels().to_vec(), n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Nat(String),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, Pos)>,
}

fn lex(src: &str) -> Result<Lexer, TextError> {
    let chars: Vec<char> = src.chars().collect();
    let (mut line, mut col) = (1, 1);
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        let pos = Pos { line, col };
        if ch == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if ch.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let start = i;
        if ch.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            toks.push((Tok::Nat(chars[start..i].iter().collect()), pos));
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Ident(chars[start..i].iter().collect()), pos));
        } else if "+-*^/()[]".contains(ch) {
            i += 1;
            toks.push((Tok::Sym(ch), pos));
        } else {
            return Err(TextError::Syntax {
                pos,
                msg: format!("unexpected character `{ch}`"),
            });
        }
        col += i - start;
    }
    toks.push((Tok::End, Pos { line, col }));
    Ok(Lexer { toks })
}

struct Parser<'a> {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    ctx: &'a Context,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T, TextError> {
        Err(TextError::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, c: char) -> Result<(), TextError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(format!("expected `{c}`"))
        }
    }

    fn nat(&mut self) -> Result<String, TextError> {
        match self.bump() {
            (Tok::Nat(s), _) => Ok(s),
            (_, pos) => Err(TextError::Syntax {
                pos,
                msg: "expected a natural number".into(),
            }),
        }
    }

    fn index(&mut self) -> Result<usize, TextError> {
        let pos = self.pos();
        let s = self.nat()?;
        s.parse().map_err(|_| TextError::Syntax {
            pos,
            msg: format!("index `{s}` is too large"),
        })
    }

    fn expr(&mut self) -> Result<Expr, TextError> {
        let mut terms = Vec::new();
        let mut negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            terms.push((negative, self.term()?));
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 && !terms[0].0 {
            terms.pop().unwrap().1
        } else {
            Expr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<Expr, TextError> {
        let mut factors = vec![self.factor()?];
        while self.eat('*') {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Expr::Product(factors)
        })
    }

    fn factor(&mut self) -> Result<Expr, TextError> {
        let atom = self.atom()?;
        if self.eat('^') {
            let pos = self.pos();
            let s = self.nat()?;
            let k = s.parse().map_err(|_| TextError::Syntax {
                pos,
                msg: format!("exponent `{s}` is too large"),
            })?;
            return Ok(Expr::Power(Box::new(atom), k));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Expr, TextError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Nat(s) => {
                self.bump();
                if *self.peek() == Tok::Sym('[') {
                    return self.token(s, pos);
                }
                let num: BigInt = s.parse().unwrap();
                let den: BigInt = if self.eat('/') {
                    self.nat()?.parse().unwrap()
                } else {
                    BigInt::from(1)
                };
                if den.is_zero() {
                    return Err(TextError::Syntax {
                        pos,
                        msg: "zero denominator".into(),
                    });
                }
                Ok(Expr::Number(Scalar::new(num, den)))
            }
            Tok::Ident(s) => {
                self.bump();
                if *self.peek() == Tok::Sym('[') {
                    return self.token(s, pos);
                }
                self.letter_symbol(&s, pos)
            }
            Tok::End => self.fail("unexpected end of input"),
            Tok::Sym(c) => self.fail(format!("unexpected `{c}`")),
        }
    }

    fn token(&mut self, label: String, pos: Pos) -> Result<Expr, TextError> {
        self.expect('[')?;
        let strand = self.index()?;
        self.expect(']')?;
        let text = format!("{label}[{strand}]");
        let index = self
            .ctx
            .labels
            .iter()
            .position(|l| *l == label)
            .ok_or_else(|| TextError::UnknownSymbol { pos, symbol: text.clone() })?;
        if !(1..=self.ctx.n).contains(&strand) {
            return Err(TextError::StrandOutOfRange { pos, symbol: text });
        }
        Ok(Expr::Symbol {
            gen: Gen::Token { strand, index },
            text,
            pos,
        })
    }

    fn letter_symbol(&mut self, ident: &str, pos: Pos) -> Result<Expr, TextError> {
        let letter = ident.chars().next().unwrap();
        let digits = &ident[1..];
        let make: fn(usize) -> Gen = match letter {
            'x' => Gen::X,
            'u' => Gen::U,
            'y' => Gen::Y,
            'v' => Gen::V,
            'c' => Gen::C,
            _ => {
                return Err(TextError::UnknownSymbol {
                    pos,
                    symbol: ident.to_string(),
                })
            }
        };
        let index: usize = if digits.is_empty() && *self.peek() == Tok::Sym('(') {
            self.bump();
            let i = self.index()?;
            self.expect(')')?;
            i
        } else if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
            digits.parse().map_err(|_| TextError::Syntax {
                pos,
                msg: format!("index in `{ident}` is too large"),
            })?
        } else {
            return Err(TextError::UnknownSymbol {
                pos,
                symbol: ident.to_string(),
            });
        };
        let text = format!("{letter}{index}");
        let limit = if matches!(letter, 'u' | 'v') {
            self.ctx.n.saturating_sub(1)
        } else {
            self.ctx.n
        };
        if !(1..=limit).contains(&index) {
            return Err(TextError::StrandOutOfRange { pos, symbol: text });
        }
        Ok(Expr::Symbol {
            gen: make(index),
            text,
            pos,
        })
    }
}

pub fn parse(src: &str, ctx: &Context) -> Result<Expr, TextError> {
    let lexer = lex(src)?;
    let mut p = Parser {
        toks: lexer.toks,
        at: 0,
        ctx,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail("unexpected trailing input");
    }
    Ok(e)
}

/// Evaluates with the multiplication of `target`.
pub fn eval<A: GeneratedAlgebra + ?Sized>(ast: &Expr, target: &A) -> Result<Element<A::Key>, TextError> {
    Ok(match ast {
        Expr::Number(c) => target.one().scale(c),
        Expr::Symbol { gen, text, pos } => target.generator(gen).ok_or_else(|| TextError::IllegalSymbolForTarget {
            pos: *pos,
            symbol: text.clone(),
        })?,
        Expr::Sum(terms) => {
            let mut out = Element::zero();
            for (negative, t) in terms {
                let v = eval(t, target)?;
                out.add_scaled(&sign_scalar(*negative), &v);
            }
            out
        }
        Expr::Product(factors) => {
            let mut out = target.one();
            for f in factors {
                out = target.mul(&out, &eval(f, target)?);
            }
            out
        }
        Expr::Power(base, k) => {
            let b = eval(base, target)?;
            let mut out = target.one();
            for _ in 0..*k {
                out = target.mul(&out, &b);
            }
            out
        }
    })
}

/// Parses and evaluates `src` in `target`.
pub fn read<A: GeneratedAlgebra + ?Sized>(target: &A, src: &str) -> Result<Element<A::Key>, TextError> {
    let ctx = Context::new(target.labels(), target.strands());
    eval(&parse(src, &ctx)?, target)
}
