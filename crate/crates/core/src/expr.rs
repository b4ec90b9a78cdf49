//! Text grammar for potentials, relations and scalar expressions.
//!
//! ```text
//! expr   := ["+"|"-"] term (("+"|"-") term)*
//! term   := factor (("*"|"/") factor)*
//! factor := atom ["^" integer]
//! atom   := integer | name | "(" expr ")"
//! ```
//!
//! The names `x`, `y`, `z` are the generators; their products in written
//! order form the word. `zeta` is a primitive cube root of unity when the field
//! has one. Any other name must be bound. Division is only by scalars.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::field::{FieldElement, FieldError, FieldSpec};
use crate::tensor::{Tensor, Var, Word};

pub type Bindings = BTreeMap<String, FieldElement>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("mixed degrees {0:?} in one expression")]
    MixedDegree(Vec<usize>),
    #[error("unbound parameter `{0}`")]
    UnboundParameter(String),
    #[error("expected degree {expected}, found {found}")]
    WrongDegree { expected: String, found: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(i64),
    Name(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].1.is_ascii_digit() {
                j += 1;
            }
            let end = chars.get(j).map_or(text.len(), |c| c.0);
            let n = text[pos..end].parse().map_err(|_| ParseError::Syntax {
                pos,
                msg: "integer literal too large".into(),
            })?;
            out.push((pos, Tok::Num(n)));
            i = j;
        } else if c.is_alphabetic() || c == '_' {
            let mut j = i;
            while j < chars.len() && (chars[j].1.is_alphanumeric() || matches!(chars[j].1, '_' | '\'')) {
                j += 1;
            }
            let end = chars.get(j).map_or(text.len(), |c| c.0);
            out.push((pos, Tok::Name(text[pos..end].to_string())));
            i = j;
        } else if "+-*/()^".contains(c) {
            out.push((pos, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ParseError::Syntax {
                pos,
                msg: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(out)
}

/// Possibly inhomogeneous polynomial; `degrees` remembers every degree that
/// was written, even if its terms cancelled.
#[derive(Debug, Clone)]
struct Value {
    terms: BTreeMap<Word, FieldElement>,
    degrees: BTreeSet<usize>,
}

impl Value {
    fn scalar(c: FieldElement) -> Value {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Word(vec![]), c);
        }
        Value {
            terms,
            degrees: [0].into(),
        }
    }

    fn add(mut self, other: Value, sign: &FieldElement) -> Value {
        for (w, c) in other.terms {
            let c = &c * sign;
            let e = self.terms.entry(w.clone()).or_insert_with(|| c.spec().zero());
            *e = &*e + &c;
            if e.is_zero() {
                self.terms.remove(&w);
            }
        }
        self.degrees.extend(other.degrees);
        self
    }

    fn mul(&self, other: &Value, field: FieldSpec) -> Value {
        let mut terms: BTreeMap<Word, FieldElement> = BTreeMap::new();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let w = a.concat(b);
                let e = terms.entry(w.clone()).or_insert_with(|| field.zero());
                *e = &*e + &(c * d);
                if e.is_zero() {
                    terms.remove(&w);
                }
            }
        }
        let degrees = self
            .degrees
            .iter()
            .flat_map(|a| other.degrees.iter().map(move |b| a + b))
            .collect();
        Value { terms, degrees }
    }

    fn as_scalar(&self, field: FieldSpec) -> Option<FieldElement> {
        if self.degrees.iter().all(|&d| d == 0) {
            Some(self.terms.values().next().cloned().unwrap_or_else(|| field.zero()))
        } else {
            None
        }
    }
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    field: FieldSpec,
    bindings: &'a Bindings,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Value, ParseError> {
        let one = self.field.one();
        let minus = -self.field.one();
        let mut sign = one.clone();
        match self.peek() {
            Some(Tok::Sym('-')) => {
                sign = minus.clone();
                self.at += 1;
            }
            Some(Tok::Sym('+')) => self.at += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = Value {
            terms: BTreeMap::new(),
            degrees: BTreeSet::new(),
        }
        .add(first, &sign);
        loop {
            let s = match self.peek() {
                Some(Tok::Sym('+')) => one.clone(),
                Some(Tok::Sym('-')) => minus.clone(),
                _ => return Ok(acc),
            };
            self.at += 1;
            let t = self.term()?;
            acc = acc.add(t, &s);
        }
    }

    fn term(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Sym('*')) => {
                    self.at += 1;
                    let f = self.factor()?;
                    acc = acc.mul(&f, self.field);
                }
                Some(Tok::Sym('/')) => {
                    self.at += 1;
                    let pos = self.pos();
                    let f = self.factor()?;
                    let Some(d) = f.as_scalar(self.field) else {
                        return Err(ParseError::Syntax {
                            pos,
                            msg: "division by a non-scalar".into(),
                        });
                    };
                    let inv = d.inv()?;
                    acc = acc.mul(&Value::scalar(inv), self.field);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Value, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Sym('^')) = self.peek() {
            self.at += 1;
            let neg = if let Some(Tok::Sym('-')) = self.peek() {
                self.at += 1;
                true
            } else {
                false
            };
            let Some(Tok::Num(n)) = self.peek().cloned() else {
                return self.err("expected an integer exponent");
            };
            self.at += 1;
            if neg {
                let Some(s) = base.as_scalar(self.field) else {
                    return self.err("negative power of a non-scalar");
                };
                return Ok(Value::scalar(s.inv()?.pow(n as u64)));
            }
            let mut acc = Value::scalar(self.field.one());
            for _ in 0..n {
                acc = acc.mul(&base, self.field);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Value, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(Value::scalar(self.field.from_i64(n)))
            }
            Some(Tok::Name(name)) => {
                self.at += 1;
                if let Some(v) = name.chars().next().and_then(Var::from_letter).filter(|_| name.len() == 1) {
                    let mut terms = BTreeMap::new();
                    terms.insert(Word(vec![v]), self.field.one());
                    return Ok(Value {
                        terms,
                        degrees: [1].into(),
                    });
                }
                if let Some(v) = self.bindings.get(&name) {
                    if v.spec() != self.field {
                        return Err(FieldError::FieldMismatch(self.field, v.spec()).into());
                    }
                    return Ok(Value::scalar(v.clone()));
                }
                if name == "zeta" {
                    return Ok(Value::scalar(self.field.zeta()?));
                }
                Err(ParseError::UnboundParameter(name))
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let v = self.expr()?;
                if self.peek() != Some(&Tok::Sym(')')) {
                    return self.err("expected `)`");
                }
                self.at += 1;
                Ok(v)
            }
            Some(Tok::Sym(c)) => Err(ParseError::Syntax {
                pos,
                msg: format!("unexpected `{c}`"),
            }),
            None => self.err("unexpected end of input"),
        }
    }
}

fn parse_value(text: &str, field: FieldSpec, bindings: &Bindings) -> Result<Value, ParseError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(ParseError::Syntax {
            pos: 0,
            msg: "empty expression".into(),
        });
    }
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
        field,
        bindings,
    };
    let v = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(v)
}

/// Parses a homogeneous tensor of any positive degree.
pub fn parse_tensor(text: &str, field: FieldSpec, bindings: &Bindings) -> Result<Tensor, ParseError> {
    let v = parse_value(text, field, bindings)?;
    if v.degrees.len() > 1 {
        return Err(ParseError::MixedDegree(v.degrees.into_iter().collect()));
    }
    let degree = *v.degrees.iter().next().expect("nonempty");
    if degree == 0 {
        return Err(ParseError::WrongDegree {
            expected: "at least 1".into(),
            found: 0,
        });
    }
    Ok(Tensor::from_terms(field, degree, v.terms).expect("homogeneous"))
}

/// Parses a potential (degree 3) or relation (degree 2).
pub fn parse_potential(text: &str, field: FieldSpec, bindings: &Bindings) -> Result<Tensor, ParseError> {
    let t = parse_tensor(text, field, bindings)?;
    if !(2..=3).contains(&t.degree()) {
        return Err(ParseError::WrongDegree {
            expected: "2 or 3".into(),
            found: t.degree(),
        });
    }
    Ok(t)
}

pub fn parse_scalar(text: &str, field: FieldSpec, bindings: &Bindings) -> Result<FieldElement, ParseError> {
    let v = parse_value(text, field, bindings)?;
    v.as_scalar(field).ok_or(ParseError::WrongDegree {
        expected: "0".into(),
        found: v.degrees.iter().copied().max().unwrap_or(0),
    })
}
