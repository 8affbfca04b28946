//! A small expression language over class literals.
//!
//! ```text
//! expr  := term (('+' | '-' | '∖') term)*
//! term  := unary (('*' | '·' | '•') unary)*
//! unary := '-' unary | atom
//! atom  := number | '[a,b]' | 'dual[a,b]' | 'point a' | '(' expr ')'
//! ```
//!
//! A product of two classes is the bullet product; a number times a class is
//! scalar multiplication. Adding a number to a class is rejected.

use crate::class::GClass;
use crate::embedding::bullet;
use crate::error::{Error, Result};
use crate::text::{parse_class, parse_num};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Value {
    Num(f64),
    Class(GClass),
}

impl Value {
    /// Numbers are read as point classes.
    pub fn into_class(self) -> GClass {
        match self {
            Value::Num(a) => GClass::scalar(a),
            Value::Class(c) => c,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Class(GClass),
    Plus,
    Minus,
    Times,
    Open,
    Close,
}

fn number_end(s: &str) -> usize {
    let b = s.as_bytes();
    let mut i = 0;
    while i < b.len() {
        let ch = b[i];
        let exp_sign = (ch == b'+' || ch == b'-') && i > 0 && matches!(b[i - 1], b'e' | b'E');
        if ch.is_ascii_digit() || ch == b'.' || ch == b'e' || ch == b'E' || exp_sign {
            i += 1;
        } else {
            break;
        }
    }
    i
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let mut rest = src.trim_start();
    while let Some(ch) = rest.chars().next() {
        let (tok, len) = match ch {
            '+' => (Tok::Plus, 1),
            '-' | '∖' => (Tok::Minus, ch.len_utf8()),
            '*' | '·' | '•' => (Tok::Times, ch.len_utf8()),
            '(' => (Tok::Open, 1),
            ')' => (Tok::Close, 1),
            '[' => {
                let end = rest
                    .find(']')
                    .ok_or_else(|| Error::parse(rest, "unclosed `[`"))?;
                (Tok::Class(parse_class(&rest[..=end])?), end + 1)
            }
            _ if rest.starts_with("dual") => {
                let end = rest
                    .find(']')
                    .ok_or_else(|| Error::parse(rest, "unclosed `dual[`"))?;
                (Tok::Class(parse_class(&rest[..=end])?), end + 1)
            }
            _ if rest.starts_with("point") => {
                let after = &rest[5..];
                let body = after.trim_start();
                let skipped = after.len() - body.len();
                let sign = usize::from(body.starts_with(['-', '+']));
                let len = sign + number_end(&body[sign..]);
                let v = parse_num(&body[..len])?;
                (Tok::Class(GClass::scalar(v)), 5 + skipped + len)
            }
            _ if ch.is_ascii_digit() || ch == '.' => {
                let len = number_end(rest);
                (Tok::Num(parse_num(&rest[..len])?), len)
            }
            _ => {
                let word: String = rest.chars().take_while(|c| !c.is_whitespace()).collect();
                return Err(Error::parse(word, "unexpected token"));
            }
        };
        toks.push(tok);
        rest = rest[len..].trim_start();
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

fn describe(t: Option<&Tok>) -> String {
    match t {
        None => "end of input".into(),
        Some(Tok::Num(a)) => a.to_string(),
        Some(Tok::Class(c)) => c.to_string(),
        Some(Tok::Plus) => "+".into(),
        Some(Tok::Minus) => "-".into(),
        Some(Tok::Times) => "*".into(),
        Some(Tok::Open) => "(".into(),
        Some(Tok::Close) => ")".into(),
    }
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = self.term()?;
        while let Some(op @ (Tok::Plus | Tok::Minus)) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            let rhs = if op == Tok::Minus { negate(rhs) } else { rhs };
            acc = match (acc, rhs) {
                (Value::Num(a), Value::Num(b)) => Value::Num(a + b),
                (Value::Class(a), Value::Class(b)) => Value::Class(a + b),
                (Value::Num(x), Value::Class(_)) | (Value::Class(_), Value::Num(x)) => {
                    return Err(Error::parse(
                        x.to_string(),
                        "cannot add a number to a class, write it as `point a`",
                    ));
                }
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Tok::Times) {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = match (acc, rhs) {
                (Value::Num(a), Value::Num(b)) => Value::Num(a * b),
                (Value::Num(a), Value::Class(x)) | (Value::Class(x), Value::Num(a)) => {
                    Value::Class(a * x)
                }
                (Value::Class(x), Value::Class(y)) => Value::Class(bullet(x, y)),
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Value> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(negate(self.unary()?));
        }
        match self.next() {
            Some(Tok::Num(a)) => Ok(Value::Num(a)),
            Some(Tok::Class(c)) => Ok(Value::Class(c)),
            Some(Tok::Open) => {
                let v = self.expr()?;
                match self.next() {
                    Some(Tok::Close) => Ok(v),
                    t => Err(Error::parse(describe(t.as_ref()), "expected `)`")),
                }
            }
            t => Err(Error::parse(describe(t.as_ref()), "expected a number, a class or `(`")),
        }
    }
}

fn negate(v: Value) -> Value {
    match v {
        Value::Num(a) => Value::Num(-a),
        Value::Class(c) => Value::Class(-c),
    }
}

pub fn eval(src: &str) -> Result<Value> {
    let mut p = Parser {
        toks: tokenize(src)?,
        pos: 0,
    };
    let v = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(Error::parse(describe(p.peek()), "unexpected token after expression"));
    }
    Ok(v)
}
