//! Polynomial text: sums and products of rational constants and variables
//! `x1, x2, ...`, with `^` for non-negative integer powers.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('+' | '-') unary | power
//! power := atom ('^' integer)?
//! atom  := integer | 'x' integer | '(' expr ')'
//! ```
//!
//! Division is only by nonzero constants, so `1/2*x1` is a rational
//! coefficient.

use halfdeg_core::{MultiPoly, Rational};
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(q) => format!("number {q}"),
            Tok::Var(i) => format!("variable x{i}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Open => "'('".into(),
            Tok::Close => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = text.chars().peekable();
    let err = |line, column, message: String| ParseError {
        line,
        column,
        message,
    };
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::Open),
            ')' => Some(Tok::Close),
            _ => None,
        };
        let tok = if let Some(t) = simple {
            bump(&mut chars);
            t
        } else if c.is_ascii_digit() {
            let mut digits = String::new();
            while chars.peek().is_some_and(char::is_ascii_digit) {
                digits.push(bump(&mut chars).unwrap());
            }
            Tok::Num(digits.parse().expect("digits"))
        } else if c == 'x' {
            bump(&mut chars);
            let mut digits = String::new();
            while chars.peek().is_some_and(char::is_ascii_digit) {
                digits.push(bump(&mut chars).unwrap());
            }
            match digits.parse::<usize>() {
                Ok(i) if i >= 1 => Tok::Var(i),
                _ => return Err(err(l, col, "expected variable index >= 1 after 'x'".into())),
            }
        } else {
            return Err(err(l, col, format!("unexpected character {c:?}")));
        };
        out.push(Spanned {
            tok,
            line: l,
            column: col,
        });
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    n: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, at: &Spanned, message: String) -> ParseError {
        ParseError {
            line: at.line,
            column: at.column,
            message,
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.next();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.next();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    let at = self.next();
                    let d = self.unary()?;
                    if !d.is_constant() || d.constant_term().is_zero() {
                        return Err(self.error_at(&at, "can only divide by a nonzero constant".into()));
                    }
                    acc = acc.scale(&d.constant_term().recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek().tok {
            Tok::Minus => {
                self.next();
                Ok(-&self.unary()?)
            }
            Tok::Plus => {
                self.next();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.next();
        let at = self.next();
        match &at.tok {
            Tok::Num(e) if e.is_integer() => match u32::try_from(e.to_integer()) {
                Ok(e) => Ok(base.pow(e)),
                Err(_) => Err(self.error_at(&at, format!("exponent {e} is too large"))),
            },
            other => Err(self.error_at(
                &at,
                format!("expected integer exponent, found {}", other.describe()),
            )),
        }
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        let at = self.next();
        match at.tok.clone() {
            Tok::Num(q) => Ok(MultiPoly::constant(self.n, q)),
            Tok::Var(i) if i <= self.n => Ok(MultiPoly::var(self.n, i - 1)),
            Tok::Var(i) => Err(self.error_at(
                &at,
                format!("variable x{i} out of range for n = {}", self.n),
            )),
            Tok::Open => {
                let inner = self.expr()?;
                let close = self.next();
                if close.tok != Tok::Close {
                    return Err(self.error_at(
                        &close,
                        format!("expected ')', found {}", close.tok.describe()),
                    ));
                }
                Ok(inner)
            }
            other => Err(self.error_at(&at, format!("unexpected {}", other.describe()))),
        }
    }
}

/// Parses `text` as a polynomial in `x1..xn`. Without `n`, the largest
/// variable index that occurs is used (at least 1).
pub fn parse_polynomial(text: &str, n: Option<usize>) -> Result<MultiPoly, ParseError> {
    let toks = tokenize(text)?;
    let n = n.unwrap_or_else(|| {
        toks.iter()
            .filter_map(|t| match t.tok {
                Tok::Var(i) => Some(i),
                _ => None,
            })
            .max()
            .unwrap_or(1)
    });
    let mut p = Parser { toks, pos: 0, n };
    let out = p.expr()?;
    let end = p.peek().clone();
    if end.tok != Tok::End {
        return Err(p.error_at(&end, format!("unexpected {}", end.tok.describe())));
    }
    Ok(out)
}

/// Parses a comma separated list of integers or `p/q` fractions.
pub fn parse_rationals(text: &str) -> Result<Vec<Rational>, ParseError> {
    let mut column = 1;
    let mut out = Vec::new();
    for item in text.split(',') {
        let trimmed = item.trim();
        let value = trimmed.parse::<Rational>().map_err(|_| ParseError {
            line: 1,
            column: column + item.len() - item.trim_start().len(),
            message: format!("expected a rational number, found {trimmed:?}"),
        })?;
        out.push(value);
        column += item.chars().count() + 1;
    }
    Ok(out)
}
