//! Line-oriented problem files and infix polynomial expressions.
//!
//! ```text
//! # comments run to end of line
//! ring: weyl 2            # or: commutative M N | sl2 | custom M N
//! bracket: y1, x1 = 1     # custom rings only: y_i x_j - x_j y_i
//! bracket: y1, y2 = y1    # custom rings only: y_i y_j - y_j y_i
//! ideal: y1^2 - y2; x1*y1 + 2*x2*y2
//! weight: 1,1,1,3
//! order: grevlex
//! ```
//!
//! Products are taken in the ring, so `y1*x1` means `x1*y1 + 1` in the
//! Weyl algebra. Implicit multiplication is rejected.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::filtration::WeightVector;
use crate::order::BaseOrder;
use crate::poly::{Poly, Rat};
use crate::ring::{validate_presentation, Multiplier, RingPresentation};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    col: usize,
}

fn lex(src: &str, line: usize, col0: usize) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token {
                tok: Tok::Num(s.parse().unwrap()),
                col,
            });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                col,
            });
        } else if "+-*/^()".contains(c) {
            out.push(Token { tok: Tok::Op(c), col });
            i += 1;
        } else {
            return Err(Error::parse(line, col, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct ExprParser<'a, 'r> {
    toks: Vec<Token>,
    pos: usize,
    line: usize,
    end_col: usize,
    mul: &'a mut Multiplier<'r>,
}

impl ExprParser<'_, '_> {
    fn ring(&self) -> &RingPresentation {
        self.mul.ring()
    }

    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn col(&self) -> usize {
        self.peek().map_or(self.end_col, |t| t.col)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::parse(self.line, self.col(), msg))
    }

    fn expr(&mut self, min_bp: u8) -> Result<Poly> {
        let mut lhs = self.prefix()?;
        loop {
            let Some(t) = self.peek() else { break };
            let op = match &t.tok {
                Tok::Op(c) if *c != '(' => *c,
                Tok::Op(_) | Tok::Num(_) | Tok::Ident(_) => {
                    return self.err("implicit multiplication is not allowed; use '*'");
                }
            };
            let (l_bp, r_bp) = match op {
                '+' | '-' => (1, 2),
                '*' | '/' => (3, 4),
                '^' => (7, 6),
                ')' => break,
                _ => unreachable!(),
            };
            if l_bp < min_bp {
                break;
            }
            self.pos += 1;
            if op == '^' {
                let col = self.col();
                let e = self.expr(r_bp)?;
                let e = match e.as_constant() {
                    Some(c) if c.is_integer() && !c.is_negative() => c.to_integer().to_u32(),
                    _ if e.is_zero() => Some(0),
                    _ => None,
                };
                let Some(e) = e else {
                    return Err(Error::parse(
                        self.line,
                        col,
                        "exponent must be a nonnegative integer",
                    ));
                };
                lhs = self.pow(&lhs, e);
                continue;
            }
            let col = self.col();
            let rhs = self.expr(r_bp)?;
            lhs = match op {
                '+' => &lhs + &rhs,
                '-' => &lhs - &rhs,
                '*' => self.mul.mul(&lhs, &rhs),
                '/' => match rhs.as_constant() {
                    Some(c) => lhs.scale(&c.recip()),
                    None if rhs.is_zero() => {
                        return Err(Error::parse(self.line, col, "division by zero"));
                    }
                    None => {
                        return Err(Error::parse(
                            self.line,
                            col,
                            "only division by nonzero constants is supported",
                        ));
                    }
                },
                _ => unreachable!(),
            };
        }
        Ok(lhs)
    }

    fn pow(&mut self, f: &Poly, e: u32) -> Poly {
        let mut acc = Poly::one(self.ring().nvars());
        for _ in 0..e {
            acc = self.mul.mul(&acc, f);
        }
        acc
    }

    fn prefix(&mut self) -> Result<Poly> {
        let nv = self.ring().nvars();
        let Some(t) = self.peek().cloned() else {
            return self.err("unexpected end of expression");
        };
        self.pos += 1;
        match t.tok {
            Tok::Num(n) => Ok(Poly::constant(nv, Rat::from_integer(n))),
            Tok::Ident(name) => match self.ring().names().iter().position(|v| *v == name) {
                Some(i) => Ok(Poly::var(nv, i)),
                None => Err(Error::parse(
                    self.line,
                    t.col,
                    format!("unknown variable '{name}'"),
                )),
            },
            Tok::Op('-') => Ok(-&self.expr(5)?),
            Tok::Op('+') => self.expr(5),
            Tok::Op('(') => {
                let inner = self.expr(0)?;
                match self.peek() {
                    Some(Token { tok: Tok::Op(')'), .. }) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected ')'"),
                }
            }
            Tok::Op(c) => Err(Error::parse(self.line, t.col, format!("unexpected '{c}'"))),
        }
    }
}

fn parse_expr_at(mul: &mut Multiplier<'_>, src: &str, line: usize, col0: usize) -> Result<Poly> {
    let toks = lex(src, line, col0)?;
    let end_col = col0 + src.chars().count();
    let mut p = ExprParser {
        toks,
        pos: 0,
        line,
        end_col,
        mul,
    };
    let f = p.expr(0)?;
    if p.peek().is_some() {
        return p.err("unexpected ')'");
    }
    Ok(f)
}

/// Parses one expression in the ring; errors report line 1.
pub fn parse_poly(ring: &RingPresentation, src: &str) -> Result<Poly> {
    let mut mul = Multiplier::new(ring);
    parse_expr_at(&mut mul, src, 1, 1)
}

/// Parses `;`-separated generators.
pub fn parse_ideal(ring: &RingPresentation, src: &str) -> Result<Vec<Poly>> {
    let mut mul = Multiplier::new(ring);
    parse_list(&mut mul, src, 1, 1)
}

fn parse_list(mul: &mut Multiplier<'_>, src: &str, line: usize, col0: usize) -> Result<Vec<Poly>> {
    let mut out = Vec::new();
    let mut col = col0;
    for part in src.split(';') {
        if !part.trim().is_empty() {
            let f = parse_expr_at(mul, part, line, col)?;
            if !f.is_zero() {
                out.push(f);
            }
        }
        col += part.chars().count() + 1;
    }
    Ok(out)
}

fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let d: BigInt = b.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(a.trim().parse().ok()?, d))
        }
        None => Some(Rat::from_integer(s.parse().ok()?)),
    }
}

/// Parses a comma-separated list of integers or `p/q` rationals.
pub fn parse_rat_list(s: &str) -> Result<Vec<Rat>> {
    s.split(',')
        .map(|t| parse_rat(t).ok_or_else(|| Error::InvalidInput(format!("bad number '{}'", t.trim()))))
        .collect()
}

/// Parses `u1,..,um,v1,..,vn` for the given ring.
pub fn parse_weight(ring: &RingPresentation, s: &str) -> Result<WeightVector> {
    let flat = parse_rat_list(s)?;
    if flat.len() != ring.nvars() {
        return Err(Error::DimensionMismatch {
            expected: ring.nvars(),
            got: flat.len(),
        });
    }
    Ok(WeightVector::from_flat(ring.m(), &flat))
}

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub ring: RingPresentation,
    pub generators: Vec<Poly>,
    pub weights: Vec<WeightVector>,
    pub order: Option<BaseOrder>,
}

fn parse_usize(tok: Option<&str>, line: usize, col: usize, what: &str) -> Result<usize> {
    tok.and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(line, col, format!("expected {what}")))
}

fn parse_ring(rest: &str, line: usize, col: usize) -> Result<(RingPresentation, bool)> {
    let mut it = rest.split_whitespace();
    let kind = it.next().unwrap_or("");
    let ring = match kind {
        "weyl" => {
            let n = parse_usize(it.next(), line, col, "number of variable pairs")?;
            let r = RingPresentation::weyl(n).map_err(|e| Error::parse(line, col, e.to_string()))?;
            (r, false)
        }
        "commutative" => {
            let m = parse_usize(it.next(), line, col, "number of x variables")?;
            let n = parse_usize(it.next(), line, col, "number of y variables")?;
            (RingPresentation::commutative(m, n), false)
        }
        "custom" => {
            let m = parse_usize(it.next(), line, col, "number of x variables")?;
            let n = parse_usize(it.next(), line, col, "number of y variables")?;
            (RingPresentation::commutative(m, n), true)
        }
        "sl2" => (RingPresentation::sl2(), false),
        _ => {
            return Err(Error::parse(
                line,
                col,
                "expected weyl N, commutative M N, custom M N or sl2",
            ))
        }
    };
    if let Some(extra) = it.next() {
        return Err(Error::parse(line, col, format!("unexpected '{extra}'")));
    }
    Ok(ring)
}

impl ProblemFile {
    pub fn parse(src: &str) -> Result<Self> {
        let mut ring: Option<(RingPresentation, bool)> = None;
        let mut brackets_seen = false;
        let mut validated = false;
        let mut gens = Vec::new();
        let mut weights = Vec::new();
        let mut order = None;
        for (ln, raw) in src.lines().enumerate() {
            let line = ln + 1;
            let text = raw.split('#').next().unwrap();
            if text.trim().is_empty() {
                continue;
            }
            let Some((key, rest)) = text.split_once(':') else {
                let col = text.len() - text.trim_start().len() + 1;
                return Err(Error::parse(line, col, "expected 'key: value'"));
            };
            let key = key.trim();
            let col = key.len() + 2 + (text.len() - text.trim_start().len());
            if key != "ring" && ring.is_none() {
                return Err(Error::parse(line, 1, "'ring:' must come first"));
            }
            match key {
                "ring" => {
                    if ring.is_some() {
                        return Err(Error::parse(line, 1, "duplicate 'ring:'"));
                    }
                    ring = Some(parse_ring(rest, line, col)?);
                }
                "bracket" => {
                    let (r, custom) = ring.as_mut().unwrap();
                    if !*custom {
                        return Err(Error::parse(line, 1, "brackets need a custom ring"));
                    }
                    if validated {
                        return Err(Error::parse(line, 1, "brackets must precede the ideal"));
                    }
                    set_bracket(r, rest, line, col)?;
                    brackets_seen = true;
                }
                "ideal" => {
                    let (r, custom) = ring.as_ref().unwrap();
                    if *custom && brackets_seen && !validated && !validate_presentation(r) {
                        return Err(Error::parse(
                            line,
                            1,
                            "brackets violate the associativity conditions",
                        ));
                    }
                    validated = true;
                    let mut mul = Multiplier::new(r);
                    gens.extend(parse_list(&mut mul, rest, line, col)?);
                }
                "weight" => {
                    let (r, _) = ring.as_ref().unwrap();
                    let w = parse_weight(r, rest).map_err(|e| Error::parse(line, col, e.to_string()))?;
                    weights.push(w);
                }
                "order" => {
                    let o = rest
                        .trim()
                        .parse::<BaseOrder>()
                        .map_err(|e| Error::parse(line, col, e.to_string()))?;
                    order = Some(o);
                }
                _ => return Err(Error::parse(line, 1, format!("unknown key '{key}'"))),
            }
        }
        let Some((ring, custom)) = ring else {
            return Err(Error::parse(1, 1, "missing 'ring:'"));
        };
        if custom && !validated && !validate_presentation(&ring) {
            return Err(Error::parse(1, 1, "brackets violate the associativity conditions"));
        }
        Ok(ProblemFile {
            ring,
            generators: gens,
            weights,
            order,
        })
    }
}

fn set_bracket(ring: &mut RingPresentation, rest: &str, line: usize, col: usize) -> Result<()> {
    let Some((lhs, rhs)) = rest.split_once('=') else {
        return Err(Error::parse(line, col, "expected 'a, b = expr'"));
    };
    let names: Vec<&str> = lhs.split(',').map(str::trim).collect();
    if names.len() != 2 {
        return Err(Error::parse(line, col, "expected two generators before '='"));
    }
    let find = |s: &str| ring.names().iter().position(|v| v == s);
    let (Some(a), Some(b)) = (find(names[0]), find(names[1])) else {
        return Err(Error::parse(line, col, "unknown generator in bracket"));
    };
    let m = ring.m();
    // Entries are written as standard expressions, so parse them in the
    // commutative ring on the same names.
    let flat = RingPresentation::commutative(m, ring.n())
        .with_names(ring.names().to_vec())
        .expect("same arity");
    let mut mul = Multiplier::new(&flat);
    let rcol = col + lhs.chars().count() + 1;
    let p = parse_expr_at(&mut mul, rhs, line, rcol)?;
    let mut next = ring.clone();
    match (a >= m, b >= m) {
        (true, false) => next.set_bracket_yx(a - m, b, p),
        (false, true) => next.set_bracket_yx(b - m, a, -&p),
        (true, true) if a != b => next.set_bracket_yy(a - m, b - m, p),
        _ => return Err(Error::parse(line, col, "bracket needs a y with an x or two distinct y's")),
    }
    // Re-run the shape and degree checks of the constructor.
    let (t1, t2) = next.tables();
    let checked = RingPresentation::new(m, next.n(), t1, t2)
        .and_then(|r| r.with_names(next.names().to_vec()))
        .map_err(|e| Error::parse(line, rcol, e.to_string()))?;
    *ring = checked;
    Ok(())
}
