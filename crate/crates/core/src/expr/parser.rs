use std::fmt;

use super::{IdealSpec, RingExpr, SubsetSpec};
use crate::ring::ElemLit;

/// Syntax error with its 1-based position and the tokens that would have
/// been accepted there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at line {}, column {}: expected ", self.line, self.column)?;
        match self.expected.as_slice() {
            [one] => write!(f, "{one}")?,
            many => write!(f, "one of {}", many.join(", "))?,
        }
        write!(f, ", found {}", self.found)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    Punct(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(v) => write!(f, "`{v}`"),
            Tok::Punct(c) => write!(f, "`{c}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() || (c == '-' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let v = s.parse().map_err(|_| ParseError {
                line: l0,
                column: c0,
                expected: vec!["an integer that fits in 64 bits".into()],
                found: format!("`{s}`"),
            })?;
            Tok::Int(v)
        } else if c == 'Z' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit()) {
            // `Z36` is the keyword `Z` followed by a number
            i += 1;
            Tok::Ident("Z".into())
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if "()[],".contains(c) {
            i += 1;
            Tok::Punct(c)
        } else {
            return Err(ParseError {
                line: l0,
                column: c0,
                expected: vec!["a ring expression token".into()],
                found: format!("`{c}`"),
            });
        };
        column += i - start;
        out.push(Token {
            tok,
            line: l0,
            column: c0,
        });
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

const RING_STARTS: [&str; 8] = ["`Z`", "`M`", "`quot`", "`idealize`", "`amalg`", "`trunc`", "`idealring`", "`(`"];

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn new(text: &str) -> PResult<Parser> {
        Ok(Parser { toks: lex(text)?, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn fail<T>(&self, expected: &[&str]) -> PResult<T> {
        let t = &self.toks[self.pos];
        Err(ParseError {
            line: t.line,
            column: t.column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: t.tok.to_string(),
        })
    }

    fn punct(&mut self, c: char) -> PResult<()> {
        if self.peek() == &Tok::Punct(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(&[&format!("`{c}`")])
        }
    }

    fn keyword(&mut self, k: &str) -> PResult<()> {
        if matches!(self.peek(), Tok::Ident(s) if s == k) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(&[&format!("`{k}`")])
        }
    }

    fn uint(&mut self) -> PResult<usize> {
        match *self.peek() {
            Tok::Int(v) if v >= 0 => {
                self.pos += 1;
                Ok(v as usize)
            }
            _ => self.fail(&["a non-negative integer"]),
        }
    }

    fn end(&mut self) -> PResult<()> {
        if self.peek() == &Tok::Eof {
            Ok(())
        } else {
            self.fail(&["end of input"])
        }
    }

    fn ring(&mut self) -> PResult<RingExpr> {
        let mut left = self.atom()?;
        while matches!(self.peek(), Tok::Ident(s) if s == "x") {
            self.pos += 1;
            let right = self.atom()?;
            left = RingExpr::Prod(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn atom(&mut self) -> PResult<RingExpr> {
        let name = match self.peek().clone() {
            Tok::Ident(s) => s,
            Tok::Punct('(') => {
                self.pos += 1;
                let e = self.ring()?;
                self.punct(')')?;
                return Ok(e);
            }
            _ => return self.fail(&RING_STARTS),
        };
        self.pos += 1;
        let e = match name.as_str() {
            "Z" => RingExpr::Zn(self.uint()?),
            "M" => {
                self.punct('(')?;
                let k = self.uint()?;
                self.punct(',')?;
                let e = self.ring()?;
                self.punct(')')?;
                RingExpr::Mat(k, Box::new(e))
            }
            "quot" | "idealring" => {
                self.punct('(')?;
                let e = self.ring()?;
                self.punct(',')?;
                let i = self.ideal()?;
                self.punct(')')?;
                if name == "quot" {
                    RingExpr::Quot(Box::new(e), i)
                } else {
                    RingExpr::IdealRing(Box::new(e), i)
                }
            }
            "idealize" | "trunc" => {
                self.punct('(')?;
                let e = self.ring()?;
                self.punct(',')?;
                let k = self.uint()?;
                self.punct(')')?;
                if name == "idealize" {
                    RingExpr::Idealize(Box::new(e), k)
                } else {
                    RingExpr::Trunc(Box::new(e), k)
                }
            }
            "amalg" => {
                self.punct('(')?;
                let a = self.ring()?;
                self.punct(',')?;
                let b = self.ring()?;
                self.punct(',')?;
                self.keyword("mod")?;
                self.punct(',')?;
                let i = self.ideal()?;
                self.punct(')')?;
                RingExpr::Amalg(Box::new(a), Box::new(b), i)
            }
            _ => {
                self.pos -= 1;
                return self.fail(&RING_STARTS);
            }
        };
        Ok(e)
    }

    fn elem_list(&mut self, close: char) -> PResult<Vec<ElemLit>> {
        let mut items = Vec::new();
        if self.peek() == &Tok::Punct(close) {
            self.pos += 1;
            return Ok(items);
        }
        loop {
            items.push(self.elem()?);
            match self.peek() {
                Tok::Punct(',') => self.pos += 1,
                Tok::Punct(c) if *c == close => {
                    self.pos += 1;
                    return Ok(items);
                }
                _ => return self.fail(&["`,`", &format!("`{close}`")]),
            }
        }
    }

    fn elem(&mut self) -> PResult<ElemLit> {
        match self.peek().clone() {
            Tok::Int(v) => {
                self.pos += 1;
                Ok(ElemLit::Int(v))
            }
            Tok::Punct('(') => {
                self.pos += 1;
                let items = self.elem_list(')')?;
                if items.len() < 2 {
                    return self.fail(&["a tuple of at least two elements"]);
                }
                Ok(ElemLit::Tuple(items))
            }
            Tok::Punct('[') => {
                self.pos += 1;
                let mut rows = Vec::new();
                loop {
                    self.punct('[')?;
                    rows.push(self.elem_list(']')?);
                    match self.peek() {
                        Tok::Punct(',') => self.pos += 1,
                        Tok::Punct(']') => {
                            self.pos += 1;
                            return Ok(ElemLit::Matrix(rows));
                        }
                        _ => return self.fail(&["`,`", "`]`"]),
                    }
                }
            }
            Tok::Ident(s) if s == "poly" => {
                self.pos += 1;
                self.punct('(')?;
                Ok(ElemLit::Poly(self.elem_list(')')?))
            }
            _ => self.fail(&["an integer", "`(`", "`[`", "`poly`"]),
        }
    }

    fn ideal(&mut self) -> PResult<IdealSpec> {
        self.keyword("gen")?;
        self.punct('(')?;
        Ok(IdealSpec(self.elem_list(')')?))
    }

    fn subset(&mut self) -> PResult<SubsetSpec> {
        match self.peek() {
            Tok::Ident(s) if s == "mulclosed" || s == "gen_s" => {
                let closed = s == "mulclosed";
                self.pos += 1;
                self.punct('(')?;
                let items = self.elem_list(')')?;
                Ok(if closed {
                    SubsetSpec::MulClosed(items)
                } else {
                    SubsetSpec::GenS(items)
                })
            }
            _ => self.fail(&["`mulclosed`", "`gen_s`"]),
        }
    }
}

pub fn parse_ring_expr(text: &str) -> PResult<RingExpr> {
    let mut p = Parser::new(text)?;
    let e = p.ring()?;
    p.end()?;
    Ok(e)
}

pub fn parse_ideal_spec(text: &str) -> PResult<IdealSpec> {
    let mut p = Parser::new(text)?;
    let i = p.ideal()?;
    p.end()?;
    Ok(i)
}

pub fn parse_subset_spec(text: &str) -> PResult<SubsetSpec> {
    let mut p = Parser::new(text)?;
    let s = p.subset()?;
    p.end()?;
    Ok(s)
}

pub fn parse_elem(text: &str) -> PResult<ElemLit> {
    let mut p = Parser::new(text)?;
    let e = p.elem()?;
    p.end()?;
    Ok(e)
}
