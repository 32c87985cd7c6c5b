use super::{BinOp, Expr, Func, ParseError};

// Nesting bound keeps recursion depth finite on adversarial input.
const MAX_DEPTH: usize = 256;
/// Bound on the height of the parsed tree, so recursive evaluation and
/// printing stay shallow. Printing uses at most two nesting levels per tree
/// level, so every accepted tree prints to text within `MAX_DEPTH`.
pub const MAX_HEIGHT: usize = 100;

/// An expression with the height of its tree.
type Node = (Expr, usize);

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(v) => format!("number {v}"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::End => "end of input".to_string(),
        }
    }
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn err(&self, offset: usize, expected: &str, found: String) -> ParseError {
        ParseError {
            offset,
            expected: expected.to_string(),
            found,
        }
    }

    /// Next token and its starting byte offset.
    fn next(&mut self) -> Result<(Tok, usize), ParseError> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(&b) = bytes.get(self.pos) else {
            return Ok((Tok::End, start));
        };
        if b.is_ascii_digit() || b == b'.' {
            return self.number(start);
        }
        if b.is_ascii_alphabetic() || b == b'_' {
            while self.pos < bytes.len()
                && (bytes[self.pos].is_ascii_alphanumeric() || bytes[self.pos] == b'_')
            {
                self.pos += 1;
            }
            return Ok((Tok::Ident(self.src[start..self.pos].to_string()), start));
        }
        if matches!(b, b'+' | b'-' | b'*' | b'/' | b'^' | b'(' | b')' | b',') {
            self.pos += 1;
            return Ok((Tok::Sym(b as char), start));
        }
        let ch = self.src[start..].chars().next().unwrap_or('?');
        Err(self.err(start, "a token", format!("character {ch:?}")))
    }

    fn number(&mut self, start: usize) -> Result<(Tok, usize), ParseError> {
        let bytes = self.src.as_bytes();
        let digits = |pos: &mut usize| {
            let s = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            *pos - s
        };
        let mut n = digits(&mut self.pos);
        if self.pos < bytes.len() && bytes[self.pos] == b'.' {
            self.pos += 1;
            n += digits(&mut self.pos);
        }
        if n == 0 {
            return Err(self.err(start, "a digit", "`.`".to_string()));
        }
        if self.pos < bytes.len() && (bytes[self.pos] == b'e' || bytes[self.pos] == b'E') {
            self.pos += 1;
            if self.pos < bytes.len() && (bytes[self.pos] == b'+' || bytes[self.pos] == b'-') {
                self.pos += 1;
            }
            if digits(&mut self.pos) == 0 {
                let found = match bytes.get(self.pos) {
                    Some(&c) => format!("{:?}", c as char),
                    None => "end of input".to_string(),
                };
                return Err(self.err(self.pos, "exponent digits", found));
            }
        }
        let text = &self.src[start..self.pos];
        let v: f64 = text
            .parse()
            .map_err(|_| self.err(start, "a decimal literal", format!("`{text}`")))?;
        if !v.is_finite() {
            return Err(self.err(start, "a finite literal", format!("`{text}`")));
        }
        Ok((Tok::Num(v), start))
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Tok,
    at: usize,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn bump(&mut self) -> Result<(), ParseError> {
        let (tok, at) = self.lexer.next()?;
        self.tok = tok;
        self.at = at;
        Ok(())
    }

    fn fail<T>(&self, expected: &str) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.at,
            expected: expected.to_string(),
            found: self.tok.describe(),
        })
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.tok == Tok::Sym(c) {
            self.bump()
        } else {
            self.fail(&format!("`{c}`"))
        }
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return self.fail("shallower nesting");
        }
        Ok(())
    }

    fn grow(&self, e: Expr, height: usize) -> Result<Node, ParseError> {
        if height > MAX_HEIGHT {
            return self.fail("a shallower expression");
        }
        Ok((e, height))
    }

    fn binary(&self, op: BinOp, (l, hl): Node, (r, hr): Node) -> Result<Node, ParseError> {
        self.grow(Expr::binary(op, l, r), hl.max(hr) + 1)
    }

    fn expr(&mut self) -> Result<Node, ParseError> {
        self.enter()?;
        let mut lhs = self.term()?;
        loop {
            let op = match self.tok {
                Tok::Sym('+') => BinOp::Add,
                Tok::Sym('-') => BinOp::Sub,
                _ => break,
            };
            self.bump()?;
            let rhs = self.term()?;
            lhs = self.binary(op, lhs, rhs)?;
        }
        self.depth -= 1;
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Node, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.tok {
                Tok::Sym('*') => BinOp::Mul,
                Tok::Sym('/') => BinOp::Div,
                _ => break,
            };
            self.bump()?;
            let rhs = self.unary()?;
            lhs = self.binary(op, lhs, rhs)?;
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Node, ParseError> {
        if self.tok == Tok::Sym('-') {
            self.enter()?;
            self.bump()?;
            let (inner, h) = self.unary()?;
            self.depth -= 1;
            return self.grow(Expr::Neg(Box::new(inner)), h + 1);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Node, ParseError> {
        let base = self.atom()?;
        if self.tok == Tok::Sym('^') {
            self.enter()?;
            self.bump()?;
            let exponent = self.unary()?;
            self.depth -= 1;
            return self.binary(BinOp::Pow, base, exponent);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Node, ParseError> {
        match self.tok.clone() {
            Tok::Num(v) => {
                self.bump()?;
                Ok((Expr::Const(v), 1))
            }
            Tok::Ident(name) if name == "x" => {
                self.bump()?;
                Ok((Expr::Var, 1))
            }
            Tok::Ident(name) => {
                let Some(func) = Func::from_name(&name) else {
                    return self.fail("`x` or a function name (exp, log, sin, cos, abs, sqrt, pow, min, max)");
                };
                self.bump()?;
                self.expect('(')?;
                let (first, mut h) = self.expr()?;
                let mut args = vec![first];
                while self.tok == Tok::Sym(',') {
                    if args.len() == func.arity() {
                        return self.fail("`)`");
                    }
                    self.bump()?;
                    let (arg, ha) = self.expr()?;
                    args.push(arg);
                    h = h.max(ha);
                }
                if args.len() != func.arity() {
                    return self.fail(&format!("`,` ({} takes {} arguments)", func.name(), func.arity()));
                }
                self.expect(')')?;
                self.grow(Expr::Call { func, args }, h + 1)
            }
            Tok::Sym('(') => {
                self.bump()?;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            _ => self.fail("an expression"),
        }
    }
}

/// Parse a one-variable expression.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        lexer: Lexer { src: text, pos: 0 },
        tok: Tok::End,
        at: 0,
        depth: 0,
    };
    p.bump()?;
    let (e, _) = p.expr()?;
    if p.tok != Tok::End {
        return p.fail("an operator or end of input");
    }
    Ok(e)
}
