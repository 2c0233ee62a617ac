//! Ordering and valuation specifications.
//!
//! ```text
//! ordering  := 'lex' | 'degrevlex' | 'neg_lex' | 'neg_deglex'
//!            | 'weight' '(' int (',' int)* ')'
//!            | 'matrix' '(' '[' row (',' row)* ']' ')'
//!            | 'block' '(' ordering ':' vars ';' ordering ':' vars ')'
//! row       := '[' int (',' int)* ']'
//! vars      := '[' name (',' name)* ']'
//! valuation := 'weight' '(' int (',' int)* ')' | 'divisibility' '(' name ')'
//!            | 'ordering' '(' ordering ')'
//! ```

use khovanskii::{MonomialOrdering, MonomialValuation, PolyRing};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecError {
    /// Byte offset into the specification.
    pub offset: usize,
    pub message: String,
}

type SpecResult<T> = Result<T, SpecError>;

#[derive(Debug, Clone, PartialEq, Eq)]
enum OrderingSpec {
    Lex,
    Degrevlex,
    NegLex,
    NegDeglex,
    Weight(Vec<i64>),
    Matrix(Vec<Vec<i64>>),
    Block(Box<OrderingSpec>, Vec<(String, usize)>, Box<OrderingSpec>, Vec<(String, usize)>),
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Self { text, pos: 0 }
    }

    fn error<T>(&self, message: impl Into<String>) -> SpecResult<T> {
        Err(SpecError { offset: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> SpecResult<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(d) => self.error(format!("expected `{c}`, found `{d}`")),
            None => self.error(format!("expected `{c}`, found end of input")),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> SpecResult<(String, usize)> {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..]
            .char_indices()
            .find(|&(i, c)| !(c == '_' || c.is_ascii_alphabetic() || (i > 0 && c.is_ascii_digit())))
            .map_or(self.text.len() - start, |(i, _)| i);
        if len == 0 {
            return self.error("expected a name");
        }
        self.pos += len;
        Ok((self.text[start..start + len].to_string(), start))
    }

    fn int(&mut self) -> SpecResult<i64> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.text.as_bytes();
        let mut end = start;
        if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
            end += 1;
        }
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        match self.text[start..end].parse() {
            Ok(n) => {
                self.pos = end;
                Ok(n)
            }
            Err(_) => self.error("expected an integer"),
        }
    }

    fn list<T>(
        &mut self,
        open: char,
        close: char,
        mut item: impl FnMut(&mut Self) -> SpecResult<T>,
    ) -> SpecResult<Vec<T>> {
        self.expect(open)?;
        let mut out = vec![item(self)?];
        while self.eat(',') {
            out.push(item(self)?);
        }
        self.expect(close)?;
        Ok(out)
    }

    fn finish(&mut self) -> SpecResult<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected `{c}`")),
        }
    }

    fn ordering(&mut self) -> SpecResult<OrderingSpec> {
        let (name, at) = self.ident()?;
        Ok(match name.as_str() {
            "lex" => OrderingSpec::Lex,
            "degrevlex" => OrderingSpec::Degrevlex,
            "neg_lex" => OrderingSpec::NegLex,
            "neg_deglex" => OrderingSpec::NegDeglex,
            "weight" => OrderingSpec::Weight(self.list('(', ')', Self::int)?),
            "matrix" => {
                self.expect('(')?;
                let rows = self.list('[', ']', |c| c.list('[', ']', Self::int))?;
                self.expect(')')?;
                OrderingSpec::Matrix(rows)
            }
            "block" => {
                self.expect('(')?;
                let first = self.ordering()?;
                self.expect(':')?;
                let first_vars = self.list('[', ']', Self::ident)?;
                self.expect(';')?;
                let second = self.ordering()?;
                self.expect(':')?;
                let second_vars = self.list('[', ']', Self::ident)?;
                self.expect(')')?;
                OrderingSpec::Block(Box::new(first), first_vars, Box::new(second), second_vars)
            }
            other => return Err(SpecError { offset: at, message: format!("unknown ordering `{other}`") }),
        })
    }
}

/// Builds `spec` on the ring variables `vars`, given as global indices.
fn build(spec: &OrderingSpec, ring: &PolyRing, vars: &[usize], at: usize) -> SpecResult<MonomialOrdering> {
    let n = vars.len();
    let lib = |r: khovanskii::Result<MonomialOrdering>| r.map_err(|e| SpecError { offset: at, message: e.to_string() });
    let sized = |w: &[i64]| {
        if w.len() == n {
            Ok(())
        } else {
            Err(SpecError { offset: at, message: format!("expected {n} weights, got {}", w.len()) })
        }
    };
    Ok(match spec {
        OrderingSpec::Lex => MonomialOrdering::lex(n),
        OrderingSpec::Degrevlex => MonomialOrdering::degrevlex(n),
        OrderingSpec::NegLex => MonomialOrdering::neg_lex(n),
        OrderingSpec::NegDeglex => MonomialOrdering::neg_deglex(n),
        OrderingSpec::Weight(w) => {
            sized(w)?;
            MonomialOrdering::weighted(w.clone())
        }
        OrderingSpec::Matrix(rows) => {
            for r in rows {
                sized(r)?;
            }
            lib(MonomialOrdering::matrix(rows.clone()))?
        }
        OrderingSpec::Block(first, first_vars, second, second_vars) => {
            let locate = |names: &[(String, usize)]| -> SpecResult<Vec<usize>> {
                names
                    .iter()
                    .map(|(name, pos)| {
                        let global = ring
                            .index_of(name)
                            .ok_or_else(|| SpecError { offset: *pos, message: format!("unknown variable `{name}`") })?;
                        vars.iter().position(|&v| v == global).ok_or_else(|| SpecError {
                            offset: *pos,
                            message: format!("variable `{name}` is outside the enclosing block"),
                        })
                    })
                    .collect()
            };
            let a = locate(first_vars)?;
            let b = locate(second_vars)?;
            let inner_a = build(first, ring, &a.iter().map(|&i| vars[i]).collect::<Vec<_>>(), at)?;
            let inner_b = build(second, ring, &b.iter().map(|&i| vars[i]).collect::<Vec<_>>(), at)?;
            lib(MonomialOrdering::block(inner_a, a, inner_b, b))?
        }
    })
}

pub fn parse_ordering(text: &str, ring: &PolyRing) -> SpecResult<MonomialOrdering> {
    let mut cur = Cursor::new(text);
    let spec = cur.ordering()?;
    cur.finish()?;
    build(&spec, ring, &(0..ring.nvars()).collect::<Vec<_>>(), 0)
}

pub fn parse_valuation(text: &str, ring: &PolyRing) -> SpecResult<MonomialValuation> {
    let mut cur = Cursor::new(text);
    let (name, at) = cur.ident()?;
    let v = match name.as_str() {
        "weight" => {
            let w = cur.list('(', ')', Cursor::int)?;
            if w.len() != ring.nvars() {
                return Err(SpecError {
                    offset: at,
                    message: format!("expected {} weights, got {}", ring.nvars(), w.len()),
                });
            }
            MonomialValuation::weight(w)
        }
        "divisibility" => {
            cur.expect('(')?;
            let (var, pos) = cur.ident()?;
            cur.expect(')')?;
            let i =
                ring.index_of(&var).ok_or(SpecError { offset: pos, message: format!("unknown variable `{var}`") })?;
            MonomialValuation::divisibility(ring.nvars(), i)
                .map_err(|e| SpecError { offset: at, message: e.to_string() })?
        }
        "ordering" => {
            cur.expect('(')?;
            let start = cur.pos;
            let end = text.trim_end().len();
            if end <= start || !text[..end].ends_with(')') {
                return Err(SpecError { offset: end, message: "expected `)`".into() });
            }
            cur.pos = end;
            let ord = parse_ordering(&text[start..end - 1], ring)
                .map_err(|e| SpecError { offset: start + e.offset, message: e.message })?;
            MonomialValuation::from_ordering(ord)
        }
        other => return Err(SpecError { offset: at, message: format!("unknown valuation `{other}`") }),
    };
    cur.finish()?;
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orderings() {
        let r = PolyRing::new(["x", "y", "z"]).unwrap();
        assert_eq!(parse_ordering("degrevlex", &r).unwrap(), MonomialOrdering::degrevlex(3));
        assert_eq!(parse_ordering(" weight(1, 2,3) ", &r).unwrap(), MonomialOrdering::weighted(vec![1, 2, 3]));
        let m = parse_ordering("matrix([[1,1,1],[0,0,-1],[0,-1,0]])", &r).unwrap();
        assert_eq!(m.rows().len(), 3);
        let b = parse_ordering("block(neg_lex:[z]; degrevlex:[x,y])", &r).unwrap();
        let expected =
            MonomialOrdering::block(MonomialOrdering::neg_lex(1), vec![2], MonomialOrdering::degrevlex(2), vec![0, 1])
                .unwrap();
        assert_eq!(b, expected);
        let nested = parse_ordering("block(lex:[x]; block(lex:[z]; lex:[y]))", &r);
        assert!(nested.is_err());
        assert!(parse_ordering("block(lex:[x]; block(lex:[z]; lex:[y]):[y,z])", &r).is_ok());
    }

    #[test]
    fn ordering_errors() {
        let r = PolyRing::new(["x", "y"]).unwrap();
        assert_eq!(parse_ordering("weight(1)", &r).unwrap_err().offset, 0);
        assert_eq!(parse_ordering("lex lex", &r).unwrap_err().offset, 4);
        let e = parse_ordering("block(lex:[x]; lex:[w])", &r).unwrap_err();
        assert_eq!(e.offset, 20);
        assert!(e.message.contains("unknown variable"));
        assert!(parse_ordering("spiral", &r).is_err());
    }

    #[test]
    fn valuations() {
        let r = PolyRing::new(["x", "y"]).unwrap();
        assert_eq!(parse_valuation("weight(0,1)", &r).unwrap(), MonomialValuation::weight(vec![0, 1]));
        assert_eq!(parse_valuation("divisibility(y)", &r).unwrap(), MonomialValuation::weight(vec![0, 1]));
        let v = parse_valuation("ordering(degrevlex)", &r).unwrap();
        assert_eq!(v.rank(), 2);
        assert!(parse_valuation("divisibility(z)", &r).is_err());
        assert!(parse_valuation("weight(1,2,3)", &r).is_err());
    }
}
