use super::{Atom, GroupExpr};
use crate::constructors::{ActionSpec, Matrix, ModuleSpec, Sign};
use crate::error::{Error, Result};

const ATOMS: [&str; 10] = [
    "C(", "EA(", "Homocyclic(", "D(", "Q8", "ES(", "SL23", "Sz8Borel", "A5", "sdp(",
];

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

/// Parses one group expression; errors carry the 1-based line and column
/// of the offending position and the tokens that would have been accepted.
pub fn parse_group_expr(text: &str) -> Result<GroupExpr> {
    let mut p = Parser { text, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.error(&["'*'", "end of input"]));
    }
    Ok(e)
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        loop {
            let r = self.rest();
            let trimmed = r.trim_start();
            self.pos += r.len() - trimmed.len();
            if trimmed.starts_with('#') {
                self.pos += trimmed.find('\n').unwrap_or(trimmed.len());
            } else {
                break;
            }
        }
    }

    fn error(&self, expected: &[&str]) -> Error {
        let before = &self.text[..self.pos];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        Error::Parse {
            line,
            column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// Consumes `token` after optional whitespace.
    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&[&format!("'{token}'")]))
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error(&["number"]));
        }
        let n = self.rest()[..digits]
            .parse()
            .map_err(|_| self.error(&["number below 2^64"]))?;
        self.pos += digits;
        Ok(n)
    }

    fn expr(&mut self) -> Result<GroupExpr> {
        let mut factors = vec![self.term()?];
        while self.eat("*") {
            factors.push(self.term()?);
        }
        Ok(GroupExpr::direct(factors))
    }

    fn args2(&mut self) -> Result<(u64, u64)> {
        let a = self.number()?;
        self.expect(",")?;
        let b = self.number()?;
        self.expect(")")?;
        Ok((a, b))
    }

    fn term(&mut self) -> Result<GroupExpr> {
        self.skip_ws();
        let atom = if self.eat("sdp(") {
            return self.sdp();
        } else if self.eat("C(") {
            let n = self.number()?;
            self.expect(")")?;
            Atom::Cyclic(n)
        } else if self.eat("EA(") {
            let (p, k) = self.args2()?;
            Atom::ElementaryAbelian(p, k)
        } else if self.eat("Homocyclic(") {
            let (m, k) = self.args2()?;
            Atom::Homocyclic(m, k)
        } else if self.eat("D(") {
            let n = self.number()?;
            self.expect(")")?;
            Atom::Dihedral(n)
        } else if self.eat("ES(") {
            let p = self.number()?;
            self.expect(",")?;
            let sign = if self.eat("+") {
                Sign::Plus
            } else if self.eat("-") {
                Sign::Minus
            } else {
                return Err(self.error(&["'+'", "'-'"]));
            };
            self.expect(")")?;
            Atom::Extraspecial(p, sign)
        } else if self.eat("Q8") {
            Atom::Quaternion8
        } else if self.eat("SL23") {
            Atom::SL23
        } else if self.eat("Sz8Borel") {
            Atom::Sz8Borel
        } else if self.eat("A5") {
            Atom::Alt5
        } else {
            let expected: Vec<String> = ATOMS.iter().map(|a| format!("'{a}'")).collect();
            let refs: Vec<&str> = expected.iter().map(String::as_str).collect();
            return Err(self.error(&refs));
        };
        Ok(GroupExpr::Atom(atom))
    }

    fn sdp(&mut self) -> Result<GroupExpr> {
        let module = self.module()?;
        self.expect(",")?;
        let actor = self.expr()?;
        self.expect(",")?;
        let action = self.action()?;
        self.expect(")")?;
        Ok(GroupExpr::Sdp {
            module,
            actor: Box::new(actor),
            action,
        })
    }

    fn module(&mut self) -> Result<ModuleSpec> {
        let start = self.pos;
        let mut factors = Vec::new();
        loop {
            let block = if self.eat("(") {
                let m = self.number()?;
                let mut rank = 1u32;
                while self.eat("x") {
                    let at = self.pos;
                    if self.number()? != m {
                        self.pos = at;
                        self.skip_ws();
                        return Err(self.error(&[&format!("{m}")]));
                    }
                    rank += 1;
                }
                if rank == 1 {
                    return Err(self.error(&["'x'"]));
                }
                self.expect(")")?;
                (m, rank)
            } else {
                (self.number().map_err(|_| self.error(&["number", "'('"]))?, 1)
            };
            let copies = if self.eat("^") { self.number()? } else { 1 };
            if copies == 0 || copies > 64 {
                return Err(self.error(&["exponent between 1 and 64"]));
            }
            factors.extend(std::iter::repeat(block).take(copies as usize));
            if !self.eat("x") {
                break;
            }
        }
        ModuleSpec::new(factors).map_err(|_| {
            let mut at = Parser { text: self.text, pos: start };
            at.skip_ws();
            at.error(&["moduli >= 2"])
        })
    }

    fn action(&mut self) -> Result<ActionSpec> {
        if self.eat("maxker") {
            return Ok(ActionSpec::MaximalKernels);
        }
        if self.eat("trivial") {
            return Ok(ActionSpec::Trivial);
        }
        if !self.eat("mats(") {
            return Err(self.error(&["'maxker'", "'trivial'", "'mats('"]));
        }
        let mut gens = Vec::new();
        loop {
            self.expect("{")?;
            let mut blocks = vec![self.matrix()?];
            while self.eat(",") {
                blocks.push(self.matrix()?);
            }
            self.expect("}")?;
            gens.push(blocks);
            if !self.eat(",") {
                break;
            }
        }
        self.expect(")")?;
        Ok(ActionSpec::ExplicitMatrices(gens))
    }

    fn matrix(&mut self) -> Result<Matrix> {
        self.expect("[")?;
        let mut rows = Vec::new();
        loop {
            let mut row = vec![self.number()?];
            while self.eat(",") {
                row.push(self.number()?);
            }
            if let Some(first) = rows.first() {
                let first: &Vec<u64> = first;
                if first.len() != row.len() {
                    return Err(self.error(&[&format!("row of length {}", first.len())]));
                }
            }
            rows.push(row);
            if !self.eat(";") {
                break;
            }
        }
        if rows.len() != rows[0].len() {
            return Err(self.error(&["square matrix"]));
        }
        self.expect("]")?;
        Ok(rows)
    }
}
