//! Integrand grammar: `poly:` followed by ±-separated terms `c`,
//! `c*x`, `c*x^k` (with rational c), or `ff:n=<int>[,lambda=<rational>]`
//! for the falling-factorial basis. Whitespace is insignificant;
//! syntax errors carry 1-based column positions into the original
//! string.

use std::fmt;

use degen_core::padic::{IntegrandBasis, MAX_DEGREE};
use degen_core::Rational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseIntegrandError {
    pub message: String,
    /// 1-based column in the input string.
    pub column: usize,
}

impl fmt::Display for ParseIntegrandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseIntegrandError {}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn column(&mut self) -> usize {
        self.skip_ws();
        self.pos + 1
    }

    fn error(&mut self, message: &str) -> ParseIntegrandError {
        ParseIntegrandError {
            message: message.to_string(),
            column: self.column(),
        }
    }

    fn expect(&mut self, expected: u8) -> Result<(), ParseIntegrandError> {
        if self.peek() == Some(expected) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", expected as char)))
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_keyword(&mut self, keyword: &str) -> bool {
        self.skip_ws();
        if self.bytes[self.pos..].starts_with(keyword.as_bytes()) {
            self.pos += keyword.len();
            true
        } else {
            false
        }
    }

    fn parse_digits(&mut self) -> Result<String, ParseIntegrandError> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected digits"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ascii")
            .to_string())
    }

    fn parse_uint(&mut self) -> Result<usize, ParseIntegrandError> {
        let column = self.column();
        self.parse_digits()?.parse().map_err(|_| ParseIntegrandError {
            message: "integer too large".to_string(),
            column,
        })
    }

    /// `[-]digits[/digits]` with a nonzero denominator.
    fn parse_rational(&mut self) -> Result<Rational, ParseIntegrandError> {
        let negative = self.eat(b'-');
        let numer = self.parse_digits()?;
        let denom = if self.eat(b'/') {
            let column = self.column();
            let d = self.parse_digits()?;
            if d.bytes().all(|b| b == b'0') {
                return Err(ParseIntegrandError {
                    message: "denominator must be positive".to_string(),
                    column,
                });
            }
            d
        } else {
            "1".to_string()
        };
        let text = format!("{}{numer}/{denom}", if negative { "-" } else { "" });
        degen_core::parse_rational(&text).map_err(|e| self.error(&e.to_string()))
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

/// Power of x in one term: `x`, `x^k`, or nothing (degree 0).
fn parse_var_power(cursor: &mut Cursor) -> Result<usize, ParseIntegrandError> {
    cursor.expect(b'x')?;
    if cursor.eat(b'^') {
        let column = cursor.column();
        let degree = cursor.parse_uint()?;
        if degree > MAX_DEGREE {
            return Err(ParseIntegrandError {
                message: format!("degree {degree} exceeds the maximum {MAX_DEGREE}"),
                column,
            });
        }
        Ok(degree)
    } else {
        Ok(1)
    }
}

fn parse_poly_terms(cursor: &mut Cursor) -> Result<IntegrandBasis, ParseIntegrandError> {
    let mut terms: Vec<(Rational, usize)> = Vec::new();
    let mut negative = cursor.eat(b'-');
    loop {
        let (coeff, degree) = match cursor.peek() {
            Some(b'x') => (Rational::one(), parse_var_power(cursor)?),
            Some(b) if b.is_ascii_digit() => {
                let coeff = cursor.parse_rational()?;
                let degree = if cursor.eat(b'*') {
                    parse_var_power(cursor)?
                } else {
                    0
                };
                (coeff, degree)
            }
            _ => return Err(cursor.error("expected a term")),
        };
        terms.push((if negative { -coeff } else { coeff }, degree));
        match cursor.peek() {
            None => break,
            Some(b'+') => {
                cursor.pos += 1;
                negative = false;
            }
            Some(b'-') => {
                cursor.pos += 1;
                negative = true;
            }
            Some(_) => return Err(cursor.error("expected '+', '-', or end of input")),
        }
    }
    Ok(IntegrandBasis::monomial(terms))
}

fn parse_falling(cursor: &mut Cursor) -> Result<IntegrandBasis, ParseIntegrandError> {
    if !cursor.eat_keyword("n") {
        return Err(cursor.error("expected 'n='"));
    }
    cursor.expect(b'=')?;
    let column = cursor.column();
    let n = cursor.parse_uint()?;
    if n > MAX_DEGREE {
        return Err(ParseIntegrandError {
            message: format!("degree {n} exceeds the maximum {MAX_DEGREE}"),
            column,
        });
    }
    let lambda = if cursor.eat(b',') {
        if !cursor.eat_keyword("lambda") {
            return Err(cursor.error("expected 'lambda='"));
        }
        cursor.expect(b'=')?;
        cursor.parse_rational()?
    } else {
        Rational::zero()
    };
    if !cursor.at_end() {
        return Err(cursor.error("unexpected trailing input"));
    }
    Ok(IntegrandBasis::Falling { n, lambda })
}

/// Parse the integrand grammar into a normalized basis.
pub fn parse_integrand(input: &str) -> Result<IntegrandBasis, ParseIntegrandError> {
    let mut cursor = Cursor::new(input);
    if cursor.eat_keyword("poly") {
        cursor.expect(b':')?;
        parse_poly_terms(&mut cursor)
    } else if cursor.eat_keyword("ff") {
        cursor.expect(b':')?;
        parse_falling(&mut cursor)
    } else {
        Err(cursor.error("expected 'poly:' or 'ff:'"))
    }
}

/// Canonical text for a normalized basis; parsing it back yields the
/// same value.
pub fn render_integrand(basis: &IntegrandBasis) -> String {
    match basis {
        IntegrandBasis::Falling { n, lambda } => format!("ff:n={n},lambda={lambda}"),
        IntegrandBasis::Monomial(terms) => {
            if terms.is_empty() {
                return "poly:0".to_string();
            }
            let mut out = String::from("poly:");
            for (i, (coeff, degree)) in terms.iter().enumerate() {
                let magnitude = coeff.abs();
                if i == 0 {
                    if coeff.is_negative() {
                        out.push('-');
                    }
                } else {
                    out.push(if coeff.is_negative() { '-' } else { '+' });
                }
                match (degree, magnitude.is_one()) {
                    (0, _) => out.push_str(&magnitude.to_string()),
                    (1, true) => out.push('x'),
                    (1, false) => out.push_str(&format!("{magnitude}*x")),
                    (_, true) => out.push_str(&format!("x^{degree}")),
                    (_, false) => out.push_str(&format!("{magnitude}*x^{degree}")),
                }
            }
            out
        }
    }
}
