//! Parser for algebra specs such as `u3star(u3star(rat))` or `grassmann:4`.
//!
//! ```text
//! spec := "rat" | "poly" | "grassmann:" INT | "full:" INT | "u3star(" spec ")"
//! ```
//!
//! `poly` is accepted as another name for `rat`: generic elements already
//! carry polynomial coefficients. Columns in errors are 0-based offsets.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{
    make_full, make_grassmann, make_rat, make_u3star, AlgebraError, Ring, MAX_DIM, MAX_FULL, MAX_GRASSMANN,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraSpec {
    Rat,
    Grassmann(u32),
    Full(usize),
    U3Star(Box<AlgebraSpec>),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{message} at column {column}{}", render_notes(.notes))]
pub struct ParseError {
    pub column: usize,
    pub message: String,
    pub expected: Vec<&'static str>,
    /// Further problems found in the part that did parse.
    pub notes: Vec<String>,
}

fn render_notes(notes: &[String]) -> String {
    notes.iter().map(|n| format!("; also {n}")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Bound(String),
}

impl AlgebraSpec {
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        let spec = parse_syntax(text)?;
        if let Some(problem) = spec.bound_violations().into_iter().next() {
            return Err(SpecError::Bound(problem));
        }
        Ok(spec)
    }

    /// Dimension of the ring, computed without building it.
    pub fn dim(&self) -> u128 {
        match self {
            AlgebraSpec::Rat => 1,
            AlgebraSpec::Grassmann(r) => 1u128.checked_shl(*r).unwrap_or(u128::MAX),
            AlgebraSpec::Full(n) => (*n as u128).saturating_mul(*n as u128),
            AlgebraSpec::U3Star(inner) => inner.dim().saturating_mul(4),
        }
    }

    /// Every size bound the spec breaks, innermost first.
    pub fn bound_violations(&self) -> Vec<String> {
        match self {
            AlgebraSpec::Rat => vec![],
            AlgebraSpec::Grassmann(r) if !(1..=MAX_GRASSMANN).contains(r) => {
                vec![format!("r={r} exceeds bound 1..={MAX_GRASSMANN}")]
            }
            AlgebraSpec::Full(n) if !(2..=MAX_FULL).contains(n) => {
                vec![format!("n={n} exceeds bound 2..={MAX_FULL}")]
            }
            AlgebraSpec::Grassmann(_) | AlgebraSpec::Full(_) => vec![],
            AlgebraSpec::U3Star(inner) => {
                let mut v = inner.bound_violations();
                if v.is_empty() && self.dim() > MAX_DIM as u128 {
                    v.push(format!("dimension {} exceeds bound {MAX_DIM}", self.dim()));
                }
                v
            }
        }
    }

    pub fn build(&self) -> Result<Ring, AlgebraError> {
        match self {
            AlgebraSpec::Rat => Ok(make_rat()),
            AlgebraSpec::Grassmann(r) => make_grassmann(*r),
            AlgebraSpec::Full(n) => make_full(*n),
            AlgebraSpec::U3Star(inner) => make_u3star(&inner.build()?),
        }
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraSpec::Rat => write!(f, "rat"),
            AlgebraSpec::Grassmann(r) => write!(f, "grassmann:{r}"),
            AlgebraSpec::Full(n) => write!(f, "full:{n}"),
            AlgebraSpec::U3Star(inner) => write!(f, "u3star({inner})"),
        }
    }
}

impl FromStr for AlgebraSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AlgebraSpec::parse(s)
    }
}

const STARTS: [&str; 5] = ["rat", "poly", "grassmann:", "full:", "u3star("];

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn error(&self, message: impl Into<String>, expected: Vec<&'static str>) -> ParseError {
        ParseError { column: self.pos, message: message.into(), expected, notes: vec![] }
    }

    fn int(&mut self) -> Result<u64, ParseError> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected an integer", vec!["INT"]));
        }
        let value = self.rest()[..digits]
            .parse()
            .map_err(|_| self.error("integer too large", vec!["INT"]))?;
        self.pos += digits;
        Ok(value)
    }

    fn spec(&mut self) -> Result<AlgebraSpec, ParseError> {
        if self.eat("u3star(") {
            let open = self.pos - 1;
            let inner = self.spec()?;
            if !self.eat(")") {
                let mut e = if self.rest().is_empty() {
                    self.error("unbalanced parenthesis", vec![")"])
                } else {
                    self.error("unexpected character", vec![")"])
                };
                if self.rest().is_empty() {
                    e.notes.push(format!("opened at column {open}"));
                }
                e.notes.extend(inner.bound_violations());
                return Err(e);
            }
            return Ok(AlgebraSpec::U3Star(Box::new(inner)));
        }
        if self.eat("grassmann:") {
            let r = self.int()?;
            return Ok(AlgebraSpec::Grassmann(u32::try_from(r).unwrap_or(u32::MAX)));
        }
        if self.eat("full:") {
            let n = self.int()?;
            return Ok(AlgebraSpec::Full(usize::try_from(n).unwrap_or(usize::MAX)));
        }
        if self.eat("rat") || self.eat("poly") {
            return Ok(AlgebraSpec::Rat);
        }
        if self.rest().is_empty() {
            Err(self.error("unexpected end of input", STARTS.to_vec()))
        } else {
            Err(self.error("unexpected character", STARTS.to_vec()))
        }
    }
}

fn parse_syntax(text: &str) -> Result<AlgebraSpec, ParseError> {
    let mut p = Parser { text, pos: 0 };
    let spec = p.spec()?;
    if !p.rest().is_empty() {
        let message = if p.rest().starts_with(')') { "unbalanced parenthesis" } else { "trailing input" };
        return Err(p.error(message, vec!["end of input"]));
    }
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn u(s: AlgebraSpec) -> AlgebraSpec {
        AlgebraSpec::U3Star(Box::new(s))
    }

    #[test]
    fn examples() {
        let s = AlgebraSpec::parse("u3star(u3star(rat))").unwrap();
        assert_eq!(s, u(u(AlgebraSpec::Rat)));
        assert_eq!(s.dim(), 16);
        assert_eq!(s.build().unwrap().dim(), 16);
        let g = AlgebraSpec::parse("grassmann:4").unwrap();
        assert_eq!(g, AlgebraSpec::Grassmann(4));
        assert_eq!(g.dim(), 16);
    }

    #[test]
    fn unbalanced_parenthesis_with_bound_note() {
        let err = AlgebraSpec::parse("u3star(grassmann:9").unwrap_err();
        let SpecError::Parse(e) = &err else { panic!("{err:?}") };
        assert_eq!(e.column, 18);
        assert_eq!(e.message, "unbalanced parenthesis");
        assert!(e.notes.iter().any(|n| n.contains("r=9")));
        assert!(err.to_string().starts_with("unbalanced parenthesis at column 18"));
    }

    #[test]
    fn syntax_errors() {
        for (text, column) in [("", 0), ("rat)", 3), ("grassmann:", 10), ("u3star(x)", 7), ("full:2x", 6), ("RAT", 0)] {
            match AlgebraSpec::parse(text) {
                Err(SpecError::Parse(e)) => assert_eq!(e.column, column, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn bounds() {
        for text in ["grassmann:0", "grassmann:9", "full:1", "full:5", "u3star(grassmann:5)", "u3star(u3star(u3star(u3star(rat))))"] {
            assert!(matches!(AlgebraSpec::parse(text), Err(SpecError::Bound(_))), "{text}");
        }
        assert!(AlgebraSpec::parse("u3star(u3star(u3star(rat)))").is_ok());
        assert!(AlgebraSpec::parse("grassmann:99999999999999999999").is_err());
    }

    #[test]
    fn poly_alias() {
        assert_eq!(AlgebraSpec::parse("u3star(poly)").unwrap().to_string(), "u3star(rat)");
    }

    fn arb_spec() -> impl Strategy<Value = AlgebraSpec> {
        let leaf = prop_oneof![
            Just(AlgebraSpec::Rat),
            (1u32..=4).prop_map(AlgebraSpec::Grassmann),
            (2usize..=4).prop_map(AlgebraSpec::Full),
        ];
        leaf.prop_recursive(3, 4, 1, |inner| inner.prop_map(|s| AlgebraSpec::U3Star(Box::new(s))))
    }

    proptest! {
        #[test]
        fn render_round_trips(s in arb_spec()) {
            let text = s.to_string();
            let parsed = parse_syntax(&text).unwrap();
            prop_assert_eq!(&parsed, &s);
            prop_assert_eq!(parsed.to_string(), text);
        }

        #[test]
        fn build_matches_dim(s in arb_spec()) {
            if s.bound_violations().is_empty() {
                let ring = s.build().unwrap();
                prop_assert_eq!(ring.dim() as u128, s.dim());
                prop_assert_eq!(ring.name(), s.to_string());
            } else {
                prop_assert!(s.build().is_err());
            }
        }
    }
}
