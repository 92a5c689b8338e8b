//! The identity language and degree-three relation spaces.
//!
//! Grammar:
//!
//! ```text
//! identity := expr ( '=' expr )?
//! expr     := [ '+' | '-' ] term ( ( '+' | '-' ) term )*
//! term     := coeff [ '*' ] product | coeff | product
//! coeff    := INTEGER [ '/' INTEGER ]
//! product  := primary [ '*' primary ]
//! primary  := LETTER | '(' product ')'
//! ```
//!
//! Variables are single lowercase letters. Products are binary, so
//! `a*b*c` is rejected: every product except the outermost one of a term
//! must be parenthesized. A bare coefficient is only allowed when it is
//! zero, which makes `... = 0` legal.
//!
//! Letters map to labels in alphabetical order: in `b*(a*c)` the letter `a`
//! is label 1, `b` is 2 and `c` is 3, whatever order they appear in.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exactla::{self, echelonize, member, Rationals, RrefBasis, SparseVec};
use crate::treekit::{default_alphabet, monomial_count, Node, Permutation, TreeMonomial};
use crate::{Error, Rational, Result};

/// Arity of every relation.
pub const RELATION_ARITY: usize = 3;
/// Dimension of the degree-three space of the free operad.
pub const DEGREE_THREE_DIM: usize = 12;

/// Sparse rational combination of monomials of one arity, in canonical
/// index coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb {
    arity: usize,
    coeffs: SparseVec<Rational>,
}

impl LinComb {
    pub fn zero(arity: usize) -> LinComb {
        LinComb {
            arity,
            coeffs: SparseVec::zero(monomial_count(arity)),
        }
    }

    pub fn monomial(m: &TreeMonomial) -> LinComb {
        LinComb::from_terms(m.arity(), vec![(m.clone(), Rational::one())]).expect("arity matches")
    }

    pub fn from_terms(arity: usize, terms: Vec<(TreeMonomial, Rational)>) -> Result<LinComb> {
        if let Some((m, _)) = terms.iter().find(|(m, _)| m.arity() != arity) {
            return Err(Error::Arity {
                found: m.arity(),
                expected: arity,
            });
        }
        let entries = terms
            .into_iter()
            .map(|(m, c)| (m.index().total(), c))
            .collect();
        Ok(LinComb {
            arity,
            coeffs: SparseVec::from_entries(&Rationals, monomial_count(arity), entries)?,
        })
    }

    pub fn from_vec(arity: usize, coeffs: SparseVec<Rational>) -> Result<LinComb> {
        if coeffs.dim() != monomial_count(arity) {
            return Err(Error::DimensionMismatch {
                expected: monomial_count(arity),
                found: coeffs.dim(),
            });
        }
        Ok(LinComb { arity, coeffs })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn coeffs(&self) -> &SparseVec<Rational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (TreeMonomial, &Rational)> + '_ {
        self.coeffs.iter().map(|(k, c)| {
            (
                TreeMonomial::from_index(self.arity, k).expect("valid index"),
                c,
            )
        })
    }

    pub fn relabel(&self, sigma: &Permutation) -> Result<LinComb> {
        let terms = self
            .terms()
            .map(|(m, c)| Ok((m.relabel(sigma)?, c.clone())))
            .collect::<Result<Vec<_>>>()?;
        LinComb::from_terms(self.arity, terms)
    }

    pub fn mirror(&self) -> LinComb {
        let terms = self.terms().map(|(m, c)| (m.mirror(), c.clone())).collect();
        LinComb::from_terms(self.arity, terms).expect("mirror keeps arity")
    }

    pub fn sub(&self, other: &LinComb) -> Result<LinComb> {
        if other.arity != self.arity {
            return Err(Error::Arity {
                found: other.arity,
                expected: self.arity,
            });
        }
        Ok(LinComb {
            arity: self.arity,
            coeffs: self
                .coeffs
                .add_scaled(&Rationals, &-Rational::one(), &other.coeffs),
        })
    }

    /// Render with `alphabet[i - 1]` for label `i`, e.g. `((a*b)*c) - 2 (a*(b*c))`.
    pub fn render_with(&self, alphabet: &[char]) -> String {
        let mut out = String::new();
        for (m, c) in self.terms() {
            let negative = exactla::is_negative(c);
            let magnitude = if negative { -c.clone() } else { c.clone() };
            match (out.is_empty(), negative) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            if !magnitude.is_one() {
                out.push_str(&exactla::format_rational(&magnitude));
                out.push(' ');
            }
            out.push_str(&m.render_with(alphabet));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(default_alphabet()))
    }
}

/// An identity in the DSL, optionally named.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentitySource {
    pub text: String,
    pub name: Option<String>,
}

impl IdentitySource {
    pub fn new(text: impl Into<String>) -> IdentitySource {
        IdentitySource {
            text: text.into(),
            name: None,
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> IdentitySource {
        self.name = Some(name.into());
        self
    }
}

/// A parsed expression together with the letters it used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedExpression {
    /// Left-hand side minus right-hand side.
    pub lincomb: LinComb,
    /// Letters in label order: `letters[i]` is label `i + 1`.
    pub letters: Vec<char>,
    pub is_equation: bool,
}

impl ParsedExpression {
    pub fn render(&self, v: &LinComb) -> String {
        v.render_with(&self.letters)
    }
}

#[derive(Debug)]
enum Ast {
    Var(char, usize),
    Prod(Box<Ast>, Box<Ast>),
}

impl Ast {
    fn letters(&self, out: &mut Vec<(char, usize)>) {
        match self {
            Ast::Var(c, p) => out.push((*c, *p)),
            Ast::Prod(a, b) => {
                a.letters(out);
                b.letters(out);
            }
        }
    }

    fn to_node(&self, letters: &[char]) -> Node {
        match self {
            Ast::Var(c, _) => {
                let label = letters
                    .iter()
                    .position(|l| l == c)
                    .expect("letter collected")
                    + 1;
                Node::Leaf(label as u8)
            }
            Ast::Prod(a, b) => Node::branch(a.to_node(letters), b.to_node(letters)),
        }
    }
}

struct Term {
    coeff: Rational,
    product: Option<Ast>,
    span: (usize, usize),
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Parser<'a> {
        Parser {
            src,
            bytes: src.as_bytes(),
            pos: 0,
        }
    }

    fn error<T>(&self, pos: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        match self.peek() {
            Some(x) if x == b => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => self.error(
                self.pos,
                format!("expected `{}`, found `{}`", b as char, x as char),
            ),
            None => self.error(
                self.pos,
                format!("expected `{}`, found end of input", b as char),
            ),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error(start, "expected an integer");
        }
        Ok(self.src[start..self.pos].parse().expect("ascii digits"))
    }

    fn primary(&mut self) -> Result<Ast> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let p = self.product()?;
                self.expect(b')')?;
                Ok(p)
            }
            Some(c) if c.is_ascii_lowercase() => {
                self.pos += 1;
                Ok(Ast::Var(c as char, self.pos - 1))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.error(self.pos, "variables are single lowercase letters")
            }
            Some(c) => self.error(
                self.pos,
                format!("expected a variable or `(`, found `{}`", c as char),
            ),
            None => self.error(self.pos, "expected a variable or `(`, found end of input"),
        }
    }

    fn product(&mut self) -> Result<Ast> {
        let left = self.primary()?;
        if self.peek() != Some(b'*') {
            return Ok(left);
        }
        self.pos += 1;
        let right = self.primary()?;
        if self.peek() == Some(b'*') {
            return self.error(
                self.pos,
                "ambiguous product: parenthesize all but the outermost `*`",
            );
        }
        Ok(Ast::Prod(Box::new(left), Box::new(right)))
    }

    fn term(&mut self, sign: i64) -> Result<Term> {
        self.skip_ws();
        let start = self.pos;
        let mut coeff = Rational::from_integer(sign.into());
        let mut has_coeff = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            has_coeff = true;
            let num = self.integer()?;
            let den = if self.peek() == Some(b'/') {
                self.pos += 1;
                let at = self.pos;
                let d = self.integer()?;
                if d.is_zero() {
                    return self.error(at, "zero denominator");
                }
                d
            } else {
                BigInt::one()
            };
            coeff *= Rational::new(num, den);
            if self.peek() == Some(b'*') {
                self.pos += 1;
            }
        }
        let product = match self.peek() {
            Some(b'+' | b'-' | b'=') | None if has_coeff => {
                if !coeff.is_zero() {
                    return self.error(start, "nonzero constant term");
                }
                None
            }
            _ => Some(self.product()?),
        };
        Ok(Term {
            coeff,
            product,
            span: (start, self.pos),
        })
    }

    fn expr(&mut self, side: i64, terms: &mut Vec<Term>) -> Result<()> {
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            terms.push(self.term(side * sign)?);
            sign = match self.peek() {
                Some(b'+') => 1,
                Some(b'-') => -1,
                _ => return Ok(()),
            };
            self.pos += 1;
        }
    }
}

/// Parse an expression or equation of any arity into `LHS - RHS`.
pub fn parse_expression(text: &str) -> Result<ParsedExpression> {
    let mut p = Parser::new(text);
    if p.peek().is_none() {
        return p.error(0, "empty input");
    }
    let mut terms = Vec::new();
    p.expr(1, &mut terms)?;
    let is_equation = p.peek() == Some(b'=');
    if is_equation {
        p.pos += 1;
        p.expr(-1, &mut terms)?;
    }
    if let Some(c) = p.peek() {
        return p.error(p.pos, format!("unexpected `{}`", c as char));
    }

    let mut all: BTreeSet<char> = BTreeSet::new();
    let mut per_term = Vec::with_capacity(terms.len());
    for t in &terms {
        let mut occ = Vec::new();
        if let Some(ast) = &t.product {
            ast.letters(&mut occ);
        }
        let term_text = text[t.span.0..t.span.1].trim().to_string();
        let mut set = BTreeSet::new();
        for (c, _) in &occ {
            if !set.insert(*c) {
                return Err(Error::NonMultilinear {
                    term: term_text,
                    var: *c,
                });
            }
        }
        all.extend(set.iter().copied());
        per_term.push((set, term_text));
    }
    if all.is_empty() {
        return Err(Error::Arity {
            found: 0,
            expected: RELATION_ARITY,
        });
    }
    for ((set, term_text), t) in per_term.iter().zip(&terms) {
        if t.product.is_some() && *set != all {
            return Err(Error::VariableMismatch {
                term: term_text.clone(),
                expected: all.iter().copied().collect(),
                found: set.iter().copied().collect(),
            });
        }
    }
    let letters: Vec<char> = all.into_iter().collect();
    let arity = letters.len();
    let monomials = terms
        .iter()
        .filter_map(|t| {
            t.product
                .as_ref()
                .map(|ast| Ok((TreeMonomial::new(ast.to_node(&letters))?, t.coeff.clone())))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ParsedExpression {
        lincomb: LinComb::from_terms(arity, monomials)?,
        letters,
        is_equation,
    })
}

/// Parse a degree-three identity into `LHS - RHS` over the 12 monomials.
pub fn parse_identity(src: &IdentitySource) -> Result<LinComb> {
    let parsed = parse_expression(&src.text)?;
    if parsed.lincomb.arity() != RELATION_ARITY {
        return Err(Error::Arity {
            found: parsed.lincomb.arity(),
            expected: RELATION_ARITY,
        });
    }
    Ok(parsed.lincomb)
}

/// A subspace of the degree-three space that is stable under relabelling,
/// stored as a reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSpace {
    name: String,
    basis: RrefBasis<Rational>,
    generator_names: Vec<String>,
    closure_enlarged: bool,
}

impl RelationSpace {
    pub fn zero(name: impl Into<String>) -> RelationSpace {
        RelationSpace {
            name: name.into(),
            basis: RrefBasis::empty(DEGREE_THREE_DIM),
            generator_names: Vec::new(),
            closure_enlarged: false,
        }
    }

    pub fn full(name: impl Into<String>) -> RelationSpace {
        RelationSpace {
            name: name.into(),
            basis: RrefBasis::full(&Rationals, DEGREE_THREE_DIM),
            generator_names: Vec::new(),
            closure_enlarged: false,
        }
    }

    /// Parse each identity and close under relabelling.
    pub fn from_identities<S: AsRef<str>>(name: &str, sources: &[S]) -> Result<RelationSpace> {
        let gens = sources
            .iter()
            .map(|s| parse_identity(&IdentitySource::new(s.as_ref())))
            .collect::<Result<Vec<_>>>()?;
        let mut space = s3_closure(&gens)?;
        space.name = name.to_string();
        space.generator_names = sources.iter().map(|s| s.as_ref().to_string()).collect();
        Ok(space)
    }

    /// Span of the given rows, closed under relabelling.
    pub fn from_basis(
        name: impl Into<String>,
        basis: &RrefBasis<Rational>,
    ) -> Result<RelationSpace> {
        let gens = basis
            .rows()
            .iter()
            .map(|r| LinComb::from_vec(RELATION_ARITY, r.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(s3_closure(&gens)?.with_name(name))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> RelationSpace {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    pub fn basis(&self) -> &RrefBasis<Rational> {
        &self.basis
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    /// Whether closing under relabelling strictly enlarged the span of the
    /// generators as given.
    pub fn closure_enlarged(&self) -> bool {
        self.closure_enlarged
    }

    /// The basis rows as degree-three combinations.
    pub fn rows(&self) -> Vec<LinComb> {
        self.basis
            .rows()
            .iter()
            .map(|r| LinComb::from_vec(RELATION_ARITY, r.clone()).expect("degree three"))
            .collect()
    }

    pub fn contains(&self, v: &LinComb) -> bool {
        v.arity() == RELATION_ARITY
            && member(&Rationals, v.coeffs(), &self.basis).is_ok_and(|m| m.is_member())
    }

    pub fn same_span(&self, other: &RelationSpace) -> bool {
        exactla::same_span(&self.basis, &other.basis)
    }

    /// Every basis row as a DSL identity `... = 0`.
    pub fn generators_dsl(&self) -> Vec<String> {
        self.rows().iter().map(|r| format!("{r} = 0")).collect()
    }
}

/// RREF basis of the span of all relabellings of the generators.
pub fn s3_closure(gens: &[LinComb]) -> Result<RelationSpace> {
    if let Some(g) = gens.iter().find(|g| g.arity() != RELATION_ARITY) {
        return Err(Error::Arity {
            found: g.arity(),
            expected: RELATION_ARITY,
        });
    }
    let plain: Vec<_> = gens.iter().map(|g| g.coeffs().clone()).collect();
    let plain_rank = echelonize(&Rationals, DEGREE_THREE_DIM, plain).rank();
    let mut rows = Vec::with_capacity(gens.len() * 6);
    for sigma in Permutation::all(RELATION_ARITY) {
        for g in gens {
            rows.push(g.relabel(&sigma)?.coeffs().clone());
        }
    }
    let basis = echelonize(&Rationals, DEGREE_THREE_DIM, rows).into_rref();
    Ok(RelationSpace {
        name: String::new(),
        closure_enlarged: basis.rank() > plain_rank,
        basis,
        generator_names: gens.iter().map(|g| g.to_string()).collect(),
    })
}

/// Relations of the opposite operad, where `x*y` is read as `y*x`.
pub fn opposite_relations(r: &RelationSpace) -> RelationSpace {
    let rows: Vec<_> = r
        .rows()
        .iter()
        .map(|v| v.mirror().coeffs().clone())
        .collect();
    let basis = echelonize(&Rationals, DEGREE_THREE_DIM, rows).into_rref();
    RelationSpace {
        name: format!("{}-opposite", r.name),
        basis,
        generator_names: r.generator_names.clone(),
        closure_enlarged: r.closure_enlarged,
    }
}

/// On-disk relation set: `{"name": ..., "relations": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationsFile {
    pub name: String,
    pub relations: Vec<String>,
}

impl RelationsFile {
    pub fn from_json(text: &str) -> Result<RelationsFile> {
        serde_json::from_str(text).map_err(|e| Error::RelationsFile(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn relation_space(&self) -> Result<RelationSpace> {
        RelationSpace::from_identities(&self.name, &self.relations)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn idx(s: &str) -> usize {
        let p = parse_expression(s).unwrap();
        let (k, _) = p.lincomb.coeffs().iter().next().unwrap();
        k
    }

    fn space(rels: &[&str]) -> RelationSpace {
        RelationSpace::from_identities("t", rels).unwrap()
    }

    #[test]
    fn left_commutative_identity() {
        let v = parse_identity(&IdentitySource::new("a*(b*c) - b*(a*c) = 0")).unwrap();
        let entries: Vec<_> = v.coeffs().iter().map(|(k, c)| (k, c.clone())).collect();
        assert_eq!(
            entries,
            vec![(idx("a*(b*c)"), q(1)), (idx("b*(a*c)"), q(-1))]
        );
        assert_eq!((idx("a*(b*c)"), idx("b*(a*c)")), (6, 8));
    }

    #[test]
    fn right_commutative_identity() {
        let v = parse_identity(&IdentitySource::new("(a*b)*c - (a*c)*b = 0")).unwrap();
        let entries: Vec<_> = v.coeffs().iter().map(|(k, c)| (k, c.clone())).collect();
        assert_eq!(entries, vec![(0, q(1)), (1, q(-1))]);
    }

    #[test]
    fn trivial_identity_is_zero() {
        let v = parse_identity(&IdentitySource::new("a*(b*c) = a*(b*c)")).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn letters_map_alphabetically() {
        let p = parse_expression("b*(a*c)").unwrap();
        assert_eq!(p.letters, vec!['a', 'b', 'c']);
        assert_eq!(p.lincomb.to_string(), "(b*(a*c))");
        let p = parse_expression("(u*w)*v").unwrap();
        assert_eq!(p.render(&p.lincomb), "((u*w)*v)");
        assert_eq!(p.lincomb.to_string(), "((a*c)*b)");
    }

    #[test]
    fn coefficients() {
        let v = parse_expression("2 (a*b)*c - 1/2*a*(b*c) + 3*((a*b)*c) = 0")
            .unwrap()
            .lincomb;
        assert_eq!(v.to_string(), "5 ((a*b)*c) - 1/2 (a*(b*c))");
        let v = parse_expression("-(a*b)*c = -(a*b)*c").unwrap().lincomb;
        assert!(v.is_zero());
        let v = parse_expression("0 = (a*b)*c").unwrap().lincomb;
        assert_eq!(v.to_string(), "-((a*b)*c)");
    }

    #[test]
    fn outer_parentheses_are_optional() {
        let a = parse_expression("((a*b)*c)").unwrap().lincomb;
        let b = parse_expression("(a*b)*c").unwrap().lincomb;
        assert_eq!(a, b);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert!(matches!(
            parse_expression("a*b*c"),
            Err(Error::Syntax { pos: 3, .. })
        ));
        assert!(matches!(
            parse_expression(""),
            Err(Error::Syntax { pos: 0, .. })
        ));
        assert!(matches!(
            parse_expression("(a*b"),
            Err(Error::Syntax { pos: 4, .. })
        ));
        assert!(matches!(
            parse_expression("a*(B*c)"),
            Err(Error::Syntax { pos: 3, .. })
        ));
        assert!(matches!(
            parse_expression("a*(b*c) = 1"),
            Err(Error::Syntax { pos: 10, .. })
        ));
        assert!(matches!(
            parse_expression("1/0 a*(b*c)"),
            Err(Error::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_expression("a*(b*c) ="),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_expression("a*(b*c) = 0 = 0"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_expression("ab"),
            Err(Error::Syntax { pos: 1, .. })
        ));
    }

    #[test]
    fn semantic_errors() {
        assert!(matches!(
            parse_expression("a*(a*c)"),
            Err(Error::NonMultilinear { var: 'a', .. })
        ));
        assert!(matches!(
            parse_expression("a*(b*c) - a*(b*d)"),
            Err(Error::VariableMismatch { .. })
        ));
        assert!(matches!(
            parse_identity(&IdentitySource::new("a*b = b*a")),
            Err(Error::Arity {
                found: 2,
                expected: 3
            })
        ));
        assert!(matches!(
            parse_identity(&IdentitySource::new("0 = 0")),
            Err(Error::Arity { found: 0, .. })
        ));
    }

    #[test]
    fn closure_examples() {
        assert_eq!(s3_closure(&[]).unwrap().dim(), 0);
        let nov = space(&[
            "a*(b*c) - (a*b)*c - a*(c*b) + (a*c)*b = 0",
            "a*(b*c) - b*(a*c) = 0",
        ]);
        assert_eq!(nov.dim(), 6);
        assert!(nov.closure_enlarged());
        assert!(nov.basis().is_reduced(&Rationals));
        let assoc = space(&["(a*b)*c - a*(b*c) = 0"]);
        assert_eq!(assoc.dim(), 6);
    }

    #[test]
    fn closure_of_closed_generators_does_not_enlarge() {
        let assoc = space(&["(a*b)*c - a*(b*c) = 0"]);
        let again = s3_closure(&assoc.rows()).unwrap();
        assert!(again.same_span(&assoc));
        assert!(!again.closure_enlarged());
    }

    #[test]
    fn opposite_examples() {
        let zero = RelationSpace::zero("magma");
        assert_eq!(opposite_relations(&zero).dim(), 0);
        let right = space(&[
            "a*(b*c) - (a*b)*c - a*(c*b) + (a*c)*b = 0",
            "a*(b*c) - b*(a*c) = 0",
        ]);
        let left = space(&[
            "a*(b*c) - (a*b)*c - b*(a*c) + (b*a)*c = 0",
            "(a*b)*c - (a*c)*b = 0",
        ]);
        assert!(opposite_relations(&right).same_span(&left));
        assert!(opposite_relations(&opposite_relations(&right)).same_span(&right));
        let assoc = space(&["(a*b)*c - a*(b*c) = 0"]);
        assert!(opposite_relations(&assoc).same_span(&assoc));
    }

    #[test]
    fn relations_file_round_trip() {
        let f =
            RelationsFile::from_json(r#"{"name": "assoc", "relations": ["(a*b)*c = a*(b*c)"]}"#)
                .unwrap();
        assert_eq!(f.relation_space().unwrap().dim(), 6);
        assert_eq!(RelationsFile::from_json(&f.to_json()).unwrap(), f);
        assert!(matches!(
            RelationsFile::from_json("{\"name\": 3}"),
            Err(Error::RelationsFile(_))
        ));
    }
}
