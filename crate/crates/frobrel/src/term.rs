//! A small term language for cobordism expressions, with an exact
//! interpreter into relations.
//!
//! Terms are built from six generators — `unit` (0→1), `counit` (1→0),
//! `mul` (2→1), `comul` (1→2), `id` (1→1), `swap` (2→2) — combined by `;`
//! for composition and `*` for tensoring. The syntax reads in diagram
//! order, top to bottom: `mul ; counit` first multiplies, then applies the
//! counit, which is `ε ∘ μ` in the classical right-to-left notation. The
//! pretty-printer can render either form; `*` binds tighter than `;`.
//!
//! Evaluation sends each generator to the corresponding relation of a
//! Frobenius object and is completely structural, so equality of terms is
//! decided semantically: evaluate both sides and compare. The closed
//! genus-g surface `unit ; (comul ; mul)^g ; counit` evaluates to a boolean.

use std::fmt;

use thiserror::Error;

use crate::frobenius::FrobeniusObject;
use crate::rel::Relation;

/// The six generating cobordisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Unit,
    Counit,
    Mul,
    Comul,
    Id,
    Swap,
}

impl Generator {
    pub fn arity(self) -> (usize, usize) {
        match self {
            Generator::Unit => (0, 1),
            Generator::Counit => (1, 0),
            Generator::Mul => (2, 1),
            Generator::Comul => (1, 2),
            Generator::Id => (1, 1),
            Generator::Swap => (2, 2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::Unit => "unit",
            Generator::Counit => "counit",
            Generator::Mul => "mul",
            Generator::Comul => "comul",
            Generator::Id => "id",
            Generator::Swap => "swap",
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Generator::Unit => "η",
            Generator::Counit => "ε",
            Generator::Mul => "μ",
            Generator::Comul => "δ",
            Generator::Id => "1",
            Generator::Swap => "τ",
        }
    }

    fn from_name(name: &str) -> Option<Generator> {
        match name {
            "unit" => Some(Generator::Unit),
            "counit" => Some(Generator::Counit),
            "mul" => Some(Generator::Mul),
            "comul" => Some(Generator::Comul),
            "id" => Some(Generator::Id),
            "swap" => Some(Generator::Swap),
            _ => None,
        }
    }
}

/// A typed cobordism term; sequential composites always have matching
/// inner arities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CobTerm {
    Gen(Generator),
    /// Diagrammatic composition, at least two factors.
    Seq(Vec<CobTerm>),
    /// Tensor product, at least two factors.
    Ten(Vec<CobTerm>),
}

/// Parse and arity errors, with byte positions into the source text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("syntax error at byte {at}: {expected}")]
    Syntax { at: usize, expected: String },
    #[error("arity mismatch in `{left} ; {right}`: left yields {left_out} wires, right expects {right_in}")]
    Arity {
        left: String,
        right: String,
        left_out: usize,
        right_in: usize,
    },
}

impl CobTerm {
    /// `(inputs, outputs)` of the term, synthesized bottom-up.
    pub fn arity(&self) -> (usize, usize) {
        match self {
            CobTerm::Gen(g) => g.arity(),
            CobTerm::Seq(parts) => (
                parts.first().expect("seq is nonempty").arity().0,
                parts.last().expect("seq is nonempty").arity().1,
            ),
            CobTerm::Ten(parts) => parts.iter().fold((0, 0), |(src, tgt), p| {
                let (s, t) = p.arity();
                (src + s, tgt + t)
            }),
        }
    }

    /// Diagrammatic composition with arity checking.
    pub fn then(self, next: CobTerm) -> Result<CobTerm, TermError> {
        let (_, left_out) = self.arity();
        let (right_in, _) = next.arity();
        if left_out != right_in {
            return Err(TermError::Arity {
                left: self.to_string(),
                right: next.to_string(),
                left_out,
                right_in,
            });
        }
        let mut parts = match self {
            CobTerm::Seq(parts) => parts,
            other => vec![other],
        };
        match next {
            CobTerm::Seq(mut rest) => parts.append(&mut rest),
            other => parts.push(other),
        }
        Ok(CobTerm::Seq(parts))
    }

    /// Tensor product; never fails.
    pub fn tensor(self, right: CobTerm) -> CobTerm {
        let mut parts = match self {
            CobTerm::Ten(parts) => parts,
            other => vec![other],
        };
        match right {
            CobTerm::Ten(mut rest) => parts.append(&mut rest),
            other => parts.push(other),
        }
        CobTerm::Ten(parts)
    }

    /// The classical right-to-left rendering, e.g. `ε ∘ μ` for
    /// `mul ; counit`.
    pub fn composition_notation(&self) -> String {
        match self {
            CobTerm::Gen(g) => g.symbol().to_owned(),
            CobTerm::Seq(parts) => parts
                .iter()
                .rev()
                .map(|p| match p {
                    CobTerm::Gen(g) => g.symbol().to_owned(),
                    composite => format!("({})", composite.composition_notation()),
                })
                .collect::<Vec<_>>()
                .join(" ∘ "),
            CobTerm::Ten(parts) => parts
                .iter()
                .map(|p| match p {
                    CobTerm::Gen(g) => g.symbol().to_owned(),
                    composite => format!("({})", composite.composition_notation()),
                })
                .collect::<Vec<_>>()
                .join(" × "),
        }
    }

    /// Evaluates the term against the structure relations of an object.
    ///
    /// The object is expected to verify; evaluation itself never fails on a
    /// well-typed term.
    pub fn evaluate(&self, f: &FrobeniusObject) -> Relation {
        match self {
            CobTerm::Gen(g) => match g {
                Generator::Unit => f.eta_rel(),
                Generator::Counit => f.epsilon_rel(),
                Generator::Mul => f.mu_rel(),
                Generator::Comul => f.delta_rel(),
                Generator::Id => Relation::identity(f.carrier(), 1),
                Generator::Swap => Relation::twist(f.carrier()),
            },
            CobTerm::Seq(parts) => {
                let mut out = parts[0].evaluate(f);
                for part in &parts[1..] {
                    out = out
                        .compose(&part.evaluate(f))
                        .expect("arities were checked at construction");
                }
                out
            }
            CobTerm::Ten(parts) => {
                let mut out = parts[0].evaluate(f);
                for part in &parts[1..] {
                    out = out
                        .tensor(&part.evaluate(f))
                        .expect("tensor factors share the carrier");
                }
                out
            }
        }
    }
}

impl fmt::Display for CobTerm {
    /// Prints in the concrete syntax; the output reparses to an equal term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CobTerm::Gen(g) => write!(f, "{}", g.name()),
            CobTerm::Seq(parts) => {
                let rendered: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", rendered.join(" ; "))
            }
            CobTerm::Ten(parts) => {
                let rendered: Vec<String> = parts
                    .iter()
                    .map(|p| match p {
                        CobTerm::Seq(_) => format!("({p})"),
                        _ => p.to_string(),
                    })
                    .collect();
                write!(f, "{}", rendered.join(" * "))
            }
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    at: usize,
}

impl<'a> Parser<'a> {
    fn skip_spaces(&mut self) {
        while let Some(c) = self.text[self.at..].chars().next() {
            if c.is_whitespace() {
                self.at += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_spaces();
        self.text[self.at..].chars().next()
    }

    fn term(&mut self) -> Result<CobTerm, TermError> {
        let mut out = self.factor()?;
        while self.peek() == Some(';') {
            self.at += 1;
            let next = self.factor()?;
            out = out.then(next)?;
        }
        Ok(out)
    }

    fn factor(&mut self) -> Result<CobTerm, TermError> {
        let mut out = self.atom()?;
        while self.peek() == Some('*') {
            self.at += 1;
            let next = self.atom()?;
            out = out.tensor(next);
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<CobTerm, TermError> {
        match self.peek() {
            Some('(') => {
                self.at += 1;
                let inner = self.term()?;
                if self.peek() == Some(')') {
                    self.at += 1;
                    Ok(inner)
                } else {
                    Err(TermError::Syntax {
                        at: self.at,
                        expected: "expected `)`".to_owned(),
                    })
                }
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.at;
                while let Some(c) = self.text[self.at..].chars().next() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        self.at += c.len_utf8();
                    } else {
                        break;
                    }
                }
                let name = &self.text[start..self.at];
                if let Some(g) = Generator::from_name(name) {
                    Ok(CobTerm::Gen(g))
                } else if let Some(term) = builtin(name) {
                    Ok(term)
                } else {
                    Err(TermError::Syntax {
                        at: start,
                        expected: format!("unknown generator `{name}`"),
                    })
                }
            }
            Some(c) => Err(TermError::Syntax {
                at: self.at,
                expected: format!("unexpected `{c}`"),
            }),
            None => Err(TermError::Syntax {
                at: self.at,
                expected: "unexpected end of input".to_owned(),
            }),
        }
    }
}

/// Parses the concrete syntax `term := factor (';' factor)*`,
/// `factor := atom ('*' atom)*`, `atom := generator | builtin | '(' term ')'`.
///
/// Arity mismatches across `;` are reported while parsing, naming the two
/// offending subterms.
pub fn parse(text: &str) -> Result<CobTerm, TermError> {
    let mut parser = Parser { text, at: 0 };
    let term = parser.term()?;
    parser.skip_spaces();
    if parser.at != text.len() {
        return Err(TermError::Syntax {
            at: parser.at,
            expected: "trailing input".to_owned(),
        });
    }
    Ok(term)
}

/// Named composites for the standard diagrams; accepted as atoms by the
/// parser and expanded structurally.
pub fn builtin(name: &str) -> Option<CobTerm> {
    let text = match name {
        "alpha" => "mul ; counit",
        "beta" => "unit ; comul",
        "snake_left" => "(id * (unit ; comul)) ; ((mul ; counit) * id)",
        "snake_right" => "((unit ; comul) * id) ; (id * (mul ; counit))",
        "handle" => "comul ; mul",
        "assoc_left" => "(mul * id) ; mul",
        "assoc_right" => "(id * mul) ; mul",
        "frob_left" => "(comul * id) ; (id * mul)",
        "frob_mid" => "mul ; comul",
        "frob_right" => "(id * comul) ; (mul * id)",
        _ => return None,
    };
    Some(parse(text).expect("builtin terms are well-formed"))
}

/// Every builtin name, for listings and error messages.
pub const BUILTIN_NAMES: [&str; 10] = [
    "alpha",
    "beta",
    "snake_left",
    "snake_right",
    "handle",
    "assoc_left",
    "assoc_right",
    "frob_left",
    "frob_mid",
    "frob_right",
];

/// The closed genus-g surface as a term: `unit ; handle^g ; counit`.
pub fn genus_term(genus: usize) -> CobTerm {
    let mut term = CobTerm::Gen(Generator::Unit);
    for _ in 0..genus {
        term = term
            .then(builtin("handle").unwrap())
            .expect("handles chain along one wire");
    }
    term.then(CobTerm::Gen(Generator::Counit))
        .expect("the counit closes the surface")
}

/// Evaluates the closed genus-g surface to its boolean value.
pub fn genus_invariant(f: &FrobeniusObject, genus: usize) -> bool {
    !genus_term(genus).evaluate(f).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::one_volume_pair;
    use crate::rel::Relation;

    #[test]
    fn parse_and_arities() {
        let alpha = parse("mul ; counit").unwrap();
        assert_eq!(alpha.arity(), (2, 0));
        let beta = parse("unit ; comul").unwrap();
        assert_eq!(beta.arity(), (0, 2));
        match parse("mul ; mul") {
            Err(TermError::Arity {
                left_out, right_in, ..
            }) => {
                assert_eq!(left_out, 1);
                assert_eq!(right_in, 2);
            }
            other => panic!("expected an arity error, got {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse("mul ; nonsense") {
            Err(TermError::Syntax { at, .. }) => assert_eq!(at, 6),
            other => panic!("expected a syntax error, got {other:?}"),
        }
        assert!(parse("(mul ; counit").is_err());
        assert!(parse("mul )").is_err());
    }

    #[test]
    fn tensor_binds_tighter_than_composition() {
        let t = parse("unit * id ; mul").unwrap();
        // (unit * id) ; mul, the left unit composite.
        assert_eq!(t.arity(), (1, 1));
        assert_eq!(t.to_string(), "unit * id ; mul");
        assert_eq!(parse(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn printed_terms_reparse() {
        let corpus = [
            "unit",
            "counit",
            "mul",
            "comul",
            "id",
            "swap",
            "mul ; counit",
            "unit ; comul",
            "mul ; comul",
            "comul ; mul",
            "swap ; mul",
            "mul * id ; mul",
            "id * mul ; mul",
            "comul * id ; id * mul",
            "id * comul ; mul * id",
            "(id * (unit ; comul)) ; ((mul ; counit) * id)",
            "((unit ; comul) * id) ; (id * (mul ; counit))",
            "unit ; comul ; mul ; counit",
            "swap ; swap",
            "unit * unit ; mul",
            "comul ; swap ; mul",
            "id * id * id",
        ];
        assert!(corpus.len() >= 20);
        for text in corpus {
            let term = parse(text).unwrap();
            let printed = term.to_string();
            assert_eq!(parse(&printed).unwrap(), term, "round trip of `{text}`");
        }
    }

    #[test]
    fn composition_notation_reverses() {
        assert_eq!(parse("mul ; counit").unwrap().composition_notation(), "ε ∘ μ");
        assert_eq!(
            parse("unit * id ; mul").unwrap().composition_notation(),
            "μ ∘ (η × 1)"
        );
    }

    #[test]
    fn builtins_expand_to_their_definitions() {
        for name in BUILTIN_NAMES {
            assert!(builtin(name).is_some(), "missing builtin {name}");
        }
        assert_eq!(parse("alpha").unwrap(), parse("mul ; counit").unwrap());
        assert_eq!(builtin("alpha").unwrap().arity(), (2, 0));
        assert_eq!(builtin("snake_left").unwrap().arity(), (1, 1));
        assert_eq!(builtin("handle").unwrap().arity(), (1, 1));
    }

    #[test]
    fn evaluation_on_the_pair_example() {
        let f = one_volume_pair();
        let id = Relation::identity(f.carrier(), 1);
        assert_eq!(parse("id").unwrap().evaluate(&f), id);
        // Both snake composites evaluate to the identity.
        assert_eq!(builtin("snake_left").unwrap().evaluate(&f), id);
        assert_eq!(builtin("snake_right").unwrap().evaluate(&f), id);
        // The pairing is the swap pairing computed by hand.
        let alpha = builtin("alpha").unwrap().evaluate(&f);
        assert!(alpha.contains(&["1", "v"], &[]));
        assert!(alpha.contains(&["v", "1"], &[]));
        assert_eq!(alpha.len(), 2);
        // Commutativity through the swap generator.
        assert_eq!(
            parse("swap ; mul").unwrap().evaluate(&f),
            parse("mul").unwrap().evaluate(&f)
        );
    }

    #[test]
    fn genus_values_on_the_pair_example() {
        let f = one_volume_pair();
        // Genus 0 is the unit-counit sphere: η ∩ ε = ∅ here.
        assert!(!genus_invariant(&f, 0));
        // One handle reaches the counit through ν ∧ 1.
        assert!(genus_invariant(&f, 1));
    }

    #[test]
    fn genus_on_groupoid_objects_is_always_true() {
        let f = crate::groupoid::Groupoid::cyclic_group(2)
            .hcc_frobenius()
            .unwrap();
        for genus in 0..=5 {
            assert!(genus_invariant(&f, genus));
        }
        assert_eq!(
            parse("comul ; mul").unwrap().evaluate(&f),
            Relation::identity(f.carrier(), 1)
        );
    }

    #[test]
    fn empty_object_has_false_genus() {
        let f = FrobeniusObject::empty();
        for genus in 0..=3 {
            assert!(!genus_invariant(&f, genus));
        }
    }
}
