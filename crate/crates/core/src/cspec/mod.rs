//! Almost-schematic constant specifications over the built-in axiom schemes
//! of J: a schematic part assigning whole schemes to constants plus a finite
//! part of individual (constant, axiom instance) pairs.

mod pattern;

pub use pattern::{match_ground, Match, PTerm, Pattern};

use crate::error::{Error, Result};
use crate::syntax::{parse_jformula, JFormula};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

/// An axiom scheme. Formula metavariables `A, B, C` are `Meta(0..3)`, term
/// metavariables `S, T` are `PTerm::Meta(0..2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scheme {
    pub name: &'static str,
    pub pattern: Pattern,
}

impl Scheme {
    /// Largest metavariable id plus one, over both sorts.
    pub fn meta_span(&self) -> u32 {
        let (fs, ts) = self.pattern.metas();
        fs.into_iter().chain(ts).max().map_or(0, |m| m + 1)
    }

    pub fn matches(&self, ground: &JFormula) -> bool {
        match_ground(&self.pattern, ground).is_some()
    }
}

fn build_schemes() -> Vec<Scheme> {
    let a = || Pattern::Meta(0);
    let b = || Pattern::Meta(1);
    let c = || Pattern::Meta(2);
    let s = || PTerm::Meta(0);
    let t = || PTerm::Meta(1);
    let imp = Pattern::implies;
    vec![
        Scheme {
            name: "TAUT1",
            pattern: imp(a(), imp(b(), a())),
        },
        Scheme {
            name: "TAUT2",
            pattern: imp(imp(a(), imp(b(), c())), imp(imp(a(), b()), imp(a(), c()))),
        },
        Scheme {
            name: "TAUT3",
            pattern: imp(imp(Pattern::not(a()), Pattern::not(b())), imp(b(), a())),
        },
        Scheme {
            name: "APP",
            pattern: imp(
                Pattern::assert(s(), imp(a(), b())),
                imp(
                    Pattern::assert(t(), a()),
                    Pattern::assert(PTerm::app(s(), t()), b()),
                ),
            ),
        },
        Scheme {
            name: "SUM_L",
            pattern: imp(
                Pattern::assert(s(), a()),
                Pattern::assert(PTerm::sum(s(), t()), a()),
            ),
        },
        Scheme {
            name: "SUM_R",
            pattern: imp(
                Pattern::assert(t(), a()),
                Pattern::assert(PTerm::sum(s(), t()), a()),
            ),
        },
    ]
}

/// The axiom schemes of J: a Hilbert propositional base plus application and sum.
pub fn builtin_schemes() -> &'static [Scheme] {
    static SCHEMES: OnceLock<Vec<Scheme>> = OnceLock::new();
    SCHEMES.get_or_init(build_schemes)
}

pub fn scheme(name: &str) -> Option<&'static Scheme> {
    builtin_schemes().iter().find(|s| s.name == name)
}

/// Names of the built-in schemes that `ground` instantiates.
pub fn schemes_matching(ground: &JFormula) -> Vec<&'static str> {
    builtin_schemes()
        .iter()
        .filter(|s| s.matches(ground))
        .map(|s| s.name)
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CsFlags {
    pub require_injective: bool,
    pub require_appropriate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    /// A constant justifies more than one scheme.
    NotInjective {
        constant: String,
        schemes: Vec<String>,
    },
    /// Finite entries are not allowed in schematically injective mode.
    FiniteEntryInInjectiveMode { constant: String },
    /// No constant justifies this scheme.
    SchemeUncovered { scheme: String },
    /// A finite entry is already covered by the constant's schematic part.
    Overlap { constant: String, formula: String },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::NotInjective { constant, schemes } => {
                write!(
                    f,
                    "not schematically injective: `{constant}` justifies {}",
                    schemes.join(", ")
                )
            }
            Diagnostic::FiniteEntryInInjectiveMode { constant } => {
                write!(
                    f,
                    "not schematically injective: finite entry for `{constant}`"
                )
            }
            Diagnostic::SchemeUncovered { scheme } => {
                write!(
                    f,
                    "not axiomatically appropriate: no constant justifies {scheme}"
                )
            }
            Diagnostic::Overlap { constant, formula } => {
                write!(
                    f,
                    "finite entry ({constant}, {formula}) duplicates the schematic part"
                )
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConstantSpec {
    schematic: BTreeMap<String, BTreeSet<&'static str>>,
    finite: BTreeMap<String, BTreeSet<JFormula>>,
    pub flags: CsFlags,
}

impl ConstantSpec {
    pub fn empty() -> ConstantSpec {
        ConstantSpec::default()
    }

    /// One fresh constant per built-in scheme: `c_taut1`, ..., `c_app`,
    /// `c_sum_l`, `c_sum_r`. Axiomatically appropriate and schematically injective.
    pub fn default_spec() -> ConstantSpec {
        let mut cs = ConstantSpec::empty();
        for s in builtin_schemes() {
            cs.assign(&format!("c_{}", s.name.to_lowercase()), s.name)
                .expect("built-in scheme");
        }
        cs
    }

    pub fn assign(&mut self, constant: &str, scheme_name: &str) -> Result<()> {
        let s = scheme(scheme_name).ok_or_else(|| Error::ConstSpec {
            line: 0,
            msg: format!("unknown axiom scheme `{scheme_name}`"),
        })?;
        self.schematic
            .entry(constant.to_string())
            .or_default()
            .insert(s.name);
        Ok(())
    }

    /// Adds a finite pair; the formula must instantiate some built-in scheme.
    pub fn add_finite(&mut self, constant: &str, formula: JFormula) -> Result<()> {
        if schemes_matching(&formula).is_empty() {
            return Err(Error::ConstSpec {
                line: 0,
                msg: format!("`{formula}` is not an instance of any axiom scheme"),
            });
        }
        self.finite
            .entry(constant.to_string())
            .or_default()
            .insert(formula);
        Ok(())
    }

    pub fn schemes_of(&self, constant: &str) -> impl Iterator<Item = &'static Scheme> + '_ {
        self.schematic
            .get(constant)
            .into_iter()
            .flatten()
            .map(|n| scheme(n).expect("assigned schemes are built-ins"))
    }

    pub fn finite_of(&self, constant: &str) -> impl Iterator<Item = &JFormula> + '_ {
        self.finite.get(constant).into_iter().flatten()
    }

    pub fn constants(&self) -> BTreeSet<&str> {
        self.schematic
            .keys()
            .chain(self.finite.keys())
            .map(String::as_str)
            .collect()
    }

    /// Membership `(constant, formula) ∈ CS` by set lookup or scheme matching.
    pub fn contains(&self, constant: &str, formula: &JFormula) -> bool {
        self.finite
            .get(constant)
            .is_some_and(|set| set.contains(formula))
            || self.schemes_of(constant).any(|s| s.matches(formula))
    }

    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        if self.flags.require_injective {
            for (c, schemes) in &self.schematic {
                if schemes.len() > 1 {
                    out.push(Diagnostic::NotInjective {
                        constant: c.clone(),
                        schemes: schemes.iter().map(|s| s.to_string()).collect(),
                    });
                }
            }
            for (c, set) in &self.finite {
                if !set.is_empty() {
                    out.push(Diagnostic::FiniteEntryInInjectiveMode {
                        constant: c.clone(),
                    });
                }
            }
        }
        if self.flags.require_appropriate {
            for s in builtin_schemes() {
                if !self.schematic.values().any(|set| set.contains(s.name)) {
                    out.push(Diagnostic::SchemeUncovered {
                        scheme: s.name.to_string(),
                    });
                }
            }
        }
        for (c, set) in &self.finite {
            for f in set {
                if self.schemes_of(c).any(|s| s.matches(f)) {
                    out.push(Diagnostic::Overlap {
                        constant: c.clone(),
                        formula: f.to_string(),
                    });
                }
            }
        }
        out
    }

    /// Reads the line-oriented format:
    ///
    /// ```text
    /// [schematic]
    /// c1 : APP
    /// [finite]
    /// c9 : x1:p1 -> (x1 + x2):p1
    /// ```
    pub fn parse(text: &str) -> Result<ConstantSpec> {
        #[derive(PartialEq)]
        enum Section {
            None,
            Schematic,
            Finite,
        }
        let mut cs = ConstantSpec::empty();
        let mut section = Section::None;
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let err = |msg: String| Error::ConstSpec { line: line_no, msg };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            match line {
                "[schematic]" => {
                    section = Section::Schematic;
                    continue;
                }
                "[finite]" => {
                    section = Section::Finite;
                    continue;
                }
                _ => {}
            }
            let (constant, rest) = line
                .split_once(':')
                .ok_or_else(|| err("expected `constant : ...`".into()))?;
            let constant = constant.trim();
            if !is_constant_name(constant) {
                return Err(err(format!("`{constant}` is not a constant name")));
            }
            let rest = rest.trim();
            match section {
                Section::None => {
                    return Err(err("entry outside a [schematic] or [finite] section".into()))
                }
                Section::Schematic => cs.assign(constant, rest).map_err(|e| err(e.to_string()))?,
                Section::Finite => {
                    let f = parse_jformula(rest).map_err(|e| err(e.to_string()))?;
                    cs.add_finite(constant, f).map_err(|e| err(e.to_string()))?;
                }
            }
        }
        Ok(cs)
    }

    pub fn load(path: &Path) -> Result<ConstantSpec> {
        ConstantSpec::parse(&std::fs::read_to_string(path)?)
    }
}

fn is_constant_name(s: &str) -> bool {
    let mut chars = s.chars();
    let head_ok = chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
    let tail_ok = s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    let indexed = |p: char| {
        s.strip_prefix(p)
            .is_some_and(|r| !r.is_empty() && r.bytes().all(|b| b.is_ascii_digit()))
    };
    head_ok && tail_ok && !indexed('p') && !indexed('x')
}
