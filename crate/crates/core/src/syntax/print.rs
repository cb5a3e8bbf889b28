use super::{JFormula, PFormula, Term};
use crate::rational::fmt_short;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Level {
    Top,
    Factor,
    Prim,
}

fn write_term(f: &mut fmt::Formatter<'_>, t: &Term, level: Level) -> fmt::Result {
    match t {
        Term::Const(name) => write!(f, "{name}"),
        Term::Var(i) => write!(f, "x{i}"),
        Term::Bang(inner) => {
            write!(f, "!")?;
            write_term(f, inner, Level::Prim)
        }
        Term::App(l, r) => {
            let wrap = level >= Level::Prim;
            if wrap {
                write!(f, "(")?;
            }
            write_term(f, l, Level::Factor)?;
            write!(f, ".")?;
            write_term(f, r, Level::Prim)?;
            if wrap {
                write!(f, ")")?;
            }
            Ok(())
        }
        Term::Sum(l, r) => {
            let wrap = level >= Level::Factor;
            if wrap {
                write!(f, "(")?;
            }
            write_term(f, l, Level::Top)?;
            write!(f, " + ")?;
            write_term(f, r, Level::Factor)?;
            if wrap {
                write!(f, ")")?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(f, self, Level::Top)
    }
}

fn write_j(f: &mut fmt::Formatter<'_>, phi: &JFormula, level: Level) -> fmt::Result {
    match phi {
        JFormula::Prop(i) => write!(f, "p{i}"),
        JFormula::Not(inner) => {
            write!(f, "~")?;
            write_j(f, inner, Level::Factor)
        }
        JFormula::Assert(t, body) => {
            // composite terms are bracketed before ':' for readability
            write_term(f, t, Level::Prim)?;
            write!(f, ":")?;
            write_j(f, body, Level::Factor)
        }
        JFormula::And(l, r) => {
            let wrap = level >= Level::Factor;
            if wrap {
                write!(f, "(")?;
            }
            write_j(f, l, Level::Top)?;
            write!(f, " & ")?;
            write_j(f, r, Level::Factor)?;
            if wrap {
                write!(f, ")")?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for JFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_j(f, self, Level::Top)
    }
}

fn write_p(f: &mut fmt::Formatter<'_>, a: &PFormula, level: Level) -> fmt::Result {
    match a {
        PFormula::AtLeast(s, body) => {
            write!(f, "P>={} ", fmt_short(s))?;
            write_j(f, body, Level::Factor)
        }
        PFormula::Not(inner) => {
            write!(f, "~")?;
            write_p(f, inner, Level::Factor)
        }
        PFormula::And(l, r) => {
            let wrap = level >= Level::Factor;
            if wrap {
                write!(f, "(")?;
            }
            write_p(f, l, Level::Top)?;
            write!(f, " & ")?;
            write_p(f, r, Level::Factor)?;
            if wrap {
                write!(f, ")")?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for PFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_p(f, self, Level::Top)
    }
}
