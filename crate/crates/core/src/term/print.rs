//! Printing with the fewest parentheses that still parse back to the same tree.

use std::fmt;

use super::ObsTerm;

// Binding strength: `->` < `|` < `&` < atoms.
const IMPL: u8 = 1;
const OR: u8 = 2;
const AND: u8 = 3;
const ATOM: u8 = 4;

fn level(t: &ObsTerm) -> u8 {
    match t {
        ObsTerm::Impl(..) => IMPL,
        ObsTerm::Or(..) => OR,
        ObsTerm::And(..) => AND,
        _ => ATOM,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, t: &ObsTerm, min: u8) -> fmt::Result {
    if level(t) < min {
        f.write_str("(")?;
        write_term(f, t)?;
        f.write_str(")")
    } else {
        write_term(f, t)
    }
}

pub(super) fn write_term(f: &mut fmt::Formatter<'_>, t: &ObsTerm) -> fmt::Result {
    match t {
        ObsTerm::Atom(a) => write!(f, "{a}"),
        ObsTerm::Top => f.write_str("top"),
        ObsTerm::Bot => f.write_str("bot"),
        // Left-associative: the right operand needs a strictly tighter level.
        ObsTerm::And(l, r) => {
            write_at(f, l, AND)?;
            f.write_str(" & ")?;
            write_at(f, r, AND + 1)
        }
        ObsTerm::Or(l, r) => {
            write_at(f, l, OR)?;
            f.write_str(" | ")?;
            write_at(f, r, OR + 1)
        }
        // Right-associative.
        ObsTerm::Impl(l, r) => {
            write_at(f, l, IMPL + 1)?;
            f.write_str(" -> ")?;
            write_at(f, r, IMPL)
        }
    }
}
