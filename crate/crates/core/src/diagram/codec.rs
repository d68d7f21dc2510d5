//! Signed Gauss code text format.
//!
//! Tokens are `(O|U)<label>(+|-)` separated by whitespace, `/` separates
//! components and `#` starts a comment running to the end of the line.
//! The first token of each component marks its base point.

use super::{GaussDiagram, RawEndpoint, RawGauss, Role, Sign};
use crate::error::{Error, Result};

pub fn parse_gauss_code(text: &str) -> Result<GaussDiagram> {
    let mut components: Vec<Vec<RawEndpoint>> = vec![Vec::new()];
    for (ln, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let mut chars = line.char_indices().peekable();
        while let Some(&(start, ch)) = chars.peek() {
            if ch.is_whitespace() {
                chars.next();
                continue;
            }
            if ch == '/' {
                chars.next();
                components.push(Vec::new());
                continue;
            }
            let mut end = start;
            while let Some(&(i, c)) = chars.peek() {
                if c.is_whitespace() || c == '/' {
                    break;
                }
                end = i + c.len_utf8();
                chars.next();
            }
            let token = &line[start..end];
            let column = line[..start].chars().count() + 1;
            let endpoint = parse_token(token).map_err(|message| Error::Syntax {
                line: ln + 1,
                column,
                message,
            })?;
            components.last_mut().expect("nonempty").push(endpoint);
        }
    }
    GaussDiagram::validate(&RawGauss { components })
}

fn parse_token(token: &str) -> std::result::Result<RawEndpoint, String> {
    let mut chars = token.chars();
    let role = match chars.next() {
        Some('O') => Role::Tail,
        Some('U') => Role::Head,
        _ => return Err(format!("token '{token}' must start with O or U")),
    };
    let rest = chars.as_str();
    let sign = match rest.chars().last() {
        Some('+') => Sign::Pos,
        Some('-') => Sign::Neg,
        _ => return Err(format!("token '{token}' must end with + or -")),
    };
    let digits = &rest[..rest.len() - 1];
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(format!("token '{token}' needs a positive integer label"));
    }
    let label: u32 = digits
        .parse()
        .map_err(|_| format!("label in '{token}' is too large"))?;
    if label == 0 {
        return Err(format!("label in '{token}' must be positive"));
    }
    Ok(RawEndpoint { label, role, sign })
}

/// Canonical serialization: components in order, labels renumbered by
/// first appearance, single spaces, `/` between components.
pub fn emit_gauss_code(g: &GaussDiagram) -> String {
    let mut out = String::new();
    g.layout().write_tokens(&mut out, |a| Some(g.sign(a)));
    out
}
