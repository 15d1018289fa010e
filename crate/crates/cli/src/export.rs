//! Plain-text ideal export for pasting into an external algebra system.
//!
//! Format, one item per line, each line ending in `\n`:
//!
//! ```text
//! -- coverideal <version> export 1
//! R = QQ[<variables, comma separated, no spaces>]
//! I = ideal(
//!   <generator>,
//!   <generator>
//! )
//! ```
//!
//! Generators are written as `v^e*w` products (exponent 1 omitted), one per
//! line, in decreasing lexicographic order with the first variable largest.
//! The zero ideal has the single body line `  0`; the unit ideal `  1`.

use coverideal::monomial::{render_monomial, DegreeVector};

use crate::document::TOOL_VERSION;

pub const EXPORT_VERSION: u32 = 1;

pub fn export_ideal(variables: &[String], generators: &[Vec<u16>]) -> String {
    let mut gens: Vec<&Vec<u16>> = generators.iter().collect();
    gens.sort_by(|a, b| b.cmp(a));
    let body: Vec<String> = if gens.is_empty() {
        vec!["0".to_string()]
    } else {
        gens.iter().map(|g| render_monomial(variables, &DegreeVector::from_slice(g))).collect()
    };
    let mut out = format!("-- {TOOL_VERSION} export {EXPORT_VERSION}\n");
    out.push_str(&format!("R = QQ[{}]\n", variables.join(",")));
    out.push_str("I = ideal(\n");
    for (i, line) in body.iter().enumerate() {
        let sep = if i + 1 < body.len() { "," } else { "" };
        out.push_str(&format!("  {line}{sep}\n"));
    }
    out.push_str(")\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    #[test]
    fn zero_and_unit() {
        let zero = export_ideal(&names(2), &[]);
        assert!(zero.ends_with("I = ideal(\n  0\n)\n"));
        let unit = export_ideal(&names(2), &[vec![0, 0]]);
        assert!(unit.ends_with("I = ideal(\n  1\n)\n"));
    }

    #[test]
    fn order_and_layout() {
        let text = export_ideal(&names(3), &[vec![0, 1, 1], vec![2, 0, 1]]);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], format!("-- {TOOL_VERSION} export 1"));
        assert_eq!(&lines[1..], ["R = QQ[x1,x2,x3]", "I = ideal(", "  x1^2*x3,", "  x2*x3", ")"]);
    }
}
