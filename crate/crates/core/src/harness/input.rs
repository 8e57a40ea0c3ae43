//! Line-oriented input format.
//!
//! ```text
//! ring p=32003 vars=x,y,z order=degrevlex
//! ideal: x^2; x*y
//! ```
//!
//! or, for a direct sum of cyclic modules with an optional annihilator:
//!
//! ```text
//! ring p=32003 vars=x,y,z
//! summand: x^2; y^2
//! summand: x; y; z
//! ann: x^2; y^2
//! ```
//!
//! `#` starts a comment; blank lines are ignored.

use crate::error::{EngineError, Result};
use crate::polyring::{MonomialOrder, Polynomial, Ring, DEFAULT_CHARACTERISTIC};
use crate::resolution::ModulePresentation;

#[derive(Debug, Clone)]
pub enum ModuleInput {
    Cyclic(Vec<Polynomial>),
    DirectSum(Vec<Vec<Polynomial>>),
}

impl ModuleInput {
    pub fn presentation(&self, ring: &Ring) -> Result<ModulePresentation> {
        match self {
            ModuleInput::Cyclic(ideal) => ModulePresentation::cyclic(ring.clone(), ideal),
            ModuleInput::DirectSum(blocks) => ModulePresentation::direct_sum(ring.clone(), blocks),
        }
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self, ModuleInput::Cyclic(_))
    }

    pub fn cyclic_ideal(&self) -> Option<&[Polynomial]> {
        match self {
            ModuleInput::Cyclic(ideal) => Some(ideal),
            ModuleInput::DirectSum(_) => None,
        }
    }

    pub fn blocks(&self) -> Vec<Vec<Polynomial>> {
        match self {
            ModuleInput::Cyclic(ideal) => vec![ideal.clone()],
            ModuleInput::DirectSum(blocks) => blocks.clone(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ParsedInput {
    pub ring: Ring,
    pub module: ModuleInput,
    pub ann: Option<Vec<Polynomial>>,
}

/// Parse the documented job format. A characteristic override replaces
/// the ring line's `p=` (coefficients re-reduce accordingly).
pub fn parse_input(text: &str, char_override: Option<u64>) -> Result<ParsedInput> {
    let mut ring: Option<Ring> = None;
    let mut ideal: Option<Vec<Polynomial>> = None;
    let mut summands: Vec<Vec<Polynomial>> = Vec::new();
    let mut ann: Option<Vec<Polynomial>> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("ring") {
            if ring.is_some() {
                return Err(parse_err(line_no, 1, "duplicate ring line"));
            }
            ring = Some(parse_ring_line(rest, line_no, char_override)?);
            continue;
        }
        let ring_ref = ring
            .as_ref()
            .ok_or_else(|| parse_err(line_no, 1, "the ring line must come first"))?;
        if let Some(rest) = line.strip_prefix("ideal:") {
            if ideal.is_some() {
                return Err(parse_err(line_no, 1, "duplicate ideal block"));
            }
            if !summands.is_empty() {
                return Err(parse_err(line_no, 1, "cannot mix ideal and summand blocks"));
            }
            ideal = Some(parse_poly_list(ring_ref, rest, line_no, raw)?);
        } else if let Some(rest) = line.strip_prefix("summand:") {
            if ideal.is_some() {
                return Err(parse_err(line_no, 1, "cannot mix ideal and summand blocks"));
            }
            summands.push(parse_poly_list(ring_ref, rest, line_no, raw)?);
        } else if let Some(rest) = line.strip_prefix("ann:") {
            if ann.is_some() {
                return Err(parse_err(line_no, 1, "duplicate ann block"));
            }
            ann = Some(parse_poly_list(ring_ref, rest, line_no, raw)?);
        } else {
            return Err(parse_err(
                line_no,
                1,
                &format!("unrecognised directive `{}`", line.split(':').next().unwrap_or(line)),
            ));
        }
    }

    let ring = ring.ok_or_else(|| parse_err(1, 1, "missing ring line"))?;
    let module = match (ideal, summands.is_empty()) {
        (Some(i), true) => ModuleInput::Cyclic(i),
        (None, false) => ModuleInput::DirectSum(summands),
        (None, true) => return Err(parse_err(1, 1, "missing ideal or summand block")),
        (Some(_), false) => unreachable!("mixing rejected above"),
    };
    Ok(ParsedInput { ring, module, ann })
}

fn parse_err(line: usize, col: usize, msg: &str) -> EngineError {
    EngineError::Parse { line, col, msg: msg.to_string() }
}

fn parse_ring_line(rest: &str, line_no: usize, char_override: Option<u64>) -> Result<Ring> {
    let mut p: Option<u64> = None;
    let mut vars: Option<Vec<String>> = None;
    let mut order = MonomialOrder::DegRevLex;
    for field in rest.split_whitespace() {
        if let Some(v) = field.strip_prefix("p=") {
            p = Some(
                v.parse::<u64>()
                    .map_err(|_| parse_err(line_no, 1, "p= expects an integer"))?,
            );
        } else if let Some(v) = field.strip_prefix("vars=") {
            let names: Vec<String> = v.split(',').map(|s| s.trim().to_string()).collect();
            if names.iter().any(|n| n.is_empty()) {
                return Err(parse_err(line_no, 1, "empty variable name"));
            }
            vars = Some(names);
        } else if let Some(v) = field.strip_prefix("order=") {
            order = MonomialOrder::parse(v)
                .ok_or_else(|| parse_err(line_no, 1, &format!("unknown order `{v}`")))?;
        } else {
            return Err(parse_err(line_no, 1, &format!("unknown ring field `{field}`")));
        }
    }
    let vars = vars.ok_or_else(|| parse_err(line_no, 1, "ring line needs vars="))?;
    let p = char_override.or(p).unwrap_or(DEFAULT_CHARACTERISTIC);
    Ring::new(p, vars, order).map_err(|e| match e {
        EngineError::NotPrime(q) => parse_err(line_no, 1, &format!("characteristic {q} is not prime")),
        other => other,
    })
}

fn parse_poly_list(
    ring: &Ring,
    rest: &str,
    line_no: usize,
    raw_line: &str,
) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let base = raw_line.len() - rest.len();
    let mut offset = 0usize;
    for segment in rest.split(';') {
        if !segment.trim().is_empty() {
            let poly = ring.parse_poly(segment).map_err(|e| match e {
                EngineError::Parse { col, msg, .. } => EngineError::Parse {
                    line: line_no,
                    col: base + offset + col,
                    msg,
                },
                EngineError::DegreeMismatch(a, b) => EngineError::Parse {
                    line: line_no,
                    col: base + offset + 1,
                    msg: format!("generator is not homogeneous (degrees {a} and {b})"),
                },
                other => other.at_line(line_no),
            })?;
            if !poly.is_zero() {
                out.push(poly);
            }
        }
        offset += segment.len() + 1;
    }
    Ok(out)
}

/// Render a job back into the input format; the output re-parses to an
/// equivalent job, which is how counterexample candidates ship their
/// re-creation data.
pub fn render_input(ring: &Ring, module: &ModuleInput, ann: Option<&[Polynomial]>) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "ring p={} vars={} order={}\n",
        ring.characteristic(),
        ring.var_names().join(","),
        ring.order().name()
    ));
    let join = |polys: &[Polynomial]| {
        polys
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("; ")
    };
    match module {
        ModuleInput::Cyclic(ideal) => {
            out.push_str(&format!("ideal: {}\n", join(ideal)));
        }
        ModuleInput::DirectSum(blocks) => {
            for block in blocks {
                out.push_str(&format!("summand: {}\n", join(block)));
            }
        }
    }
    if let Some(j) = ann {
        out.push_str(&format!("ann: {}\n", join(j)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_cyclic_job() {
        let text = "# squared maximal ideal\nring p=32003 vars=x,y,z order=degrevlex\nideal: x^2; x*y; x*z; y^2; y*z; z^2\n";
        let parsed = parse_input(text, None).unwrap();
        assert_eq!(parsed.ring.num_vars(), 3);
        assert!(parsed.module.is_cyclic());
        assert_eq!(parsed.module.cyclic_ideal().unwrap().len(), 6);
        assert!(parsed.ann.is_none());
    }

    #[test]
    fn parses_direct_sum_with_ann() {
        let text = "ring vars=x,y,z\nsummand: x^2; y^2\nsummand: x; y; z\nann: x^2; y^2\n";
        let parsed = parse_input(text, None).unwrap();
        assert_eq!(parsed.ring.characteristic(), DEFAULT_CHARACTERISTIC);
        match &parsed.module {
            ModuleInput::DirectSum(blocks) => assert_eq!(blocks.len(), 2),
            _ => panic!("expected direct sum"),
        }
        assert_eq!(parsed.ann.as_ref().unwrap().len(), 2);
    }

    #[test]
    fn parses_the_eight_variable_fixture() {
        let text = "ring p=32003 vars=x1,x2,y1,y2,z1,z2,z3,z4 order=degrevlex\nideal: x1^6; y1^6; x1^2*x2^4 + y1^2*y2^4 + x1*y1*x2^3*z1 + x1*y1*x2^2*y2*z2 + x1*y1*x2*y2^2*z3 + x1*y1*y2^3*z4\n";
        let parsed = parse_input(text, None).unwrap();
        assert_eq!(parsed.ring.num_vars(), 8);
        let ideal = parsed.module.cyclic_ideal().unwrap();
        assert_eq!(ideal.len(), 3);
        assert_eq!(ideal[2].degree(), Some(6));
        assert_eq!(ideal[2].num_terms(), 6);
    }

    #[test]
    fn errors_carry_line_and_column() {
        let text = "ring p=32003 vars=x,y\nideal: x^2; x*w\n";
        match parse_input(text, None).unwrap_err() {
            EngineError::Parse { line, col, msg } => {
                assert_eq!(line, 2);
                assert!(col > 8, "col = {col}");
                assert!(msg.contains("unknown variable"));
            }
            other => panic!("unexpected error {other}"),
        }
        // non-homogeneous generator
        let text = "ring p=32003 vars=x,y\nideal: x^2 + y\n";
        assert!(matches!(
            parse_input(text, None).unwrap_err(),
            EngineError::Parse { line: 2, .. }
        ));
        // composite characteristic
        let text = "ring p=32001 vars=x,y\nideal: x\n";
        assert!(matches!(
            parse_input(text, None).unwrap_err(),
            EngineError::Parse { line: 1, .. }
        ));
    }

    #[test]
    fn characteristic_override_re_reduces_coefficients() {
        let text = "ring p=32003 vars=x,y\nideal: 7*x^2\n";
        let parsed = parse_input(text, Some(7)).unwrap();
        assert_eq!(parsed.ring.characteristic(), 7);
        assert!(parsed.module.cyclic_ideal().unwrap().is_empty());
    }

    #[test]
    fn rendered_input_round_trips() {
        let text = "ring p=101 vars=x,y,z order=lex\nsummand: x^2; y^2\nsummand: z\nann: x^2*z\n";
        let parsed = parse_input(text, None).unwrap();
        let rendered = render_input(&parsed.ring, &parsed.module, parsed.ann.as_deref());
        let reparsed = parse_input(&rendered, None).unwrap();
        assert_eq!(reparsed.ring.characteristic(), 101);
        assert_eq!(rendered, render_input(&reparsed.ring, &reparsed.module, reparsed.ann.as_deref()));
    }
}
