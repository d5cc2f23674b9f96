//! The ideal text format: header lines naming the ring, field and order,
//! an optional radical flag, then one generator per line.
//!
//! ```text
//! ring x1 y1 z1 x2 y2 z2
//! field p=32003
//! order grevlex
//! radical false
//! gens:
//! x1*y2 - x2*y1
//! y1*z2 - y2*z1
//! ```

use comvar::{
    make_ring, parse_polynomial, Error, FieldSpec, IdealPresentation, MonomialOrder,
};

/// Serializes a presentation; `read_ideal` inverts this exactly.
pub fn write_ideal(ideal: &IdealPresentation) -> String {
    let ring = ideal.ring();
    let mut out = String::new();
    out.push_str("ring ");
    out.push_str(&ring.vars().join(" "));
    out.push('\n');
    out.push_str(&format!("field {}\n", ring.field()));
    out.push_str(&format!("order {}\n", ring.order()));
    out.push_str(&format!("radical {}\n", ideal.radical_closure()));
    out.push_str("gens:\n");
    for g in ideal.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

fn header_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col: 1,
        msg: msg.into(),
    }
}

/// Parses the ideal text format. Errors carry the offending line.
pub fn read_ideal(text: &str) -> Result<IdealPresentation, Error> {
    let mut names: Option<Vec<String>> = None;
    let mut field: Option<FieldSpec> = None;
    let mut order = MonomialOrder::GrevLex;
    let mut radical = false;
    let mut gens_at: Option<usize> = None;

    let lines: Vec<&str> = text.lines().collect();
    for (idx, raw) in lines.iter().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line == "gens:" {
            gens_at = Some(idx + 1);
            break;
        }
        let (key, rest) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| header_error(lineno, format!("malformed header `{line}`")))?;
        let rest = rest.trim();
        match key {
            "ring" => {
                names = Some(rest.split_whitespace().map(String::from).collect());
            }
            "field" => {
                field = Some(parse_field_token(rest, lineno)?);
            }
            "order" => {
                order = parse_order_token(rest, lineno)?;
            }
            "radical" => {
                radical = match rest {
                    "true" => true,
                    "false" => false,
                    other => {
                        return Err(header_error(
                            lineno,
                            format!("radical flag must be true or false, got `{other}`"),
                        ))
                    }
                };
            }
            other => return Err(header_error(lineno, format!("unknown header `{other}`"))),
        }
    }

    let gens_start =
        gens_at.ok_or_else(|| header_error(lines.len().max(1), "missing `gens:` section"))?;
    let names = names.ok_or_else(|| header_error(1, "missing `ring` header"))?;
    let field = field.ok_or_else(|| header_error(1, "missing `field` header"))?;
    let ring = make_ring(&names, field, order)?;

    let mut gens = Vec::new();
    for (idx, raw) in lines.iter().enumerate().skip(gens_start) {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let poly = parse_polynomial(&ring, raw).map_err(|e| match e {
            // line numbers are relative to the polynomial text; rebase
            Error::Parse { col, msg, .. } => Error::Parse {
                line: idx + 1,
                col,
                msg,
            },
            other => other,
        })?;
        gens.push(poly);
    }
    IdealPresentation::new(ring, gens, radical)
}

fn parse_field_token(s: &str, lineno: usize) -> Result<FieldSpec, Error> {
    if s == "q" {
        return Ok(FieldSpec::Rationals);
    }
    if let Some(p) = s.strip_prefix("p=") {
        let p: u64 = p
            .parse()
            .map_err(|_| header_error(lineno, format!("bad prime `{p}`")))?;
        return FieldSpec::prime(p);
    }
    Err(header_error(
        lineno,
        format!("field must be `q` or `p=<prime>`, got `{s}`"),
    ))
}

fn parse_order_token(s: &str, lineno: usize) -> Result<MonomialOrder, Error> {
    match s {
        "lex" => Ok(MonomialOrder::Lex),
        "grevlex" => Ok(MonomialOrder::GrevLex),
        other => {
            if let Some(k) = other.strip_prefix("block:") {
                let split: usize = k
                    .parse()
                    .map_err(|_| header_error(lineno, format!("bad block split `{k}`")))?;
                Ok(MonomialOrder::Block { split })
            } else {
                Err(header_error(lineno, format!("unknown order `{other}`")))
            }
        }
    }
}
