use std::io::Read;
use std::path::Path;

use macaulay::{parse_poly, Polynomial, Ring};

use crate::error::CliError;

/// Text behind an argument: stdin for "-", the file contents for an existing
/// path, otherwise the argument itself.
pub fn resolve(arg: &str) -> Result<String, CliError> {
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
        return Ok(text);
    }
    let path = Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path).map_err(|source| CliError::Io { path: arg.into(), source });
    }
    Ok(arg.to_string())
}

fn strip_comment(line: &str) -> &str {
    match line.find("//") {
        Some(at) => &line[..at],
        None => line,
    }
}

/// Drops a leading `name=` or `name[k]=` label and a trailing `;`.
fn strip_label(item: &str) -> &str {
    let item = item.trim().trim_end_matches(';').trim();
    if let Some(at) = item.find('=') {
        let label = item[..at].trim();
        let is_label = label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '[' || c == ']' || c == ' ');
        if is_label && !label.is_empty() {
            return item[at + 1..].trim();
        }
    }
    item
}

/// Splits a generator list. With a comma anywhere the list is comma separated;
/// otherwise each line is one generator, and an indented line starting with a
/// sign continues the previous one.
pub fn split_generators(text: &str) -> Vec<String> {
    let lines: Vec<&str> = text.lines().map(strip_comment).collect();
    let joined = lines.join("\n");
    if joined.contains(',') {
        return joined.split(',').map(strip_label).filter(|s| !s.is_empty()).map(str::to_string).collect();
    }
    let mut items: Vec<String> = Vec::new();
    for line in lines {
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indented = line.starts_with(char::is_whitespace);
        let continues = indented && (trimmed.starts_with('+') || trimmed.starts_with('-'));
        match items.last_mut() {
            Some(last) if continues => last.push_str(trimmed),
            _ => items.push(trimmed.to_string()),
        }
    }
    items.iter().map(|s| strip_label(s).to_string()).filter(|s| !s.is_empty()).collect()
}

pub fn read_polys(arg: &str, ring: &Ring) -> Result<Vec<Polynomial>, CliError> {
    let text = resolve(arg)?;
    split_generators(&text).iter().map(|s| Ok(parse_poly(s, ring)?)).collect()
}

pub fn read_poly(arg: &str, ring: &Ring) -> Result<Polynomial, CliError> {
    let mut polys = read_polys(arg, ring)?;
    match polys.len() {
        0 => Ok(Polynomial::zero(*ring)),
        1 => Ok(polys.remove(0)),
        k => Err(CliError::Usage(format!("expected one polynomial, got {k}"))),
    }
}

/// A field element written as an integer or a fraction.
pub fn read_scalar(arg: &str, ring: &Ring) -> Result<macaulay::Scalar, CliError> {
    let p = parse_poly(arg, ring)?;
    if p.degree().unwrap_or(0) > 0 {
        return Err(CliError::Usage(format!("expected a number, got {arg}")));
    }
    Ok(p.constant_term())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comma_lists() {
        assert_eq!(split_generators("x1^2+x2^3, x2^4 ,x3"), ["x1^2+x2^3", "x2^4", "x3"]);
        assert_eq!(split_generators("x1,\n  x2 // second\n"), ["x1", "x2"]);
    }

    #[test]
    fn newline_lists_with_labels() {
        let text = "g[1]=x1^2\ng[2]=x2^2-x1*x2\n\n";
        assert_eq!(split_generators(text), ["x1^2", "x2^2-x1*x2"]);
        let listing = "i[1]=2*x(1)^2-x(3)^2\n    +x(1)^2*x(2)\ni[2]=-x(2)^3;\n";
        assert_eq!(split_generators(listing), ["2*x(1)^2-x(3)^2+x(1)^2*x(2)", "-x(2)^3"]);
    }

    #[test]
    fn labels_need_a_name() {
        assert_eq!(strip_label("ideal i = x1"), "x1");
        assert_eq!(strip_label("x1^2"), "x1^2");
    }
}
