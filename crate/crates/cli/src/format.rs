//! Text formatting shared by the commands.

use spinorbit::arith::{GaussRat, Rat};
use spinorbit::e8::algebra::{LieElem, E8};

/// Pads every column to its widest cell, two spaces apart.
pub fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let width: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let mut line = String::new();
        for (c, cell) in r.iter().enumerate() {
            line.push_str(cell);
            if c + 1 < r.len() {
                line.extend(std::iter::repeat_n(' ', width[c] - cell.chars().count() + 2));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn signed_terms<'a>(terms: impl Iterator<Item = (String, &'a GaussRat)>) -> String {
    let mut out = String::new();
    for (name, c) in terms {
        let (neg, mag) = if c.looks_negative() { (true, -c.clone()) } else { (false, c.clone()) };
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if mag.is_compound() {
            out.push_str(&format!("({mag})*"));
        } else if !mag.is_one() {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(&name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// An element of E8 in its Chevalley basis labels.
pub fn lie(e8: &E8, x: &LieElem) -> String {
    signed_terms(x.iter().map(|(b, c)| (e8.label(b), c)))
}

/// Coordinates on `p1..p4` as a linear combination.
pub fn p_combination(coords: &[GaussRat]) -> String {
    signed_terms(coords.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (format!("p{}", k + 1), c)))
}

/// Parses `p1`, `2*p1-p3`, `1/2p2+p4` into coordinates on `p1..p4`.
pub fn parse_p_expr(s: &str) -> Result<Vec<GaussRat>, String> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("cannot parse `{s}` as a combination of p1..p4");
    if s.is_empty() {
        return Err(bad());
    }
    let mut coords = vec![GaussRat::ZERO; 4];
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let (neg, body) = match rest.as_bytes()[0] {
            b'-' => (true, &rest[1..]),
            b'+' => (false, &rest[1..]),
            _ if rest.len() == s.len() => (false, rest),
            _ => return Err(bad()),
        };
        if body.is_empty() {
            return Err(bad());
        }
        let end = body[1..].find(['+', '-']).map_or(body.len(), |k| k + 1);
        let term = &body[..end];
        rest = &body[end..];
        let at = term.find('p').ok_or_else(bad)?;
        let coeff = term[..at].trim_end_matches('*');
        let c: Rat = if coeff.is_empty() { Rat::ONE } else { coeff.parse().map_err(|_| bad())? };
        let k: usize = term[at + 1..].parse().map_err(|_| bad())?;
        if !(1..=4).contains(&k) {
            return Err(bad());
        }
        let c = GaussRat::from(if neg { -c } else { c });
        coords[k - 1] += c;
    }
    Ok(coords)
}
