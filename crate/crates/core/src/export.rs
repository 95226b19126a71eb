//! Plain-text exports for computer-algebra systems. Indices are 1-based
//! here and 0-based everywhere else in the crate.

use crate::error::{ParseError, Result};
use crate::group::{Element, FiniteGroup};
use crate::limits::Limits;
use crate::rank::rank_with;

/// `n`, then `n` rows of 1-based product indices.
pub fn table_text(g: &FiniteGroup) -> String {
    let mut out = format!("{}\n", g.order());
    for a in g.elements() {
        let row: Vec<String> = g.row(a).iter().map(|&v| (v + 1).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Reads [`table_text`] output back into 0-based rows.
pub fn parse_table_text(text: &str) -> std::result::Result<Vec<Vec<usize>>, ParseError> {
    let err = |line: usize, message: String| ParseError {
        line,
        column: 1,
        message,
    };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, header) = lines.next().ok_or_else(|| err(1, "empty input".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| err(first, format!("expected the group order, found {header:?}")))?;
    let mut rows = Vec::with_capacity(n);
    for (line, l) in lines {
        let row = l
            .split_whitespace()
            .map(|t| match t.parse::<usize>() {
                Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                _ => Err(err(line, format!("expected an index in 1..={n}, found {t:?}"))),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(err(line, format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(err(first, format!("expected {n} rows, found {}", rows.len())));
    }
    Ok(rows)
}

/// Right-regular permutation `x -> x s` of each generator, as 0-based
/// image lists.
pub fn regular_permutations(g: &FiniteGroup, generators: &[Element]) -> Vec<Vec<usize>> {
    generators
        .iter()
        .map(|&s| g.elements().map(|x| g.mul(x, s)).collect())
        .collect()
}

/// One line per generator of a minimal generating set: the 1-based image
/// list of its right-regular permutation (readable by GAP's `PermList`).
pub fn permutation_text(g: &FiniteGroup, limits: &Limits) -> Result<String> {
    let gens = rank_with(g, limits)?.witness;
    let mut out = String::new();
    for perm in regular_permutations(g, &gens) {
        let images: Vec<String> = perm.iter().map(|&v| (v + 1).to_string()).collect();
        out.push_str(&images.join(" "));
        out.push('\n');
    }
    Ok(out)
}
