//! Graphs whose eigenvalue -1 has multiplicity `n - 1`, `n - 2` or `n - 3`.

use std::collections::{BTreeSet, HashSet};

use super::generate::for_each_partition;
use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::named::{complete, complete_bipartite, kn_minus, union_all};
use crate::spectra::integer_eigenvalue_multiplicity;

/// Largest order for the survey.
pub const MAX_SURVEY_ORDER: usize = 9;

/// The graphs on `n` vertices that the classification allows for a given
/// deficiency `n - mult(-1)`: `K_n` for 1; `K_a + K_b` for 2;
/// `K_n \ K_{l,m}` (`l + m <= n - 1`) or `K_a + K_b + K_c` for 3.
pub fn classified_forms(n: usize, deficiency: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    match deficiency {
        1 if n >= 1 => out.push(complete(n)?),
        2 => {
            for a in 1..=n / 2 {
                out.push(union_all(&[complete(a)?, complete(n - a)?])?);
            }
        }
        3 => {
            for l in 1..n {
                for m in l..n {
                    if l + m < n {
                        out.push(kn_minus(n, &complete_bipartite(l, m)?)?);
                    }
                }
            }
            for a in 1..=n {
                for b in a..=n {
                    if a + b < n && n - a - b >= b {
                        out.push(union_all(&[complete(a)?, complete(b)?, complete(n - a - b)?])?);
                    }
                }
            }
        }
        1 => {}
        d => return Err(Error::Argument(format!("deficiency must be 1, 2 or 3, got {d}"))),
    }
    Ok(out)
}

/// Distinct rows of `A + I`; a rank-`r` 0/1 matrix has at most `2^r`.
fn distinct_closed_rows(g: &Graph) -> usize {
    g.rows()
        .iter()
        .enumerate()
        .map(|(i, &r)| r | 1 << i)
        .collect::<HashSet<u64>>()
        .len()
}

/// All graphs on `n` vertices with `mult(-1) = n - deficiency`, checked
/// against [`classified_forms`]; any graph outside the classification is a
/// contract violation.
pub fn multiplicity_survey(n: usize, deficiency: usize, jobs: usize) -> Result<Vec<Graph>> {
    if n > MAX_SURVEY_ORDER {
        return Err(Error::capacity("multiplicity survey", n, MAX_SURVEY_ORDER));
    }
    if !(1..=3).contains(&deficiency) {
        return Err(Error::Argument(format!(
            "deficiency must be 1, 2 or 3, got {deficiency}"
        )));
    }
    let Some(target) = n.checked_sub(deficiency) else {
        return Ok(Vec::new());
    };
    let mut found = for_each_partition(n, jobs, |g| {
        if distinct_closed_rows(g) > 1 << deficiency {
            return None;
        }
        (integer_eigenvalue_multiplicity(g, -1) == target).then(|| g.clone())
    })?;
    found.sort_by_cached_key(canonical_form);
    let allowed: BTreeSet<_> = classified_forms(n, deficiency)?
        .iter()
        .map(canonical_form)
        .collect();
    let outside: Vec<String> = found
        .iter()
        .filter(|g| !allowed.contains(&canonical_form(g)))
        .map(to_graph6)
        .collect();
    if !outside.is_empty() {
        return Err(Error::ContractViolation(format!(
            "graphs with mult(-1) = {target} outside the classification: {}",
            outside.join(" ")
        )));
    }
    Ok(found)
}
