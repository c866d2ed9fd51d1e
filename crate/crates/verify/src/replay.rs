//! Certificate replay: every representative and witness in a report is
//! re-checked in isolation against the predicate of its claim.

use polyperm_core::realize::{is_double_permutation_support, realize_polystochastic, realize_sesquialteral};
use polyperm_core::{canonical_form, has_positive_diagonal, Diagonal, SupportSet};

use crate::claim_ab::is_a_candidate;
use crate::claim_planes::{check_configuration, Configuration};
use crate::error::Result;
use crate::lemmas::{adds_nothing_to_filled, filled_permutation, is_residue2_completion};
use crate::report::{EnumerationReport, Witness};

fn stack_is_zero(planes: &[SupportSet]) -> bool {
    let shape = match polyperm_core::Shape::new(3, 4) {
        Ok(s) => s,
        Err(_) => return false,
    };
    planes.len() == 4
        && planes.iter().all(|p| p.shape().d() == 2 && p.shape().n() == 4)
        && !has_positive_diagonal(&SupportSet::from_word(
            shape,
            planes.iter().enumerate().fold(0, |acc, (a, p)| acc | p.word() << (16 * a)),
        ))
        .is_positive()
}

fn check_witness(w: &Witness) -> Result<bool> {
    let s = w.parsed()?;
    Ok(match w.kind.as_str() {
        "zero-stack" => {
            stack_is_zero(&s)
                && is_a_candidate(&s[0])
                && s[1].max_line_count() >= 2
                && realize_polystochastic(&s[1]).is_some()
                && s[2].is_permutation()
                && s[3].is_permutation()
        }
        "zero-configuration" => {
            s.len() == 4 && s.iter().all(|x| x.shape().d() == 3 && x.shape().n() == 4) && {
                let c: Configuration = std::array::from_fn(|v| s[v].word());
                check_configuration(&c)
            }
        }
        "diagonal-in" => {
            s.len() == 2
                && s[1].is_subset(&s[0])
                && Diagonal::new(s[1].shape(), s[1].indices()).is_ok()
        }
        "residue2-completion" => s.len() == 1 && is_residue2_completion(&s[0]),
        "unprinted-b" => {
            s.len() == 2 && s[1].max_line_count() >= 2 && realize_polystochastic(&s[1]).is_some()
        }
        "compatible-triple" => {
            let found: Option<Vec<_>> =
                s.iter().map(|x| filled_permutation(x.word()).ok().flatten()).collect();
            found.is_some_and(|f| {
                f.len() == 3
                    && (0..3).all(|a| (a + 1..3).all(|b| f[a].cells != f[b].cells && adds_nothing_to_filled(&f[a], &f[b])))
            })
        }
        "zero-support" | "exception" => true,
        _ => false,
    })
}

fn check_representative(claim: &str, s: &SupportSet) -> bool {
    let canonical = || canonical_form(s) == *s;
    match claim {
        "census-44" => canonical() && realize_sesquialteral(s).is_some(),
        "census-double3" => canonical() && is_double_permutation_support(s) && has_positive_diagonal(s).is_positive(),
        "claim-ab" => canonical() && is_a_candidate(s),
        "claim-planes" => canonical() && realize_sesquialteral(s).is_some(),
        "nonewinfilled-3" => canonical() && s.max_line_count() <= 2,
        c if c.starts_with("theorem-small-") => !has_positive_diagonal(s).is_positive(),
        _ => true,
    }
}

/// Labels of every representative or witness that fails its check.
pub fn replay(report: &EnumerationReport) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let reps = report.representatives()?;
    let mut sorted = reps.clone();
    sorted.sort();
    sorted.dedup();
    if sorted != reps {
        failures.push("representatives are not sorted and duplicate-free".to_string());
    }
    for (i, r) in reps.iter().enumerate() {
        if !check_representative(&report.claim_id, r) {
            failures.push(format!("representative {i}"));
        }
    }
    for w in &report.witnesses {
        if !check_witness(w)? {
            failures.push(format!("witness {} ({})", w.label, w.kind));
        }
    }
    Ok(failures)
}
