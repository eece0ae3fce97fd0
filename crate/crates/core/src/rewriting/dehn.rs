use crate::error::{Error, Result};
use crate::growth::{GrowthTable, GrowthValue};
use crate::presentation::Presentation;
use crate::word::words_up_to;

use super::{equality_search_with_budget, Status, DEFAULT_WORD_BUDGET};

pub fn dehn_sample(p: &Presentation, n_max: usize, depth_bound: usize) -> Result<GrowthTable> {
    dehn_sample_with_budget(p, n_max, depth_bound, DEFAULT_WORD_BUDGET)
}

/// Samples the Dehn function: entry `n` is the largest area among
/// equivalent pairs with `|u| + |v| <= n`, or `unknown` when some pair in
/// range could not be decided within `depth_bound`.
pub fn dehn_sample_with_budget(
    p: &Presentation,
    n_max: usize,
    depth_bound: usize,
    word_budget: usize,
) -> Result<GrowthTable> {
    if p.finite_relations().is_none() {
        return Err(Error::NotEnumerable(p.name().to_string()));
    }
    let k = p.alphabet().len();
    let mut count: usize = 0;
    let mut layer: usize = 1;
    for _ in 0..=n_max {
        count = count.saturating_add(layer);
        layer = layer.saturating_mul(k);
    }
    if count > word_budget {
        return Err(Error::BudgetExceeded {
            what: "word-count",
            budget: word_budget,
        });
    }
    let words = words_up_to(k, n_max);

    // per total length t: (max area, any unknown)
    let mut by_total = vec![(0u64, false); n_max + 1];
    for (i, u) in words.iter().enumerate() {
        for v in &words[i + 1..] {
            let t = u.len() + v.len();
            if t > n_max {
                // words are in shortlex order, so later v are no shorter
                break;
            }
            let verdict = equality_search_with_budget(u, v, p, depth_bound, word_budget)?;
            match verdict.status {
                Status::Equal => {
                    let a = verdict.area.unwrap() as u64;
                    by_total[t].0 = by_total[t].0.max(a);
                }
                Status::Unknown => by_total[t].1 = true,
                Status::NotEqual => {}
            }
        }
    }

    let mut best = 0u64;
    let mut unknown = false;
    let values = by_total.into_iter().map(|(a, u)| {
        best = best.max(a);
        unknown |= u;
        if unknown {
            GrowthValue::Unknown
        } else {
            GrowthValue::Finite(best)
        }
    });
    Ok(GrowthTable::from_values(values.collect::<Vec<_>>()))
}
