use serde::Serialize;

use crate::cayley::{UndirectedView, VertexId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BushyVerdict {
    Pass,
    /// An interior vertex with degree outside the allowed range.
    Fail(VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BushyReport {
    pub verdict: BushyVerdict,
    pub interior: usize,
    /// Distinct interior degrees, sorted.
    pub degrees: Vec<usize>,
}

impl Serialize for BushyReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (name, witness) = match self.verdict {
            BushyVerdict::Pass => ("pass", None),
            BushyVerdict::Fail(v) => ("fail", Some(v)),
        };
        super::verdict_json(s, name, witness, 0)
    }
}

/// Every interior vertex of the tree has degree in `floor..=cap`. Frontier
/// vertices are not assessed since some of their neighbours are missing.
pub fn check_bushy_hypotheses(t: &UndirectedView, floor: usize, cap: usize) -> Result<BushyReport> {
    if floor > cap {
        return Err(Error::InvalidSpec(format!("degree floor {floor} exceeds the cap {cap}")));
    }
    if !t.is_tree() {
        return Err(Error::NotATree(format!(
            "{} vertices and {} edges",
            t.len(),
            t.edge_count()
        )));
    }
    let interior: Vec<VertexId> = (0..t.len()).filter(|&v| t.is_interior(v)).collect();
    let verdict = interior
        .iter()
        .find(|&&v| !(floor..=cap).contains(&t.degree(v)))
        .map_or(BushyVerdict::Pass, |&v| BushyVerdict::Fail(v));
    Ok(BushyReport {
        verdict,
        interior: interior.len(),
        degrees: t.interior_degrees(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::enumerate_ball;
    use crate::families::{f2_ball, mx_ball, Evens};
    use crate::presentation::builtin;

    #[test]
    fn examples() {
        let mx = UndirectedView::from_ball(&mx_ball(&Evens, 4).unwrap());
        let r = check_bushy_hypotheses(&mx, 3, 6).unwrap();
        assert_eq!(r.verdict, BushyVerdict::Pass);
        assert_eq!(r.degrees, [5, 6]);

        let (_, f2) = f2_ball(3).unwrap();
        let r = check_bushy_hypotheses(&f2, 3, 4).unwrap();
        assert_eq!((r.verdict, r.degrees), (BushyVerdict::Pass, vec![4]));

        let ray = UndirectedView::from_ball(&enumerate_ball(&builtin("free(1)").unwrap(), 4, 2).unwrap());
        let r = check_bushy_hypotheses(&ray, 3, 10).unwrap();
        assert!(matches!(r.verdict, BushyVerdict::Fail(_)));
        assert_eq!(r.degrees, [1, 2]);
    }

    #[test]
    fn rejects_non_trees() {
        let grid = UndirectedView::from_ball(&enumerate_ball(&builtin("free_commutative_2").unwrap(), 3, 2).unwrap());
        assert!(matches!(check_bushy_hypotheses(&grid, 3, 4), Err(Error::NotATree(_))));
        let (_, f2) = f2_ball(1).unwrap();
        assert!(check_bushy_hypotheses(&f2, 5, 4).is_err());
    }
}
