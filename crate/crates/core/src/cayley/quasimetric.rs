use crate::Rational;

use super::{BallMetric, CayleyBall, Semimetric, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuasimetricVerdict {
    Pass,
    Counterexample(VertexId, VertexId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuasimetricReport {
    pub verdict: QuasimetricVerdict,
    /// Ordered pairs skipped because a distance was unresolved.
    pub skipped: usize,
}

/// Checks `d(x,y) <= lambda * d(y,x) + mu` on the ball's own distances.
pub fn check_quasimetric(b: &CayleyBall, lambda: Rational, mu: Rational) -> QuasimetricReport {
    check_quasimetric_in(&BallMetric::new(b), lambda, mu)
}

/// Same check over any finite semimetric; pairs are scanned in id order and
/// the first violation is reported.
pub fn check_quasimetric_in(m: &dyn Semimetric, lambda: Rational, mu: Rational) -> QuasimetricReport {
    let mut skipped = 0;
    for x in 0..m.size() {
        for y in 0..m.size() {
            if x == y {
                continue;
            }
            let (Some(forward), Some(back)) = (m.dist(x, y).exact_value(), m.dist(y, x).exact_value()) else {
                skipped += 1;
                continue;
            };
            let ok = match (forward, back) {
                (_, None) => true,
                (None, Some(_)) => false,
                (Some(f), Some(b)) => Rational::from_integer(f as i64) <= lambda * Rational::from_integer(b as i64) + mu,
            };
            if !ok {
                return QuasimetricReport {
                    verdict: QuasimetricVerdict::Counterexample(x, y),
                    skipped,
                };
            }
        }
    }
    QuasimetricReport {
        verdict: QuasimetricVerdict::Pass,
        skipped,
    }
}
