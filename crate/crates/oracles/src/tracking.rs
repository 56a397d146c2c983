//! Dense numeric sampling of parametrized pieces of a space curve.
//!
//! Each piece is a continuous map on a closed parameter interval. Pieces
//! are glued whenever two of their samples come closer than a tolerance;
//! the resulting classes are the components seen by the oracle.

use petgraph::unionfind::UnionFind;

pub type Point = Vec<f64>;

pub struct Piece {
    pub samples: Vec<Point>,
}

impl Piece {
    /// Samples `f` at `steps + 1` equally spaced parameters in `[t0, t1]`.
    pub fn sample(f: impl Fn(f64) -> Point, t0: f64, t1: f64, steps: usize) -> Piece {
        let samples = (0..=steps).map(|k| f(t0 + (t1 - t0) * k as f64 / steps as f64)).collect();
        Piece { samples }
    }

    /// Largest distance between consecutive samples.
    pub fn max_step(&self) -> f64 {
        self.samples.windows(2).map(|w| dist(&w[0], &w[1])).fold(0.0, f64::max)
    }

    /// Distance from `p` to the polyline through the samples.
    fn nearest(&self, p: &[f64]) -> f64 {
        if self.samples.len() == 1 {
            return dist(p, &self.samples[0]);
        }
        self.samples.windows(2).map(|w| segment_dist(p, &w[0], &w[1])).fold(f64::INFINITY, f64::min)
    }
}

pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

fn segment_dist(p: &[f64], a: &[f64], b: &[f64]) -> f64 {
    let ab: Vec<f64> = a.iter().zip(b).map(|(x, y)| y - x).collect();
    let len2: f64 = ab.iter().map(|v| v * v).sum();
    let t = if len2 == 0.0 {
        0.0
    } else {
        (p.iter().zip(a).zip(&ab).map(|((p, a), d)| (p - a) * d).sum::<f64>() / len2).clamp(0.0, 1.0)
    };
    let q: Vec<f64> = a.iter().zip(&ab).map(|(a, d)| a + t * d).collect();
    dist(p, &q)
}

pub struct Tracked {
    pub pieces: Vec<Piece>,
    labels: Vec<usize>,
}

impl Tracked {
    pub fn new(pieces: Vec<Piece>, tol: f64) -> Tracked {
        let mut uf = UnionFind::<usize>::new(pieces.len());
        for i in 0..pieces.len() {
            for j in i + 1..pieces.len() {
                if pieces[i].samples.iter().any(|p| pieces[j].nearest(p) < tol) {
                    uf.union(i, j);
                }
            }
        }
        Tracked { labels: uf.into_labeling(), pieces }
    }

    pub fn components(&self) -> usize {
        let mut roots = self.labels.clone();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }

    /// Component of the piece passing within `tol` of `p`.
    pub fn label(&self, p: &[f64], tol: f64) -> Option<usize> {
        self.pieces.iter().position(|c| c.nearest(p) < tol).map(|i| self.labels[i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_circles_at_different_heights() {
        let circle = |h: f64| move |t: f64| vec![t.cos(), t.sin(), h];
        let tau = std::f64::consts::TAU;
        let pieces = vec![
            Piece::sample(circle(1.0), 0.0, tau, 2000),
            Piece::sample(circle(-1.0), 0.0, tau, 2000),
            Piece::sample(circle(1.0), 1.0, 2.0, 10),
        ];
        let t = Tracked::new(pieces, 1e-3);
        assert_eq!(t.components(), 2);
        assert_eq!(t.label(&[1.0, 0.0, 1.0], 1e-6), t.label(&[0.0, 1.0, 1.0], 1e-2));
    }
}
