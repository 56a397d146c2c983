//! Quadtree subdivision of a plane curve with interval arithmetic in `f64`.
//!
//! Cells whose interval enclosure of `omega` excludes zero are discarded;
//! the surviving cells at the finest level cover the real curve inside the
//! window, and their 8-connected clusters estimate its components there.

use std::collections::HashMap;

use ccq_core::poly::BiPoly;
use ccq_core::realroot::rational_to_f64;
use petgraph::unionfind::UnionFind;

#[derive(Clone, Copy, Debug)]
struct Iv(f64, f64);

impl Iv {
    fn add(self, o: Iv) -> Iv {
        Iv(self.0 + o.0, self.1 + o.1)
    }

    fn mul(self, o: Iv) -> Iv {
        let p = [self.0 * o.0, self.0 * o.1, self.1 * o.0, self.1 * o.1];
        Iv(p.iter().copied().fold(f64::INFINITY, f64::min), p.iter().copied().fold(f64::NEG_INFINITY, f64::max))
    }

    fn scale(self, c: f64) -> Iv {
        if c >= 0.0 {
            Iv(self.0 * c, self.1 * c)
        } else {
            Iv(self.1 * c, self.0 * c)
        }
    }

    fn pow(self, e: u32) -> Iv {
        if e == 0 {
            return Iv(1.0, 1.0);
        }
        let (a, b) = (self.0.powi(e as i32), self.1.powi(e as i32));
        if e % 2 == 1 {
            Iv(a, b)
        } else if self.0 <= 0.0 && self.1 >= 0.0 {
            Iv(0.0, a.max(b))
        } else {
            Iv(a.min(b), a.max(b))
        }
    }

    fn widen(self) -> Iv {
        let pad = 1e-12 * (self.0.abs().max(self.1.abs()) + 1.0);
        Iv(self.0 - pad, self.1 + pad)
    }
}

/// Axis-aligned window `[x0, x1] x [y0, y1]`.
#[derive(Clone, Copy, Debug)]
pub struct Window {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

impl Window {
    pub fn square(r: f64) -> Window {
        Window { x0: -r, x1: r, y0: -r, y1: r }
    }
}

struct Curve {
    terms: Vec<(u32, u32, f64)>,
}

impl Curve {
    fn enclose(&self, x: Iv, y: Iv) -> Iv {
        self.terms
            .iter()
            .fold(Iv(0.0, 0.0), |acc, &(e1, e2, c)| acc.add(x.pow(e1).mul(y.pow(e2)).scale(c)))
            .widen()
    }
}

/// Finest surviving cells of a subdivision, grouped into 8-connected
/// clusters.
pub struct Cover {
    window: Window,
    cell: f64,
    index: HashMap<(u64, u64), usize>,
    labels: Vec<usize>,
}

impl Cover {
    /// Subdivides `w` until cells are no wider than `resolution`.
    pub fn new(omega: &BiPoly, w: Window, resolution: f64) -> Cover {
        let curve = Curve { terms: omega.terms().iter().map(|t| (t.e1, t.e2, rational_to_f64(&t.coeff))).collect() };
        let span = (w.x1 - w.x0).max(w.y1 - w.y0);
        let mut depth = 0u32;
        while span / (1u64 << depth) as f64 > resolution {
            depth += 1;
        }
        let mut cells = Vec::new();
        // (level, i, j) with cell size span / 2^level
        let mut stack = vec![(0u32, 0u64, 0u64)];
        while let Some((level, i, j)) = stack.pop() {
            let size = span / (1u64 << level) as f64;
            let x = Iv(w.x0 + i as f64 * size, w.x0 + (i + 1) as f64 * size);
            let y = Iv(w.y0 + j as f64 * size, w.y0 + (j + 1) as f64 * size);
            if x.0 > w.x1 || y.0 > w.y1 {
                continue;
            }
            let v = curve.enclose(x, y);
            if v.0 > 0.0 || v.1 < 0.0 {
                continue;
            }
            if level == depth {
                cells.push((i, j));
            } else {
                for (di, dj) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                    stack.push((level + 1, 2 * i + di, 2 * j + dj));
                }
            }
        }
        let index: HashMap<(u64, u64), usize> = cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let mut uf = UnionFind::<usize>::new(cells.len());
        for (k, &(i, j)) in cells.iter().enumerate() {
            for (di, dj) in [(1i64, -1i64), (1, 0), (1, 1), (0, 1)] {
                let (ni, nj) = (i as i64 + di, j as i64 + dj);
                if ni < 0 || nj < 0 {
                    continue;
                }
                if let Some(&l) = index.get(&(ni as u64, nj as u64)) {
                    uf.union(k, l);
                }
            }
        }
        let labels = uf.into_labeling();
        Cover { window: w, cell: span / (1u64 << depth) as f64, index, labels }
    }

    pub fn cell_count(&self) -> usize {
        self.labels.len()
    }

    pub fn components(&self) -> usize {
        let mut roots = self.labels.clone();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }

    /// Cluster of the cell containing `(x, y)`, if that cell survived.
    pub fn label(&self, x: f64, y: f64) -> Option<usize> {
        let i = ((x - self.window.x0) / self.cell).floor();
        let j = ((y - self.window.y0) / self.cell).floor();
        if i < 0.0 || j < 0.0 {
            return None;
        }
        self.index.get(&(i as u64, j as u64)).map(|&k| self.labels[k])
    }
}
