//! Real topology graph of the plane projection by a generic-position sweep.
//!
//! Fibers alternate between rational sample abscissas and special ones
//! (roots of the discriminant or of the query polynomial). Branches are
//! matched between each special fiber and its two neighbouring samples:
//! simple roots one-to-one in vertical order, and the contiguous block of
//! left-over branches onto the unique multiple root. Unbounded branches end
//! at the outermost sample fibers.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::apparent::ApparentResult;
use crate::params::{queries_on_curve, OneDimParam, ZeroDimParam};
use crate::poly::{Rational, UniPoly};
use crate::realroot::{
    common_roots_of, eval_poly, fiber_roots_with, isolate, simplest_rational, AlgebraicNumber,
    DoubleRootHint, FiberRoot, Ordinate, RealRootError,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    Regular,
    XCritical,
    ApparentNode,
    Control,
}

impl VertexKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VertexKind::Regular => "regular",
            VertexKind::XCritical => "x_critical",
            VertexKind::ApparentNode => "apparent_node",
            VertexKind::Control => "control",
        }
    }

    /// Critical points of the first projection, which must never be adjacent.
    pub fn is_critical(self) -> bool {
        matches!(self, VertexKind::XCritical | VertexKind::ApparentNode)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: usize,
    pub fiber: usize,
    pub x: AlgebraicNumber,
    pub y: Ordinate,
    pub kind: VertexKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberKind {
    Sample,
    Critical,
    Control,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    pub x: AlgebraicNumber,
    pub kind: FiberKind,
    /// Vertex ids by increasing ordinate.
    pub ids: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TopologyGraph {
    /// Sorted by id.
    pub vertices: Vec<Vertex>,
    /// Unordered pairs stored as `(min, max)`.
    pub edges: BTreeSet<(usize, usize)>,
    pub fibers: Vec<Fiber>,
    pub v_app: Vec<usize>,
    pub v_ctrl: Vec<usize>,
    next_id: usize,
}

impl TopologyGraph {
    pub fn push_fiber(&mut self, x: AlgebraicNumber, kind: FiberKind) -> usize {
        self.fibers.push(Fiber { x, kind, ids: Vec::new() });
        self.fibers.len() - 1
    }

    /// Appends a vertex to `fiber`; vertices of a fiber must be pushed by
    /// increasing ordinate.
    pub fn push_vertex(&mut self, fiber: usize, y: Ordinate, kind: VertexKind) -> usize {
        let id = self.next_id;
        self.next_id += 1;
        let x = self.fibers[fiber].x.clone();
        self.fibers[fiber].ids.push(id);
        self.vertices.push(Vertex { id, fiber, x, y, kind });
        id
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert_ne!(a, b, "loops are not allowed");
        self.edges.insert((a.min(b), a.max(b)));
    }

    pub fn vertex(&self, id: usize) -> Option<&Vertex> {
        self.vertices.binary_search_by_key(&id, |v| v.id).ok().map(|i| &self.vertices[i])
    }

    pub fn neighbors(&self, id: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == id {
                    Some(b)
                } else if b == id {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, id: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == id || b == id).count()
    }

    /// Removes a vertex and every edge at it.
    pub fn remove_vertex(&mut self, id: usize) {
        if let Ok(i) = self.vertices.binary_search_by_key(&id, |v| v.id) {
            let v = self.vertices.remove(i);
            self.fibers[v.fiber].ids.retain(|&w| w != id);
        }
        self.edges.retain(|&(a, b)| a != id && b != id);
        self.v_app.retain(|&w| w != id);
        self.v_ctrl.retain(|&w| w != id);
    }
}

/// Vertex ids of the fiber with the given index, by increasing ordinate.
pub fn fiber_of(g: &TopologyGraph, index: usize) -> Vec<usize> {
    g.fibers.get(index).map(|f| f.ids.clone()).unwrap_or_default()
}

/// Default width of ordinate boxes and abscissa intervals.
pub fn default_width() -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << 20)
}

enum Job {
    Sample(Rational),
    Critical { alpha: AlgebraicNumber, apparent: bool },
    Control(AlgebraicNumber),
}

enum FiberData {
    Sample(Vec<FiberRoot>),
    /// Roots, position of the double root, apparent flag.
    Critical(Vec<FiberRoot>, usize, bool),
    /// Roots and the index of the query point among them.
    Control(Vec<FiberRoot>, usize),
}

fn sample_fiber(c: &OneDimParam, s: &Rational, eps: &Rational) -> Result<Vec<FiberRoot>> {
    let f = c.omega.eval_x1(s);
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let roots = isolate(&f).map_err(|e| match e {
        RealRootError::NotSquareFree => Error::Internal(format!("sample fiber x1 = {s} is singular")),
        other => other.into(),
    })?;
    Ok(roots
        .into_iter()
        .map(|r| FiberRoot { ordinate: Ordinate::Exact(r.refine(eps)), multiplicity: 1 })
        .collect())
}

/// Index of the fiber root holding the query ordinate
/// `theta2(alpha) / lambda'(alpha)`.
fn locate_control(
    c: &OneDimParam,
    alpha: &AlgebraicNumber,
    theta2: &UniPoly,
    dlambda: &UniPoly,
    eps: &Rational,
) -> Result<(Vec<FiberRoot>, usize)> {
    if let Some(a) = alpha.as_rational() {
        let roots = fiber_roots_with(&c.omega, alpha, None, eps)?;
        let gamma = theta2.eval(&a) / dlambda.eval(&a);
        let idx = roots.iter().position(|r| match &r.ordinate {
            Ordinate::Exact(v) => v.cmp_rational(&gamma).is_eq(),
            Ordinate::Boxed(b) => b.contains(&gamma),
        });
        return idx
            .map(|i| (roots, i))
            .ok_or_else(|| Error::InvalidInput(format!("query point above x1 = {a} is not on the curve")));
    }
    let mut w = eps.clone();
    for _ in 0..8 {
        let roots = fiber_roots_with(&c.omega, alpha, None, &w)?;
        let a = alpha.refine(&w);
        if let Some(gamma) = eval_poly(theta2, a.interval()).div(&eval_poly(dlambda, a.interval())) {
            let hits: Vec<usize> = (0..roots.len())
                .filter(|&i| roots[i].ordinate.interval().intersects(&gamma))
                .collect();
            if hits.len() == 1 {
                return Ok((roots, hits[0]));
            }
            if hits.is_empty() {
                return Err(Error::InvalidInput(format!("query point above x1 = {alpha} is not on the curve")));
            }
        }
        w = &w * &w;
    }
    Err(Error::GenericityViolation(format!("query ordinate above x1 = {alpha} could not be matched")))
}

fn run_job(
    c: &OneDimParam,
    job: &Job,
    hint: &DoubleRootHint,
    query: Option<(&UniPoly, &UniPoly)>,
    eps: &Rational,
) -> Result<FiberData> {
    match job {
        Job::Sample(s) => Ok(FiberData::Sample(sample_fiber(c, s, eps)?)),
        Job::Critical { alpha, apparent } => {
            let roots = fiber_roots_with(&c.omega, alpha, Some(hint), eps)?;
            let doubles: Vec<usize> =
                (0..roots.len()).filter(|&i| roots[i].multiplicity == 2).collect();
            if doubles.len() != 1 {
                return Err(Error::GenericityViolation(format!(
                    "critical fiber x1 = {alpha} has {} real multiple ordinates",
                    doubles.len()
                )));
            }
            Ok(FiberData::Critical(roots, doubles[0], *apparent))
        }
        Job::Control(alpha) => {
            let (theta2, dlambda) = query.expect("control fibers need queries");
            let (roots, idx) = locate_control(c, alpha, theta2, dlambda, eps)?;
            Ok(FiberData::Control(roots, idx))
        }
    }
}

/// Edges between a side fiber and a critical fiber with `s` simple roots and
/// its double root at position `p`.
fn attach_critical(g: &mut TopologyGraph, side: &[usize], crit: &[usize], p: usize) -> Result<()> {
    let s = crit.len() - 1;
    let Some(l) = side.len().checked_sub(s) else {
        return Err(Error::GenericityViolation(format!(
            "branch count mismatch: {} branches meet a fiber with {s} simple points",
            side.len()
        )));
    };
    for j in 0..p {
        g.add_edge(side[j], crit[j]);
    }
    for &v in &side[p..p + l] {
        g.add_edge(v, crit[p]);
    }
    for j in 0..(s - p) {
        g.add_edge(side[p + l + j], crit[p + 1 + j]);
    }
    Ok(())
}

fn attach_regular(g: &mut TopologyGraph, side: &[usize], mid: &[usize]) -> Result<()> {
    if side.len() != mid.len() {
        return Err(Error::GenericityViolation(format!(
            "branch count mismatch: {} branches meet a regular fiber with {} points",
            side.len(),
            mid.len()
        )));
    }
    for (&a, &b) in side.iter().zip(mid) {
        g.add_edge(a, b);
    }
    Ok(())
}

/// Simplest rational strictly between two consecutive special abscissas,
/// whose interval endpoints may themselves be rational roots.
fn sample_between(lo: &Rational, hi: &Rational) -> Rational {
    let s = simplest_rational(lo, hi);
    if &s != lo && &s != hi {
        return s;
    }
    let third = (hi - lo) / Rational::from_integer(3.into());
    simplest_rational(&(lo + &third), &(hi - &third))
}

/// Builds the real topology graph of `omega = 0` with the projections of the
/// query points as control vertices.
pub fn topo2d(c: &OneDimParam, queries: Option<&ZeroDimParam>, app: &ApparentResult) -> Result<TopologyGraph> {
    topo2d_with(c, queries, app, &default_width())
}

/// [`topo2d`] with vertex coordinates enclosed to width below `eps`.
pub fn topo2d_with(
    c: &OneDimParam,
    queries: Option<&ZeroDimParam>,
    app: &ApparentResult,
    eps: &Rational,
) -> Result<TopologyGraph> {
    let query = match queries {
        Some(p) if !p.lambda.is_constant() => {
            if !queries_on_curve(c, p)? {
                return Err(Error::InvalidInput("query points are not on the curve".into()));
            }
            Some((&p.lambda, &p.thetas[0]))
        }
        _ => None,
    };
    let dlambda = query.map(|(l, _)| l.derivative());

    let r_star = &app.r_star;
    let special_poly = match query {
        Some((lambda, _)) => (r_star * lambda).squarefree_part()?,
        None => r_star.clone(),
    };
    let specials = isolate(&special_poly)?;
    let crit = common_roots_of(&specials, &special_poly, r_star);
    let ctrl = match query {
        Some((lambda, _)) => common_roots_of(&specials, &special_poly, lambda),
        None => vec![false; specials.len()],
    };
    let app_flags = common_roots_of(&specials, &special_poly, &app.q_app);

    let mut jobs = Vec::with_capacity(2 * specials.len() + 2);
    if specials.is_empty() {
        jobs.push(Job::Sample(-Rational::one()));
        jobs.push(Job::Sample(Rational::one()));
    } else {
        let first = specials[0].interval().lo.floor() - Rational::one();
        jobs.push(Job::Sample(first));
        for (i, a) in specials.iter().enumerate() {
            if crit[i] && ctrl[i] {
                return Err(Error::GenericityViolation(format!(
                    "query abscissa {a} is a critical abscissa"
                )));
            }
            if crit[i] {
                jobs.push(Job::Critical { alpha: a.clone(), apparent: app_flags[i] });
            } else {
                jobs.push(Job::Control(a.clone()));
            }
            let s = match specials.get(i + 1) {
                Some(b) => sample_between(&a.interval().hi, &b.interval().lo),
                None => a.interval().hi.ceil() + Rational::one(),
            };
            jobs.push(Job::Sample(s));
        }
    }

    let hint = DoubleRootHint { sr1: app.sr1.clone(), sr10: app.sr10.clone() };
    let q = query.map(|(_, t)| (t, dlambda.as_ref().unwrap()));
    let data: Vec<FiberData> =
        jobs.par_iter().map(|j| run_job(c, j, &hint, q, eps)).collect::<Result<Vec<_>>>()?;

    let mut g = TopologyGraph::default();
    for (job, d) in jobs.iter().zip(&data) {
        let (x, kind) = match job {
            Job::Sample(s) => (AlgebraicNumber::from_rational(s.clone()), FiberKind::Sample),
            Job::Critical { alpha, .. } => (alpha.refine(eps), FiberKind::Critical),
            Job::Control(alpha) => (alpha.refine(eps), FiberKind::Control),
        };
        let f = g.push_fiber(x, kind);
        match d {
            FiberData::Sample(roots) => {
                for r in roots {
                    g.push_vertex(f, r.ordinate.clone(), VertexKind::Regular);
                }
            }
            FiberData::Critical(roots, p, apparent) => {
                for (i, r) in roots.iter().enumerate() {
                    let kind = match (i == *p, *apparent) {
                        (false, _) => VertexKind::Regular,
                        (true, true) => VertexKind::ApparentNode,
                        (true, false) => VertexKind::XCritical,
                    };
                    let id = g.push_vertex(f, r.ordinate.clone(), kind);
                    if kind == VertexKind::ApparentNode {
                        g.v_app.push(id);
                    }
                }
            }
            FiberData::Control(roots, idx) => {
                for (i, r) in roots.iter().enumerate() {
                    let kind = if i == *idx { VertexKind::Control } else { VertexKind::Regular };
                    let id = g.push_vertex(f, r.ordinate.clone(), kind);
                    if kind == VertexKind::Control {
                        g.v_ctrl.push(id);
                    }
                }
            }
        }
    }

    for (fi, d) in data.iter().enumerate() {
        let ids = g.fibers[fi].ids.clone();
        match d {
            FiberData::Sample(_) => {
                // two adjacent samples only occur without special fibers
                if fi + 1 < data.len() && matches!(data[fi + 1], FiberData::Sample(_)) {
                    let next = g.fibers[fi + 1].ids.clone();
                    attach_regular(&mut g, &ids, &next)?;
                }
            }
            FiberData::Critical(_, p, _) => {
                let left = g.fibers[fi - 1].ids.clone();
                let right = g.fibers[fi + 1].ids.clone();
                attach_critical(&mut g, &left, &ids, *p)?;
                attach_critical(&mut g, &right, &ids, *p)?;
            }
            FiberData::Control(..) => {
                let left = g.fibers[fi - 1].ids.clone();
                let right = g.fibers[fi + 1].ids.clone();
                attach_regular(&mut g, &left, &ids)?;
                attach_regular(&mut g, &right, &ids)?;
            }
        }
    }
    Ok(g)
}
