#![allow(dead_code)]

use std::path::{Path, PathBuf};

use ccq_cli::problem::{Problem, ProblemFile};
use ccq_core::params::ZeroDimParam;
use ccq_core::poly::Rational;
use ccq_core::realroot::{eval_poly, isolate, rational_to_f64};
use ccq_oracles::tracking::Piece;
use num_bigint::BigInt;

pub fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

pub fn corpus_path(name: &str) -> PathBuf {
    corpus_dir().join(format!("{name}.json"))
}

pub fn load(name: &str) -> Problem {
    let text = std::fs::read_to_string(corpus_path(name)).unwrap();
    ProblemFile::from_json(&text).unwrap().to_problem().unwrap()
}

/// Every corpus file, by name.
pub fn corpus() -> Vec<(String, Problem)> {
    let mut names: Vec<String> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .filter_map(|e| {
            let p = e.unwrap().path();
            (p.extension()? == "json").then(|| p.file_stem().unwrap().to_string_lossy().into_owned())
        })
        .collect();
    names.sort();
    names.into_iter().map(|n| {
        let p = load(&n);
        (n, p)
    }).collect()
}

/// Query points in increasing abscissa order, the order used for the
/// 1-based indices of a partition.
pub fn query_points(q: &ZeroDimParam) -> Vec<Vec<f64>> {
    let eps = Rational::new(BigInt::from(1), BigInt::from(10).pow(30));
    let dl = q.lambda.derivative();
    isolate(&q.lambda)
        .unwrap()
        .into_iter()
        .map(|a| {
            let a = a.refine(&eps);
            let den = eval_poly(&dl, a.interval());
            let mut p = vec![a.to_f64()];
            for t in &q.thetas {
                p.push(eval_poly(t, a.interval()).div(&den).unwrap().to_f64_mid());
            }
            p
        })
        .collect()
}

/// Groups 1-based indices by label; `None` if some point has no label.
pub fn partition_of(labels: &[Option<usize>]) -> Option<Vec<Vec<usize>>> {
    let mut blocks: Vec<(usize, Vec<usize>)> = Vec::new();
    for (i, l) in labels.iter().enumerate() {
        let l = (*l)?;
        match blocks.iter_mut().find(|b| b.0 == l) {
            Some(b) => b.1.push(i + 1),
            None => blocks.push((l, vec![i + 1])),
        }
    }
    let mut out: Vec<Vec<usize>> = blocks.into_iter().map(|b| b.1).collect();
    out.sort();
    Some(out)
}

/// Real parametrizations of the corpus space curves, covering each real
/// component (unbounded ones over a long parameter range).
pub fn space_pieces(name: &str) -> Option<Vec<Piece>> {
    let tau = std::f64::consts::TAU;
    let steps = 40_000;
    let pieces = match name {
        "nodal_cubic" => vec![Piece::sample(|t| vec![t * t - 1.0, t * t * t - t, t], -4.0, 4.0, steps)],
        "nodal_real_node" => {
            vec![Piece::sample(|t| vec![t * t - 1.0, t * t * t - t, t * t - 1.0], -4.0, 4.0, steps)]
        }
        "twisted_cubic" => vec![Piece::sample(|t| vec![t, t * t, t * t * t], -3.0, 3.0, steps)],
        "sheared_nodal" => vec![Piece::sample(|t| vec![t * t, t * t * t - 3.0 * t, t + t * t], -3.0, 3.0, steps)],
        "circle" => vec![Piece::sample(|t| vec![t.cos(), t.sin(), 0.0], 0.0, tau, steps)],
        "two_space_circles" => vec![
            Piece::sample(|t| vec![t.cos(), t.sin(), 1.0], 0.0, tau, steps),
            Piece::sample(|t| vec![1.0 + t.cos(), 0.5 + t.sin(), -1.0], 0.0, tau, steps),
        ],
        _ => return None,
    };
    Some(pieces)
}

/// Whether the parametrization is polynomial, as opposed to trigonometric.
pub fn polynomial_parametrization(name: &str) -> bool {
    matches!(name, "nodal_cubic" | "nodal_real_node" | "twisted_cubic" | "sheared_nodal")
}

pub fn f64_of(r: &Rational) -> f64 {
    rational_to_f64(r)
}
