//! Randomized cross-checking of the fast algorithms against the oracles.
//!
//! The algorithms under test are reached through [`Candidate`], so a test can
//! plug in a deliberately broken implementation and watch the harness catch it.

use std::collections::BTreeSet;

use crate::cuts3::all_3cuts;
use crate::dfs::three_edge_connectivity;
use crate::error::{Error, Result};
use crate::graph::{MultiGraph, Partition};
use crate::oracle::{brute_3cuts, brute_kecc, brute_min_3cut_count, generate, GenSpec, Model, MAX_BRUTE_EDGES};
use crate::reduction::{count_minimal_3cuts, four_ecc_general};

/// Largest `n` accepted for verification; the flow oracle is quadratic in `n`.
pub const MAX_VERIFY_N: usize = 200;

pub trait Candidate {
    fn three_cuts(&self, g: &MultiGraph) -> Result<BTreeSet<[usize; 3]>>;
    fn four_ecc(&self, g: &MultiGraph) -> Partition;
    fn count_min3(&self, g: &MultiGraph) -> u128;
}

/// The library's own implementations.
pub struct Fast;

impl Candidate for Fast {
    fn three_cuts(&self, g: &MultiGraph) -> Result<BTreeSet<[usize; 3]>> {
        Ok(all_3cuts(g)?.into_iter().map(|c| c.edges).collect())
    }

    fn four_ecc(&self, g: &MultiGraph) -> Partition {
        four_ecc_general(g)
    }

    fn count_min3(&self, g: &MultiGraph) -> u128 {
        count_minimal_3cuts(g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub iteration: usize,
    pub seed: u64,
    /// Which check failed and what the two sides said.
    pub what: String,
    pub graph: MultiGraph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Ok(usize),
    Mismatch(Box<Mismatch>),
}

/// Flag values for `verify` and `gen`, before they are turned into a [`Model`].
#[derive(Debug, Clone, Default)]
pub struct ModelFlags {
    pub name: String,
    pub n: usize,
    /// Extra chords for `random_3ec`; defaults to `n / 2`.
    pub extra: Option<usize>,
    /// Edge count for `random_general`; defaults to `2n`.
    pub m: Option<usize>,
    /// Column count for `grid`; defaults to `n`.
    pub cols: Option<usize>,
}

pub const MODEL_NAMES: &[&str] =
    &["complete", "cycle", "theta", "prism", "wheel", "twin_k5", "random_3ec", "random_general", "grid"];

pub fn model_from_flags(f: &ModelFlags) -> Result<Model> {
    let n = f.n;
    if n == 0 {
        return Err(Error::InvalidSpec("--n must be at least 1".into()));
    }
    let model = match f.name.as_str() {
        "complete" => Model::Complete { n },
        "cycle" => Model::Cycle { n },
        "theta" => Model::Theta,
        "prism" => Model::Prism,
        "wheel" => Model::Wheel { rim: n },
        "twin_k5" => Model::TwinK5,
        "random_3ec" => Model::Random3ec { n, extra: f.extra.unwrap_or(n / 2) },
        "random_general" => Model::RandomGeneral { n, m: f.m.unwrap_or(2 * n) },
        "grid" => Model::Grid { rows: n, cols: f.cols.unwrap_or(n) },
        other => {
            return Err(Error::InvalidSpec(format!(
                "unknown model `{other}` (expected one of {})",
                MODEL_NAMES.join(", ")
            )))
        }
    };
    Ok(model)
}

/// Runs `iters` instances with seeds `seed, seed + 1, ...` and stops at the
/// first disagreement.
///
/// Per instance: `four_ecc_general` against the flow oracle; if the graph is
/// 3-edge-connected, the cut list against brute force; and the minimal 3-cut
/// count against brute force. The brute-force checks only run when `m` is
/// within [`MAX_BRUTE_EDGES`].
pub fn verify(c: &dyn Candidate, model: Model, iters: usize, seed: u64) -> Result<Outcome> {
    for i in 0..iters {
        let s = seed.wrapping_add(i as u64);
        let g = generate(&GenSpec { model, seed: s })?;
        if g.n() > MAX_VERIFY_N {
            return Err(Error::SizeGuard { what: "n", value: g.n(), limit: MAX_VERIFY_N });
        }
        if let Some(what) = check_instance(c, &g)? {
            return Ok(Outcome::Mismatch(Box::new(Mismatch { iteration: i, seed: s, what, graph: g })));
        }
    }
    Ok(Outcome::Ok(iters))
}

/// Returns a description of the first failed check, if any.
pub fn check_instance(c: &dyn Candidate, g: &MultiGraph) -> Result<Option<String>> {
    let want = brute_kecc(g, 4)?;
    let got = c.four_ecc(g);
    if got != want {
        return Ok(Some(format!("4ecc: got {:?}, oracle {:?}", got.classes(), want.classes())));
    }
    if g.m() > MAX_BRUTE_EDGES {
        return Ok(None);
    }
    if g.n() >= 2 && three_edge_connectivity(g).is_ok() {
        let want = brute_3cuts(g)?;
        let got = c.three_cuts(g)?;
        if got != want {
            return Ok(Some(format!("3-cuts: got {got:?}, oracle {want:?}")));
        }
    }
    let want = brute_min_3cut_count(g)?;
    let got = c.count_min3(g);
    if got != want {
        return Ok(Some(format!("minimal 3-cut count: got {got}, oracle {want}")));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    struct DropsACut;

    impl Candidate for DropsACut {
        fn three_cuts(&self, g: &MultiGraph) -> Result<BTreeSet<[usize; 3]>> {
            let mut s = Fast.three_cuts(g)?;
            s.pop_last();
            Ok(s)
        }
        fn four_ecc(&self, g: &MultiGraph) -> Partition {
            Fast.four_ecc(g)
        }
        fn count_min3(&self, g: &MultiGraph) -> u128 {
            Fast.count_min3(g)
        }
    }

    fn flags(name: &str, n: usize) -> ModelFlags {
        ModelFlags { name: name.into(), n, ..Default::default() }
    }

    #[test]
    fn fast_passes() {
        let m = model_from_flags(&flags("random_3ec", 10)).unwrap();
        assert_eq!(verify(&Fast, m, 50, 7).unwrap(), Outcome::Ok(50));
        let m = model_from_flags(&flags("random_general", 9)).unwrap();
        assert_eq!(verify(&Fast, m, 50, 7).unwrap(), Outcome::Ok(50));
    }

    #[test]
    fn broken_candidate_is_caught() {
        let m = model_from_flags(&flags("random_3ec", 8)).unwrap();
        match verify(&DropsACut, m, 50, 1).unwrap() {
            Outcome::Mismatch(x) => assert!(x.what.starts_with("3-cuts"), "{}", x.what),
            Outcome::Ok(_) => panic!("missing cut went unnoticed"),
        }
    }

    #[test]
    fn bad_flags() {
        assert!(model_from_flags(&flags("random_3ec", 0)).is_err());
        assert!(model_from_flags(&flags("nope", 5)).is_err());
        let big = model_from_flags(&flags("random_3ec", 1000)).unwrap();
        assert!(matches!(verify(&Fast, big, 1, 0), Err(Error::SizeGuard { .. })));
    }
}
