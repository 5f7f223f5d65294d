//! Seeded random clutters. Every candidate subset is visited in canonical order, so a seed
//! fixes the output exactly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum EdgeModel {
    /// Each `d`-subset independently with probability `p`.
    Uniform { d: usize, p: f64 },
    /// Each `k`-subset independently with probability `probs[k - 1]`, then minimalized.
    Mixed { probs: Vec<f64> },
}

impl EdgeModel {
    fn validate(&self, n: usize) -> Result<()> {
        let bad = |p: f64| !(0.0..=1.0).contains(&p);
        match self {
            EdgeModel::Uniform { d, p } => {
                if *d == 0 || *d > n {
                    return Err(Error::InvalidParameter(format!("d = {d} with n = {n}")));
                }
                if bad(*p) {
                    return Err(Error::InvalidParameter(format!("p = {p}")));
                }
            }
            EdgeModel::Mixed { probs } => {
                if let Some(p) = probs.iter().find(|&&p| bad(p)) {
                    return Err(Error::InvalidParameter(format!("p = {p}")));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub n_min: usize,
    pub n_max: usize,
    pub model: EdgeModel,
}

impl GeneratorConfig {
    fn validate(&self) -> Result<()> {
        if self.n_min == 0 || self.n_min > self.n_max {
            return Err(Error::InvalidParameter(format!("n range {}..={}", self.n_min, self.n_max)));
        }
        if self.n_max > MAX_VERTICES {
            return Err(Error::TooManyVertices(self.n_max));
        }
        if let EdgeModel::Uniform { d, .. } = self.model {
            if d > self.n_min {
                return Err(Error::InvalidParameter(format!("d = {d} exceeds n_min = {}", self.n_min)));
            }
        }
        self.model.validate(self.n_max)
    }
}

/// One clutter on `n` vertices drawn from `rng`.
pub fn random_clutter<R: Rng>(rng: &mut R, n: usize, model: &EdgeModel) -> Result<Clutter> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    model.validate(n)?;
    let mut subsets: Vec<VertexSet> = VertexSet::full(n).subsets().skip(1).collect();
    subsets.sort_by(VertexSet::canonical_cmp);
    let mut edges = Vec::new();
    for s in subsets {
        let p = match model {
            EdgeModel::Uniform { d, p } => {
                if s.len() != *d {
                    continue;
                }
                *p
            }
            EdgeModel::Mixed { probs } => probs.get(s.len() - 1).copied().unwrap_or(0.0),
        };
        // Draw for every candidate so the stream does not depend on outcomes.
        let hit = rng.gen_bool(p);
        if hit {
            edges.push(s);
        }
    }
    Ok(Clutter::minimalized(n, edges)?.0)
}

/// `count` clutters, `n` drawn uniformly from the configured range.
pub fn generate(config: &GeneratorConfig, count: usize) -> Result<Vec<Clutter>> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(config.n_min..=config.n_max);
            random_clutter(&mut rng, n, &config.model)
        })
        .collect()
}

/// A random nonzero squarefree ideal: generators from the mixed model, resampled while zero.
pub fn random_ideal<R: Rng>(rng: &mut R, n: usize, probs: &[f64]) -> Result<SquarefreeIdeal> {
    let model = EdgeModel::Mixed { probs: probs.to_vec() };
    model.validate(n)?;
    if probs.iter().take(n).all(|&p| p == 0.0) {
        return Err(Error::InvalidParameter("all generator probabilities are zero".into()));
    }
    loop {
        let c = random_clutter(rng, n, &model)?;
        if !c.is_edgeless() {
            return Ok(SquarefreeIdeal::edge_ideal(&c));
        }
    }
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extreme_probabilities() {
        let mut rng = seeded_rng(7);
        let k4 = random_clutter(&mut rng, 4, &EdgeModel::Uniform { d: 2, p: 1.0 }).unwrap();
        assert_eq!(k4.num_edges(), 6);
        assert!(k4.is_graph());
        let none = random_clutter(&mut rng, 4, &EdgeModel::Uniform { d: 2, p: 0.0 }).unwrap();
        assert!(none.is_edgeless());
        // Mixed with everything present minimalizes to the singletons.
        let all = random_clutter(&mut rng, 3, &EdgeModel::Mixed { probs: vec![1.0; 3] }).unwrap();
        assert_eq!(all, Clutter::from_lists(3, &[&[1], &[2], &[3]]).unwrap());
    }

    #[test]
    fn deterministic_per_seed() {
        let config =
            GeneratorConfig { seed: 42, n_min: 3, n_max: 8, model: EdgeModel::Mixed { probs: vec![0.05, 0.3, 0.1] } };
        let a = generate(&config, 20).unwrap();
        let b = generate(&config, 20).unwrap();
        assert_eq!(a, b);
        let c = generate(&GeneratorConfig { seed: 43, ..config }, 20).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn parameter_validation() {
        let mut rng = seeded_rng(0);
        assert!(random_clutter(&mut rng, 3, &EdgeModel::Uniform { d: 4, p: 0.5 }).is_err());
        assert!(random_clutter(&mut rng, 3, &EdgeModel::Uniform { d: 2, p: 1.5 }).is_err());
        assert!(random_clutter(&mut rng, 17, &EdgeModel::Uniform { d: 2, p: 0.5 }).is_err());
        let bad = GeneratorConfig { seed: 0, n_min: 5, n_max: 4, model: EdgeModel::Uniform { d: 2, p: 0.5 } };
        assert!(generate(&bad, 1).is_err());
    }
}
