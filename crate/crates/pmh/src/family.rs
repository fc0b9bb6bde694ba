use std::fmt;

use anyhow::{bail, Result};
use clap::ValueEnum;
use pmh_core::families::{build_crossed_prism, build_prism, CrossedPrismGraph, PrismGraph};
use pmh_core::{fixtures, EdgeSet, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Family {
    Prism,
    CrossedPrism,
    K4,
    K33,
    Petersen,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Prism => "prism",
            Family::CrossedPrism => "crossed-prism",
            Family::K4 => "k4",
            Family::K33 => "k33",
            Family::Petersen => "petersen",
        }
    }

    /// Whether the family is indexed by `n`.
    pub fn is_parametric(self) -> bool {
        matches!(self, Family::Prism | Family::CrossedPrism)
    }

    pub fn min_n(self) -> usize {
        match self {
            Family::Prism => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub enum Shape {
    Prism(PrismGraph),
    CrossedPrism(CrossedPrismGraph),
    Fixed(Graph),
}

/// A built graph together with its family and parameter.
pub struct Instance {
    pub family: Family,
    pub n: Option<usize>,
    pub shape: Shape,
}

impl Instance {
    pub fn build(family: Family, n: Option<usize>) -> Result<Instance> {
        let shape = match (family, n) {
            (Family::Prism, Some(n)) => Shape::Prism(build_prism(n)?),
            (Family::CrossedPrism, Some(n)) => Shape::CrossedPrism(build_crossed_prism(n)?),
            (Family::Prism | Family::CrossedPrism, None) => bail!("--family {family} needs --n"),
            (Family::K4, None) => Shape::Fixed(fixtures::complete4()?),
            (Family::K33, None) => Shape::Fixed(fixtures::k33()?),
            (Family::Petersen, None) => Shape::Fixed(fixtures::petersen()?),
            (_, Some(_)) => bail!("--family {family} takes no --n"),
        };
        Ok(Instance { family, n, shape })
    }

    pub fn graph(&self) -> &Graph {
        match &self.shape {
            Shape::Prism(p) => p.graph(),
            Shape::CrossedPrism(cp) => cp.graph(),
            Shape::Fixed(g) => g,
        }
    }

    pub fn crossed_prism(&self) -> Option<&CrossedPrismGraph> {
        match &self.shape {
            Shape::CrossedPrism(cp) => Some(cp),
            _ => None,
        }
    }

    pub fn prism(&self) -> Option<&PrismGraph> {
        match &self.shape {
            Shape::Prism(p) => Some(p),
            _ => None,
        }
    }

    /// The principal cut of a crossed prism.
    pub fn cut(&self) -> Option<EdgeSet> {
        self.crossed_prism().map(|cp| cp.cut_set())
    }

    /// `P_6`, `CP_2`, `K4`, …
    pub fn title(&self) -> String {
        match (self.family, self.n) {
            (Family::Prism, Some(n)) => format!("P_{n}"),
            (Family::CrossedPrism, Some(n)) => format!("CP_{n}"),
            (Family::K4, _) => "K4".into(),
            (Family::K33, _) => "K33".into(),
            _ => "Petersen".into(),
        }
    }
}

/// The instances named by `--n` or `--n-min … --n-max`, in increasing `n`.
pub fn instance_range(
    family: Family,
    n: Option<usize>,
    n_min: Option<usize>,
    n_max: Option<usize>,
) -> Result<Vec<Option<usize>>> {
    if !family.is_parametric() {
        if n.is_some() || n_max.is_some() || n_min.is_some() {
            bail!("--family {family} takes no --n");
        }
        return Ok(vec![None]);
    }
    match (n, n_max) {
        (Some(n), None) if n_min.is_none() => Ok(vec![Some(n)]),
        (None, Some(hi)) => {
            let lo = n_min.unwrap_or(family.min_n());
            if lo > hi {
                bail!("empty range {lo}..={hi}");
            }
            Ok((lo..=hi).map(Some).collect())
        }
        (None, None) => bail!("--family {family} needs --n or --n-max"),
        _ => bail!("give either --n or --n-min/--n-max"),
    }
}
