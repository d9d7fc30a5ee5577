//! Word-problem oracles for Artin groups.

use crate::classify::is_spherical;
use crate::error::Result;
use crate::fc::Amalgam;
use crate::garside::Garside;
use crate::graph::CoxeterGraph;
use crate::word::ArtinWord;
use std::sync::Arc;

/// Decides triviality of words where it can; `None` means the oracle does not know.
pub trait WordOracle: Send + Sync {
    fn is_trivial(&self, w: &ArtinWord) -> Result<Option<bool>>;

    fn equal(&self, a: &ArtinWord, b: &ArtinWord) -> Result<Option<bool>> {
        self.is_trivial(&a.concat(&b.inverse()))
    }

    fn name(&self) -> &'static str;
}

/// Left normal forms in a spherical-type ambient.
pub struct SphericalOracle {
    gs: Arc<Garside>,
}

impl SphericalOracle {
    pub fn new(graph: &Arc<CoxeterGraph>) -> Result<Self> {
        Ok(SphericalOracle { gs: Garside::shared(graph, graph.all())? })
    }
}

impl WordOracle for SphericalOracle {
    fn is_trivial(&self, w: &ArtinWord) -> Result<Option<bool>> {
        Ok(Some(self.gs.normalize(w)?.is_identity()))
    }

    fn name(&self) -> &'static str {
        "spherical"
    }
}

/// Always answers unknown.
pub struct NoOracle;

impl WordOracle for NoOracle {
    fn is_trivial(&self, w: &ArtinWord) -> Result<Option<bool>> {
        Ok(w.free_reduce().is_empty().then_some(true))
    }

    fn name(&self) -> &'static str {
        "none"
    }
}

/// The strongest shipped oracle for a graph: spherical, then FC, then none.
pub fn oracle_for(graph: &Arc<CoxeterGraph>) -> Result<Box<dyn WordOracle>> {
    if is_spherical(graph, graph.all()) {
        return Ok(Box::new(SphericalOracle::new(graph)?));
    }
    match Amalgam::new(graph.clone()) {
        Ok(a) => Ok(Box::new(a)),
        Err(_) => Ok(Box::new(NoOracle)),
    }
}
