use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    Text,
    Json,
}

/// Options for one verifier run. Engines are deterministic; randomness only
/// appears in property tests, which seed explicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub threads: usize,
    /// Work units one run may complete before it stops; `None` is unlimited.
    pub node_budget: Option<u64>,
    pub checkpoint_path: Option<PathBuf>,
    pub output_format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { threads: 1, node_budget: None, checkpoint_path: None, output_format: OutputFormat::Json }
    }
}

impl RunConfig {
    pub fn with_threads(threads: usize) -> RunConfig {
        RunConfig { threads, ..RunConfig::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.threads == 0 {
            return Err(Error::Config("threads must be at least 1".into()));
        }
        Ok(())
    }

    /// The part of the configuration that can change a report. Thread count
    /// and paths are left out so reports compare byte for byte across them.
    pub fn echo(&self) -> ConfigEcho {
        ConfigEcho { node_budget: self.node_budget, resumable: self.checkpoint_path.is_some() }
    }

    pub(crate) fn pool(&self) -> Result<rayon::ThreadPool> {
        self.validate()?;
        rayon::ThreadPoolBuilder::new().num_threads(self.threads).build().map_err(|e| Error::Pool(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub node_budget: Option<u64>,
    pub resumable: bool,
}
