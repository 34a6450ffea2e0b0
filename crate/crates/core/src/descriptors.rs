//! Curated connected-subgroup data, loaded from a versioned TOML file.
//!
//! The bundled file is `data/descriptors.toml`; its format is described in
//! `data/FORMAT.md`. A different file can be parsed with
//! [`DescriptorFile::parse`].

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::IntMatrix;
use crate::rep::IntegralRep;
use crate::weyl::RootType;

pub const FORMAT_VERSION: u32 = 1;

pub const BUNDLED: &str = include_str!("../data/descriptors.toml");

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct DescriptorFile {
    pub format_version: u32,
    #[serde(default)]
    pub group: Vec<AmbientGroup>,
    #[serde(default)]
    pub maximal: Vec<MaximalDescriptor>,
    #[serde(default)]
    pub connected: Vec<ConnectedSubgroupDescriptor>,
    #[serde(default)]
    pub finite: Vec<FiniteDescriptor>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct AmbientGroup {
    pub name: String,
    pub display: String,
    pub rank: usize,
    #[serde(default)]
    pub root_type: Option<String>,
}

impl AmbientGroup {
    pub fn root_type(&self) -> Result<Option<RootType>> {
        self.root_type.as_deref().map(str::parse).transpose()
    }
}

/// Name of the maximal-rank identity component attached to a reflection
/// subgroup class of the Weyl group.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct MaximalDescriptor {
    pub group: String,
    pub reflection_class: String,
    pub name: String,
    pub provenance: String,
}

/// Weyl group `W_G(H_e)` of a connected subgroup below maximal rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, Serialize)]
pub enum WeylOfHe {
    #[serde(rename = "1")]
    Trivial,
    #[serde(rename = "C_2")]
    C2,
    #[serde(rename = "Sp(1)")]
    Sp1,
    #[serde(rename = "SO(3)")]
    SO3,
    #[serde(rename = "Sp(1)×C_2", alias = "Sp(1)xC_2")]
    Sp1xC2,
    #[serde(rename = "U(1)")]
    U1,
}

/// Template for `Λ₀ = H_1(T_z)` with its `H_d`-action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Lambda0 {
    /// semisimple identity component, `Λ₀ = 0`
    Point,
    /// rank one, every `H_d` acts trivially
    Trivial,
    /// rank one, elements outside the index-two part act by `-1`
    Sign,
}

impl Lambda0 {
    pub fn dim(self) -> usize {
        match self {
            Lambda0::Point => 0,
            Lambda0::Trivial | Lambda0::Sign => 1,
        }
    }

    /// The representation for an `H_d` that does (`inverting`) or does not
    /// contain elements acting by inversion.
    pub fn rep(self, inverting: bool) -> IntegralRep {
        match self {
            Lambda0::Point => IntegralRep::trivial(0),
            Lambda0::Trivial => IntegralRep::trivial(1),
            Lambda0::Sign if inverting => IntegralRep {
                dim: 1,
                group_elements: vec![IntMatrix::identity(1), IntMatrix::from_rows(&[[-1]])],
            },
            Lambda0::Sign => IntegralRep::trivial(1),
        }
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ConnectedSubgroupDescriptor {
    pub group: String,
    pub name: String,
    pub rank: usize,
    pub dim: usize,
    pub weyl_of_he: WeylOfHe,
    pub lambda0: Lambda0,
    #[serde(default)]
    pub maximal_torus: bool,
    /// name of the dominant subgroup for particular `H_d` labels
    #[serde(default)]
    pub dominant: BTreeMap<String, String>,
    pub provenance: String,
}

/// A finite dominant subgroup listed as static data.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct FiniteDescriptor {
    pub group: String,
    pub name: String,
    #[serde(default)]
    pub order: Option<usize>,
    #[serde(default)]
    pub weyl: Option<String>,
    /// stands for an unclassified collection; excluded from counts
    #[serde(default)]
    pub placeholder: bool,
    pub provenance: String,
}

impl DescriptorFile {
    pub fn parse(text: &str) -> Result<Self> {
        let file: DescriptorFile = toml::from_str(text).map_err(|e| Error::Data(e.to_string()))?;
        file.validate()?;
        Ok(file)
    }

    /// The bundled data, parsed once.
    pub fn bundled() -> &'static DescriptorFile {
        static DATA: OnceLock<DescriptorFile> = OnceLock::new();
        DATA.get_or_init(|| DescriptorFile::parse(BUNDLED).expect("bundled descriptor file is valid"))
    }

    pub fn ambient(&self, name: &str) -> Result<&AmbientGroup> {
        self.group
            .iter()
            .find(|g| g.name == name)
            .ok_or_else(|| Error::UnknownGroup(name.to_string()))
    }

    pub fn group_names(&self) -> Vec<&str> {
        self.group.iter().map(|g| g.name.as_str()).collect()
    }

    fn validate(&self) -> Result<()> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Data(format!(
                "descriptor format version {} (expected {FORMAT_VERSION})",
                self.format_version
            )));
        }
        for g in &self.group {
            g.root_type()?;
            if g.root_type.is_some() != (g.rank == 2) {
                return Err(Error::Data(format!("group {} needs a root type exactly when of rank 2", g.name)));
            }
        }
        for m in &self.maximal {
            self.ambient(&m.group)?;
        }
        for c in &self.connected {
            let g = self.ambient(&c.group)?;
            if c.rank > g.rank {
                return Err(Error::Data(format!("{} in {}: rank exceeds ambient rank", c.name, c.group)));
            }
            if c.lambda0.dim() > c.rank {
                return Err(Error::Data(format!("{} in {}: Λ₀ larger than its rank", c.name, c.group)));
            }
        }
        for f in &self.finite {
            self.ambient(&f.group)?;
            if !f.placeholder && (f.order.is_none() || f.weyl.is_none()) {
                return Err(Error::Data(format!("{} in {}: order and weyl required", f.name, f.group)));
            }
        }
        Ok(())
    }
}
