use serde::{Deserialize, Serialize};

/// Genus and puncture count of an orientable surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceSig {
    pub genus: u32,
    pub punctures: u32,
}

impl SurfaceSig {
    pub const fn new(genus: u32, punctures: u32) -> Self {
        Self { genus, punctures }
    }

    /// `2 - 2g - n`.
    pub fn euler(&self) -> i64 {
        2 - 2 * i64::from(self.genus) - i64::from(self.punctures)
    }

    /// Euler characteristic of the closed surface obtained by filling the punctures.
    pub fn closed_euler(&self) -> i64 {
        2 - 2 * i64::from(self.genus)
    }
}

impl std::fmt::Display for SurfaceSig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.genus, self.punctures)
    }
}
