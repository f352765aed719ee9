use std::fmt;

use crate::FamilyError;

/// The registered diagram algebra families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// All set-partition diagrams.
    Partition,
    /// Diagrams with `n` and `n'` in the same block.
    HalfPartition,
    /// Diagrams with no singleton block (index set and dimensions only; the
    /// orthogonalized basis is not spanned by plain diagrams).
    QuasiPartitionIndex,
    /// Complex reflection group centralizer regime: every block has top and
    /// bottom counts congruent mod `r`. Instantiable only for `r > n`, where
    /// the congruence forces the counts equal.
    Gr1m,
    /// Every block has equally many top and bottom vertices.
    UniformBlock,
    /// Every block has even size.
    ParityMatching,
    /// Every block has size exactly two.
    Brauer,
    /// Every block has size at most two.
    RookBrauer,
    /// Blocks of size at most two, every two-block propagating.
    Rook,
    /// Planar diagrams.
    PlanarPartition,
    /// Planar perfect matchings.
    TemperleyLieb,
    /// Planar diagrams with blocks of size at most two.
    Motzkin,
    /// Motzkin diagrams with equally many top arcs and bottom arcs (index
    /// set and dimensions only).
    PartialTlIndex,
    /// Planar diagrams with no singleton block (index set, dimensions and
    /// cell halves; products live outside the span).
    PlanarQuasiPartitionIndex,
    /// Planar diagrams of singletons and propagating two-blocks.
    PlanarRook,
    /// Planar diagrams with all blocks of even size.
    PlanarEven,
    /// Planar diagrams with top and bottom block counts congruent mod `r`.
    PlanarRColor,
    /// Planar diagrams with equal top and bottom block counts.
    PlanarUniform,
}

pub const ALL_FAMILIES: [FamilyId; 18] = [
    FamilyId::Partition,
    FamilyId::HalfPartition,
    FamilyId::QuasiPartitionIndex,
    FamilyId::Gr1m,
    FamilyId::UniformBlock,
    FamilyId::ParityMatching,
    FamilyId::Brauer,
    FamilyId::RookBrauer,
    FamilyId::Rook,
    FamilyId::PlanarPartition,
    FamilyId::TemperleyLieb,
    FamilyId::Motzkin,
    FamilyId::PartialTlIndex,
    FamilyId::PlanarQuasiPartitionIndex,
    FamilyId::PlanarRook,
    FamilyId::PlanarEven,
    FamilyId::PlanarRColor,
    FamilyId::PlanarUniform,
];

impl FamilyId {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyId::Partition => "partition",
            FamilyId::HalfPartition => "half_partition",
            FamilyId::QuasiPartitionIndex => "quasi_partition_index",
            FamilyId::Gr1m => "g_r1m",
            FamilyId::UniformBlock => "uniform_block",
            FamilyId::ParityMatching => "parity_matching",
            FamilyId::Brauer => "brauer",
            FamilyId::RookBrauer => "rook_brauer",
            FamilyId::Rook => "rook",
            FamilyId::PlanarPartition => "planar_partition",
            FamilyId::TemperleyLieb => "temperley_lieb",
            FamilyId::Motzkin => "motzkin",
            FamilyId::PartialTlIndex => "partial_tl_index",
            FamilyId::PlanarQuasiPartitionIndex => "planar_quasi_partition_index",
            FamilyId::PlanarRook => "planar_rook",
            FamilyId::PlanarEven => "planar_even",
            FamilyId::PlanarRColor => "planar_r_color",
            FamilyId::PlanarUniform => "planar_uniform",
        }
    }

    pub fn parse(text: &str) -> Result<Self, FamilyError> {
        ALL_FAMILIES
            .into_iter()
            .find(|id| id.as_str() == text)
            .ok_or_else(|| FamilyError::Parse(format!("unknown family id {text:?}")))
    }

    /// Whether the family takes the color parameter `r`.
    pub fn requires_r(self) -> bool {
        matches!(self, FamilyId::Gr1m | FamilyId::PlanarRColor)
    }

    /// Whether every diagram in the family has blocks of size at most two.
    /// Only on such families can the loop and path parameters be specialized
    /// independently; everywhere else the path parameter is tied to the loop
    /// parameter.
    pub fn small_blocks(self) -> bool {
        matches!(
            self,
            FamilyId::Brauer
                | FamilyId::RookBrauer
                | FamilyId::Rook
                | FamilyId::TemperleyLieb
                | FamilyId::Motzkin
                | FamilyId::PartialTlIndex
                | FamilyId::PlanarRook
        )
    }

    /// Whether every diagram in the family is planar.
    pub fn planar(self) -> bool {
        matches!(
            self,
            FamilyId::PlanarPartition
                | FamilyId::TemperleyLieb
                | FamilyId::Motzkin
                | FamilyId::PartialTlIndex
                | FamilyId::PlanarQuasiPartitionIndex
                | FamilyId::PlanarRook
                | FamilyId::PlanarEven
                | FamilyId::PlanarRColor
                | FamilyId::PlanarUniform
        )
    }

    /// Whether the diagram span is closed under composition. The two quasi
    /// index sets and the balanced Motzkin index set are not: products of
    /// their diagrams can involve diagrams outside the set.
    pub fn supports_products(self) -> bool {
        !matches!(
            self,
            FamilyId::QuasiPartitionIndex
                | FamilyId::PartialTlIndex
                | FamilyId::PlanarQuasiPartitionIndex
        )
    }

    /// Whether cell labels and dimensions are exposed.
    pub fn supports_cells(self) -> bool {
        self != FamilyId::PartialTlIndex
    }

    /// Whether cell bases are exposed as concrete half diagrams. The
    /// quasi-partition cells exist only after orthogonalization and are not
    /// half-diagram spans.
    pub fn supports_cell_basis(self) -> bool {
        self.supports_cells() && self != FamilyId::QuasiPartitionIndex
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A family together with its size parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub id: FamilyId,
    pub n: usize,
    pub r: Option<usize>,
}

impl FamilySpec {
    pub fn new(id: FamilyId, n: usize) -> Result<Self, FamilyError> {
        if id.requires_r() {
            return Err(FamilyError::BadParams(format!("{id} requires the parameter r")));
        }
        Self::build(id, n, None)
    }

    pub fn with_r(id: FamilyId, n: usize, r: usize) -> Result<Self, FamilyError> {
        if !id.requires_r() {
            return Err(FamilyError::BadParams(format!("{id} takes no parameter r")));
        }
        Self::build(id, n, Some(r))
    }

    fn build(id: FamilyId, n: usize, r: Option<usize>) -> Result<Self, FamilyError> {
        if n == 0 {
            return Err(FamilyError::BadParams("n must be positive".into()));
        }
        if let Some(r) = r {
            if r == 0 {
                return Err(FamilyError::BadParams("r must be positive".into()));
            }
            if id == FamilyId::Gr1m && r <= n {
                return Err(FamilyError::BadParams(format!(
                    "g_r1m requires r > n, got r = {r}, n = {n}"
                )));
            }
        }
        Ok(FamilySpec { id, n, r })
    }

    /// The color parameter; only meaningful when [`FamilyId::requires_r`].
    pub fn r(&self) -> usize {
        self.r.expect("family has no parameter r")
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.r {
            Some(r) => write!(f, "{}(n={}, r={})", self.id, self.n, r),
            None => write!(f, "{}(n={})", self.id, self.n),
        }
    }
}
