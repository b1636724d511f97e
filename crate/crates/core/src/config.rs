/// Bounds on the exhaustive computations.
///
/// Formula-only operations (point counts, the degree identity) ignore these;
/// anything that enumerates group elements, subsystems, grid points or poset
/// elements checks the relevant bound first and fails with
/// [`Error::Capability`](crate::Error::Capability).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Capabilities {
    /// Largest Weyl group that may be enumerated element by element, and the
    /// largest orbit that may be built explicitly.
    pub max_group_order: u64,
    /// Largest rank for the torsion-point grid scan.
    pub brute_rank: usize,
    /// Largest rank for the explicit layer poset.
    pub poset_rank: usize,
    /// Largest rank for which all complete subsystems are enumerated.
    /// Products of type A factors are allowed up to rank 7 regardless.
    pub enum_rank: usize,
    /// Allow subsystem enumeration for E6.
    pub allow_e6: bool,
}

impl Default for Capabilities {
    fn default() -> Self {
        Capabilities {
            max_group_order: 60_000,
            brute_rank: 4,
            poset_rank: 3,
            enum_rank: 4,
            allow_e6: false,
        }
    }
}
