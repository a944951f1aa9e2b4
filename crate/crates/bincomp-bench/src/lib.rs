//! Pinned instance builders shared by the criterion benches.
//!
//! Everything is drawn from fixed seeds so numbers stay comparable across
//! runs and machines without an external data directory.

use bincomp::{generate_instance, CorrelationClass, GenSpec, Instance, ProblemKind};

/// Generates the instance a `(kind, class, n, m, seed)` tuple pins down.
///
/// Weights are uniform in `[1, 1000]`; packing and covering use a bound of
/// 1000 (the MKP/MCCP container sizes are drawn by the generator itself).
///
/// # Panics
/// Panics when the [`GenSpec`] cannot produce an instance, which for these
/// fixed tuples would mean the generator changed behavior.
pub fn pinned(
    kind: ProblemKind,
    class: CorrelationClass,
    n: usize,
    m: usize,
    seed: u64,
) -> Instance {
    let bound = match kind {
        ProblemKind::BinPacking | ProblemKind::BinCovering => Some(1000),
        ProblemKind::Mkp | ProblemKind::Mccp => None,
    };
    let spec = GenSpec {
        kind,
        n,
        m,
        weight_min: 1,
        weight_max: 1000,
        class,
        bound,
        seed,
    };
    generate_instance(&spec).expect("pinned spec generates")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pinned_is_reproducible() {
        let a = pinned(ProblemKind::Mkp, CorrelationClass::WeaklyCorrelated, 20, 5, 11);
        let b = pinned(ProblemKind::Mkp, CorrelationClass::WeaklyCorrelated, 20, 5, 11);
        assert_eq!(a.items(), b.items());
        assert_eq!(a.containers(), b.containers());
    }
}
