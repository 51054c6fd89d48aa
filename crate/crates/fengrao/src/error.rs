use thiserror::Error;

/// Errors reported by the semigroup and Feng-Rao operations.
///
/// All arithmetic is signed 64-bit with checked operations at the
/// construction boundaries; an overflow is reported, never wrapped.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no generators given")]
    EmptyGenerators,
    #[error("generator {0} is not positive")]
    NonPositiveGenerator(i64),
    #[error("gcd of the generators is {0}; the complement would be infinite")]
    InfiniteComplement(i64),
    #[error("small-element list is empty")]
    EmptySmallElements,
    #[error("small elements must start at 0 and be strictly increasing")]
    UnsortedSmallElements,
    #[error("{a} + {b} = {sum} is missing: the set is not closed under addition")]
    NotClosed { a: i64, b: i64, sum: i64 },
    #[error("{0} is a member, so the conductor is not minimal")]
    ConductorNotMinimal(i64),
    #[error("multiplicity sequence is empty")]
    EmptySequence,
    #[error("multiplicity sequence entry {0} is not positive")]
    NonPositiveDistance(i64),
    #[error("multiplicity sequence must end in 1, got {0}")]
    SequenceMustEndInOne(i64),
    #[error("{0} is not a member of the semigroup")]
    NotAMember(i64),
    #[error("translation amount {0} must be positive")]
    NonPositiveTranslation(i64),
    #[error("the semigroup is not Arf")]
    NotArf,
    #[error("the order r must be at least 1")]
    OrderZero,
    #[error("{0} is outside the window this formula covers")]
    OutOfWindow(i64),
    #[error("{0} lies below the conductor and is not a member")]
    GapBelowConductor(i64),
    #[error("homothecy factor {0} must be at least 2")]
    HomothecyFactor(i64),
    #[error("homothecy base {b} must be at least the conductor {conductor}")]
    HomothecyBase { b: i64, conductor: i64 },
    #[error("tower level {0} must be at least {1}")]
    TowerLevel(u32, u32),
    #[error("tower parameter q = {0} must be at least 2")]
    TowerBase(i64),
    #[error("genus {0} is too small for the hyperelliptic formulas (need g >= 2)")]
    GenusTooSmall(i64),
    #[error("range {lo}:{hi} is outside the supported interval [{min}, {max}]")]
    RangeOutOfBounds { lo: i64, hi: i64, min: i64, max: i64 },
    #[error("empty range {lo}:{hi}")]
    EmptyRange { lo: i64, hi: i64 },
    #[error("{0} must be positive")]
    NonPositive(i64),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("instance too large to materialize (bound {0})")]
    TooLarge(i64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
