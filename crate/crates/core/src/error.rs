use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Machine-readable error categories; the CLI maps them onto exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Precondition,
    ResourceLimit,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("variable index {index} out of range for a ring with {num_vars} variables")]
    IndexOutOfRange { index: usize, num_vars: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("presentation gives vanishing Fitting ideal")]
    VanishingFitting,
    #[error("resource limit exceeded: {limit} (limit {max}, reached {reached})")]
    ResourceLimit {
        limit: &'static str,
        max: usize,
        reached: usize,
    },
    #[error("colon by zero ideal")]
    ColonByZero,
    #[error("V does not contain X: generator {0} of I_V is not in I_X")]
    NotContained(String),
    #[error("not a unit: series has positive t-order")]
    NotAUnit,
    #[error("truncation order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("arc is not on the variety: {0}")]
    ArcNotOnVariety(String),
    #[error("chart not on X: {0}")]
    ChartNotOnVariety(String),
    #[error("chart not dominant/immersive: {0}")]
    ChartNotImmersive(String),
    #[error("degenerate chart: all maximal minors of the chart Jacobian vanish")]
    DegenerateChart,
    #[error("chart maps into singular locus: ord of the Jacobian ideal is infinite along {0}")]
    MapsIntoSingularLocus(String),
    #[error("R-ideal vanishes along component: factor {factor} has infinite order along {chart}")]
    RIdealVanishes { factor: usize, chart: String },
    #[error("no witnesses: no chart has its center inside the given closed set")]
    NoWitnesses,
    #[error("genericity sampling unstable, increase the bound: {0}")]
    SamplingUnstable(String),
    #[error("dimension one: the comparison needs dim X >= 2")]
    DimensionOne,
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown name: {0}")]
    UnknownName(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. } => ErrorKind::Parse,
            Error::ResourceLimit { .. } => ErrorKind::ResourceLimit,
            _ => ErrorKind::Precondition,
        }
    }

    /// Short stable identifier used in JSON error reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::RingMismatch(_) => "ring_mismatch",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::LengthMismatch { .. } => "length_mismatch",
            Error::InvalidRing(_) => "invalid_ring",
            Error::VanishingFitting => "vanishing_fitting_ideal",
            Error::ResourceLimit { .. } => "resource_limit",
            Error::ColonByZero => "colon_by_zero",
            Error::NotContained(_) => "v_does_not_contain_x",
            Error::NotAUnit => "not_a_unit",
            Error::OrderMismatch(..) => "order_mismatch",
            Error::ArcNotOnVariety(_) => "arc_not_on_variety",
            Error::ChartNotOnVariety(_) => "chart_not_on_x",
            Error::ChartNotImmersive(_) => "chart_not_immersive",
            Error::DegenerateChart => "degenerate_chart",
            Error::MapsIntoSingularLocus(_) => "chart_maps_into_singular_locus",
            Error::RIdealVanishes { .. } => "rideal_vanishes",
            Error::NoWitnesses => "no_witnesses",
            Error::SamplingUnstable(_) => "sampling_unstable",
            Error::DimensionOne => "dimension_one",
            Error::DivisionByZero(_) => "division_by_zero",
            Error::Precondition(_) => "precondition",
            Error::Parse { .. } => "parse_error",
            Error::UnknownName(_) => "unknown_name",
        }
    }
}
