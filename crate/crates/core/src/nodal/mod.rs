//! The prolonged nodal family `x1 x2 = t`: node binomials, the twig chain of
//! the central fiber, and the flat limit at each node.

mod binomial;
mod chain;
mod flat;

use thiserror::Error;

use crate::kernel::KernelError;

pub use binomial::{
    binomials_by_differentiation, ideal_generators, node_binomial, IdealPresentation, NodeBinomial,
};
pub use chain::{
    build_chain, central_fiber_components, chain_labels, multiplicities, multiplicity_sequence,
    twigs_at_node, NodeComponents, Twig, TwigChain, TwigComponent, TwigLabel, TwigRole,
};
pub use flat::{verify_flat_limit, FlatLimit};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("at {chart}: recursion gives {recursion}, differentiation gives {differentiation}")]
    MismatchWithRecursion {
        chart: String,
        recursion: String,
        differentiation: String,
    },
    #[error("unexpected variable {var} while differentiating into C({chart})")]
    UnexpectedVariable { chart: String, var: String },
    #[error("elimination at C({chart}) left {residual}")]
    EliminationFailed { chart: String, residual: String },
    #[error("twig {twig}: {detail}")]
    InconsistentChain { twig: String, detail: String },
    #[error("the base chart has a single node and no twig structure")]
    BaseChart,
    #[error(transparent)]
    Kernel(#[from] KernelError),
}
