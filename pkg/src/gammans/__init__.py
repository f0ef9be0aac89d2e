"""Symmetric-group module structure of the cohomology of Gamma_{n,s} (n <= 2),
with a vanishing-verdict engine for assembly maps between these groups."""

from .assembly import (
    GluingPattern,
    MoritaGraph,
    Verdict,
    Vertex,
    assembly_verdict,
    coinvariant_pairing,
    format_pattern,
    load_pattern,
    morita_verdict,
    parse_pattern,
    validate_pattern,
)
from .errors import GammaError
from .gamma import (
    cusp_pair_domain,
    gamma_cohomology,
    gl2_h1,
    gl2_normal_form,
    hairy_dim,
    schur_dim,
    symplectic_detection,
    theorem_2mn_summand,
    w_module,
)
from .modular_forms import modular_dims
from .partitions import Partition, dim_irreducible, format_partition, parse_partition, transpose
from .rep_ring import (
    ModuleSum,
    coinvariant_dim,
    induction_product,
    lr_coefficient,
    parse_module_sum,
    restrict,
    tensor_alt,
)

__version__ = "0.1.0"
