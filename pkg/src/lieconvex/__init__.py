"""Tensor product supports of classical groups and their root-lattice convexity."""
from .charmult import (
    ResourceLimitError,
    WeightSystem,
    alpha_chain,
    branch_gl_to_gl,
    character_product_oracle,
    invariant_dimension,
    tensor_decompose,
    tensor_decompose_multi,
    weight_multiplicities,
)
from .convexity import (
    LineWitness,
    ScanReport,
    check_line,
    log_concavity_scan,
    prv_components,
    saturation_probe,
    scan_family,
    scan_instance,
    support,
)
from .lrcomb import kostka, lr_coefficient, lr_decompose, stretch_probe
from .rootdata import (
    RootSystem,
    build_root_system,
    dual_weight,
    in_root_lattice,
    is_dominant,
    pairing,
    partition_to_weight,
    to_dominant,
    weight_to_partition,
    weyl_dim,
)

__version__ = "0.1.0"
