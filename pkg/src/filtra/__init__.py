"""Steerable convolution kernels for cyclic and dihedral groups, built by
filter transform, with numerical equivariance verification."""

from .features import (
    FeatureMap,
    act_on_feature,
    conv2d,
    feature_map,
    group_pool,
    pool_spatial,
    relu_channelwise,
)
from .filters import (
    FilterStack,
    reflected_rotation_stack,
    resample_reflect,
    resample_rotate,
    rotation_stack,
    transform_filter,
)
from .groups import GroupElement, GroupSpec, cyclic_group, dihedral_group, parse_group
from .harness import (
    EquivarianceReport,
    SuiteConfig,
    check_feature_equivariance,
    check_kernel_equivariance,
    is_exact_element,
    kernel_families,
    reports_to_csv,
    run_suite,
    suite_passes,
    verify_construction_identities,
)
from .kernels import (
    CapacityReport,
    SteerableKernel,
    capacity_report,
    circulant_kernel,
    irrep_to_regular_cyclic,
    irrep_to_regular_dihedral,
    regular_to_regular_cyclic,
    regular_to_regular_dihedral,
    reverse_kernel,
    trivial_to_regular_cyclic,
    trivial_to_regular_dihedral,
)
from .representations import (
    DctBasis,
    RepSpec,
    dct_basis_cyclic,
    dct_basis_dihedral,
    decompose_regular,
    frequency_columns,
    intertwiner_residual,
    irrep,
    irrep_matrix,
    reflection_permutation,
    regular_rep,
    regular_rep_fractional,
    regular_rep_matrix,
    rotation_permutation,
    trivial_rep,
    trivial_rep_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityReport",
    "DctBasis",
    "EquivarianceReport",
    "FeatureMap",
    "FilterStack",
    "GroupElement",
    "GroupSpec",
    "RepSpec",
    "SteerableKernel",
    "SuiteConfig",
    "act_on_feature",
    "capacity_report",
    "check_feature_equivariance",
    "check_kernel_equivariance",
    "circulant_kernel",
    "conv2d",
    "cyclic_group",
    "dct_basis_cyclic",
    "dct_basis_dihedral",
    "decompose_regular",
    "dihedral_group",
    "feature_map",
    "frequency_columns",
    "group_pool",
    "intertwiner_residual",
    "irrep",
    "irrep_matrix",
    "irrep_to_regular_cyclic",
    "irrep_to_regular_dihedral",
    "is_exact_element",
    "kernel_families",
    "parse_group",
    "pool_spatial",
    "reflected_rotation_stack",
    "reflection_permutation",
    "regular_rep",
    "regular_rep_fractional",
    "regular_rep_matrix",
    "regular_to_regular_cyclic",
    "regular_to_regular_dihedral",
    "relu_channelwise",
    "reports_to_csv",
    "resample_reflect",
    "resample_rotate",
    "reverse_kernel",
    "rotation_permutation",
    "rotation_stack",
    "run_suite",
    "suite_passes",
    "transform_filter",
    "trivial_rep",
    "trivial_rep_matrix",
    "trivial_to_regular_cyclic",
    "trivial_to_regular_dihedral",
    "verify_construction_identities",
]
