"""Statistical spatial channel model: omnidirectional CIRs and their PDPs."""

from .generate import (
    ClusterStructure,
    LargeScaleParameters,
    assign_lobes,
    clamp_lobe_count,
    generate_cir,
    large_scale_parameters,
    sample_cluster_structure,
    sample_num_spatial_lobes,
    sample_num_time_clusters,
)
from .pdp import (
    PowerDelayProfile,
    bin_powers,
    bin_voltages,
    compute_pdp,
    rms_delay_spread,
)
from .types import LobeSide, MultipathComponent, OmniCIR, SpatialLobe, TimeCluster

__all__ = [
    "ClusterStructure",
    "LargeScaleParameters",
    "LobeSide",
    "MultipathComponent",
    "OmniCIR",
    "PowerDelayProfile",
    "SpatialLobe",
    "TimeCluster",
    "assign_lobes",
    "bin_powers",
    "bin_voltages",
    "clamp_lobe_count",
    "compute_pdp",
    "generate_cir",
    "large_scale_parameters",
    "rms_delay_spread",
    "sample_cluster_structure",
    "sample_num_spatial_lobes",
    "sample_num_time_clusters",
]
