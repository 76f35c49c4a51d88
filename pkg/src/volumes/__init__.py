from src.volumes.fiber import (
    FiberPolytope,
    IncidenceMatrix,
    VolumeValue,
    cell_fiber_volume,
    fiber_polytope,
    incidence_matrix,
    polytope_volume,
)
from src.volumes.laplace import LaplaceReport, laplace_check
from src.volumes.total import (
    LaplaceIdentity,
    TotalVolume,
    laplace_exact,
    total_volume,
    volume_scaling_defect,
    y_integrated_volume,
)

__all__ = [
    "FiberPolytope",
    "IncidenceMatrix",
    "LaplaceIdentity",
    "LaplaceReport",
    "TotalVolume",
    "VolumeValue",
    "cell_fiber_volume",
    "fiber_polytope",
    "incidence_matrix",
    "laplace_check",
    "laplace_exact",
    "polytope_volume",
    "total_volume",
    "volume_scaling_defect",
    "y_integrated_volume",
]
