from src.deform.deformation import (
    DeformationTruncation,
    EquivalenceSeries,
    RigidityReport,
    infinitesimal_is_cocycle,
    rigidity_probe,
    transport_equivalence,
    validate_truncation,
)
