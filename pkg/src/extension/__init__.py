from src.extension.abelian import (
    ExtensionDatum,
    ExtensionSequence,
    ExtensionTotal,
    build_extension,
    check_exactness,
    equivalence_of_extensions,
    extract_from_extension,
)
from src.extension.central import (
    CentralExtension,
    LiftResult,
    ObstructionCochain,
    central_extension_from_cocycle,
    check_central,
    extensibility,
    find_lift_directly,
    obstruction,
)
