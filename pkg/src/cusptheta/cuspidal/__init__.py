from .cartan import cartan_det, cartan_matrix, center_points
from .dataset import CuspidalRecord, DatasetError, load_dataset
from .deduce import (
    DeductionError, DeductionTrace, VerificationError, apply_aux, apply_external,
    apply_springer_lou, deduce_theta, distinct_all, distinct_check, forced_trivial,
    ubar_candidates,
)

__all__ = [
    "CuspidalRecord", "DatasetError", "DeductionError", "DeductionTrace", "VerificationError",
    "apply_aux", "apply_external", "apply_springer_lou", "cartan_det", "cartan_matrix",
    "center_points", "deduce_theta", "distinct_all", "distinct_check", "forced_trivial",
    "load_dataset", "ubar_candidates",
]
