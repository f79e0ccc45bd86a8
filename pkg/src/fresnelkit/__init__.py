"""Exact exterior/dyadic algebra in four dimensions and a laboratory for
electromagnetic medium bidyadics with no dispersion equation."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    ConventionError,
    FresnelKitError,
    GradeError,
    NoInverse,
    NotApplicable,
    PreconditionError,
    SpaceMismatch,
)
from .exterior import CONVENTION, MultiForm, MultiVector, one_form, vector, wedge, pair  # noqa: E402
from .dyadic import Dyadic, E, F, modified, unmodified  # noqa: E402
from .dispersion import extract_quartic, is_dispersion_free, quartic_of, plane_wave_solve  # noqa: E402
from .media import build, decompose_hehl_obukhov, invert_case1, affine_transform  # noqa: E402
from .classify import (  # noqa: E402
    appendix1_certificate, classify_raw, double_contraction_certificate, inverse_class_map, pq_discriminate,
)

__all__ = [
    "CONVENTION", "ConventionError", "Dyadic", "E", "F", "FresnelKitError", "GradeError", "MultiForm",
    "MultiVector", "NoInverse", "NotApplicable", "PreconditionError", "SpaceMismatch", "affine_transform",
    "appendix1_certificate", "build", "classify_raw", "decompose_hehl_obukhov",
    "double_contraction_certificate", "extract_quartic", "inverse_class_map", "invert_case1", "is_dispersion_free", "modified", "one_form", "pair",
    "plane_wave_solve", "pq_discriminate", "quartic_of", "unmodified", "vector", "wedge",
]
