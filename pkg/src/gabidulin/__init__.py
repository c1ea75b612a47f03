# Import core functionality
from .automorphism import Automorphism
from .codes import GabidulinCode
from .fields import FieldTower, build_tower
from .formats import build_field, read_spec
from .models import DecodeStatus, WeightReport
from .rank import Word, moore_matrix, random_rank_error, rank_distance, weights
from .skew import SkewPolynomial, annihilator, min_ideal_poly, root_space

__all__ = [
    "Automorphism",
    "DecodeStatus",
    "FieldTower",
    "GabidulinCode",
    "SkewPolynomial",
    "WeightReport",
    "Word",
    "annihilator",
    "build_field",
    "build_tower",
    "min_ideal_poly",
    "moore_matrix",
    "random_rank_error",
    "rank_distance",
    "read_spec",
    "root_space",
    "weights",
]
