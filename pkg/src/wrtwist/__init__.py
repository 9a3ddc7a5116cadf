"""Well-rounded twists of ideal lattices from real quadratic fields."""

from .errors import WRTwistError
from .field import FieldCtx, QuadInt, QuadRat, new_field
from .ideals import Ideal, ideal_from_canonical, ideal_from_generator
from .surd import Surd

__all__ = ["FieldCtx", "Ideal", "QuadInt", "QuadRat", "Surd", "WRTwistError",
           "ideal_from_canonical", "ideal_from_generator", "new_field"]
__version__ = "0.1.0"
