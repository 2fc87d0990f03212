"""Free divisors, Jacobian ideals and their blowup algebras by exact computation."""

__version__ = "0.1.0"

from .ring import Ring
from .poly import Polynomial, euler_check
from .matrix import GradedMatrix, determinant
from .parser import parse_expression, ParseError
from .budget import ResourceExhausted
