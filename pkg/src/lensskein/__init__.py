"""Kauffman bracket skein modules of lens spaces at roots of unity."""

from .coeffs import Cyclo, EvalTarget, HalfLaurent, RatFunc
from .annulus import AnnularWord, SkeinVector, resolve
from .torusalg import TorusElement, pts_mul
from .heegaard import GluingData, LensPresentation, quotient_basis, fiber_dim
from .charvar import char_scheme

__all__ = [
    "Cyclo", "EvalTarget", "HalfLaurent", "RatFunc",
    "AnnularWord", "SkeinVector", "resolve",
    "TorusElement", "pts_mul",
    "GluingData", "LensPresentation", "quotient_basis", "fiber_dim",
    "char_scheme",
]
