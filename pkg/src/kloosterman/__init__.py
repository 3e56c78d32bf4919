"""Deterministic Kloosterman-zero testing over F(2^n) and F(3^n).

The test computes the Sylow p-subgroup of an associated elliptic curve by
repeated point halving (p = 2) or thirding (p = 3); ``a`` is a zero exactly
when that subgroup has order p^n.
"""

from .context import setup
from .ec2 import Curve2, PointLambda, SylowResult
from .ec3 import Curve3
from .gf2 import FieldCtx2, setup_gf2
from .gf3 import FieldCtx3, setup_gf3
from .search import curve_for

__all__ = [
    "Curve2",
    "Curve3",
    "FieldCtx2",
    "FieldCtx3",
    "PointLambda",
    "SylowResult",
    "curve_for",
    "setup",
    "setup_gf2",
    "setup_gf3",
]
