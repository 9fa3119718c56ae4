"""Exact verification of a partition identity involving pbin, z_mu and Pochhammer symbols."""

from partition_identity.exact import PolyX, SeriesPhi
from partition_identity.identity import CheckResult, MainParams, lhs_main, rhs_main, verify_main

__all__ = ["PolyX", "SeriesPhi", "CheckResult", "MainParams", "lhs_main", "rhs_main", "verify_main"]
__version__ = "0.1.0"
