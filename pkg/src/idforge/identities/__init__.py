"""Registered identities, their builders and the exact verification engine."""

from .engine import GridRanges, VerificationResult, cells, summarize, verify, verify_grid, witness
from .fiblucas import FibLucas, fibonacci, lucas
from .registry import REGISTRY, IdentityDescriptor, ParamSpec, UnknownIdentity, build_special, get
from .theorem import build_ex1, build_ex2, build_ex3, build_g1, build_g2

__all__ = [
    "REGISTRY", "IdentityDescriptor", "ParamSpec", "UnknownIdentity", "build_special", "get",
    "GridRanges", "VerificationResult", "cells", "summarize", "verify", "verify_grid", "witness",
    "FibLucas", "fibonacci", "lucas",
    "build_g1", "build_g2", "build_ex1", "build_ex2", "build_ex3",
]
