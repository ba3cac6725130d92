"""Quasi-cyclic binary self-dual codes built from a tap polynomial and its reversal."""

from .errors import CapacityError, InputError, MalformedDistributionError
from .gf2poly import Gf2Poly, poly_from_string
from .qccode import GeneratorMatrix, Layout, QcCode, build_code, generator_matrix
from .weights import CodeReport, Family, Parity, WeightDistribution, weight_distribution

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "CodeReport",
    "Family",
    "GeneratorMatrix",
    "Gf2Poly",
    "InputError",
    "Layout",
    "MalformedDistributionError",
    "Parity",
    "QcCode",
    "WeightDistribution",
    "build_code",
    "generator_matrix",
    "poly_from_string",
    "weight_distribution",
]
