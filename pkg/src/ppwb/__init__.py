"""Exact counting workbench for boxed plane partitions and their relatives."""

from .core import (
    BoxDims,
    Partition,
    PlanePartition,
    ReversePlanePartition,
    conjugate,
    enumerate_box,
    enumerate_by_size,
    format_plane_partition,
    frobenius_inverse,
    frobenius_pair,
    parse_plane_partition,
)
from .qseries import QPolynomial, RatioProduct, box_count, box_gf, class_formula

__all__ = [
    "BoxDims",
    "Partition",
    "PlanePartition",
    "QPolynomial",
    "RatioProduct",
    "ReversePlanePartition",
    "box_count",
    "box_gf",
    "class_formula",
    "conjugate",
    "enumerate_box",
    "enumerate_by_size",
    "format_plane_partition",
    "frobenius_inverse",
    "frobenius_pair",
    "parse_plane_partition",
]

__version__ = "0.1.0"
