"""Combinatorics of singular fibers of stable maps in dimensions (4,3) and
(5,4): fiber-class catalogs, triple-point signs, the chiral cochain complex,
bordism locus checks, and signature bookkeeping."""

from .catalog import (
    Catalog,
    FiberClass,
    catalog_43,
    catalog_54,
    classify,
    codimension,
    suspend,
)
from .complexes import (
    ChiralComplex,
    IncidenceTable,
    build_complex,
    h3,
    h4,
    integer_kernel,
)
from .graphs import DIM43, DIM54, FiberGraph, Vertex, parse_fiber_text
from .naming import enumerate_disconnected, make_name
from .octants import TriplePointModel, iii8_sign, is_chiral, one_octants, validate_octants
from .signature import (
    RegionDecomposition,
    StableMapSummary,
    consistency_checks,
    definite_locus_self_intersection,
    signature_from_definite_locus,
    signature_from_fibers,
    sphere_self_intersection,
)

__version__ = "0.1.0"

__all__ = [
    "Catalog",
    "ChiralComplex",
    "DIM43",
    "DIM54",
    "FiberClass",
    "FiberGraph",
    "IncidenceTable",
    "RegionDecomposition",
    "StableMapSummary",
    "TriplePointModel",
    "Vertex",
    "build_complex",
    "catalog_43",
    "catalog_54",
    "classify",
    "codimension",
    "consistency_checks",
    "definite_locus_self_intersection",
    "enumerate_disconnected",
    "h3",
    "h4",
    "iii8_sign",
    "integer_kernel",
    "is_chiral",
    "make_name",
    "one_octants",
    "parse_fiber_text",
    "signature_from_definite_locus",
    "signature_from_fibers",
    "sphere_self_intersection",
    "suspend",
    "validate_octants",
]
