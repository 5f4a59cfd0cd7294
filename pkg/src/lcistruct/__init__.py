"""Multiple structures on smooth supports: exact ideal arithmetic, canonical
filtrations, and a certified local construction of lci structures."""

from . import kernels
from .construct import (
    ChainResult,
    ConstructionError,
    ConstructionPlan,
    StepCertificate,
    paper_examples,
    recognize_normal_form,
    run_construction,
    verify_coordinate_change,
)
from .forms import BinaryForm, discriminant, hessian, nowhere_vanishing, resultant
from .groebner import GroebnerBasis, Ideal, groebner, ideal_equal, ideal_ops, member, normal_form
from .invariants import (
    INFINITE,
    HilbertData,
    TruncationTooSmall,
    artinian_length,
    hilbert,
    krull_dimension,
    local_min_gens,
)
from .multistruct import (
    Filtration,
    GenericPointModel,
    InvalidStructure,
    MultipleStructure,
    StructureType,
)
from .poly import GREVLEX, LEX, QQ, FractionField, MonomialOrder, PolyRing, Polynomial, elimination
from .report import Report

__version__ = "0.1.0"

__all__ = [
    "ChainResult",
    "ConstructionError",
    "ConstructionPlan",
    "BinaryForm",
    "Filtration",
    "FractionField",
    "GREVLEX",
    "GenericPointModel",
    "GroebnerBasis",
    "HilbertData",
    "INFINITE",
    "Ideal",
    "InvalidStructure",
    "LEX",
    "MonomialOrder",
    "MultipleStructure",
    "PolyRing",
    "Polynomial",
    "QQ",
    "Report",
    "StepCertificate",
    "StructureType",
    "TruncationTooSmall",
    "artinian_length",
    "discriminant",
    "elimination",
    "groebner",
    "hessian",
    "hilbert",
    "ideal_equal",
    "ideal_ops",
    "kernels",
    "krull_dimension",
    "local_min_gens",
    "member",
    "normal_form",
    "nowhere_vanishing",
    "paper_examples",
    "recognize_normal_form",
    "resultant",
    "run_construction",
    "verify_coordinate_change",
]
