"""Oriented Hamiltonian paths in tournaments and their survival under arc deletion."""

from .core import (
    ArcDeletedDigraph,
    InvalidArgumentError,
    Tournament,
    delete_arc,
    dual,
    from_trn,
    induced,
    insection,
    is_ingenerator,
    is_outgenerator,
    is_strong,
    outsection,
    strong_components,
    to_trn,
)
from .pathtype import OrientedPathType, all_path_types, parse_type, reverse_type, strip_origin, type_of_witness
from .embed import brute_force_contains, contains_path, count_hamiltonian_directed_paths, origins
from .enumeration import all_tournaments, canonical_form
from .catalog import (
    ExceptionRecord,
    FamilyConstructor,
    SpecialExceptionKind,
    build_family,
    figure,
    finite_catalog,
    grunbaum_exceptions,
    is_special_exception,
    match_exception,
    validate_record,
)
from .verify import VerificationReport, run_suite

__version__ = "0.1.0"
