"""catent: distance geometry and algebra on categorical datasets.

Columns of a categorical dataset become points of a finite distance
space under ``d = 1 - SU`` (symmetric uncertainty) and elements of a
commutative monoid under the row-wise joint operation.  The package
computes the quantities and ships executable validators for the
claimed laws; the validators are faithful, and one of their findings
is that d is a semimetric, not a metric (see ``catent.metric``).
"""

from .model import (
    CanonicalClass,
    CatentError,
    CategoricalVariable,
    ContingencyTable,
    Dataset,
    JointVariable,
    Partition,
    StructuralError,
    canonical_class,
    canonical_classes,
    canonicalize,
    contingency,
    format_label,
    induced_partition,
    is_coarser,
    join,
    parse_label,
    trivial_partition,
)
from .entropy import (
    Bits,
    CrossCheck,
    LawClause,
    LawReport,
    TOLERANCE,
    UndefinedRatioError,
    check_conditional_entropy_laws,
    conditional_entropy,
    cross_check,
    entropic_ratio,
    entropy,
    joint_entropy,
    mutual_information,
    symmetric_uncertainty,
)
from .metric import (
    AxiomCheck,
    AxiomReport,
    DistanceMatrix,
    check_distance_axioms,
    check_similarity_axioms,
    distance_matrix,
    merge_reports,
    nondiscreteness_demo,
    partition_distance,
    su_distance,
)
from .algebra import (
    are_indiscernible,
    check_contractivity,
    check_monoid_laws,
    identity_variable,
    joint,
    relabel,
)
from .randgen import MODES, ConfigError, GenConfig, SplitMix64, gen_dataset
from .ingest import (
    CsvSpec,
    EmptyDatasetError,
    INDISCERNIBLES,
    INTERNSHIP,
    IngestError,
    NameCollisionError,
    ParseError,
    fixture_path,
    load_csv,
    load_fixture,
    load_matrix,
    save_csv,
    save_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomCheck",
    "AxiomReport",
    "Bits",
    "CanonicalClass",
    "CatentError",
    "CategoricalVariable",
    "ConfigError",
    "ContingencyTable",
    "CrossCheck",
    "CsvSpec",
    "Dataset",
    "DistanceMatrix",
    "EmptyDatasetError",
    "GenConfig",
    "INDISCERNIBLES",
    "INTERNSHIP",
    "IngestError",
    "JointVariable",
    "LawClause",
    "LawReport",
    "MODES",
    "NameCollisionError",
    "ParseError",
    "Partition",
    "SplitMix64",
    "StructuralError",
    "TOLERANCE",
    "UndefinedRatioError",
    "are_indiscernible",
    "canonical_class",
    "canonical_classes",
    "canonicalize",
    "check_conditional_entropy_laws",
    "check_contractivity",
    "check_distance_axioms",
    "check_monoid_laws",
    "check_similarity_axioms",
    "conditional_entropy",
    "contingency",
    "cross_check",
    "distance_matrix",
    "entropic_ratio",
    "entropy",
    "fixture_path",
    "format_label",
    "gen_dataset",
    "identity_variable",
    "induced_partition",
    "is_coarser",
    "join",
    "joint",
    "joint_entropy",
    "load_csv",
    "load_fixture",
    "load_matrix",
    "merge_reports",
    "mutual_information",
    "nondiscreteness_demo",
    "parse_label",
    "partition_distance",
    "relabel",
    "save_csv",
    "save_matrix",
    "su_distance",
    "symmetric_uncertainty",
    "trivial_partition",
]
