"""Experiment drivers: plane-union specializations, structured random
forms, counting dichotomies, singular-locus censuses, and rank witnesses."""

from .census import (
    CSV_HEADER,
    CensusRecord,
    CensusSummary,
    SquarefreeReport,
    census,
    square_multiple_set,
    squarefree_census,
    write_census_csv,
)
from .dhcount import dh_counting
from .smart import (
    EnExperimentReport,
    SmartSample,
    UniformityReport,
    commutation_holds,
    en_experiment,
    event_En_proxy,
    random_smart_sample,
    smart_construct,
    uniformity_of_smart,
)
from .specialization import (
    LinearConfig,
    SpecializationReport,
    groebner_union_codim,
    mu_increments,
    random_config,
    surviving_monomials,
    union_vanishing_codim,
)
from .witness import (
    WitnessResult,
    degree_bound_audit,
    jacobian_witness,
    square_ideal_generators,
)

__all__ = [
    "LinearConfig",
    "SpecializationReport",
    "union_vanishing_codim",
    "mu_increments",
    "groebner_union_codim",
    "surviving_monomials",
    "random_config",
    "SmartSample",
    "smart_construct",
    "random_smart_sample",
    "uniformity_of_smart",
    "UniformityReport",
    "commutation_holds",
    "event_En_proxy",
    "EnExperimentReport",
    "en_experiment",
    "dh_counting",
    "CensusRecord",
    "CensusSummary",
    "census",
    "write_census_csv",
    "CSV_HEADER",
    "square_multiple_set",
    "SquarefreeReport",
    "squarefree_census",
    "WitnessResult",
    "jacobian_witness",
    "square_ideal_generators",
    "degree_bound_audit",
]
