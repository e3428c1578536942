"""Exact bivariate binomial-moment toolkit: moment/pmf/tail inversions and
the catalogue of joint upper-orthant probability bounds, all in exact
rational arithmetic."""

from .bounds import (
    BoundValue,
    bonferroni_pair,
    chung_bound,
    comparison_bound,
    frechet_gumbel_type,
    frechet_lower,
    gumbel_upper,
)
from .combinatorics import DomainError, binom, check_identity
from .model import (
    EventSystem,
    JointPMF,
    MomentMatrix,
    bonferroni_sums,
    complement_pmf,
    counting_pmf,
    event_system_from_pmf,
    moments_from_pmf,
)
from .oracle import (
    InstanceSpec,
    ValidationReport,
    exact_tail,
    random_instance,
    tail_table_from_pmf,
    validate,
)
from .transforms import (
    TailTable,
    complementary_moment,
    moments_from_tails,
    pgf_eval,
    pgf_identity_holds,
    pmf_from_moments,
    tail_table_from_moments,
    tails_from_moments,
)

__all__ = [
    "BoundValue",
    "DomainError",
    "EventSystem",
    "InstanceSpec",
    "JointPMF",
    "MomentMatrix",
    "TailTable",
    "ValidationReport",
    "binom",
    "bonferroni_pair",
    "bonferroni_sums",
    "check_identity",
    "chung_bound",
    "comparison_bound",
    "complement_pmf",
    "complementary_moment",
    "counting_pmf",
    "event_system_from_pmf",
    "exact_tail",
    "frechet_gumbel_type",
    "frechet_lower",
    "gumbel_upper",
    "moments_from_pmf",
    "moments_from_tails",
    "pgf_eval",
    "pgf_identity_holds",
    "pmf_from_moments",
    "random_instance",
    "tail_table_from_moments",
    "tail_table_from_pmf",
    "tails_from_moments",
    "validate",
]

__version__ = "0.1.0"
