"""Citation indexes with author-rank weighted credit.

Any citation-count index ``f`` has a weighted counterpart obtained by
feeding it ``citations / author_rank`` per paper instead of raw counts::

    >>> from citeweight import RankedPaper, apply_modified, h_index
    >>> papers = [RankedPaper(9, 2)] * 5
    >>> h_index([p.citations for p in papers]), apply_modified(h_index, papers)
    (5, 4)
"""

__version__ = "0.1.0"

from .career import (
    CareerPaper,
    CareerRecord,
    CareerSeries,
    CohortRow,
    CohortSummary,
    average_author_rank,
    cohort_stats,
    h_trajectory,
    m_coefficient,
    m_fit,
    publication_rate,
    read_cohort_csv,
    cohort_h110_rows,
)
from .errors import (
    AlphabeticalOrderWarning,
    AmbiguousAuthorError,
    CiteWeightError,
    EmptyInputError,
    InvalidArgumentError,
    InvalidRankError,
    ParseError,
    ResearcherNotAuthorError,
    ResolutionError,
    ValidationError,
)
from .ingest import (
    Publication,
    ResearcherProfile,
    build_career,
    load_profile,
    normalize_name,
    parse_publications,
    resolve_author_rank,
    serialize_publications,
)
from .kernels import BACKEND
from .metrics import (
    IndexReport,
    RankedPaper,
    apply_modified,
    c_index,
    e_index,
    g_index,
    h_index,
    harmonic,
    i10_index,
    index_report,
    marginal_credit,
    total_credit_curve,
    weight_citations,
)
from .model import (
    CreditGame,
    HonoraryComparison,
    HonoraryScenario,
    ModelParams,
    SimulatedCareer,
    closed_form_h,
    closed_form_h_weighted,
    credit_game_summary,
    honorary_scenario,
    simulate_career,
    slowdown_factor,
)
