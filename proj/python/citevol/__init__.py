"""Citation-average volatility analytics.

Thin wrapper around the compiled extension. Everything useful lives in
the extension module; this package re-exports the public names.
"""

from citevol._core import (
    BandFit,
    CleaningLog,
    CorpusStats,
    DataError,
    FiveNumberSummary,
    JournalProfile,
    LowCitationMixture,
    PaperRecord,
    RankedReport,
    SubjectStats,
    SynthConfig,
    TailFit,
    ThresholdRow,
    TopKRemoval,
    VolatilityReport,
    WhatIfRow,
    aggregate,
    benefit_case_high,
    citation_average,
    clean,
    generate,
    generate_profiles,
    global_stats,
    median_and_summary,
    parallel_band_check,
    parse_corpus,
    penalty_case_low,
    phi_index,
    rank_by_volatility,
    relative_volatility,
    relative_volatility_high_c,
    remove_top,
    remove_top_k,
    render_scatter_svg,
    surface_grid,
    table1_corpus,
    tail_exponent,
    threshold_table,
    volatility_approx,
    volatility_exact,
    what_if_rows,
)

__version__ = "0.1.0"

__all__ = [
    "BandFit",
    "CleaningLog",
    "CorpusStats",
    "DataError",
    "FiveNumberSummary",
    "JournalProfile",
    "LowCitationMixture",
    "PaperRecord",
    "RankedReport",
    "SubjectStats",
    "SynthConfig",
    "TailFit",
    "ThresholdRow",
    "TopKRemoval",
    "VolatilityReport",
    "WhatIfRow",
    "aggregate",
    "benefit_case_high",
    "citation_average",
    "clean",
    "generate",
    "generate_profiles",
    "global_stats",
    "median_and_summary",
    "parallel_band_check",
    "parse_corpus",
    "penalty_case_low",
    "phi_index",
    "rank_by_volatility",
    "relative_volatility",
    "relative_volatility_high_c",
    "remove_top",
    "remove_top_k",
    "render_scatter_svg",
    "surface_grid",
    "table1_corpus",
    "tail_exponent",
    "threshold_table",
    "volatility_approx",
    "volatility_exact",
    "what_if_rows",
]
