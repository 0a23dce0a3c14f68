"""Bounded discrete power-law model of scale-free network degree distributions.

Thin Python surface over the C++ core: the distribution itself, derived
connectivity metrics, edge-list ingestion, maximum-likelihood fitting, and
synthetic graph generation.
"""

import json as _json

from ._core import (
    BoundedPowerLaw,
    DataError,
    DomainError,
    ParseError,
    RandomState,
    RichPoint,
    clean,
    configuration_model,
    degree_histogram,
    degree_sequence,
    degrees_at_top_fraction,
    empirical_rich_fraction,
    fit,
    ks_statistic,
    load_edge_list,
    log_likelihood,
    mle_lambda,
    newman_mean_degree,
    newman_rich_fraction,
    parse_edge_list,
    ratio_max_degree,
    ratio_min_degree,
    renormalize_low_degree_ratio,
    rich_curve,
    rich_fractions,
    sample_degrees,
    summarize,
    sweep,
    theory_table,
    truncated_zeta,
    xpp_min_ratio_reference,
)
from ._core import analyze_file_json as _analyze_file_json

__version__ = "1.0.0"


def analyze_file(path, strategy="fixed", k_min=1, k_max=0,
                 targets=(0.20, 0.27), use_n_as_kmax=False, renorm_top=3):
    """Ingest, fit, and compare one edge-list file; returns a nested dict."""
    return _json.loads(
        _analyze_file_json(path, strategy, k_min, k_max, list(targets),
                           use_n_as_kmax, renorm_top))


__all__ = [
    "BoundedPowerLaw",
    "DataError",
    "DomainError",
    "ParseError",
    "RandomState",
    "RichPoint",
    "analyze_file",
    "clean",
    "configuration_model",
    "degree_histogram",
    "degree_sequence",
    "degrees_at_top_fraction",
    "empirical_rich_fraction",
    "fit",
    "ks_statistic",
    "load_edge_list",
    "log_likelihood",
    "mle_lambda",
    "newman_mean_degree",
    "newman_rich_fraction",
    "parse_edge_list",
    "ratio_max_degree",
    "ratio_min_degree",
    "renormalize_low_degree_ratio",
    "rich_curve",
    "rich_fractions",
    "sample_degrees",
    "summarize",
    "sweep",
    "theory_table",
    "truncated_zeta",
    "xpp_min_ratio_reference",
]
