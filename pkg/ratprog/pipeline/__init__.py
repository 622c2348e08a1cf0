"""From sampled metrics to the best thread block configuration."""
from .models import (MetricModelSet, fit_all_metrics, estimate_cycles, save_models, load_models,
                     parse_models)
from .codegen import generate_rp, TEMPLATES, MWPCWP_TEMPLATE, OCCUPANCY_TEMPLATE
from .cemit import emit_c_source, ENTRY_POINT
from .search import (SearchResult, RankedConfig, search_optimal, dump_search_jsonl, rp_bindings,
                     DEFAULT_TIE_TOLERANCE)
from .reports import Report, error_metric, sanity_report, proof_of_concept_report
