"""Tag-based personalized recommendation over a folksonomy."""

from .evaluation import EvaluationReport, EvaluationSample, compute_report, load_acceptances
from .ingest import load_corpus, normalize_tag
from .metrics import affinity, document_score, popularity, preference_set, representativeness
from .model import Folksonomy, TagAssignment, build_folksonomy
from .ranking import RankingConfig, Scorer, combined_similarity, cosine, recommend, tag_vector

__all__ = [
    "EvaluationReport", "EvaluationSample", "Folksonomy", "RankingConfig", "Scorer",
    "TagAssignment", "affinity", "build_folksonomy", "combined_similarity", "compute_report",
    "cosine", "document_score", "load_acceptances", "load_corpus", "normalize_tag",
    "popularity", "preference_set", "recommend", "representativeness", "tag_vector",
]
