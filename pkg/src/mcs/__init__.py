"""Minimal common supersequences: reduction, verification and enumeration."""
from .core import (EmbeddingMap, ExtInterval, NotSubsequenceError, is_subsequence,
                   left_embedding, longest_common_prefix, right_embedding)
from .enumgraph import EnumGraph, Vertex, build_st_subgraph, edges_from, export_dot
from .enumpaths import count_mcs, delay_probe, enumerate_mcs
from .minimality import essential_indices, is_essential_for_pair, verify_minimal
from .reduce2 import NotCommonSupersequenceError, mcs_two, reduce_two
from .reducek import OccString, mcs_k, reduce_k

__version__ = "0.1.0"
