"""Brute-force ground truth for small universes."""

from engine.oracle.classes import equivalence_classes
from engine.oracle.enumerate import DagSpace, enumerate_dags, labeled_dag_count
from engine.oracle.extensions import all_topological_orders, enumerate_extensions
from engine.oracle.isomorphism import is_dag_isomorphic_bruteforce

__all__ = [
    "DagSpace",
    "all_topological_orders",
    "enumerate_dags",
    "enumerate_extensions",
    "equivalence_classes",
    "is_dag_isomorphic_bruteforce",
    "labeled_dag_count",
]
