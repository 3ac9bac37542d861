"""d-separation engine, path-enumeration oracle and full-model extraction."""

from engine.dsep.model import full_model
from engine.dsep.naive import d_separated_naive
from engine.dsep.query import DsepQuery
from engine.dsep.reachability import d_separated

__all__ = ["DsepQuery", "d_separated", "d_separated_naive", "full_model"]
