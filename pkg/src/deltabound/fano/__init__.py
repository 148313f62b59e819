"""Mori-Mukai table entries, counting-bound statements and verification."""

from deltabound.fano.bounds import (
    best_bound,
    bound_anticanonical,
    bound_twisted,
    bound_twisted_delta,
    verify_entry,
)
from deltabound.fano.database import FanoDatabase, default_database, lookup

__all__ = [
    "FanoDatabase",
    "best_bound",
    "bound_anticanonical",
    "bound_twisted",
    "bound_twisted_delta",
    "default_database",
    "lookup",
    "verify_entry",
]
