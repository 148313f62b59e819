"""Embedded Mori-Mukai tables of Fano conic bundles with a rational section."""

import json
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import pandas as pd
import structlog
from pydantic import TypeAdapter, ValidationError

from deltabound.certificates.checks import product_delta
from deltabound.certificates.delpezzo import delpezzo_delta
from deltabound.certificates.io import Certificate, load_certificates
from deltabound.config.settings import DEFAULT_DATA_DIR
from deltabound.core.errors import DomainError, ParseError
from deltabound.models.fano import FanoEntry
from deltabound.models.values import TableValue, ValueKind, delta_bounds

logger = structlog.get_logger(__name__)

TABLES_FILE = "fano_tables.json"
CERTIFICATES_FILE = "certificates.jsonl"

_ENTRIES = TypeAdapter(List[FanoEntry])


def _product_entry(rank: int) -> FanoEntry:
    """ρ ≥ 6: X ≅ ℙ¹ × S_{11-ρ} and δ(X, -K_X) = δ(S, -K_S)."""
    degree = 11 - rank
    lower, upper = delta_bounds(product_delta(delpezzo_delta(degree).delta))
    if lower == upper:
        six_delta = TableValue(kind=ValueKind.EXACT, value=6 * lower)
    else:
        six_delta = TableValue(kind=ValueKind.INTERVAL, value=6 * upper, lower=6 * lower)
    return FanoEntry(
        picard_rank=rank,
        mm_number=1,
        description=f"$\\mathbb P^1\\times S_{{{degree}}}$",
        six_delta=six_delta,
    )


def parse_tables(text: str) -> List[FanoEntry]:
    try:
        return _ENTRIES.validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        raise ParseError(
            f"{'.'.join(str(p) for p in first['loc'])}: {first['msg']}"
        ) from e


class FanoDatabase:
    """Read-only view of the tables, stored ranks 2-5 plus generated ranks 6-10."""

    def __init__(self, data_dir: Optional[Path] = None):
        self.data_dir = Path(data_dir) if data_dir is not None else DEFAULT_DATA_DIR
        stored = parse_tables((self.data_dir / TABLES_FILE).read_text(encoding="utf-8"))
        generated = [_product_entry(rank) for rank in range(6, 11)]
        self._entries: Dict[Tuple[int, int], FanoEntry] = {}
        for entry in stored + generated:
            key = (entry.picard_rank, entry.mm_number)
            if key in self._entries:
                raise ParseError(f"duplicate Fano entry {entry.key}")
            self._entries[key] = entry
        self._certificates: Optional[Dict[str, Certificate]] = None
        logger.debug("fano.loaded", stored=len(stored), generated=len(generated))

    def __len__(self) -> int:
        return len(self._entries)

    def entries(self, rank: Optional[int] = None) -> List[FanoEntry]:
        return [
            self._entries[k]
            for k in sorted(self._entries)
            if rank is None or k[0] == rank
        ]

    def lookup(self, rank: int, number: int) -> FanoEntry:
        """The stored entry for (Picard rank, Mori-Mukai number)."""
        try:
            return self._entries[(rank, number)]
        except KeyError:
            raise DomainError(f"no Fano entry with rank {rank} and number {number}") from None

    @property
    def certificates(self) -> Dict[str, Certificate]:
        if self._certificates is None:
            self._certificates = load_certificates(self.data_dir / CERTIFICATES_FILE)
        return self._certificates

    def certificates_for(self, entry: FanoEntry) -> Dict[str, Optional[Certificate]]:
        return {cid: self.certificates.get(cid) for cid in entry.certificates}

    def to_frame(self, rank: Optional[int] = None) -> pd.DataFrame:
        return pd.DataFrame([e.to_row() for e in self.entries(rank)])

    def export_csv(self, rank: Optional[int] = None) -> str:
        return self.to_frame(rank).to_csv(index=False, lineterminator="\n")

    def export_json(self, rank: Optional[int] = None) -> str:
        """Canonical JSON: parsing it back yields the same entries and the same text."""
        payload = [e.model_dump(mode="json") for e in self.entries(rank)]
        return json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True) + "\n"

    def count_exact(self, six_delta: Fraction) -> int:
        return sum(
            1 for e in self._entries.values() if e.six_delta.is_exact and e.six_delta.value == six_delta
        )


@lru_cache(maxsize=4)
def default_database(data_dir: Optional[Path] = None) -> FanoDatabase:
    return FanoDatabase(data_dir)


def lookup(rank: int, number: int) -> FanoEntry:
    return default_database().lookup(rank, number)
