"""Main computation orchestrator behind the command-line interface."""

from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Union

import pandas as pd
import structlog

from deltabound.certificates.delpezzo import delpezzo_delta
from deltabound.config.settings import EnumerationConfig, Settings
from deltabound.core.errors import DomainError
from deltabound.fano.bounds import bound_anticanonical, verify_entry
from deltabound.fano.database import FanoDatabase
from deltabound.heights.counting import counting_series, geometric_steps
from deltabound.heights.fit import FitResult, fit_exponent
from deltabound.heights.model import load_variety
from deltabound.heights.repulsion import repulsion_series
from deltabound.lattice.cones import fujita_a
from deltabound.lattice.core import format_class, parse_lattice_spec
from deltabound.models.payloads import (
    AInvariantPayload,
    CountPayload,
    DelPezzoPayload,
    EnriquesBoundPayload,
    FanoLookupPayload,
    K3BoundPayload,
    RepulsionPayload,
    RepulsionRow,
)
from deltabound.models.report import VerificationReport
from deltabound.models.values import delta_bounds, format_rational, parse_rational
from deltabound.models.variety import CountTable
from deltabound.pell.k3 import enriques_bound, enriques_exponent, k3_s_invariant

logger = structlog.get_logger(__name__)


def parse_coordinates(text: str) -> List[Fraction]:
    """"1,0,-1/2" -> [1, 0, -1/2]."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise DomainError(f"bad coordinate list {text!r}; use comma-separated rationals")
    return [parse_rational(p) for p in parts]


class DeltaBoundPipeline:
    """Runs each computation with the configured caps and returns its payload."""

    def __init__(self, settings: Optional[Settings] = None):
        """Initialize the pipeline with settings."""
        self.settings = settings or Settings()
        self._fano: Optional[FanoDatabase] = None

    @property
    def fano(self) -> FanoDatabase:
        if self._fano is None:
            self._fano = FanoDatabase(self.settings.data_dir)
        return self._fano

    def enumeration_config(self, threads: Optional[int] = None) -> EnumerationConfig:
        return self.settings.enumeration_config(threads=threads)

    # invariants

    def k3_bound(self, d: int) -> K3BoundPayload:
        result = k3_s_invariant(d, fallback_bound=self.settings.pell_fallback_bound)
        witness = None if result.witness is None else [result.witness.x, result.witness.y]
        exponent = result.value.scale(4)
        return K3BoundPayload(
            d=d,
            branch=result.branch.value,
            s=str(result.value),
            exponent=str(exponent),
            bound_ok=result.bound_ok,
            sub_bound_ok=result.sub_bound_ok,
            witness=witness,
            delta_upper=str(result.delta_upper),
        )

    def enriques_bound(self, k: int) -> EnriquesBoundPayload:
        s = enriques_bound(k)
        return EnriquesBoundPayload(k=k, s_bound=s, exponent=enriques_exponent(k), delta_upper=s)

    def delpezzo(self, degree: int, certify: bool = False) -> DelPezzoPayload:
        result = delpezzo_delta(degree)
        lower, upper = delta_bounds(result.delta)
        return DelPezzoPayload(
            degree=degree,
            delta=format_rational(result.delta)
            if isinstance(result.delta, Fraction)
            else str(result.delta),
            lower=format_rational(lower),
            upper=format_rational(upper),
            exact=lower == upper,
            reports=[result.lower, result.upper] if certify else [],
        )

    def a_invariant(self, lattice_spec: str, divisor: str) -> AInvariantPayload:
        lat = parse_lattice_spec(lattice_spec)
        L = lat.divisor(*parse_coordinates(divisor))
        value = fujita_a(lat, L)
        return AInvariantPayload(
            lattice=lat.name,
            divisor=format_class(lat, L),
            a=format_rational(value) if isinstance(value, Fraction) else str(value),
        )

    # Fano tables

    def fano_lookup(self, rank: int, number: int) -> FanoLookupPayload:
        entry = self.fano.lookup(rank, number)
        return FanoLookupPayload(entry=entry, bounds=bound_anticanonical(entry))

    def fano_verify(self, rank: int, number: int) -> VerificationReport:
        entry = self.fano.lookup(rank, number)
        return verify_entry(entry, self.fano.certificates_for(entry))

    # heights

    def count(
        self,
        model_path: Union[str, Path],
        tmax: int,
        steps: Optional[int] = None,
        threads: Optional[int] = None,
    ) -> CountPayload:
        if tmax < 1:
            raise DomainError(f"tmax must be >= 1, got {tmax}")
        model = load_variety(Path(model_path))
        T_list = geometric_steps(tmax, steps) if steps else list(range(1, int(tmax) + 1))
        table = counting_series(model, T_list, self.enumeration_config(threads))
        return CountPayload(model=model.label, height_power=model.height_power, rows=table.rows)

    def fit(self, series: Union[str, Path, pd.DataFrame]) -> FitResult:
        frame = series if isinstance(series, pd.DataFrame) else pd.read_csv(series)
        return fit_exponent(CountTable.from_frame(frame))

    def repulsion(
        self,
        model_path: Union[str, Path],
        delta: Union[str, Fraction],
        eps: Union[str, Fraction],
        tmax: int,
        steps: Optional[int] = None,
        threads: Optional[int] = None,
    ) -> RepulsionPayload:
        model = load_variety(Path(model_path))
        delta, eps = parse_rational(delta), parse_rational(eps)
        T_list: Sequence[int] = geometric_steps(tmax, steps) if steps else [int(tmax)]
        results = repulsion_series(
            model,
            delta,
            eps,
            T_list,
            config=self.enumeration_config(threads),
            rel_tol=self.settings.repulsion_rel_tol,
        )
        return RepulsionPayload(
            model=model.label,
            delta=delta,
            eps=eps,
            power=results[0].power if results else 1,
            rows=[
                RepulsionRow(
                    T=r.T,
                    min_product_num=r.min_product.numerator,
                    min_product_den=r.min_product.denominator,
                    p_coords=list(r.p_coords),
                    q_coords=list(r.q_coords),
                )
                for r in results
            ],
        )

