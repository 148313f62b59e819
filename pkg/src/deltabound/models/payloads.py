"""JSON payloads printed by the command-line interface."""

from typing import Dict, List, Optional, Type

from pydantic import BaseModel, Field

from deltabound.models.fano import BoundStatement, FanoEntry
from deltabound.models.report import VerificationReport
from deltabound.models.values import ExactModel, Rational
from deltabound.models.variety import CountRow


class K3BoundPayload(BaseModel):
    """s-invariant and counting exponent of a rank-one K3 surface with H² = 2d."""

    d: int
    branch: str
    s: str = Field(description="Exact s(S, H), 'p/q' or 'c/sqrt(n)'")
    exponent: str = Field(description="4·s(S, H)")
    bound_ok: bool = Field(description="s² ≤ 4/d + 5/d²")
    sub_bound_ok: Optional[bool] = Field(default=None, description="s² ≤ 1/d + 1/d², unit branch only")
    witness: Optional[List[int]] = Field(default=None, description="(x, y) of the Pell solution used")
    delta_upper: str = Field(description="δ(S, H) ≤ s(S, H)")


class EnriquesBoundPayload(ExactModel):
    k: int
    s_bound: Rational
    exponent: Rational
    delta_upper: Rational


class DelPezzoPayload(BaseModel):
    degree: int
    delta: str = Field(description="Exact value or interval '[p, q]'")
    lower: str
    upper: str
    exact: bool
    reports: List[VerificationReport] = Field(default_factory=list)


class AInvariantPayload(BaseModel):
    lattice: str
    divisor: str
    a: str = Field(description="'p/q', or '+inf' when the class is not big")


class FanoLookupPayload(BaseModel):
    entry: FanoEntry
    bounds: List[BoundStatement]


class CountPayload(BaseModel):
    model: str
    height_power: int
    rows: List[CountRow]


class FitPayload(BaseModel):
    """Floating-point diagnostic; not an exact result."""

    slope: float
    r_squared: float
    rows_used: int
    diagnostic: bool = True


class RepulsionRow(BaseModel):
    T: int
    min_product_num: int
    min_product_den: int
    p_coords: List[int]
    q_coords: List[int]


class RepulsionPayload(ExactModel):
    model: str
    delta: Rational
    eps: Rational
    power: int = Field(description="Reported values are this power of the squared product")
    rows: List[RepulsionRow]


PAYLOADS: Dict[str, Type[BaseModel]] = {
    "k3-bound": K3BoundPayload,
    "enriques-bound": EnriquesBoundPayload,
    "delpezzo": DelPezzoPayload,
    "a-invariant": AInvariantPayload,
    "fano-lookup": FanoLookupPayload,
    "fano-verify": VerificationReport,
    "fano-entry": FanoEntry,
    "count": CountPayload,
    "fit": FitPayload,
    "repulsion": RepulsionPayload,
}
