"""Data models for DeltaBound."""

from deltabound.models.fano import BoundSource, BoundStatement, FanoEntry, FanoFlag
from deltabound.models.report import (
    AssumptionRecord,
    CheckRecord,
    ReportStatus,
    VerificationReport,
)
from deltabound.models.values import (
    DeltaInterval,
    DeltaValue,
    ExactModel,
    Rational,
    TableValue,
    ValueKind,
    format_rational,
    parse_rational,
)
from deltabound.models.variety import CountRow, CountTable, PointRecord, VarietyModel

__all__ = [
    "AssumptionRecord",
    "BoundSource",
    "BoundStatement",
    "CheckRecord",
    "CountRow",
    "CountTable",
    "DeltaInterval",
    "DeltaValue",
    "ExactModel",
    "FanoEntry",
    "FanoFlag",
    "PointRecord",
    "Rational",
    "ReportStatus",
    "TableValue",
    "ValueKind",
    "VarietyModel",
    "VerificationReport",
    "format_rational",
    "parse_rational",
]
