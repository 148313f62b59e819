"""Certificate files: one JSON object per line, rationals as "p/q" strings."""

import json
from pathlib import Path
from typing import Annotated, Dict, Iterable, List, Literal, Optional, Union

from pydantic import Field, TypeAdapter, ValidationError

from deltabound.certificates.alpha import Affine, AffineConstraint, AlphaTemplate, RewritePiece
from deltabound.certificates.checks import (
    AssumptionTag,
    DecompositionPiece,
    LowerCert,
    UpperCert,
)
from deltabound.certificates.wclasses import WCurve, WDivisor
from deltabound.core.errors import DomainError, ParseError
from deltabound.lattice.core import (
    CurveClass,
    DivisorClass,
    IntersectionLattice,
    make_del_pezzo_lattice,
    make_lattice,
)
from deltabound.models.values import ExactModel, Rational

Certificate = Union[LowerCert, UpperCert, AlphaTemplate]


class LatticeRecord(ExactModel):
    """Either a del Pezzo lattice by blow-up count or an explicit lattice."""

    del_pezzo: Optional[int] = None
    labels: List[str] = Field(default_factory=list)
    gram: List[List[int]] = Field(default_factory=list)
    canonical: List[Rational] = Field(default_factory=list)
    dimension: int = 2
    name: str = ""

    def to_domain(self) -> IntersectionLattice:
        if self.del_pezzo is not None:
            return make_del_pezzo_lattice(self.del_pezzo)
        return make_lattice(self.labels, self.gram, self.canonical, self.dimension, self.name)

    @classmethod
    def from_domain(cls, lat: IntersectionLattice) -> "LatticeRecord":
        if lat.del_pezzo_blowups is not None:
            return cls(del_pezzo=lat.del_pezzo_blowups)
        return cls(
            labels=list(lat.basis_labels),
            gram=[list(row) for row in lat.gram],
            canonical=list(lat.canonical_class.coords),
            dimension=lat.dimension,
            name=lat.name,
        )


class WDivisorRecord(ExactModel):
    d1: List[Rational]
    d2: List[Rational]
    e: Rational

    def to_domain(self) -> WDivisor:
        return WDivisor(DivisorClass(tuple(self.d1)), DivisorClass(tuple(self.d2)), self.e)

    @classmethod
    def from_domain(cls, w: WDivisor) -> "WDivisorRecord":
        return cls(d1=list(w.d1.coords), d2=list(w.d2.coords), e=w.e)


class WCurveRecord(ExactModel):
    c1: List[Rational]
    c2: List[Rational]
    m: Rational

    def to_domain(self) -> WCurve:
        return WCurve(CurveClass(tuple(self.c1)), CurveClass(tuple(self.c2)), self.m)


class PieceRecord(ExactModel):
    coefficient: Rational
    piece: WDivisorRecord
    assumption_tag: AssumptionTag
    citation: str


class AffineRecord(ExactModel):
    p: Rational
    q: Rational


class RewriteRecord(ExactModel):
    piece: List[Rational]
    coeff: AffineRecord


class ConstraintRecord(ExactModel):
    coeff: AffineRecord
    bound: Rational
    label: str = ""


class LowerCertRecord(ExactModel):
    kind: Literal["lower"] = "lower"
    id: str
    lattice: LatticeRecord
    H: List[Rational]
    curve: WCurveRecord
    dominance_note: str

    def to_domain(self) -> LowerCert:
        return LowerCert(
            lattice=self.lattice.to_domain(),
            H=DivisorClass(tuple(self.H)),
            curve=self.curve.to_domain(),
            dominance_note=self.dominance_note,
            id=self.id,
        )


class UpperCertRecord(ExactModel):
    kind: Literal["upper"] = "upper"
    id: str
    lattice: LatticeRecord
    target: WDivisorRecord
    polarization: List[Rational]
    decompositions: List[List[PieceRecord]]
    notes: List[str] = Field(default_factory=list)

    def to_domain(self) -> UpperCert:
        return UpperCert(
            lattice=self.lattice.to_domain(),
            target=self.target.to_domain(),
            polarization=DivisorClass(tuple(self.polarization)),
            decompositions=tuple(
                tuple(
                    DecompositionPiece(
                        coefficient=p.coefficient,
                        piece=p.piece.to_domain(),
                        assumption_tag=p.assumption_tag,
                        citation=p.citation,
                    )
                    for p in decomposition
                )
                for decomposition in self.decompositions
            ),
            id=self.id,
            notes=tuple(self.notes),
        )


class AlphaTemplateRecord(ExactModel):
    kind: Literal["alpha"] = "alpha"
    id: str
    lattice: LatticeRecord
    base_pullback: List[Rational]
    anticanonical: List[Rational]
    rewrite_pieces: List[RewriteRecord]
    constraints: List[ConstraintRecord]

    def to_domain(self) -> AlphaTemplate:
        return AlphaTemplate(
            lattice=self.lattice.to_domain(),
            base_pullback=DivisorClass(tuple(self.base_pullback)),
            anticanonical=DivisorClass(tuple(self.anticanonical)),
            rewrite_pieces=tuple(
                RewritePiece(DivisorClass(tuple(r.piece)), Affine(r.coeff.p, r.coeff.q))
                for r in self.rewrite_pieces
            ),
            constraints=tuple(
                AffineConstraint(Affine(c.coeff.p, c.coeff.q), c.bound, c.label)
                for c in self.constraints
            ),
            id=self.id,
        )


CertificateRecord = Annotated[
    Union[LowerCertRecord, UpperCertRecord, AlphaTemplateRecord], Field(discriminator="kind")
]
_RECORD = TypeAdapter(CertificateRecord)


def _to_record(
    cert: Certificate,
) -> Union[LowerCertRecord, UpperCertRecord, AlphaTemplateRecord]:
    lattice = LatticeRecord.from_domain(cert.lattice)
    if isinstance(cert, LowerCert):
        return LowerCertRecord(
            id=cert.id,
            lattice=lattice,
            H=list(cert.H.coords),
            curve=WCurveRecord(
                c1=list(cert.curve.c1.coords), c2=list(cert.curve.c2.coords), m=cert.curve.m
            ),
            dominance_note=cert.dominance_note,
        )
    if isinstance(cert, UpperCert):
        return UpperCertRecord(
            id=cert.id,
            lattice=lattice,
            target=WDivisorRecord.from_domain(cert.target),
            polarization=list(cert.polarization.coords),
            decompositions=[
                [
                    PieceRecord(
                        coefficient=p.coefficient,
                        piece=WDivisorRecord.from_domain(p.piece),
                        assumption_tag=p.assumption_tag,
                        citation=p.citation,
                    )
                    for p in decomposition
                ]
                for decomposition in cert.decompositions
            ],
            notes=list(cert.notes),
        )
    if isinstance(cert, AlphaTemplate):
        return AlphaTemplateRecord(
            id=cert.id,
            lattice=lattice,
            base_pullback=list(cert.base_pullback.coords),
            anticanonical=list(cert.anticanonical.coords),
            rewrite_pieces=[
                RewriteRecord(piece=list(r.piece.coords), coeff=AffineRecord(p=r.coeff.p, q=r.coeff.q))
                for r in cert.rewrite_pieces
            ],
            constraints=[
                ConstraintRecord(
                    coeff=AffineRecord(p=c.coeff.p, q=c.coeff.q), bound=c.bound, label=c.label
                )
                for c in cert.constraints
            ],
        )
    raise DomainError(f"not a certificate: {type(cert).__name__}")


def parse_certificate(line: str, line_number: int = 1) -> Certificate:
    """Parse one JSON certificate object."""
    try:
        data = json.loads(line)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=line_number, column=e.colno) from e
    try:
        record = _RECORD.validate_python(data)
    except ValidationError as e:
        raise ParseError(str(e.errors()[0]["msg"]), line=line_number) from e
    return record.to_domain()


def load_certificates(path: Path) -> Dict[str, Certificate]:
    """Certificates of a JSONL file, keyed by id."""
    certificates: Dict[str, Certificate] = {}
    with open(path, encoding="utf-8") as fh:
        for number, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            cert = parse_certificate(line, number)
            if cert.id in certificates:
                raise ParseError(f"duplicate certificate id {cert.id!r}", line=number)
            certificates[cert.id] = cert
    return certificates


def dump_certificate(cert: Certificate) -> str:
    """Canonical single-line JSON."""
    return json.dumps(_to_record(cert).model_dump(mode="json"), ensure_ascii=False, sort_keys=True)


def dump_certificates(certs: Iterable[Certificate], path: Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for cert in certs:
            fh.write(dump_certificate(cert) + "\n")
