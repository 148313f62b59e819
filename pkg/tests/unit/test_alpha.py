"""Tests for the parametric α solver."""

from dataclasses import replace
from fractions import Fraction

import pytest

from deltabound.certificates.alpha import (
    Affine,
    AffineConstraint,
    RewritePiece,
    alpha_feasible,
    check_template_identity,
    describe_template,
    solve_alpha,
)
from deltabound.certificates.io import load_certificates
from deltabound.config.settings import DEFAULT_DATA_DIR
from deltabound.core.errors import CertificateError, DomainError


@pytest.fixture(scope="module")
def templates():
    certs = load_certificates(DEFAULT_DATA_DIR / "certificates.jsonl")
    return {cid: cert for cid, cert in certs.items() if cid.endswith("-alpha")}


class TestSolveAlpha:
    """Test the bundled conic-bundle templates."""

    @pytest.mark.parametrize(
        "entry, two_alpha",
        [
            ("2-31", Fraction(5, 3)),
            ("2-32", Fraction(5, 2)),
            ("3-23", Fraction(5, 3)),
            ("3-12", Fraction(8, 3)),
            ("4-6", Fraction(2)),
        ],
    )
    def test_bundled_templates(self, templates, entry, two_alpha):
        """2α matches the tables."""
        solution = solve_alpha(templates[f"fano-{entry}-alpha"])

        assert solution.two_alpha == two_alpha
        assert solution.alpha_min == two_alpha / 2

    def test_minimum_is_tight(self, templates):
        """α = 5/6 is feasible for no 31 and nothing smaller is."""
        t = templates["fano-2-31-alpha"]

        assert alpha_feasible(t, Fraction(5, 6))
        assert not alpha_feasible(t, Fraction(5, 6) - Fraction(1, 1000))
        assert not alpha_feasible(t, Fraction(2))

    def test_describe(self, templates):
        """Descriptions list the constraints."""
        lines = describe_template(templates["fano-3-12-alpha"])

        assert lines[0].startswith("-K = ")
        assert any("constraint" in line for line in lines)


class TestTemplateFailures:
    """Test rejected templates."""

    def test_identity_residual(self, templates):
        """A wrong rewrite coefficient breaks the identity."""
        t = templates["fano-2-31-alpha"]
        broken = replace(
            t,
            rewrite_pieces=(
                RewritePiece(t.rewrite_pieces[0].piece, Affine(3, 0)),
            )
            + t.rewrite_pieces[1:],
        )
        with pytest.raises(CertificateError) as excinfo:
            check_template_identity(broken)
        assert excinfo.value.residual is not None
        with pytest.raises(CertificateError):
            solve_alpha(broken)

    def test_impossible_constant_constraint(self, templates):
        """0·α + 0 ≥ 1 never holds."""
        t = replace(
            templates["fano-2-31-alpha"],
            constraints=(AffineConstraint(Affine(0, 0), 1, "never"),),
        )
        with pytest.raises(DomainError):
            solve_alpha(t)

    def test_no_lower_bound(self, templates):
        """Only upper constraints leave the minimum unattained."""
        t = replace(
            templates["fano-2-31-alpha"],
            constraints=(AffineConstraint(Affine(-1, 2), 0),),
        )
        with pytest.raises(DomainError):
            solve_alpha(t)

    def test_crossing_constraints(self, templates):
        """α ≥ 2 and α ≤ 1 are infeasible."""
        t = replace(
            templates["fano-2-31-alpha"],
            constraints=(AffineConstraint(Affine(1, 0), 2), AffineConstraint(Affine(-1, 1), 0)),
        )
        with pytest.raises(DomainError):
            solve_alpha(t)

    def test_beta_must_be_positive(self, templates):
        """α = 1/2 leaves β = 0."""
        t = replace(
            templates["fano-2-31-alpha"],
            constraints=(AffineConstraint(Affine(2, 0), 1),),
        )
        with pytest.raises(DomainError):
            solve_alpha(t)
