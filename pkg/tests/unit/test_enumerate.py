"""Tests for bounded-height enumeration and counting."""

import itertools
from math import gcd

import numpy as np
import pytest

from deltabound.config.settings import EnumerationConfig
from deltabound.core.errors import DomainError, ResourceLimitError
from deltabound.heights.counting import (
    collect_points,
    counting_series,
    enumerate_points,
    geometric_steps,
    shell_bound,
)
from deltabound.heights.enumerate import ShellEnumerator, SieveEnumerator, select_enumerator
from deltabound.heights.model import bundled_model, compile_variety, parse_variety


def brute_force(model, bound):
    """Primitive sign-normalized points with max|x_i| ≤ bound, by exhaustion."""
    compiled = compile_variety(model)
    found = []
    for coords in itertools.product(range(-bound, bound + 1), repeat=model.nvars):
        nonzero = [x for x in coords if x]
        if not nonzero or nonzero[0] < 0:
            continue
        g = 0
        for x in coords:
            g = gcd(g, x)
        if g != 1:
            continue
        if all(eq(coords) == 0 for eq in compiled.equations):
            found.append(coords)
    return sorted(found)


class TestProjectiveSpace:
    """Test counts on ℙ¹ and ℙ²."""

    def test_p1_height_one(self, p1):
        """(0:1), (1:-1), (1:0), (1:1)."""
        points = collect_points(p1, 1)

        assert points.points.tolist() == [[0, 1], [1, -1], [1, 0], [1, 1]]

    def test_p1_series(self, p1):
        """N(ℙ¹, 1) = 4 and N(ℙ¹, 2) = 8."""
        assert counting_series(p1, [1, 2]).pairs() == [(1, 4), (2, 8)]

    def test_p2_height_one(self, p2):
        """(3³ - 1)/2 points."""
        assert len(collect_points(p2, 1)) == 13

    def test_stream_matches_collection(self, p2):
        """The generator yields the collected rows in the same order."""
        streamed = [r.coords for r in enumerate_points(p2, 3)]
        collected = [tuple(r) for r in collect_points(p2, 3).points.tolist()]

        assert streamed == collected
        assert streamed == sorted(streamed)

    def test_height_power(self):
        """With O(2) the height is max|x_i|²."""
        model = parse_variety('{"ambient_dim": 1, "height_power": 2}')

        assert shell_bound(model, 3) == 1
        assert counting_series(model, [3, 4]).pairs() == [(3, 4), (4, 8)]


class TestVarieties:
    """Test enumerators against exhaustion."""

    @pytest.mark.parametrize("bound", [1, 3])
    def test_quadric(self, quadric, bound):
        """The quadric x0·x3 = x1·x2 matches brute force."""
        points = collect_points(quadric, bound).points

        assert [tuple(p) for p in points.tolist()] == brute_force(quadric, bound)

    def test_conic(self):
        """Pythagorean points of x0² + x1² = x2² up to 13."""
        conic = bundled_model("conic")
        points = collect_points(conic, 13).points

        assert [tuple(p) for p in points.tolist()] == brute_force(conic, 13)
        assert [3, 4, 5] in points.tolist()

    @pytest.mark.parametrize("name", ["conic", "quadric"])
    def test_sieve_equals_shell(self, name):
        """Both strategies return identical arrays."""
        model = bundled_model(name)

        sieve = collect_points(model, 8, strategy="sieve").points
        shell = collect_points(model, 8, strategy="shell").points

        assert np.array_equal(sieve, shell)

    def test_exclusions(self):
        """Points where every exclusion vanishes are removed."""
        model = parse_variety('{"ambient_dim": 1, "exclusions": ["x0"]}')

        assert [tuple(p) for p in collect_points(model, 1).points.tolist()] == [(1, -1), (1, 0), (1, 1)]

    def test_empty_model(self):
        """x0 = 0 on ℙ⁰ has no points."""
        model = parse_variety('{"ambient_dim": 0, "equations": ["x0"]}')

        assert counting_series(model, [1, 5, 10]).pairs() == [(1, 0), (5, 0), (10, 0)]

    def test_point(self):
        """ℙ⁰ itself is one point."""
        model = parse_variety('{"ambient_dim": 0}')

        assert counting_series(model, [1, 7]).pairs() == [(1, 1), (7, 1)]


class TestSelection:
    """Test enumerator selection."""

    def test_auto(self, p2, quadric):
        """The sieve is picked when an equation is solvable in the last coordinate."""
        assert isinstance(select_enumerator(compile_variety(p2)), ShellEnumerator)
        assert isinstance(select_enumerator(compile_variety(quadric)), SieveEnumerator)

    def test_unknown_strategy(self, p1):
        """Only shell and sieve exist."""
        with pytest.raises(DomainError):
            select_enumerator(compile_variety(p1), strategy="lattice")

    def test_sieve_needs_equation(self, p1):
        """ℙ¹ has nothing to solve."""
        with pytest.raises(DomainError):
            SieveEnumerator(compile_variety(p1))


class TestLimits:
    """Test resource caps and argument checks."""

    def test_candidate_cap(self, p2):
        """A grid above max_candidates is refused up front."""
        with pytest.raises(ResourceLimitError):
            collect_points(p2, 5, EnumerationConfig(max_candidates=10))

    def test_point_cap(self, p1):
        """Emitting more than max_points is an error, never a truncation."""
        config = EnumerationConfig(max_points=3)
        with pytest.raises(ResourceLimitError):
            collect_points(p1, 2, config)
        with pytest.raises(ResourceLimitError):
            list(enumerate_points(p1, 2, config))

    def test_exit_code(self):
        """Resource limits map to exit code 3."""
        assert ResourceLimitError.exit_code == 3

    @pytest.mark.parametrize("T", [0, -1, True])
    def test_bad_height(self, p1, T):
        """T is a positive integer."""
        with pytest.raises(DomainError):
            collect_points(p1, T)

    def test_series_order(self, p1):
        """T values must be strictly ascending."""
        with pytest.raises(DomainError):
            counting_series(p1, [2, 2])
        assert counting_series(p1, []).rows == []

    def test_geometric_steps(self):
        """Geometric grid including both ends."""
        assert geometric_steps(1000, 4) == [1, 10, 100, 1000]
        assert geometric_steps(5, 1) == [5]
        assert geometric_steps(3, 10) == [1, 2, 3]
        with pytest.raises(DomainError):
            geometric_steps(10, 0)
