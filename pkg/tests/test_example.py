"""Tests for the genus-two example."""

import pytest

from goeritz_ob.core.example import (
    C1,
    C2,
    C3,
    C4,
    build_example_diagram,
    formula_word,
    openbook_readings,
    readings_match_formula,
    rigidity_search,
    twist_loop_words,
    twisted_binding_word,
)
from goeritz_ob.core.words import is_gof_word
from goeritz_ob.errors import PlanarDiagramError


class TestTwistLoops:
    """Tests for the readings of the twist curves."""

    def test_reading_lengths(self):
        """Test that each reading is eight letters per unit of n."""
        for n in (1, -1, 2):
            p, q = twist_loop_words(n)
            assert len(p) == len(q) == 8 * abs(n)

    def test_zero_exponent(self):
        """Test that the example needs a nonzero monodromy."""
        with pytest.raises(PlanarDiagramError):
            build_example_diagram(0)
        with pytest.raises(PlanarDiagramError):
            twist_loop_words(0)

    @pytest.mark.parametrize("n", [1, -1, 2])
    def test_correspondence(self, n):
        """Test that the open-book readings are P_n and Q_n letter for letter."""
        assert readings_match_formula(n)

    def test_openbook_readings(self):
        """Test the readings of the example with a single boundary twist."""
        assert openbook_readings(1) == (C1 + C2, C3 + C4)

    def test_diagram_uses_openbook_readings(self):
        """Test that the example diagram carries the open-book readings."""
        assert build_example_diagram(-1).cuts.readings == openbook_readings(-1)

    def test_zero_exponent_readings(self):
        """Test that the open-book readings need a nonzero monodromy."""
        with pytest.raises(PlanarDiagramError):
            openbook_readings(0)


class TestTwistFormula:
    """Tests for the twisted binding formula."""

    @pytest.mark.parametrize("n", [1, -1, 2])
    @pytest.mark.parametrize("u", [-1, 0, 1, 2])
    @pytest.mark.parametrize("v", [-2, 0, 1])
    def test_engine_matches_formula(self, u, v, n):
        """Test that the planar engine agrees with the closed formula."""
        assert twisted_binding_word(u, v, n) == formula_word(u, v, n)

    def test_untwisted_binding(self):
        """Test that the binding itself reads [[x1, x2]]."""
        word = twisted_binding_word(0, 0, 1)

        assert len(word) == 4
        assert is_gof_word(word)


class TestRigidity:
    """Tests for the rigidity search."""

    def test_small_budget(self):
        """Test that a budget of four admits only the binding."""
        cert = rigidity_search(1, budget=4)

        assert cert.box == 1
        assert cert.explored == 1
        assert cert.doubly_gof == ((0, 0),)
        assert cert.only_binding

    @pytest.mark.parametrize("n", [1, -1])
    def test_default_budget(self, n):
        """Test that the binding is the only doubly-GOF curve found."""
        cert = rigidity_search(n)

        assert cert.explored >= 1
        assert cert.only_binding

    def test_zero_exponent(self):
        """Test that n = 0 is rejected."""
        with pytest.raises(PlanarDiagramError):
            rigidity_search(0)
