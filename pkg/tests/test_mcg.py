"""Tests for mapping classes, twists, involutions and the boundary-twist kernel."""

import logging

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix

from goeritz_ob.core import mcg
from goeritz_ob.core.mcg import (
    KernelStatus,
    SurfaceSig,
    boundary_twist_product,
    catalog_names,
    compose,
    conjugate_by_involution,
    custom_mapping_class,
    equality,
    homology_action,
    identity,
    intersection_form,
    inverse,
    involution,
    is_boundary_twist_product,
    parse_images,
    parse_involution,
    parse_twist_word,
    power,
    twist,
)
from goeritz_ob.core.words import Word
from goeritz_ob.errors import (
    CatalogError,
    InvalidMappingClassError,
    OrientationError,
    SurfaceMismatchError,
    WordParseError,
)

TORUS = SurfaceSig(1, 1)

twist_words = st.lists(
    st.tuples(st.sampled_from(["ta", "tb", "td"]), st.sampled_from(["", "^-1", "^2"])),
    max_size=5,
).map(lambda tokens: " ".join(name + exp for name, exp in tokens))


class TestSurfaceSig:
    """Tests for surface signatures."""

    def test_rank(self):
        """Test rank = 2g + b - 1."""
        assert TORUS.rank == 2
        assert SurfaceSig(2, 3).rank == 6

    def test_generator_indices(self):
        """Test the a_k, b_k, c_j numbering."""
        s = SurfaceSig(2, 2)

        assert (s.a(1), s.b(1), s.a(2), s.b(2), s.c(1)) == (1, 2, 3, 4, 5)

    def test_boundary_word(self):
        """Test the outer boundary word of the torus page."""
        assert TORUS.boundary_word() == Word((1, 2, -1, -2), 2)
        assert SurfaceSig(1, 2).boundary_word() == Word((1, 2, -1, -2, 3), 3)

    def test_invalid_signatures(self):
        """Test that negative genus and closed pages are rejected."""
        with pytest.raises(SurfaceMismatchError):
            SurfaceSig(-1, 1)
        with pytest.raises(SurfaceMismatchError):
            SurfaceSig(1, 0)


class TestTwists:
    """Tests for the twist catalog."""

    def test_catalog_names(self):
        """Test the torus legend and the indexed catalog."""
        assert catalog_names(TORUS) == ["ta", "tb", "td"]
        assert catalog_names(SurfaceSig(2, 1)) == ["ta1", "tb1", "ta2", "tb2", "tc1", "td1"]

    def test_handle_twists(self):
        """Test T_a: b -> b a and T_b: a -> a b^-1."""
        ta, tb = twist(TORUS, "ta"), twist(TORUS, "tb")

        assert ta.image(1) == Word((1,), 2)
        assert ta.image(2) == Word((2, 1), 2)
        assert tb.image(1) == Word((1, -2), 2)
        assert tb.image(2) == Word((2,), 2)

    def test_outer_boundary_twist(self):
        """Test that the outer boundary twist conjugates by the boundary word."""
        td = twist(TORUS, "td")

        assert td.image(1) == Word((2, 1, -2, 1, 2, -1, -2), 2)

    def test_inner_boundary_twist(self):
        """Test that an inner boundary twist acts trivially and records its tail."""
        s = SurfaceSig(1, 2)
        td1 = twist(s, "td1", 2)

        assert td1.action == identity(s).action
        assert td1.tail(1) == Word((-3, -3), 3)

    def test_homology_actions(self):
        """Test the H_1 matrices of the handle twists."""
        assert homology_action(twist(TORUS, "ta")) == Matrix([[1, 1], [0, 1]])
        assert homology_action(twist(TORUS, "tb")) == Matrix([[1, 0], [-1, 1]])
        assert homology_action(twist(TORUS, "td")) == Matrix.eye(2)

    def test_intersection_form(self):
        """Test the symplectic form of the torus page."""
        assert intersection_form(TORUS) == Matrix([[0, 1], [-1, 0]])

    def test_unknown_curve(self):
        """Test that curves outside the catalog are rejected."""
        with pytest.raises(CatalogError):
            twist(TORUS, "tc")
        with pytest.raises(CatalogError):
            twist(SurfaceSig(2, 1), "ta")
        with pytest.raises(CatalogError):
            twist(TORUS, "ta2")

    def test_braid_relation(self):
        """Test ta tb ta = tb ta tb."""
        assert equality(parse_twist_word("ta tb ta", TORUS), parse_twist_word("tb ta tb", TORUS))

    def test_chain_twist_homology(self):
        """Test that tc1 adds b1^-1 a2 to a1 and b2."""
        tc1 = twist(SurfaceSig(2, 1), "tc1")

        assert homology_action(tc1) == Matrix(
            [[1, 0, 0, 0], [-1, 1, 0, -1], [1, 0, 1, 1], [0, 0, 0, 1]]
        )

    @pytest.mark.parametrize("neighbour", ["ta1", "tb2"])
    def test_chain_twist_braids(self, neighbour):
        """Test the braid relation between tc1 and the handle twists it meets once."""
        s = SurfaceSig(2, 1)
        left = parse_twist_word(f"{neighbour} tc1 {neighbour}", s)
        right = parse_twist_word(f"tc1 {neighbour} tc1", s)

        assert equality(left, right)

    @pytest.mark.parametrize("disjoint", ["tb1", "ta2"])
    def test_chain_twist_commutes(self, disjoint):
        """Test that tc1 commutes with the handle twists it misses."""
        s = SurfaceSig(2, 1)

        assert mcg.commutes_with(twist(s, "tc1"), twist(s, disjoint))

    def test_chain_twist_inverse(self):
        """Test that tc1 composed with its inverse power is the identity."""
        s = SurfaceSig(2, 2)

        assert equality(compose(twist(s, "tc1"), twist(s, "tc1", -1)), identity(s))

    def test_chain_twist_index(self):
        """Test the plain tc name on genus 2 and the range of chain indices."""
        assert twist(SurfaceSig(2, 1), "tc").label == "tc1"
        assert "tc2" in catalog_names(SurfaceSig(3, 1))
        with pytest.raises(CatalogError):
            twist(SurfaceSig(2, 1), "tc2")

    def test_chain_relation(self):
        """Test that (ta tb)^6 is a single boundary twist."""
        result = is_boundary_twist_product(power(parse_twist_word("ta tb", TORUS), 6))

        assert result.is_member
        assert abs(result.exponents[0]) == 1


class TestComposition:
    """Tests for composition, inverse and parsing."""

    def test_rightmost_applies_first(self):
        """Test that 'ta tb' applies tb first."""
        f = parse_twist_word("ta tb", TORUS)

        # tb(x1) = x1 x2^-1, then ta gives x1 x1^-1 x2^-1
        assert f.image(1) == Word((-2,), 2)

    def test_parse_matches_compose(self):
        """Test that parsing a twist word composes its tokens."""
        parsed = parse_twist_word("ta tb^-1 td^2", TORUS)
        built = compose(
            compose(twist(TORUS, "ta"), twist(TORUS, "tb", -1)), twist(TORUS, "td", 2)
        )

        assert equality(parsed, built)
        assert parsed.label == "ta tb^-1 td^2"

    def test_identity_words(self):
        """Test that '' and 'id' are the identity."""
        assert equality(parse_twist_word("", TORUS), identity(TORUS))
        assert equality(parse_twist_word("id", TORUS), identity(TORUS))
        assert parse_twist_word("", TORUS).label == "id"

    def test_bad_twist_token(self):
        """Test that a malformed token is a parse error."""
        with pytest.raises(WordParseError):
            parse_twist_word("ta x1", TORUS)

    def test_surface_mismatch(self):
        """Test that classes on different surfaces do not compose."""
        with pytest.raises(SurfaceMismatchError):
            compose(twist(TORUS, "ta"), identity(SurfaceSig(2, 1)))

    def test_power_zero(self):
        """Test that the zeroth power is the identity."""
        assert equality(power(twist(TORUS, "ta"), 0), identity(TORUS))

    @settings(deadline=None)
    @given(twist_words)
    def test_inverse(self, text):
        """Test f composed with its inverse is the identity, on both sides."""
        f = parse_twist_word(text, TORUS)

        assert equality(compose(f, inverse(f)), identity(TORUS))
        assert equality(compose(inverse(f), f), identity(TORUS))

    @settings(deadline=None)
    @given(twist_words)
    def test_symplectic(self, text):
        """Test that every twist word preserves the intersection form."""
        m = homology_action(parse_twist_word(text, TORUS))

        assert m.T * intersection_form(TORUS) * m == intersection_form(TORUS)

    def test_inner_tails_compose(self):
        """Test that inner twist tails add up under composition."""
        s = SurfaceSig(1, 2)
        f = compose(twist(s, "td1", 1), twist(s, "td1", -3))

        assert equality(f, twist(s, "td1", -2))


class TestCustomClasses:
    """Tests for classes given by generator images."""

    def test_custom_twist(self):
        """Test that explicit images of T_a give T_a."""
        f = custom_mapping_class(
            TORUS,
            [Word((1,), 2), Word((2, 1), 2)],
            [Word((1,), 2), Word((2, -1), 2)],
        )

        assert equality(f, twist(TORUS, "ta"))

    def test_boundary_not_fixed(self):
        """Test that swapping the generators does not fix the boundary."""
        with pytest.raises(InvalidMappingClassError):
            custom_mapping_class(
                TORUS, [Word((2,), 2), Word((1,), 2)], [Word((2,), 2), Word((1,), 2)]
            )

    def test_wrong_inverse(self):
        """Test that inverse images must invert the action."""
        with pytest.raises(InvalidMappingClassError):
            custom_mapping_class(
                TORUS,
                [Word((1,), 2), Word((2, 1), 2)],
                [Word((1,), 2), Word((2, 1), 2)],
            )


class TestInvolutions:
    """Tests for orientation-reversing involutions."""

    def test_standard_involution(self):
        """Test the images of the std involution."""
        iota = involution(TORUS, "std")

        assert iota.action.image(1) == Word((-1,), 2)
        assert iota.action.image(2) == Word((1, 2, -1), 2)
        assert not iota.as_mapping_class().is_preserving

    def test_swap_involution(self):
        """Test the swap involution exchanges the generators."""
        iota = involution(TORUS, "swap")

        assert iota.action.image(1) == Word((2,), 2)
        assert iota.action.image(2) == Word((1,), 2)

    def test_std_inverts_handle_twists(self):
        """Test that conjugating by std inverts ta and tb."""
        iota = involution(TORUS, "std")

        for name in ("ta", "tb"):
            conjugated = conjugate_by_involution(iota, twist(TORUS, name))
            assert equality(conjugated, twist(TORUS, name, -1))

    def test_custom_images(self):
        """Test parsing an involution from generator images."""
        iota = parse_involution("images(x1^-1; x1 x2 x1^-1)", TORUS)

        assert iota.action == involution(TORUS, "std").action
        assert parse_images("images(x2; x1)", 2) == [Word((2,), 2), Word((1,), 2)]

    def test_custom_must_reverse_boundary(self):
        """Test that the identity is not accepted as an involution."""
        with pytest.raises(InvalidMappingClassError):
            parse_involution("images(x1; x2)", TORUS)

    def test_custom_must_be_involutive(self):
        """Test that a map whose square is not the identity is rejected."""
        with pytest.raises(InvalidMappingClassError, match="not involutive"):
            parse_involution("images(x2; x1 x2)", TORUS)

    def test_wrong_image_count(self):
        """Test that images() needs one word per generator."""
        with pytest.raises(WordParseError):
            parse_images("images(x1)", 2)

    def test_unknown_name(self):
        """Test that only std and swap are catalog names."""
        with pytest.raises(CatalogError):
            involution(TORUS, "flip")

    def test_inner_boundary_reversed(self):
        """Test that std reverses the inner loop behind the handle commutator."""
        iota = involution(SurfaceSig(1, 2), "std")

        assert iota.action.image(3) == Word((1, 2, -1, -2, -3, 2, 1, -2, -1), 3)
        assert iota.tails == (Word((1, 2, -1, -2), 3),)

    @pytest.mark.parametrize("surface", [SurfaceSig(1, 2), SurfaceSig(2, 3), SurfaceSig(0, 3)])
    @pytest.mark.parametrize("name", ["std", "swap"])
    def test_catalog_on_several_boundaries(self, surface, name):
        """Test that both catalog involutions exist on pages with inner boundaries."""
        iota = involution(surface, name)

        assert len(iota.tails) == surface.boundary - 1
        assert not iota.as_mapping_class().is_preserving

    def test_std_inverts_boundary_twists(self):
        """Test that conjugating by std inverts ta and the inner boundary twist."""
        s = SurfaceSig(1, 2)
        iota = involution(s, "std")

        for name in ("ta", "td1", "td2"):
            conjugated = conjugate_by_involution(iota, twist(s, name))
            assert equality(conjugated, twist(s, name, -1))

    def test_custom_images_with_inner_boundary(self):
        """Test that custom images on Σ_{1,2} recover the catalog tails."""
        s = SurfaceSig(1, 2)
        text = "images(x1^-1; x1 x2 x1^-1; x1 x2 x1^-1 x2^-1 x3^-1 x2 x1 x2^-1 x1^-1)"
        iota = parse_involution(text, s)

        assert iota.tails == involution(s, "std").tails

    def test_custom_must_reverse_inner_boundary(self):
        """Test that inverting c_1 in place does not reverse the boundary word."""
        with pytest.raises(InvalidMappingClassError, match="boundary word"):
            parse_involution("images(x1^-1; x1 x2 x1^-1; x3^-1)", SurfaceSig(1, 2))

    def test_equality_rejects_reversing(self):
        """Test that equality is only defined on preserving classes."""
        reflection = involution(TORUS, "std").as_mapping_class()

        with pytest.raises(OrientationError):
            equality(reflection, reflection)


class TestBoundaryTwistKernel:
    """Tests for is_boundary_twist_product."""

    @pytest.mark.parametrize("k", range(-8, 9))
    def test_exponent_recovery(self, k):
        """Test that powers of the boundary twist are recovered exactly."""
        result = is_boundary_twist_product(twist(TORUS, "td", k))

        assert result.status == KernelStatus.MEMBER
        assert result.exponents == (k,)

    def test_handle_twists_not_members(self):
        """Test that handle twists are not boundary-twist products."""
        for name in ("ta", "tb"):
            result = is_boundary_twist_product(twist(TORUS, name))
            assert result.status == KernelStatus.NOT_MEMBER
            assert not result.is_member

    def test_inner_exponents(self):
        """Test exponent recovery for inner and outer twists on two boundary components."""
        s = SurfaceSig(1, 2)

        assert is_boundary_twist_product(twist(s, "td1", 3)).exponents == (3, 0)
        assert is_boundary_twist_product(twist(s, "td2", 2)).exponents == (0, 2)

    def test_boundary_twist_product(self):
        """Test that the product needs one exponent per component."""
        s = SurfaceSig(1, 2)

        assert equality(boundary_twist_product(s, (0, 0)), identity(s))
        with pytest.raises(CatalogError):
            boundary_twist_product(s, (1,))

    def test_rejects_reversing(self):
        """Test that orientation-reversing input is an error."""
        with pytest.raises(OrientationError):
            is_boundary_twist_product(involution(TORUS, "std").as_mapping_class())

    def test_bounded_search_warns(self, caplog):
        """Test that an exhausted bounded search is inconclusive and logged."""
        with caplog.at_level(logging.WARNING):
            result = mcg._bounded_kernel_search(twist(TORUS, "ta"), 1)

        assert result.status == KernelStatus.INCONCLUSIVE
        assert result.exponents is None
        assert "inconclusive" in caplog.text
