"""Tests for free-group words and cyclic words."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from goeritz_ob.core.words import (
    CyclicWord,
    Endomorphism,
    Word,
    closure,
    compose,
    invert,
    is_gof_word,
    parse_cyclic_word,
    parse_word,
    reduce,
    reflect,
    unwrap,
)
from goeritz_ob.errors import RankMismatchError, WordParseError

words = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=12).map(
    lambda letters: Word(tuple(letters), 2)
)


class TestParse:
    """Tests for the word grammar."""

    def test_parse_powers(self):
        """Test that x_k^e expands to |e| letters."""
        w = parse_word("x1 x2^-1 x3^2")

        assert w.letters == (1, -2, 3, 3)
        assert w.rank == 3

    def test_parse_empty_word(self):
        """Test that '1' and '' both parse as the empty word."""
        assert parse_word("1", rank=2) == Word.empty(2)
        assert parse_word("", rank=2) == Word.empty(2)

    def test_malformed_token_reports_column(self):
        """Test that a malformed token is reported with its 1-based column."""
        with pytest.raises(WordParseError) as exc_info:
            parse_word("x1 y2")

        assert exc_info.value.column == 4

    def test_zero_exponent_rejected(self):
        """Test that x1^0 is not a token."""
        with pytest.raises(WordParseError):
            parse_word("x1^0")

    def test_generator_outside_rank(self):
        """Test that a generator beyond the stated rank is a parse error."""
        with pytest.raises(WordParseError) as exc_info:
            parse_word("x3", rank=2)

        assert exc_info.value.column == 1

    def test_parse_cyclic_word(self):
        """Test that cyc(...) parses and cyclically reduces."""
        cw = parse_cyclic_word("cyc(x1 x2 x1^-1)")

        assert cw == CyclicWord((2,), 2)

    def test_cyclic_word_needs_wrapper(self):
        """Test that a bare word is not a cyclic word."""
        with pytest.raises(WordParseError):
            parse_cyclic_word("x1 x2")

    def test_unwrap_offset(self):
        """Test that unwrap returns the body and its offset."""
        assert unwrap("cyc(x1)", "cyc") == ("x1", 4)


class TestReduce:
    """Tests for free reduction."""

    def test_reduce_cancels(self):
        """Test the documented reduce example."""
        assert reduce(parse_word("x1 x2 x2^-1")) == parse_word("x1", rank=2)

    def test_reduce_to_identity(self):
        """Test that a cancelling word prints as 1."""
        assert str(reduce(parse_word("x1 x1^-1"))) == "1"

    def test_is_reduced(self):
        """Test the is_reduced flag."""
        assert parse_word("x1 x2").is_reduced
        assert not parse_word("x1 x2 x2^-1").is_reduced

    @given(words)
    def test_reduce_idempotent(self, w):
        """Test that reducing twice changes nothing."""
        assert reduce(reduce(w)) == reduce(w)
        assert reduce(w).is_reduced

    @given(words, words)
    def test_reduce_confluent(self, w, v):
        """Test that reduction of a product does not depend on reducing factors first."""
        assert reduce(w * v) == reduce(reduce(w) * reduce(v))


class TestCyclicWord:
    """Tests for cyclic words."""

    def test_canonical_rotation(self):
        """Test that cyclic words are stored at their least rotation."""
        cw = CyclicWord((2, 1, -2, -1), 2)

        assert cw.letters == (1, -2, -1, 2)
        assert str(cw) == "cyc(x1 x2^-1 x1^-1 x2)"

    def test_cyclic_reduction(self):
        """Test that conjugates collapse to the same cyclic word."""
        assert closure(parse_word("x2 x1 x1 x2^-1")) == CyclicWord((1, 1), 2)
        assert closure(parse_word("x1 x1^-1", rank=2)).is_empty

    @given(words, st.integers(min_value=0, max_value=12))
    def test_closure_rotation_invariant(self, w, k):
        """Test that rotating a word does not change its closure."""
        k = k % (len(w) + 1)
        rotated = Word(w.letters[k:] + w.letters[:k], 2)

        assert closure(rotated) == closure(w)

    @given(words)
    def test_reflect_invert_interchange(self, w):
        """Test that reflect and invert commute, on words and on closures."""
        assert reflect(invert(w)) == invert(reflect(w))
        assert closure(invert(w)) == invert(closure(w))
        assert closure(reflect(w)) == reflect(closure(w))

    def test_rank_check(self):
        """Test that letters outside the alphabet are rejected."""
        with pytest.raises(RankMismatchError):
            Word((3,), 2)


class TestGof:
    """Tests for GOF recognition."""

    def test_commutator_is_gof(self):
        """Test the commutator and its inverse."""
        cw = parse_cyclic_word("cyc(x1 x2 x1^-1 x2^-1)")

        assert is_gof_word(cw)
        assert is_gof_word(invert(cw))

    def test_other_forms(self):
        """Test that the reflected commutator is GOF and short words are not."""
        assert is_gof_word(parse_cyclic_word("cyc(x1 x2^-1 x1^-1 x2)"))
        assert not is_gof_word(parse_cyclic_word("cyc(x1 x2)"))
        assert not is_gof_word(CyclicWord.empty(2))

    def test_gof_needs_rank_two(self):
        """Test that GOF recognition is only defined in rank 2."""
        with pytest.raises(RankMismatchError):
            is_gof_word(CyclicWord((1, 2, -1, -2), 3))

    @given(words)
    def test_gof_closed_under_inversion(self, w):
        """Test that a word is GOF iff its inverse is."""
        cw = closure(w)

        assert is_gof_word(cw) == is_gof_word(invert(cw))

    @given(words)
    def test_conjugated_commutator_is_gof(self, u):
        """Test that every conjugate of the commutator is GOF."""
        commutator = Word((1, 2, -1, -2), 2)

        assert is_gof_word(closure(u * commutator * invert(u)))


class TestEndomorphism:
    """Tests for substitution and composition."""

    def test_substitute(self):
        """Test the swap x1 <-> x2."""
        swap = Endomorphism.from_images([Word((2,), 2), Word((1,), 2)])

        assert swap(parse_word("x1 x2^-1")) == Word((2, -1), 2)

    def test_compose_order(self):
        """Test that compose(second, first) applies first, then second."""
        first = Endomorphism.from_images([Word((1, 2), 2), Word((2,), 2)])
        second = Endomorphism.from_images([Word((1,), 2), Word((1, 2), 2)])

        composed = compose(second, first)

        # first(x1) = x1 x2, then second gives x1 x1 x2
        assert composed.image(1) == Word((1, 1, 2), 2)
        assert composed.image(2) == Word((1, 2), 2)

    def test_rank_mismatch(self):
        """Test that an endomorphism needs one image per generator."""
        with pytest.raises(RankMismatchError):
            Endomorphism((Word((1,), 2),), 2)
