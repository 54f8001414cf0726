"""Tests for open-book Heegaard diagrams and the Goeritz checks."""

import logging
from pathlib import Path

import pytest

from goeritz_ob.core.heegaard import (
    CandidateKind,
    CheckReport,
    CurveCheck,
    GoeritzCandidate,
    OpenBook,
    arc_word,
    build_diagram,
    check_binding_reversing,
    check_gbind_membership,
    compose_candidates,
    conjugate_candidate,
    gbind_equal,
    lift_to_goeritz,
    load_diagram,
    reversal_criterion_search,
    satisfies_reversal_criterion,
)
from goeritz_ob.core.mcg import (
    KernelResult,
    KernelStatus,
    SurfaceSig,
    commutes_with,
    equality,
    identity,
    inverse,
    involution,
    parse_twist_word,
    twist,
)
from goeritz_ob.core.words import CyclicWord, Word
from goeritz_ob.errors import (
    InconclusiveError,
    InvalidMappingClassError,
    NonCommutingError,
    OrientationError,
    SurfaceMismatchError,
    WordParseError,
)

FIXTURES = Path(__file__).parent / "fixtures"
TORUS = SurfaceSig(1, 1)


def book(phi: str) -> OpenBook:
    return OpenBook.from_twist_word(1, 1, phi)


class TestDiagram:
    """Tests for build_diagram and the export format."""

    @pytest.mark.parametrize(
        ("phi", "fixture"), [("td", "openbook_td.txt"), ("td^-1", "openbook_td_inv.txt")]
    )
    def test_golden_export(self, phi, fixture):
        """Test the exported diagrams against the golden files."""
        expected = (FIXTURES / fixture).read_text()

        assert build_diagram(book(phi)).export() == expected

    def test_trivial_monodromy(self):
        """Test that the identity monodromy gives empty words."""
        d = build_diagram(book(""))

        assert all(w.is_empty for w in d.a_words + d.b_words)
        assert d.export().splitlines()[0] == "openbook g=1 b=1 phi=id"

    def test_genus_two(self):
        """Test that a genus-two page has four curves per side."""
        d = build_diagram(OpenBook.from_twist_word(2, 1, "td"))

        assert len(d.a_words) == 4
        assert len(d.b_words) == 4
        assert not any(w.is_empty for w in d.b_words)

    def test_inner_boundary_arc(self):
        """Test that the arc to an inner boundary reads the tail of the class."""
        d = build_diagram(OpenBook.from_twist_word(1, 2, "td1"))

        assert d.b_words[0].is_empty
        assert d.b_words[2] == CyclicWord((3,), 3)
        assert d.a_words[2] == CyclicWord((3,), 3)

    def test_arc_word(self):
        """Test arc words of the identity and of T_a."""
        assert arc_word(identity(TORUS), 1) == Word.empty(2)
        assert arc_word(twist(TORUS, "ta"), 2) == Word((2, 1, -2), 2)

    def test_load_round_trip(self):
        """Test that an exported diagram loads back."""
        d = load_diagram((FIXTURES / "openbook_td.txt").read_text())

        assert d.surface == TORUS
        assert d.b_words == build_diagram(book("td")).b_words

    def test_load_rejects_wrong_words(self):
        """Test that words inconsistent with the monodromy are rejected."""
        text = (FIXTURES / "openbook_td.txt").read_text().replace("phi=td", "phi=ta")

        with pytest.raises(InvalidMappingClassError):
            load_diagram(text)

    def test_load_rejects_bad_header(self):
        """Test that a malformed header is a parse error."""
        with pytest.raises(WordParseError):
            load_diagram("openbook torus\nA1: cyc()\n")

    def test_monodromy_checks(self):
        """Test that the monodromy must live on the page and preserve orientation."""
        with pytest.raises(SurfaceMismatchError):
            OpenBook(TORUS, identity(SurfaceSig(2, 1)))
        with pytest.raises(InvalidMappingClassError):
            OpenBook(TORUS, involution(TORUS, "std").as_mapping_class())


class TestMembership:
    """Tests for check_gbind_membership."""

    def test_lifted_twist_passes(self):
        """Test that (ta, ta) is in G_bind for the monodromy td."""
        b = book("td")
        report = check_gbind_membership(build_diagram(b), lift_to_goeritz(twist(TORUS, "ta"), b))

        assert report.verdict
        assert report.agreement
        assert [c.curve for c in report.per_curve] == ["A1", "A2", "B1", "B2"]

    def test_mismatched_pair_fails(self):
        """Test that (ta, tb) is not in G_bind."""
        candidate = GoeritzCandidate.preserving(twist(TORUS, "ta"), twist(TORUS, "tb"))
        report = check_gbind_membership(build_diagram(book("td")), candidate)

        assert not report.verdict
        assert not report.cross_check

    def test_genus_two_lift(self):
        """Test a lifted handle twist on a genus-two page."""
        b = OpenBook.from_twist_word(2, 1, "td")
        f = parse_twist_word("ta1 tb2^-1", b.surface)

        assert check_gbind_membership(build_diagram(b), lift_to_goeritz(f, b)).verdict

    @pytest.mark.parametrize("f", ["ta", "tb", "ta tb", "ta^2"])
    @pytest.mark.parametrize("phi", ["ta", "td", "ta tb"])
    def test_diagonal_pair_iff_commuting(self, phi, f):
        """Test that (f, f) is in G_bind exactly when f commutes with the monodromy."""
        b = book(phi)
        g = parse_twist_word(f, TORUS)
        report = check_gbind_membership(build_diagram(b), GoeritzCandidate.preserving(g, g))

        assert report.verdict == commutes_with(g, b.monodromy)
        assert report.agreement

    def test_composed_lifts_pass(self):
        """Test that the composition of two lifts is again in G_bind."""
        b = book("td")
        c = compose_candidates(
            lift_to_goeritz(twist(TORUS, "ta"), b), lift_to_goeritz(twist(TORUS, "tb"), b)
        )

        assert check_gbind_membership(build_diagram(b), c).verdict
        assert gbind_equal(c.first, parse_twist_word("ta tb", TORUS), b)

    def test_reversing_candidate_rejected(self):
        """Test that the membership check refuses reversing candidates."""
        trivial = identity(TORUS)
        candidate = GoeritzCandidate.reversing(trivial, trivial, involution(TORUS, "std"))

        with pytest.raises(OrientationError):
            check_gbind_membership(build_diagram(book("td")), candidate)

    def test_surface_mismatch(self):
        """Test that candidate and diagram must share a surface."""
        g2 = SurfaceSig(2, 1)
        candidate = GoeritzCandidate.preserving(identity(g2), identity(g2))

        with pytest.raises(SurfaceMismatchError):
            check_gbind_membership(build_diagram(book("td")), candidate)

    def test_disagreement_is_logged(self, caplog):
        """Test that a word/class disagreement is reported as a warning."""
        with caplog.at_level(logging.WARNING):
            report = CheckReport.from_curves([CurveCheck("A1", CyclicWord.empty(2))], False)

        assert report.verdict
        assert not report.agreement
        assert "disagrees" in caplog.text


class TestCandidates:
    """Tests for Goeritz candidates."""

    def test_reversing_needs_involution(self):
        """Test that a reversing candidate without an involution is rejected."""
        with pytest.raises(OrientationError):
            GoeritzCandidate(CandidateKind.REVERSING, identity(TORUS), identity(TORUS))

    def test_classes_on_one_surface(self):
        """Test that both classes must live on one surface."""
        with pytest.raises(SurfaceMismatchError):
            GoeritzCandidate.preserving(identity(TORUS), identity(SurfaceSig(2, 1)))

    def test_lift_needs_commutation(self):
        """Test that lifting a class not commuting with the monodromy fails."""
        with pytest.raises(NonCommutingError):
            lift_to_goeritz(twist(TORUS, "ta"), book("ta tb"))

    def test_compose_candidates(self):
        """Test page-wise composition of lifted candidates."""
        b = book("td")
        c = compose_candidates(
            lift_to_goeritz(twist(TORUS, "ta"), b), lift_to_goeritz(twist(TORUS, "tb"), b)
        )

        assert equality(c.first, parse_twist_word("ta tb", TORUS))
        assert equality(c.second, parse_twist_word("ta tb", TORUS))

    def test_conjugate_candidate(self):
        """Test that r = (id, id, std) conjugates F(ta) to F(ta^-1)."""
        b = book("td")
        trivial = identity(TORUS)
        r = GoeritzCandidate.reversing(trivial, trivial, involution(TORUS, "std"))
        conjugated = conjugate_candidate(r, lift_to_goeritz(twist(TORUS, "ta"), b))

        assert conjugated.kind == CandidateKind.PRESERVING
        assert gbind_equal(conjugated.first, inverse(twist(TORUS, "ta")), b)

    def test_conjugate_needs_trivial_pages(self):
        """Test that only (id, id, iota) acts by conjugation."""
        ta = twist(TORUS, "ta")
        r = GoeritzCandidate.reversing(ta, ta, involution(TORUS, "std"))

        with pytest.raises(InvalidMappingClassError):
            conjugate_candidate(r, lift_to_goeritz(ta, book("td")))


class TestReversal:
    """Tests for the binding-reversing check and search."""

    @pytest.mark.parametrize("phi", ["td", "td^-1", "td^2", "td^-2"])
    def test_identity_pair_reverses(self, phi):
        """Test that (id, id, std) is a binding-reversing Goeritz element."""
        trivial = identity(TORUS)
        candidate = GoeritzCandidate.reversing(trivial, trivial, involution(TORUS, "std"))
        report = check_binding_reversing(build_diagram(book(phi)), candidate)

        assert report.verdict
        assert report.agreement

    @pytest.mark.parametrize("phi", ["td1", "td2^-1", "td1 td2"])
    def test_identity_pair_reverses_with_inner_boundary(self, phi):
        """Test (id, id, std) on a page with two boundary components."""
        b = OpenBook.from_twist_word(1, 2, phi)
        trivial = identity(b.surface)
        candidate = GoeritzCandidate.reversing(trivial, trivial, involution(b.surface, "std"))
        report = check_binding_reversing(build_diagram(b), candidate)

        assert report.verdict
        assert report.agreement

    def test_preserving_candidate_rejected(self):
        """Test that the reversal check refuses preserving candidates."""
        trivial = identity(TORUS)

        with pytest.raises(OrientationError):
            check_binding_reversing(
                build_diagram(book("td")), GoeritzCandidate.preserving(trivial, trivial)
            )

    @pytest.mark.parametrize("phi", ["td", "td^-1", "td^2", "td^-2"])
    def test_search_finds_identity(self, phi):
        """Test that the search at length 0 returns the identity."""
        found = reversal_criterion_search(book(phi), involution(TORUS, "std"), 0)

        assert found is not None
        assert equality(found, identity(TORUS))

    def test_criterion(self):
        """Test the reversal criterion for the identity."""
        assert satisfies_reversal_criterion(identity(TORUS), book("td"), involution(TORUS, "std"))

    def test_search_none_within_bound(self):
        """Test that the swap involution does not reverse the monodromy ta at length 0."""
        assert reversal_criterion_search(book("ta"), involution(TORUS, "swap"), 0) is None

    def test_negative_length(self):
        """Test that a negative search length is rejected."""
        with pytest.raises(ValueError):
            reversal_criterion_search(book("td"), involution(TORUS, "std"), -1)


class TestGbindEqual:
    """Tests for equality in the binding-preserving subgroup."""

    def test_kernel_examples(self):
        """Test td = id, ta != id and tb != id in G_bind."""
        b = book("td")
        trivial = identity(TORUS)

        assert gbind_equal(twist(TORUS, "td"), trivial, b)
        assert not gbind_equal(twist(TORUS, "ta"), trivial, b)
        assert not gbind_equal(twist(TORUS, "tb"), trivial, b)

    def test_boundary_twist_absorbed(self):
        """Test that a boundary twist factor is invisible in G_bind."""
        b = book("td^2")

        assert gbind_equal(parse_twist_word("ta td^3", TORUS), twist(TORUS, "ta"), b)

    def test_non_commuting(self):
        """Test that classes must commute with the monodromy."""
        with pytest.raises(NonCommutingError):
            gbind_equal(twist(TORUS, "tb"), identity(TORUS), book("ta"))

    def test_inconclusive(self, monkeypatch):
        """Test that an inconclusive kernel search surfaces as an error with its bound."""
        monkeypatch.setattr(
            "goeritz_ob.core.heegaard.is_boundary_twist_product",
            lambda f, bound: KernelResult(KernelStatus.INCONCLUSIVE, None, bound),
        )

        with pytest.raises(InconclusiveError) as exc_info:
            gbind_equal(twist(TORUS, "ta"), identity(TORUS), book("td"), 3)

        assert exc_info.value.bound == 3
