"""Acceptance suites: seeded sweeps over the engines with exact expected results."""

import logging
import random
import time
from collections.abc import Callable

from goeritz_ob.config import Settings
from goeritz_ob.core.example import (
    build_example_diagram,
    readings_match_formula,
    rigidity_search,
    twisted_binding_word,
)
from goeritz_ob.core.heegaard import (
    GoeritzCandidate,
    OpenBook,
    build_diagram,
    check_binding_reversing,
    check_gbind_membership,
    gbind_equal,
    lift_to_goeritz,
    reversal_criterion_search,
)
from goeritz_ob.core.mcg import (
    SurfaceSig,
    catalog_names,
    commutes_with,
    equality,
    identity,
    involution,
    is_boundary_twist_product,
    parse_twist_word,
    twist,
)
from goeritz_ob.core.planar import (
    Side,
    cyclic_sequence,
    cyclic_word,
    fact_balance,
    fact_corresponding_arcs,
    fact_reduced_trigger,
    format_planar,
    is_gof,
    minimal_position,
    parse_planar,
    random_curve,
    reverse_orientation,
)
from goeritz_ob.core.presentation import (
    DEFAULT_REP,
    crosscheck_with_mcg,
    random_presentation_word,
    verify_r_action,
    verify_relations,
)
from goeritz_ob.core.words import (
    CyclicWord,
    Word,
    closure,
    invert,
    is_gof_word,
    reduce,
    reflect,
)
from goeritz_ob.errors import GoeritzError, InconclusiveError
from goeritz_ob.eval.models import SuiteReport, SuiteResult

logger = logging.getLogger(__name__)

WORD_CASES = 10_000
CANDIDATE_PAIRS = 200
PRESENTATION_WORDS = 500
FACT_SAMPLES = 5_000
MONODROMY_EXPONENTS = (1, -1, 2, -2)
_GOF_FORMS = ((1, 2, -1, -2), (1, -2, -1, 2))


class _Tally:
    """Counts cases and records findings while a suite runs."""

    def __init__(self):
        self.cases = 0
        self.failures = 0
        self.inconclusive = 0
        self.findings: list[str] = []

    def check(self, holds: bool, finding: str) -> None:
        self.cases += 1
        if not holds:
            self.failures += 1
            self.findings.append(finding)

    def undecided(self, finding: str) -> None:
        self.cases += 1
        self.inconclusive += 1
        self.findings.append(finding)


def _random_word(rng: random.Random, rank: int, max_len: int = 12) -> Word:
    letters = tuple(
        rng.choice((1, -1)) * rng.randint(1, rank) for _ in range(rng.randint(0, max_len))
    )
    return Word(letters, rank)


def _random_twist_word(rng: random.Random, surface: SurfaceSig, max_len: int) -> str:
    names = catalog_names(surface)
    tokens = [
        f"{rng.choice(names)}{'' if rng.random() < 0.5 else '^-1'}"
        for _ in range(rng.randint(0, max_len))
    ]
    return " ".join(tokens)


class SuiteRunner:
    """Runs the acceptance suites with the bounds and seed of a ``Settings``."""

    def __init__(self, settings: Settings):
        """Initialize the runner.

        Args:
            settings: Source of the seed, the kernel bound and the crossing budget.
        """
        self.settings = settings
        self._suites: dict[str, tuple[str, Callable[[_Tally], None]]] = {
            "words": ("word-core identities on seeded random words", self._words),
            "candidates": ("word-level vs class-level G_bind verdicts", self._candidates),
            "kernel": ("boundary-twist kernel and exponent recovery", self._kernel),
            "reversal": ("binding-reversing element of the genus-two example", self._reversal),
            "presentation": ("matrix presentation of the Goeritz group", self._presentation),
            "facts": ("balance, reduced-trigger and arc facts on random curves", self._facts),
            "rigidity": ("no doubly-GOF curve other than the binding", self._rigidity),
            "twist-formula": ("planar engine vs closed twist formula", self._twist_formula),
            "binding": ("example diagram against the open-book diagram", self._binding),
        }

    @property
    def names(self) -> list[str]:
        return list(self._suites)

    def run(self, name: str) -> SuiteResult:
        """Run one suite by name.

        Raises:
            KeyError: If no suite has this name.
        """
        description, body = self._suites[name]
        tally = _Tally()
        started = time.perf_counter()
        body(tally)
        result = SuiteResult(
            name=name,
            description=description,
            cases=tally.cases,
            failures=tally.failures,
            inconclusive=tally.inconclusive,
            findings=tally.findings,
            seconds=time.perf_counter() - started,
        )
        logger.info(
            "Suite %s: %s (%d cases, %d failures, %.2fs)",
            name,
            result.verdict.value,
            result.cases,
            result.failures,
            result.seconds,
        )
        return result

    def run_all(self, names: list[str] | None = None) -> SuiteReport:
        """Run the named suites, or every suite, in registration order."""
        selected = names or self.names
        return SuiteReport.from_results([self.run(name) for name in selected])

    def _words(self, tally: _Tally) -> None:
        rng = random.Random(self.settings.seed)
        for case in range(WORD_CASES):
            rank = rng.choice((2, 3))
            w, v = _random_word(rng, rank), _random_word(rng, rank)
            r = reduce(w)
            tally.check(
                reduce(r) == r and r.is_reduced, f"case {case}: reduce({w}) not idempotent"
            )
            tally.check(
                reduce(w * v) == reduce(r * reduce(v)),
                f"case {case}: reduction of {w} * {v} depends on the order",
            )
            k = rng.randint(0, len(w))
            rotated = Word(w.letters[k:] + w.letters[:k], rank)
            tally.check(
                closure(rotated) == closure(w),
                f"case {case}: closure of {w} not rotation-invariant",
            )
            tally.check(
                reflect(invert(w)) == invert(reflect(w))
                and closure(invert(w)) == invert(closure(w)),
                f"case {case}: reflect and invert do not interchange on {w}",
            )
            if rank == 2:
                u = _random_word(rng, 2, 6)
                form = Word(rng.choice(_GOF_FORMS), 2)
                conjugate = closure(u * form * invert(u))
                tally.check(
                    is_gof_word(conjugate), f"case {case}: {conjugate} not recognised as GOF"
                )
                cw = closure(w)
                tally.check(
                    is_gof_word(cw) == is_gof_word(invert(cw)),
                    f"case {case}: GOF recognition not closed under inversion on {cw}",
                )

    def _candidates(self, tally: _Tally) -> None:
        rng = random.Random(self.settings.seed)
        surface = SurfaceSig(1, 1)
        max_len = self.settings.random_word_length
        for case in range(CANDIDATE_PAIRS):
            phi = parse_twist_word(_random_twist_word(rng, surface, max_len), surface)
            book = OpenBook(surface, phi)
            diagram = build_diagram(book)
            f00 = parse_twist_word(_random_twist_word(rng, surface, max_len), surface)
            if rng.random() < 0.5:
                f11 = f00
            else:
                f11 = parse_twist_word(_random_twist_word(rng, surface, max_len), surface)
            report = check_gbind_membership(diagram, GoeritzCandidate.preserving(f00, f11))
            tally.check(
                report.agreement,
                f"case {case}: phi={phi} f00={f00} f11={f11} words say {report.verdict}",
            )
            commutes = commutes_with(f00, phi)
            if f11 is f00:
                tally.check(
                    report.verdict == commutes,
                    f"case {case}: phi={phi} (f, f) verdict {report.verdict} for f={f00}",
                )
            if commutes:
                lifted = check_gbind_membership(diagram, lift_to_goeritz(f00, book))
                tally.check(lifted.verdict, f"case {case}: phi={phi} lift of {f00} rejected")

    def _kernel(self, tally: _Tally) -> None:
        surface = SurfaceSig(1, 1)
        book = OpenBook(surface, twist(surface, "td"))
        trivial = identity(surface)
        bound = self.settings.kernel_bound
        expected = {"td": True, "ta": False, "tb": False}
        for name, member in expected.items():
            try:
                verdict = gbind_equal(twist(surface, name), trivial, book, bound)
            except InconclusiveError:
                tally.undecided(f"{name} = id undecided within |k| <= {bound}")
                continue
            tally.check(verdict == member, f"{name} = id in G_bind gave {verdict}")
        for k in range(-8, 9):
            result = is_boundary_twist_product(twist(surface, "td", k), bound)
            tally.check(result.exponents == (k,), f"td^{k} recovered as {result.exponents}")

    def _reversal(self, tally: _Tally) -> None:
        surface = SurfaceSig(1, 1)
        iota = involution(surface, "std")
        trivial = identity(surface)
        for n in MONODROMY_EXPONENTS:
            book = OpenBook(surface, twist(surface, "td", n))
            found = reversal_criterion_search(book, iota, 0)
            tally.check(
                found is not None and equality(found, trivial),
                f"n={n}: search returned {found}",
            )
            candidate = GoeritzCandidate.reversing(trivial, trivial, iota)
            report = check_binding_reversing(build_diagram(book), candidate)
            tally.check(report.verdict and report.agreement, f"n={n}: (id, id, std) rejected")

    def _presentation(self, tally: _Tally) -> None:
        for check in verify_relations(DEFAULT_REP).checks:
            tally.check(check.holds, f"relation {check.relation} fails")
        n = self.settings.example_n
        bound = self.settings.kernel_bound
        r_action = verify_r_action(n, bound)
        tally.check(r_action.reversing_valid, f"n={n}: r is not a Goeritz element")
        for check in r_action.checks:
            tally.check(check.holds, f"n={n}: r F({check.name}) r != F({check.name}^-1)")
        rng = random.Random(self.settings.seed)
        for case in range(PRESENTATION_WORDS):
            w = random_presentation_word(rng, 12)
            try:
                agrees = crosscheck_with_mcg(w, n, DEFAULT_REP, bound)
            except InconclusiveError:
                tally.undecided(f"case {case}: {w} undecided within |k| <= {bound}")
                continue
            tally.check(agrees, f"case {case}: matrix and G_bind disagree on {w}")

    def _facts(self, tally: _Tally) -> None:
        rng = random.Random(self.settings.seed)
        cuts = build_example_diagram(self.settings.example_n).cuts
        returning = 0
        for case in range(FACT_SAMPLES):
            sample = random_curve(rng, cuts)
            if sample is None:
                continue
            curve = minimal_position(sample)
            tally.check(
                cyclic_word(curve, Side.ALPHA) == cyclic_word(sample, Side.ALPHA),
                f"case {case}: minimal position changed the curve",
            )
            if not any(s.returning for s in curve.strands):
                continue
            returning += 1
            text = format_planar(curve)
            for c in (curve, reverse_orientation(curve)):
                for i in (1, 2):
                    tally.check(fact_balance(c, i), f"case {case}: l{i} unbalanced in\n{text}")
                s = cyclic_sequence(c, Side.ALPHA)
                if fact_reduced_trigger(s):
                    tally.check(
                        len(s.reduced()) == len(s),
                        f"case {case}: triggered {s} is not cyclically reduced",
                    )
            tally.check(
                fact_corresponding_arcs(curve),
                f"case {case}: returning strands disagree on their hole in\n{text}",
            )
        logger.info("Facts: %d minimal curves with returning strands", returning)

    def _rigidity(self, tally: _Tally) -> None:
        for n in (1, -1):
            certificate = rigidity_search(n, self.settings.crossing_budget)
            tally.check(
                certificate.only_binding,
                f"n={n}: doubly GOF at {certificate.doubly_gof} "
                f"(box {certificate.box}, {certificate.explored} curves)",
            )

    def _twist_formula(self, tally: _Tally) -> None:
        for n in MONODROMY_EXPONENTS:
            for u in range(-2, 3):
                for v in range(-2, 3):
                    try:
                        word = twisted_binding_word(u, v, n)
                    except GoeritzError as e:
                        tally.check(False, str(e))
                        continue
                    tally.check(
                        is_gof_word(word) == (u == v == 0),
                        f"u={u} v={v} n={n}: GOF verdict wrong for {word}",
                    )

    def _binding(self, tally: _Tally) -> None:
        for n in (1, -1):
            diagram = build_example_diagram(n)
            tally.check(
                readings_match_formula(n), f"n={n}: open-book readings differ from P_n, Q_n"
            )
            tally.check(
                is_gof(diagram, Side.ALPHA) and is_gof(diagram, Side.BETA),
                f"n={n}: binding is not GOF on both sides",
            )
            tally.check(
                parse_planar(format_planar(diagram)) == diagram,
                f"n={n}: planar text does not read back",
            )
            tally.check(
                cyclic_word(diagram, Side.BETA) == CyclicWord((1, 2, -1, -2), 2),
                f"n={n}: binding does not read [[x1, x2]] against the beta disks",
            )
