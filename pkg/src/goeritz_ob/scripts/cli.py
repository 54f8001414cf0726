"""Command-line front end for the Goeritz checks.

Exit codes: 0 verdict true / element found, 1 verdict false / nothing found,
2 bounded search inconclusive, 3 input error.
"""

import argparse
import logging
import random
import sys
from pathlib import Path

from pydantic import ValidationError

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
    load_diagram,
    reversal_criterion_search,
)
from goeritz_ob.core.mcg import equality, identity, parse_involution, parse_twist_word
from goeritz_ob.core.planar import (
    Side,
    cyclic_word,
    format_planar,
    is_gof,
    minimal_position,
    parse_planar,
    twist_along_cut,
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
    parse_cyclic_word,
    parse_word,
    reduce,
    reflect,
)
from goeritz_ob.errors import GoeritzError, InconclusiveError, WordParseError
from goeritz_ob.eval.models import SuiteVerdict
from goeritz_ob.eval.suites import SuiteRunner

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INCONCLUSIVE = 2
EXIT_INPUT = 3

PRESENTATION_SAMPLES = 500

_GREEN = "\033[92m"
_YELLOW = "\033[93m"
_RED = "\033[91m"
_RESET = "\033[0m"


class Reporter:
    """Prints results as a text report or as ``key=value`` lines."""

    def __init__(self, output_format: str):
        self.structured = output_format == "structured"
        self.color = not self.structured and sys.stdout.isatty()

    def banner(self, title: str) -> None:
        if not self.structured:
            print("=" * 60)
            print(title)
            print("=" * 60)

    def field(self, key: str, value: object) -> None:
        if isinstance(value, bool):
            value = "true" if value else "false"
        if self.structured:
            print(f"{key}={value}")
        else:
            print(f"{key}: {value}")

    def verdict(self, key: str, passed: bool | None) -> None:
        """Print PASS, FAIL or INCONCLUSIVE (for None), coloured on a terminal."""
        label, color = {
            True: ("PASS", _GREEN),
            False: ("FAIL", _RED),
            None: ("INCONCLUSIVE", _YELLOW),
        }[passed]
        if self.color:
            label = f"{color}{label}{_RESET}"
        self.field(key, label)


def _exit_code(verdict: bool) -> int:
    return EXIT_OK if verdict else EXIT_NEGATIVE


def _parse_any_word(text: str) -> Word | CyclicWord:
    if text.strip().startswith("cyc("):
        return parse_cyclic_word(text)
    return parse_word(text)


def cmd_words(args: argparse.Namespace, settings: Settings, out: Reporter) -> int:
    """reduce / closure / reflect / invert / gof on words from the arguments or stdin."""
    inputs = args.words or [line.strip() for line in sys.stdin if line.strip()]
    all_true = True
    for text in inputs:
        w = _parse_any_word(text)
        if args.op == "reduce":
            result = reduce(w) if isinstance(w, Word) else w
        elif args.op == "closure":
            result = closure(w) if isinstance(w, Word) else w
        elif args.op == "reflect":
            result = reflect(w)
        elif args.op == "invert":
            result = invert(w)
        else:
            cw = closure(w) if isinstance(w, Word) else w
            result = is_gof_word(CyclicWord(cw.letters, 2))
            all_true = all_true and result
        if out.structured:
            out.field("result", result)
        else:
            print("true" if result is True else "false" if result is False else result)
    return _exit_code(all_true)


def cmd_diagram(args: argparse.Namespace, settings: Settings, out: Reporter) -> int:
    """Build the diagram of an open book, or verify an exported one."""
    if args.verify:
        diagram = load_diagram(args.verify.read_text())
        out.banner("Diagram verification")
        out.field("surface", diagram.surface)
        out.verdict("words", True)
        return EXIT_OK
    book = _book(args)
    text = build_diagram(book).export()
    if args.output:
        args.output.write_text(text)
        logger.info("Wrote diagram to %s", args.output)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _book(args: argparse.Namespace) -> OpenBook:
    return OpenBook.from_twist_word(args.genus, args.boundary, args.phi)


def _print_report(out: Reporter, report) -> None:
    for check in report.per_curve:
        out.field(check.curve, check.word)
    out.field("cross_check", report.cross_check)
    out.verdict("verdict", report.verdict)


def cmd_goeritz(args: argparse.Namespace, settings: Settings, out: Reporter) -> int:
    """check-bind / check-reverse / search-reverse / equal."""
    book = _book(args)
    surface = book.surface
    if args.action == "check-bind":
        candidate = GoeritzCandidate.preserving(
            parse_twist_word(args.f00, surface), parse_twist_word(args.f11, surface)
        )
        report = check_gbind_membership(build_diagram(book), candidate)
        out.banner(f"G_bind membership on {surface} phi={book.phi}")
        _print_report(out, report)
        return _exit_code(report.verdict)

    if args.action == "check-reverse":
        candidate = GoeritzCandidate.reversing(
            parse_twist_word(args.f01, surface),
            parse_twist_word(args.f10, surface),
            parse_involution(args.iota, surface),
        )
        report = check_binding_reversing(build_diagram(book), candidate)
        out.banner(f"Binding-reversing check on {surface} phi={book.phi}")
        _print_report(out, report)
        return _exit_code(report.verdict)

    if args.action == "search-reverse":
        max_len = settings.search_max_len
        found = reversal_criterion_search(book, parse_involution(args.iota, surface), max_len)
        out.banner(f"Reversal search on {surface} phi={book.phi}")
        out.field("max_len", max_len)
        if found is None:
            out.field("found", "none")
            return EXIT_NEGATIVE
        out.field("found", "identity" if equality(found, identity(surface)) else found)
        return EXIT_OK

    bound = settings.kernel_bound
    f = parse_twist_word(args.f, surface)
    g = parse_twist_word(args.g, surface)
    out.banner(f"Equality in G_bind on {surface} phi={book.phi}")
    out.field("bound", bound)
    equal = gbind_equal(f, g, book, bound)
    out.field("equal", equal)
    return _exit_code(equal)


def _presentation(args: argparse.Namespace, settings: Settings, out: Reporter) -> int:
    out.banner("Presentation of the Goeritz group")
    relations = verify_relations(DEFAULT_REP)
    for i, check in enumerate(relations.checks, start=1):
        out.field(f"relation_{i}", check.relation)
        out.verdict(f"relation_{i}_holds", check.holds)

    r_action = verify_r_action(args.n, settings.kernel_bound)
    out.verdict("r_reversing", r_action.reversing_valid)
    for check in r_action.checks:
        out.verdict(f"r_action_{check.name}", check.holds)

    rng = random.Random(settings.seed)
    disagreements = 0
    inconclusive = 0
    for _ in range(PRESENTATION_SAMPLES):
        w = random_presentation_word(rng, 12)
        try:
            disagreements += not crosscheck_with_mcg(w, args.n, DEFAULT_REP, settings.kernel_bound)
        except InconclusiveError:
            inconclusive += 1
    out.field("crosscheck_samples", PRESENTATION_SAMPLES)
    out.field("crosscheck_disagreements", disagreements)
    out.field("crosscheck_inconclusive", inconclusive)
    passed = relations.all_hold and r_action.all_hold and not disagreements
    if not passed:
        out.verdict("verdict", False)
        return EXIT_NEGATIVE
    if inconclusive:
        out.verdict("verdict", None)
        return EXIT_INCONCLUSIVE
    out.verdict("verdict", True)
    return EXIT_OK


def cmd_example(args: argparse.Namespace, settings: Settings, out: Reporter) -> int:
    """prop61 / twist-formula / rigidity / binding for the genus-two example."""
    if args.n is None:
        args.n = settings.example_n
    if args.action == "prop61":
        return _presentation(args, settings, out)

    if args.action == "twist-formula":
        word = twisted_binding_word(args.u, args.v, args.n)
        out.banner(f"Twisted binding u={args.u} v={args.v} n={args.n}")
        out.field("word", word)
        out.field("GOF", is_gof_word(word))
        return EXIT_OK

    if args.action == "rigidity":
        budget = settings.crossing_budget
        certificate = rigidity_search(args.n, budget)
        out.banner(f"Rigidity search n={args.n}")
        out.field("budget", certificate.budget)
        out.field("box", certificate.box)
        out.field("explored", certificate.explored)
        out.field("doubly_gof", " ".join(f"({u},{v})" for u, v in certificate.doubly_gof))
        out.verdict("only_binding", certificate.only_binding)
        return _exit_code(certificate.only_binding)

    diagram = build_example_diagram(args.n)
    if args.output:
        args.output.write_text(format_planar(diagram))
        logger.info("Wrote planar diagram to %s", args.output)
    matches = readings_match_formula(args.n)
    out.banner(f"Example diagram n={args.n}")
    out.field("binding_alpha", cyclic_word(diagram, Side.ALPHA))
    out.field("binding_beta", cyclic_word(diagram, Side.BETA))
    out.verdict("correspondence", matches)
    return _exit_code(matches)


def cmd_planar(args: argparse.Namespace, settings: Settings, out: Reporter) -> int:
    """Read a planar diagram, apply cut twists, and report its words."""
    diagram = minimal_position(parse_planar(args.file.read_text()))
    for cut, power in args.twist or []:
        diagram = twist_along_cut(diagram, cut, power)
    if args.output:
        args.output.write_text(format_planar(diagram))
    out.banner(f"Planar curve {args.file}")
    out.field("alpha", cyclic_word(diagram, Side.ALPHA))
    out.field("beta", cyclic_word(diagram, Side.BETA))
    doubly = is_gof(diagram, Side.ALPHA) and is_gof(diagram, Side.BETA)
    out.field("GOF_alpha", is_gof(diagram, Side.ALPHA))
    out.field("GOF_beta", is_gof(diagram, Side.BETA))
    return _exit_code(doubly)


def cmd_suite(args: argparse.Namespace, settings: Settings, out: Reporter) -> int:
    """Run the acceptance suites and print a summary."""
    runner = SuiteRunner(settings)
    unknown = [name for name in args.names if name not in runner.names]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    report = runner.run_all(args.names or None)

    verdicts = {SuiteVerdict.PASS: True, SuiteVerdict.FAIL: False}
    for result in report.results:
        out.banner(f"Suite: {result.name} ({result.description})")
        out.field("cases", result.cases)
        out.field("failures", result.failures)
        out.field("inconclusive", result.inconclusive)
        out.field("seconds", f"{result.seconds:.2f}")
        out.verdict("verdict", verdicts.get(result.verdict))
        if args.verbose:
            for finding in result.findings:
                out.field("finding", finding)

    out.banner("SUMMARY")
    out.field("suites", report.total_suites)
    out.field("passed", report.passed)
    out.field("failed", report.failed)
    out.field("inconclusive", report.inconclusive)
    out.field("cases", report.total_cases)
    if report.failed:
        return EXIT_NEGATIVE
    return EXIT_INCONCLUSIVE if report.inconclusive else EXIT_OK


def _add_surface(parser: argparse.ArgumentParser, short: bool = False) -> None:
    genus, boundary = ("--g", "--b") if short else ("--genus", "--boundary")
    parser.add_argument(genus, dest="genus", type=int, default=1, help="Genus of the page")
    parser.add_argument(
        boundary, dest="boundary", type=int, default=1, help="Boundary components of the page"
    )
    parser.add_argument("--phi", default="", help="Monodromy twist word, e.g. 'td^2'")


def _twist_pair(text: str) -> tuple[int, int]:
    cut, _, power = text.partition(":")
    return int(cut), int(power)


def build_parser() -> argparse.ArgumentParser:
    """The argument parser of ``goeritz-ob``."""
    parser = argparse.ArgumentParser(
        prog="goeritz-ob",
        description="Goeritz groups of Heegaard splittings induced by open books",
    )
    parser.add_argument("--format", choices=["text", "structured"], help="Output format")
    parser.add_argument("--seed", type=int, help="Seed of randomized sweeps")
    parser.add_argument("--kernel-bound", type=int, help="Bound of the boundary-twist search")
    parser.add_argument("--log-level", type=str.upper, help="Root log level, e.g. INFO")
    sub = parser.add_subparsers(dest="command", required=True)

    words = sub.add_parser("words", help="Word operations")
    words.add_argument("op", choices=["reduce", "closure", "reflect", "invert", "gof"])
    words.add_argument("words", nargs="*", help="Words; read from stdin if omitted")
    words.set_defaults(handler=cmd_words)

    diagram = sub.add_parser("diagram", help="Heegaard diagram of an open book")
    _add_surface(diagram, short=True)
    diagram.add_argument("--output", "-o", type=Path, help="Write the diagram here")
    diagram.add_argument("--verify", type=Path, help="Check an exported diagram file")
    diagram.set_defaults(handler=cmd_diagram)

    goeritz = sub.add_parser("goeritz", help="Goeritz group checks")
    actions = goeritz.add_subparsers(dest="action", required=True)
    bind = actions.add_parser("check-bind", help="Membership of (f00, f11) in G_bind")
    _add_surface(bind)
    bind.add_argument("--f00", default="")
    bind.add_argument("--f11", default="")
    reverse = actions.add_parser("check-reverse", help="Check a reversing (f01, f10, iota)")
    _add_surface(reverse)
    reverse.add_argument("--f01", default="")
    reverse.add_argument("--f10", default="")
    reverse.add_argument("--iota", default="std")
    search = actions.add_parser("search-reverse", help="Search for a reversal solution")
    _add_surface(search)
    search.add_argument("--iota", default="std")
    search.add_argument("--max-len", type=int)
    equal = actions.add_parser("equal", help="Whether F(f) = F(g) in G_bind")
    _add_surface(equal)
    equal.add_argument("--f", default="")
    equal.add_argument("--g", default="")
    equal.add_argument("--bound", type=int)
    goeritz.set_defaults(handler=cmd_goeritz)

    example = sub.add_parser("example", help="The genus-two example")
    checks = example.add_subparsers(dest="action", required=True)
    presentation = checks.add_parser("prop61", help="Verify the presentation")
    presentation.add_argument("--n", type=int)
    formula = checks.add_parser("twist-formula", help="Twisted binding word by two routes")
    formula.add_argument("--u", type=int, default=0)
    formula.add_argument("--v", type=int, default=0)
    formula.add_argument("--n", type=int)
    rigidity = checks.add_parser("rigidity", help="Bounded search for doubly-GOF curves")
    rigidity.add_argument("--n", type=int)
    rigidity.add_argument("--budget", type=int)
    binding = checks.add_parser("binding", help="Example diagram and its correspondence")
    binding.add_argument("--n", type=int)
    binding.add_argument("--output", "-o", type=Path, help="Write the planar diagram here")
    example.set_defaults(handler=cmd_example)

    planar = sub.add_parser("planar", help="Planar curve diagrams")
    planar.add_argument("file", type=Path)
    planar.add_argument(
        "--twist", type=_twist_pair, action="append", help="CUT:POWER, applied in order"
    )
    planar.add_argument("--output", "-o", type=Path)
    planar.set_defaults(handler=cmd_planar)

    suite = sub.add_parser("suite", help="Run the acceptance suites")
    suite.add_argument("names", nargs="*", help="Suites to run; all if omitted")
    suite.add_argument("--verbose", "-v", action="store_true", help="List every finding")
    suite.set_defaults(handler=cmd_suite)
    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse arguments, run one command and return its exit code."""
    args = build_parser().parse_args(argv)
    bound = getattr(args, "bound", None)
    overrides = {
        "output_format": args.format,
        "seed": args.seed,
        "kernel_bound": args.kernel_bound if bound is None else bound,
        "search_max_len": getattr(args, "max_len", None),
        "crossing_budget": getattr(args, "budget", None),
        "log_level": args.log_level,
    }
    try:
        settings = Settings(**{k: v for k, v in overrides.items() if v is not None})
    except ValidationError as e:
        print(f"Error: invalid settings: {e}", file=sys.stderr)
        return EXIT_INPUT
    logging.basicConfig(level=settings.log_level)
    out = Reporter(settings.output_format)

    try:
        return args.handler(args, settings, out)
    except InconclusiveError as e:
        print(f"Inconclusive within bound {e.bound}: {e}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except WordParseError as e:
        print(f"Parse error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (GoeritzError, ValueError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT


def main():
    """Run the command line."""
    sys.exit(run())


if __name__ == "__main__":
    main()
