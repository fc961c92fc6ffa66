import dataclasses
import logging
from concurrent.futures import ThreadPoolExecutor

from tc_algebra import confalg, operad, suites
from tc_algebra.confalg import ConformalElement
from tc_algebra.errors import ArityError
from tc_algebra.output_formatter import format_value
from tc_algebra.parser import CONF, Evaluator, make_call, parse
from tc_algebra.report import Report

logger = logging.getLogger(__name__)


def _echo(command, *words):
    """The command line a report answers, with every argument quoted as typed."""
    return " ".join([command] + [str(word) for word in words])


class AlgebraApp:
    """Runs one command against a session and returns its report."""

    def __init__(self, session, storage=None):
        """Initialize the app for a session.

        Args:
            session: The SessionConfig every expression is validated against.
            storage: Optional IReportStorage that receives every report.
        """
        self._session = session
        self._storage = storage
        self._evaluator = Evaluator(session)
        self._commands = {
            "simplify": (self._command_simplify, "Evaluate an expression and print its canonical form"),
            "eval": (self._command_eval, "Evaluate a conformal element at a polynomial in T"),
            "fprod": (self._command_fprod, "f-product of two conformal elements"),
            "nprod": (self._command_nprod, "n-th product of two conformal elements"),
            "locality": (self._command_locality, "Locality set of two conformal elements or distributions"),
            "res-nprod": (self._command_res_nprod, "Residue n-product of two formal distributions"),
            "check": (self._command_check, "Run an axiom suite"),
            "operad compose": (self._command_operad_compose, "Compose operad elements"),
            "operad act": (self._command_operad_act, "Act on an operad element by a permutation"),
            "dim": (self._command_dim, "Dimension of the arity-k component of an operad"),
        }

    @property
    def session(self):
        return self._session

    def commands(self):
        """Returns a dictionary command -> description, in declaration order."""
        return {name: description for name, (_, description) in self._commands.items()}

    def run(self, command, **options):
        """Runs one command and stores its report when a storage is configured.

        Raises:
            KeyError: For an unknown command.
            TcAlgebraError: When an argument cannot be parsed or evaluated.
        """
        handler = self._commands[command][0]
        logger.debug("running %s with %s", command, options)
        report = handler(**options)
        logger.info("%s: %d check(s), %s", report.command, len(report.checks),
                    "passed" if report.passed else "FAILED")
        if self._storage is not None:
            self._storage.add_report(report)
        return report

    def _parse(self, source):
        node = parse(source, self._session)
        logger.debug("parsed %r as %s (%s)", source, node.kind, node.lang)
        return node

    def _call(self, name, *sources):
        node = make_call(name, [self._parse(source) for source in sources], self._session)
        return self._evaluator.evaluate(node)

    def _command_simplify(self, expression):
        value = self._evaluator.evaluate(self._parse(expression))
        return Report(_echo("simplify", expression), value)

    def _command_eval(self, element, polynomial):
        return Report(_echo("eval", element, polynomial), self._call("eval", element, polynomial))

    def _command_fprod(self, left, right, polynomial):
        return Report(_echo("fprod", left, right, polynomial), self._call("fprod", left, right, polynomial))

    def _command_nprod(self, left, right, n):
        return Report(_echo("nprod", left, right, n), self._call("nprod", left, right, str(n)))

    def _command_locality(self, left, right):
        nodes = [self._parse(left), self._parse(right)]
        value = self._evaluator.evaluate(make_call("locality", nodes, self._session))
        report = Report(_echo("locality", left, right), value)
        if all(node.lang == CONF for node in nodes):
            a, b = (self._evaluator.evaluate(node) for node in nodes)
            if isinstance(a, ConformalElement) and isinstance(b, ConformalElement):
                report.checks.append(confalg.check_locality_bound(a, b))
        return report

    def _command_res_nprod(self, left, right, n):
        return Report(_echo("res-nprod", left, right, n), self._call("res", left, right, str(n)))

    def _run_suite(self, name, samples):
        return [dataclasses.replace(result, name=f"{name}/{result.name}")
                for result in suites.run_suite(name, self._session, samples)]

    def _command_check(self, suite, samples=None):
        """Runs the named suites; with jobs > 1 they run on a thread pool, merged in suite order."""
        names = suites.expand(suite)
        if suite == "all" and self._session.n_vars != 1:
            logger.warning("skipping suite C: n-products need n=1, the session has n=%d", self._session.n_vars)
            names.remove("C")
        jobs = min(self._session.jobs, len(names))
        if jobs > 1:
            logger.info("running %d suites on %d threads", len(names), jobs)
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                batches = list(pool.map(lambda name: self._run_suite(name, samples), names))
        else:
            batches = [self._run_suite(name, samples) for name in names]
        return Report(_echo("check", suite), checks=[result for batch in batches for result in batch])

    def _operad_element(self, text):
        return operad.parse_tree(text, self._session.variety)

    def _command_operad_compose(self, outer, inner):
        f = self._operad_element(outer)
        gs = [self._operad_element(text) for text in inner]
        if len(gs) != f.arity:
            raise ArityError(f"{outer!r} has arity {f.arity} but {len(gs)} element(s) were given")
        return Report(_echo("operad compose", *([outer] + list(inner))), operad.tree_compose(f, gs))

    def _command_operad_act(self, sigma, element):
        f = self._operad_element(element)
        return Report(_echo("operad act", format_value(sigma), element), operad.perm_on_operad(sigma, f))

    def _command_dim(self, arity, variety=None):
        variety = variety or self._session.variety
        return Report(_echo("dim", f"--variety {variety}", f"--arity {arity}"), operad.dim_CI(arity, variety))
