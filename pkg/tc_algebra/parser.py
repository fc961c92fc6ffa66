"""Expression language of the command line: tokenizer, parser, printer and evaluator.

Grammar, loosest binding first:

    expr   := dot (('+' | '-') dot)*
    dot    := tens ('.' tens)?
    tens   := term ('(x)' term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ('^' '-'? integer)?
    atom   := rational | variable | 'a' '[' expr (';' expr)? ']' | matrix
            | '[' expr ',' expr ']' | '{' expr ',' expr '}' | call | '(' expr ')'

Every node carries the sub-language its value lives in. Mixing sub-languages
that have no common meaning is refused while parsing.
"""
import re
from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction

from tc_algebra import confalg, fdist, hopf, linalg, structures, weyl
from tc_algebra import multiindex as mi
from tc_algebra.backends import make_backend
from tc_algebra.confalg import ConformalElement
from tc_algebra.errors import EvaluationError, ParseError, SubLanguageError, UnknownIdentifierError
from tc_algebra.fdist import FormalDistribution
from tc_algebra.hopf import DualPoly, HPoly, HTensor
from tc_algebra.laurent import LaurentPoly
from tc_algebra.output_formatter import format_rational
from tc_algebra.rings import make_ring
from tc_algebra.structures import PolyDerivation
from tc_algebra.weyl import HVector, MatWeyl, PolyMatrix, WeylElement

SCALAR = "scalar"
HOPF = "hopf"
WEYL = "weyl"
CONF = "conf"
DIST = "dist"
LIE = "lie"
ANY = "any"

Token = namedtuple("Token", ["kind", "text", "line", "column"])

_TOKEN_RE = re.compile(r"""
    (?P<space>[ \t\r]+)
  | (?P<newline>\n)
  | (?P<tensor>\(x\))
  | (?P<number>\d+(?:/\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*^.,;()\[\]{}])
""", re.VERBOSE)

_INDEXED = re.compile(r"^(T|t|p|q|d)([1-9][0-9]*)$")
_INDEXED_LANG = {"T": HOPF, "t": HOPF, "p": WEYL, "q": WEYL, "d": LIE}
_PLAIN_VARS = {"z": DIST, "t": DIST}

# name -> (argument sub-languages, result sub-language); None means "same as the arguments"
CALLS = {
    "fprod": ((CONF, CONF, HOPF), CONF),
    "xprod": ((CONF, CONF, HOPF), CONF),
    "nprod": ((CONF, CONF, SCALAR), CONF),
    "res": ((DIST, DIST, SCALAR), DIST),
    "eval": ((CONF, HOPF), WEYL),
    "locality": ((ANY, ANY), None),
    "S": ((HOPF,), HOPF),
    "delta": ((HOPF,), HOPF),
    "delta_iter": ((HOPF, SCALAR), HOPF),
    "augdeg": ((HOPF,), SCALAR),
    "eps": ((HOPF,), SCALAR),
    "pair": ((HOPF, HOPF), SCALAR),
    "phi": ((HOPF,), HOPF),
    "phi_inv": ((HOPF,), HOPF),
    "sigma": ((WEYL,), WEYL),
    "skew": ((WEYL,), WEYL),
    "sym": ((WEYL,), WEYL),
    "dq": ((WEYL, SCALAR), WEYL),
    "qdeg": ((WEYL,), SCALAR),
    "rep": ((WEYL, HOPF), HOPF),
    "ideal": ((WEYL, HOPF), WEYL),
    "wn": ((SCALAR, HOPF), WEYL),
    "ham": ((HOPF,), LIE),
    "div": ((LIE,), HOPF),
    "apply": ((LIE, HOPF), HOPF),
    "in_S": ((LIE,), SCALAR),
    "in_H": ((LIE,), SCALAR),
    "embed": ((CONF, SCALAR), CONF),
    "extend": ((CONF, SCALAR), CONF),
    "dz": ((DIST,), DIST),
}

_MUL_MIXES = {frozenset({HOPF, LIE}): LIE, frozenset({WEYL, DIST}): DIST}

_PRECEDENCE = {"add": 1, "sub": 1, "dot": 2, "tensor": 3, "mul": 4, "neg": 5, "pow": 6}
_ATOM = 7


@dataclass(frozen=True)
class Expr:
    """A syntax tree node; `value` holds literals, identifiers, exponents and call names."""

    kind: str
    lang: str
    children: tuple = ()
    value: object = None


def tokenize(source):
    """Split source text into tokens, ending with an 'end' token.

    Raises:
        ParseError: On a character outside the language.
    """
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(source):
        match = _TOKEN_RE.match(source, pos)
        if match is None:
            raise ParseError(f"unexpected character {source[pos]!r}", line, pos - line_start + 1)
        kind = match.lastgroup
        if kind == "newline":
            line, line_start = line + 1, match.end()
        elif kind != "space":
            tokens.append(Token(kind, match.group(), line, pos - line_start + 1))
        pos = match.end()
    tokens.append(Token("end", "", line, pos - line_start + 1))
    return tokens


def _merge(op, langs, token):
    specific = {lang for lang in langs if lang != SCALAR}
    if not specific:
        return SCALAR
    if len(specific) == 1:
        return specific.pop()
    if op == "mul" and frozenset(specific) in _MUL_MIXES:
        return _MUL_MIXES[frozenset(specific)]
    raise SubLanguageError(f"cannot combine {' and '.join(sorted(specific))} with '{token.text}'",
                           token.line, token.column)


class _Parser:

    def __init__(self, source, session):
        self._tokens = tokenize(source)
        self._pos = 0
        self._session = session

    def _peek(self, offset=0):
        return self._tokens[min(self._pos + offset, len(self._tokens) - 1)]

    def _next(self):
        token = self._peek()
        self._pos += 1
        return token

    def _at(self, text):
        token = self._peek()
        return token.kind in ("op", "tensor") and token.text == text

    def _expect(self, text):
        token = self._next()
        if token.text != text or token.kind not in ("op", "tensor"):
            found = token.text or "end of input"
            raise ParseError(f"expected '{text}', found '{found}'", token.line, token.column)
        return token

    def parse(self):
        if self._peek().kind == "end":
            token = self._peek()
            raise ParseError("empty expression", token.line, token.column)
        node = self._expr()
        token = self._peek()
        if token.kind != "end":
            raise ParseError(f"unexpected '{token.text}'", token.line, token.column)
        return node

    def _expr(self):
        node = self._dot()
        while self._at("+") or self._at("-"):
            token = self._next()
            right = self._dot()
            kind = "add" if token.text == "+" else "sub"
            node = Expr(kind, _merge(kind, (node.lang, right.lang), token), (node, right))
        return node

    def _dot(self):
        node = self._tens()
        if self._at("."):
            token = self._next()
            right = self._tens()
            if node.lang not in (SCALAR, HOPF) or right.lang not in (CONF, HOPF):
                raise SubLanguageError(f"'.' acts with a polynomial on a conformal element or a dual element, "
                                       f"got {node.lang} . {right.lang}", token.line, token.column)
            node = Expr("dot", right.lang, (node, right))
        return node

    def _tens(self):
        legs = [self._term()]
        token = self._peek()
        while self._at("(x)"):
            self._next()
            legs.append(self._term())
        if len(legs) == 1:
            return legs[0]
        lang = _merge("tensor", [leg.lang for leg in legs], token)
        if lang not in (SCALAR, HOPF):
            raise SubLanguageError(f"tensor legs must be polynomials in T, got {lang}", token.line, token.column)
        return Expr("tensor", HOPF, tuple(legs))

    def _term(self):
        node = self._factor()
        while self._at("*"):
            token = self._next()
            right = self._factor()
            node = Expr("mul", _merge("mul", (node.lang, right.lang), token), (node, right))
        return node

    def _factor(self):
        if self._at("-"):
            self._next()
            child = self._factor()
            return Expr("neg", child.lang, (child,))
        node = self._atom()
        if self._at("^"):
            self._next()
            sign = 1
            if self._at("-"):
                self._next()
                sign = -1
            token = self._next()
            if token.kind != "number" or "/" in token.text:
                raise ParseError("an exponent must be an integer", token.line, token.column)
            node = Expr("pow", node.lang, (node,), sign * int(token.text))
        return node

    def _atom(self):
        token = self._peek()
        if token.kind == "number":
            self._next()
            return Expr("number", SCALAR, (), Fraction(token.text))
        if token.kind == "ident":
            return self._identifier()
        if self._at("("):
            self._next()
            node = self._expr()
            self._expect(")")
            return node
        if self._at("["):
            if self._peek(1).kind == "op" and self._peek(1).text == "[":
                return self._matrix()
            return self._bracket()
        if self._at("{"):
            self._next()
            left = self._expr()
            self._expect(",")
            right = self._expr()
            self._expect("}")
            if _merge("poisson", (left.lang, right.lang), token) not in (SCALAR, HOPF):
                raise SubLanguageError("the Poisson bracket takes polynomials in T", token.line, token.column)
            return Expr("poisson", HOPF, (left, right))
        found = token.text or "end of input"
        raise ParseError(f"unexpected '{found}'", token.line, token.column)

    def _bracket(self):
        token = self._expect("[")
        left = self._expr()
        self._expect(",")
        right = self._expr()
        self._expect("]")
        lang = _merge("bracket", (left.lang, right.lang), token)
        if lang not in (SCALAR, WEYL, LIE):
            raise SubLanguageError(f"no commutator in the {lang} sub-language", token.line, token.column)
        return Expr("bracket", lang, (left, right))

    def _matrix(self):
        token = self._expect("[")
        rows = []
        while True:
            self._expect("[")
            entries = [self._expr()]
            while self._at(","):
                self._next()
                entries.append(self._expr())
            self._expect("]")
            rows.append(Expr("row", _merge("matrix", [e.lang for e in entries], token), tuple(entries)))
            if not self._at(","):
                break
            self._next()
        self._expect("]")
        if any(len(row.children) != len(rows) for row in rows):
            raise ParseError("a matrix must be square", token.line, token.column)
        lang = _merge("matrix", [row.lang for row in rows], token)
        if lang not in (SCALAR, WEYL, HOPF):
            raise SubLanguageError(f"matrix entries must be numbers, Weyl or T-polynomials, got {lang}",
                                   token.line, token.column)
        return Expr("matrix", lang, tuple(rows))

    def _identifier(self):
        token = self._next()
        name = token.text
        if name == "a" and self._at("["):
            return self._conformal(token)
        if name in CALLS and self._at("("):
            return self._call(token)
        match = _INDEXED.match(name)
        if match:
            prefix, index = match.group(1), int(match.group(2))
            if self._session is not None and index > self._session.n_vars:
                raise ParseError(f"{name} needs {index} variables, the session has n={self._session.n_vars}",
                                 token.line, token.column)
            return Expr("var", _INDEXED_LANG[prefix], (), name)
        if name in _PLAIN_VARS:
            return Expr("var", _PLAIN_VARS[name], (), name)
        raise UnknownIdentifierError(f"unknown identifier '{name}'", token.line, token.column)

    def _conformal(self, token):
        self._expect("[")
        poly = self._expr()
        children = (poly,)
        if self._at(";"):
            self._next()
            matrix = self._expr()
            if matrix.lang != SCALAR:
                raise SubLanguageError("the coefficient of a[...] must be a rational matrix",
                                       token.line, token.column)
            children = (poly, matrix)
        self._expect("]")
        if poly.lang not in (SCALAR, WEYL):
            raise SubLanguageError(f"a[...] takes a polynomial in p, got {poly.lang}", token.line, token.column)
        return Expr("conf", CONF, children)

    def _call(self, token):
        name = token.text
        self._expect("(")
        args = [self._expr()]
        while self._at(","):
            self._next()
            args.append(self._expr())
        self._expect(")")
        return make_call(name, args, self._session, token)


def make_call(name, args, session=None, token=None):
    """Build a call node, checking its arity and the sub-language of every argument.

    Raises:
        UnknownIdentifierError: For a name that is not a call form.
        ParseError: On a wrong number of arguments.
        SubLanguageError: On an argument from the wrong sub-language.
    """
    line, column = (token.line, token.column) if token is not None else (None, None)
    if name not in CALLS:
        raise UnknownIdentifierError(f"unknown call '{name}'", line, column)
    params, result = CALLS[name]
    if len(args) != len(params):
        raise ParseError(f"{name} takes {len(params)} argument(s), got {len(args)}", line, column)
    for position, (arg, param) in enumerate(zip(args, params), start=1):
        if param == ANY or arg.lang == param or (arg.lang == SCALAR and param in (HOPF, WEYL, DIST)):
            continue
        raise SubLanguageError(f"argument {position} of {name} must be {param}, got {arg.lang}", line, column)
    if result is None:
        result = _merge(name, [arg.lang for arg in args], token or Token("ident", name, None, None))
    elif name == "eval" and session is not None and session.backend == "cur":
        result = HOPF
    return Expr("call", result, tuple(args), name)


def parse(source, session=None):
    """Parse an expression, validating variable indices against `session` when given.

    Raises:
        ParseError: On a syntax error, with line and column.
        UnknownIdentifierError: On a name outside every sub-language.
        SubLanguageError: When sub-expressions of different sub-languages are combined.
    """
    return _Parser(source, session).parse()


def _wrap(node, minimum):
    text = format_expr(node)
    return f"({text})" if _PRECEDENCE.get(node.kind, _ATOM) < minimum else text


def format_expr(node):
    """Canonical text of a syntax tree; parse(format_expr(e)) == e."""
    kind = node.kind
    if kind == "number":
        return format_rational(node.value)
    if kind == "var":
        return node.value
    if kind in ("add", "sub"):
        sign = "+" if kind == "add" else "-"
        return f"{_wrap(node.children[0], 1)} {sign} {_wrap(node.children[1], 2)}"
    if kind == "dot":
        return f"{_wrap(node.children[0], 3)} . {_wrap(node.children[1], 3)}"
    if kind == "tensor":
        return " (x) ".join(_wrap(leg, 4) for leg in node.children)
    if kind == "mul":
        return f"{_wrap(node.children[0], 4)}*{_wrap(node.children[1], 5)}"
    if kind == "neg":
        return "-" + _wrap(node.children[0], 5)
    if kind == "pow":
        return f"{_wrap(node.children[0], _ATOM)}^{node.value}"
    if kind == "conf":
        inner = format_expr(node.children[0])
        if len(node.children) > 1:
            inner += "; " + format_expr(node.children[1])
        return f"a[{inner}]"
    if kind == "matrix":
        return "[" + ", ".join(format_expr(row) for row in node.children) + "]"
    if kind == "row":
        return "[" + ", ".join(format_expr(entry) for entry in node.children) + "]"
    if kind == "call":
        return f"{node.value}(" + ", ".join(format_expr(arg) for arg in node.children) + ")"
    if kind == "bracket":
        left, right = (format_expr(child) for child in node.children)
        if left.startswith("["):
            left = f"({left})"
        return f"[{left}, {right}]"
    if kind == "poisson":
        left, right = (format_expr(child) for child in node.children)
        return "{" + f"{left}, {right}" + "}"
    raise ValueError(f"unknown node kind: {kind}")


def _is_rational(x):
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def _is_matrix(x):
    return isinstance(x, tuple) and bool(x) and all(isinstance(row, tuple) for row in x)


def _size(x):
    if _is_matrix(x):
        return linalg.size_of(x)
    return x.size if isinstance(x, (MatWeyl, PolyMatrix)) else 1


class Evaluator:
    """Evaluates syntax trees in the algebras a session fixes."""

    def __init__(self, session):
        self._session = session
        self._n = session.n_vars
        self._backend = make_backend(session.backend, session.n_vars, session.matrix_size)
        self._ring = make_ring(session.ring, session.n_vars, session.matrix_size)

    @property
    def backend(self):
        return self._backend

    @property
    def ring(self):
        return self._ring

    def evaluate(self, node):
        try:
            return getattr(self, f"_eval_{node.kind}")(node)
        except (TypeError, ValueError, ZeroDivisionError) as error:
            raise EvaluationError(f"cannot evaluate {format_expr(node)}: {error}") from error

    # coercions

    def _hpoly(self, x):
        if _is_rational(x):
            return HPoly.constant(x, self._n)
        if isinstance(x, HPoly):
            return x
        raise EvaluationError(f"expected a polynomial in T, got {type(x).__name__}")

    def _dual(self, x):
        if _is_rational(x):
            return DualPoly(self._n, {mi.zero(self._n): x})
        if isinstance(x, DualPoly):
            return x
        if isinstance(x, HPoly):
            return hopf.hpoly_to_dual(x)
        raise EvaluationError(f"expected an element of H*, got {type(x).__name__}")

    def _weyl(self, x):
        if _is_rational(x):
            return WeylElement.constant(x, self._n)
        if isinstance(x, (WeylElement, MatWeyl)):
            return x
        raise EvaluationError(f"expected a Weyl element, got {type(x).__name__}")

    def _weyl_or_matrix(self, x):
        if _is_matrix(x):
            return MatWeyl.from_scalar_matrix(x, WeylElement.constant(1, self._n))
        return self._weyl(x)

    def _poly_matrix(self, x, size):
        if _is_matrix(x):
            return PolyMatrix.from_scalar_matrix(x, HPoly.constant(1, self._n))
        if isinstance(x, PolyMatrix):
            return x
        return PolyMatrix.scalar(self._hpoly(x), size)

    def _index(self, x):
        if not _is_rational(x) or Fraction(x).denominator != 1 or x < 0:
            raise EvaluationError(f"expected a non-negative integer, got {x}")
        return int(x)

    def _ring_element(self, x):
        ring = self._ring
        if _is_rational(x):
            return ring.from_rational(x)
        if ring.contains(x):
            return x
        raise EvaluationError(f"{type(x).__name__} is not an element of the {ring.name} coefficient ring")

    def _lift(self, x, other):
        """Bring a rational matrix or a scalar next to a matrix over A_n or H."""
        if _is_matrix(x):
            if isinstance(other, (WeylElement, MatWeyl)):
                return MatWeyl.from_scalar_matrix(x, WeylElement.constant(1, self._n))
            if isinstance(other, (HPoly, PolyMatrix)):
                return PolyMatrix.from_scalar_matrix(x, HPoly.constant(1, self._n))
        if isinstance(x, WeylElement) and isinstance(other, MatWeyl):
            return MatWeyl.scalar(x, other.size)
        if isinstance(x, HPoly) and isinstance(other, PolyMatrix):
            return PolyMatrix.scalar(x, other.size)
        return x

    # arithmetic

    def add(self, x, y):
        if _is_rational(x) and _is_rational(y):
            return Fraction(x) + Fraction(y)
        if isinstance(x, FormalDistribution) or isinstance(y, FormalDistribution):
            return self._distribution(x) + self._distribution(y)
        if _is_matrix(x) and _is_matrix(y):
            return linalg.add(x, y)
        if _is_matrix(x) and _is_rational(y):
            return linalg.add(x, linalg.scalar(y, linalg.size_of(x)))
        if _is_rational(x) and _is_matrix(y):
            return linalg.add(linalg.scalar(x, linalg.size_of(y)), y)
        x, y = self._lift(x, y), self._lift(y, x)
        return x + y

    def neg(self, x):
        return linalg.neg(x) if _is_matrix(x) else -x

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        if _is_rational(x) and _is_rational(y):
            return Fraction(x) * Fraction(y)
        if isinstance(x, FormalDistribution) or isinstance(y, FormalDistribution):
            return self._mul_distribution(x, y)
        if isinstance(x, (ConformalElement, PolyDerivation)) and _is_rational(y):
            return x.scale(y)
        if _is_rational(x) and isinstance(y, (ConformalElement, PolyDerivation)):
            return y.scale(x)
        if isinstance(y, PolyDerivation) and isinstance(x, HPoly):
            return PolyDerivation(x * f for f in y.components)
        if isinstance(x, PolyDerivation) and isinstance(y, HPoly):
            return PolyDerivation(f * y for f in x.components)
        if _is_matrix(x) and _is_matrix(y):
            return linalg.mul(x, y)
        if _is_matrix(x) and _is_rational(y):
            return linalg.scale(x, y)
        if _is_rational(x) and _is_matrix(y):
            return linalg.scale(y, x)
        if isinstance(x, (ConformalElement, PolyDerivation)) or isinstance(y, (ConformalElement, PolyDerivation)):
            raise EvaluationError(f"cannot multiply {type(x).__name__} by {type(y).__name__}")
        x, y = self._lift(x, y), self._lift(y, x)
        return x * y

    def power(self, x, k):
        if _is_rational(x):
            return Fraction(x) ** k
        if isinstance(x, LaurentPoly):
            return x ** k
        if isinstance(x, FormalDistribution) and len(x.coeffs) == 1:
            (e, c), = x.items()
            if self._ring.equal(c, self._ring.one()):
                return FormalDistribution.monomial(self._ring, e * k, c)
        if k < 0:
            raise EvaluationError("negative powers exist only for z and t")
        if isinstance(x, (HPoly, WeylElement)):
            return x ** k
        result = Fraction(1)
        for _ in range(k):
            result = self.mul(result, x)
        return result

    def _distribution(self, x):
        if isinstance(x, FormalDistribution):
            return x
        return FormalDistribution.monomial(self._ring, 0, self._ring_element(x))

    def _mul_distribution(self, x, y):
        ring = self._ring
        if isinstance(x, FormalDistribution) and isinstance(y, FormalDistribution):
            coeffs = {}
            for j, a in x.items():
                for k, b in y.items():
                    term = ring.mul(a, b)
                    coeffs[j + k] = ring.add(coeffs[j + k], term) if j + k in coeffs else term
            return FormalDistribution(ring, coeffs)
        if isinstance(x, FormalDistribution):
            r = self._ring_element(y)
            return FormalDistribution(ring, {k: ring.mul(a, r) for k, a in x.items()})
        r = self._ring_element(x)
        return FormalDistribution(ring, {k: ring.mul(r, b) for k, b in y.items()})

    # node kinds

    def _eval_number(self, node):
        return node.value

    def _eval_var(self, node):
        name, n = node.value, self._n
        if name == "z":
            return FormalDistribution.monomial(self._ring, 1, self._ring.one())
        if name == "t":
            return LaurentPoly.monomial(1)
        prefix, index = _INDEXED.match(name).groups()
        index = int(index)
        if prefix == "T":
            return HPoly.variable(index, n)
        if prefix == "t":
            return DualPoly.t(mi.unit(index, n))
        if prefix == "p":
            return WeylElement.p(index, n)
        if prefix == "q":
            return WeylElement.q(index, n)
        return PolyDerivation.partial(index, n)

    def _eval_add(self, node):
        return self.add(*(self.evaluate(child) for child in node.children))

    def _eval_sub(self, node):
        return self.sub(*(self.evaluate(child) for child in node.children))

    def _eval_mul(self, node):
        return self.mul(*(self.evaluate(child) for child in node.children))

    def _eval_neg(self, node):
        return self.neg(self.evaluate(node.children[0]))

    def _eval_pow(self, node):
        return self.power(self.evaluate(node.children[0]), node.value)

    def _eval_dot(self, node):
        left, right = (self.evaluate(child) for child in node.children)
        if isinstance(right, ConformalElement):
            return confalg.hpoly_action(self._hpoly(left), right)
        if isinstance(left, DualPoly):
            return hopf.dual_h_action(left, self._hpoly(right))
        raise EvaluationError("'.' needs a polynomial acting on a conformal element, or t^lambda . h")

    def _eval_tensor(self, node):
        return HTensor.pure(*(self._hpoly(self.evaluate(leg)) for leg in node.children))

    def _eval_matrix(self, node):
        rows = [[self.evaluate(entry) for entry in row.children] for row in node.children]
        entries = [x for row in rows for x in row]
        if all(_is_rational(x) for x in entries):
            return linalg.from_rows(rows)
        if any(isinstance(x, HPoly) for x in entries):
            return PolyMatrix(self._n, [[self._hpoly(x) for x in row] for row in rows])
        return MatWeyl(self._n, [[self._weyl(x) for x in row] for row in rows])

    def _eval_conf(self, node):
        backend = self._backend
        poly = self.evaluate(node.children[0])
        if len(node.children) > 1:
            matrix = self.evaluate(node.children[1])
            matrix = linalg.scalar(matrix, backend.size) if _is_rational(matrix) else matrix
            if not _is_matrix(matrix):
                raise EvaluationError("the coefficient of a[...] must be a rational matrix")
        else:
            matrix = linalg.identity(backend.size)
        poly = self._weyl(poly)
        if isinstance(poly, MatWeyl) or not poly.is_q_free():
            raise EvaluationError("a[...] takes a polynomial in p alone")
        result = ConformalElement.zero(backend)
        for (beta, _), c in poly.items():
            result = result + ConformalElement.basic(backend, beta=beta, matrix=linalg.scale(matrix, c))
        return result

    def _eval_bracket(self, node):
        left, right = (self.evaluate(child) for child in node.children)
        if isinstance(left, PolyDerivation) and isinstance(right, PolyDerivation):
            return structures.der_bracket(left, right)
        return self.sub(self.mul(left, right), self.mul(right, left))

    def _eval_poisson(self, node):
        left, right = (self._hpoly(self.evaluate(child)) for child in node.children)
        return structures.poisson(left, right)

    def _eval_call(self, node):
        args = [self.evaluate(child) for child in node.children]
        return getattr(self, f"_call_{node.value}")(*args)

    def _unwrap(self, value):
        if self._backend.size == 1 and isinstance(value, (MatWeyl, PolyMatrix)):
            return value.entry(0, 0)
        return value

    def _call_fprod(self, a, b, f):
        return confalg.fproduct(a, b, self._hpoly(f))

    def _call_xprod(self, a, b, x):
        return confalg.x_product(a, b, self._dual(x))

    def _call_nprod(self, a, b, k):
        return confalg.nproduct(a, b, self._index(k))

    def _call_res(self, a, b, k):
        return fdist.nproduct_res(self._distribution(a), self._distribution(b), self._index(k))

    def _call_eval(self, c, f):
        return self._unwrap(confalg.evaluate(c, self._hpoly(f)))

    def _call_locality(self, a, b):
        if isinstance(a, ConformalElement) and isinstance(b, ConformalElement):
            return confalg.locality_set(a, b)
        if isinstance(a, FormalDistribution) or isinstance(b, FormalDistribution):
            return fdist.locality_test(self._distribution(a), self._distribution(b))
        raise EvaluationError("locality takes two conformal elements or two distributions")

    def _call_S(self, f):
        return hopf.antipode(self._hpoly(f))

    def _call_delta(self, f):
        return hopf.coproduct(self._hpoly(f))

    def _call_delta_iter(self, f, k):
        return hopf.iterated_coproduct(self._hpoly(f), self._index(k))

    def _call_augdeg(self, f):
        return hopf.aug_degree(self._hpoly(f))

    def _call_eps(self, f):
        return hopf.counit(self._hpoly(f))

    def _call_pair(self, x, f):
        return hopf.pairing(self._dual(x), self._hpoly(f))

    def _call_phi(self, u):
        return hopf.phi(u)

    def _call_phi_inv(self, u):
        return hopf.phi_inv(u)

    def _call_sigma(self, a):
        return weyl.involution_sigma(self._weyl(a))

    def _call_skew(self, a):
        return structures.skew_part(self._weyl(a))

    def _call_sym(self, a):
        return structures.sym_part(self._weyl(a))

    def _call_dq(self, a, i):
        return weyl.weyl_derivation(self._weyl_or_matrix(a), self._index(i))

    def _call_qdeg(self, a):
        return weyl.q_adic_degree(self._weyl_or_matrix(a))

    def _call_rep(self, a, v):
        """A matrix over A_n acts on each column of a polynomial matrix; a scalar element also on one polynomial."""
        a = self._weyl_or_matrix(a)
        if _is_matrix(v) or isinstance(v, PolyMatrix):
            v = self._poly_matrix(v, _size(v))
            columns = [weyl.rep_apply(a, HVector(self._n, [row[j] for row in v.rows])) for j in range(v.size)]
            return PolyMatrix(self._n, [[column.entries[i] for column in columns] for i in range(v.size)])
        if isinstance(a, MatWeyl):
            raise EvaluationError("a matrix over A_n acts on a matrix of polynomials, one column at a time")
        return weyl.rep_apply(a, HVector(self._n, [self._hpoly(v)])).entries[0]

    def _call_ideal(self, m, q):
        m = self._weyl_or_matrix(m)
        if isinstance(m, WeylElement):
            m = MatWeyl.scalar(m, _size(q))
        return weyl.ideal_element(m, self._poly_matrix(q, m.size))

    def _call_wn(self, i, f):
        """p^alpha q_i extended linearly over the monomials T^alpha of f."""
        i = self._index(i)
        result = WeylElement(self._n)
        for alpha, c in self._hpoly(f).items():
            result = result + structures.wn_basic_map(i, alpha).scale(c)
        return result

    def _call_ham(self, f):
        return structures.hamiltonian_field(self._hpoly(f))

    def _call_div(self, d):
        return structures.divergence(d)

    def _call_apply(self, d, f):
        return structures.der_apply(d, self._hpoly(f))

    def _call_in_S(self, d):
        return structures.is_in_Sn(d)

    def _call_in_H(self, d):
        return structures.is_in_Hn(d)

    def _call_embed(self, a, size):
        return structures.matrix_tc_embed(a, self._index(size))

    def _call_extend(self, a, n):
        return structures.poly_extension(a, self._index(n))

    def _call_dz(self, a):
        return fdist.derivative_z(self._distribution(a))


def evaluate(node, session):
    """The value of a syntax tree in the algebras fixed by `session`."""
    return Evaluator(session).evaluate(node)
