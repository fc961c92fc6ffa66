"""Partitions, permutations and the multilinear operads C_free and C_assoc.

A free basis element is a full binary tree whose leaves carry the labels
1..n once each: a leaf is an int and a product is a pair (left, right). In
C_assoc the brackets are forgotten and a basis element is the tuple of
labels read left to right.

Conventions: `Perm.compose(s, t)` is the function s . t (t first). A
permutation acts on an operad element by relabelling leaf i as s(i); this
is a left action for `compose`, so the rule (s t) f = t (s f) holds when the
product s t means "s first".
"""
from fractions import Fraction
from itertools import permutations, product
from math import factorial

from tc_algebra.errors import (ArityError, DimensionMismatchError, IndexOutOfRangeError, ParseError,
                               VarietyMismatchError)
from tc_algebra.report import check, combine, failed, passed
from tc_algebra.terms import Terms

FREE = "free"
ASSOC = "assoc"
VARIETIES = (FREE, ASSOC)


class Partition:
    """(m_1, ..., m_n), read as the surjection {1..m} -> {1..n} onto consecutive blocks."""

    __slots__ = ("_parts",)

    def __init__(self, parts):
        parts = tuple(int(m) for m in parts)
        if not parts or any(m < 1 for m in parts):
            raise IndexOutOfRangeError(f"partition parts must be positive: {list(parts)}")
        self._parts = parts

    @classmethod
    def identity(cls, n):
        return cls((1,) * n)

    @classmethod
    def trivial(cls, m):
        return cls((m,))

    @property
    def parts(self):
        return self._parts

    @property
    def n(self):
        return len(self._parts)

    @property
    def m(self):
        return sum(self._parts)

    def offset(self, i):
        """Number of elements before block i (1-based)."""
        return sum(self._parts[:i - 1])

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self._parts == other.parts

    def __hash__(self):
        return hash(self._parts)

    def __repr__(self):
        return f"Partition({list(self._parts)})"


class Perm:
    """A bijection of {1..m} in one-line notation: images[k-1] = s(k)."""

    __slots__ = ("_images",)

    def __init__(self, images):
        images = tuple(int(k) for k in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise IndexOutOfRangeError(f"not a permutation: {list(images)}")
        self._images = images

    @classmethod
    def identity(cls, m):
        return cls(range(1, m + 1))

    @classmethod
    def transposition(cls, i, j, m):
        images = list(range(1, m + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(images)

    @property
    def images(self):
        return self._images

    @property
    def size(self):
        return len(self._images)

    def __call__(self, k):
        if not 1 <= k <= len(self._images):
            raise IndexOutOfRangeError(f"{k} outside 1..{len(self._images)}")
        return self._images[k - 1]

    def compose(self, other):
        """self . other: apply other first."""
        if other.size != self.size:
            raise DimensionMismatchError(f"permutations of {self.size} and {other.size} points")
        return Perm(self(other(k)) for k in range(1, self.size + 1))

    def inverse(self):
        images = [0] * self.size
        for k, image in enumerate(self._images, start=1):
            images[image - 1] = k
        return Perm(images)

    def __eq__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        return self._images == other.images

    def __hash__(self):
        return hash(self._images)

    def __repr__(self):
        return f"Perm({list(self._images)})"


def all_perms(m):
    return [Perm(images) for images in permutations(range(1, m + 1))]


def all_partitions(m, n):
    """Every n-partition of m (compositions into positive parts)."""
    if n == 1:
        return [Partition((m,))] if m >= 1 else []
    return [Partition((first,) + rest.parts)
            for first in range(1, m - n + 2)
            for rest in all_partitions(m - first, n - 1)]


def index_to_pair(pi, k):
    if not 1 <= k <= pi.m:
        raise IndexOutOfRangeError(f"index {k} outside 1..{pi.m}")
    for i, size in enumerate(pi.parts, start=1):
        if k <= size:
            return i, k
        k -= size


def pair_to_index(pi, i, j):
    if not 1 <= i <= pi.n:
        raise IndexOutOfRangeError(f"block {i} outside 1..{pi.n}")
    if not 1 <= j <= pi.parts[i - 1]:
        raise IndexOutOfRangeError(f"position {j} outside 1..{pi.parts[i - 1]}")
    return pi.offset(i) + j


def sigma_on_partition(sigma, pi):
    """s pi = (m_{s^-1(1)}, ..., m_{s^-1(n)})."""
    if sigma.size != pi.n:
        raise DimensionMismatchError(f"permutation of {sigma.size} points on a {pi.n}-partition")
    inverse = sigma.inverse()
    return Partition(pi.parts[inverse(i) - 1] for i in range(1, pi.n + 1))


def block_composition(sigma, pi, taus):
    """s^pi(t_1, ..., t_n): k <-pi-> (i, j) goes to the index <-(s pi)-> (s(i), t_i(j))."""
    if sigma.size != pi.n or len(taus) != pi.n:
        raise DimensionMismatchError(f"{sigma.size}-permutation and {len(taus)} blocks for a {pi.n}-partition")
    for tau, size in zip(taus, pi.parts):
        if tau.size != size:
            raise DimensionMismatchError(f"block permutation of {tau.size} points for a block of {size}")
    target = sigma_on_partition(sigma, pi)
    images = []
    for k in range(1, pi.m + 1):
        i, j = index_to_pair(pi, k)
        images.append(pair_to_index(target, sigma(i), taus[i - 1](j)))
    return Perm(images)


def partition_compose(pi, tau):
    """pi tau: regroup the m parts of tau into n blocks of sizes m_1, ..., m_n."""
    if tau.n != pi.m:
        raise ArityError(f"{tau.n}-partition composed into a partition of {pi.m}")
    return Partition(sum(tau.parts[pi.offset(i):pi.offset(i) + size])
                     for i, size in enumerate(pi.parts, start=1))


def subpartition(pi, tau, i):
    """tau_i = (p_{i1}, ..., p_{i m_i}), the parts of tau inside block i of pi."""
    start = pi.offset(i)
    return Partition(tau.parts[start:start + pi.parts[i - 1]])


def leaves(tree):
    if isinstance(tree, int):
        return (tree,)
    return leaves(tree[0]) + leaves(tree[1])


def relabel(tree, mapping):
    if isinstance(tree, int):
        return mapping(tree)
    return relabel(tree[0], mapping), relabel(tree[1], mapping)


def substitute(tree, replacements):
    """Replace leaf i by replacements[i - 1]."""
    if isinstance(tree, int):
        return replacements[tree - 1]
    return substitute(tree[0], replacements), substitute(tree[1], replacements)


def tree_shapes(n):
    """Unlabelled full binary trees with n leaves; leaves are None."""
    if n == 1:
        return [None]
    return [(left, right)
            for k in range(1, n)
            for left in tree_shapes(k)
            for right in tree_shapes(n - k)]


def _fill(shape, labels):
    if shape is None:
        return next(labels)
    left = _fill(shape[0], labels)
    return left, _fill(shape[1], labels)


def _is_word(key):
    return isinstance(key, tuple) and all(isinstance(x, int) for x in key)


def all_trees(n):
    return [_fill(shape, iter(labels)) for shape in tree_shapes(n) for labels in permutations(range(1, n + 1))]


def all_words(n):
    return list(permutations(range(1, n + 1)))


class OperadElt(Terms):
    """A rational combination of basis trees (free) or words (assoc) of a fixed arity."""

    __slots__ = ("_variety", "_arity")

    def __init__(self, variety, arity, terms=None):
        if variety not in VARIETIES:
            raise VarietyMismatchError(f"unknown variety: {variety}")
        normalized = {}
        for key, c in (terms or {}).items():
            if variety == ASSOC and not _is_word(key):
                key = leaves(key)
            labels = key if variety == ASSOC else leaves(key)
            if sorted(labels) != list(range(1, arity + 1)):
                raise ArityError(f"{key} is not multilinear in x1..x{arity}")
            normalized[key] = normalized.get(key, 0) + c
        self._variety = variety
        self._arity = arity
        super().__init__(normalized)

    def _params(self):
        return (self._variety, self._arity)

    def _check_compatible(self, other):
        if isinstance(other, OperadElt) and other.variety != self._variety:
            raise VarietyMismatchError(f"{self._variety} vs {other.variety}")
        if isinstance(other, OperadElt) and other.arity != self._arity:
            raise ArityError(f"arity {self._arity} vs {other.arity}")
        super()._check_compatible(other)

    @property
    def variety(self):
        return self._variety

    @property
    def arity(self):
        return self._arity

    @classmethod
    def basis(cls, variety, tree):
        key = leaves(tree) if variety == ASSOC else tree
        return cls(variety, len(leaves(tree)), {key: 1})

    @classmethod
    def identity(cls, variety):
        return cls(variety, 1, {(1,) if variety == ASSOC else 1: 1})

    @classmethod
    def mu(cls, variety):
        return cls(variety, 2, {(1, 2): 1})

    def __mul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def sorted_items(self):
        return sorted(self.items(), key=lambda item: format_tree(item[0]))

    def __repr__(self):
        return f"OperadElt({self._variety!r}, {self._arity}, {dict(self.sorted_items())})"


def basis(n, variety):
    if variety == FREE:
        return [OperadElt(FREE, n, {tree: 1}) for tree in all_trees(n)]
    return [OperadElt(ASSOC, n, {word: 1}) for word in all_words(n)]


def _relabel_key(key, variety, mapping):
    if variety == ASSOC:
        return tuple(mapping(x) for x in key)
    return relabel(key, mapping)


def tree_compose(f, gs, pi=None):
    """Comp^pi(f, g_1, ..., g_n): substitute g_i for x_i, leaf j of g_i becoming x_{offset_i + j}."""
    if len(gs) != f.arity:
        raise ArityError(f"{len(gs)} arguments for an element of arity {f.arity}")
    inferred = Partition(g.arity for g in gs)
    if pi is not None and pi != inferred:
        raise ArityError(f"partition {list(pi.parts)} does not match argument arities {list(inferred.parts)}")
    for g in gs:
        if g.variety != f.variety:
            raise VarietyMismatchError(f"{f.variety} vs {g.variety}")
    variety = f.variety
    shifted = [[(_relabel_key(key, variety, lambda j, offset=inferred.offset(i): offset + j), c)
                for key, c in g.items()]
               for i, g in enumerate(gs, start=1)]
    terms = {}
    for outer, c in f.items():
        for choice in product(*shifted):
            keys = [key for key, _ in choice]
            coefficient = c
            for _, d in choice:
                coefficient *= d
            if variety == ASSOC:
                key = tuple(x for i in outer for x in keys[i - 1])
            else:
                key = substitute(outer, keys)
            terms[key] = terms.get(key, 0) + coefficient
    return OperadElt(variety, inferred.m, terms)


def perm_on_operad(sigma, f):
    """Relabel leaf i as s(i)."""
    if sigma.size != f.arity:
        raise DimensionMismatchError(f"permutation of {sigma.size} points on arity {f.arity}")
    return OperadElt(f.variety, f.arity, {_relabel_key(key, f.variety, sigma): c for key, c in f.items()})


def catalan(k):
    return factorial(2 * k) // (factorial(k + 1) * factorial(k))


def closed_form_dim(n, variety):
    return factorial(n) * (catalan(n - 1) if variety == FREE else 1)


def dim_CI(n, variety):
    """Dimension of C(n), counted by enumerating the basis."""
    if n < 1:
        raise IndexOutOfRangeError(f"arity must be >= 1, got {n}")
    if variety not in VARIETIES:
        raise VarietyMismatchError(f"unknown variety: {variety}")
    return len(all_trees(n)) if variety == FREE else len(all_words(n))


def check_A1(pi, tau, variety):
    """Comp^tau(Comp^pi(phi, chi), psi) == Comp^(pi tau)(phi, Comp^(tau_i)(chi_i, psi_i)) on all basis choices."""
    results = []
    for phi in basis(pi.n, variety):
        for chis in product(*(basis(m, variety) for m in pi.parts)):
            for psis in product(*(basis(p, variety) for p in tau.parts)):
                left = tree_compose(tree_compose(phi, list(chis), pi), list(psis), tau)
                inner = [tree_compose(chi, list(psis[pi.offset(i):pi.offset(i) + pi.parts[i - 1]]),
                                      subpartition(pi, tau, i))
                         for i, chi in enumerate(chis, start=1)]
                right = tree_compose(phi, inner, partition_compose(pi, tau))
                results.append(check("A1", left == right, f"phi={phi!r} chi={chis!r} psi={psis!r}"))
    return combine("A1", results)


def check_A2(n, variety):
    """Comp^id(f, id, ..., id) == Comp^eps(id, f) == f."""
    unit = OperadElt.identity(variety)
    results = []
    for f in basis(n, variety):
        results.append(check("A2", tree_compose(f, [unit] * n, Partition.identity(n)) == f
                             and tree_compose(unit, [f], Partition.trivial(n)) == f, repr(f)))
    return combine("A2", results)


def _equivar_sides(sigma, pi, taus, phi, psis, literal=True):
    n = pi.n
    inverse = sigma.inverse()
    if literal:
        args = [perm_on_operad(taus[inverse(i) - 1], psis[inverse(i) - 1]) for i in range(1, n + 1)]
    else:
        args = [perm_on_operad(taus[i - 1], psis[inverse(i) - 1]) for i in range(1, n + 1)]
    left = tree_compose(perm_on_operad(sigma, phi), args, sigma_on_partition(sigma, pi))
    right = perm_on_operad(block_composition(sigma, pi, taus), tree_compose(phi, list(psis), pi))
    return left == right


def check_A3(pi, variety):
    """Equivariance of composition over every s in S_n, t_i in S_{m_i} and basis phi, psi_i."""
    n = pi.n
    for sigma in all_perms(n):
        for taus in product(*(all_perms(m) for m in pi.parts)):
            for phi in basis(n, variety):
                for psis in product(*(basis(m, variety) for m in pi.parts)):
                    if _equivar_sides(sigma, pi, taus, phi, psis):
                        continue
                    other = _equivar_sides(sigma, pi, taus, phi, psis, literal=False)
                    return failed("A3", f"sigma={sigma!r} taus={taus!r} phi={phi!r} psi={psis!r}",
                                  f"literal reading fails; reading with t_i psi_(s^-1(i)) gives {other}")
    return passed("A3", f"partition {list(pi.parts)}")


def check_M3(n, variety):
    """(s t) f = t (s f) with s t meaning s first, for all s, t in S_n and basis f."""
    results = []
    for sigma in all_perms(n):
        for tau in all_perms(n):
            for f in basis(n, variety):
                results.append(check("M3", perm_on_operad(tau.compose(sigma), f)
                                     == perm_on_operad(tau, perm_on_operad(sigma, f)),
                                     f"sigma={sigma!r} tau={tau!r} f={f!r}"))
    return combine("M3", results)


def format_tree(key):
    """`(x1 x2) x3` for trees, `x1 x2 x3` for words."""
    if isinstance(key, int):
        return f"x{key}"
    if _is_word(key):
        return " ".join(f"x{x}" for x in key)
    parts = []
    for child in key:
        text = format_tree(child)
        parts.append(text if isinstance(child, int) else f"({text})")
    return " ".join(parts)


def _tokenize_tree(text):
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch in "()":
            tokens.append((ch, pos))
            pos += 1
        elif ch == "x":
            end = pos + 1
            while end < len(text) and text[end].isdigit():
                end += 1
            if end == pos + 1:
                raise ParseError("expected a variable index after 'x'", column=pos + 1)
            tokens.append((int(text[pos + 1:end]), pos))
            pos = end
        else:
            raise ParseError(f"unexpected character {ch!r} in a word", column=pos + 1)
    return tokens


def parse_tree(text, variety=FREE):
    """Parse `(x1 x2) x3`; juxtaposition of more than two factors is only allowed in assoc."""
    tokens = _tokenize_tree(text)
    pos = 0

    def group():
        nonlocal pos
        items = []
        while pos < len(tokens) and tokens[pos][0] != ")":
            token, column = tokens[pos]
            if token == "(":
                pos += 1
                items.append(group())
                if pos >= len(tokens) or tokens[pos][0] != ")":
                    raise ParseError("missing ')'", column=len(text) + 1)
                pos += 1
            else:
                items.append(token)
                pos += 1
        if not items:
            raise ParseError("empty word", column=pos + 1)
        if variety == FREE and len(items) > 2:
            raise ParseError("a free word needs brackets around every product of two factors", column=1)
        tree = items[0]
        for item in items[1:]:
            tree = (tree, item)
        return tree

    tree = group()
    if pos != len(tokens):
        raise ParseError("unbalanced ')'", column=tokens[pos][1] + 1)
    return OperadElt.basis(variety, tree)
