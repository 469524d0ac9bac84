"""Sparse multivariate Laurent polynomials over the two-element field.

A polynomial is stored as its support: the finite set of exponent vectors
whose coefficient is 1. Addition is symmetric difference of supports and
multiplication is convolution with pairwise cancellation.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    PolySyntaxError,
    UnknownVariableError,
    VariableMismatchError,
)

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

ExponentVector = tuple  # tuple[int, ...]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class VariableList(tuple):
    """Ordered, duplicate-free variable names; the order fixes coordinates."""

    def __new__(cls, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise ValueError("a variable list needs at least one name")
        for name in names:
            if not isinstance(name, str) or not _IDENT.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        return super().__new__(cls, names)

    @classmethod
    def parse(cls, text: str) -> "VariableList":
        """Build from a comma separated list such as ``"x,y,z"``."""
        return cls(part.strip() for part in text.split(","))

    def extended(self, *names: str) -> "VariableList":
        return VariableList(tuple(self) + names)

    def __repr__(self):
        return f"VariableList({list(self)!r})"


def _as_varlist(variables) -> VariableList:
    if isinstance(variables, VariableList):
        return variables
    if isinstance(variables, str):
        return VariableList.parse(variables)
    return VariableList(variables)


def _add_vec(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _check_exponents(support, k):
    for vec in support:
        if len(vec) != k:
            raise ValueError(f"exponent vector {vec} has length {len(vec)}, expected {k}")
        for e in vec:
            if e > INT64_MAX or e < INT64_MIN:
                raise OverflowError(f"exponent {e} does not fit in 64 bits")


@dataclass(frozen=True)
class LaurentPoly:
    """Element of F2[s_1^{+-1}, ..., s_k^{+-1}].

    Immutable and hashable. Supports ``+``, ``*`` and ``**`` with another
    polynomial over the same variable list.
    """

    variables: VariableList
    support: frozenset

    def __post_init__(self):
        variables = _as_varlist(self.variables)
        support = frozenset(tuple(int(e) for e in vec) for vec in self.support)
        _check_exponents(support, len(variables))
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "support", support)

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, variables) -> "LaurentPoly":
        return cls(variables, frozenset())

    @classmethod
    def one(cls, variables) -> "LaurentPoly":
        variables = _as_varlist(variables)
        return cls(variables, frozenset([(0,) * len(variables)]))

    @classmethod
    def monomial(cls, variables, exponents: Sequence[int]) -> "LaurentPoly":
        return cls(variables, frozenset([tuple(exponents)]))

    @classmethod
    def variable(cls, variables, name: str, power: int = 1) -> "LaurentPoly":
        variables = _as_varlist(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = power
        return cls(variables, frozenset([tuple(exps)]))

    @classmethod
    def from_terms(cls, variables, terms: Iterable[Sequence[int]]) -> "LaurentPoly":
        """Sum of monomials; repeated terms cancel in pairs."""
        acc = set()
        for t in terms:
            acc ^= {tuple(t)}
        return cls(variables, frozenset(acc))

    # -- basic queries ----------------------------------------------------
    @property
    def nvars(self) -> int:
        return len(self.variables)

    def is_zero(self) -> bool:
        return not self.support

    def is_monomial(self) -> bool:
        return len(self.support) == 1

    def terms(self) -> list:
        """Exponent vectors in canonical (lexicographic) order."""
        return sorted(self.support)

    def __len__(self):
        return len(self.support)

    def __bool__(self):
        return bool(self.support)

    def __iter__(self):
        return iter(self.terms())

    def __contains__(self, exps):
        return tuple(exps) in self.support

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"LaurentPoly({render(self)!r}, vars={list(self.variables)})"

    # -- ring operations --------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, int):
            if other % 2 == 0:
                return LaurentPoly.zero(self.variables)
            return LaurentPoly.one(self.variables)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if other.variables != self.variables:
            raise VariableMismatchError(
                f"variable lists differ: {list(self.variables)} vs {list(other.variables)}"
            )
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(self.variables, self.support ^ other.support)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self.support) < len(other.support):
            small, big = self.support, other.support
        else:
            small, big = other.support, self.support
        acc = set()
        for a in small:
            for b in big:
                acc ^= {_add_vec(a, b)}
        return LaurentPoly(self.variables, frozenset(acc))

    __rmul__ = __mul__

    def __pow__(self, n):
        return poly_pow(self, n)

    def shift(self, exps: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial with exponent vector ``exps``."""
        exps = tuple(exps)
        return LaurentPoly(self.variables, frozenset(_add_vec(a, exps) for a in self.support))

    def restrict(self, keep) -> "LaurentPoly":
        """Drop every term for which ``keep(exponents)`` is false."""
        return LaurentPoly(self.variables, frozenset(a for a in self.support if keep(a)))


def _require_same(p: LaurentPoly, q: LaurentPoly):
    if p.variables != q.variables:
        raise VariableMismatchError(
            f"variable lists differ: {list(p.variables)} vs {list(q.variables)}"
        )


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    _require_same(p, q)
    return p + q


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    _require_same(p, q)
    return p * q


def poly_pow(p: LaurentPoly, n: int) -> LaurentPoly:
    """``p**n`` by repeated squaring.

    Squaring is the Frobenius map in characteristic 2, so it only doubles
    every exponent vector.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"exponent must be a nonnegative integer, got {n!r}")
    result = LaurentPoly.one(p.variables)
    base = p
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = LaurentPoly(base.variables, frozenset(tuple(2 * e for e in a) for a in base.support))
    return result


def monomial_count(p: LaurentPoly) -> int:
    return len(p.support)


@dataclass(frozen=True)
class MonomialSubstitution:
    """Ring map sending each source variable to a monomial over ``target``."""

    source: VariableList
    target: VariableList
    images: tuple

    def __post_init__(self):
        source = _as_varlist(self.source)
        target = _as_varlist(self.target)
        images = tuple(tuple(int(e) for e in img) for img in self.images)
        if len(images) != len(source):
            raise ValueError(f"need {len(source)} images, got {len(images)}")
        _check_exponents(images, len(target))
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "images", images)

    @classmethod
    def from_mapping(cls, source, target, mapping: Mapping[str, str]) -> "MonomialSubstitution":
        """Images given as monomial text, e.g. ``{"xt": "x*y^-1"}``.

        Source variables missing from ``mapping`` must also occur in
        ``target`` and are sent to themselves.
        """
        source = _as_varlist(source)
        target = _as_varlist(target)
        unknown = set(mapping) - set(source)
        if unknown:
            raise UnknownVariableError(sorted(unknown)[0], source)
        images = []
        for name in source:
            if name in mapping:
                img = parse_poly(mapping[name], target)
                if not img.is_monomial():
                    raise ValueError(f"image of {name} is not a single monomial: {mapping[name]!r}")
                images.append(next(iter(img.support)))
            else:
                if name not in target:
                    raise ValueError(f"no image given for {name} and it is absent from the target")
                exps = [0] * len(target)
                exps[target.index(name)] = 1
                images.append(tuple(exps))
        return cls(source, target, tuple(images))

    def image_of(self, exps: Sequence[int]) -> tuple:
        out = [0] * len(self.target)
        for e, img in zip(exps, self.images):
            if e:
                for j, v in enumerate(img):
                    out[j] += e * v
        return tuple(out)

    def __call__(self, p: LaurentPoly) -> LaurentPoly:
        return substitute(p, self)


def substitute(p: LaurentPoly, sigma: MonomialSubstitution) -> LaurentPoly:
    if p.variables != sigma.source:
        raise VariableMismatchError(
            f"polynomial over {list(p.variables)} but substitution expects {list(sigma.source)}"
        )
    acc = set()
    for a in p.support:
        acc ^= {sigma.image_of(a)}
    return LaurentPoly(sigma.target, frozenset(acc))


def extend_with_pinch_variable(f: LaurentPoly, g: LaurentPoly, name: str = "s") -> LaurentPoly:
    """Return ``f + g*s^-1`` in the ring with one extra variable ``s``.

    ``f`` lands in the hyperplane ``{s = 0}`` and ``g*s^-1`` in ``{s = -1}``,
    so no cancellation can occur between the two parts.
    """
    _require_same(f, g)
    if name in f.variables:
        raise ValueError(f"variable {name!r} already present in {list(f.variables)}")
    variables = f.variables.extended(name)
    support = {a + (0,) for a in f.support} | {b + (-1,) for b in g.support}
    return LaurentPoly(variables, frozenset(support))


# -- text form ------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>-?\d+)|(?P<op>[+*^]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        tokens.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text, variables):
        self.tokens = _tokenize(text)
        self.i = 0
        self.variables = variables
        self.index = {name: j for j, name in enumerate(variables)}

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def poly(self):
        terms = [self.term()]
        while self.peek()[:2] == ("op", "+"):
            self.take()
            terms.append(self.term())
        kind, value, pos = self.peek()
        if kind != "end":
            raise PolySyntaxError(f"unexpected {value!r}", pos)
        return terms

    def term(self):
        exps = [0] * len(self.variables)
        self.factor(exps)
        while self.peek()[:2] == ("op", "*"):
            self.take()
            self.factor(exps)
        return tuple(exps)

    def factor(self, exps):
        kind, value, pos = self.take()
        if kind == "int":
            if value != "1":
                raise PolySyntaxError(f"only the constant 1 is allowed, got {value!r}", pos)
            return
        if kind != "ident":
            what = "end of input" if kind == "end" else repr(value)
            raise PolySyntaxError(f"expected a variable or 1, got {what}", pos)
        if value not in self.index:
            raise UnknownVariableError(value, self.variables)
        power = 1
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind2, value2, pos2 = self.take()
            if kind2 != "int":
                what = "end of input" if kind2 == "end" else repr(value2)
                raise PolySyntaxError(f"expected an integer exponent, got {what}", pos2)
            power = int(value2)
        exps[self.index[value]] += power


def parse_poly(text: str, variables) -> LaurentPoly:
    """Parse text such as ``"s12*s11^-1 + s11*s9^-1 + 1"``.

    Grammar::

        poly   := term ('+' term)*
        term   := factor ('*' factor)*
        factor := ident ('^' integer)? | '1'

    Repeated terms cancel in pairs. The bare text ``"0"`` denotes the zero
    polynomial so that rendering round-trips.
    """
    variables = _as_varlist(variables)
    if text.strip() == "0":
        return LaurentPoly.zero(variables)
    terms = _Parser(text, variables).poly()
    return LaurentPoly.from_terms(variables, terms)


def render(p: LaurentPoly) -> str:
    """Canonical text form; ``parse_poly(render(p), p.variables) == p``."""
    if not p.support:
        return "0"
    parts = []
    for exps in sorted(p.support, reverse=True):
        factors = []
        for name, e in zip(p.variables, exps):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        parts.append("*".join(factors) if factors else "1")
    return " + ".join(parts)
