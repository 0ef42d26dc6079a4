"""Sparse multivariate polynomials over exact rationals, with monomial orders.

Monomials are exponent tuples tied to an ordered :class:`VariableContext`;
polynomials keep their terms sorted descending under degrevlex so equal values
have identical representations.  Earlier context names have higher priority in
every order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import SpecParseError

# -- monomial helpers (exponent tuples) -------------------------------------


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True when a divides b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b, a):
    """Quotient b / a; caller guarantees divisibility."""
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(m):
    return sum(m)


def weighted_degree(m, weights):
    """Total degree with one positive weight per variable."""
    if len(weights) != len(m):
        raise ValueError("one weight per variable required")
    return sum(e * w for e, w in zip(m, weights))


class MonomialOrder:
    """Total multiplicative order on monomials: degrevlex or lex."""

    __slots__ = ("kind",)

    def __init__(self, kind: str):
        if kind not in ("degrevlex", "lex"):
            raise ValueError(f"unknown monomial order {kind!r}")
        object.__setattr__(self, "kind", kind)

    def __setattr__(self, name, value):
        raise AttributeError("MonomialOrder is immutable")

    def key(self, m):
        """Sort key: bigger key means bigger monomial."""
        if self.kind == "degrevlex":
            return (sum(m), tuple(-e for e in reversed(m)))
        return tuple(m)

    def neg_key(self, m):
        """Key whose ascending order is the descending monomial order (for heaps)."""
        if self.kind == "degrevlex":
            return (-sum(m), tuple(reversed(m)))
        return tuple(-e for e in m)

    def compare(self, m1, m2) -> int:
        """-1, 0 or 1 as m1 <, =, > m2."""
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.kind == other.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return f"MonomialOrder({self.kind!r})"


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


# -- contexts and polynomials ------------------------------------------------


@dataclass(frozen=True)
class VariableContext:
    """Ordered, named variables; every polynomial pins its context."""

    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        for name in self.names:
            if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", name):
                raise ValueError(f"bad variable name {name!r}")

    @cached_property
    def _index(self):
        return {name: i for i, name in enumerate(self.names)}

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: Fraction(c)})

    def variable(self, name: str, power: int = 1) -> "Polynomial":
        exps = [0] * self.nvars
        exps[self.index(name)] = power
        return Polynomial(self, {tuple(exps): Fraction(1)})

    def poly(self, mapping) -> "Polynomial":
        return Polynomial(self, mapping)

    def parse(self, text: str) -> "Polynomial":
        return _parse_polynomial(self, text)


class Polynomial:
    """Immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: VariableContext, mapping):
        cleaned = {}
        for mono, coeff in dict(mapping).items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            if len(mono) != ctx.nvars:
                raise ValueError("monomial length does not match context")
            cleaned[tuple(mono)] = coeff
        terms = tuple(sorted(cleaned.items(), key=lambda t: DEGREVLEX.key(t[0]), reverse=True))
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- queries -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Maximal total degree, -1 for the zero polynomial."""
        return max((mono_degree(m) for m, _ in self.terms), default=-1)

    def leading_term(self, order: MonomialOrder = DEGREVLEX):
        """(coefficient, monomial) of the maximal term under order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        if order == DEGREVLEX:
            m, c = self.terms[0]
        else:
            m, c = max(self.terms, key=lambda t: order.key(t[0]))
        return c, m

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX):
        return self.leading_term(order)[1]

    def homogeneous_degree(self, weights=None):
        """Common (weighted) degree of all terms, or None if mixed.

        The zero polynomial counts as homogeneous of degree 0.
        """
        if weights is None:
            weights = (1,) * self.ctx.nvars
        degrees = {weighted_degree(m, weights) for m, _ in self.terms}
        if not degrees:
            return 0
        if len(degrees) > 1:
            return None
        return degrees.pop()

    def is_homogeneous(self, weights=None) -> bool:
        return self.homogeneous_degree(weights) is not None

    def coefficient(self, mono) -> Fraction:
        for m, c in self.terms:
            if m == mono:
                return c
        return Fraction(0)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ctx != self.ctx:
                raise ValueError("polynomials live in different variable contexts")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = dict(self.terms)
        for m, c in o.terms:
            acc[m] = acc.get(m, Fraction(0)) + c
        return Polynomial(self.ctx, acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ctx, {m: -c for m, c in self.terms})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = {}
        for m1, c1 in self.terms:
            for m2, c2 in o.terms:
                m = mono_mul(m1, m2)
                acc[m] = acc.get(m, Fraction(0)) + c1 * c2
        return Polynomial(self.ctx, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ctx.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self.ctx, {m: cc * c for m, cc in self.terms})

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        lc, _ = self.leading_term(order)
        return self.scale(Fraction(1) / lc)

    # -- comparison / display --------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx, self.terms))

    def render(self, order: MonomialOrder = DEGREVLEX) -> str:
        """Text form: terms joined by +/-, '^' powers, '*' between factors."""
        if not self.terms:
            return "0"
        terms = self.terms
        if order != DEGREVLEX:
            terms = sorted(terms, key=lambda t: order.key(t[0]), reverse=True)
        parts = []
        for mono, coeff in terms:
            factors = []
            for name, e in zip(self.ctx.names, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"<poly {self.render()}>"


# -- text parsing -------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[\^*/+-]))")


def _tokenize(text: str):
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:].strip()
            if not rest:
                break
            raise SpecParseError(f"bad polynomial syntax near {rest[:20]!r}")
        if m.group("num") is not None:
            tokens.append(("num", int(m.group("num"))))
        elif m.group("name") is not None:
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    return tokens


def _parse_polynomial(ctx: VariableContext, text: str) -> Polynomial:
    """Parse the term syntax: '*' optional, coefficients integer or a/b."""
    tokens = _tokenize(text)
    if not tokens:
        raise SpecParseError("empty polynomial text")
    acc: dict = {}
    i = 0
    n = len(tokens)

    def term_done(coeff, exps):
        mono = tuple(exps)
        acc[mono] = acc.get(mono, Fraction(0)) + coeff

    while i < n:
        sign = Fraction(1)
        while i < n and tokens[i] == ("op", "+") or i < n and tokens[i] == ("op", "-"):
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise SpecParseError("dangling sign in polynomial text")
        coeff = sign
        exps = [0] * ctx.nvars
        saw_factor = False
        while i < n:
            kind, value = tokens[i]
            if kind == "num":
                numerator = value
                i += 1
                if i < n and tokens[i] == ("op", "/"):
                    i += 1
                    if i >= n or tokens[i][0] != "num":
                        raise SpecParseError("expected denominator after '/'")
                    coeff *= Fraction(numerator, tokens[i][1])
                    i += 1
                else:
                    coeff *= numerator
                saw_factor = True
            elif kind == "name":
                idx = ctx._index.get(value)
                if idx is None:
                    raise SpecParseError(f"unknown variable {value!r}")
                power = 1
                i += 1
                if i < n and tokens[i] == ("op", "^"):
                    i += 1
                    if i >= n or tokens[i][0] != "num":
                        raise SpecParseError("expected integer exponent after '^'")
                    power = tokens[i][1]
                    i += 1
                exps[idx] += power
                saw_factor = True
            else:
                break
            if i < n and tokens[i] == ("op", "*"):
                i += 1
                if i >= n or tokens[i][0] == "op" and tokens[i][1] in "+-*/^":
                    raise SpecParseError("dangling '*' in polynomial text")
        if not saw_factor:
            raise SpecParseError("empty term in polynomial text")
        term_done(coeff, exps)
        if i < n and tokens[i][0] == "op" and tokens[i][1] in "+-":
            continue
        if i < n:
            raise SpecParseError(f"unexpected token {tokens[i][1]!r}")
    return Polynomial(ctx, acc)
