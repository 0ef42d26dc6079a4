"""Buchberger's algorithm: reduced Groebner bases and initial ideals.

Pair selection is the normal strategy (minimal lcm total degree, ties broken
by pair index), with the coprime-lcm and chain criteria for elimination.
Every returned basis is the unique reduced basis for its order, so repeated
runs are bitwise reproducible.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass
from fractions import Fraction

from .errors import LimitExceeded
from .hilbert import MonomialIdeal
from .poly import (DEGREVLEX, MonomialOrder, Polynomial, VariableContext,
                   mono_degree, mono_div, mono_divides, mono_lcm, mono_mul)


@dataclass(frozen=True)
class GroebnerLimits:
    """Optional budgets for a single buchberger run."""

    max_degree: int | None = None
    timeout: float | None = None


@dataclass(frozen=True)
class IdealPresentation:
    """Homogeneous generators in a pinned context, with grading metadata."""

    ctx: VariableContext
    generators: tuple[Polynomial, ...]
    weights: tuple[int, ...] | None = None
    provenance: str = ""

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        weights = self.weights
        if weights is not None:
            weights = tuple(weights)
            if len(weights) != self.ctx.nvars or any(w < 1 for w in weights):
                raise ValueError("need one positive weight per variable")
            object.__setattr__(self, "weights", weights)
        for g in self.generators:
            if g.ctx != self.ctx:
                raise ValueError("generator context mismatch")
            if g.is_zero:
                raise ValueError("zero generator in ideal presentation")
            if not g.is_homogeneous(self.grading):
                raise ValueError(f"inhomogeneous generator: {g.render()}")

    @property
    def grading(self) -> tuple[int, ...]:
        return self.weights if self.weights is not None else (1,) * self.ctx.nvars


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced basis: monic elements, no term divisible by another leading term."""

    ctx: VariableContext
    order: MonomialOrder
    elements: tuple[Polynomial, ...]


# -- dict-polynomial core -----------------------------------------------------
#
# Inside the engine a polynomial is a dict {exponent tuple: Fraction} and a
# basis entry is (leading monomial, tail) with the element kept monic.


def _entry_from_dict(d, order):
    lt = max(d, key=order.key)
    lc = d[lt]
    tail = tuple(sorted(((m, c / lc) for m, c in d.items() if m != lt),
                        key=lambda t: order.key(t[0]), reverse=True))
    return lt, tail


def _reduce_dict(target, entries, order):
    """Full normal form of a dict-polynomial against monic (lt, tail) entries."""
    if not target:
        return {}
    neg_key = order.neg_key
    coeffs = dict(target)
    heap = [(neg_key(m), m) for m in coeffs]
    heapq.heapify(heap)
    out = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = coeffs.pop(m, 0)
        if not c:
            continue
        hit = None
        for lt, tail in entries:
            if mono_divides(lt, m):
                hit = (lt, tail)
                break
        if hit is None:
            out[m] = c
            continue
        q = mono_div(m, hit[0])
        for tm, tc in hit[1]:
            nm = mono_mul(q, tm)
            prev = coeffs.get(nm)
            if prev is None:
                coeffs[nm] = -c * tc
                heapq.heappush(heap, (neg_key(nm), nm))
            else:
                coeffs[nm] = prev - c * tc
    return out


def _spoly_dict(entry_f, entry_g):
    """S-polynomial of two monic entries; the shared leading term cancels."""
    ltf, tailf = entry_f
    ltg, tailg = entry_g
    lcm = mono_lcm(ltf, ltg)
    qf = mono_div(lcm, ltf)
    qg = mono_div(lcm, ltg)
    d = {}
    for m, c in tailf:
        nm = mono_mul(qf, m)
        d[nm] = d.get(nm, Fraction(0)) + c
    for m, c in tailg:
        nm = mono_mul(qg, m)
        d[nm] = d.get(nm, Fraction(0)) - c
    return {m: c for m, c in d.items() if c}


# -- public operations ---------------------------------------------------------


def normal_form(p: Polynomial, basis, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """Remainder of p modulo the basis: no term divisible by any basis leading term."""
    entries = []
    for b in basis:
        if isinstance(b, Polynomial) and not b.is_zero:
            entries.append(_entry_from_dict(dict(b.terms), order))
    result = _reduce_dict(dict(p.terms), entries, order)
    return Polynomial(p.ctx, result)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """S-polynomial of the monic normalizations of f and g."""
    if f.is_zero or g.is_zero:
        raise ValueError("S-polynomial of a zero polynomial")
    if f.ctx != g.ctx:
        raise ValueError("context mismatch")
    ef = _entry_from_dict(dict(f.terms), order)
    eg = _entry_from_dict(dict(g.terms), order)
    return Polynomial(f.ctx, _spoly_dict(ef, eg))


def buchberger(ideal: IdealPresentation, order: MonomialOrder = DEGREVLEX,
               limits: GroebnerLimits | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of a homogeneous ideal.

    Raises LimitExceeded (with pairs processed and the degree reached) when the
    configured degree cap or timeout is hit before completion.
    """
    limits = limits or GroebnerLimits()
    start = time.monotonic()
    entries = [_entry_from_dict(dict(g.terms), order) for g in ideal.generators]

    heap = []
    for j in range(len(entries)):
        for i in range(j):
            lcm = mono_lcm(entries[i][0], entries[j][0])
            heapq.heappush(heap, (mono_degree(lcm), i, j))
    done = set()
    pairs_processed = 0
    max_degree_seen = 0

    def _diag(msg):
        return LimitExceeded(msg, pairs_processed=pairs_processed,
                             max_degree_reached=max_degree_seen,
                             basis_size=len(entries),
                             elapsed=time.monotonic() - start)

    while heap:
        if limits.timeout is not None and time.monotonic() - start > limits.timeout:
            raise _diag(f"groebner timeout after {limits.timeout}s")
        deg, i, j = heapq.heappop(heap)
        if limits.max_degree is not None and deg > limits.max_degree:
            raise _diag(f"pair of degree {deg} above cap {limits.max_degree}")
        done.add((i, j))
        lti, ltj = entries[i][0], entries[j][0]
        lcm = mono_lcm(lti, ltj)
        if lcm == mono_mul(lti, ltj):
            continue  # coprime leading monomials: S-pair reduces to zero
        skip = False
        for k in range(len(entries)):
            if k == i or k == j:
                continue
            if mono_divides(entries[k][0], lcm) \
                    and (min(i, k), max(i, k)) in done \
                    and (min(j, k), max(j, k)) in done:
                skip = True
                break
        if skip:
            continue
        pairs_processed += 1
        if deg > max_degree_seen:
            max_degree_seen = deg
        h = _reduce_dict(_spoly_dict(entries[i], entries[j]), entries, order)
        if not h:
            continue
        new_entry = _entry_from_dict(h, order)
        entries.append(new_entry)
        idx = len(entries) - 1
        for k in range(idx):
            lcm = mono_lcm(entries[k][0], new_entry[0])
            heapq.heappush(heap, (mono_degree(lcm), k, idx))

    return GroebnerBasis(ideal.ctx, order, _reduced_from_entries(ideal.ctx, entries, order))


def _reduced_from_entries(ctx, entries, order):
    """Extract the unique reduced basis from a complete (redundant) basis."""
    chosen = []
    for i in sorted(range(len(entries)), key=lambda i: (order.key(entries[i][0]), i)):
        lt = entries[i][0]
        if not any(mono_divides(entries[k][0], lt) for k in chosen):
            chosen.append(i)
    working = [entries[i] for i in chosen]
    for pos in range(len(working)):
        lt, tail = working[pos]
        others = [working[k] for k in range(len(working)) if k != pos]
        full = {lt: Fraction(1)}
        for m, c in tail:
            full[m] = full.get(m, Fraction(0)) + c
        red = _reduce_dict(full, others, order)
        working[pos] = _entry_from_dict(red, order)
    out = []
    for lt, tail in working:
        d = {lt: Fraction(1)}
        d.update({m: c for m, c in tail})
        out.append(Polynomial(ctx, d))
    return tuple(out)


def leading_term_ideal(gb: GroebnerBasis) -> MonomialIdeal:
    """Minimal monomial generators of the initial ideal of a reduced basis."""
    gens = [g.leading_monomial(gb.order) for g in gb.elements]
    return MonomialIdeal.from_generators(gb.ctx.nvars, gens)
