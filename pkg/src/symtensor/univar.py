"""Dense univariate polynomial helpers on little-endian coefficient lists.

The zero polynomial is the empty list. Coefficients are ints or Fractions and
every routine is exact; integer division paths require a unit leading
coefficient on the divisor.
"""

from __future__ import annotations

from fractions import Fraction


def trim(p):
    """Drop trailing zeros so representations are canonical."""
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return list(p[:n])


def degree(p):
    """Degree of p, with the zero polynomial at -1."""
    return len(trim(p)) - 1


def add(p, q):
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def neg(p):
    return [-c for c in p]


def sub(p, q):
    return add(p, neg(q))


def mul(p, q):
    p, q = trim(p), trim(q)
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def shift(p, k):
    """Multiply by t**k."""
    p = trim(p)
    return [0] * k + p if p else []


def one_minus_power(w):
    """1 - t**w."""
    return [1] + [0] * (w - 1) + [-1]


def divmod_exact(num, den):
    """Long division: returns (quotient, remainder).

    Stays over the integers when the divisor is monic up to sign; otherwise
    computes with Fractions.
    """
    num, den = trim(num), trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    lead = den[-1]
    field = lead not in (1, -1) or any(isinstance(c, Fraction) for c in num + den)
    r = [Fraction(c) for c in num] if field else list(num)
    dd = len(den) - 1
    if len(r) <= dd:
        return [], trim(r)
    q = [Fraction(0) if field else 0] * (len(r) - dd)
    for k in range(len(r) - dd - 1, -1, -1):
        top = r[k + dd]
        if top == 0:
            continue
        c = top / lead if field else top // lead
        q[k] = c
        for i, dc in enumerate(den):
            r[k + i] -= c * dc
    return trim(q), trim(r)


def divides(den, num):
    """True when den divides num exactly."""
    _, r = divmod_exact(num, den)
    return not r


def xgcd(a, b):
    """Extended gcd over Q[t]: (g, u, v) with u*a + v*b = g and g monic or zero."""
    r0 = [Fraction(c) for c in trim(a)]
    r1 = [Fraction(c) for c in trim(b)]
    u0, u1 = [Fraction(1)], []
    v0, v1 = [], [Fraction(1)]
    while r1:
        q, r = divmod_exact(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, sub(u0, mul(q, u1))
        v0, v1 = v1, sub(v0, mul(q, v1))
    if r0:
        lc = r0[-1]
        r0 = [c / lc for c in r0]
        u0 = [c / lc for c in u0]
        v0 = [c / lc for c in v0]
    return r0, u0, v0


def render(p, var="t"):
    """Readable form like '1 - 3*t^2 + 2*t^3'; zero renders as '0'."""
    p = trim(p)
    if not p:
        return "0"
    parts = []
    for e, c in enumerate(p):
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        elif e == 1:
            body = var if mag == 1 else f"{mag}*{var}"
        else:
            body = f"{var}^{e}" if mag == 1 else f"{mag}*{var}^{e}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
