"""Dense univariate polynomials over a field, as coefficient lists low -> high.

The zero polynomial is ``[]``; every other result is trimmed so its last
coefficient is nonzero.
"""


def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f):
    return len(trim(f)) - 1


def add(f, g):
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)])


def neg(f):
    return [-c for c in f]


def sub(f, g):
    return add(f, neg(g))


def scale(f, c):
    return trim([c * x for x in f])


def mul(F, f, g):
    f, g = trim(f), trim(g)
    if not f or not g:
        return []
    out = [F.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return trim(out)


def divmod_(F, f, g):
    """Quotient and remainder of ``f`` by nonzero ``g``."""
    f, g = trim(f), trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = [F(c) for c in f]
    dg = len(g) - 1
    inv_lead = F.one / g[-1]
    q = [F.zero] * max(len(r) - dg, 0)
    while len(r) - 1 >= dg and r:
        shift = len(r) - 1 - dg
        c = r[-1] * inv_lead
        q[shift] = c
        for i, b in enumerate(g):
            r[shift + i] = r[shift + i] - c * b
        r = trim(r)
    return trim(q), r


def rem(F, f, g):
    return divmod_(F, f, g)[1]


def monic(F, f):
    f = trim(f)
    if not f:
        return f
    inv = F.one / f[-1]
    return [c * inv for c in f]


def gcd(F, f, g):
    f, g = trim(f), trim(g)
    while g:
        f, g = g, rem(F, f, g)
    return monic(F, f)


def egcd(F, f, g):
    """Return ``(d, s, t)`` with ``s*f + t*g = d`` and ``d`` monic."""
    r0, r1 = trim(f), trim(g)
    s0, s1 = [F.one], []
    t0, t1 = [], [F.one]
    while r1:
        q, r = divmod_(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(F, q, s1))
        t0, t1 = t1, sub(t0, mul(F, q, t1))
    if not r0:
        return [], s0, t0
    inv = F.one / r0[-1]
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def evaluate(f, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def derivative(f):
    return trim([i * c for i, c in enumerate(f)][1:])


def powmod(F, f, e, m):
    """``f**e mod m`` by square-and-multiply."""
    result = [F.one]
    base = rem(F, f, m)
    while e:
        if e & 1:
            result = rem(F, mul(F, result, base), m)
        base = rem(F, mul(F, base, base), m)
        e >>= 1
    return result


def compose(F, f, g):
    """``f(g(X))``."""
    out = []
    for c in reversed(trim(f)):
        out = add(mul(F, out, g), [c])
    return out


def format_poly(F, f, var="X"):
    f = trim(f)
    if not f:
        return "0"
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        cs = F.format(c)
        if mono and c == 1:
            terms.append(mono)
        elif mono and c == -1 and not F.is_finite:
            terms.append(f"-{mono}")
        else:
            if mono and (" " in cs or "+" in cs or "{" in cs):
                cs = f"({cs})"
            terms.append(f"{cs}*{mono}" if mono else cs)
    return " + ".join(terms).replace("+ -", "- ")
