"""Dense integer polynomial kernels (pure Python reference backend).

A polynomial is a tuple of ints ``(c0, c1, ..., cd)`` in ascending degree
with ``cd != 0``; the zero polynomial is ``()``.  Laurent polynomials are a
pair ``(low, coeffs)`` where ``coeffs`` is such a tuple with ``coeffs[0] != 0``
(zero is ``(0, ())``).

The compiled module ``_polykern`` exposes the same functions with the same
semantics; this file is the fallback and the reference the benchmark and
tests compare against.
"""

from math import gcd

__all__ = [
    "ladd",
    "lsub",
    "lmul",
    "lscale",
    "pdivexact",
    "pgcd",
    "pcontent",
]


def _trim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _lnorm(low, c):
    # strip zeros at both ends, shifting ``low`` for the leading ones
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    i = 0
    while i < n and not c[i]:
        i += 1
    if i == n:
        return 0, ()
    return low + i, tuple(c[i:n])


def ladd(al, a, bl, b):
    if not a:
        return bl, b
    if not b:
        return al, a
    low = al if al < bl else bl
    hi = max(al + len(a), bl + len(b))
    out = [0] * (hi - low)
    off = al - low
    for i, x in enumerate(a):
        out[off + i] = x
    off = bl - low
    for i, x in enumerate(b):
        out[off + i] += x
    return _lnorm(low, out)


def lsub(al, a, bl, b):
    if not b:
        return al, a
    return ladd(al, a, bl, tuple(-x for x in b))


def lmul(al, a, bl, b):
    if not a or not b:
        return 0, ()
    if len(b) == 1:
        y = b[0]
        return al + bl, tuple(x * y for x in a)
    if len(a) == 1:
        x = a[0]
        return al + bl, tuple(x * y for y in b)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    # leading/trailing products of nonzero ints are nonzero
    return al + bl, tuple(out)


def lscale(al, a, k):
    if not k or not a:
        return 0, ()
    return al, tuple(x * k for x in a)


def pcontent(a):
    g = 0
    for x in a:
        g = gcd(g, x)
        if g == 1:
            break
    return g


def _divmod_exact_lc(a, b):
    """Long division of ``a`` by ``b`` over Z; ``None`` if not exact."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(a) - 1 < db:
        return None if any(a) else ()
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        t = a[k + db]
        if t:
            qk, r = divmod(t, lb)
            if r:
                return None
            q[k] = qk
            for j in range(db + 1):
                a[k + j] -= qk * b[j]
    if any(a[:db]):
        return None
    return _trim(q)


def pdivexact(a, b):
    """Quotient ``a / b`` for ordinary polynomials, which must divide exactly."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    if len(b) == 1:
        lb = b[0]
        out = []
        for x in a:
            qx, r = divmod(x, lb)
            if r:
                raise ArithmeticError("inexact polynomial division")
            out.append(qx)
        return tuple(out)
    q = _divmod_exact_lc(a, b)
    if q is None:
        raise ArithmeticError("inexact polynomial division")
    return q


def _prem(a, b):
    # pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        t = a[-1]
        shift = len(a) - 1 - db
        a = [x * lb for x in a]
        for j in range(db + 1):
            a[shift + j] -= t * b[j]
        a = list(_trim(a))
    return tuple(a)


def _primpart(a):
    c = pcontent(a)
    if c in (0, 1):
        return a
    return tuple(x // c for x in a)


def pgcd(a, b):
    """Greatest common divisor over Z with positive leading coefficient."""
    if not a:
        a, b = b, a
    if not b:
        if not a:
            return ()
        return a if a[-1] > 0 else tuple(-x for x in a)
    ca, cb = pcontent(a), pcontent(b)
    c = gcd(ca, cb)
    if len(a) == 1 or len(b) == 1:
        return (c,)
    a, b = _primpart(a), _primpart(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return (c,)
        r = _prem(a, b)
        a, b = b, _primpart(r)
    g = a if a[-1] > 0 else tuple(-x for x in a)
    return tuple(c * x for x in g) if c != 1 else g
