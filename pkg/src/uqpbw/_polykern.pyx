# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Dense integer polynomial kernels (compiled backend).

Same functions and semantics as ``_polykern_py``.  Coefficients are copied
into int64 buffers and every add/multiply is overflow-checked; if a value
does not fit, or an intermediate overflows, the call is redone by the pure
Python reference, which uses arbitrary precision.
"""

from libc.stdlib cimport malloc, free

from . import _polykern_py as _ref

cdef extern from *:
    bint add_ovf "__builtin_saddll_overflow"(long long a, long long b, long long *res) nogil
    bint sub_ovf "__builtin_ssubll_overflow"(long long a, long long b, long long *res) nogil
    bint mul_ovf "__builtin_smulll_overflow"(long long a, long long b, long long *res) nogil

# LLONG_MIN cannot be negated safely; keep inputs strictly inside
cdef long long LIM = 9223372036854775807


class _Overflow(Exception):
    pass


cdef long long* _load(tuple t, Py_ssize_t n) except NULL:
    cdef long long* buf = <long long*>malloc((n if n else 1) * sizeof(long long))
    cdef Py_ssize_t i
    cdef object x
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        x = t[i]
        if not (-LIM <= x <= LIM):
            free(buf)
            raise _Overflow()
        buf[i] = x
    return buf


cdef tuple _store(long long* buf, Py_ssize_t start, Py_ssize_t stop):
    return tuple([buf[i] for i in range(start, stop)])


cdef inline long long _gcd(long long a, long long b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


def ladd(long al, tuple a, long bl, tuple b):
    if not a:
        return bl, b
    if not b:
        return al, a
    cdef Py_ssize_t na = len(a), nb = len(b), n, i, lo, hi
    cdef long low = al if al < bl else bl
    cdef long top = max(al + na, bl + nb)
    cdef long long* out
    cdef long long* bb
    n = top - low
    try:
        out = <long long*>malloc(n * sizeof(long long))
        if out == NULL:
            raise MemoryError()
        for i in range(n):
            out[i] = 0
        try:
            bb = _load(a, na)
            for i in range(na):
                out[al - low + i] = bb[i]
            free(bb)
            bb = _load(b, nb)
            try:
                for i in range(nb):
                    if add_ovf(out[bl - low + i], bb[i], &out[bl - low + i]):
                        raise _Overflow()
            finally:
                free(bb)
            hi = n
            while hi and not out[hi - 1]:
                hi -= 1
            lo = 0
            while lo < hi and not out[lo]:
                lo += 1
            if lo == hi:
                return 0, ()
            return low + lo, _store(out, lo, hi)
        finally:
            free(out)
    except _Overflow:
        return _ref.ladd(al, a, bl, b)


def lsub(long al, tuple a, long bl, tuple b):
    if not b:
        return al, a
    return ladd(al, a, bl, tuple([-x for x in b]))


def lmul(long al, tuple a, long bl, tuple b):
    if not a or not b:
        return 0, ()
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef long long* aa
    cdef long long* bb
    cdef long long* out
    cdef long long t
    cdef bint bad = False
    try:
        aa = _load(a, na)
    except _Overflow:
        return _ref.lmul(al, a, bl, b)
    try:
        bb = _load(b, nb)
    except _Overflow:
        free(aa)
        return _ref.lmul(al, a, bl, b)
    out = <long long*>malloc((na + nb - 1) * sizeof(long long))
    if out == NULL:
        free(aa)
        free(bb)
        raise MemoryError()
    with nogil:
        for i in range(na + nb - 1):
            out[i] = 0
        for i in range(na):
            if not aa[i]:
                continue
            for j in range(nb):
                if mul_ovf(aa[i], bb[j], &t) or add_ovf(out[i + j], t, &out[i + j]):
                    bad = True
                    break
            if bad:
                break
    free(aa)
    free(bb)
    if bad:
        free(out)
        return _ref.lmul(al, a, bl, b)
    res = _store(out, 0, na + nb - 1)
    free(out)
    return al + bl, res


def lscale(long al, tuple a, object k):
    if not k or not a:
        return 0, ()
    return al, tuple([x * k for x in a])


def pcontent(tuple a):
    cdef long long g = 0
    cdef Py_ssize_t i, n = len(a)
    cdef long long* aa
    try:
        aa = _load(a, n)
    except _Overflow:
        return _ref.pcontent(a)
    for i in range(n):
        g = _gcd(g, aa[i])
        if g == 1:
            break
    free(aa)
    return g


cdef Py_ssize_t _deg(long long* p, Py_ssize_t n) nogil:
    # length after trimming trailing zeros
    while n and not p[n - 1]:
        n -= 1
    return n


def pdivexact(tuple a, tuple b):
    """Quotient ``a / b`` for ordinary polynomials, which must divide exactly."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    cdef Py_ssize_t na = len(a), nb = len(b), k, j, nq
    if na < nb:
        raise ArithmeticError("inexact polynomial division")
    cdef long long* aa
    cdef long long* bb
    cdef long long* qq
    cdef long long lb, t, qk, p
    cdef int status = 0  # 1 inexact, 2 overflow
    try:
        aa = _load(a, na)
    except _Overflow:
        return _ref.pdivexact(a, b)
    try:
        bb = _load(b, nb)
    except _Overflow:
        free(aa)
        return _ref.pdivexact(a, b)
    nq = na - nb + 1
    qq = <long long*>malloc(nq * sizeof(long long))
    lb = bb[nb - 1]
    with nogil:
        for k in range(nq - 1, -1, -1):
            t = aa[k + nb - 1]
            if not t:
                qq[k] = 0
                continue
            if t % lb:
                status = 1
                break
            qk = t // lb
            qq[k] = qk
            for j in range(nb):
                if mul_ovf(qk, bb[j], &p) or sub_ovf(aa[k + j], p, &aa[k + j]):
                    status = 2
                    break
            if status:
                break
        if not status:
            for j in range(nb - 1):
                if aa[j]:
                    status = 1
                    break
    try:
        if status == 2:
            return _ref.pdivexact(a, b)
        if status == 1:
            raise ArithmeticError("inexact polynomial division")
        return _store(qq, 0, _deg(qq, nq))
    finally:
        free(aa)
        free(bb)
        free(qq)


cdef int _primpart_inplace(long long* p, Py_ssize_t n) nogil:
    cdef long long g = 0
    cdef Py_ssize_t i
    for i in range(n):
        g = _gcd(g, p[i])
    if g > 1:
        for i in range(n):
            p[i] //= g
    return 0


def pgcd(tuple a, tuple b):
    """Greatest common divisor over Z with positive leading coefficient."""
    if not a:
        a, b = b, a
    if not b or len(a) == 1 or len(b) == 1:
        return _ref.pgcd(a, b)
    cdef Py_ssize_t na = len(a), nb = len(b), i, j, shift
    cdef long long* x
    cdef long long* y
    cdef long long* tmp
    cdef long long ca = 0, cb = 0, c, lb, t, p
    cdef Py_ssize_t tn
    cdef bint bad = False
    if na < nb:
        a, b = b, a
        na, nb = nb, na
    try:
        x = _load(a, na)
    except _Overflow:
        return _ref.pgcd(a, b)
    try:
        y = _load(b, nb)
    except _Overflow:
        free(x)
        return _ref.pgcd(a, b)
    with nogil:
        for i in range(na):
            ca = _gcd(ca, x[i])
        for i in range(nb):
            cb = _gcd(cb, y[i])
        c = _gcd(ca, cb)
        _primpart_inplace(x, na)
        _primpart_inplace(y, nb)
        while nb > 1:
            # x <- prem(x, y), primitive part; then swap
            lb = y[nb - 1]
            while na >= nb and not bad:
                t = x[na - 1]
                shift = na - nb
                for i in range(na):
                    if mul_ovf(x[i], lb, &x[i]):
                        bad = True
                        break
                if bad:
                    break
                for j in range(nb):
                    if mul_ovf(t, y[j], &p) or sub_ovf(x[shift + j], p, &x[shift + j]):
                        bad = True
                        break
                na = _deg(x, na)
                if na:
                    _primpart_inplace(x, na)
            if bad:
                break
            tmp = x
            x = y
            y = tmp
            tn = na
            na = nb
            nb = tn
            if nb == 0:
                break
    try:
        if bad:
            return _ref.pgcd(a, b)
        if nb == 1:
            return (c,)
        # gcd in x[0:na]
        if x[na - 1] < 0:
            for i in range(na):
                x[i] = -x[i]
        res = _store(x, 0, na)
        return tuple([c * v for v in res]) if c != 1 else res
    finally:
        free(x)
        free(y)
