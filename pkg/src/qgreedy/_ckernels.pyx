# cython: language_level=3, cdivision=True
"""Compiled twins of :mod:`qgreedy._pykernels`.

Exponents are machine integers.  Products whose coefficients fit in 64 bits
(and whose sums provably fit in 128) run on C arrays over the common
exponent stride; anything else, including fractions and big integers, falls
back to a loop over Python objects.
"""


cpdef dict poly_add(dict a, dict b):
    cdef dict out
    cdef object s
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            del out[e]
    return out


cpdef dict poly_sub(dict a, dict b):
    cdef dict out = dict(a)
    cdef object s
    for e, c in b.items():
        s = out.get(e, 0) - c
        if s:
            out[e] = s
        else:
            del out[e]
    return out


cdef extern from *:
    """
    #include <limits.h>
    typedef __int128 qg_int128;
    static PyObject* qg_int128_to_py(qg_int128 x) {
        if (x >= LLONG_MIN && x <= LLONG_MAX) return PyLong_FromLongLong((long long)x);
        int neg = x < 0;
        unsigned __int128 u = neg ? -(unsigned __int128)x : (unsigned __int128)x;
        PyObject *hi = PyLong_FromUnsignedLongLong((unsigned long long)(u >> 64));
        PyObject *lo = PyLong_FromUnsignedLongLong((unsigned long long)u);
        PyObject *sh = PyLong_FromLong(64);
        PyObject *t = PyNumber_Lshift(hi, sh);
        PyObject *r = PyNumber_Or(t, lo);
        Py_DECREF(hi); Py_DECREF(lo); Py_DECREF(sh); Py_DECREF(t);
        if (neg) { PyObject *n = PyNumber_Negative(r); Py_DECREF(r); r = n; }
        return r;
    }
    /* |sum| <= ma * mb * n must stay below 2^126 */
    static int qg_acc_fits(unsigned long long ma, unsigned long long mb, Py_ssize_t n) {
        unsigned __int128 prod = (unsigned __int128)ma * mb;
        return prod <= (((unsigned __int128)1) << 126) / (unsigned __int128)n;
    }
    """
    ctypedef long long qg_int128
    object qg_int128_to_py(qg_int128 x)
    int qg_acc_fits(unsigned long long ma, unsigned long long mb, Py_ssize_t n)

from libc.stdlib cimport calloc, malloc, free
from libc.limits cimport LLONG_MIN
from cpython.long cimport PyLong_AsLongLongAndOverflow

DEF DENSE_MIN_WORK = 256


cdef struct Packed:
    long long *exps
    long long *coefs
    Py_ssize_t n
    long long lo
    long long hi
    long long g
    unsigned long long maxabs


cdef inline long long _gcd(long long x, long long y) nogil:
    if x < 0:
        x = -x
    if y < 0:
        y = -y
    while y:
        x, y = y, x % y
    return x


cdef int _pack(dict a, Packed *P) except -1:
    """Copy ``a`` into machine arrays; return 1 if a coefficient does not fit."""
    cdef Py_ssize_t i = 0
    cdef int overflow = 0
    cdef long long e, c
    P.n = len(a)
    P.exps = <long long *>malloc(P.n * sizeof(long long))
    P.coefs = <long long *>malloc(P.n * sizeof(long long))
    if P.exps == NULL or P.coefs == NULL:
        raise MemoryError()
    P.maxabs = 0
    for k, v in a.items():
        if type(v) is not int:
            return 1
        c = PyLong_AsLongLongAndOverflow(v, &overflow)
        if overflow or c == LLONG_MIN:
            return 1
        e = k
        P.exps[i] = e
        P.coefs[i] = c
        if c < 0:
            c = -c
        if <unsigned long long>c > P.maxabs:
            P.maxabs = c
        if i == 0 or e < P.lo:
            P.lo = e
        if i == 0 or e > P.hi:
            P.hi = e
        i += 1
    P.g = 0
    for i in range(P.n):
        P.g = _gcd(P.g, P.exps[i] - P.lo)
        if P.g == 1:
            break
    return 0


cdef inline void _release(Packed *P):
    free(P.exps)
    free(P.coefs)
    P.exps = NULL
    P.coefs = NULL


cdef dict _mul_sparse(dict a, dict b):
    cdef dict out = {}
    cdef long long e1, e2, e
    cdef object c1, c2, prev
    for k2, c2 in b.items():
        e2 = k2
        for k1, c1 in a.items():
            e1 = k1
            e = e1 + e2
            prev = out.get(e)
            if prev is None:
                out[e] = c1 * c2
            else:
                out[e] = prev + c1 * c2
    return {k: c for k, c in out.items() if c}


cdef dict _mul_packed(Packed *A, Packed *B, long long g):
    """Term-pair loop over nonzero terms, accumulating on a strided 128-bit grid."""
    cdef long long base = A.lo + B.lo
    cdef Py_ssize_t size = (A.hi + B.hi - base) // g + 1
    cdef qg_int128 *acc
    cdef Py_ssize_t i, j, off
    cdef long long x
    cdef dict out = {}
    acc = <qg_int128 *>calloc(size, sizeof(qg_int128))
    if acc == NULL:
        raise MemoryError()
    try:
        with nogil:
            for i in range(A.n):
                x = A.coefs[i]
                off = (A.exps[i] - A.lo) // g
                for j in range(B.n):
                    acc[off + (B.exps[j] - B.lo) // g] += <qg_int128>x * B.coefs[j]
        for i in range(size):
            if acc[i] != 0:
                out[base + g * i] = qg_int128_to_py(acc[i])
    finally:
        free(acc)
    return out


cpdef dict poly_mul(dict a, dict b):
    cdef Packed A, B
    cdef long long g
    cdef Py_ssize_t la, lb, shortest, size
    cdef dict out = None
    if not a or not b:
        return {}
    la, lb = len(a), len(b)
    if la * lb < DENSE_MIN_WORK:
        return _mul_sparse(a, b) if la >= lb else _mul_sparse(b, a)
    A.exps = A.coefs = B.exps = B.coefs = NULL
    try:
        if _pack(a, &A) == 0 and _pack(b, &B) == 0:
            shortest = la if la < lb else lb
            if qg_acc_fits(A.maxabs, B.maxabs, shortest):
                g = _gcd(A.g, B.g) or 1
                size = (A.hi + B.hi - A.lo - B.lo) // g + 1
                # skip pathologically spread exponents
                if size <= 8 * la * lb + 1024:
                    out = _mul_packed(&A, &B, g)
    finally:
        _release(&A)
        _release(&B)
    if out is None:
        out = _mul_sparse(a, b) if la >= lb else _mul_sparse(b, a)
    return out


cpdef dict poly_scale(dict a, object coeff, long long shift):
    cdef long long e
    if not coeff:
        return {}
    out = {}
    for k, c in a.items():
        e = k
        out[e + shift] = c * coeff
    return out


cpdef dict torus_mul(dict A, dict B):
    cdef dict out = {}
    cdef dict acc, f, g
    cdef long long e1, e2, f1, f2, s, z
    cdef object prev
    for ka, fa in A.items():
        e1 = ka[0]
        e2 = ka[1]
        f = fa
        for kb, gb in B.items():
            f1 = kb[0]
            f2 = kb[1]
            g = gb
            key = (e1 + f1, e2 + f2)
            s = e2 * f1 - e1 * f2
            acc = out.get(key)
            if acc is None:
                acc = {}
                out[key] = acc
            for z0, cz in poly_mul(f, g).items():
                z = <long long>z0 + s
                prev = acc.get(z)
                acc[z] = cz if prev is None else prev + cz
    result = {}
    for key, acc in out.items():
        poly = {k: c for k, c in acc.items() if c}
        if poly:
            result[key] = poly
    return result
