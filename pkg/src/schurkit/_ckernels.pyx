# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_pykernels`` for keys that fit in 64 bits.

Coefficients are ``long long``; any overflow (or a key that does not fit)
raises OverflowError and the caller reruns the operation in pure Python.
"""

from libc.stdint cimport uint64_t
from libc.limits cimport LLONG_MIN
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from libcpp.queue cimport priority_queue
from cython.operator cimport dereference as deref

cdef extern from *:
    """
    static inline int sk_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int sk_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    static inline int sk_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    bint sk_mul_ovf(long long a, long long b, long long *r) nogil
    bint sk_sub_ovf(long long a, long long b, long long *r) nogil
    bint sk_add_ovf(long long a, long long b, long long *r) nogil


cdef void _load(dict d, vector[uint64_t]& keys, vector[long long]& coeffs) except *:
    keys.reserve(len(d))
    coeffs.reserve(len(d))
    for k, c in d.items():
        keys.push_back(k)
        coeffs.push_back(c)


cdef dict _dump(unordered_map[uint64_t, long long]& m):
    out = {}
    for kv in m:
        if kv.second != 0:
            out[kv.first] = kv.second
    return out


def mul(dict a, dict b):
    cdef vector[uint64_t] ak, bk
    cdef vector[long long] ac, bc
    _load(a, ak, ac)
    _load(b, bk, bc)
    cdef unordered_map[uint64_t, long long] acc
    acc.reserve(ak.size() * bk.size())
    cdef size_t i, j
    cdef long long t
    cdef bint bad = False
    with nogil:
        for i in range(ak.size()):
            for j in range(bk.size()):
                if sk_mul_ovf(ac[i], bc[j], &t):
                    bad = True
                    break
                if sk_add_ovf(acc[ak[i] + bk[j]], t, &t):
                    bad = True
                    break
                acc[ak[i] + bk[j]] = t
            if bad:
                break
    if bad:
        raise OverflowError("coefficient overflow in compiled mul")
    return _dump(acc)


def divexact(dict p, dict q, guard):
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    cdef uint64_t g = guard
    cdef vector[uint64_t] qk
    cdef vector[long long] qc
    _load(q, qk, qc)
    cdef size_t n = qk.size(), i, lead_i = 0
    for i in range(n):
        if qk[i] > qk[lead_i]:
            lead_i = i
    cdef uint64_t lead = qk[lead_i]
    cdef long long lc = qc[lead_i]

    cdef unordered_map[uint64_t, long long] rem
    cdef priority_queue[uint64_t] heap
    cdef vector[uint64_t] pk
    cdef vector[long long] pc
    _load(p, pk, pc)
    rem.reserve(2 * pk.size())
    for i in range(pk.size()):
        rem[pk[i]] = pc[i]
        heap.push(pk[i])

    cdef vector[uint64_t] outk
    cdef vector[long long] outc
    cdef uint64_t k, m, key
    cdef long long c, t, prod, new
    cdef int status = 0  # 1 = not divisible, 2 = overflow
    cdef unordered_map[uint64_t, long long].iterator it
    with nogil:
        while not heap.empty():
            k = heap.top()
            heap.pop()
            while not heap.empty() and heap.top() == k:
                heap.pop()
            it = rem.find(k)
            if it == rem.end():
                continue
            c = deref(it).second
            if ((k | g) - lead) & g != g or c % lc != 0:
                status = 1
                break
            if lc == -1 and c == LLONG_MIN:
                status = 2
                break
            t = c // lc
            m = k - lead
            outk.push_back(m)
            outc.push_back(t)
            for i in range(n):
                key = m + qk[i]
                if sk_mul_ovf(t, qc[i], &prod):
                    status = 2
                    break
                it = rem.find(key)
                if it == rem.end():
                    if sk_sub_ovf(0, prod, &new):
                        status = 2
                        break
                    if new != 0:
                        rem[key] = new
                        heap.push(key)
                else:
                    if sk_sub_ovf(deref(it).second, prod, &new):
                        status = 2
                        break
                    if new != 0:
                        deref(it).second = new
                    else:
                        rem.erase(it)
            if status:
                break
    if status == 1:
        return None
    if status == 2:
        raise OverflowError("coefficient overflow in compiled divexact")
    return {outk[i]: outc[i] for i in range(outk.size())}
