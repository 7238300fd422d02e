# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled fingerprint store; a drop-in twin of ``dynsa._fingerprint``."""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

cdef extern from *:
    """
    #define DYNSA_MOD ((1ULL << 61) - 1)
    static inline unsigned long long dynsa_mulmod(unsigned long long a, unsigned long long b) {
        unsigned __int128 z = (unsigned __int128)a * b;
        unsigned long long r = (unsigned long long)(z & DYNSA_MOD) + (unsigned long long)(z >> 61);
        if (r >= DYNSA_MOD) r -= DYNSA_MOD;
        return r;
    }
    static inline unsigned long long dynsa_addmod(unsigned long long a, unsigned long long b) {
        unsigned long long r = a + b;
        if (r >= DYNSA_MOD) r -= DYNSA_MOD;
        return r;
    }
    static inline unsigned long long dynsa_submod(unsigned long long a, unsigned long long b) {
        return a >= b ? a - b : a + DYNSA_MOD - b;
    }
    """
    unsigned long long MOD "DYNSA_MOD"
    unsigned long long mulmod "dynsa_mulmod"(unsigned long long a, unsigned long long b) nogil
    unsigned long long addmod "dynsa_addmod"(unsigned long long a, unsigned long long b) nogil
    unsigned long long submod "dynsa_submod"(unsigned long long a, unsigned long long b) nogil

ctypedef unsigned long long u64

cdef enum:
    SCAN = 16


cdef class FingerprintStore:
    cdef readonly int n_padded
    cdef readonly object base1, base2
    cdef int *sym
    cdef u64 *pow1
    cdef u64 *pow2
    cdef u64 *f1
    cdef u64 *f2
    cdef int size
    cdef public long long calls
    cdef public long long disagreements

    backend = "cython"

    def __cinit__(self, symbols, base1, base2):
        cdef int t, up
        cdef u64 b1, b2, v
        self.n_padded = len(symbols) - 1
        self.size = self.n_padded + 1
        b1 = <u64>(base1 % ((1 << 61) - 1))
        b2 = <u64>(base2 % ((1 << 61) - 1))
        self.base1 = b1
        self.base2 = b2
        self.sym = <int *>malloc(self.size * sizeof(int))
        self.pow1 = <u64 *>malloc((self.size + 1) * sizeof(u64))
        self.pow2 = <u64 *>malloc((self.size + 1) * sizeof(u64))
        self.f1 = <u64 *>malloc(self.size * sizeof(u64))
        self.f2 = <u64 *>malloc(self.size * sizeof(u64))
        if (self.sym == NULL or self.pow1 == NULL
                or self.pow2 == NULL or self.f1 == NULL or self.f2 == NULL):
            raise MemoryError()
        self.sym[0] = 0
        for t in range(1, self.size):
            self.sym[t] = symbols[t]
        self.pow1[0] = 1
        self.pow2[0] = 1
        for t in range(1, self.size + 1):
            self.pow1[t] = mulmod(self.pow1[t - 1], b1)
            self.pow2[t] = mulmod(self.pow2[t - 1], b2)
        for t in range(self.size):
            self.f1[t] = 0
            self.f2[t] = 0
        for t in range(1, self.size):
            v = <u64>self.sym[t]
            self.f1[t] = addmod(self.f1[t], mulmod(v, self.pow1[t]))
            self.f2[t] = addmod(self.f2[t], mulmod(v, self.pow2[t]))
            up = t + (t & -t)
            if up < self.size:
                self.f1[up] = addmod(self.f1[up], self.f1[t])
                self.f2[up] = addmod(self.f2[up], self.f2[t])
        self.calls = 0
        self.disagreements = 0

    def __dealloc__(self):
        free(self.sym)
        free(self.pow1)
        free(self.pow2)
        free(self.f1)
        free(self.f2)

    def reset_counters(self):
        self.calls = 0
        self.disagreements = 0

    def symbol(self, int pos):
        return self.sym[pos]

    def set(self, int pos, int value):
        cdef int old = self.sym[pos]
        cdef u64 d1, d2
        cdef int t = pos
        if old == value:
            return
        self.sym[pos] = value
        if value >= old:
            d1 = mulmod(<u64>(value - old), self.pow1[pos])
            d2 = mulmod(<u64>(value - old), self.pow2[pos])
        else:
            d1 = submod(0, mulmod(<u64>(old - value), self.pow1[pos]))
            d2 = submod(0, mulmod(<u64>(old - value), self.pow2[pos]))
        while t < self.size:
            self.f1[t] = addmod(self.f1[t], d1)
            self.f2[t] = addmod(self.f2[t], d2)
            t += t & -t

    cdef inline void _prefix(self, int t, u64 *s1, u64 *s2) noexcept:
        cdef u64 a = 0, b = 0
        while t > 0:
            a = addmod(a, self.f1[t])
            b = addmod(b, self.f2[t])
            t -= t & -t
        s1[0] = a
        s2[0] = b

    cdef bint _equal(self, int i, int j, int length) noexcept:
        cdef u64 a1, a2, b1, b2, c1, c2, d1, d2
        cdef bint eq1, eq2
        cdef int t
        self._prefix(i + length - 1, &a1, &a2)
        self._prefix(i - 1, &b1, &b2)
        self._prefix(j + length - 1, &c1, &c2)
        self._prefix(j - 1, &d1, &d2)
        eq1 = mulmod(submod(a1, b1), self.pow1[j - i]) == submod(c1, d1)
        eq2 = mulmod(submod(a2, b2), self.pow2[j - i]) == submod(c2, d2)
        if eq1 == eq2:
            return eq1
        self.disagreements += 1
        for t in range(length):
            if self.sym[i + t] != self.sym[j + t]:
                return False
        return True

    cdef inline bint _eq_dir(self, int lo, int hi, int length, int step) noexcept:
        if step > 0:
            return self._equal(lo, hi, length)
        return self._equal(lo - length + 1, hi - length + 1, length)

    cdef int _extend(self, int i, int j, int limit, int step) noexcept:
        cdef int l = 0, bound, good, bad, probe, mid, lo, hi
        cdef int *s = self.sym
        bound = limit if limit < SCAN else SCAN
        if step > 0:
            while l < bound and s[i + l] == s[j + l]:
                l += 1
        else:
            while l < bound and s[i - l] == s[j - l]:
                l += 1
        if l < bound or l == limit:
            return l
        if i < j:
            lo = i
            hi = j
        else:
            lo = j
            hi = i
        good = l
        while True:
            probe = 2 * good
            if probe > limit:
                probe = limit
            if self._eq_dir(lo, hi, probe, step):
                good = probe
                if good == limit:
                    return good
            else:
                bad = probe
                break
        while bad - good > SCAN:
            mid = (good + bad) // 2
            if self._eq_dir(lo, hi, mid, step):
                good = mid
            else:
                bad = mid
        if step > 0:
            while good < bad and s[i + good] == s[j + good]:
                good += 1
        else:
            while good < bad and s[i - good] == s[j - good]:
                good += 1
        return good

    cdef int _lcp(self, int i, int j, long long cap) noexcept:
        cdef long long limit
        self.calls += 1
        if i == j:
            limit = self.n_padded - i + 1
            return <int>(cap if cap < limit else limit)
        limit = self.n_padded - (i if i > j else j) + 1
        if cap < limit:
            limit = cap
        if limit <= 0:
            return 0
        return self._extend(i, j, <int>limit, 1)

    cdef int _cmp_prefix(self, int i, int j, long long length) noexcept:
        cdef long long limit
        cdef int l
        self.calls += 1
        if i == j:
            return 0
        limit = self.n_padded - (i if i > j else j) + 1
        if length < limit:
            limit = length
        l = self._extend(i, j, <int>limit, 1)
        if l >= length:
            return 0
        if l == limit:
            return -1 if i > j else 1
        return -1 if self.sym[i + l] < self.sym[j + l] else 1

    def lcp(self, int i, int j, long long cap):
        return self._lcp(i, j, cap)

    def lcs(self, int i, int j, long long cap):
        cdef long long limit
        self.calls += 1
        limit = i if i < j else j
        if cap < limit:
            limit = cap
        if i == j or limit <= 0:
            return limit if limit > 0 else 0
        return self._extend(i, j, <int>limit, -1)

    def cmp_prefix(self, int i, int j, long long length):
        return self._cmp_prefix(i, j, length)

    def compare(self, int i, int j):
        return self._cmp_prefix(i, j, self.n_padded + 1)

    cdef void _merge_sort(self, int *a, int *tmp, int lo, int hi) noexcept:
        # sorts a[lo:hi]; mirrors the comparison count of a stable merge sort
        cdef int mid, x, y, k, t
        if hi - lo < 2:
            return
        if hi - lo <= 8:
            for x in range(lo + 1, hi):
                t = a[x]
                y = x - 1
                while y >= lo and self._cmp_prefix(t, a[y], self.n_padded + 1) < 0:
                    a[y + 1] = a[y]
                    y -= 1
                a[y + 1] = t
            return
        mid = (lo + hi) // 2
        self._merge_sort(a, tmp, lo, mid)
        self._merge_sort(a, tmp, mid, hi)
        if self._cmp_prefix(a[mid - 1], a[mid], self.n_padded + 1) <= 0:
            return
        x = lo
        y = mid
        k = lo
        while x < mid and y < hi:
            if self._cmp_prefix(a[y], a[x], self.n_padded + 1) < 0:
                tmp[k] = a[y]
                y += 1
            else:
                tmp[k] = a[x]
                x += 1
            k += 1
        while x < mid:
            tmp[k] = a[x]
            x += 1
            k += 1
        while y < hi:
            tmp[k] = a[y]
            y += 1
            k += 1
        memcpy(&a[lo], &tmp[lo], (hi - lo) * sizeof(int))

    def sort(self, positions):
        cdef int m = len(positions)
        cdef int t
        cdef int *a = <int *>malloc((m + 1) * sizeof(int))
        cdef int *tmp = <int *>malloc((m + 1) * sizeof(int))
        if a == NULL or tmp == NULL:
            free(a)
            free(tmp)
            raise MemoryError()
        try:
            for t in range(m):
                a[t] = positions[t]
            self._merge_sort(a, tmp, 0, m)
            return [a[t] for t in range(m)]
        finally:
            free(a)
            free(tmp)

    def count_smaller(self, int i, positions):
        """Number of positions (other than ``i``) whose suffix sorts below suffix ``i``."""
        cdef int c = 0
        cdef int j
        for j in positions:
            if j != i and self._cmp_prefix(j, i, self.n_padded + 1) < 0:
                c += 1
        return c
