"""Pure-Python fingerprint store: the fallback LCE kernel.

Two Fenwick trees hold ``sym[t] * base**t mod (2**61 - 1)`` for independent
bases.  A substring fingerprint is a difference of two prefix sums; two ranges
at different offsets are aligned by multiplying the left one by a power of the
base.  Longest-common-extension lengths come from a short direct scan followed
by galloping and binary search over fingerprint equality.

The compiled twin in ``_fingerprint_ext.pyx`` exposes the same interface and
returns identical results.  Call counters agree everywhere except inside
``sort``, where the two backends use different comparison sorts.
"""

from functools import cmp_to_key

MOD = (1 << 61) - 1
SCAN = 16


class FingerprintStore:
    backend = "python"

    def __init__(self, symbols, base1, base2):
        # symbols is 1-based: slot 0 is ignored
        self.n_padded = len(symbols) - 1
        self.sym = list(symbols)
        self.sym[0] = 0
        self.base1 = base1 % MOD
        self.base2 = base2 % MOD
        size = self.n_padded + 1
        self.pow1 = [1] * (size + 1)
        self.pow2 = [1] * (size + 1)
        for t in range(1, size + 1):
            self.pow1[t] = self.pow1[t - 1] * self.base1 % MOD
            self.pow2[t] = self.pow2[t - 1] * self.base2 % MOD
        f1 = [0] * size
        f2 = [0] * size
        for t in range(1, size):
            f1[t] = (f1[t] + self.sym[t] * self.pow1[t]) % MOD
            f2[t] = (f2[t] + self.sym[t] * self.pow2[t]) % MOD
            up = t + (t & -t)
            if up < size:
                f1[up] = (f1[up] + f1[t]) % MOD
                f2[up] = (f2[up] + f2[t]) % MOD
        self.f1 = f1
        self.f2 = f2
        self.calls = 0
        self.disagreements = 0

    def reset_counters(self):
        self.calls = 0
        self.disagreements = 0

    def symbol(self, pos):
        return self.sym[pos]

    def set(self, pos, value):
        old = self.sym[pos]
        if old == value:
            return
        self.sym[pos] = value
        d1 = (value - old) * self.pow1[pos] % MOD
        d2 = (value - old) * self.pow2[pos] % MOD
        f1, f2 = self.f1, self.f2
        size = len(f1)
        t = pos
        while t < size:
            f1[t] = (f1[t] + d1) % MOD
            f2[t] = (f2[t] + d2) % MOD
            t += t & -t

    def _prefix(self, t):
        f1, f2 = self.f1, self.f2
        s1 = s2 = 0
        while t > 0:
            s1 += f1[t]
            s2 += f2[t]
            t -= t & -t
        return s1 % MOD, s2 % MOD

    def _equal(self, i, j, length):
        """Fingerprint test for ``S[i:i+length] == S[j:j+length]`` with ``i < j``."""
        a1, a2 = self._prefix(i + length - 1)
        b1, b2 = self._prefix(i - 1)
        c1, c2 = self._prefix(j + length - 1)
        d1, d2 = self._prefix(j - 1)
        shift = j - i
        eq1 = (a1 - b1) * self.pow1[shift] % MOD == (c1 - d1) % MOD
        eq2 = (a2 - b2) * self.pow2[shift] % MOD == (c2 - d2) % MOD
        if eq1 == eq2:
            return eq1
        self.disagreements += 1
        sym = self.sym
        return sym[i : i + length] == sym[j : j + length]

    def _extend(self, i, j, limit, step):
        # shared galloping search; step is +1 (forward) or -1 (backward)
        sym = self.sym
        l = 0
        bound = limit if limit < SCAN else SCAN
        if step > 0:
            while l < bound and sym[i + l] == sym[j + l]:
                l += 1
        else:
            while l < bound and sym[i - l] == sym[j - l]:
                l += 1
        if l < bound or l == limit:
            return l
        lo, hi = (i, j) if i < j else (j, i)

        def equal(length):
            if step > 0:
                return self._equal(lo, hi, length)
            return self._equal(lo - length + 1, hi - length + 1, length)

        good = l
        while True:
            probe = min(limit, 2 * good)
            if equal(probe):
                good = probe
                if good == limit:
                    return good
            else:
                bad = probe
                break
        while bad - good > SCAN:
            mid = (good + bad) // 2
            if equal(mid):
                good = mid
            else:
                bad = mid
        if step > 0:
            while good < bad and sym[i + good] == sym[j + good]:
                good += 1
        else:
            while good < bad and sym[i - good] == sym[j - good]:
                good += 1
        return good

    def lcp(self, i, j, cap):
        self.calls += 1
        if i == j:
            limit = self.n_padded - i + 1
            return cap if cap < limit else limit
        limit = self.n_padded - (i if i > j else j) + 1
        if cap < limit:
            limit = cap
        if limit <= 0:
            return 0
        return self._extend(i, j, limit, 1)

    def lcs(self, i, j, cap):
        self.calls += 1
        limit = i if i < j else j
        if cap < limit:
            limit = cap
        if i == j or limit <= 0:
            return limit if limit > 0 else 0
        return self._extend(i, j, limit, -1)

    def cmp_prefix(self, i, j, length):
        """Order of ``S[i:i+length]`` against ``S[j:j+length]`` as -1, 0 or 1."""
        self.calls += 1
        if i == j:
            return 0
        limit = self.n_padded - (i if i > j else j) + 1
        if length < limit:
            limit = length
        l = self._extend(i, j, limit, 1)
        if l >= length:
            return 0
        if l == limit:
            # one side ran off the padded end; the shorter one sorts first
            return -1 if i > j else 1
        return -1 if self.sym[i + l] < self.sym[j + l] else 1

    def compare(self, i, j):
        """Order of the padded suffixes at ``i`` and ``j`` as -1, 0 or 1."""
        return self.cmp_prefix(i, j, self.n_padded + 1)

    def sort(self, positions):
        return sorted(positions, key=cmp_to_key(self.compare))

    def count_smaller(self, i, positions):
        """Number of positions (other than ``i``) whose suffix sorts below suffix ``i``."""
        compare = self.compare
        return sum(1 for j in positions if j != i and compare(j, i) < 0)
