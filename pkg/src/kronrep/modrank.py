"""Certified modular bounds for ranks of integer matrices.

For an integer matrix A, the rank over F_p never exceeds the rank over Q,
so a single mod-p elimination yields an exact upper bound on the
Q-nullity (and a lower bound on the Q-rank).  Callers combine such bounds
with exact lower bounds (an Euler-form count, an exhibited solution) and
obtain exact dimensions whenever the two sides meet; when they do not,
they fall back to exact rational elimination.  Nothing here is ever
trusted beyond these one-sided inequalities, so all downstream verdicts
stay exact.

Eliminations run in float64 (exact for integers below 2**53): a plain
vectorized sweep for small matrices, and a right-looking block LU whose
trailing updates are BLAS matmuls for large ones.
"""

import numpy as np

# Primes sized so that a dot product of PANEL <= 128 terms of (p-1)^2 each
# stays below 2**53 (exact in float64).
PRIMES = (8388593, 8388587, 8388581, 8388571)
_PANEL = 128
_BLOCK_THRESHOLD = 192


def rank_mod(a, p):
    """Rank of an integer matrix over F_p. ``a`` is any ndarray of integers."""
    a = np.asarray(a)
    if a.size == 0:
        return 0
    return rank_mod_reduced(np.mod(a, p).astype(np.float64), p)


def rank_mod_reduced(work, p):
    """Rank over F_p of a float64 matrix whose entries are already reduced;
    destroys ``work``."""
    if work.size == 0:
        return 0
    if min(work.shape) <= _BLOCK_THRESHOLD:
        return _rank_sweep(work, p)
    return _rank_blocked(work, p)


def nullity_mod(a, p):
    a = np.asarray(a)
    cols = a.shape[1] if a.ndim == 2 else 0
    return cols - rank_mod(a, p)


def nullity_upper_bound(a, primes=PRIMES, tries=2, target=None):
    """min over a few primes of the mod-p nullity: an upper bound for Q-nullity.

    ``target`` is an optional known lower bound; once a prime achieves it,
    the bound is the exact nullity and further primes are skipped.
    """
    a = np.asarray(a)
    if a.size == 0:
        return a.shape[1] if a.ndim == 2 else 0
    best = None
    for p in primes[:tries]:
        n = nullity_mod(a, p)
        best = n if best is None else min(best, n)
        if best == 0 or (target is not None and best <= target):
            break
    return best


def rank_lower_bound(a, primes=PRIMES, tries=2):
    a = np.asarray(a)
    cols = a.shape[1] if a.ndim == 2 else 0
    return cols - nullity_upper_bound(a, primes, tries)


def _reduce_mod(v, p):
    """In-place reduction of integer-valued float64 data into [0, p).

    floor(v/p) can be off by one at representation boundaries, so a single
    exact clamp pass follows; all values stay below 2**53 throughout.
    """
    q = np.floor(v * (1.0 / p))
    q *= p
    v -= q
    np.add(v, p, out=v, where=v < 0)
    np.subtract(v, p, out=v, where=v >= p)
    return v


def _rank_sweep(a, p):
    """Vectorized Gaussian elimination mod p; destroys ``a`` (float64, reduced)."""
    rows, cols = a.shape
    piv = 0
    for c in range(cols):
        col = a[piv:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        r = piv + int(nz[0])
        if r != piv:
            a[[piv, r], c:] = a[[r, piv], c:]
        inv = pow(int(a[piv, c]), p - 2, p)
        pivrow = a[piv, c:]
        np.multiply(pivrow, inv, out=pivrow)
        _reduce_mod(pivrow, p)
        below = a[piv + 1:, c:]
        if below.size:
            mult = below[:, 0]
            if np.any(mult):
                below -= np.outer(mult, pivrow)
                _reduce_mod(below, p)
        piv += 1
        if piv == rows:
            break
    return piv


def _rank_blocked(a, p, panel=_PANEL):
    """Right-looking block LU mod p with BLAS trailing updates; rank only.

    Inside a panel, reduction is deferred: with p < sqrt(2**53 / panel) the
    entries stay exactly representable through a whole panel of updates, so
    only the pivot column and pivot row are reduced per step.
    """
    m, n = a.shape
    row = 0
    col = 0
    while row < m and col < n:
        w = min(panel, n - col)
        sub = np.ascontiguousarray(a[row:, col:col + w])
        mb = sub.shape[0]
        # panel factorization with row pivoting; the panel rows are scaled to
        # unit pivots, so the composite row transform is the inverse of the
        # lower-triangular factor whose diagonal holds the original pivots
        perm = np.arange(mb)
        lcols = []
        pivvals = []
        k = 0
        for j in range(w):
            colv = sub[k:, j]
            _reduce_mod(colv, p)
            nz = np.nonzero(colv)[0]
            if nz.size == 0:
                continue
            r = k + int(nz[0])
            if r != k:
                sub[[k, r]] = sub[[r, k]]
                perm[[k, r]] = perm[[r, k]]
                for lc in lcols:
                    lc[[k, r]] = lc[[r, k]]
            pivrow = sub[k, j:]
            _reduce_mod(pivrow, p)
            pv = int(pivrow[0])
            inv = pow(pv, p - 2, p)
            np.multiply(pivrow, inv, out=pivrow)
            _reduce_mod(pivrow, p)
            mult = sub[k + 1:, j].copy()
            below = sub[k + 1:, j:]
            if below.size and np.any(mult):
                below -= np.outer(mult, pivrow)   # deferred reduction
            lc = np.zeros(mb)
            lc[k + 1:] = mult
            lcols.append(lc)
            pivvals.append(pv)
            k += 1
            if row + k == m:
                break
        if k == 0:
            col += w
            continue
        trail = n - (col + w)
        if trail > 0:
            # apply the same permutation and row transform to the trailing
            # columns: T1 <- M^{-1} T1 with M lower triangular (diagonal =
            # original pivots, strictly-lower = multipliers), T2 -= L21 T1
            t = a[row:, col + w:]
            moved = np.nonzero(perm != np.arange(mb))[0]
            if moved.size:
                t[moved] = t[perm[moved]]
            lfac = np.zeros((k, k))
            for jj, lc in enumerate(lcols):
                lfac[jj + 1:k, jj] = lc[jj + 1:k]
                lfac[jj, jj] = pivvals[jj]
            linv = _lower_inverse_mod(lfac, p)
            u12 = _matmul_mod(linv, t[:k], p)
            t[:k] = u12
            if mb > k:
                l21 = np.empty((mb - k, k))
                for jj, lc in enumerate(lcols):
                    l21[:, jj] = lc[k:]
                t2 = t[k:]
                t2 -= l21 @ u12
                _reduce_mod(t2, p)
        row += k
        col += w
    return row


def _lower_inverse_mod(l, p):
    """Inverse mod p of a small lower-triangular float64 matrix with
    invertible diagonal, by forward substitution."""
    k = l.shape[0]
    dinv = [pow(int(l[i, i]), p - 2, p) for i in range(k)]
    inv = np.zeros((k, k))
    for j in range(k):
        inv[j, j] = dinv[j]
        for i in range(j + 1, k):
            s = np.dot(l[i, j:i], inv[j:i, j]) % p
            inv[i, j] = (-s * dinv[i]) % p
    return inv


def _matmul_mod(a, b, p):
    """a @ b mod p for float64 integer matrices, chunked so dot products
    never exceed 2**53."""
    k = a.shape[1]
    chunk = max(1, int(2 ** 53 // (p * p)) - 1)
    if k <= chunk:
        return _reduce_mod(a @ b, p)
    out = np.zeros((a.shape[0], b.shape[1]))
    for s in range(0, k, chunk):
        out += a[:, s:s + chunk] @ b[s:s + chunk]
        _reduce_mod(out, p)
    return out


def to_mod(m, p):
    """Exact rational Matrix -> float64 array of entries reduced mod p.

    Denominators are inverted mod p; they are tiny in this package, so a
    denominator divisible by p (which would make the reduction undefined)
    is rejected rather than worked around.
    """
    out = np.zeros((m.rows, m.cols))
    for i, row in enumerate(m.data):
        for j, e in enumerate(row):
            if not e:
                continue
            num = int(e.numerator) % p
            den = int(e.denominator) % p
            if den == 0:
                raise ZeroDivisionError("denominator divisible by the working prime")
            out[i, j] = num if den == 1 else (num * pow(den, p - 2, p)) % p
    return out


def left_inverse_null_mod(a, p):
    """(R, Q) with R a = I and Q a = 0 over F_p, for a float64 matrix ``a``
    (entries already reduced) of full column rank; None when rank-deficient.

    Q's rows form a basis of the left null space, so rows(R) + rows(Q) equals
    the number of rows of ``a``.
    """
    rows, cols = a.shape
    if rows < cols:
        return None
    work = np.hstack([a.copy(), np.eye(rows)])
    piv = 0
    pivcols = []
    for c in range(cols):
        colv = work[piv:, c]
        nz = np.nonzero(colv)[0]
        if nz.size == 0:
            return None
        r = piv + int(nz[0])
        if r != piv:
            work[[piv, r]] = work[[r, piv]]
        inv = pow(int(work[piv, c]), p - 2, p)
        work[piv, c:] = np.mod(work[piv, c:] * inv, p)
        rest = np.nonzero(work[:, c])[0]
        rest = rest[rest != piv]
        if rest.size:
            work[rest, c:] = np.mod(work[rest, c:]
                                    - np.outer(work[rest, c], work[piv, c:]), p)
        pivcols.append(c)
        piv += 1
    t = work[:, cols:]
    return t[:cols], t[cols:]


def matrix_to_int_array(m):
    """Exact Matrix -> int64 ndarray, clearing denominators row by row.

    Row scaling by positive integers preserves rank and kernel.  Raises if
    the cleared integers risk float64/int64 trouble downstream (they are
    small in every system this package builds).
    """
    if m.p is not None:
        raise ValueError("prime-field matrices take the exact path")
    out = np.zeros((m.rows, m.cols), dtype=np.int64)
    for i, row in enumerate(m.data):
        lcm = 1
        for e in row:
            d = e.denominator
            if d != 1:
                g = _gcd(lcm, d)
                lcm = lcm // g * d
        for j, e in enumerate(row):
            v = e.numerator * (lcm // e.denominator)
            if abs(v) > 2 ** 52:
                raise OverflowError("entry too large for the modular fast path")
            out[i, j] = int(v)
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
