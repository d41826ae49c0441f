# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""C integer kernels for the hot loops.

Same observable behaviour as okubo_e8._kernels._pykernels; inputs are
pre-checked on the Python side so that every intermediate fits in 62 bits.
"""

from libc.stdlib cimport free, malloc


cdef long long c_isqrt(long long v):
    cdef long long x
    if v <= 0:
        return 0
    x = <long long> ((<double> v) ** 0.5)
    while x > 0 and x * x > v:
        x -= 1
    while (x + 1) * (x + 1) <= v:
        x += 1
    return x


cdef long long fdiv(long long a, long long b):
    # floor division for b > 0 (cdivision truncates toward zero)
    cdef long long q = a / b
    if a % b != 0 and a < 0:
        q -= 1
    return q


def enum_core(int n, list weights, list pivots, list offsets, object bound):
    """All nonzero x with sum_c W_c (b_c x_c + sum offsets_c . x_tail)^2 <= bound."""
    cdef long long sc = bound
    cdef int c, t, nm1 = n - 1
    cdef long long *w = <long long *> malloc(n * sizeof(long long))
    cdef long long *b = <long long *> malloc(n * sizeof(long long))
    cdef long long *off_flat = <long long *> malloc((n * n) * sizeof(long long))
    cdef long long *x = <long long *> malloc(n * sizeof(long long))
    cdef long long *cur = <long long *> malloc(n * sizeof(long long))
    cdef long long *hi = <long long *> malloc(n * sizeof(long long))
    cdef long long *off = <long long *> malloc(n * sizeof(long long))
    cdef long long *rem = <long long *> malloc(n * sizeof(long long))
    cdef long long m, o, tt
    cdef int i, descend
    out = []
    if w == NULL or b == NULL or off_flat == NULL or x == NULL or cur == NULL \
            or hi == NULL or off == NULL or rem == NULL:
        raise MemoryError()
    try:
        for c in range(n):
            w[c] = weights[c]
            b[c] = pivots[c]
            x[c] = 0
            row = offsets[c]
            for t in range(n - 1 - c):
                off_flat[c * n + t] = row[t]
        if sc < 0:
            return out

        c = nm1
        rem[c] = sc
        descend = 1
        while True:
            if descend:
                o = 0
                for t in range(nm1 - c):
                    if x[c + 1 + t]:
                        o += off_flat[c * n + t] * x[c + 1 + t]
                off[c] = o
                m = c_isqrt(rem[c] // w[c])
                # x_c in [ceil((-m-o)/b), floor((m-o)/b)]
                cur[c] = -fdiv(m + o, b[c])
                hi[c] = fdiv(m - o, b[c])
                descend = 0
            if cur[c] > hi[c]:
                x[c] = 0
                c += 1
                if c > nm1:
                    break
                cur[c] += 1
                continue
            x[c] = cur[c]
            tt = b[c] * cur[c] + off[c]
            if c == 0:
                for i in range(n):
                    if x[i] != 0:
                        out.append(tuple([x[i2] for i2 in range(n)]))
                        break
                cur[c] += 1
                continue
            rem[c - 1] = rem[c] - w[c] * tt * tt
            c -= 1
            descend = 1
        return out
    finally:
        free(w)
        free(b)
        free(off_flat)
        free(x)
        free(cur)
        free(hi)
        free(off)
        free(rem)


def metric_filter(list gram):
    """Signed block permutations leaving the 8x8 integer Gram invariant."""
    from itertools import permutations

    cdef long long g[8][8]
    cdef long long pg[8][8]
    cdef int perm[8]
    cdef int eps[8]
    cdef int i, j, ok, m1, m2
    cdef long long v
    for i in range(8):
        row = gram[i]
        for j in range(8):
            g[i][j] = row[j]
    perms4 = list(permutations(range(4)))
    survivors = []
    for p1 in perms4:
        for i in range(4):
            perm[i] = p1[i]
        for p2 in perms4:
            for i in range(4):
                perm[4 + i] = 4 + <int> p2[i]
            for i in range(8):
                for j in range(8):
                    pg[i][j] = g[perm[i]][perm[j]]
            for m1 in range(16):
                for i in range(4):
                    eps[i] = -1 if (m1 >> (3 - i)) & 1 else 1
                for m2 in range(16):
                    for i in range(4):
                        eps[4 + i] = -1 if (m2 >> (3 - i)) & 1 else 1
                    ok = 1
                    for i in range(8):
                        for j in range(i, 8):
                            v = eps[i] * eps[j] * pg[i][j]
                            if v != g[i][j]:
                                ok = 0
                                break
                        if not ok:
                            break
                    if ok:
                        survivors.append(
                            (tuple([perm[i] for i in range(8)]),
                             tuple([eps[i] for i in range(8)]))
                        )
    return survivors


def closure_check(list vecs2, idx, sgn):
    """(membership failures, norm failures) over all pairwise products."""
    cdef int count = len(vecs2)
    cdef long long *vt = <long long *> malloc(count * 8 * sizeof(long long))
    cdef long long acc[8]
    cdef long long half[8]
    cdef int it[8][8]
    cdef int st[8][8]
    cdef int a, bb, i, j, k, odd
    cdef long long xi, yj
    cdef long long bad_member = 0, bad_norm = 0
    cdef long long nrm
    cdef int lo, mid, hi2, cmp_res
    if vt == NULL:
        raise MemoryError()
    try:
        for a in range(count):
            row = vecs2[a]
            for i in range(8):
                vt[a * 8 + i] = row[i]
        for i in range(8):
            for j in range(8):
                it[i][j] = idx[i][j]
                st[i][j] = sgn[i][j]
        for a in range(count):
            for bb in range(count):
                for k in range(8):
                    acc[k] = 0
                for i in range(8):
                    xi = vt[a * 8 + i]
                    if xi == 0:
                        continue
                    for j in range(8):
                        yj = vt[bb * 8 + j]
                        if yj != 0:
                            acc[it[i][j]] += st[i][j] * xi * yj
                nrm = 0
                for k in range(8):
                    nrm += acc[k] * acc[k]
                if nrm != 16:
                    bad_norm += 1
                odd = 0
                for k in range(8):
                    if acc[k] & 1:
                        odd = 1
                        break
                if odd:
                    bad_member += 1
                    continue
                for k in range(8):
                    half[k] = acc[k] >> 1
                # binary search in the sorted doubled-coordinate table
                lo = 0
                hi2 = count - 1
                cmp_res = -1
                while lo <= hi2:
                    mid = (lo + hi2) >> 1
                    cmp_res = 0
                    for k in range(8):
                        if vt[mid * 8 + k] < half[k]:
                            cmp_res = -1
                            break
                        if vt[mid * 8 + k] > half[k]:
                            cmp_res = 1
                            break
                    if cmp_res == 0:
                        break
                    if cmp_res < 0:
                        lo = mid + 1
                    else:
                        hi2 = mid - 1
                if cmp_res != 0:
                    bad_member += 1
    finally:
        free(vt)
    return bad_member, bad_norm
