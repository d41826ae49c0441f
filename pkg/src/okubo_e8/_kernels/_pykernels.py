"""Pure-Python reference kernels (arbitrary-precision integers).

Semantics must match okubo_e8._ckernels exactly; the parity test suite
compares both backends on the same inputs.
"""

from __future__ import annotations

from itertools import permutations, product
from math import isqrt


def enum_core(n, weights, pivots, offsets, bound):
    """Branch and bound over integer completed squares.

    Finds every nonzero x in Z^n with sum_c W_c * t_c^2 <= bound where
    t_c = pivots[c]*x_c + sum_t offsets[c][t]*x_{c+1+t}.
    """
    out = []
    x = [0] * n

    def descend(c, rem):
        if c < 0:
            if any(x):
                out.append(tuple(x))
            return
        off = 0
        orow = offsets[c]
        for t in range(n - 1 - c):
            xv = x[c + 1 + t]
            if xv:
                off += orow[t] * xv
        w = weights[c]
        m = isqrt(rem // w)
        b = pivots[c]
        lo = -(m + off)
        hi = m - off
        xc = -((-lo) // b)  # ceil(lo / b)
        top = hi // b
        while xc <= top:
            t = b * xc + off
            x[c] = xc
            descend(c - 1, rem - w * t * t)
            xc += 1
        x[c] = 0

    descend(n - 1, bound)
    return out


def metric_filter(gram):
    """Signed permutations preserving blocks {0..3} and {4..7} that leave
    the 8x8 integer Gram matrix invariant."""
    perms4 = list(permutations(range(4)))
    signs4 = list(product((1, -1), repeat=4))
    survivors = []
    for p1 in perms4:
        for p2 in perms4:
            perm = tuple(p1) + tuple(4 + t for t in p2)
            pg = [[gram[perm[i]][perm[j]] for j in range(8)] for i in range(8)]
            for s1 in signs4:
                for s2 in signs4:
                    eps = s1 + s2
                    ok = True
                    for i in range(8):
                        row_p, row_g, ei = pg[i], gram[i], eps[i]
                        for j in range(i, 8):
                            if ei * eps[j] * row_p[j] != row_g[j]:
                                ok = False
                                break
                        if not ok:
                            break
                    if ok:
                        survivors.append((perm, eps))
    return survivors


def closure_check(vecs2, idx, sgn):
    """Pairwise product closure for a unit set given by doubled coordinates.

    Returns (membership failures, norm failures): a product of two units
    must again be a unit (doubled coordinates in the set) of norm one
    (sum of squares of the 4x coordinates equal to 16).
    """
    vset = set(vecs2)
    bad_member = 0
    bad_norm = 0
    for xa in vecs2:
        nz_x = [(i, xa[i]) for i in range(8) if xa[i]]
        for yb in vecs2:
            acc = [0] * 8
            for i, xi in nz_x:
                row_i = idx[i]
                row_s = sgn[i]
                for j in range(8):
                    yj = yb[j]
                    if yj:
                        acc[row_i[j]] += row_s[j] * xi * yj
            if sum(v * v for v in acc) != 16:
                bad_norm += 1
            if any(v & 1 for v in acc) or tuple(v >> 1 for v in acc) not in vset:
                bad_member += 1
    return bad_member, bad_norm
