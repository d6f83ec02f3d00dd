# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the loops in ``_pykernels``; same signatures, same results."""

from libc.stdlib cimport malloc, calloc, free

from . import _pykernels as _pyk

cdef enum:
    BRANCH = 0
    MUL = 1
    DIV = 2


cdef int* _to_c(seq) except NULL:
    cdef Py_ssize_t m = len(seq), i
    cdef int* buf = <int*>malloc((m + 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    for i in range(m):
        buf[i] = seq[i]
    return buf


cdef bint _is_canonical(int* tab, int n, int* perms, int* invs, int nperm):
    cdef int k, pos, v
    cdef int* p
    cdef int* inv
    for k in range(nperm):
        p = perms + k * n
        inv = invs + k * n
        for pos in range(n * n):
            v = p[tab[inv[pos // n] * n + inv[pos % n]]]
            if v != tab[pos]:
                if v < tab[pos]:
                    return False
                break
    return True


def is_canonical(tab, int n, perms=None):
    cdef int* ctab = _to_c(tab)
    plist = _pyk._perms(n)
    flat_p = [v for p, inv in plist for v in p]
    flat_i = [v for p, inv in plist for v in inv]
    cdef int* cp = _to_c(flat_p)
    cdef int* ci = _to_c(flat_i)
    try:
        return _is_canonical(ctab, n, cp, ci, len(plist))
    finally:
        free(ctab); free(cp); free(ci)


def enumerate_tables(int n, bint canonical_only=False):
    cdef int N = n * n
    plist = _pyk._perms(n) if canonical_only else []
    cdef int nperm = len(plist)
    cdef int* cp = _to_c([v for p, inv in plist for v in p])
    cdef int* ci = _to_c([v for p, inv in plist for v in inv])
    cdef int* cell = _to_c([i * n + j for i, j in _pyk.fill_order(n)])
    cdef int* tab = <int*>malloc(N * sizeof(int))
    cdef char* col_used = <char*>calloc(N, 1)
    cdef char* pair_used = <char*>calloc(N, 1)
    cdef int* cand = <int*>malloc(N * sizeof(int))
    cdef int k, c, i, j, v, w, p1, p2
    out = []
    try:
        for k in range(N):
            tab[k] = -1
            cand[k] = -1
        k = 0
        while k >= 0:
            if k == N:
                if not canonical_only or _is_canonical(tab, n, cp, ci, nperm):
                    out.append(tuple([tab[i] for i in range(N)]))
                k -= 1
                continue
            c = cell[k]
            i = c // n
            j = c % n
            w = tab[j * n + i] if i != j else -1
            # release the current value of this cell, if any
            v = tab[c]
            if v >= 0:
                col_used[j * n + v] = 0
                if i == j:
                    pair_used[v * n + v] = 0
                elif w >= 0:
                    pair_used[w * n + v] = 0
                    pair_used[v * n + w] = 0
                tab[c] = -1
            v = cand[k] + 1
            while v < n:
                if col_used[j * n + v]:
                    v += 1
                    continue
                if i == j:
                    if pair_used[v * n + v]:
                        v += 1
                        continue
                    pair_used[v * n + v] = 1
                elif w >= 0:
                    p1 = w * n + v
                    p2 = v * n + w
                    if w == v or pair_used[p1] or pair_used[p2]:
                        v += 1
                        continue
                    pair_used[p1] = 1
                    pair_used[p2] = 1
                break
            if v >= n:
                cand[k] = -1
                k -= 1
                continue
            cand[k] = v
            tab[c] = v
            col_used[j * n + v] = 1
            k += 1
    finally:
        free(tab); free(col_used); free(pair_used); free(cand)
        free(cp); free(ci); free(cell)
    out.sort()
    return out


def count_plan(int n, mul, div, var, kind, srca, srcb, check_start, checks):
    cdef Py_ssize_t nsteps = len(var)
    if nsteps == 0:
        return 1
    cdef int nv = max(var) + 1
    cdef int* cmul = _to_c(mul)
    cdef int* cdiv = _to_c(div)
    cdef int* cvar = _to_c(var)
    cdef int* ckind = _to_c(kind)
    cdef int* ca = _to_c(srca)
    cdef int* cb = _to_c(srcb)
    cdef int* cs = _to_c(check_start)
    cdef int* cc = _to_c(checks)
    cdef int* val = <int*>calloc(nv, sizeof(int))
    cdef int* choice = <int*>calloc(nsteps, sizeof(int))
    cdef long long count = 0
    cdef Py_ssize_t k = 0
    cdef int entering = 1, ok, kd, r, b
    try:
        while k >= 0:
            if entering:
                kd = ckind[k]
                if kd == BRANCH:
                    choice[k] = 0
                    val[cvar[k]] = 0
                else:
                    choice[k] = n - 1
                    if kd == MUL:
                        val[cvar[k]] = cmul[val[ca[k]] * n + val[cb[k]]]
                    else:
                        val[cvar[k]] = cdiv[val[ca[k]] * n + val[cb[k]]]
            else:
                if choice[k] == n - 1:
                    k -= 1
                    continue
                choice[k] += 1
                val[cvar[k]] = choice[k]
            ok = 1
            for r in range(cs[k], cs[k + 1]):
                b = 3 * r
                if val[cc[b]] != cmul[val[cc[b + 1]] * n + val[cc[b + 2]]]:
                    ok = 0
                    break
            if ok:
                if k == nsteps - 1:
                    count += 1
                    entering = 0
                else:
                    k += 1
                    entering = 1
            else:
                entering = 0
    finally:
        free(cmul); free(cdiv); free(cvar); free(ckind)
        free(ca); free(cb); free(cs); free(cc)
        free(val); free(choice)
    return count


def brute_force(int n, mul, int nvars, rels):
    if nvars == 0:
        return 1
    cdef int m = len(rels) // 3
    cdef int* cmul = _to_c(mul)
    cdef int* cr = _to_c(rels)
    cdef int* val = <int*>calloc(nvars, sizeof(int))
    cdef long long count = 0
    cdef int i, r, b, ok
    try:
        while True:
            ok = 1
            for r in range(m):
                b = 3 * r
                if val[cr[b]] != cmul[val[cr[b + 1]] * n + val[cr[b + 2]]]:
                    ok = 0
                    break
            if ok:
                count += 1
            i = 0
            while i < nvars:
                val[i] += 1
                if val[i] < n:
                    break
                val[i] = 0
                i += 1
            if i == nvars:
                break
    finally:
        free(cmul); free(cr); free(val)
    return count
