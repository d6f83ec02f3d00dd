"""Pure-Python hot loops.  ``_ckernels.pyx`` mirrors these signatures exactly.

All element values here are 0-based.  Tables are flat lists, ``mul[x*n+y]``.
"""

BRANCH, MUL, DIV = 0, 1, 2


def _perms(n):
    import itertools

    perms = list(itertools.permutations(range(n)))[1:]
    out = []
    for p in perms:
        inv = [0] * n
        for i, v in enumerate(p):
            inv[v] = i
        out.append((p, inv))
    return out


def is_canonical(tab, n, perms=None):
    """True iff no relabelling gives a lexicographically smaller flat table."""
    if perms is None:
        perms = _perms(n)
    for p, inv in perms:
        for pos in range(n * n):
            i, j = divmod(pos, n)
            v = p[tab[inv[i] * n + inv[j]]]
            if v != tab[pos]:
                if v < tab[pos]:
                    return False
                break
    return True


def fill_order(n):
    """Cells of growing leading principal blocks; (i,j) and (j,i) are adjacent."""
    order = []
    for m in range(n):
        for i in range(m):
            order += [(i, m), (m, i)]
        order.append((m, m))
    return order


def enumerate_tables(n, canonical_only=False):
    """Every valid switch table of order n, as flat 0-based tuples, lexicographic.

    With ``canonical_only`` keep only lexicographic minima of isomorphism classes.
    """
    N = n * n
    order = fill_order(n)
    perms = _perms(n) if canonical_only else None
    tab = [-1] * N
    col_used = [[False] * n for _ in range(n)]
    pair_used = [False] * N
    out = []

    def place(k):
        if k == N:
            if not canonical_only or is_canonical(tab, n, perms):
                out.append(tuple(tab))
            return
        i, j = order[k]
        cu = col_used[j]
        w = tab[j * n + i]
        for v in range(n):
            if cu[v]:
                continue
            if i == j:
                pairs = (v * n + v,)
            elif w >= 0:
                # both S(i,j) = (w, v) and S(j,i) = (v, w) become known
                if w == v:
                    continue
                pairs = (w * n + v, v * n + w)
            else:
                pairs = ()
            if any(pair_used[p] for p in pairs):
                continue
            for p in pairs:
                pair_used[p] = True
            cu[v] = True
            tab[i * n + j] = v
            place(k + 1)
            tab[i * n + j] = -1
            cu[v] = False
            for p in pairs:
                pair_used[p] = False

    place(0)
    out.sort()
    return out


def count_plan(n, mul, div, var, kind, srca, srcb, check_start, checks):
    """Count assignments along a static elimination plan.

    Step k assigns ``var[k]``: every value (BRANCH), ``val[srca].val[srcb]``
    (MUL) or ``val[srca] /. val[srcb]`` (DIV).  After step k the relations
    ``checks[3*r:3*r+3]`` for r in ``check_start[k]:check_start[k+1]`` are
    verified as ``val[l] == val[x].val[y]``.
    """
    nsteps = len(var)
    if nsteps == 0:
        return 1
    val = [0] * (max(var) + 1)
    choice = [0] * nsteps
    count = 0
    k = 0
    entering = True
    while k >= 0:
        if entering:
            kd = kind[k]
            if kd == BRANCH:
                choice[k] = 0
            else:
                choice[k] = n - 1  # derived steps have a single candidate
            if kd == MUL:
                val[var[k]] = mul[val[srca[k]] * n + val[srcb[k]]]
            elif kd == DIV:
                val[var[k]] = div[val[srca[k]] * n + val[srcb[k]]]
            else:
                val[var[k]] = 0
        else:
            if choice[k] == n - 1:
                k -= 1
                continue
            choice[k] += 1
            val[var[k]] = choice[k]
        ok = True
        for r in range(check_start[k], check_start[k + 1]):
            b = 3 * r
            if val[checks[b]] != mul[val[checks[b + 1]] * n + val[checks[b + 2]]]:
                ok = False
                break
        if ok:
            if k == nsteps - 1:
                count += 1
                entering = False
            else:
                k += 1
                entering = True
        else:
            entering = False
    return count


def brute_force(n, mul, nvars, rels):
    """Exhaustive odometer scan over n**nvars assignments; rels is flat (l, x, y)*."""
    if nvars == 0:
        return 1
    m = len(rels) // 3
    val = [0] * nvars
    count = 0
    while True:
        ok = True
        for r in range(m):
            b = 3 * r
            if val[rels[b]] != mul[val[rels[b + 1]] * n + val[rels[b + 2]]]:
                ok = False
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
            return count
