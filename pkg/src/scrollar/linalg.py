"""Dense Gauss-Jordan elimination over any exact field.

Entries only need field operators and truthiness, so the same routines serve
scalars (rationals, GF(p)) and rational functions in x.
"""

from __future__ import annotations

from typing import Callable, Sequence


def rref(rows: Sequence[Sequence], pick: Callable | None = None):
    """Reduced row echelon form.

    Returns ``(matrix, pivot_columns)``.  ``pick(candidates)`` may choose the
    pivot row among ``(row_index, entry)`` pairs; default is the first.
    """
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        cands = [(i, m[i][c]) for i in range(r, len(m)) if m[i][c]]
        if not cands:
            continue
        p = pick(cands) if pick else cands[0][0]
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    """Rank by forward elimination, touching only nonzero pivot-row entries."""
    m = [dict((j, v) for j, v in enumerate(r) if v) for r in rows]
    m = [r for r in m if r]
    rk = 0
    while m:
        # pivot: the row whose leading column is smallest, shortest on ties
        lead = [min(r) for r in m]
        c = min(lead)
        cand = [i for i, l in enumerate(lead) if l == c]
        p = min(cand, key=lambda i: len(m[i]))
        prow = m.pop(p)
        inv = 1 / prow[c]
        rest = []
        for r in m:
            v = r.get(c)
            if v:
                f = v * inv
                for j, a in prow.items():
                    w = r.get(j, 0) - f * a
                    if w:
                        r[j] = w
                    else:
                        r.pop(j, None)
            if r:
                rest.append(r)
        m = rest
        rk += 1
    return rk


def nullspace(rows: Sequence[Sequence], ncols: int, zero, one) -> list[list]:
    """Basis of {v : rows . v = 0} as a list of column vectors."""
    if not rows:
        return [[one if i == j else zero for i in range(ncols)] for j in range(ncols)]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][f]
        basis.append(v)
    return basis


def inverse(mat: Sequence[Sequence], zero, one) -> list[list]:
    n = len(mat)
    aug = [list(row) + [one if i == j else zero for j in range(n)]
           for i, row in enumerate(mat)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence], zero) -> list[list]:
    bt = list(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = zero
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def det(mat: Sequence[Sequence], zero, one):
    m = [list(r) for r in mat]
    n = len(m)
    sign = one
    acc = one
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return zero
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        acc = acc * m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return sign * acc


def transpose(m: Sequence[Sequence]) -> list[list]:
    return [list(r) for r in zip(*m)]
