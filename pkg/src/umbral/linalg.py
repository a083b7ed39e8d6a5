"""Exact Gaussian elimination over the rationals."""

from .rational import ZERO, rational


def rref(rows, ncols):
    """Reduced row echelon form of a dense matrix given as a list of rows.

    Pivots are chosen left to right, so the result depends only on the
    column order. Returns ``(reduced_rows, pivot_columns)``; zero rows are
    dropped.
    """
    mat = [[rational(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        lead = mat[r][col]
        row = [x / lead for x in mat[r]]
        mat[r] = row
        nz = [(k, x) for k, x in enumerate(row) if x]
        for i in range(len(mat)):
            if i != r:
                f = mat[i][col]
                if f:
                    target = mat[i]
                    for k, x in nz:
                        target[k] -= f * x
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def nullspace(rows, ncols):
    """Basis of {v : A v = 0}, one vector per free column, in canonical form.

    The basis is itself returned in reduced row echelon form, so each vector
    has leading coordinate 1 and the result is unique for a given column order.
    """
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [ZERO] * ncols
        v[free] = rational(1)
        for row, pc in zip(reduced, pivots):
            if row[free]:
                v[pc] = -row[free]
        basis.append(v)
    if not basis:
        return []
    canonical, _ = rref(basis, ncols)
    return canonical


def rank(rows, ncols):
    return len(rref(rows, ncols)[1])
