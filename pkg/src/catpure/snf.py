"""Integer matrix utilities: Smith normal form and linear congruence solving.

Matrices are tuples of row tuples of Python ints.  Everything here works
over Z; callers reduce modulo a ring modulus where needed.  Sizes are
tiny (rarely above 30x30), so the classical pivoting algorithm with
explicit transform tracking is plenty.
"""

from __future__ import annotations

from math import gcd

Mat = tuple[tuple[int, ...], ...]


def mat(rows) -> Mat:
    return tuple(tuple(int(x) for x in r) for r in rows)


def zeros(r: int, c: int) -> Mat:
    return tuple((0,) * c for _ in range(r))


def eye(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Mat, b: Mat) -> Mat:
    if a and b:
        assert len(a[0]) == len(b), "shape mismatch"
    bt = tuple(zip(*b)) if b else ()
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a: Mat, v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a)) if a else ()


def hstack(a: Mat, b: Mat) -> Mat:
    if not a:
        return b
    if not b:
        return a
    assert len(a) == len(b)
    return tuple(ra + rb for ra, rb in zip(a, b))


def vstack(a: Mat, b: Mat) -> Mat:
    return tuple(a) + tuple(b)


class SmithForm:
    """U @ M @ V == D over Z, with U, V unimodular and D a divisibility chain.

    `uinv` and `vinv` are the integer inverses of `u` and `v`.
    """

    def __init__(self, u, d, v, uinv, vinv):
        self.u = u
        self.d = d
        self.v = v
        self.uinv = uinv
        self.vinv = vinv

    @property
    def rank(self) -> int:
        return sum(1 for i in range(min(len(self.d), len(self.d[0]) if self.d else 0))
                   if self.d[i][i] != 0)

    def diag(self) -> tuple[int, ...]:
        n = min(len(self.d), len(self.d[0]) if self.d else 0)
        return tuple(self.d[i][i] for i in range(n))


def smith(m: Mat) -> SmithForm:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [list(r) for r in m]
    u = [list(r) for r in eye(rows)]
    ui = [list(r) for r in eye(rows)]
    v = [list(r) for r in eye(cols)]
    vi = [list(r) for r in eye(cols)]

    def row_swap(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]
        for r in ui:
            r[i], r[k] = r[k], r[i]

    def row_add(i, k, c):  # row i += c * row k
        a[i] = [x + c * y for x, y in zip(a[i], a[k])]
        u[i] = [x + c * y for x, y in zip(u[i], u[k])]
        for r in ui:
            r[k] -= c * r[i]

    def col_swap(j, k):
        for r in a:
            r[j], r[k] = r[k], r[j]
        for r in v:
            r[j], r[k] = r[k], r[j]
        vi[j], vi[k] = vi[k], vi[j]

    def col_add(j, k, c):  # col j += c * col k
        for r in a:
            r[j] += c * r[k]
        for r in v:
            r[j] += c * r[k]
        vi[k] = [x - c * y for x, y in zip(vi[k], vi[j])]

    def row_neg(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]
        for r in ui:
            r[i] = -r[i]

    t = 0
    while t < min(rows, cols):
        # locate a pivot of least absolute value in the remaining block
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = abs(a[i][j])
                if x and (best is None or x < best):
                    best = x
                    pivot = (i, j)
        if pivot is None:
            break
        while True:
            i, j = pivot
            if i != t:
                row_swap(t, i)
            if j != t:
                col_swap(t, j)
            if a[t][t] < 0:
                row_neg(t)
            dirty = False
            for i in range(t + 1, rows):
                q = a[i][t] // a[t][t]
                if q:
                    row_add(i, t, -q)
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = a[t][j] // a[t][t]
                if q:
                    col_add(j, t, -q)
                if a[t][j]:
                    dirty = True
            if not dirty:
                break
            pivot = None
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    x = abs(a[i][j])
                    if x and (best is None or x < best):
                        best = x
                        pivot = (i, j)
        # enforce the divisibility chain
        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t]:
                    bad = j
                    break
            if bad is not None:
                break
        if bad is not None:
            col_add(t, bad, 1)
            continue
        t += 1

    return SmithForm(mat(u), mat(a), mat(v), mat(ui), mat(vi))


def solve_mod(a: Mat, b: tuple[int, ...], m: int):
    """One solution of a @ x = b (mod m), or None.

    Returns the particular solution obtained by taking minimal principal
    values on pivot coordinates and zero on free coordinates.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if rows == 0:
        return (0,) * cols
    s = smith(a)
    ub = mat_vec(s.u, b)
    y = [0] * cols
    n = min(rows, cols)
    for i in range(rows):
        d = s.d[i][i] if i < n else 0
        r = ub[i] % m
        if d % m == 0:
            if r:
                return None
            continue
        g = gcd(d, m)
        if r % g:
            return None
        mm = m // g
        y[i] = ((r // g) * pow((d // g) % mm, -1, mm)) % mm
    x = mat_vec(s.v, tuple(y))
    return tuple(xi % m for xi in x)


def kernel_mod(a: Mat, m: int) -> list[tuple[int, ...]]:
    """Generators of {x in (Z/m)^cols : a @ x = 0 (mod m)}."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if cols == 0:
        return []
    if rows == 0:
        return [tuple(1 if i == j else 0 for i in range(cols)) for j in range(cols)]
    s = smith(a)
    n = min(rows, cols)
    gens = []
    for j in range(cols):
        d = s.d[j][j] if j < n else 0
        g = gcd(d, m)
        step = m // g if g else 1
        if step % m == 0:
            continue  # y_j forced to 0 mod m
        gen = tuple(s.v[i][j] * step % m for i in range(cols))
        if any(gen):
            gens.append(gen)
    return gens


def kernel_z(a: Mat) -> list[tuple[int, ...]]:
    """Basis of the integer kernel lattice {x in Z^cols : a @ x = 0}."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if cols == 0:
        return []
    if rows == 0:
        return [tuple(1 if i == j else 0 for i in range(cols)) for j in range(cols)]
    s = smith(a)
    n = min(rows, cols)
    out = []
    for j in range(cols):
        d = s.d[j][j] if j < n else 0
        if d == 0:
            out.append(tuple(s.v[i][j] for i in range(cols)))
    return out
