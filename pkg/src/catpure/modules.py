"""Finite Z/m-modules in invariant-factor form and their morphisms.

An object is a chain of invariant factors d_1 | d_2 | ... | d_k, each
dividing the ring modulus m and at least 2.  A morphism A -> B is a
matrix over Z/m with rows indexed by the factors of B and columns by
the factors of A; entry (i, j) sends the j-th generator of A into the
i-th cyclic summand of B, so it must be divisible by b_i / gcd(b_i, a_j)
and is stored reduced modulo b_i.

All structural computations (kernel, cokernel, image, subobject from
generators, presentation normalisation) reduce to integer Smith normal
form with transform tracking.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from math import gcd, prod

from .errors import CapExceededError, PreconditionError, default_bound
from .snf import Mat, eye, mat, mat_mul, smith, solve_mod


@dataclass(frozen=True)
class ModObject:
    """A finite Z/m-module in invariant-factor normal form."""

    m: int
    factors: tuple[int, ...]

    def __post_init__(self):
        if self.m < 2:
            raise PreconditionError(f"ring modulus must be >= 2, got {self.m}")
        prev = 1
        for d in self.factors:
            if d < 2 or self.m % d != 0:
                raise PreconditionError(
                    f"invariant factor {d} invalid over Z/{self.m}")
            if d % prev != 0:
                raise PreconditionError(
                    f"factors {self.factors} are not a divisibility chain")
            prev = d

    @property
    def k(self) -> int:
        return len(self.factors)

    @property
    def size(self) -> int:
        return prod(self.factors)

    def elements(self):
        return itertools.product(*[range(d) for d in self.factors])

    def __repr__(self):
        return f"Z{self.m}{list(self.factors)}"


def zero_object(m: int) -> ModObject:
    return ModObject(m, ())


class ModMorphism:
    """Matrix morphism between ModObjects, canonicalised per row."""

    __slots__ = ("dom", "cod", "mat", "_hash")

    def __init__(self, dom: ModObject, cod: ModObject, rows):
        if dom.m != cod.m:
            raise PreconditionError("ring modulus mismatch")
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if len(rows) != cod.k or any(len(r) != dom.k for r in rows):
            raise PreconditionError(
                f"matrix shape {len(rows)}x? does not match {cod.k}x{dom.k}")
        canon = []
        for i, r in enumerate(rows):
            ci = cod.factors[i]
            red = tuple(x % ci for x in r)
            for j, x in enumerate(red):
                step = ci // gcd(ci, dom.factors[j])
                if x % step:
                    raise PreconditionError(
                        f"entry ({i},{j})={x} not divisible by {step}; "
                        f"map would be ill-defined on generators")
            canon.append(red)
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "mat", tuple(canon))
        object.__setattr__(self, "_hash", hash((dom, cod, self.mat)))

    def __setattr__(self, *a):
        raise AttributeError("ModMorphism is immutable")

    def __eq__(self, other):
        return (isinstance(other, ModMorphism) and self.dom == other.dom
                and self.cod == other.cod and self.mat == other.mat)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"ModMorphism({self.dom}->{self.cod}, {[list(r) for r in self.mat]})"

    def __add__(self, other):
        if self.dom != other.dom or self.cod != other.cod:
            raise PreconditionError("cannot add morphisms with different ends")
        return ModMorphism(self.dom, self.cod,
                           [[x + y for x, y in zip(r, s)]
                            for r, s in zip(self.mat, other.mat)])

    def __sub__(self, other):
        if self.dom != other.dom or self.cod != other.cod:
            raise PreconditionError("cannot subtract morphisms with different ends")
        return ModMorphism(self.dom, self.cod,
                           [[x - y for x, y in zip(r, s)]
                            for r, s in zip(self.mat, other.mat)])

    def __neg__(self):
        return ModMorphism(self.dom, self.cod,
                           [[-x for x in r] for r in self.mat])

    def apply(self, elt):
        """Image of an element of dom (tuple of residues)."""
        return tuple(sum(x * e for x, e in zip(r, elt)) % ci
                     for r, ci in zip(self.mat, self.cod.factors))

    def is_zero(self) -> bool:
        return all(all(x == 0 for x in r) for r in self.mat)


def identity(a: ModObject) -> ModMorphism:
    return ModMorphism(a, a, eye(a.k))


def zero_morphism(a: ModObject, b: ModObject) -> ModMorphism:
    return ModMorphism(a, b, [[0] * a.k for _ in range(b.k)])


def compose(g: ModMorphism, f: ModMorphism) -> ModMorphism:
    """g after f."""
    if f.cod != g.dom:
        raise PreconditionError(f"cannot compose {g!r} after {f!r}")
    if f.cod.k == 0:  # factoring through the zero object
        return zero_morphism(f.dom, g.cod)
    return ModMorphism(f.dom, g.cod, mat_mul(g.mat, f.mat))


def power(f: ModMorphism, n: int) -> ModMorphism:
    if f.dom != f.cod:
        raise PreconditionError("power needs an endomorphism")
    out = identity(f.dom)
    for _ in range(n):
        out = compose(f, out)
    return out


# --------------------------------------------------------------------------
# hom-set enumeration

def hom_count(a: ModObject, b: ModObject) -> int:
    return prod(gcd(bi, aj) for bi in b.factors for aj in a.factors)


def entry_values(a: ModObject, b: ModObject):
    """Per-entry admissible values, row-major; value lists are ascending."""
    out = []
    for bi in b.factors:
        for aj in a.factors:
            step = bi // gcd(bi, aj)
            out.append(range(0, bi, step))
    return out


def hom_enumerate(a: ModObject, b: ModObject, bound: int | None = None):
    """All morphisms a -> b in canonical (row-major, ascending) order."""
    if bound is None:
        bound = default_bound()
    n = hom_count(a, b)
    if n > bound:
        raise CapExceededError(
            f"hom({a},{b}) has {n} elements, over the cap {bound}",
            needed=n, bound=bound)
    vals = entry_values(a, b)
    k = a.k
    for flat in itertools.product(*vals):
        rows = [flat[i * k:(i + 1) * k] for i in range(b.k)]
        yield ModMorphism(a, b, rows)


# --------------------------------------------------------------------------
# structure via Smith normal form

def _diag(factors) -> Mat:
    n = len(factors)
    return tuple(tuple(factors[i] if i == j else 0 for j in range(n))
                 for i in range(n))


def _project_kernel_cols(amat: Mat, ncols_keep: int, total_cols: int):
    """Integer kernel of `amat`, projected to the first `ncols_keep` coords."""
    from .snf import kernel_z
    if total_cols == 0:
        return []
    if not amat:
        basis = [tuple(1 if i == j else 0 for i in range(total_cols))
                 for j in range(total_cols)]
    else:
        basis = kernel_z(amat)
    return [v[:ncols_keep] for v in basis]


def subobject_from_generators(x: ModObject, gens: list[tuple[int, ...]]):
    """Subgroup of x generated by the given column vectors.

    Returns (s, incl) with s in normal form and incl : s -> x a mono.
    """
    m = x.m
    k = x.k
    if k == 0 or not gens:
        s = zero_object(m)
        return s, ModMorphism(s, x, [() for _ in range(k)])
    g_cols = [tuple(int(v) for v in col) for col in gens]
    ncols = len(g_cols)
    gmat = tuple(tuple(col[i] for col in g_cols) for i in range(k))  # k x ncols
    # relations among the generators inside x
    aug = tuple(gmat[i] + tuple(x.factors[i] if i == j else 0 for j in range(k))
                for i in range(k))
    rel = _project_kernel_cols(aug, ncols, ncols + k)
    if rel:
        rmat = tuple(tuple(v[i] for v in rel) for i in range(ncols))  # ncols x len
    else:
        rmat = tuple((0,) for _ in range(ncols))
    s_form = smith(rmat)
    diag = list(s_form.diag()) + [0] * (ncols - min(len(rmat), len(rmat[0])))
    new_gens = mat_mul(gmat, s_form.uinv)  # k x ncols, columns are generators
    kept = []
    factors = []
    for j in range(ncols):
        e = abs(diag[j]) if j < len(diag) else 0
        if e == 0:
            raise PreconditionError("generated subgroup is not finite (bad input)")
        if e == 1:
            continue
        if m % e:
            raise PreconditionError(f"generator order {e} does not divide {m}")
        kept.append(j)
        factors.append(e)
    s = ModObject(m, tuple(factors))
    incl = ModMorphism(s, x, [tuple(new_gens[i][j] for j in kept)
                              for i in range(k)])
    return s, incl


def kernel(f: ModMorphism):
    """(k, incl) with incl : k -> dom(f) the kernel of f."""
    a, b = f.dom, f.cod
    if a.k == 0:
        z = zero_object(a.m)
        return z, ModMorphism(z, a, ())
    if b.k == 0:
        return a, identity(a)
    aug = tuple(f.mat[i] + tuple(b.factors[i] if i == j else 0 for j in range(b.k))
                for i in range(b.k))
    lat = _project_kernel_cols(aug, a.k, a.k + b.k)
    return subobject_from_generators(a, lat)


def cokernel(f: ModMorphism):
    """(q, proj) with proj : cod(f) -> q the cokernel of f."""
    a, b = f.dom, f.cod
    m = b.m
    if b.k == 0:
        z = zero_object(m)
        return z, ModMorphism(z, z, ())
    rel = tuple(tuple(b.factors[i] if i == j else 0 for j in range(b.k)) + f.mat[i]
                for i in range(b.k))
    s_form = smith(rel)
    kept = []
    factors = []
    for i in range(b.k):
        e = abs(s_form.d[i][i])
        if e == 0:
            raise PreconditionError("cokernel not finite (bad input)")
        if e == 1:
            continue
        kept.append(i)
        factors.append(e)
    q = ModObject(m, tuple(factors))
    proj = ModMorphism(b, q, [s_form.u[i] for i in kept])
    return q, proj


def image(f: ModMorphism):
    """(i, incl, corestrict) with incl o corestrict == f, incl mono."""
    a, b = f.dom, f.cod
    cols = [tuple(f.mat[i][j] for i in range(b.k)) for j in range(a.k)]
    i_ob, incl = subobject_from_generators(b, cols)
    core = solve_hom(a, i_ob, left=[(incl, f)])
    if core is None:
        raise PreconditionError("internal: corestriction must exist")
    return i_ob, incl, core


@functools.lru_cache(maxsize=1 << 16)
def is_mono_matrix(f: ModMorphism) -> bool:
    k_ob, _ = kernel(f)
    return k_ob.size == 1


@functools.lru_cache(maxsize=1 << 16)
def is_epi_matrix(f: ModMorphism) -> bool:
    q_ob, _ = cokernel(f)
    return q_ob.size == 1


def is_iso(f: ModMorphism) -> bool:
    return f.dom.size == f.cod.size and is_mono_matrix(f)


def inverse(f: ModMorphism) -> ModMorphism:
    inv = solve_hom(f.cod, f.dom, right=[(f, identity(f.dom))])
    if inv is None or not compose(f, inv) == identity(f.cod):
        raise PreconditionError("morphism is not invertible")
    return inv


# --------------------------------------------------------------------------
# presentation normalisation and biproducts

def normalize_presentation(m: int, factors: tuple[int, ...]):
    """Normal form of Z^k / diag(factors) with conversion matrices.

    Returns (ob, to_n, from_n): to_n maps old coordinates to normal-form
    coordinates, from_n the other way; both are mutually inverse maps of
    the presented group.  Input factors may be any divisors of m, in any
    order.
    """
    for d in factors:
        if d < 1 or m % d:
            raise PreconditionError(f"factor {d} does not divide {m}")
    k = len(factors)
    if k == 0:
        ob = zero_object(m)
        return ob, (), ()
    s_form = smith(_diag(factors))
    kept = []
    new_factors = []
    for i in range(k):
        e = abs(s_form.d[i][i])
        if e == 1:
            continue
        kept.append(i)
        new_factors.append(e)
    ob = ModObject(m, tuple(new_factors))
    to_n = [s_form.u[i] for i in kept]                     # ob.k x k
    from_n = [tuple(s_form.uinv[i][j] for j in kept) for i in range(k)]
    return ob, tuple(to_n), tuple(from_n)


@dataclass(frozen=True)
class Biproduct:
    ob: ModObject
    inj: tuple[ModMorphism, ...]
    proj: tuple[ModMorphism, ...]


@functools.lru_cache(maxsize=4096)
def direct_sum(*parts: ModObject) -> Biproduct:
    if not parts:
        raise PreconditionError("direct_sum needs at least one summand")
    m = parts[0].m
    if any(p.m != m for p in parts):
        raise PreconditionError("ring modulus mismatch")
    raw = tuple(d for p in parts for d in p.factors)
    ob, to_n, from_n = normalize_presentation(m, raw)
    injs = []
    projs = []
    ofs = 0
    for p in parts:
        cols = range(ofs, ofs + p.k)
        injs.append(ModMorphism(p, ob, [tuple(to_n[i][j] for j in cols)
                                        for i in range(ob.k)]))
        projs.append(ModMorphism(ob, p, [from_n[j] for j in cols]))
        ofs += p.k
    for inj, proj, p in zip(injs, projs, parts):
        assert compose(proj, inj) == identity(p)
    return Biproduct(ob, tuple(injs), tuple(projs))


def pair_into(bp: Biproduct, fs: list[ModMorphism]) -> ModMorphism:
    """<f_1, ..., f_n> : X -> bp.ob from maps with common domain."""
    out = None
    for inj, f in zip(bp.inj, fs):
        piece = compose(inj, f)
        out = piece if out is None else out + piece
    return out


def copair_from(bp: Biproduct, fs: list[ModMorphism]) -> ModMorphism:
    """[f_1, ..., f_n] : bp.ob -> X from maps with common codomain."""
    out = None
    for proj, f in zip(bp.proj, fs):
        piece = compose(f, proj)
        out = piece if out is None else out + piece
    return out


# --------------------------------------------------------------------------
# constrained hom solving

def solve_hom(dom: ModObject, cod: ModObject, left=(), right=(), lex: bool = False):
    """Find X : dom -> cod with P o X == Q for (P, Q) in `left` and
    X o R == S for (R, S) in `right`.

    With lex=True the returned morphism is the first solution in the
    canonical (row-major, ascending-entry) hom enumeration order.
    Returns None when the system is unsolvable.  The result is
    re-verified against every constraint before being returned.
    """
    m = dom.m
    nvar = cod.k * dom.k
    steps = []
    gmods = []
    for i, ci in enumerate(cod.factors):
        for j, aj in enumerate(dom.factors):
            g = gcd(ci, aj)
            steps.append(ci // g)
            gmods.append(g)

    rows: list[tuple[int, ...]] = []
    rhs: list[int] = []

    def var(i, j):
        return i * dom.k + j

    for p_m, q_m in left:
        if p_m.dom != cod or q_m.dom != dom or p_m.cod != q_m.cod:
            raise PreconditionError("left constraint shape mismatch")
        for r in range(p_m.cod.k):
            wr = p_m.cod.factors[r]
            scale = m // wr
            for j in range(dom.k):
                row = [0] * nvar
                for i in range(cod.k):
                    row[var(i, j)] = scale * p_m.mat[r][i] * steps[var(i, j)]
                rows.append(tuple(row))
                rhs.append(scale * q_m.mat[r][j])
    for r_m, s_m in right:
        if r_m.cod != dom or s_m.cod != cod or r_m.dom != s_m.dom:
            raise PreconditionError("right constraint shape mismatch")
        for i in range(cod.k):
            ci = cod.factors[i]
            scale = m // ci
            for kk in range(r_m.dom.k):
                row = [0] * nvar
                for j in range(dom.k):
                    row[var(i, j)] = scale * steps[var(i, j)] * r_m.mat[j][kk]
                rows.append(tuple(row))
                rhs.append(scale * s_m.mat[i][kk])

    def solvable(extra_rows, extra_rhs):
        a = tuple(rows) + tuple(extra_rows)
        b = tuple(rhs) + tuple(extra_rhs)
        if not a:
            return (0,) * nvar
        return solve_mod(a, b, m)

    if nvar == 0:
        sol = solvable((), ())
        if sol is None:
            return None
        x = ModMorphism(dom, cod, [() for _ in range(cod.k)])
        return _verify_solution(x, left, right)

    if not lex:
        sol = solvable((), ())
        if sol is None:
            return None
        x = _from_vars(dom, cod, steps, sol)
        return _verify_solution(x, left, right)

    fixed_rows: list[tuple[int, ...]] = []
    fixed_rhs: list[int] = []
    if solvable((), ()) is None:
        return None
    chosen = []
    for q in range(nvar):
        g = gmods[q]
        scale = m // g if g else m
        unit = [0] * nvar
        unit[q] = scale
        found = None
        for xv in range(g if g else 1):
            trial_rows = fixed_rows + [tuple(unit)]
            trial_rhs = fixed_rhs + [scale * xv]
            if solvable(trial_rows, trial_rhs) is not None:
                found = xv
                break
        assert found is not None, "greedy lex solve lost solvability"
        fixed_rows.append(tuple(unit))
        fixed_rhs.append(scale * found)
        chosen.append(found)
    x = _from_vars(dom, cod, steps, chosen)
    return _verify_solution(x, left, right)


def _from_vars(dom, cod, steps, xs):
    rows = []
    q = 0
    for i in range(cod.k):
        row = []
        for j in range(dom.k):
            row.append(steps[q] * xs[q])
            q += 1
        rows.append(row)
    return ModMorphism(dom, cod, rows)


def _verify_solution(x, left, right):
    for p_m, q_m in left:
        if compose(p_m, x) != q_m:
            raise PreconditionError("internal: solver returned a bad solution")
    for r_m, s_m in right:
        if compose(x, r_m) != s_m:
            raise PreconditionError("internal: solver returned a bad solution")
    return x


def solve_right_factor(t: ModMorphism, c: ModMorphism, lex: bool = True):
    """e : cod(t) -> cod(c) with e o t == c, or None.

    The witness is the first solution in canonical hom order.
    """
    if t.dom != c.dom:
        raise PreconditionError("right-factor inputs need a common domain")
    return solve_hom(t.cod, c.cod, right=[(t, c)], lex=lex)


def solve_left_factor(p: ModMorphism, e: ModMorphism, lex: bool = True):
    """l : dom(e) -> dom(p) with p o l == e, or None."""
    if p.cod != e.cod:
        raise PreconditionError("left-factor inputs need a common codomain")
    return solve_hom(e.dom, p.dom, left=[(p, e)], lex=lex)


def has_right_factor(t: ModMorphism, c: ModMorphism) -> bool:
    return solve_hom(t.cod, c.cod, right=[(t, c)], lex=False) is not None


def has_left_factor(p: ModMorphism, e: ModMorphism) -> bool:
    return solve_hom(e.dom, p.dom, left=[(p, e)], lex=False) is not None
