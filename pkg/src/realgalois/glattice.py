"""Gamma-lattices and their classification into indecomposables.

A Gamma-lattice is a free Z-module with an involutive automorphism.  Up to
change of basis every such lattice splits into trivial summands Z(e),
sign summands Z(f), and rank-two swap summands Z(g, h).  `normal_form`
makes that splitting effective by induction on the rank: split off a
primitive fixed vector, classify the quotient, then repair the lifted
basis vectors one type at a time.
"""

from dataclasses import dataclass
from functools import lru_cache

from . import intlin
from .gmod import FinAbGroup, GammaModule, ValidationError, tate
from .intlin import (
    hnf, identity, inv_unimodular, kernel, mat_mul, mat_vec, solve,
    transpose, vec_mat,
)


@dataclass(frozen=True)
class GammaLattice:
    """Z^rank with an involution matrix (S^2 = identity exactly)."""

    rank: int
    involution: tuple

    def __post_init__(self):
        object.__setattr__(self, "involution",
                           tuple(tuple(r) for r in self.involution))
        s = self.matrix()
        if len(s) != self.rank or any(len(r) != self.rank for r in s):
            raise ValidationError("involution matrix has the wrong shape")
        if mat_mul(s, s) != identity(self.rank):
            raise ValidationError("matrix is not an involution")

    def matrix(self):
        return [list(r) for r in self.involution]

    def as_module(self):
        return GammaModule(self.rank, (), self.involution)

    @classmethod
    def trivial(cls, rank):
        return cls(rank, identity(rank))

    @classmethod
    def sign(cls, rank):
        return cls(rank, [[-1 if i == j else 0 for j in range(rank)]
                          for i in range(rank)])

    @classmethod
    def model(cls, a, b, c):
        """The block-diagonal model with the given summand counts."""
        return cls(a + b + 2 * c, model_matrix(a, b, c))


def model_matrix(a, b, c):
    n = a + b + 2 * c
    m = [[0] * n for _ in range(n)]
    for i in range(a):
        m[i][i] = 1
    for i in range(a, a + b):
        m[i][i] = -1
    for k in range(c):
        i = a + b + 2 * k
        m[i][i + 1] = 1
        m[i + 1][i] = 1
    return m


@dataclass(frozen=True)
class NormalForm:
    """Counts (a, b, c) plus a basis realizing the block model.

    The columns of `basis` are the new basis vectors, ordered e's, f's,
    then (g, h) pairs, so that S . basis == basis . model.
    """

    a: int
    b: int
    c: int
    basis: tuple

    def basis_cols(self):
        return [list(r) for r in self.basis]

    def model(self):
        return model_matrix(self.a, self.b, self.c)


@lru_cache(maxsize=4096)
def normal_form(lat):
    """Classify the lattice; the returned basis is unimodular and exact."""
    e, f, gh = _normal_basis(lat.matrix())
    a, b, c = len(e), len(f), len(gh) // 2
    basis = transpose(e + f + gh) if (e or f or gh) else []
    nf = NormalForm(a, b, c, tuple(tuple(r) for r in basis))
    s = lat.matrix()
    bm = nf.basis_cols()
    if lat.rank:
        if mat_mul(s, bm) != mat_mul(bm, nf.model()):
            raise AssertionError("normal form does not conjugate the action")
        if abs(intlin.det(bm)) != 1:
            raise AssertionError("normal form basis is not unimodular")
    return nf


def _normal_basis(s):
    """Return ([e vectors], [f vectors], [g, h, g, h, ...]) for S."""
    n = len(s)
    if n == 0:
        return [], [], []
    if s == [[-1 if i == j else 0 for j in range(n)] for i in range(n)]:
        return [], list(identity(n)), []
    # primitive fixed vector: first basis row of ker(S - I), which is
    # saturated, so any basis vector is primitive
    fixed = hnf(kernel(intlin.add_scaled_identity(s, -1)))
    if not fixed:
        raise AssertionError("non-(-1) involution must have a fixed vector")
    e = _sign_normalize(fixed[0])
    # complete e to a basis of Z^n: W e = e_1 for unimodular W
    w = _completion(e)
    winv = inv_unimodular(w)
    # action on the quotient Z^n / <e> in the new coordinates
    s_new = mat_mul(w, mat_mul(s, winv))
    q = [row[1:] for row in s_new[1:]]
    es, fs, ghs = _normal_basis(q)

    def lift(u):
        return mat_vec(winv, [0] + list(u))

    e_vecs = [e] + [None] * len(es)
    # e_i lifts are automatically fixed (tau e_i = e_i + m e forces m = 0)
    for idx, u in enumerate(es):
        v = lift(u)
        sv = mat_vec(s, v)
        if sv != v:
            raise AssertionError("lifted fixed vector moved")
        e_vecs[1 + idx] = v
    gh_vecs = []
    for k in range(0, len(ghs), 2):
        g = lift(ghs[k])
        h = lift(ghs[k + 1])
        m = _e_coefficient(mat_vec(s, g), h, e)
        h = [x + m * y for x, y in zip(h, e)]
        if mat_vec(s, g) != h or mat_vec(s, h) != g:
            raise AssertionError("swap pair repair failed")
        gh_vecs += [g, h]
    f_vecs = []
    odd = []
    for u in fs:
        v = lift(u)
        m = _e_coefficient(mat_vec(s, v), [-x for x in v], e)
        half, rem = divmod(m, 2)
        v = [x - half * y for x, y in zip(v, e)]
        if rem:
            odd.append(v)
        else:
            f_vecs.append(v)
    if odd:
        f0 = odd[0]
        for v in odd[1:]:
            f_vecs.append([x - y for x, y in zip(v, f0)])
        g = f0
        h = [y - x for x, y in zip(f0, e)]
        gh_vecs += [g, h]
        e_vecs = e_vecs[1:]  # e is consumed by the new swap pair
        if mat_vec(s, g) != h or mat_vec(s, h) != g:
            raise AssertionError("odd-case swap pair repair failed")
    for v in f_vecs:
        if mat_vec(s, v) != [-x for x in v]:
            raise AssertionError("sign vector repair failed")
    return e_vecs, f_vecs, gh_vecs


def _sign_normalize(v):
    for x in v:
        if x:
            return v if x > 0 else [-y for y in v]
    return v


def _completion(e):
    """A unimodular W with W e = first standard basis vector."""
    n = len(e)
    d, u, v = intlin.snf_transform([list(e)])
    if d[0][0] != 1:
        raise ValueError("vector is not primitive")
    w = transpose(v)
    we = mat_vec(w, list(e))
    if we[0] == -1:
        w = [[-x for x in row] for row in w]
        we = [-x for x in we]
    if we != [1] + [0] * (n - 1):
        raise AssertionError("completion failed")
    return w


def _e_coefficient(got, want_base, e):
    """The integer m with got == want_base + m e."""
    diff = [a - b for a, b in zip(got, want_base)]
    m = None
    for d, x in zip(diff, e):
        if x:
            if d % x:
                raise AssertionError("difference is not a multiple of e")
            q = d // x
            if m is None:
                m = q
            elif m != q:
                raise AssertionError("difference is not proportional to e")
        elif d:
            raise AssertionError("difference is not proportional to e")
    return 0 if m is None else m


def lattice_tate(lat, k):
    """Tate cohomology from the classification: (Z/2)^a or (Z/2)^b.

    Even degrees see the trivial summands, odd degrees the sign summands.
    Generators carry representative cocycles (the e or f basis vectors).
    """
    nf = normal_form(lat)
    cols = transpose(nf.basis_cols()) if lat.rank else []
    if k % 2 == 0:
        gens = cols[:nf.a]
    else:
        gens = cols[nf.a:nf.a + nf.b]
    return _elementary_two_group(gens, lat.rank)


def _elementary_two_group(gens, n):
    """(Z/2)^len(gens) with the given ambient representatives."""
    if not gens:
        return FinAbGroup.quotient([], [], n)
    rows = hnf([list(g) for g in gens])
    doubled = [[2 * x for x in g] for g in rows]
    return FinAbGroup.quotient(rows, doubled, n)
