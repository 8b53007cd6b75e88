"""Finitely generated Gamma-modules and their Tate cohomology.

Gamma = Gal(C/R) has order two, so a Gamma-module is an abelian group with
one involution.  Modules are presented as Z^n modulo the row span of a
relation matrix, with the involution given by an integer matrix on the
generators.  Cohomology in every degree comes down to one kernel-modulo-
image computation in exact integer arithmetic.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import intlin
from .intlin import (
    _sign,
    hnf, identity, in_rowspan, kernel, lattice_eq, lattice_sum, mat_mul,
    mat_vec, preimage_lattice, snf_transform, solve, transpose, vec_mat,
)


class ValidationError(ValueError):
    """An input object violates one of its declared invariants."""


# ---------------------------------------------------------------------------
# Finite(ly generated) abelian groups as computation results
# ---------------------------------------------------------------------------

class FinAbGroup:
    """A subquotient L1/L2 of some Q^n in invariant-factor form.

    `invariants` lists the cyclic factors d1 | d2 | ... (each >= 2, or 0 for
    a free factor; zeros last).  `gens` are ambient representatives, one per
    factor.  The group remembers enough of the quotient structure to reduce
    arbitrary ambient vectors to canonical coordinates.
    """

    __slots__ = ("invariants", "gens", "ambient_n",
                 "_den", "_basis", "_v", "_dfull", "_kept")

    def __init__(self, den, basis, v, dfull, ambient_n, vinv=None):
        kept = [i for i, d in enumerate(dfull) if d != 1]
        self.ambient_n = ambient_n
        self._den = den
        self._basis = basis
        self._v = v
        self._dfull = dfull
        self._kept = kept
        r = len(basis)
        if vinv is None:
            vinv = intlin.inv_unimodular(v) if r else []
        gens = []
        for i in kept:
            amb = vec_mat(vinv[i], basis)
            gens.append(tuple(Fraction(x, den) for x in amb))
        self.gens = tuple(gens)
        self.invariants = tuple(dfull[i] for i in kept)

    @classmethod
    def quotient(cls, big_rows, small_rows, ambient_n, den=1):
        """The group (rowspan big)/(rowspan small), both scaled by 1/den."""
        basis = hnf(big_rows)
        r = len(basis)
        coords = []
        for g in hnf(small_rows):
            c = solve(transpose(basis), g) if r else ([] if not any(g) else None)
            if c is None:
                raise ValueError("second lattice is not contained in the first")
            coords.append(c)
        if coords:
            d, _, v, vinv = intlin.snf_transform_full(coords)
            diag = [d[i][i] for i in range(min(len(coords), r))]
        else:
            v = identity(r)
            vinv = identity(r)
            diag = []
        dfull = [diag[i] if i < len(diag) else 0 for i in range(r)]
        return cls(den, basis, v, dfull, ambient_n, vinv=vinv)

    @classmethod
    def trivial(cls, ambient_n=0):
        return cls(1, [], [], [], ambient_n)

    def __repr__(self):
        if not self.invariants:
            return "FinAbGroup(trivial)"
        return "FinAbGroup(%s)" % " x ".join(
            "Z" if d == 0 else "Z/%d" % d for d in self.invariants)

    def describe(self):
        if not self.invariants:
            return "trivial"
        return " x ".join("Z" if d == 0 else "Z/%d" % d for d in self.invariants)

    def is_trivial(self):
        return not self.invariants

    def order(self):
        """Group order, or None when infinite."""
        n = 1
        for d in self.invariants:
            if d == 0:
                return None
            n *= d
        return n

    def exponent_divides(self, e):
        return all(d != 0 and e % d == 0 for d in self.invariants)

    def coords(self, vec):
        """Canonical coordinates of an ambient vector's class."""
        scaled = []
        for x in vec:
            f = Fraction(x) * self._den
            if f.denominator != 1:
                raise ValueError("vector is not in the ambient lattice")
            scaled.append(int(f))
        r = len(self._basis)
        if r == 0:
            if any(scaled):
                raise ValueError("vector lies outside the subgroup")
            return ()
        c = solve(transpose(self._basis), scaled)
        if c is None:
            raise ValueError("vector lies outside the subgroup")
        z = vec_mat(c, self._v)
        out = []
        for i in self._kept:
            d = self._dfull[i]
            out.append(z[i] % d if d else z[i])
        return tuple(out)

    def rep(self, coords):
        """An ambient representative of the class with these coordinates."""
        vec = [Fraction(0)] * self.ambient_n
        for c, g in zip(coords, self.gens):
            for i, x in enumerate(g):
                vec[i] += c * x
        return tuple(vec)

    def reduce(self, coords):
        return tuple(c % d if d else c for c, d in zip(coords, self.invariants))

    def add(self, ca, cb):
        return self.reduce(tuple(a + b for a, b in zip(ca, cb)))

    def neg(self, ca):
        return self.reduce(tuple(-a for a in ca))

    def zero(self):
        return (0,) * len(self.invariants)

    def elements(self):
        """All coordinate tuples (finite groups only)."""
        if self.order() is None:
            raise ValueError("group is infinite")
        out = [()]
        for d in self.invariants:
            out = [t + (i,) for t in out for i in range(d)]
        return out

    def same_invariants(self, other):
        return self.invariants == other.invariants

    def relation_rows(self):
        """Rows spanning the relation lattice in coordinate space Z^k."""
        k = len(self.invariants)
        rows = []
        for i, d in enumerate(self.invariants):
            if d:
                rows.append([d if j == i else 0 for j in range(k)])
        return rows


class FinAbHom:
    """Homomorphism between FinAbGroups, stored on generators."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source, target, images):
        self.source = source
        self.target = target
        self.images = tuple(tuple(im) for im in images)

    def __call__(self, coords):
        k = len(self.target.invariants)
        out = [0] * k
        for c, im in zip(coords, self.images):
            for j in range(k):
                out[j] += c * im[j]
        return self.target.reduce(tuple(out))

    def matrix_rows(self):
        """Images as rows of Z^t, one per source generator."""
        return [list(im) for im in self.images]

    def compose(self, first):
        """self o first."""
        if first.target is not self.source and \
                first.target.invariants != self.source.invariants:
            raise ValueError("homomorphisms do not compose")
        return FinAbHom(first.source, self.target,
                        [self(im) for im in first.images])

    def is_zero(self):
        return all(not any(self(im)) for im in self.images)

    def kernel_rows(self):
        """Rows of Z^s spanning {x : h(x) = 0} + source relations."""
        s = len(self.source.invariants)
        t = len(self.target.invariants)
        if s == 0:
            return []
        if t == 0:
            return identity(s)
        mat = transpose(self.matrix_rows())
        pre = preimage_lattice(mat, self.target.relation_rows())
        return lattice_sum(pre, self.source.relation_rows())

    def image_rows(self):
        """Rows of Z^t spanning the image + target relations."""
        return lattice_sum(self.matrix_rows(), self.target.relation_rows())

    def kernel_group(self):
        s = len(self.source.invariants)
        return FinAbGroup.quotient(self.kernel_rows(),
                                   self.source.relation_rows(), s)

    def image_group(self):
        t = len(self.target.invariants)
        return FinAbGroup.quotient(self.image_rows(),
                                   self.target.relation_rows(), t)

    def is_injective(self):
        return lattice_eq(self.kernel_rows(),
                          hnf(self.source.relation_rows()))

    def is_surjective(self):
        t = len(self.target.invariants)
        return lattice_eq(self.image_rows(), identity(t))

    def is_iso(self):
        return self.is_injective() and self.is_surjective()


def exact_at(first, second):
    """Is im(first) = ker(second) inside first.target == second.source?"""
    return lattice_eq(first.image_rows(), second.kernel_rows())


# ---------------------------------------------------------------------------
# Gamma-modules
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GammaModule:
    """Z^n modulo relations, with involutive action on generators."""

    n: int
    relations: tuple = ()
    action: tuple = None  # identity when omitted

    def __post_init__(self):
        rel = tuple(tuple(r) for r in self.relations)
        object.__setattr__(self, "relations", rel)
        if self.action is None:
            object.__setattr__(self, "action", tuple(map(tuple, identity(self.n))))
        else:
            object.__setattr__(self, "action",
                               tuple(tuple(r) for r in self.action))
        self._validate()

    def _validate(self):
        s = self.action_rows()
        rel = self.relation_rows()
        if len(s) != self.n or any(len(r) != self.n for r in s):
            raise ValidationError("action matrix has the wrong shape")
        if any(len(r) != self.n for r in rel):
            raise ValidationError("relation rows have the wrong length")
        relh = hnf(rel)
        for r in rel:
            if not in_rowspan(mat_vec(s, r), relh):
                raise ValidationError("action does not preserve the relations")
        s2 = mat_mul(s, s)
        for i in range(self.n):
            row = [s2[i][j] - (1 if i == j else 0) for j in range(self.n)]
            if not in_rowspan(row, relh):
                raise ValidationError("action is not an involution mod relations")

    def action_rows(self):
        return [list(r) for r in self.action]

    def relation_rows(self):
        return [list(r) for r in self.relations]

    def gamma(self, vec):
        return mat_vec(self.action_rows(), vec)

    def differential(self, k):
        """Matrix of d^k = gamma + (-1)^(k+1)."""
        return intlin.add_scaled_identity(self.action_rows(), _sign(k + 1))

    def contains_zero(self, vec):
        """Does `vec` represent 0, i.e. lie in the relation lattice?"""
        return in_rowspan(list(vec), hnf(self.relation_rows()))

    def shift(self):
        """The same group with negated involution (the degree-shift twin)."""
        return GammaModule(self.n, self.relations,
                           [[-x for x in row] for row in self.action_rows()])

    def group(self):
        """The underlying abelian group Z^n / relations."""
        return FinAbGroup.quotient(identity(self.n), self.relation_rows(), self.n)


@dataclass(frozen=True)
class GammaMap:
    """Homomorphism of GammaModules given on generators."""

    source: GammaModule
    target: GammaModule
    matrix: tuple
    anti: bool = False

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(tuple(r) for r in self.matrix))
        m = self.matrix_rows()
        if len(m) != self.target.n or any(len(r) != self.source.n for r in m):
            raise ValidationError("map matrix has the wrong shape")
        relt = hnf(self.target.relation_rows())
        for r in self.source.relation_rows():
            if not in_rowspan(mat_vec(m, r), relt):
                raise ValidationError("map does not preserve relations")
        sign = -1 if self.anti else 1
        lhs = mat_mul(m, self.source.action_rows())
        rhs = intlin.mat_scale(mat_mul(self.target.action_rows(), m), sign)
        for col in transpose([[a - b for a, b in zip(ra, rb)]
                              for ra, rb in zip(lhs, rhs)]):
            if not in_rowspan(list(col), relt):
                raise ValidationError(
                    "map is not %sequivariant" % ("anti-" if self.anti else ""))

    def matrix_rows(self):
        return [list(r) for r in self.matrix]

    def __call__(self, vec):
        return mat_vec(self.matrix_rows(), list(vec))

    @classmethod
    def identity(cls, module):
        return cls(module, module, identity(module.n))


# ---------------------------------------------------------------------------
# Tate cohomology
# ---------------------------------------------------------------------------

def _subquotient(cocycle_rows, boundary_rows, n):
    return FinAbGroup.quotient(cocycle_rows, hnf(boundary_rows), n)


def cocycle_lattice(module, k):
    """Rows spanning Z^k(A) = {a : d^k a = 0 mod relations}."""
    return preimage_lattice(module.differential(k), module.relation_rows(),
                            ncols=module.n)


def boundary_lattice(module, k):
    """Rows spanning B^k(A) = im d^(k-1) + relations."""
    return lattice_sum(intlin.image_rows(module.differential(k - 1)),
                       module.relation_rows())


def tate(module, k):
    """The Tate cohomology group of the module in degree k.

    Generators of the result carry representative cocycles in the module's
    ambient coordinates.  Only k mod 2 matters.
    """
    return _subquotient(cocycle_lattice(module, k),
                        boundary_lattice(module, k), module.n)


def check_cocycle(module, vec, k):
    """True iff d^k(vec) = 0 in the module."""
    vec = list(vec)
    if len(vec) != module.n:
        raise ValidationError("element has the wrong number of coordinates")
    return module.contains_zero(mat_vec(module.differential(k), vec))


def induced_hom(gmap, k, source_group=None, target_group=None):
    """Hom on Tate cohomology induced by an (anti-)equivariant map.

    An anti-equivariant map shifts the degree by one on the target side.
    """
    kt = k + 1 if gmap.anti else k
    src = source_group if source_group is not None else tate(gmap.source, k)
    tgt = target_group if target_group is not None else tate(gmap.target, kt)
    images = []
    for g in src.gens:
        images.append(tgt.coords(gmap([int(x) for x in g])))
    return FinAbHom(src, tgt, images)


def shift_iso(module, k):
    """Canonical iso from H^k of the module to H^(k+1) of its shift twin."""
    shifted = module.shift()
    gmap = GammaMap(module, shifted, identity(module.n), anti=True)
    hom = induced_hom(gmap, k)
    if not hom.is_iso():
        raise AssertionError("degree shift failed to induce an isomorphism")
    return hom


# ---------------------------------------------------------------------------
# Short exact sequences and connecting maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ShortExact:
    """0 -> A -> B -> C -> 0 of GammaModules, validated on construction."""

    inj: GammaMap
    proj: GammaMap

    def __post_init__(self):
        if self.inj.target is not self.proj.source and \
                self.inj.target != self.proj.source:
            raise ValidationError("maps are not composable")
        a, b, c = self.a, self.b, self.c
        if not lattice_eq(preimage_lattice(self.inj.matrix_rows(),
                                           b.relation_rows(), ncols=a.n),
                          hnf(a.relation_rows())):
            raise ValidationError("sequence is not exact: kernel at A")
        ker_j = preimage_lattice(self.proj.matrix_rows(), c.relation_rows(),
                                 ncols=b.n)
        im_i = lattice_sum(intlin.image_rows(self.inj.matrix_rows()),
                           b.relation_rows())
        if not lattice_eq(ker_j, im_i):
            raise ValidationError("sequence is not exact at B")
        onto = lattice_sum(intlin.image_rows(self.proj.matrix_rows()),
                           c.relation_rows())
        if not lattice_eq(onto, identity(c.n)):
            raise ValidationError("sequence is not exact: C not covered")

    @property
    def a(self):
        return self.inj.source

    @property
    def b(self):
        return self.inj.target

    @property
    def c(self):
        return self.proj.target


def connecting(seq, k):
    """delta^k : H^k(C) -> H^(k+1)(A) by lift-and-differentiate."""
    a, b, c = seq.a, seq.b, seq.c
    hc = tate(c, k)
    ha = tate(a, k + 1)
    jmat = seq.proj.matrix_rows()
    imat = seq.inj.matrix_rows()
    db = b.differential(k)
    images = []
    for g in hc.gens:
        cvec = [int(x) for x in g]
        lift = _lift_through(jmat, c.relation_rows(), cvec)
        avec = _pull_back(imat, a.relation_rows(), b.relation_rows(),
                          mat_vec(db, lift))
        images.append(ha.coords(avec))
    return FinAbHom(hc, ha, images)


def _lift_through(mat, target_rel, vec):
    """Some x with mat.x = vec modulo the target relations."""
    m = len(mat)
    n = len(mat[0]) if mat else 0
    relt = transpose(target_rel) if target_rel else [[] for _ in range(m)]
    stacked = [mat[i] + relt[i] for i in range(m)]
    sol = solve(stacked, vec)
    if sol is None:
        raise ValueError("element cannot be lifted")
    return sol[:n]


def _pull_back(imat, source_rel, target_rel, vec):
    """Some a with imat.a = vec modulo target relations (injective imat)."""
    return _lift_through(imat, target_rel, vec)


def les_window(seq, k):
    """The six-term window H^k A -> H^k B -> H^k C -> H^(k+1) A -> ... .

    Returns the list of five FinAbHoms in order.  Adjacent maps share group
    data coordinatewise because every computation here is deterministic.
    """
    return [induced_hom(seq.inj, k),
            induced_hom(seq.proj, k),
            connecting(seq, k),
            induced_hom(seq.inj, k + 1),
            induced_hom(seq.proj, k + 1)]
