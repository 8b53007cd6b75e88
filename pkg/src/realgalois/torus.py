"""Real tori and quasi-tori through their cocharacter lattices.

The cohomology of a torus is read off its cocharacter lattice via the
evaluation map nu -> nu(-1); a quasi-torus (kernel of a surjection of
tori) gets its cohomology from the hypercohomology of the induced lattice
map, one degree down.

Elements of a complex torus that we need to touch explicitly are kept as
"log coordinates": Exp(i w) with w a rational cocharacter vector, where
Exp(x) = exp(2 pi x) and Exp(i w) = 1 exactly when w is integral.  Complex
conjugation sends Exp(i w) to Exp(-i S w) for the lattice involution S,
so cocycle and coboundary tests stay inside exact rational arithmetic.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import intlin
from .gmod import FinAbGroup, GammaModule, ValidationError, exact_at, tate
from .glattice import GammaLattice, lattice_tate, normal_form
from .hyper import ShortComplex, hyper, les_maps
from .intlin import (
    _sign,
    add_scaled_identity, hnf, identity, mat_mul, mat_vec, saturation,
    solve_frac, transpose,
)


@dataclass(frozen=True)
class TorusSpec:
    """An R-torus, given by its cocharacter lattice with Galois action."""

    cochar: GammaLattice

    @property
    def rank(self):
        return self.cochar.rank

    @classmethod
    def split(cls, rank=1):
        return cls(GammaLattice.trivial(rank))

    @classmethod
    def compact(cls, rank=1):
        return cls(GammaLattice.sign(rank))

    @classmethod
    def weil_restriction(cls):
        return cls(GammaLattice(2, [[0, 1], [1, 0]]))


@dataclass(frozen=True)
class TorusCocycle:
    """A cohomology class representative nu with value nu(-1)."""

    nu: tuple
    value: tuple  # class of nu in X_* / 2 X_*

    @classmethod
    def from_nu(cls, nu):
        nu = tuple(int(x) for x in nu)
        return cls(nu, tuple(x % 2 for x in nu))


def torus_tate(spec, k):
    """(group, representatives): H^k of the torus via evaluation.

    The group is Tate cohomology of the cocharacter lattice; each generator
    carries the cocycle nu(-1) as a TorusCocycle.
    """
    group = tate(spec.cochar.as_module(), k)
    reps = tuple(TorusCocycle.from_nu(g) for g in group.gens)
    return group, reps


def pi0_torus(spec):
    """Component group of the real points: H^0 of the cocharacter lattice."""
    return tate(spec.cochar.as_module(), 0)


# ---------------------------------------------------------------------------
# torus element logs
# ---------------------------------------------------------------------------

def _clear_denominators(w):
    den = 1
    fr = [Fraction(x) for x in w]
    for f in fr:
        den = den * f.denominator // gcd(den, f.denominator)
    return [int(f * den) for f in fr], den


def log_normalize(w):
    """Reduce a log coordinate into [0, 1)^n (same torus element)."""
    return tuple(Fraction(x) - (Fraction(x).numerator // Fraction(x).denominator)
                 for x in w)


def is_integral(w):
    return all(Fraction(x).denominator == 1 for x in w)


def is_torus_cocycle(s_rows, w, k):
    """Is Exp(i w) in Z^k of the torus with lattice involution s_rows?"""
    m = add_scaled_identity(s_rows, _sign(k))
    return is_integral(mat_vec(m, [Fraction(x) for x in w]))


def is_torus_coboundary(s_rows, w, k):
    """Is Exp(i w) in B^k = im d^(k-1) on complex points?

    Membership means w = (-S + (-1)^k) x + v for some rational x and
    integral v, decided through the saturation of the image.
    """
    n = len(s_rows)
    m = add_scaled_identity([[-x for x in row] for row in s_rows], _sign(k))
    sat = saturation(hnf(transpose(m)))
    comp = intlin.complement_coords(sat, n)
    u, den = _clear_denominators(w)
    return all(x % den == 0 for x in mat_vec(comp, u)) if comp else True


def torus_classes_equal(s_rows, w1, w2, k):
    """Do Exp(i w1) and Exp(i w2) define the same class in H^k(T)?"""
    diff = [Fraction(a) - Fraction(b) for a, b in zip(w1, w2)]
    if not is_torus_cocycle(s_rows, diff, k):
        return False
    return is_torus_coboundary(s_rows, diff, k)


def torus_log_class(lat, w, k):
    """Coordinates in tate(X_*, k) of the class of the element Exp(i w).

    Works by matching against every class of the finite Tate group via the
    evaluation isomorphism; raises if the element is not a cocycle.
    """
    s_rows = lat.matrix()
    if not is_torus_cocycle(s_rows, w, k):
        raise ValidationError("element is not a degree-%d cocycle" % k)
    group = tate(lat.as_module(), k)
    for coords in group.elements():
        nu = group.rep(coords)
        half = [Fraction(int(x), 2) for x in nu]
        if torus_classes_equal(s_rows, w, half, k):
            return group, coords
    raise AssertionError("evaluation classes failed to exhaust H^k")


def _hyper_log_matrix(s1_rows, s0_rows, jmat, k):
    """Block matrix of the degree-k hyper differential on log coordinates."""
    n1, n0 = len(s1_rows), len(s0_rows)
    d1 = add_scaled_identity([[-x for x in r] for r in s1_rows], _sign(k))
    d0 = add_scaled_identity([[-x for x in r] for r in s0_rows], _sign(k + 1))
    rows = []
    for i in range(n1):
        rows.append([-x for x in d1[i]] + [0] * n0)
    for i in range(n0):
        rows.append([-jmat[i][t] for t in range(n1)] + d0[i])
    return rows


def is_hyper_cocycle(s1_rows, s0_rows, jmat, w1, w0, k):
    """Is (Exp(i w1), Exp(i w0)) a degree-k hyper cocycle of tori?"""
    m = _hyper_log_matrix(s1_rows, s0_rows, jmat, k)
    img = mat_vec(m, [Fraction(x) for x in list(w1) + list(w0)])
    return is_integral(img)


def is_hyper_coboundary(s1_rows, s0_rows, jmat, w1, w0, k):
    """Is (Exp(i w1), Exp(i w0)) a degree-k hyper coboundary of tori?"""
    n = len(s1_rows) + len(s0_rows)
    m = _hyper_log_matrix(s1_rows, s0_rows, jmat, k - 1)
    sat = saturation(hnf(transpose(m)))
    comp = intlin.complement_coords(sat, n)
    u, den = _clear_denominators(list(w1) + list(w0))
    return all(x % den == 0 for x in mat_vec(comp, u)) if comp else True


# ---------------------------------------------------------------------------
# quasi-tori
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuasiTorusSpec:
    """Kernel of a surjection of tori, via the cocharacter-side map."""

    source: TorusSpec
    target: TorusSpec
    matrix: tuple

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(tuple(r) for r in self.matrix))
        m = self.matrix_rows()
        if len(m) != self.target.rank or \
                any(len(r) != self.source.rank for r in m):
            raise ValidationError("cocharacter map has the wrong shape")
        lhs = mat_mul(m, self.source.cochar.matrix())
        rhs = mat_mul(self.target.cochar.matrix(), m)
        if lhs != rhs:
            raise ValidationError("cocharacter map is not equivariant")
        if intlin.rank(m) != self.target.rank:
            raise ValidationError(
                "cocharacter map has infinite cokernel (torus map not onto)")

    def matrix_rows(self):
        return [list(r) for r in self.matrix]

    def lattice_complex(self):
        return ShortComplex.of(self.source.cochar.as_module(),
                               self.target.cochar.as_module(),
                               self.matrix_rows())

    def is_finite(self):
        """Finite quasi-torus = injective cocharacter map."""
        return len(intlin.kernel(self.matrix_rows(),
                                 ncols=self.source.rank)) == 0

    def point_lattice(self):
        """{w : j(w) integral}, the logs of the complex points of A."""
        return intlin.fractional_preimage(self.matrix_rows(),
                                          ncols=self.source.rank)

    def as_finite_module(self):
        """A(C) as a GammaModule when A is finite.

        Points are Exp(i w) for w in the preimage lattice of the integral
        points, modulo the integral points themselves; gamma acts by -S.
        """
        if not self.is_finite():
            raise ValidationError("quasi-torus has positive dimension")
        num, den = self.point_lattice()
        n = self.source.rank
        basis = hnf(num)
        rel = []
        bt = transpose(basis)
        for row in identity(n):
            c = intlin.solve(bt, [den * x for x in row])
            rel.append(c)
        s = self.source.cochar.matrix()
        act = []
        for b in basis:
            img = [-x for x in mat_vec(s, b)]
            act.append(intlin.solve(bt, img))
        return GammaModule(len(basis), rel, transpose(act)), basis, den


@dataclass(frozen=True)
class QuasiTorusCocycle:
    """Representative datum for a class in H^(k+1) of the kernel.

    `nu`, `nuprime` form the lattice hypercocycle; `lift` is a rational x
    with j(x) = nuprime/2, and `value_log` w means the cocycle Exp(i w),
    an element of the kernel.
    """

    nu: tuple
    nuprime: tuple
    lift: tuple
    value_log: tuple


def quasitorus_tate(spec, k):
    """(group, representatives): H^k of the quasi-torus.

    The group is hypercohomology of the cocharacter complex in degree k-1;
    each generator gets the explicit cocycle from the lifting recipe.
    """
    comp = spec.lattice_complex()
    group = hyper(comp, k - 1)
    n1 = spec.source.rank
    reps = []
    for g in group.gens:
        vec = [int(x) for x in g]
        nu, nuprime = vec[:n1], vec[n1:]
        reps.append(_theta_cocycle(spec, nu, nuprime, k - 1))
    return group, tuple(reps)


def _theta_cocycle(spec, nu, nuprime, k):
    """The explicit cocycle attached to a degree-k lattice hypercocycle."""
    jmat = spec.matrix_rows()
    half = [Fraction(x, 2) for x in nuprime]
    x = solve_frac(jmat, half)
    if x is None:
        raise AssertionError("surjection admits no rational lift")
    s = spec.source.cochar.matrix()
    sx = mat_vec(s, x)
    sign = _sign(k)
    w = [Fraction(a, 2) + b + sign * c for a, b, c in zip(nu, sx, x)]
    w = log_normalize(w)
    if not is_integral(mat_vec(jmat, list(w))):
        raise AssertionError("cocycle value does not lie in the kernel")
    if not is_torus_cocycle(s, w, k + 1):
        raise AssertionError("value fails the cocycle identity")
    return QuasiTorusCocycle(tuple(nu), tuple(nuprime),
                             tuple(x), tuple(w))


# ---------------------------------------------------------------------------
# commuting-diagram verification for a quasi-torus presentation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SeqCheck:
    name: str
    degree: int
    ok: bool


def exact_seq_check(spec, degrees=(0, 1)):
    """Verify the evaluation/connecting diagram for 1 -> A -> T -> T'.

    For each degree this checks, on every generator: that the explicit
    cocycle lands in the kernel and satisfies the cocycle identity; that
    the connecting map route agrees with the hypercohomology route; and
    that projecting the explicit cocycle back to T matches the lattice-side
    projection.  Returns a list of SeqCheck records.
    """
    s1 = spec.source.cochar.matrix()
    s0 = spec.target.cochar.matrix()
    jmat = spec.matrix_rows()
    comp = spec.lattice_complex()
    out = []
    for k in degrees:
        group, reps = quasitorus_tate(spec, k + 1)
        ok = all(is_integral(mat_vec(jmat, list(r.value_log))) and
                 is_torus_cocycle(s1, r.value_log, k + 1) for r in reps)
        out.append(SeqCheck("cocycles land in kernel", k, ok))

        # square: i_# . delta^k = lambda_* on H^k(T')
        ok = True
        htp = tate(spec.target.cochar.as_module(), k)
        for g in htp.gens:
            nuprime = [int(x) for x in g]
            half = [Fraction(x, 2) for x in nuprime]
            x = solve_frac(jmat, half)
            sx = mat_vec(s1, x)
            # delta applies d^k to the lift t
            wdelta = [-a + (_sign(k + 1)) * b for a, b in zip(sx, x)]
            diff1 = wdelta
            diff0 = [-h for h in half]
            if not is_hyper_cocycle(s1, s0, jmat, diff1, diff0, k):
                ok = False
            if not is_hyper_coboundary(s1, s0, jmat, diff1, diff0, k):
                ok = False
        out.append(SeqCheck("connecting map matches lambda route", k, ok))

        # square: mu_* . i_# = evaluation of the lattice mu_* on H^(k+1)(A)
        ok = True
        for r in reps:
            target_w = [Fraction(x, 2) for x in r.nu]
            if not torus_classes_equal(s1, r.value_log, target_w, k + 1):
                ok = False
        out.append(SeqCheck("projection to T matches lattice route", k, ok))

        # lattice long exact sequence at the hyper joint
        lam, mu, _ = les_maps(comp, k - 1)
        out.append(SeqCheck("lattice row exact at hyper term", k,
                            exact_at(lam, mu)))
    return out
