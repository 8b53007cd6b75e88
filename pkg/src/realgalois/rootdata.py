"""Based root data, twisted group specifications, and their lattice chains.

A connected reductive real group is specified combinatorially: a based
root datum (character lattice Z^n with marked simple roots and coroots),
an involution tau of the datum, and a Kac labeling of the associated
affine diagram.  This module owns the sixteen-odd lattices everything
else feeds on: weight/root/center lattices, their tau-fixed and
half-sum-projected versions, and the finite quotients between them.

Sign convention, fixed once: on the cocharacter lattice of the
fundamental torus, complex conjugation acts as -tau (transposed), the
compact form contributing the minus sign.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import intlin
from .gmod import FinAbGroup, GammaModule, ValidationError
from .intlin import (
    RatLattice, dual_lattice, hnf, identity, kernel, mat_mul, mat_vec,
    solve_frac, transpose,
)

_MAX_ROOTS = 4096


@dataclass(frozen=True)
class BasedRootDatum:
    """Character lattice Z^rank with simple roots and coroots as rows."""

    rank: int
    simple_roots: tuple
    simple_coroots: tuple

    def __post_init__(self):
        object.__setattr__(self, "simple_roots",
                           tuple(tuple(r) for r in self.simple_roots))
        object.__setattr__(self, "simple_coroots",
                           tuple(tuple(r) for r in self.simple_coroots))
        if len(self.simple_roots) != len(self.simple_coroots):
            raise ValidationError("roots and coroots must come in pairs")
        for r in self.simple_roots + self.simple_coroots:
            if len(r) != self.rank:
                raise ValidationError("root vector has the wrong length")

    @property
    def nroots(self):
        return len(self.simple_roots)

    def root_rows(self):
        return [list(r) for r in self.simple_roots]

    def coroot_rows(self):
        return [list(r) for r in self.simple_coroots]

    def cartan_matrix(self):
        """Pairing matrix <alpha_i, alpha_j^vee>."""
        return [[sum(a * b for a, b in zip(r, c)) for c in self.simple_coroots]
                for r in self.simple_roots]

    def cartan_problems(self):
        """All the ways the pairing fails to be finite-type Cartan."""
        a = self.cartan_matrix()
        l = self.nroots
        out = []
        for i in range(l):
            if a[i][i] != 2:
                out.append("cartan diagonal entry %d is %d" % (i, a[i][i]))
            for j in range(l):
                if i != j and a[i][j] > 0:
                    out.append("cartan entry (%d,%d) is positive" % (i, j))
                if i != j and (a[i][j] == 0) != (a[j][i] == 0):
                    out.append("cartan zero pattern asymmetric at (%d,%d)"
                               % (i, j))
        if out:
            return out
        if intlin.rank(self.root_rows()) != l:
            out.append("simple roots are linearly dependent")
        if intlin.rank(self.coroot_rows()) != l:
            out.append("simple coroots are linearly dependent")
        if out:
            return out
        try:
            self.all_roots()
        except ValidationError as e:
            out.append(str(e))
        return out

    @lru_cache(maxsize=None)
    def _roots_cache(self):
        """(root, coroot) -> simple-root coefficients, by reflection closure."""
        l = self.nroots
        pairs = {}
        for i, (r, c) in enumerate(zip(self.simple_roots, self.simple_coroots)):
            pairs[(r, c)] = tuple(1 if t == i else 0 for t in range(l))
        frontier = list(pairs.items())
        while frontier:
            new = []
            for (root, coroot), coeff in frontier:
                for j, (sr, sc) in enumerate(zip(self.simple_roots,
                                                 self.simple_coroots)):
                    n1 = sum(a * b for a, b in zip(root, sc))
                    n2 = sum(a * b for a, b in zip(sr, coroot))
                    cand = (tuple(x - n1 * y for x, y in zip(root, sr)),
                            tuple(x - n2 * y for x, y in zip(coroot, sc)))
                    if any(cand[0]) and cand not in pairs:
                        ncoeff = tuple(x - n1 * (1 if t == j else 0)
                                       for t, x in enumerate(coeff))
                        pairs[cand] = ncoeff
                        new.append((cand, ncoeff))
            frontier = new
            if len(pairs) > _MAX_ROOTS:
                raise ValidationError(
                    "root closure does not terminate (not finite type)")
        full = dict(pairs)
        for (root, coroot), coeff in pairs.items():
            key = (tuple(-x for x in root), tuple(-x for x in coroot))
            full.setdefault(key, tuple(-x for x in coeff))
        return tuple(sorted(full.items()))

    def all_roots(self):
        return tuple(pair for pair, _ in self._roots_cache())

    def positive_roots(self):
        """Roots with nonnegative coordinates over the simple roots."""
        return tuple(pair for pair, coeff in self._roots_cache()
                     if all(c >= 0 for c in coeff))

    def positive_roots_with_coeffs(self):
        return tuple((pair, coeff) for pair, coeff in self._roots_cache()
                     if all(c >= 0 for c in coeff))

    def components(self):
        """Connected components of the Dynkin diagram, as index tuples."""
        a = self.cartan_matrix()
        l = self.nroots
        seen = [False] * l
        comps = []
        for i in range(l):
            if seen[i]:
                continue
            stack = [i]
            comp = []
            seen[i] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in range(l):
                    if not seen[w] and a[v][w] != 0:
                        seen[w] = True
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)


@dataclass(frozen=True)
class GroupSpec:
    """(based root datum, involution tau on characters, Kac labeling q).

    Construction only checks shapes; run `validate` for the full report.
    The labeling is a flat tuple over the affine diagram's vertex order.
    """

    brd: BasedRootDatum
    tau: tuple
    q: tuple
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "tau", tuple(tuple(r) for r in self.tau))
        object.__setattr__(self, "q", tuple(int(x) for x in self.q))
        n = self.brd.rank
        if len(self.tau) != n or any(len(r) != n for r in self.tau):
            raise ValidationError("tau has the wrong shape")

    def tau_rows(self):
        return [list(r) for r in self.tau]

    def tau_cochar(self):
        """tau acting on cocharacters (the transpose, since tau^2 = 1)."""
        return transpose(self.tau_rows())

    def tau_root_permutation(self):
        """The permutation of simple roots induced by tau, or None."""
        roots = [list(r) for r in self.brd.simple_roots]
        coroots = [list(r) for r in self.brd.simple_coroots]
        tr = self.tau_rows()
        tc = self.tau_cochar()
        perm = []
        for r, c in zip(roots, coroots):
            img_r = mat_vec(tr, r)
            img_c = mat_vec(tc, c)
            try:
                j = roots.index(img_r)
            except ValueError:
                return None
            if coroots[j] != img_c:
                return None
            perm.append(j)
        if sorted(perm) != list(range(len(roots))):
            return None
        return tuple(perm)


@lru_cache(maxsize=1024)
def validate(spec):
    """Full validation report: tuple of (code, message); empty means pass."""
    return tuple(_validate(spec))


def _validate(spec):
    problems = []
    for msg in spec.brd.cartan_problems():
        problems.append(("cartan", msg))
    if problems:
        return problems
    tr = spec.tau_rows()
    if mat_mul(tr, tr) != identity(spec.brd.rank):
        problems.append(("tau-involution", "tau squared is not the identity"))
        return problems
    if spec.tau_root_permutation() is None:
        problems.append(("tau-permutation",
                         "tau does not permute the simple roots"))
        return problems
    from . import kac
    try:
        diagram = kac.build_diagram(spec)
    except ValidationError as e:
        problems.append(("diagram", str(e)))
        return problems
    if len(spec.q) != diagram.nvertices():
        problems.append(("labeling-shape",
                         "labeling has %d entries for %d vertices"
                         % (len(spec.q), diagram.nvertices())))
        return problems
    if any(x < 0 for x in spec.q):
        problems.append(("labeling-negative", "labels must be nonnegative"))
    if not diagram.is_labeling(spec.q):
        problems.append(("labeling-sum",
                         "labels do not satisfy the mark-weighted sum rule"))
    return problems


def ensure_valid(spec):
    problems = validate(spec)
    if problems:
        raise ValidationError("; ".join("%s: %s" % p for p in problems))


# ---------------------------------------------------------------------------
# the lattice chain
# ---------------------------------------------------------------------------

class LatticeChain:
    """All the lattices attached to a valid GroupSpec, in one ambient Q^n.

    Character-side lattices: x, q, p, lam, m and their tau-projections
    (x0, q0, p0, lam0, m0).  Cocharacter-side: xv, qv, pv, lamv, mv, the
    tau-fixed x0v, q0v, p0v, lam0v, m0v, and the half-sum images xt, qt,
    pt, lamt, mt.
    """

    def __init__(self, spec):
        ensure_valid(spec)
        brd = spec.brd
        n = brd.rank
        self.n = n
        sr = brd.root_rows()
        sc = brd.coroot_rows()
        tau = spec.tau_rows()
        tauv = spec.tau_cochar()
        std = RatLattice.standard(n)

        self.x = std
        self.q = RatLattice.from_rows(sr, n) if sr else RatLattice(1, [], n)
        self.xv = std
        self.qv = RatLattice.from_rows(sc, n) if sc else RatLattice(1, [], n)
        if sr:
            span_r = RatLattice.from_rows(sr, n)
            span_rv = RatLattice.from_rows(sc, n)
            self.p = dual_lattice(self.qv, span_r)
            self.pv = dual_lattice(self.q, span_rv)
        else:
            self.p = RatLattice(1, [], n)
            self.pv = RatLattice(1, [], n)

        # center directions: annihilators of coroots resp. roots
        self.m = RatLattice(1, kernel(sc, ncols=n), n)
        self.lamv = RatLattice(1, kernel(sr, ncols=n), n)
        self.proj_center_char = _projector(sr, self.m.rows, n)
        self.proj_center_cochar = _projector(sc, self.lamv.rows, n)
        self.proj_root_char = _complement(self.proj_center_char)
        self.proj_root_cochar = _complement(self.proj_center_cochar)
        self.lam = std.image(self.proj_center_char)
        self.mv = std.image(self.proj_center_cochar)

        # tau-restricted versions
        pi_c = _half_sum(tau)
        pi_v = _half_sum(tauv)
        self.pi_char = pi_c
        self.pi_cochar = pi_v
        self.x0 = std.image(pi_c)
        self.q0 = self.q.image(pi_c)
        self.p0 = self.p.image(pi_c)
        self.m0 = self.m.image(pi_c)
        self.lam0 = self.lam.image(pi_c)

        self.x0v = std.fixed(tauv)
        self.q0v = self.qv.fixed(tauv)
        self.p0v = self.pv.fixed(tauv)
        self.lam0v = self.lamv.fixed(tauv)
        self.m0v = self.mv.fixed(tauv)

        self.xt = std.image(pi_v)
        self.qt = self.qv.image(pi_v)
        self.pt = self.pv.image(pi_v)
        self.lamt = self.lamv.image(pi_v)
        self.mt = self.mv.image(pi_v)

    def quotient(self, big, small):
        """FinAbGroup big/small for two member lattices."""
        den = intlin._lcm(big.den, small.den)
        return FinAbGroup.quotient(big.scaled_rows(den), small.scaled_rows(den),
                                   self.n, den=den)

    def f0_quotient(self):
        return self.quotient(self.xt, self.qt.sum(self.lamt))

    def f_quotient(self):
        return self.quotient(self.xv, self.qv.sum(self.lamv))

    def c_quotient(self):
        return self.quotient(self.pv, self.qv)

    def c0_quotient(self):
        return self.quotient(self.pt, self.qt)

    def m_mod_2lamt(self):
        two_lamt = RatLattice(self.lamt.den,
                              [[2 * x for x in r] for r in self.lamt.rows],
                              self.n)
        return self.quotient(self.m0v, two_lamt)

    def x0_mod_q0m0(self):
        return self.quotient(self.x0, self.q0.sum(self.m0))

    def check(self):
        """Verify the chain inclusions; returns a list of failures."""
        bad = []

        def expect(cond, msg):
            if not cond:
                bad.append(msg)

        expect(self.p.sum(self.lam).contains_lattice(self.x),
               "P + Lambda does not contain X")
        expect(self.x.contains_lattice(self.q.sum(self.m)),
               "X does not contain Q + M")
        expect(self.xv.contains_lattice(self.qv.sum(self.lamv)),
               "X^v does not contain Q^v + Lambda^v")
        expect(self.pv.sum(self.mv).contains_lattice(self.xv),
               "P^v + M^v does not contain X^v")
        expect(self.x.intersect(self.lam) == self.m, "M != X meet Lambda")
        expect(self.xv.intersect(self.mv) == self.lamv,
               "Lambda^v != X^v meet M^v")
        expect(self.mv == self.xv.image(self.proj_center_cochar),
               "X^v does not project onto M^v")
        half_x0v = RatLattice(2 * self.x0v.den, self.x0v.rows, self.n)
        expect(self.xt.contains_lattice(self.x0v),
               "X~ does not contain X0^v")
        expect(half_x0v.contains_lattice(self.xt),
               "X~ is not inside (1/2) X0^v")
        return bad


def _half_sum(tau_rows):
    """(I + tau)/2 as a rational matrix."""
    n = len(tau_rows)
    return [[Fraction(tau_rows[i][j] + (1 if i == j else 0), 2)
             for j in range(n)] for i in range(n)]


def _projector(span_rows, complement_rows, n):
    """Projection onto span(complement_rows) along span(span_rows)."""
    basis = [list(r) for r in span_rows] + [list(r) for r in complement_rows]
    if len(basis) != n:
        raise ValidationError("spans do not decompose the ambient space")
    bt = transpose(basis)
    k = len(span_rows)
    cols = []
    for i in range(n):
        e = [Fraction(1) if t == i else Fraction(0) for t in range(n)]
        c = solve_frac(bt, e)
        if c is None:
            raise ValidationError("spans do not decompose the ambient space")
        proj = [sum(c[k + j] * Fraction(complement_rows[j][t])
                    for j in range(len(complement_rows)))
                for t in range(n)]
        cols.append(proj)
    return transpose(cols)


def _complement(proj):
    n = len(proj)
    return [[(1 if i == j else 0) - proj[i][j] for j in range(n)]
            for i in range(n)]


@lru_cache(maxsize=256)
def lattice_chain(spec):
    return LatticeChain(spec)


def fundamental_group(spec):
    """pi_1 of the group: X^v / Q^v with gamma acting as -tau."""
    ensure_valid(spec)
    act = [[-x for x in row] for row in spec.tau_cochar()]
    return GammaModule(spec.brd.rank, spec.brd.coroot_rows(), act)
