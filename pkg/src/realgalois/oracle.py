"""Independent brute-force verifiers for the main pipeline.

Everything here recomputes results from first principles: Tate groups by
enumerating all elements of a finite module, and the cohomology count of
a compact group by orbit-counting order-two torus elements under the Weyl
group.  Oracles only consume raw specifications and the gmod-level
definitions, never intermediate pipeline data.
"""

from dataclasses import dataclass
from itertools import product

from .gmod import GammaModule, ValidationError
from .intlin import mat_vec, smith_diagonal

_MAX_POINTS = 10 ** 6


@dataclass(frozen=True)
class OracleReport:
    claim: str
    main: object
    oracle: object
    equal: bool


def _module_points(module):
    """All elements of a finite module as canonical coordinate tuples.

    Returns (points, reduce) where reduce maps an ambient vector to its
    canonical tuple; raises if the module is infinite or too large.
    """
    diag = smith_diagonal(module.relation_rows() or [[0] * module.n])
    # quotient Z^n / relations: need the full coordinate change
    from .gmod import FinAbGroup
    from .intlin import identity
    group = FinAbGroup.quotient(identity(module.n), module.relation_rows(),
                                module.n)
    if group.order() is None:
        raise ValidationError("module is infinite")
    if group.order() > _MAX_POINTS:
        raise ValidationError("module too large for exhaustion")
    points = group.elements()

    def reduce(vec):
        return group.coords(vec)

    def lift(coords):
        return [int(x) for x in group.rep(coords)]

    return points, group, reduce, lift


def tate_bruteforce(module, k):
    """Tate cohomology by literal enumeration of a finite module.

    Returns the invariant factors; each Tate group has exponent dividing
    two, which is verified by exhaustion rather than assumed.
    """
    points, group, reduce, lift = _module_points(module)
    d_k = module.differential(k)
    d_prev = module.differential(k - 1)
    zero = group.coords([0] * module.n)
    cocycles = [p for p in points
                if reduce(mat_vec(d_k, lift(p))) == zero]
    boundaries = {reduce(mat_vec(d_prev, lift(p))) for p in points}
    if len(cocycles) % len(boundaries):
        raise AssertionError("boundaries do not partition the cocycles")
    order = len(cocycles) // len(boundaries)
    bset = boundaries
    for p in cocycles:
        dbl = group.add(p, p)
        if dbl not in bset:
            raise AssertionError("a Tate class fails 2 xi = 0")
    # an elementary abelian 2-group is determined by its order
    count = order.bit_length() - 1
    if 2 ** count != order:
        raise AssertionError("Tate group order is not a power of two")
    return (2,) * count


def borel_serre_count(spec):
    """#(T(2)/W) for a compact spec: the classical cohomology count.

    The spec must be compact: tau trivial on the roots (inner form) and
    all label weight on the affine vertices.
    """
    from . import kac
    from .intlin import identity
    from .rootdata import ensure_valid
    ensure_valid(spec)
    if spec.tau_rows() != identity(spec.brd.rank):
        raise ValidationError("tau is nontrivial, so the form is not compact")
    diagram = kac.build_diagram(spec)
    labels = list(spec.q)
    for comp, off in zip(diagram.components, diagram._offsets):
        if labels[off] * comp.vertices[0].mark != 2 or \
                any(labels[off + i] for i in range(1, comp.nverts())):
            raise ValidationError("labeling is not the compact base point")
    n = spec.brd.rank
    if n > 22:
        raise ValidationError("rank too large for exhaustion")
    refl = [(list(r), list(c)) for r, c in zip(spec.brd.simple_roots,
                                               spec.brd.simple_coroots)]
    orbits = 0
    seen = set()
    for bits in product((0, 1), repeat=n):
        if bits in seen:
            continue
        orbits += 1
        stack = [bits]
        seen.add(bits)
        while stack:
            x = stack.pop()
            for root, coroot in refl:
                pair = sum(a * b for a, b in zip(root, x))
                y = tuple((xi - pair * ci) % 2 for xi, ci in zip(x, coroot))
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return orbits


def crosscheck_all(entries=None):
    """Run every paired (pipeline, oracle) computation.

    `entries` maps claim ids to (main_fn, oracle_fn) pairs; the default
    catalog covers the indecomposable tori, random finite modules, the
    lattice classification, the compact simple types, and the spin-torus
    example families.  Returns a list of OracleReport.
    """
    if entries is None:
        entries = default_entries()
    out = []
    for claim in sorted(entries):
        main_fn, oracle_fn = entries[claim]
        main = main_fn()
        orc = oracle_fn()
        out.append(OracleReport(claim, main, orc, main == orc))
    return out


def default_entries():
    import random

    from . import catalog, kac
    from .gmod import tate
    from .glattice import GammaLattice, lattice_tate, model_matrix
    from .intlin import identity, inv_unimodular, mat_mul
    from .torus import TorusSpec, pi0_torus, torus_tate

    entries = {}

    # dual routes on tori: exact linear algebra vs the classification
    for name, spec in [("torus-split", TorusSpec.split()),
                       ("torus-compact", TorusSpec.compact()),
                       ("torus-weil", TorusSpec.weil_restriction())]:
        for k in (0, 1):
            def main(spec=spec, k=k):
                return torus_tate(spec, k)[0].invariants

            def orc(spec=spec, k=k):
                return lattice_tate(spec.cochar, k).invariants
            entries["%s-h%d" % (name, k)] = (main, orc)

    rng = random.Random(20240810)

    def random_module(rng):
        while True:
            n = rng.randrange(1, 4)
            a = rng.randrange(0, n + 1)
            b = rng.randrange(0, n - a + 1)
            c = (n - a - b) // 2
            if a + b + 2 * c:
                break
        n = a + b + 2 * c
        s = model_matrix(a, b, c)
        g = _random_unimodular(n, rng)
        s = mat_mul(mat_mul(g, s), inv_unimodular(g))
        # d Z^n is stable under any action, so the quotient is a module
        d = rng.choice([2, 3, 4, 6])
        rel = [[d if i == j else 0 for j in range(n)] for i in range(n)]
        return GammaModule(n, rel, s)

    mods = [random_module(rng) for _ in range(40)]

    def main_tate(mods=mods):
        return [tate(m, k).invariants for m in mods for k in (0, 1)]

    def orc_tate(mods=mods):
        return [tate_bruteforce(m, k) for m in mods for k in (0, 1)]

    entries["random-finite-modules-tate"] = (main_tate, orc_tate)

    for fam, rank in catalog.COMPACT_SIMPLE_TYPES:
        name = "compact-%s%d-h1-count" % (fam.lower(), rank)
        spec = catalog.compact_simple(fam, rank)

        def main(spec=spec):
            return len(kac.h1(spec)[0])

        def orc(spec=spec):
            return borel_serre_count(spec)
        entries[name] = (main, orc)

    for l in (6, 8, 12):
        for sector, formula in [((0, 0), l // 4 + 2), ((1, 0), -(-l // 4)),
                                ((0, 1), 2), ((1, 1), 1)]:
            name = "gsq-l%d-r%d-rp%d-count" % (l, sector[0], sector[1])
            spec = catalog.spin_torus_spec(l, True, sector)

            def main(spec=spec):
                return len(kac.h1(spec)[0])

            def orc(formula=formula):
                return formula
            entries[name] = (main, orc)
        for r, formula in [(0, l // 2 + 5), (1, l // 2 + 2)]:
            name = "gcq-l%d-r%d-count" % (l, r)
            spec = catalog.spin_torus_spec(l, False, (r, 0))

            def main(spec=spec):
                return len(kac.h1(spec)[0])

            def orc(formula=formula):
                return formula
            entries[name] = (main, orc)
    return entries


def _random_unimodular(n, rng, steps=10):
    from .intlin import identity
    m = identity(n)
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.choice([-2, -1, 1, 2])
        for t in range(n):
            m[i][t] += c * m[j][t]
    return m
