"""Shared deterministic generators for the test suite."""

import random

import pytest

from realgalois import catalog
from realgalois.glattice import model_matrix
from realgalois.gmod import GammaMap, GammaModule, ShortExact
from realgalois.hyper import ComplexMorphism, ComplexSES, ShortComplex
from realgalois.intlin import (
    hnf, identity, inv_unimodular, lattice_sum, mat_mul, mat_vec, transpose,
)
from realgalois.rootdata import GroupSpec


def rng_for(name):
    return random.Random("realgalois:" + name)


def random_unimodular(n, rng, steps=10, bound=2):
    m = identity(n)
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.choice([x for x in range(-bound, bound + 1) if x])
        for t in range(n):
            m[i][t] += c * m[j][t]
    return m


def random_involution(n, rng):
    """A random integer involution: a conjugated block model."""
    while True:
        a = rng.randrange(0, n + 1)
        b = rng.randrange(0, n - a + 1)
        if (n - a - b) % 2 == 0:
            break
    c = (n - a - b) // 2
    g = random_unimodular(n, rng)
    return mat_mul(mat_mul(g, model_matrix(a, b, c)), inv_unimodular(g))


def random_module(rng, nmax=4, allow_infinite=True):
    """A random Gamma-module: conjugated involution plus stable relations."""
    n = rng.randrange(1, nmax + 1)
    s = random_involution(n, rng)
    rel = []
    kind = rng.randrange(3)
    if kind == 0 and allow_infinite:
        pass  # free module
    elif kind == 1:
        d = rng.choice([2, 3, 4, 6, 8])
        rel = [[d if i == j else 0 for j in range(n)] for i in range(n)]
    else:
        for _ in range(rng.randrange(1, n + 1)):
            v = [rng.randrange(-3, 4) for _ in range(n)]
            rel.append(v)
            rel.append(mat_vec(s, v))
    return GammaModule(n, rel, s)


def random_subspan(module, rng):
    """A stable sublattice of the module, containing its relations."""
    n = module.n
    rows = [list(r) for r in module.relation_rows()]
    for _ in range(rng.randrange(1, n + 1)):
        v = [rng.randrange(-2, 3) for _ in range(n)]
        rows.append(v)
        rows.append(module.gamma(v))
    return hnf(rows)


def sub_quotient_sequence(module, sub_rows):
    """The short exact sequence sub -> module -> module/sub."""
    from realgalois.hyper import _sub_module
    basis = hnf(sub_rows)
    amod = _sub_module(module, basis)
    cmod = GammaModule(module.n,
                       lattice_sum(basis, module.relation_rows()),
                       module.action_rows())
    inj = GammaMap(amod, module, transpose(basis) if basis
                   else [[] for _ in range(module.n)])
    proj = GammaMap(module, cmod, identity(module.n))
    return ShortExact(inj, proj)


def random_short_exact(rng, nmax=4):
    b = random_module(rng, nmax)
    sub = random_subspan(b, rng)
    return sub_quotient_sequence(b, sub)


def random_complex(rng, nmax=3):
    # a free source makes any equivariant matrix a valid boundary
    n1 = rng.randrange(1, nmax + 1)
    a1 = GammaModule(n1, (), random_involution(n1, rng))
    a0 = random_module(rng, nmax)
    # raw + S0 raw S1 is equivariant for exact involutions
    raw = [[rng.randrange(-2, 3) for _ in range(a1.n)] for _ in range(a0.n)]
    sym = mat_mul(a0.action_rows(), mat_mul(raw, a1.action_rows()))
    bnd = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(raw, sym)]
    return ShortComplex.of(a1, a0, bnd)


def random_complex_ses(rng, nmax=3):
    """A short exact sequence of short complexes, built componentwise."""
    from realgalois.hyper import _sub_module
    bcx = random_complex(rng, nmax)
    b1, b0 = bcx.a1, bcx.a0
    k1 = random_subspan(b1, rng)
    image = [bcx.boundary(v) for v in k1]
    rows0 = [list(r) for r in b0.relation_rows()] + image
    for _ in range(rng.randrange(0, b0.n + 1)):
        v = [rng.randrange(-2, 3) for _ in range(b0.n)]
        rows0.append(v)
        rows0.append(b0.gamma(v))
    k0 = hnf(rows0)
    seq1 = sub_quotient_sequence(b1, k1)
    seq0 = sub_quotient_sequence(b0, k0)
    a1, a0 = seq1.a, seq0.a
    c1, c0 = seq1.c, seq0.c
    # boundary on the subcomplex, in sub coordinates
    from realgalois.intlin import solve
    bt0 = transpose(hnf(k0)) if hnf(k0) else []
    arows = []
    for v in hnf(k1):
        img = bcx.boundary(v)
        coeff = solve(bt0, img)
        arows.append(coeff)
    abnd = transpose(arows) if arows else [[] for _ in range(a0.n)]
    acx = ShortComplex.of(a1, a0, abnd)
    ccx = ShortComplex.of(c1, c0, bcx.boundary.matrix_rows())
    alpha = ComplexMorphism(acx, bcx, seq1.inj, seq0.inj)
    beta = ComplexMorphism(bcx, ccx, seq1.proj, seq0.proj)
    return ComplexSES(alpha, beta)


# ---------------------------------------------------------------------------
# the spec zoo: a broad deterministic collection of valid GroupSpecs
# ---------------------------------------------------------------------------

def _outer_tau(datum, flip):
    """tau from a permutation of the simple roots (for X = weight lattice)."""
    # weight-basis coordinates: tau permutes the basis
    n = datum.rank
    return [[1 if flip[j] == i else 0 for j in range(n)] for i in range(n)]


def outer_sc_spec(family, rank, q_index=0):
    """Simply connected quasi-split outer form of A_n, D_n or E_6."""
    from realgalois import kac
    datum = catalog.simply_connected_datum(family, rank)
    if family == "A":
        flip = {i: rank - 1 - i for i in range(rank)}
    elif family == "D":
        flip = {i: i for i in range(rank)}
        flip[rank - 2], flip[rank - 1] = rank - 1, rank - 2
    elif family == "E" and rank == 6:
        flip = {0: 5, 5: 0, 2: 4, 4: 2, 3: 3, 1: 1}
    else:
        raise ValueError("no outer automorphism")
    tau = _outer_tau(datum, flip)
    spec0 = GroupSpec(datum, tau, (0,), name="probe")
    diagram = kac.build_diagram(spec0)
    qs = diagram.labelings()
    q = qs[q_index % len(qs)]
    return GroupSpec(datum, tau, q,
                     name="%s%d-outer-%d" % (family, rank, q_index))


def swapped_pair_spec(family, rank, q_index=0):
    """Two copies of a simple type swapped by tau (a Weil restriction)."""
    from realgalois import kac
    base = catalog.simply_connected_datum(family, rank)
    n = base.rank
    roots = [list(r) + [0] * n for r in base.simple_roots] + \
            [[0] * n + list(r) for r in base.simple_roots]
    coroots = [list(r) + [0] * n for r in base.simple_coroots] + \
              [[0] * n + list(r) for r in base.simple_coroots]
    datum = catalog.BasedRootDatum(2 * n, roots, coroots)
    z = [[0] * n for _ in range(n)]
    eye = identity(n)
    tau = [za + ia for za, ia in zip(z, eye)] + \
          [ia + za for ia, za in zip(eye, z)]
    spec0 = GroupSpec(datum, tau, (0,), name="probe")
    diagram = kac.build_diagram(spec0)
    qs = diagram.labelings()
    q = qs[q_index % len(qs)]
    return GroupSpec(datum, tau, q,
                     name="%s%d-swap-%d" % (family, rank, q_index))


def spec_zoo(include_tori=120):
    """A diverse deterministic list of valid GroupSpecs."""
    rng = rng_for("zoo")
    out = []
    for _ in range(include_tori):
        n = rng.randrange(1, 5)
        out.append(catalog.torus_as_group(random_involution(n, rng),
                                          name="torus-%d" % len(out)))
    for fam, rank in catalog.COMPACT_SIMPLE_TYPES:
        if rank <= 5:
            out.append(catalog.compact_simple(fam, rank))
    for fam, rank in [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 3),
                      ("D", 4), ("G", 2)]:
        out.append(catalog.compact_simple(fam, rank, adjoint=True))
    from realgalois import kac
    for fam, rank in [("A", 1), ("A", 2), ("B", 2), ("G", 2)]:
        spec = catalog.compact_simple(fam, rank)
        for q in kac.build_diagram(spec).labelings():
            out.append(GroupSpec(spec.brd, spec.tau, q,
                                 name="%s%d-q%s" % (fam, rank, "".join(
                                     map(str, q)))))
        spec = catalog.compact_simple(fam, rank, adjoint=True)
        for q in kac.build_diagram(spec).labelings():
            out.append(GroupSpec(spec.brd, spec.tau, q,
                                 name="%s%dad-q%s" % (fam, rank, "".join(
                                     map(str, q)))))
    for fam, rank, nq in [("A", 2, 1), ("A", 3, 3), ("A", 4, 2),
                          ("A", 5, 3), ("D", 4, 3), ("D", 5, 3),
                          ("E", 6, 3)]:
        for qi in range(nq):
            out.append(outer_sc_spec(fam, rank, qi))
    for fam, rank, nq in [("A", 1, 2), ("A", 2, 1), ("B", 2, 2)]:
        for qi in range(nq):
            out.append(swapped_pair_spec(fam, rank, qi))
    for l in (6, 8):
        for r in (0, 1):
            for rp in (0, 1):
                out.append(catalog.spin_torus_spec(l, True, (r, rp)))
            out.append(catalog.spin_torus_spec(l, False, (r, 0)))
    su2 = catalog.su2()
    tc = catalog.torus_as_group([[-1]], name="tc")
    ts = catalog.torus_as_group([[1]], name="ts")
    out.append(catalog.product_spec(su2, tc))
    out.append(catalog.product_spec(su2, ts))
    out.append(catalog.product_spec(catalog.compact_simple("B", 2), su2))
    out.append(catalog.product_spec(outer_sc_spec("A", 2), tc))
    return out


@pytest.fixture(scope="session")
def zoo():
    return spec_zoo()


@pytest.fixture(scope="session")
def small_zoo():
    return spec_zoo(include_tori=20)[:90]
