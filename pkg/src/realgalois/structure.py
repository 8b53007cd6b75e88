"""Structure maps on the cohomology of reductive groups.

Covers functoriality along normal homomorphisms, the twisting bijections
that move the base point, the action of the center's cohomology, the
abelianization map into H^1 of the fundamental group, and the connecting
homomorphism of a short exact sequence, which factors through the center
of the kernel.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import intlin, kac
from .gmod import FinAbGroup, GammaMap, GammaModule, ValidationError, tate
from .hyper import ShortComplex, hyper
from .intlin import lattice_eq, mat_mul, mat_vec, solve, solve_frac, transpose
from .kac import (
    CocycleRep, F0Action, ReductiveLabeling, _apply, build_diagram,
    class_index, diagram_action, h1, h1_data, nu_of, reductive_labelings,
)
from .rootdata import ensure_valid, fundamental_group, lattice_chain


# ---------------------------------------------------------------------------
# functoriality along normal homomorphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NormalHom:
    """A normal homomorphism, recorded by its cocharacter map and the
    diagram of its image embedded into the source and target diagrams.

    `source_vertices` and `target_vertices` list matching flat vertex
    indices; off the image diagram the target labeling must be q''.
    """

    source: object
    target: object
    cochar: tuple
    source_vertices: tuple
    target_vertices: tuple

    def __post_init__(self):
        object.__setattr__(self, "cochar", tuple(tuple(r) for r in self.cochar))
        object.__setattr__(self, "source_vertices",
                           tuple(self.source_vertices))
        object.__setattr__(self, "target_vertices",
                           tuple(self.target_vertices))
        ensure_valid(self.source)
        ensure_valid(self.target)
        if len(self.source_vertices) != len(self.target_vertices):
            raise ValidationError("vertex correspondences differ in length")
        mat = self.cochar_rows()
        if len(mat) != self.target.brd.rank or \
                any(len(r) != self.source.brd.rank for r in mat):
            raise ValidationError("cocharacter map has the wrong shape")
        # equivariance for the Galois actions (-tau on each side)
        lhs = mat_mul(mat, self.source.tau_cochar())
        rhs = mat_mul(self.target.tau_cochar(), mat)
        if lhs != rhs:
            raise ValidationError("cocharacter map is not equivariant")
        ds = build_diagram(self.source)
        dt = build_diagram(self.target)
        ms, mt = ds.marks(), dt.marks()
        for sv, tv in zip(self.source_vertices, self.target_vertices):
            if ms[sv] != mt[tv]:
                raise ValidationError("image diagram embeddings break marks")
            if self.source.q[sv] != self.target.q[tv]:
                raise ValidationError(
                    "base labelings do not restrict compatibly")

    def cochar_rows(self):
        return [list(r) for r in self.cochar]


def pushforward(hom, rep):
    """Image cocycle: splice the labels through the image diagram and push
    the m datum through the cocharacter map."""
    src, tgt = hom.source, hom.target
    labels = list(tgt.q)
    for sv, tv in zip(hom.source_vertices, hom.target_vertices):
        labels[tv] = rep.labels[sv]
    labels = tuple(labels)
    m_img = mat_vec([[Fraction(x) for x in row] for row in hom.cochar_rows()],
                    [Fraction(x) for x in rep.m_rep])
    mq_t = lattice_chain(tgt).m_mod_2lamt()
    m_coords = mq_t.coords(m_img)
    m_rep = mq_t.rep(m_coords)
    nu = nu_of(tgt, labels, m_rep)
    if any(Fraction(x).denominator != 1 for x in nu):
        raise ValidationError("pushforward left the reductive set")
    nu = tuple(int(x) for x in nu)
    return CocycleRep(labels, tuple(m_coords), tuple(m_rep), nu,
                      tuple(x % 2 for x in nu))


def identity_hom(spec):
    diagram = build_diagram(spec)
    verts = tuple(range(diagram.nvertices()))
    return NormalHom(spec, spec, intlin.identity(spec.brd.rank), verts, verts)


# ---------------------------------------------------------------------------
# twisting
# ---------------------------------------------------------------------------

def twist(spec, labels, m_coords):
    """Rebase at the reductive pair (q', [m']); return the spec at q' and
    the class translation back to the original base.

    The translation sends class i of the new spec to `mapping[i]` of the
    old; it is checked to be a bijection.
    """
    from .rootdata import GroupSpec
    key_index = class_index(spec, labels, m_coords)  # validates the pair
    del key_index
    new = GroupSpec(spec.brd, spec.tau, tuple(labels),
                    name=(spec.name + "-twist") if spec.name else "twist")
    ensure_valid(new)
    mq = lattice_chain(spec).m_mod_2lamt()
    m_prime = mq.rep(m_coords)
    classes_new, _, _ = h1_data(new)
    mapping = []
    for rep in classes_new:
        shifted = tuple(a + b for a, b in zip(rep.m_rep, m_prime))
        mapping.append(class_index(spec, rep.labels, mq.coords(shifted)))
    if sorted(mapping) != list(range(len(h1(spec)[0]))):
        raise AssertionError("twisting failed to be a bijection on classes")
    return new, tuple(mapping)


# ---------------------------------------------------------------------------
# the center and its action
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CenterCocycle:
    """A center 1-cocycle in normal form.

    Represents Exp(i nu_p) Exp(i nu_m / 2) with nu_p a coweight and nu_m a
    restricted central cocharacter; the cocycle condition is
    nu_p + tau(nu_p) + nu_m integral and tau-fixed.
    """

    nu_p: tuple
    nu_m: tuple


def check_center_cocycle(spec, z):
    chain = lattice_chain(spec)
    if not chain.pv.contains(z.nu_p):
        raise ValidationError("nu_p is not a coweight")
    if not chain.m0v.contains(z.nu_m):
        raise ValidationError("nu_m is not a restricted central cocharacter")
    total = [Fraction(a) + Fraction(b)
             for a, b in zip(_apply(spec.tau_cochar(), z.nu_p), z.nu_p)]
    total = [a + Fraction(b) for a, b in zip(total, z.nu_m)]
    if not chain.x0v.contains(total):
        raise ValidationError("center cocycle condition fails")


def center_hyper(spec):
    """H^0 of (X^v -> P^v): the cohomology of the center in degree one.

    Returns (group, pv_basis, pv_den); hypercocycles split as (nu, nu')
    with nu in ambient coordinates and nu' in the P^v basis.
    """
    chain = lattice_chain(spec)
    n = spec.brd.rank
    xmod = fundamental_like_module(spec)
    pv = chain.pv
    basis = pv.frac_rows()
    r = len(basis)
    act_rows = []
    tauv = spec.tau_cochar()
    bt = transpose(basis) if basis else []
    for b in basis:
        img = [-x for x in _apply(tauv, b)]
        c = solve_frac(bt, img)
        if c is None or any(f.denominator != 1 for f in c):
            raise AssertionError("P^v is not stable under the action")
        act_rows.append([int(f) for f in c])
    pmod = GammaModule(r, (), transpose(act_rows))
    bnd = []
    for i in range(n):
        e = [Fraction(1) if t == i else Fraction(0) for t in range(n)]
        img = _apply(chain.proj_root_cochar, e)
        c = solve_frac(bt, list(img)) if r else ([] if not any(img) else None)
        if c is None or any(f.denominator != 1 for f in c):
            raise AssertionError("adjoint map does not land in P^v")
        bnd.append([int(f) for f in c])
    comp = ShortComplex.of(xmod, pmod, transpose(bnd) if r else [])
    return hyper(comp, 0), basis, comp


def fundamental_like_module(spec):
    """X^v as a free module with the Galois action -tau."""
    act = [[-x for x in row] for row in spec.tau_cochar()]
    return GammaModule(spec.brd.rank, (), act)


def center_normal_form(spec, nu, nuprime_coords, basis):
    """Convert a hypercocycle (nu, nu') into CenterCocycle normal form."""
    chain = lattice_chain(spec)
    nuprime = [sum(Fraction(c) * b[j] for c, b in zip(nuprime_coords, basis))
               for j in range(spec.brd.rank)]
    nu_p = tuple(-x for x in nuprime)
    nu_m = tuple(_apply(chain.proj_center_cochar, [Fraction(x) for x in nu]))
    z = CenterCocycle(nu_p, nu_m)
    check_center_cocycle(spec, z)
    return z


def center_classes(spec):
    """All classes of H^1 of the center, in normal form."""
    group, basis, comp = center_hyper(spec)
    n = spec.brd.rank
    out = []
    for coords in group.elements():
        vec = group.rep(coords)
        nu = [int(x) for x in vec[:n]]
        nuprime = [int(x) for x in vec[n:]]
        out.append(center_normal_form(spec, nu, nuprime, basis))
    return group, tuple(out)


def center_act(spec, z, rep):
    """Act on a class representative by a center cocycle.

    Returns the raw translated labeling datum plus its class index.
    """
    check_center_cocycle(spec, z)
    mq = lattice_chain(spec).m_mod_2lamt()
    labels = diagram_action(spec, z.nu_p, rep.labels)
    shifted = tuple(Fraction(a) + Fraction(b)
                    for a, b in zip(rep.m_rep, z.nu_m))
    m_coords = mq.coords(shifted)
    return ReductiveLabeling(labels, tuple(m_coords)), \
        class_index(spec, labels, m_coords)


# ---------------------------------------------------------------------------
# abelianization
# ---------------------------------------------------------------------------

def ab1(spec, rep):
    """Class of the representative's cocharacter in H^1 of pi_1."""
    group = tate(fundamental_group(spec), 1)
    return group, group.coords(list(rep.nu))


def ab1_table(spec):
    """ab^1 on every cohomology class; constant on orbits by construction."""
    classes, _ = h1(spec)
    group = tate(fundamental_group(spec), 1)
    return group, tuple(group.coords(list(rep.nu)) for rep in classes)


# ---------------------------------------------------------------------------
# connecting maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupSeq:
    """1 -> G1 -> G2 -> G3 -> 1 of reductive specs with chosen splittings.

    `i_mat`, `j_mat` are the cocharacter maps; `s_ssc` splits j on the
    coroot lattice, `s_ad` extends it to the coweight lattice (the
    compatibility of the two splittings is exactly that extension).
    """

    g1: object
    g2: object
    g3: object
    i_mat: tuple
    j_mat: tuple
    s_ssc: tuple
    s_ad: tuple

    def __post_init__(self):
        for name in ("i_mat", "j_mat", "s_ssc", "s_ad"):
            object.__setattr__(self, name,
                               tuple(tuple(r) for r in getattr(self, name)))
        for g in (self.g1, self.g2, self.g3):
            ensure_valid(g)
        i, j = self.rows("i_mat"), self.rows("j_mat")
        n1, n2, n3 = (g.brd.rank for g in (self.g1, self.g2, self.g3))
        if len(i) != n2 or len(j) != n3:
            raise ValidationError("cocharacter maps have the wrong shape")
        for mat, a, b in ((i, self.g1, self.g2), (j, self.g2, self.g3)):
            if mat_mul(mat, a.tau_cochar()) != mat_mul(b.tau_cochar(), mat):
                raise ValidationError("cocharacter map is not equivariant")
        # exact row on cocharacters
        if not lattice_eq(intlin.preimage_lattice(j, [], ncols=n2),
                          intlin.image_rows(i)):
            raise ValidationError("cocharacters are not exact in the middle")
        if intlin.hnf(intlin.image_rows(j)) != intlin.identity(n3):
            raise ValidationError("cocharacter map of j is not onto")
        # splitting checks on the coroot generators
        ssc = self.rows("s_ssc")
        sad = self.rows("s_ad")
        chain2 = lattice_chain(self.g2)
        chain3 = lattice_chain(self.g3)
        for cr in self.g3.brd.coroot_rows():
            lift = mat_vec([[Fraction(x) for x in r] for r in ssc],
                           [Fraction(x) for x in cr])
            if mat_vec(j, [Fraction(x) for x in lift]) != \
                    [Fraction(x) for x in cr]:
                raise ValidationError("coroot splitting does not split j")
            if not chain2.qv.contains(lift):
                raise ValidationError("coroot splitting leaves the coroots")
            via_ad = mat_vec([[Fraction(x) for x in r] for r in sad],
                             [Fraction(x) for x in cr])
            if via_ad != lift:
                raise ValidationError("splittings are incompatible")
        for wr in chain3.pv.frac_rows():
            lift = mat_vec([[Fraction(x) for x in r] for r in sad], list(wr))
            if not chain2.pv.contains(lift):
                raise ValidationError("coweight splitting leaves the coweights")
            if mat_vec([[Fraction(x) for x in r] for r in j], lift) != list(wr):
                raise ValidationError("coweight splitting does not split j")

    def rows(self, name):
        return [list(r) for r in getattr(self, name)]


def delta_z(seq, coords):
    """The connecting class in H^1 Z(G1) of a class of H^0 pi_1(G3).

    Input is a coordinate tuple for tate(pi_1 G3, 0); the output is the
    coordinate tuple in the center hypercohomology of G1, together with
    the cocycle in center normal form.
    """
    h03 = tate(fundamental_group(seq.g3), 0)
    nu3 = [int(x) for x in h03.rep(coords)]
    g1, g2, g3 = seq.g1, seq.g2, seq.g3
    tau2, tau3 = g2.tau_cochar(), g3.tau_cochar()
    nu3s = [-a - b for a, b in zip(mat_vec(tau3, nu3), nu3)]
    chain3 = lattice_chain(g3)
    if not chain3.qv.contains(nu3s):
        raise ValidationError("class is not a zero-cocycle of pi_1")
    ssc = [[Fraction(x) for x in r] for r in seq.rows("s_ssc")]
    nu2s_f = mat_vec(ssc, [Fraction(x) for x in nu3s])
    if any(f.denominator != 1 for f in nu2s_f):
        raise AssertionError("coroot lift left the lattice")
    nu2s = [int(f) for f in nu2s_f]
    nu2 = solve(seq.rows("j_mat"), nu3)
    if nu2 is None:
        raise AssertionError("cocharacter lift failed")
    gamma_nu2 = [-x for x in mat_vec(tau2, nu2)]
    nu1_amb = [a - b - c for a, b, c in zip(gamma_nu2, nu2, nu2s)]
    nu1 = solve(seq.rows("i_mat"), nu1_amb)
    if nu1 is None:
        raise AssertionError("connecting element misses the kernel")
    chain2 = lattice_chain(g2)
    ad2_nu2 = _apply(chain2.proj_root_cochar, [Fraction(x) for x in nu2])
    ad3_nu3 = _apply(lattice_chain(g3).proj_root_cochar,
                     [Fraction(x) for x in nu3])
    sad = [[Fraction(x) for x in r] for r in seq.rows("s_ad")]
    nu1_ad_amb = [a - b for a, b in zip(ad2_nu2, mat_vec(sad, list(ad3_nu3)))]
    nu1_ad = solve_frac([[Fraction(x) for x in r]
                         for r in seq.rows("i_mat")], list(nu1_ad_amb))
    if nu1_ad is None:
        raise AssertionError("adjoint part misses the kernel")
    chain1 = lattice_chain(g1)
    if not chain1.pv.contains(nu1_ad):
        raise AssertionError("adjoint part is not a coweight of the kernel")
    tau1 = g1.tau_cochar()
    if mat_vec(tau1, nu1) != list(nu1):
        # gamma nu1 + nu1 = 0 means tau nu1 = nu1
        raise AssertionError("connecting element fails the cocycle identity")
    # Ad_1(nu1) must equal gamma(nu1_ad) - nu1_ad
    lhs = _apply(chain1.proj_root_cochar, [Fraction(x) for x in nu1])
    gamma_ad = [-x for x in mat_vec([[Fraction(t) for t in r] for r in tau1],
                                    list(nu1_ad))]
    if list(lhs) != [a - b for a, b in zip(gamma_ad, nu1_ad)]:
        raise AssertionError("adjoint part fails its coboundary identity")
    group, basis, comp = center_hyper(g1)
    coords1 = _pv_coords(basis, nu1_ad)
    vec = list(nu1) + coords1
    cls = group.coords(vec)
    z = center_normal_form(g1, nu1, coords1, basis)
    return group, cls, z


def _pv_coords(basis, vec):
    bt = transpose(basis) if basis else []
    if not basis:
        if any(Fraction(x) for x in vec):
            raise AssertionError("vector outside the coweight span")
        return []
    c = solve_frac(bt, [Fraction(x) for x in vec])
    if c is None or any(f.denominator != 1 for f in c):
        raise AssertionError("vector outside the coweight lattice")
    return [int(f) for f in c]


@dataclass(frozen=True)
class JointReport:
    joint: str
    ok: bool


def exactness_report(qt_spec):
    """Exactness of pi0(A) -> pi0(T) -> pi0(T') -> H^1(A) -> H^1(T) -> H^1(T')
    for a torus sequence presented by a quasi-torus with finite kernel.

    Every term is computed independently and image = kernel is verified as
    a subgroup identity at the four inner joints.
    """
    from .gmod import FinAbHom, GammaMap, exact_at
    from .torus import torus_log_class
    if not qt_spec.is_finite():
        raise ValidationError(
            "exactness_report needs a finite kernel; use exact_seq_check")
    amod, basis, den = qt_spec.as_finite_module()
    src_lat, tgt_lat = qt_spec.source.cochar, qt_spec.target.cochar
    jmat = qt_spec.matrix_rows()

    def a_ambient(coords_vec):
        return [Fraction(sum(c * b[t] for c, b in zip(coords_vec, basis)), den)
                for t in range(qt_spec.source.rank)]

    # pi0(A) = the real points of the finite kernel
    fixed = intlin.preimage_lattice(
        [[amod.action_rows()[i][j] - (1 if i == j else 0)
          for j in range(amod.n)] for i in range(amod.n)],
        amod.relation_rows(), ncols=amod.n)
    pi0_a = FinAbGroup.quotient(fixed, amod.relation_rows(), amod.n)
    pi0_t = tate(src_lat.as_module(), 0)
    pi0_tp = tate(tgt_lat.as_module(), 0)
    h1_a = tate(amod, 1)
    h1_t = tate(src_lat.as_module(), 1)
    h1_tp = tate(tgt_lat.as_module(), 1)

    # pi0 A -> pi0 T: a real kernel point, read as a component of T(R)
    imgs = []
    for g in pi0_a.gens:
        w = a_ambient([int(x) for x in g])
        grp, coords = torus_log_class(src_lat, w, 0)
        imgs.append(pi0_t.coords([int(x) for x in grp.rep(coords)]))
    m1 = FinAbHom(pi0_a, pi0_t, imgs)

    jmap = GammaMap(src_lat.as_module(), tgt_lat.as_module(), jmat)
    from .gmod import induced_hom
    m2 = induced_hom(jmap, 0, source_group=pi0_t, target_group=pi0_tp)

    # delta: pi0 T' -> H^1 A by lifting and twisting
    imgs = []
    s1 = src_lat.matrix()
    for g in pi0_tp.gens:
        nu3 = [int(x) for x in g]
        x = solve_frac(jmat, [Fraction(v, 2) for v in nu3])
        w = [-a - b for a, b in zip(_apply(s1, x), x)]
        c = _module_coords(basis, den, w)
        imgs.append(h1_a.coords(c))
    m3 = FinAbHom(pi0_tp, h1_a, imgs)

    # H^1 A -> H^1 T
    imgs = []
    for g in h1_a.gens:
        w = a_ambient([int(x) for x in g])
        grp, coords = torus_log_class(src_lat, w, 1)
        imgs.append(h1_t.coords([int(x) for x in grp.rep(coords)]))
    m4 = FinAbHom(h1_a, h1_t, imgs)

    m5 = induced_hom(jmap, 1, source_group=h1_t, target_group=h1_tp)

    names = ["pi0(T)", "pi0(T')", "H1(A)", "H1(T)"]
    maps = [m1, m2, m3, m4, m5]
    return [JointReport(names[i], exact_at(maps[i], maps[i + 1]))
            for i in range(4)]


def _module_coords(basis, den, w):
    bt = transpose(basis) if basis else []
    target = [Fraction(x) * den for x in w]
    if any(f.denominator != 1 for f in target):
        raise ValidationError("element is not a point of the kernel")
    c = solve([[int(x) for x in r] for r in bt], [int(f) for f in target])
    if c is None:
        raise ValidationError("element is not a point of the kernel")
    return c


@dataclass(frozen=True)
class CentralSeq:
    """1 -> A -> G2 -> G3 -> 1 with a central quasi-torus kernel."""

    g2: object
    g3: object
    j_mat: tuple

    def __post_init__(self):
        object.__setattr__(self, "j_mat",
                           tuple(tuple(r) for r in self.j_mat))
        ensure_valid(self.g2)
        ensure_valid(self.g3)
        j = self.rows()
        if mat_mul(j, self.g2.tau_cochar()) != \
                mat_mul(self.g3.tau_cochar(), j):
            raise ValidationError("cocharacter map is not equivariant")
        # the kernel is central iff j identifies the coroot systems, and
        # the inline lift in central_delta needs the match indexwise
        img = [mat_vec(j, cr) for cr in self.g2.brd.coroot_rows()]
        if [tuple(v) for v in img] != list(self.g3.brd.simple_coroots):
            raise ValidationError("kernel is not central (coroots move)")

    def rows(self):
        return [list(r) for r in self.j_mat]


def central_delta(seq, coords):
    """delta^0 : H^0 pi_1(G3) -> H^1(A) for a central kernel.

    The class is computed through the morphism of complexes
    (Q3^v -> X3^v) -> (X2^v -> X3^v) and returned as coordinates in the
    hypercohomology group of the kernel's cocharacter complex, i.e. the
    group produced by quasitorus_tate(A, 1).
    """
    from .torus import QuasiTorusSpec, TorusSpec
    from .glattice import GammaLattice
    g2, g3 = seq.g2, seq.g3
    h03 = tate(fundamental_group(g3), 0)
    nu3 = [int(x) for x in h03.rep(coords)]
    tau3 = g3.tau_cochar()
    nu3s = [-a - b for a, b in zip(mat_vec(tau3, nu3), nu3)]
    # write nu3s over the g3 coroots and lift to the matching g2 coroots
    c = solve(transpose(g3.brd.coroot_rows()), nu3s)
    if c is None:
        raise ValidationError("class is not a zero-cocycle of pi_1")
    ups = [0] * g2.brd.rank
    for coeff, cr in zip(c, g2.brd.coroot_rows()):
        for t in range(g2.brd.rank):
            ups[t] += coeff * cr[t]
    # hypercocycle (ups, nu3) in Z^0(X2^v -> X3^v)
    a_spec = QuasiTorusSpec(
        TorusSpec(GammaLattice(g2.brd.rank,
                               [[-x for x in r] for r in g2.tau_cochar()])),
        TorusSpec(GammaLattice(g3.brd.rank,
                               [[-x for x in r] for r in tau3])),
        seq.rows())
    from .torus import quasitorus_tate
    group, _ = quasitorus_tate(a_spec, 1)
    return a_spec, group, group.coords(ups + nu3)
