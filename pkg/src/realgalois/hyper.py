"""Tate hypercohomology of short complexes of Gamma-modules.

A short complex is one equivariant map A1 -> A0.  Its degree-k differential
on A1 (+) A0 sends (a1, a0) to (-d^(k+1) a1, d^k a0 - boundary(a1)), and the
hypercohomology is again a kernel modulo an image, computed on the direct
sum presentation.
"""

from dataclasses import dataclass

from . import intlin
from .gmod import (
    FinAbGroup, FinAbHom, GammaMap, GammaModule, ValidationError,
    induced_hom, tate,
)
from .intlin import (
    hnf, identity, lattice_eq, lattice_sum, mat_vec, preimage_lattice,
    transpose, zeros,
)


@dataclass(frozen=True)
class ShortComplex:
    """An equivariant map a1 -> a0 of GammaModules."""

    boundary: GammaMap

    def __post_init__(self):
        if self.boundary.anti:
            raise ValidationError("boundary must be equivariant, not anti")

    @classmethod
    def of(cls, a1, a0, matrix_rows):
        return cls(GammaMap(a1, a0, matrix_rows))

    @property
    def a1(self):
        return self.boundary.source

    @property
    def a0(self):
        return self.boundary.target

    def sum_relations(self):
        n1, n0 = self.a1.n, self.a0.n
        rows = []
        for r in self.a1.relation_rows():
            rows.append(r + [0] * n0)
        for r in self.a0.relation_rows():
            rows.append([0] * n1 + r)
        return rows

    def differential(self, k):
        """Matrix of D^k on Z^(n1+n0)."""
        n1, n0 = self.a1.n, self.a0.n
        top = [[-x for x in row] + [0] * n0
               for row in self.a1.differential(k + 1)]
        bmat = self.boundary.matrix_rows()
        bot = [[-bmat[i][j] for j in range(n1)] + self.a0.differential(k)[i]
               for i in range(n0)]
        return top + bot

    def split(self, vec):
        return list(vec[:self.a1.n]), list(vec[self.a1.n:])

    def join(self, a1vec, a0vec):
        return list(a1vec) + list(a0vec)


def hyper(complex_, k):
    """Tate hypercohomology of the short complex in degree k."""
    n = complex_.a1.n + complex_.a0.n
    rel = complex_.sum_relations()
    z = preimage_lattice(complex_.differential(k), rel, ncols=n)
    b = lattice_sum(intlin.image_rows(complex_.differential(k - 1)), rel)
    return FinAbGroup.quotient(z, b, n)


def check_hypercocycle(complex_, a1vec, a0vec, k):
    vec = complex_.join(a1vec, a0vec)
    img = mat_vec(complex_.differential(k), vec)
    rel = hnf(complex_.sum_relations())
    return intlin.in_rowspan(img, rel)


def les_maps(complex_, k):
    """The three maps tying H^k(A0), the hypercohomology, and H^(k+1)(A1).

    Returns (lambda_, mu, del_) where lambda_ : H^k A0 -> H^k(A1->A0) sends
    [a0] to [0, a0], mu : H^k(A1->A0) -> H^(k+1) A1 projects, and
    del_ : H^(k+1) A1 -> H^(k+1) A0 is induced by the boundary.
    """
    n1 = complex_.a1.n
    h0 = tate(complex_.a0, k)
    hh = hyper(complex_, k)
    h1 = tate(complex_.a1, k + 1)
    lam = FinAbHom(h0, hh, [
        hh.coords([0] * n1 + [int(x) for x in g]) for g in h0.gens])
    mu = FinAbHom(hh, h1, [
        h1.coords([int(x) for x in g][:n1]) for g in hh.gens])
    del_ = induced_hom(complex_.boundary, k + 1,
                       source_group=h1, target_group=tate(complex_.a0, k + 1))
    return lam, mu, del_


def coker_module(complex_):
    """coker(boundary) as a GammaModule on the generators of a0."""
    a0 = complex_.a0
    rel = lattice_sum(intlin.image_rows(complex_.boundary.matrix_rows()),
                      a0.relation_rows())
    return GammaModule(a0.n, rel, a0.action_rows())


def ker_module(complex_):
    """ker(boundary) as a GammaModule, with its basis into a1 attached.

    Returns (module, basis_rows); basis_rows embeds module coordinates into
    the ambient of a1.
    """
    a1 = complex_.a1
    lat = preimage_lattice(complex_.boundary.matrix_rows(),
                           complex_.a0.relation_rows(), ncols=a1.n)
    basis = hnf(lat)
    return _sub_module(a1, basis), basis


def _sub_module(module, basis):
    """The subgroup spanned by `basis` as a module in its own coordinates."""
    r = len(basis)
    bt = transpose(basis) if basis else [[] for _ in range(module.n)]
    rel = []
    for row in module.relation_rows():
        c = intlin.solve(bt, row)
        if c is None:
            raise ValidationError("relations do not lie in the subgroup")
        rel.append(c)
    act = []
    for b in basis:
        c = intlin.solve(bt, module.gamma(b))
        if c is None:
            raise ValidationError("subgroup is not action-stable")
        act.append(c)
    return GammaModule(r, rel, transpose(act))


def quasi_inj_iso(complex_, k):
    """The iso H^k(A1 -> A0) -> H^k(coker) when the boundary is injective.

    Returns (hom, inverse); the inverse is built by lifting per the
    surjectivity construction, and both composites are checked.
    """
    a1, a0 = complex_.a1, complex_.a0
    ker_lat = preimage_lattice(complex_.boundary.matrix_rows(),
                               a0.relation_rows(), ncols=a1.n)
    if not lattice_eq(ker_lat, hnf(a1.relation_rows())):
        raise ValidationError("boundary is not injective")
    cok = coker_module(complex_)
    hh = hyper(complex_, k)
    hc = tate(cok, k)
    fwd = FinAbHom(hh, hc, [
        hc.coords([int(x) for x in g][a1.n:]) for g in hh.gens])
    bmat = complex_.boundary.matrix_rows()
    d0 = a0.differential(k)
    inv_images = []
    for g in hc.gens:
        a0vec = [int(x) for x in g]
        # d^k a0 = boundary(a1) mod relations of a0; solve for a1
        a1vec = _solve_mod(bmat, a0.relation_rows(), mat_vec(d0, a0vec))
        inv_images.append(hh.coords(complex_.join(a1vec, a0vec)))
    inv = FinAbHom(hc, hh, inv_images)
    if not fwd.is_iso():
        raise AssertionError("quasi-injection map failed to be an iso")
    for g, im in zip(hc.gens, inv.images):
        if fwd(im) != hc.coords([int(x) for x in g]):
            raise AssertionError("inverse section is wrong")
    return fwd, inv


def _solve_mod(mat, target_rel, vec):
    m = len(mat)
    relt = transpose(target_rel) if target_rel else [[] for _ in range(m)]
    stacked = [mat[i] + relt[i] for i in range(m)]
    sol = intlin.solve(stacked, vec)
    if sol is None:
        raise ValueError("no solution modulo relations")
    return sol[:len(mat[0])] if mat and mat[0] else []


@dataclass(frozen=True)
class ComplexMorphism:
    """A commuting square between two short complexes."""

    source: ShortComplex
    target: ShortComplex
    f1: GammaMap
    f0: GammaMap

    def __post_init__(self):
        if self.f1.source != self.source.a1 or self.f0.source != self.source.a0:
            raise ValidationError("component maps do not start at the source")
        if self.f1.target != self.target.a1 or self.f0.target != self.target.a0:
            raise ValidationError("component maps do not land in the target")
        lhs = intlin.mat_mul(self.f0.matrix_rows(),
                             self.source.boundary.matrix_rows())
        rhs = intlin.mat_mul(self.target.boundary.matrix_rows(),
                             self.f1.matrix_rows())
        relt = hnf(self.target.a0.relation_rows())
        for col in transpose([[a - b for a, b in zip(ra, rb)]
                              for ra, rb in zip(lhs, rhs)]):
            if not intlin.in_rowspan(list(col), relt):
                raise ValidationError("square does not commute")

    def sum_matrix(self):
        n1s, n0s = self.source.a1.n, self.source.a0.n
        rows = []
        for r in self.f1.matrix_rows():
            rows.append(list(r) + [0] * n0s)
        for r in self.f0.matrix_rows():
            rows.append([0] * n1s + list(r))
        return rows


def quasi_iso_check(morphism):
    """Decide quasi-isomorphism; return (flag, induced isos for k=0,1).

    The flag is True iff the induced maps on ker and coker of the
    boundaries are isomorphisms; the isos are None when the flag is False.
    """
    src, tgt = morphism.source, morphism.target
    # induced map on kernels
    kmod_s, kbasis_s = ker_module(src)
    kmod_t, kbasis_t = ker_module(tgt)
    kt = transpose(kbasis_t) if kbasis_t else [[] for _ in range(tgt.a1.n)]
    images = []
    ok = True
    for b in kbasis_s:
        c = intlin.solve(kt, morphism.f1(b))
        if c is None:
            ok = False
            break
        images.append(c)
    if ok:
        try:
            kmap = GammaMap(kmod_s, kmod_t, transpose(images)
                            if images else zeros(kmod_t.n, kmod_s.n))
        except ValidationError:
            ok = False
    if ok and not _module_iso(kmap):
        ok = False
    if ok:
        cok_s, cok_t = coker_module(src), coker_module(tgt)
        cmap = GammaMap(cok_s, cok_t, morphism.f0.matrix_rows())
        if not _module_iso(cmap):
            ok = False
    if not ok:
        return False, None
    isos = []
    for k in (0, 1):
        hs = hyper(src, k)
        ht = hyper(tgt, k)
        hom = FinAbHom(hs, ht, [
            ht.coords(mat_vec(morphism.sum_matrix(), [int(x) for x in g]))
            for g in hs.gens])
        if not hom.is_iso():
            raise AssertionError("quasi-isomorphism did not induce an iso")
        isos.append(hom)
    return True, tuple(isos)


@dataclass(frozen=True)
class ComplexSES:
    """A short exact sequence of short complexes, checked componentwise."""

    alpha: ComplexMorphism
    beta: ComplexMorphism

    def __post_init__(self):
        from .gmod import ShortExact
        if self.alpha.target != self.beta.source:
            raise ValidationError("morphisms do not compose")
        # componentwise exactness (raises if it fails)
        ShortExact(self.alpha.f1, self.beta.f1)
        ShortExact(self.alpha.f0, self.beta.f0)


def induced_on_hyper(morphism, k, source_group=None, target_group=None):
    """Hom on hypercohomology induced by a morphism of complexes."""
    src = source_group if source_group is not None \
        else hyper(morphism.source, k)
    tgt = target_group if target_group is not None \
        else hyper(morphism.target, k)
    mat = morphism.sum_matrix()
    images = [tgt.coords(mat_vec(mat, [int(x) for x in g])) for g in src.gens]
    return FinAbHom(src, tgt, images)


def hyper_connecting(ses, k):
    """delta^k : H^k(C-complex) -> H^(k+1)(A-complex), lift and differentiate."""
    a_cx, b_cx, c_cx = ses.alpha.source, ses.alpha.target, ses.beta.target
    hc = hyper(c_cx, k)
    ha = hyper(a_cx, k + 1)
    beta_mat = ses.beta.sum_matrix()
    alpha_mat = ses.alpha.sum_matrix()
    rel_b = b_cx.sum_relations()
    rel_c = c_cx.sum_relations()
    db = b_cx.differential(k)
    images = []
    for g in hc.gens:
        cvec = [int(x) for x in g]
        lift = _lift_sum(beta_mat, rel_c, cvec)
        avec = _lift_sum(alpha_mat, rel_b, mat_vec(db, lift))
        images.append(ha.coords(avec))
    return FinAbHom(hc, ha, images)


def _lift_sum(mat, target_rel, vec):
    m = len(mat)
    relt = transpose(target_rel) if target_rel else [[] for _ in range(m)]
    stacked = [list(mat[i]) + list(relt[i]) for i in range(m)]
    sol = intlin.solve(stacked, vec)
    if sol is None:
        raise ValueError("element cannot be lifted")
    return sol[:len(mat[0])]


def hyper_les_window(ses, k):
    """The five maps H^k(A..) -> H^k(B..) -> H^k(C..) -> H^(k+1)(A..) -> ...."""
    return [induced_on_hyper(ses.alpha, k),
            induced_on_hyper(ses.beta, k),
            hyper_connecting(ses, k),
            induced_on_hyper(ses.alpha, k + 1),
            induced_on_hyper(ses.beta, k + 1)]


def _module_iso(gmap):
    """Is the map an isomorphism of the underlying abelian groups?"""
    ker = preimage_lattice(gmap.matrix_rows(), gmap.target.relation_rows(),
                           ncols=gmap.source.n)
    if not lattice_eq(ker, hnf(gmap.source.relation_rows())):
        return False
    onto = lattice_sum(intlin.image_rows(gmap.matrix_rows()),
                       gmap.target.relation_rows())
    return lattice_eq(onto, identity(gmap.target.n))
