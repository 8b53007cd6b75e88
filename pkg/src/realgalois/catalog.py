"""Built-in group specifications used by the CLI and the test oracles.

Contains the classical simply connected and adjoint simple types up to
rank 8 (compact form base labelings), and the even-orthogonal examples
G(s, q) and G(c, q): the spin group of D_l times a one-dimensional split
or compact torus, glued along the half-spin central element.
"""

from fractions import Fraction

from .gmod import ValidationError
from .intlin import (
    RatLattice, hnf, identity, inv_unimodular, mat_mul, mat_vec, solve_frac,
    transpose,
)
from .rootdata import BasedRootDatum, GroupSpec
from .torus import TorusSpec


# ---------------------------------------------------------------------------
# Cartan matrices, convention a[i][j] = <alpha_i, alpha_j^vee>
# ---------------------------------------------------------------------------

def cartan_matrix(family, rank):
    family = family.upper()
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def chain(i, j):
        a[i][j] = a[j][i] = -1

    if family == "A":
        for i in range(rank - 1):
            chain(i, i + 1)
    elif family == "B":
        if rank < 2:
            raise ValidationError("B needs rank >= 2")
        for i in range(rank - 2):
            chain(i, i + 1)
        a[rank - 2][rank - 1] = -2
        a[rank - 1][rank - 2] = -1
    elif family == "C":
        if rank < 2:
            raise ValidationError("C needs rank >= 2")
        for i in range(rank - 2):
            chain(i, i + 1)
        a[rank - 2][rank - 1] = -1
        a[rank - 1][rank - 2] = -2
    elif family == "D":
        if rank < 3:
            raise ValidationError("D needs rank >= 3")
        for i in range(rank - 2):
            chain(i, i + 1)
        chain(rank - 3, rank - 1)
    elif family == "E":
        if rank not in (6, 7, 8):
            raise ValidationError("E needs rank 6, 7 or 8")
        # Bourbaki numbering: node 2 hangs off node 4
        for i, j in [(0, 2), (2, 3), (3, 4), (4, 5)]:
            chain(i, j)
        chain(1, 3)
        if rank >= 7:
            chain(5, 6)
        if rank == 8:
            chain(6, 7)
    elif family == "F":
        if rank != 4:
            raise ValidationError("F needs rank 4")
        chain(0, 1)
        a[1][2] = -2
        a[2][1] = -1
        chain(2, 3)
    elif family == "G":
        if rank != 2:
            raise ValidationError("G needs rank 2")
        a[0][1] = -3
        a[1][0] = -1
    else:
        raise ValidationError("unknown family %r" % family)
    return a


def simply_connected_datum(family, rank):
    """X = weight lattice: roots are Cartan rows, coroots the dual basis."""
    a = cartan_matrix(family, rank)
    return BasedRootDatum(rank, a, identity(rank))


def adjoint_datum(family, rank):
    """X = root lattice: roots are the basis, coroots the Cartan columns."""
    a = cartan_matrix(family, rank)
    return BasedRootDatum(rank, identity(rank), transpose(a))


def compact_labeling(spec_like_diagram):
    """All weight at the affine vertices: the compact base point."""
    labels = []
    for comp in spec_like_diagram.components:
        m0 = comp.vertices[0].mark
        labels.extend([2 // m0] + [0] * (comp.nverts() - 1))
    return tuple(labels)


def compact_simple(family, rank, adjoint=False):
    """The compact (simply connected or adjoint) simple group."""
    datum = simply_connected_datum(family, rank) if not adjoint \
        else adjoint_datum(family, rank)
    spec0 = GroupSpec(datum, identity(rank), (2,) + (0,) * rank,
                      name="%s%d%s-compact" % (family, rank,
                                               "ad" if adjoint else ""))
    from . import kac
    diagram = kac.build_diagram(spec0)
    q = compact_labeling(diagram)
    return GroupSpec(datum, identity(rank), q, name=spec0.name)


def su2():
    return compact_simple("A", 1)


# ---------------------------------------------------------------------------
# change of basis into an explicit character lattice
# ---------------------------------------------------------------------------

def datum_from_lattice(basis_rows, simple_roots, simple_coroots, tau_ambient):
    """Based root datum in the coordinates of an explicit character lattice.

    `basis_rows` span the character lattice inside an ambient Q^n (each
    row is a basis vector; must be a Z-basis).  Roots are given as ambient
    vectors, coroots as ambient vectors of the dual space; tau_ambient
    acts on the ambient character space.  Returns (datum, tau_matrix).
    """
    n = len(basis_rows)
    bt = transpose([list(r) for r in basis_rows])
    root_coords = []
    for r in simple_roots:
        c = solve_frac(bt, [Fraction(x) for x in r])
        if c is None or any(f.denominator != 1 for f in c):
            raise ValidationError("root outside the character lattice")
        root_coords.append([int(f) for f in c])
    coroot_coords = []
    for cr in simple_coroots:
        d = [sum(Fraction(b) * Fraction(x) for b, x in zip(row, cr))
             for row in basis_rows]
        if any(f.denominator != 1 for f in d):
            raise ValidationError("coroot outside the dual lattice")
        coroot_coords.append([int(f) for f in d])
    # tau on coordinates, column by column on basis vectors
    cols = []
    for bvec in basis_rows:
        img = mat_vec([list(r) for r in tau_ambient],
                      [Fraction(x) for x in bvec])
        c = solve_frac(bt, img)
        if c is None or any(f.denominator != 1 for f in c):
            raise ValidationError("tau does not preserve the lattice")
        cols.append([int(f) for f in c])
    tau_mat = transpose(cols)
    datum = BasedRootDatum(n, root_coords, coroot_coords)
    return datum, tau_mat


# ---------------------------------------------------------------------------
# the even-orthogonal times torus examples
# ---------------------------------------------------------------------------

def _spin_torus_ambient(l):
    """Ambient data for Spin(2l) x 1-dim torus glued along (a, -1)."""
    n = l + 1  # coordinates eps_1..eps_l, eps
    roots = []
    for i in range(l - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        roots.append(v)
    v = [0] * n
    v[l - 2], v[l - 1] = 1, 1
    roots.append(v)
    coroots = [r[:] for r in roots]
    # character lattice: eps_i +- eps, omega_{l-1} +- (l/2) eps
    omega = [Fraction(1, 2)] * (l - 1) + [Fraction(-1, 2), Fraction(0)]
    gens = []
    for i in range(l):
        for s in (1, -1):
            v = [Fraction(0)] * n
            v[i] = Fraction(1)
            v[-1] = Fraction(s)
            gens.append(v)
    for s in (1, -1):
        v = omega[:]
        v[-1] = Fraction(s * l, 2)
        gens.append(v)
    x_lat = RatLattice.from_rows(gens, n)
    return n, roots, coroots, x_lat


def spin_torus_spec(l, split, q_sector=None, q_labels=None, name=""):
    """G(s, q) for split=True, G(c, q) for split=False.

    `q_sector` picks the base labeling by its (r, r') parities; a raw
    labeling can be supplied instead via `q_labels`.
    """
    if l < 6 or l % 2:
        raise ValidationError("these examples need even l > 4")
    n, roots, coroots, x_lat = _spin_torus_ambient(l)
    basis = [[Fraction(x, x_lat.den) for x in row] for row in x_lat.rows]
    tau_amb = identity(n)
    if split:
        tau_amb[n - 1][n - 1] = -1
    datum, tau = datum_from_lattice(basis, roots, coroots, tau_amb)
    if q_labels is None:
        q_labels = sector_labeling(l, q_sector)
    if not name:
        kind = "s" if split else "c"
        name = "G%sq-l%d-r%d-rp%d" % (kind, l, q_sector[0], q_sector[1])
    return GroupSpec(datum, tau, q_labels, name=name)


def sector_labeling(l, sector):
    """A base labeling of D_l^(1) with the requested (r, r') parities."""
    r, rp = sector
    q = [0] * (l + 1)
    if (r, rp) == (0, 0):
        q[0] = 2
    elif (r, rp) == (0, 1):
        q[0] = 1
        q[l - 1] = 1
    elif (r, rp) == (1, 0):
        q[3] = 1
    elif (r, rp) == (1, 1):
        q[0] = 1
        q[l] = 1
    else:
        raise ValidationError("sector must be a pair of parities")
    return tuple(q)


def sector_of(l, labels):
    """(r(p), r'(p)) parities of a D_l^(1) labeling (flat order)."""
    r = sum(labels[i] for i in range(1, l - 2, 2)) + labels[l]
    rp = labels[l - 1] + labels[l]
    return (r % 2, rp % 2)


def m_sector_of(chain, m_rep):
    """r''([m]): the parity 2<eps, m> mod 2 for the spin-torus examples.

    The basis character eps of the central torus is the generator of the
    rank-one lattice Lambda in the chain's coordinates.
    """
    if chain.lam.rank() != 1:
        raise ValidationError("spec does not have a one-dimensional center")
    eps = [Fraction(x, chain.lam.den) for x in chain.lam.rows[0]]
    val = 2 * sum(a * Fraction(b) for a, b in zip(eps, m_rep))
    if val.denominator != 1:
        raise ValidationError("m representative is not half-integral")
    return int(val) % 2


# ---------------------------------------------------------------------------
# torus entries and the catalog table
# ---------------------------------------------------------------------------

def product_spec(a, b, name=""):
    """Direct product of two GroupSpecs (diagram components concatenate)."""
    na, nb = a.brd.rank, b.brd.rank
    roots = [list(r) + [0] * nb for r in a.brd.simple_roots] + \
            [[0] * na + list(r) for r in b.brd.simple_roots]
    coroots = [list(r) + [0] * nb for r in a.brd.simple_coroots] + \
              [[0] * na + list(r) for r in b.brd.simple_coroots]
    tau = [list(r) + [0] * nb for r in a.tau] + \
          [[0] * na + list(r) for r in b.tau]
    datum = BasedRootDatum(na + nb, roots, coroots)
    return GroupSpec(datum, tau, tuple(a.q) + tuple(b.q),
                     name=name or (a.name + "x" + b.name))


def torus_as_group(involution_on_cochar, name=""):
    """A torus as a rootless GroupSpec; tau is -involution transposed."""
    n = len(involution_on_cochar)
    tau = [[-involution_on_cochar[j][i] for j in range(n)] for i in range(n)]
    return GroupSpec(BasedRootDatum(n, [], []), tau, (), name=name)


def torus_entries():
    return {
        "torus-split": TorusSpec.split(),
        "torus-compact": TorusSpec.compact(),
        "torus-weil": TorusSpec.weil_restriction(),
    }


COMPACT_SIMPLE_TYPES = (
    [("A", r) for r in range(1, 9)]
    + [("B", r) for r in range(2, 9)]
    + [("C", r) for r in range(3, 9)]
    + [("D", r) for r in range(4, 9)]
    + [("G", 2), ("F", 4), ("E", 6), ("E", 7), ("E", 8)]
)


def group_entries():
    out = {"su2": su2()}
    for fam, rank in COMPACT_SIMPLE_TYPES:
        out["%s%d-compact" % (fam.lower(), rank)] = compact_simple(fam, rank)
    for l in (6, 8, 12):
        for r in (0, 1):
            for rp in (0, 1):
                spec = spin_torus_spec(l, True, (r, rp))
                out["gsq-l%d-r%d-rp%d" % (l, r, rp)] = spec
        for r in (0, 1):
            spec = spin_torus_spec(l, False, (r, 0))
            out["gcq-l%d-r%d" % (l, r)] = spec
    return out


def all_entries():
    out = {}
    out.update(torus_entries())
    out.update(group_entries())
    return out
