"""Component group of the real points, via the labeling stabilizer.

H^0 of the algebraic fundamental group acts on the affine diagram through
the adjoint quotient; the component group of the real Lie group is the
stabilizer of the base labeling q under that action.  Only the
cocharacter-side witness of each component is computed, not a group
element realizing it.
"""

from dataclasses import dataclass
from fractions import Fraction

from .gmod import FinAbGroup, tate
from .intlin import hnf, identity, lattice_sum
from .kac import build_diagram, class_shift
from .rootdata import ensure_valid, fundamental_group, lattice_chain


@dataclass(frozen=True)
class Pi0Result:
    """The component group with one cocharacter witness per generator."""

    group: FinAbGroup
    witnesses: tuple

    def order(self):
        return self.group.order()


def _action_table(spec):
    """For each class of H^0(pi_1), its induced labeling permutation."""
    ensure_valid(spec)
    diagram = build_diagram(spec)
    h0 = tate(fundamental_group(spec), 0)
    table = []
    for coords in h0.elements():
        nu = h0.rep(coords)
        perm = diagram.vertex_permutation(class_shift(spec, nu))
        table.append((tuple(coords), tuple(int(x) for x in nu), perm))
    return h0, diagram, table


def pi0(spec):
    """pi_0 of the real points as the stabilizer of q in H^0(pi_1)."""
    h0, diagram, table = _action_table(spec)
    q = tuple(spec.q)
    stab = [(coords, nu) for coords, nu, perm in table
            if diagram.apply_permutation(perm, q) == q]
    stab_coords = {c for c, _ in stab}
    for ca, _ in stab:
        for cb, _ in stab:
            if h0.add(ca, cb) not in stab_coords:
                raise AssertionError("stabilizer failed to be a subgroup")
    k = len(h0.invariants)
    rows = [list(c) for c, _ in stab if any(c)]
    group = FinAbGroup.quotient(lattice_sum(rows, h0.relation_rows()),
                                h0.relation_rows(), k)
    witnesses = []
    by_coords = dict(stab)
    for g in group.gens:
        c = h0.reduce(tuple(int(x) for x in g))
        witnesses.append(by_coords[c])
    return Pi0Result(group, tuple(witnesses))


def pi0_kernel_map(spec):
    """The labeling-level data of the map into H^1 of the cover.

    Returns (h0, images) where images maps each class of H^0(pi_1) to the
    labeling it sends q to; the kernel of the map is the fiber of q, which
    must agree with pi0.
    """
    h0, diagram, table = _action_table(spec)
    q = tuple(spec.q)
    images = {coords: diagram.apply_permutation(perm, q)
              for coords, _, perm in table}
    kernel = sorted(c for c, lab in images.items() if lab == q)
    stab_order = pi0(spec).order()
    if len(kernel) != stab_order:
        raise AssertionError("kernel size disagrees with the stabilizer")
    return h0, images
