from fractions import Fraction

import pytest

from conftest import random_involution, random_unimodular, rng_for
from realgalois.glattice import GammaLattice
from realgalois.gmod import ValidationError, tate
from realgalois.torus import (
    QuasiTorusSpec, TorusSpec, exact_seq_check, is_torus_cocycle,
    pi0_torus, quasitorus_tate, torus_log_class, torus_tate,
)
from realgalois.intlin import identity, inv_unimodular, mat_mul, mat_vec


def test_indecomposable_tori():
    split, compact, weil = (TorusSpec.split(), TorusSpec.compact(),
                            TorusSpec.weil_restriction())
    assert torus_tate(split, 1)[0].is_trivial()
    assert torus_tate(compact, 1)[0].invariants == (2,)
    assert torus_tate(weil, 1)[0].is_trivial()
    assert pi0_torus(split).invariants == (2,)
    assert pi0_torus(compact).is_trivial()
    assert pi0_torus(weil).is_trivial()
    # the compact H^1 generator evaluates to -1 in the circle
    _, reps = torus_tate(compact, 1)
    assert reps[0].value == (1,)


def test_quasitorus_examples():
    mu2s = QuasiTorusSpec(TorusSpec.split(), TorusSpec.split(), [[2]])
    g, reps = quasitorus_tate(mu2s, 1)
    assert g.invariants == (2,)
    assert reps[0].value_log == (Fraction(1, 2),)
    mu2c = QuasiTorusSpec(TorusSpec.compact(), TorusSpec.compact(), [[2]])
    assert quasitorus_tate(mu2c, 1)[0].invariants == (2,)
    ident = QuasiTorusSpec(TorusSpec.split(), TorusSpec.split(), [[1]])
    for k in range(-1, 3):
        assert quasitorus_tate(ident, k)[0].is_trivial()


def test_quasitorus_validation():
    with pytest.raises(ValidationError):
        QuasiTorusSpec(TorusSpec.weil_restriction(), TorusSpec.split(),
                       [[1, 0]])  # not equivariant
    with pytest.raises(ValidationError):
        QuasiTorusSpec(TorusSpec.split(), TorusSpec.split(), [[0]])


def test_emitted_cocycles_satisfy_identities():
    rng = rng_for("qt-cocycles")
    count = 0
    while count < 60:
        n = rng.randrange(1, 4)
        s = random_involution(n, rng)
        lat = GammaLattice(n, s)
        # equivariant full-rank map: d * unimodular commuting with s
        d = rng.choice([1, 2, 3, 4])
        spec = QuasiTorusSpec(TorusSpec(lat), TorusSpec(lat),
                              [[d if i == j else 0 for j in range(n)]
                               for i in range(n)])
        for k in (0, 1):
            g, reps = quasitorus_tate(spec, k)
            for r in reps:
                assert is_torus_cocycle(s, r.value_log, k)
                jw = mat_vec(spec.matrix_rows(), list(r.value_log))
                assert all(Fraction(x).denominator == 1 for x in jw)
                count += 1
        count += 1


def test_finite_module_route_agrees():
    rng = rng_for("qt-module")
    done = 0
    while done < 25:
        n = rng.randrange(1, 4)
        s = random_involution(n, rng)
        d = rng.choice([2, 3, 4, 6])
        spec = QuasiTorusSpec(TorusSpec(GammaLattice(n, s)),
                              TorusSpec(GammaLattice(n, s)),
                              [[d if i == j else 0 for j in range(n)]
                               for i in range(n)])
        mod, _, _ = spec.as_finite_module()
        for k in (0, 1):
            assert quasitorus_tate(spec, k)[0].invariants == \
                tate(mod, k).invariants
        done += 1


def test_exact_seq_check_passes():
    cases = [
        QuasiTorusSpec(TorusSpec.split(), TorusSpec.split(), [[2]]),
        QuasiTorusSpec(TorusSpec.compact(), TorusSpec.compact(), [[2]]),
        QuasiTorusSpec(TorusSpec.split(), TorusSpec.split(), [[1]]),
        QuasiTorusSpec(TorusSpec.weil_restriction(), TorusSpec.split(),
                       [[1, 1]]),
        QuasiTorusSpec(TorusSpec.weil_restriction(), TorusSpec.compact(),
                       [[1, -1]]),
    ]
    for spec in cases:
        assert all(c.ok for c in exact_seq_check(spec))


def test_presentation_independence():
    rng = rng_for("presentations")
    # mu_2 inside the split torus, re-presented three ways
    base = QuasiTorusSpec(TorusSpec.split(), TorusSpec.split(), [[2]])
    base_inv = [quasitorus_tate(base, k)[0].invariants for k in (0, 1, 2)]
    # add a split exact factor
    two = QuasiTorusSpec(
        TorusSpec(GammaLattice(2, identity(2))),
        TorusSpec(GammaLattice(2, identity(2))), [[2, 0], [0, 1]])
    assert [quasitorus_tate(two, k)[0].invariants
            for k in (0, 1, 2)] == base_inv
    # conjugate source and target by unimodular equivariant isos
    for _ in range(10):
        n = 2
        g = random_unimodular(n, rng)
        s = mat_mul(mat_mul(g, identity(n)), inv_unimodular(g))
        spec = QuasiTorusSpec(
            TorusSpec(GammaLattice(n, s)), TorusSpec(GammaLattice(n, s)),
            mat_mul(mat_mul(g, [[2, 0], [0, 1]]), inv_unimodular(g)))
        assert [quasitorus_tate(spec, k)[0].invariants
                for k in (0, 1, 2)] == base_inv


def test_pi0_exponent_two():
    rng = rng_for("pi0-torus")
    for _ in range(60):
        n = rng.randrange(1, 6)
        spec = TorusSpec(GammaLattice(n, random_involution(n, rng)))
        g = pi0_torus(spec)
        assert all(d == 2 for d in g.invariants)


def test_torus_log_class():
    compact = GammaLattice.sign(1)
    grp, coords = torus_log_class(compact, [Fraction(1, 2)], 1)
    assert coords == (1,)
    grp, coords = torus_log_class(compact, [Fraction(0)], 1)
    assert coords == (0,)
    # any unit-circle element is a 1-cocycle of the split torus, and its
    # class is trivial since H^1 vanishes
    grp, coords = torus_log_class(GammaLattice.trivial(1), [Fraction(1, 3)], 1)
    assert coords == ()
    # but a nonreal element is not a 0-cocycle
    with pytest.raises(ValidationError):
        torus_log_class(GammaLattice.trivial(1), [Fraction(1, 3)], 0)
