import numpy as np
import pytest

from chardeg.groups import sl2_group
from chardeg.modules import (
    irreducible_catalog,
    natural_restricted,
    perm_module,
    trivial_module,
)
from chardeg.orbits import (
    covering_classify,
    has_regular_orbit,
    orbit_decompose,
    pack_vector,
    stabilizer,
    stabilizer_prime_escape,
    sylow_centralizer_condition,
    unpack_key,
)


@pytest.fixture(scope="module")
def g4():
    return sl2_group(4)


@pytest.fixture(scope="module")
def g5():
    return sl2_group(5)


@pytest.fixture(scope="module")
def cat42(g4):
    return irreducible_catalog(g4, 2, 8)


def test_pack_unpack_round_trip():
    for key in (0, 1, 37, 80):
        assert pack_vector(unpack_key(key, 3, 4), 3) == key


def test_zero_vector_singleton_orbit(g5):
    nat = natural_restricted(5, g5)
    rep = orbit_decompose(nat)
    assert rep.orbits[0].rep_key == 0
    assert rep.orbits[0].size == 1


def test_stabilizer_of_zero_is_whole_group(g5):
    nat = natural_restricted(5, g5)
    assert stabilizer(nat, [0, 0]).order == g5.order


def test_natural_module_orbit_and_stabilizer(g5):
    nat = natural_restricted(5, g5)
    rep = orbit_decompose(nat)
    assert rep.sizes() == [1, 24]
    assert stabilizer(nat, [1, 0]).order == 5


def test_orbit_stabilizer_identity(g4, cat42):
    for e in cat42.entries:
        rep = orbit_decompose(e.module)
        for o in rep.orbits:
            assert o.size * o.stab_order == g4.order
        assert sum(o.size for o in rep.orbits) == 2**e.dim


def test_flags_constant_on_orbits(g4, cat42):
    """The covering condition is conjugation-invariant, so recomputing a
    flag on a non-representative member must agree with the orbit flag."""
    from chardeg.groups import contains_normal_full_sylow
    from chardeg.kernels import orbit_sweep

    omega = cat42.select(dim=4, ell=1)[0].module
    rep = covering_classify(omega, r=3)
    labels, reps, _sizes = orbit_sweep(np.stack(omega.gen_images), 2, 4)
    rng = np.random.default_rng(6)
    for key in rng.integers(1, 16, size=8):
        oid = int(labels[int(key)])
        orb = rep.orbits[oid]
        stab = stabilizer(omega, unpack_key(int(key), 2, 4))
        assert contains_normal_full_sylow(g4, stab, 3) == orb.flags["minus"]
        assert contains_normal_full_sylow(g4, stab, 2) == orb.flags["char"]


def test_covering_disjointness(g4, cat42):
    """Nonzero flag sets are pairwise disjoint on fixed-point-free modules."""
    omega = cat42.select(dim=4, ell=1)[0].module
    rep = covering_classify(omega, r=3)
    for o in rep.orbits:
        if o.rep_key == 0:
            continue
        assert sum(1 for v in o.flags.values() if v) <= 1


def test_covering_requires_odd_divisors(g4, cat42):
    omega = cat42.select(dim=4, ell=1)[0].module
    with pytest.raises(Exception):
        covering_classify(omega, r=5)  # 5 does not divide q - 1 = 3
    with pytest.raises(Exception):
        covering_classify(omega, s=3)  # 3 does not divide q + 1 = 5


def test_sylow_centralizer_condition_examples(g4):
    nat = natural_restricted(4, g4)
    assert sylow_centralizer_condition(nat, 2)
    assert not sylow_centralizer_condition(nat, 3)
    g7 = sl2_group(7)
    three = irreducible_catalog(g7, 2, 8).select(dim=3)[0].module
    assert not sylow_centralizer_condition(three, 3)
    assert not sylow_centralizer_condition(three, 7)


def test_sylow_centralizer_condition_natural_q8():
    # the 2a-dimensional natural module in characteristic 2, a = 3
    m = natural_restricted(8)
    assert m.dim == 6
    assert sylow_centralizer_condition(m, 2)
    assert not sylow_centralizer_condition(m, 7)


def test_prime_escape_examples(g5):
    c52 = irreducible_catalog(g5, 2, 8)
    pair54 = c52.select(dim=4, ell=1)[0].module
    assert not stabilizer_prime_escape(pair54, 3)  # orbit sizes {5, 10}
    g7 = sl2_group(7)
    pair73 = irreducible_catalog(g7, 2, 8).select(dim=3)[0].module
    assert not stabilizer_prime_escape(pair73, 3)  # single orbit of size 7
    g9 = sl2_group(9)
    pair94 = irreducible_catalog(g9, 2, 20).select(dim=4)[0].module
    assert stabilizer_prime_escape(pair94, 5)


def test_regular_orbit_examples(g5, g4, cat42):
    from chardeg.fields import field_make
    from chardeg.groups import GroupTable
    from chardeg.linalg import identity_matrix
    from chardeg.modules import GModule

    # trivial group: every orbit is regular
    triv_group = GroupTable(field_make(5), np.stack([identity_matrix(2)]))
    m = GModule(triv_group, field_make(3), [identity_matrix(2)], check=False)
    assert has_regular_orbit(m)
    # nontrivial group acting trivially: never regular
    assert not has_regular_orbit(trivial_module(g5, 3))
    # full enumeration oracle for the crossed module of order 3^4
    m34 = irreducible_catalog(g4, 3, 8).select(dim=4, ell=1)[0].module
    sizes = orbit_decompose(m34).sizes()
    assert has_regular_orbit(m34) == (g4.order in sizes)
    assert not has_regular_orbit(m34)


def test_perm_module_orbits_match_action(g5):
    m = perm_module(g5, "projective-points", 3)
    rep = orbit_decompose(m)
    # the permutation module has basis-vector orbits of length 6 (transitive)
    assert 6 in rep.sizes()
