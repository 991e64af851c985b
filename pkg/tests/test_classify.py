import pytest
from mpmath import mp

from chardeg.classify import (
    CASE_SIX_DIM,
    ClassifyError,
    GroupDescriptor,
    TwoComponentInput,
    inequality_ledger,
    predicted_cut_vertex_graph,
    primitive_prime_divisor,
    semidirect_degrees,
    stabilizer_degree_multiplicities,
    three_vertices_classify,
    two_component_check,
)
from chardeg.graphs import analyze, degree_set, graph_from_degrees
from chardeg.groups import sl2_group, subgroup_from_gens
from chardeg.modules import irreducible_catalog, natural_restricted
from chardeg.numtheory import prime_divisors, prime_power_split, prime_powers

mp.dps = 80


# -- independent high-precision oracle for the covering inequalities -----------


def _oracle_holds(family, qp, ell, q):
    half = mp.mpf(qp * (qp + 1)) / 2
    if family == "dim-l-q":
        dim, c1, c2e, c2 = ell * qp, half, ell, qp + 1
    elif family == "dim-l-q-plus-1":
        dim, c1, c2e, c2 = ell * (qp + 1), half, 2 * ell, qp + 1
    elif family == "dim-l-q-plus-1-half":
        dim, c1, c2e, c2 = ell * (qp + 1) // 2, half, ell, qp + 1
    elif family == "dim-l-q-minus-1":
        dim, c1, c2e, c2 = ell * (qp - 1), mp.mpf(qp * qp), 0, 0
    else:
        dim, c1, c2e, c2 = ell * (qp - 1) // 2, mp.mpf(qp * qp), 0, 0
    lhs = mp.mpf(q) ** dim - 1
    rhs = c1 * (mp.mpf(q) ** (mp.mpf(dim) / 2) - 1)
    if c2:
        rhs += c2 * (mp.mpf(q) ** c2e - 1)
    return lhs > rhs


def _oracle_ledger(family, q_max, ell_max=8):
    odd_only = family.endswith("half")
    out = []
    for qp in prime_powers(4, q_max, odd_only=odd_only):
        t, _ = prime_power_split(qp)
        if odd_only and t == 2:
            continue
        for q in sorted(prime_divisors(qp * qp - 1)):
            for ell in range(1, ell_max + 1):
                if not _oracle_holds(family, qp, ell, q):
                    out.append((q, qp, ell))
    return sorted(out)


COVERING_FAMILIES = {
    "dim-l-q": 16,
    "dim-l-q-plus-1": 15,
    "dim-l-q-plus-1-half": 42,
    "dim-l-q-minus-1": 18,
    "dim-l-q-minus-1-half": 46,
}


@pytest.mark.parametrize("family,q_max", sorted(COVERING_FAMILIES.items()))
def test_ledger_matches_high_precision_oracle(family, q_max):
    assert inequality_ledger(family, q_max=q_max) == _oracle_ledger(family, q_max)


def test_ledger_printed_lists_verbatim():
    assert inequality_ledger("dim-l-q") == [
        (2, 5, 1), (2, 7, 1), (2, 9, 1), (2, 11, 1), (3, 4, 1),
    ]
    assert inequality_ledger("dim-l-q-plus-1") == [
        (2, 5, 1), (2, 7, 1), (2, 9, 1), (2, 11, 1),
    ]
    assert inequality_ledger("f2-order3") == [
        (5, 2), (5, 4), (5, 6), (7, 3), (7, 6), (7, 8), (11, 5), (11, 10),
        (13, 6), (17, 8), (19, 9), (23, 11), (25, 12),
    ]
    assert inequality_ledger("f2-order5") == [(9, 4), (9, 8), (11, 5), (19, 9)]
    assert inequality_ledger("f2-ell2") == [(5, 4, 2), (5, 8, 2), (7, 6, 2)]


def test_ledger_checked_triples_fail_raw_scan():
    f3 = set(inequality_ledger("dim-l-q-plus-1-half"))
    assert {(3, 11, 1), (3, 13, 1), (2, 5, 2), (2, 7, 2), (2, 9, 2), (2, 11, 2)} <= f3
    f4 = set(inequality_ledger("dim-l-q-minus-1"))
    assert {(2, 5, 1), (2, 11, 1), (3, 5, 1), (3, 7, 1), (5, 4, 1), (2, 5, 2)} <= f4


def test_ledger_stability_beyond_thresholds():
    for family, qm in (("dim-l-q", 68), ("dim-l-q-plus-1", 64), ("dim-l-q-minus-1", 76)):
        assert inequality_ledger(family) == inequality_ledger(family, q_max=qm)
    assert inequality_ledger("f2-order3") == inequality_ledger("f2-order3", q_max=200)


def test_ledger_unknown_family():
    with pytest.raises(ClassifyError):
        inequality_ledger("nope")


# -- split extension degrees ------------------------------------------------------


def test_semidirect_natural_sl2_5():
    ds = semidirect_degrees(natural_restricted(5))
    assert ds.as_sorted() == [1, 2, 3, 4, 5, 6, 24]


def test_semidirect_rejects_fixed_vectors():
    from chardeg.modules import trivial_module

    g = sl2_group(5)
    with pytest.raises(ClassifyError):
        semidirect_degrees(trivial_module(g, 3))


def test_semidirect_six_dim_case():
    from chardeg.modules import endo_dim, is_irreducible

    g = sl2_group(13)
    cat = irreducible_catalog(g, 3, 12)
    m = cat.select(dim=6, faithful=True)[0].module
    assert is_irreducible(m)
    assert endo_dim(m) == 1
    ds = semidirect_degrees(m)
    assert ds.as_sorted() == [1, 6, 7, 12, 13, 14, 728]
    a = analyze(graph_from_degrees(ds))
    assert a.articulation_points == (2,)
    assert a.complete_vertices == (2,)
    # the base degree set stays inside the extension's degree set
    assert set(degree_set("sl2", 13).as_sorted()) <= ds.degrees


def test_stabilizer_degree_table():
    g4 = sl2_group(4)
    cat = irreducible_catalog(g4, 2, 8)
    omega = cat.select(dim=4, ell=1)[0].module
    from chardeg.orbits import orbit_decompose, stabilizer

    rep = orbit_decompose(omega)
    seen = {}
    for o in rep.orbits:
        if o.rep_key == 0:
            continue
        sub = stabilizer(omega, o.rep)
        seen[o.stab_order] = stabilizer_degree_multiplicities(sub)
    # S3 and A4 from the exceptional module
    assert seen[6] == {1: 2, 2: 1}
    assert seen[12] == {1: 3, 3: 1}


def test_stabilizer_degree_frobenius():
    import numpy as np

    g7 = sl2_group(7)
    # 7:3 Frobenius subgroup: a transvection and an order-3 torus element
    unip = g7.index_of(np.array([[1, 1], [0, 1]], dtype=np.int64))
    orders = g7.element_orders
    diag3 = next(
        i
        for i in range(g7.order)
        if orders[i] == 3 and g7.elems[i][0, 1] == 0 and g7.elems[i][1, 0] == 0
    )
    frob = subgroup_from_gens(g7, [unip, diag3])
    assert frob.order == 21
    mult = stabilizer_degree_multiplicities(frob)
    assert mult == {1: 3, 3: 2}
    assert sum(m * d * d for d, m in mult.items()) == 21


# -- descriptor predictions -------------------------------------------------------


def test_predicted_graph_case_c():
    rep = predicted_cut_vertex_graph(GroupDescriptor("c", 13, 2, vgk=frozenset({2})))
    assert rep.ok
    assert rep.descriptor.case_tag == CASE_SIX_DIM
    assert rep.analysis.articulation_points == (2,)
    assert rep.graph.neighbors(13) == {2, 7}


def test_predicted_graph_case_b():
    rep = predicted_cut_vertex_graph(GroupDescriptor("b", 7, 5, vgk=frozenset({5})))
    assert rep.ok
    assert rep.graph.neighbors(7) == {5}


def test_predicted_graph_rejects_bad_descriptors():
    with pytest.raises(ClassifyError):
        predicted_cut_vertex_graph(GroupDescriptor("a", 7, 7, vgk=frozenset({7})))
    with pytest.raises(ClassifyError):
        predicted_cut_vertex_graph(GroupDescriptor("a", 7, 5, vgk=frozenset({3})))
    with pytest.raises(ClassifyError):
        predicted_cut_vertex_graph(GroupDescriptor("c", 11, 2, vgk=frozenset({2})))


def test_two_component_check_psl27():
    res = two_component_check(TwoComponentInput(7, "psl2", True, True), degree_set("psl2", 7))
    assert res.satisfied
    assert res.predicted_components == ((7,), (2, 3))


def test_two_component_check_failing_condition():
    res = two_component_check(TwoComponentInput(7, "psl2", True, False))
    assert not res.satisfied
    assert res.failed_conditions == ("G/K is abelian",)


def test_two_component_cross_check_catches_mismatch():
    with pytest.raises(ClassifyError):
        two_component_check(
            TwoComponentInput(7, "psl2", True, True),
            degree_set("psl2", 13),
        )


# -- scans ------------------------------------------------------------------------


def test_three_vertices():
    scan = three_vertices_classify(10**4)
    assert scan.three_prime_list == (5, 7, 9, 17)
    for q in scan.pi_empty_list:
        t, a = prime_power_split(q)
        assert a == 1 or q == 9
    assert 7 in scan.pi_empty_list  # pi(8) - {2} is empty


def test_primitive_prime_divisors():
    assert primitive_prime_divisor(3, 6) == 7
    assert primitive_prime_divisor(2, 6) is None
    assert primitive_prime_divisor(7, 2) is None  # 7 + 1 = 2^3
    assert primitive_prime_divisor(5, 2) == 3
    assert primitive_prime_divisor(2, 10) == 11
    with pytest.raises(OverflowError):
        primitive_prime_divisor(2, 64)
