import numpy as np
import pytest

from quandlehom.abelian import FinAbGroup, uct_cohomology, uct_homology
from quandlehom.chains import (
    alpha_map, alpha_terms, basis, boundary_matrix, boundary_of, cohomology, face_matrices,
    h1_presentation, homology, verify_chain_axioms,
)
from quandlehom.errors import ComplexBroken
from quandlehom.quandle import builtins, dihedral, s4, trivial

from oracles import naive_boundary, naive_homology

SMALL = builtins(4)


def test_bases_partition_r():
    q = dihedral(3)
    for n in range(4):
        r, d, qq = basis(q, n, "R"), basis(q, n, "D"), basis(q, n, "Q")
        assert sorted(r) == list(r)
        assert set(d) | set(qq) == set(r) and not set(d) & set(qq)
    assert basis(q, 1, "D") == () and basis(q, 0, "Q") == ((),)


@pytest.mark.parametrize("q", SMALL, ids=lambda q: q.name)
@pytest.mark.parametrize("theory", "RDQ")
@pytest.mark.parametrize("sign", "+-")
def test_boundary_matches_face_formula(q, theory, sign):
    for n in range(1, 4):
        M, cols = naive_boundary(q.table, n, sign, theory)
        B = boundary_matrix(q, n, sign, theory)
        assert np.array_equal(np.array(M, dtype=np.int64).reshape(len(M), cols), B)


def test_degree_two_column():
    q = s4()
    M = boundary_matrix(q, 2, "+", "Q")
    idx = {t: i for i, t in enumerate(basis(q, 1, "Q"))}
    for j, (a, b) in enumerate(basis(q, 2, "Q")):
        col = [0] * 4
        col[b] -= 2
        col[a] += 1
        col[q.op(a, b)] += 1
        assert [M[idx[(x,)], j] for x in range(4)] == col
    assert boundary_matrix(trivial(2), 2, "+", "Q").tolist() == [[2, -2], [-2, 2]]


def test_degenerate_examples():
    q = dihedral(5)
    a, b = 1, 3
    assert boundary_of(q, (a, a, b), "+", "D") == {(a, a): -1, (q.op(a, b),) * 2: -1}
    assert boundary_of(q, (a, b, b), "+", "D") == {(b, b): -2}


def test_low_degrees_are_zero():
    q = dihedral(3)
    assert not boundary_matrix(q, 1, "+", "Q").any()
    assert boundary_matrix(q, 0, "+", "Q").size == 0


@pytest.mark.parametrize("q", [dihedral(3), trivial(4), s4()], ids=lambda q: q.name)
def test_chain_axioms(q):
    rep = verify_chain_axioms(q, 4 if q.order < 4 else 3)
    assert all(rep[k] for k in rep)


def test_complex_broken_is_raised_for_bad_faces(monkeypatch):
    import quandlehom.chains as C
    q = dihedral(3)
    real = C.face_matrices.__wrapped__

    def broken(q, n, theory="R"):
        d1, d2 = real(q, n, theory)
        d1 = d1.copy()
        d1[0, 0] += 1
        return d1, d2

    monkeypatch.setattr(C, "face_matrices", broken)
    with pytest.raises(ComplexBroken):
        verify_chain_axioms(q, 3)


@pytest.mark.parametrize("q", SMALL, ids=lambda q: q.name)
def test_homology_against_naive(q):
    for theory in "RDQ":
        for sign in "+-":
            for n in (1, 2, 3):
                g = homology(q, n, sign, theory)
                rank, tors = naive_homology(q.table, n, sign, theory)
                assert g == FinAbGroup(rank, tuple(tors)), (theory, sign, n)


def test_known_homology_groups():
    assert homology(trivial(3), 1) == FinAbGroup(1, (2, 2))
    assert homology(dihedral(5), 1) == FinAbGroup(1, (5,))
    assert homology(dihedral(3), 2, "+", "D") == FinAbGroup(0, (2,))
    assert homology(trivial(2), 2) == FinAbGroup(0, (2,))


def test_known_cohomology_groups():
    assert cohomology(dihedral(3), 2, "+") == FinAbGroup(0, (3,))
    assert cohomology(dihedral(3), 2, "-").is_trivial()
    assert cohomology(trivial(2), 2, "+") == FinAbGroup(0, (2,))
    for n in range(1, 6):
        assert cohomology(trivial(n), 1, "+") == FinAbGroup(1)


@pytest.mark.parametrize("q", SMALL, ids=lambda q: q.name)
def test_h1_presentation(q):
    assert h1_presentation(q) == homology(q, 1)


@pytest.mark.parametrize("q", [dihedral(3), dihedral(4), trivial(2), s4()], ids=lambda q: q.name)
def test_mod_m_against_uct(q):
    for n in (1, 2):
        hz, hp = homology(q, n), homology(q, n - 1)
        for m in (2, 3, 4, 6):
            assert homology(q, n, "+", "Q", m) == uct_homology(hz, hp, m)
            assert cohomology(q, n, "+", m) == uct_cohomology(hz, hp, m)


def test_alpha_examples():
    assert alpha_terms((2,)) == {(2,): 1}
    assert alpha_terms((0, 1)) == {(0, 1): 1, (0, 0): -1}
    assert alpha_terms((1, 2, 2)) == {}
    q = dihedral(3)
    A = alpha_map(q, 2)
    R = basis(q, 2, "R")
    W = np.eye(len(R), dtype=np.int64) - A
    for j, (a1, a2) in enumerate(R):
        expected = np.zeros(len(R), dtype=np.int64)
        if a1 != a2:
            expected[R.index((a1, a1))] = 1
        else:
            expected[j] = 1
        assert (W[:, j] == expected).all()


@pytest.mark.parametrize("q", SMALL, ids=lambda q: q.name)
def test_w_projects_onto_degenerate_span(q):
    for n in (2, 3):
        R = basis(q, n, "R")
        W = np.eye(len(R), dtype=np.int64) - alpha_map(q, n)
        degenerate = np.array([any(t[i] == t[i + 1] for i in range(n - 1)) for t in R])
        assert not W[~degenerate].any()
        assert (W[:, degenerate] == np.eye(len(R), dtype=np.int64)[:, degenerate]).all()


def test_face_matrices_are_read_only():
    d1, _ = face_matrices(dihedral(3), 2, "R")
    with pytest.raises(ValueError):
        d1[0, 0] = 5
