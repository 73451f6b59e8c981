"""Rack, degenerate and quandle chain complexes with ``∂± = d1 ± d2``.

Chains of degree ``n`` are integer combinations of ``n``-tuples of quandle
elements. Three tuple bases are used:

* ``R``: every tuple, in lexicographic order;
* ``D``: tuples with two equal neighbours (empty below degree 2);
* ``Q``: the complementary, non-degenerate tuples. The quotient
  ``C^R / C^D`` is realised on this basis by dropping degenerate terms.

Coefficients are ``0`` for the integers or ``m >= 2`` for ``Z/m``.
"""

from functools import lru_cache
from itertools import product
from math import gcd

import numpy as np

from .abelian import FinAbGroup
from .errors import ComplexBroken
from .snf import diagonal, invariant_factors, smith_normal_form

THEORIES = ("R", "D", "Q")


def _check_sign(sign):
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', not {sign!r}")
    return 1 if sign == "+" else -1


def is_degenerate(t):
    return any(t[i] == t[i + 1] for i in range(len(t) - 1))


@lru_cache(maxsize=None)
def basis(q, n, theory="Q"):
    """Tuple basis of ``C^theory_n`` as a tuple of tuples."""
    if n < 0:
        return ()
    tuples = product(range(q.order), repeat=n)
    if theory == "R":
        return tuple(tuples)
    if theory == "D":
        return tuple(t for t in tuples if is_degenerate(t))
    if theory == "Q":
        return tuple(t for t in tuples if not is_degenerate(t))
    raise ValueError(f"unknown theory {theory!r}")


@lru_cache(maxsize=None)
def _index(q, n, theory):
    return {t: i for i, t in enumerate(basis(q, n, theory))}


def face_terms(q, t):
    """Yield ``(sign, face, kind)`` for the terms of ``d1 t`` (kind 1) and ``d2 t`` (kind 2)."""
    n = len(t)
    if n <= 1:
        return
    for i in range(n):
        s = -1 if i % 2 == 0 else 1  # (-1)^(i+1) with 0-based i
        yield s, t[:i] + t[i + 1:], 1
        ai = t[i]
        yield s, tuple(q.op(a, ai) for a in t[:i]) + t[i + 1:], 2


@lru_cache(maxsize=None)
def face_matrices(q, n, theory="R"):
    """Matrices of ``d1`` and ``d2`` from degree ``n`` to ``n - 1``.

    For theory ``Q`` terms landing on degenerate tuples are dropped; for
    ``D`` a term leaving the degenerate span raises :class:`ComplexBroken`.
    """
    cols = basis(q, n, theory)
    rows = _index(q, n - 1, theory)
    d1 = np.zeros((len(rows), len(cols)), dtype=np.int64)
    d2 = np.zeros_like(d1)
    for j, t in enumerate(cols):
        acc = {}
        for s, face, kind in face_terms(q, t):
            acc[face, kind] = acc.get((face, kind), 0) + s
        for (face, kind), s in acc.items():
            i = rows.get(face)
            if i is None:
                # terms may cancel inside one column; only survivors count
                if theory == "D" and s:
                    raise ComplexBroken("D-closure", n)
                continue
            (d1 if kind == 1 else d2)[i, j] += s
    d1.flags.writeable = False
    d2.flags.writeable = False
    return d1, d2


def boundary_matrix(q, n, sign="+", theory="Q"):
    """Matrix of ``∂_n^±: C_n -> C_{n-1}`` in the tuple bases (rows index degree ``n-1``).

    >>> from quandlehom.quandle import trivial
    >>> boundary_matrix(trivial(2), 2, "+", "Q").tolist()
    [[2, -2], [-2, 2]]
    """
    e = _check_sign(sign)
    d1, d2 = face_matrices(q, n, theory)
    return d1 + e * d2


def boundary_of(q, t, sign="+", theory="Q"):
    """``∂±`` of a single tuple, as a dict ``{tuple: coefficient}``."""
    e = _check_sign(sign)
    out = {}
    for s, face, kind in face_terms(q, tuple(t)):
        if theory == "Q" and is_degenerate(face):
            continue
        out[face] = out.get(face, 0) + (s if kind == 1 else e * s)
    return {k: v for k, v in out.items() if v}


# -- homology of a finite free complex --------------------------------------

def _cycles_mod(out_map, dim, m):
    """Lattice ``{x : out_map x ≡ 0 (mod m)}`` as ``(V, Vinv, scale)``.

    The lattice is spanned by the columns of ``V @ diag(scale)``.
    """
    out_map = np.asarray(out_map)
    if out_map.shape[0] == 0 or not out_map.any():
        eye = np.eye(dim, dtype=object)
        return eye, eye, [1] * dim
    _, D, V, Vi = smith_normal_form(out_map, inverse=True)
    scale = [1] * dim
    for i, d in enumerate(diagonal(D)):
        if d:
            scale[i] = m // gcd(d, m) if m else 0
    return V, Vi, scale


def homology_of_complex(out_map, in_map, dim, m=0):
    """``ker(out_map) / im(in_map)`` on ``Z^dim`` (``m = 0``) or on ``(Z/m)^dim``.

    Over ``Z/m`` the cycle lattice ``{x : out_map x ≡ 0 mod m}`` is found
    from the Smith form of ``out_map``; the quotient by ``im(in_map) + m Z^dim``
    is then read off a second Smith form.
    """
    if dim == 0:
        return FinAbGroup()
    in_map = np.asarray(in_map, dtype=object).reshape(dim, -1)
    if m == 0:
        r_out = len(invariant_factors(out_map)) if np.asarray(out_map).size else 0
        f = invariant_factors(in_map) if in_map.size else []
        return FinAbGroup.from_factors(dim - r_out - len(f), f)
    V, Vi, scale = _cycles_mod(out_map, dim, m)
    coords = Vi.dot(in_map) if in_map.size else np.zeros((dim, 0), dtype=object)
    rel = np.zeros((dim, coords.shape[1] + dim), dtype=object)
    for i, s in enumerate(scale):
        for j in range(coords.shape[1]):
            x = coords[i, j]
            if x % s:
                raise ComplexBroken("boundaries inside cycles", None)
            rel[i, j] = x // s
        rel[i, coords.shape[1] + i] = m // s
    f = invariant_factors(rel)
    return FinAbGroup.from_factors(0, f)


def homology(q, n, sign="+", theory="Q", coeff=0):
    """``H_n`` of ``C^{theory ±}(q)`` with coefficients ``Z`` (0) or ``Z/coeff``.

    >>> from quandlehom.quandle import dihedral
    >>> print(homology(dihedral(5), 1, "+", "Q"))
    Z + Z5
    """
    out_map = boundary_matrix(q, n, sign, theory)
    in_map = boundary_matrix(q, n + 1, sign, theory)
    return homology_of_complex(out_map, in_map, len(basis(q, n, theory)), coeff)


def cohomology(q, n, sign="+", coeff=0, theory="Q"):
    """``H^n`` of ``Hom(C^{theory ±}(q), G)``; ``δ^n`` is the transpose of ``∂_{n+1}``.

    >>> from quandlehom.quandle import dihedral
    >>> print(cohomology(dihedral(3), 2, "+"))
    Z3
    """
    out_map = boundary_matrix(q, n + 1, sign, theory).T
    in_map = boundary_matrix(q, n, sign, theory).T
    return homology_of_complex(out_map, in_map, len(basis(q, n, theory)), coeff)


def h1_presentation(q):
    """Abelian group on the elements with relations ``a*b = 2b - a``.

    Built straight from the relations, without the chain complex.
    """
    n = q.order
    rels = []
    for a in range(n):
        for b in range(n):
            r = [0] * n
            r[q.op(a, b)] += 1
            r[b] -= 2
            r[a] += 1
            rels.append(r)
    f = invariant_factors(np.array(rels, dtype=object).T)
    return FinAbGroup.from_factors(n - len(f), f)


# -- splitting map -------------------------------------------------------------

def alpha_terms(t):
    """Expand ``(a1, a2 - a1, ..., an - a_{n-1})`` into signed tuples."""
    terms = {(t[:1]): 1} if t else {(): 1}
    for i in range(1, len(t)):
        nxt = {}
        for u, c in terms.items():
            for v, s in ((t[i], 1), (t[i - 1], -1)):
                key = u + (v,)
                nxt[key] = nxt.get(key, 0) + s * c
        terms = {k: v for k, v in nxt.items() if v}
    return terms


@lru_cache(maxsize=None)
def alpha_map(q, n):
    """Matrix of ``α_n`` on ``C^R_n`` (square, in the ``R`` basis)."""
    idx = _index(q, n, "R")
    A = np.zeros((len(idx), len(idx)), dtype=np.int64)
    for j, t in enumerate(basis(q, n, "R")):
        for u, c in alpha_terms(t).items():
            A[idx[u], j] += c
    A.flags.writeable = False
    return A


# -- sanity checks ---------------------------------------------------------------

def verify_chain_axioms(q, n_max=4):
    """Check ``d1² = d2² = d1d2 + d2d1 = 0`` and closure of the degenerate span.

    Returns a dict mapping each identity to the list of degrees checked;
    raises :class:`ComplexBroken` on the first failure.
    """
    report = {"d1d1": [], "d2d2": [], "d1d2+d2d1": [], "d+d+": [], "d-d-": [], "D-closure": []}
    dmask_cache = {}

    def dmask(n):
        if n not in dmask_cache:
            dmask_cache[n] = np.array([is_degenerate(t) for t in basis(q, n, "R")], dtype=bool)
        return dmask_cache[n]

    for n in range(2, n_max + 1):
        a1, a2 = face_matrices(q, n, "R")
        b1, b2 = face_matrices(q, n - 1, "R")
        checks = {
            "d1d1": b1 @ a1,
            "d2d2": b2 @ a2,
            "d1d2+d2d1": b1 @ a2 + b2 @ a1,
            "d+d+": (b1 + b2) @ (a1 + a2),
            "d-d-": (b1 - b2) @ (a1 - a2),
        }
        for name, prod_ in checks.items():
            if prod_.any():
                raise ComplexBroken(name, n)
            report[name].append(n)
        # columns of degenerate tuples must have no entries on non-degenerate rows
        src, dst = dmask(n), ~dmask(n - 1)
        for d in (a1, a2):
            if d[np.ix_(dst, src)].any():
                raise ComplexBroken("D-closure", n)
        report["D-closure"].append(n)
    return report
