"""Quandle cochains: cocycle spaces, cocycle tests and coboundary solving.

A cochain of degree ``n`` assigns a coefficient to every non-degenerate
``n``-tuple and vanishes on degenerate ones. The coboundary is
``(δψ)(t) = ψ(∂± t)``.
"""

import json
from dataclasses import dataclass
from itertools import product
from math import gcd

import numpy as np

from .chains import _check_sign, basis, boundary_matrix, boundary_of, is_degenerate
from .errors import ParseError
from .snf import diagonal, smith_normal_form


@dataclass(frozen=True)
class Cochain:
    quandle: object
    degree: int
    modulus: int = 0
    values: tuple = ()  # sorted (tuple, value) pairs with nonzero value

    def __post_init__(self):
        vals = {}
        for t, v in dict(self.values).items():
            t = tuple(t)
            if len(t) != self.degree:
                raise ParseError(f"tuple {t} has wrong length for degree {self.degree}")
            if is_degenerate(t):
                if self._reduce(v):
                    raise ParseError(f"cochain must vanish on degenerate tuple {t}")
                continue
            if any(not 0 <= a < self.quandle.order for a in t):
                raise ParseError(f"tuple {t} has elements outside the quandle")
            v = self._reduce(v)
            if v:
                vals[t] = v
        object.__setattr__(self, "values", tuple(sorted(vals.items())))

    def _reduce(self, v):
        return int(v) % self.modulus if self.modulus else int(v)

    def __call__(self, *t):
        if len(t) == 1 and isinstance(t[0], tuple):
            t = t[0]
        return dict(self.values).get(tuple(t), 0)

    @classmethod
    def from_vector(cls, q, degree, vec, modulus=0):
        return cls(q, degree, modulus, tuple(zip(basis(q, degree, "Q"), (int(x) for x in vec))))

    def vector(self):
        vals = dict(self.values)
        return np.array([vals.get(t, 0) for t in basis(self.quandle, self.degree, "Q")], dtype=object)

    def __add__(self, other):
        vals = dict(self.values)
        for t, v in other.values:
            vals[t] = vals.get(t, 0) + v
        return Cochain(self.quandle, self.degree, self.modulus, tuple(vals.items()))

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        return Cochain(self.quandle, self.degree, self.modulus,
                       tuple((t, k * v) for t, v in self.values))

    def is_zero(self):
        return not self.values

    def to_dict(self):
        return {
            "degree": self.degree,
            "modulus": self.modulus,
            "entries": [{"tuple": list(t), "value": v} for t, v in self.values],
        }


def chi(q, *tuples, degree=None, modulus=0):
    """Sum of characteristic functions of the given tuples.

    >>> from quandlehom.quandle import dihedral
    >>> chi(dihedral(3), (0, 1), (1, 0)).values
    (((0, 1), 1), ((1, 0), 1))
    """
    if degree is None:
        degree = len(tuples[0])
    vals = {}
    for t in tuples:
        vals[tuple(t)] = vals.get(tuple(t), 0) + 1
    return Cochain(q, degree, modulus, tuple(vals.items()))


def coboundary(psi, sign="+"):
    """``δψ`` as a cochain one degree up."""
    q, n = psi.quandle, psi.degree
    vec = boundary_matrix(q, n + 1, sign, "Q").T.astype(object).dot(psi.vector())
    return Cochain.from_vector(q, n + 1, vec, psi.modulus)


def cocycle_condition(c, t, sign="+"):
    """Value of ``c(∂± t)`` for one ``(n+1)``-tuple, computed term by term."""
    return c._reduce(sum(v * c(face) for face, v in boundary_of(c.quandle, t, sign, "R").items()))


def is_cocycle(c, sign="+"):
    """True iff ``c(∂± t) = 0`` for every ``(n+1)``-tuple ``t`` (degenerate ones included).

    For degree 2 and sign ``+`` this is the condition
    ``-2φ(b,c) + φ(a,c) + φ(a*b,c) - φ(a,b) - φ(a*c,b*c) = 0``.
    """
    _check_sign(sign)
    n = c.quandle.order
    return all(
        cocycle_condition(c, t, sign) == 0 for t in product(range(n), repeat=c.degree + 1)
    )


def _hermite_rows(rows, modulus=0):
    """Row-style Hermite normal form of an integer (or ``Z/m``) lattice basis."""
    rows = [list(map(int, r)) for r in rows]
    if modulus:
        ncols = len(rows[0]) if rows else 0
        rows = [[x % modulus for x in r] for r in rows]
        # the lattice mod m contains m Z^ncols
        rows += [[modulus * (i == j) for j in range(ncols)] for i in range(ncols)]
    out = []
    col = 0
    ncols = len(rows[0]) if rows else 0
    while rows and col < ncols:
        nz = [r for r in rows if r[col]]
        if not nz:
            col += 1
            continue
        while len([r for r in rows if r[col]]) > 1:
            rows.sort(key=lambda r: (r[col] == 0, abs(r[col])))
            p = rows[0]
            rows = [p] + [
                [a - (r[col] // p[col]) * b for a, b in zip(r, p)] if r[col] else r
                for r in rows[1:]
            ]
        rows.sort(key=lambda r: (r[col] == 0, abs(r[col])))
        p = rows.pop(0)
        if p[col] < 0:
            p = [-x for x in p]
        for i, r in enumerate(out):
            k = r[col] // p[col]
            if k:
                out[i] = [a - k * b for a, b in zip(r, p)]
        out.append(p)
        rows = [r for r in rows if any(r)]
        col += 1
    if modulus:
        out = [[x % modulus for x in r] for r in out]
        out = [r for r in out if any(r)]
    return out


def cocycle_space(q, n, sign="+", coeff=0):
    """Generators of the positive (or classical) ``n``-cocycles.

    Over ``Z`` this is a lattice basis of ``ker δ^n`` in Hermite normal form.
    Over ``Z/m`` the generators span ``ker δ^n`` as a ``Z/m`` module; for
    prime ``m`` they form a basis.
    """
    delta = boundary_matrix(q, n + 1, sign, "Q").T
    dim = len(basis(q, n, "Q"))
    if delta.shape[0] == 0 or not delta.any():
        gens = np.eye(dim, dtype=object)
    else:
        _, D, V, _ = smith_normal_form(delta, inverse=True)
        d = diagonal(D) + [0] * dim
        cols = []
        for i in range(dim):
            if d[i] == 0:
                cols.append(V[:, i])
            elif coeff:
                s = coeff // gcd(d[i], coeff)
                if s != coeff:
                    cols.append(s * V[:, i])
        gens = np.array(cols, dtype=object).T if cols else np.zeros((dim, 0), dtype=object)
    rows = _hermite_rows(gens.T.tolist(), coeff)
    return [Cochain.from_vector(q, n, r, coeff) for r in rows]


def is_coboundary(c, sign="+"):
    """A ``ψ`` with ``δψ = c``, or ``None`` when ``c`` is not a coboundary.

    Solved exactly over ``Z`` or ``Z/m`` through the Smith form of ``δ``.
    """
    q, n, m = c.quandle, c.degree, c.modulus
    A = boundary_matrix(q, n, sign, "Q").T  # δ^{n-1}
    rows, cols = A.shape
    target = c.vector()
    if cols == 0:
        return Cochain(q, n - 1, m) if c.is_zero() else None
    U, D, V = smith_normal_form(A)
    w = U.dot(target)
    d = diagonal(D)
    y = [0] * cols
    for i in range(rows):
        di = d[i] if i < len(d) else 0
        wi = int(w[i])
        if di == 0:
            if (wi % m if m else wi) != 0:
                return None
            continue
        if m == 0:
            if wi % di:
                return None
            y[i] = wi // di
        else:
            g = gcd(di, m)
            if wi % g:
                return None
            mg = m // g
            y[i] = (wi // g) * pow(di // g, -1, mg) % mg if mg > 1 else 0
    psi = Cochain.from_vector(q, n - 1, V.dot(np.array(y, dtype=object)), m)
    assert coboundary(psi, sign) == c
    return psi


# -- file format ---------------------------------------------------------------

def from_dict(d, q):
    try:
        degree = int(d["degree"])
        modulus = int(d.get("modulus", 0))
        entries = d.get("entries", [])
        vals = {}
        for e in entries:
            t = tuple(int(x) for x in e["tuple"])
            if is_degenerate(t):
                raise ParseError(f"degenerate tuple {t} in cochain file")
            vals[t] = vals.get(t, 0) + int(e["value"])
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"malformed cochain: {e}") from None
    if modulus < 0 or modulus == 1:
        raise ParseError("modulus must be 0 or at least 2")
    return Cochain(q, degree, modulus, tuple(vals.items()))


def load(path, q):
    with open(path) as f:
        try:
            return from_dict(json.load(f), q)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e}") from None


def dumps(c):
    return json.dumps(c.to_dict())
