"""State-sum invariants of link diagrams and crossing diagnostics.

Group values are written additively: a crossing contributes
``sign * φ(a, b)`` where ``b`` labels the over-arc and ``a`` the under-arc
that the relation ``a -> a*b`` starts from.
"""

from collections import Counter
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .cocycles import chi, is_cocycle
from .diagram import colorings, crossing_relation, epsilon_signs, is_proper
from .errors import NotACocycle, ParseError, WrongComponentCount
from .quandle import trivial

SIGN_MODES = ("checkerboard", "writhe")


@dataclass(frozen=True)
class GroupRingElt:
    """Formal sum ``Σ counts[g] · g`` over ``Z/m``, or over ``Z`` when ``m = 0``.

    For ``m >= 2`` ``counts`` is a length-``m`` tuple; over ``Z`` it is a
    sorted tuple of ``(value, count)`` pairs.
    """

    modulus: int
    counts: tuple

    @classmethod
    def from_values(cls, values, modulus):
        c = Counter(values)
        if modulus:
            return cls(modulus, tuple(c.get(g, 0) for g in range(modulus)))
        return cls(0, tuple(sorted(c.items())))

    def items(self):
        if self.modulus:
            return [(g, k) for g, k in enumerate(self.counts) if k]
        return list(self.counts)

    @property
    def total(self):
        return sum(k for _, k in self.items())

    def is_trivial(self):
        """All mass at the identity."""
        return all(g == 0 for g, _ in self.items())

    def to_dict(self):
        if self.modulus:
            return {"modulus": self.modulus, "counts": list(self.counts)}
        return {"modulus": 0, "counts": [[g, k] for g, k in self.counts]}

    def __str__(self):
        return " + ".join(f"{k}[{g}]" for g, k in self.items()) or "0"


def _monomial(e):
    parts = []
    for i, x in enumerate(e):
        if x:
            parts.append(f"t{i + 1}" + (f"^{x}" if x > 1 else ""))
    return "".join(parts)


# pair of components carried by each variable t1, t2, t3 (0-based components)
PAIRS = ((0, 1), (1, 2), (2, 0))


def _pair_index(i, j):
    for k, p in enumerate(PAIRS):
        if {i, j} == set(p):
            return k
    return None


@dataclass(frozen=True)
class MultiVarInvariant:
    """Element of ``Z[t1,t2,t3]/(t_i^4 - 1)``: ``coeffs[e1, e2, e3]``."""

    coeffs: np.ndarray

    def __eq__(self, other):
        return isinstance(other, MultiVarInvariant) and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    @classmethod
    def from_terms(cls, terms):
        c = np.zeros((4, 4, 4), dtype=np.int64)
        for e, k in terms.items():
            c[tuple(x % 4 for x in e)] += k
        return cls(c)

    @property
    def total(self):
        return int(self.coeffs.sum())

    def terms(self):
        return {tuple(int(x) for x in e): int(self.coeffs[e]) for e in zip(*np.nonzero(self.coeffs))}

    def relabel(self, perm):
        """Rename component ``i`` as ``perm[i]``."""
        out = {}
        for e, k in self.terms().items():
            new = [0, 0, 0]
            for idx, (i, j) in enumerate(PAIRS):
                new[_pair_index(perm[i], perm[j])] = e[idx]
            out[tuple(new)] = k
        return MultiVarInvariant.from_terms(out)

    def symmetrized(self):
        """The six relabelled versions, in the order of ``itertools.permutations(range(3))``."""
        return [self.relabel(p) for p in permutations(range(3))]

    def canonical(self):
        """Relabelling-independent form: the smallest of the six versions."""
        return min(self.symmetrized(), key=lambda m: m.coeffs.tolist())

    def __str__(self):
        terms = sorted(self.terms().items(), key=lambda t: (sum(t[0]), [-x for x in t[0]]))
        out = []
        for e, k in terms:
            mono = _monomial(e)
            out.append(str(k) if not mono else (mono if k == 1 else f"{k}{mono}"))
        return " + ".join(out) or "0"

    def to_dict(self):
        return {
            "coeffs": self.coeffs.tolist(),
            "polynomial": str(self),
            "symmetrized": [str(m) for m in self.symmetrized()],
        }


# -- basic counts -----------------------------------------------------------------

def col_count(d, q):
    return len(colorings(d, q))


def _signs(d, mode):
    if mode == "checkerboard":
        return epsilon_signs(d)
    if mode == "writhe":
        return [d.writhe(c) for c in range(len(d.crossings))]
    raise ParseError(f"sign mode must be one of {SIGN_MODES}, not {mode!r}")


def crossing_weights(d, phi, labels, signs):
    """Per-crossing contributions ``sign * φ(source label, over label)``."""
    out = []
    for c, s in enumerate(signs):
        src, over, _ = crossing_relation(d, c)
        out.append(s * phi(labels[src], labels[over]))
    return out


def phi_invariant(d, q, phi, sign_mode="checkerboard"):
    """``Φ_φ``: the multiset of total weights over all colourings.

    Checkerboard mode needs a positive 2-cocycle, writhe mode a classical one.
    """
    signs = _signs(d, sign_mode)
    if phi.quandle != q:
        raise ParseError("cocycle is defined on a different quandle")
    if phi.degree != 2:
        raise ParseError("state-sums need a 2-cochain")
    if not is_cocycle(phi, "+" if sign_mode == "checkerboard" else "-"):
        kind = "positive" if sign_mode == "checkerboard" else "classical"
        raise NotACocycle(f"cochain is not a {kind} 2-cocycle; the state-sum would not be invariant")
    m = phi.modulus
    values = []
    for labels in colorings(d, q):
        w = sum(crossing_weights(d, phi, labels, signs))
        values.append(w % m if m else w)
    return GroupRingElt.from_values(values, m)


def refined_phi():
    """``χ(0,1) + χ(1,0)`` over ``Z/4`` on the trivial quandle of order 2."""
    return chi(trivial(2), (0, 1), (1, 0), modulus=4)


def refined_invariant(d, phi=None):
    """``Φ̃_φ`` of a 3-component link over the trivial quandle of order 2.

    The exponent of ``t_k`` collects the weights of crossings between the
    two components of ``PAIRS[k]``; self-crossings are left out.
    """
    if len(d.components) != 3:
        raise WrongComponentCount(f"refined invariant needs 3 components, diagram has {len(d.components)}")
    phi = phi or refined_phi()
    q = trivial(2)
    if phi.quandle != q or phi.modulus != 4 or phi.degree != 2:
        raise ParseError("refined invariant takes a 2-cochain over Z/4 on the trivial quandle of order 2")
    if not is_cocycle(phi, "+"):
        raise NotACocycle("cochain is not a positive 2-cocycle")
    signs = epsilon_signs(d)
    terms = Counter()
    for labels in colorings(d, q):
        e = [0, 0, 0]
        for c, w in enumerate(crossing_weights(d, phi, labels, signs)):
            under, over = d.crossing_components(c)
            k = _pair_index(under, over)
            if k is not None and under != over:
                e[k] += w
        terms[tuple(x % 4 for x in e)] += 1
    return MultiVarInvariant.from_terms(terms)


# -- crossing diagnostics ---------------------------------------------------------------

def trivially_colored(d, q):
    """Crossings whose three arcs share one colour in every proper colouring."""
    cols = colorings(d, q)
    out = set()
    for c in range(len(d.crossings)):
        arcs = d.crossing_arcs(c)
        if all(len({labels[a] for a in arcs}) == 1 for labels in cols):
            out.add(c)
    return out


def mod3_criterion(d):
    """Sum of checkerboard signs; when it is prime to 3 some crossing is
    trivially coloured by every Fox 3-colouring."""
    if len(d.components) != 1:
        raise WrongComponentCount(f"mod-3 criterion is for knots, diagram has {len(d.components)} components")
    total = sum(epsilon_signs(d))
    return {"sign_sum": total, "predicts_trivial": total % 3 != 0}


def proper_link_test(d):
    """Whether ``Σ_{j≠i} lk(K_i, K_j)`` is even for every component ``i``.

    Evaluated as a restricted state-sum: colour one component 0 and the rest
    1 in the trivial quandle of order 2 and sum ``ε · χ(0,1)`` over ``Z/2``.
    """
    m = len(d.components)
    if m < 2:
        raise WrongComponentCount("proper-link test needs at least 2 components")
    q = trivial(2)
    phi = chi(q, (0, 1), modulus=2)
    signs = epsilon_signs(d)
    for i in range(m):
        labels = [0 if d.component_of[arc[0]] == i else 1 for arc in d.arcs]
        assert is_proper(d, q, labels)
        if sum(crossing_weights(d, phi, labels, signs)) % 2:
            return False
    return True

