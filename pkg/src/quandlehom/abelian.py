"""Finitely generated abelian groups in invariant-factor form."""

from dataclasses import dataclass
from math import gcd, prod

from .snf import normalize_diagonal


@dataclass(frozen=True)
class FinAbGroup:
    """``Z^rank + Z/d1 + Z/d2 + ...`` with ``d1 | d2 | ...`` and every ``di >= 2``.

    >>> FinAbGroup.from_factors(0, [2, 3, 1])
    FinAbGroup(rank=0, torsion=(6,))
    >>> print(FinAbGroup(1, (2, 2)))
    Z + Z2^2
    """

    rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        t = tuple(d for d in normalize_diagonal(self.torsion) if d != 1)
        object.__setattr__(self, "torsion", t)

    @classmethod
    def from_factors(cls, rank, factors):
        """Cyclic summands ``Z/f`` for each ``f`` in ``factors``; ``0`` means ``Z``."""
        factors = list(factors)
        return cls(rank + factors.count(0), tuple(f for f in factors if f))

    @classmethod
    def cyclic(cls, m):
        return cls.from_factors(0, [m])

    def __add__(self, other):
        return FinAbGroup(self.rank + other.rank, self.torsion + other.torsion)

    @property
    def order(self):
        """Number of elements, or ``None`` for infinite groups."""
        return None if self.rank else prod(self.torsion)

    def is_trivial(self):
        return self.rank == 0 and not self.torsion

    # functors with a cyclic second argument Z/m (m = 0 means Z)
    def tensor(self, m):
        if m == 0:
            return self
        return FinAbGroup.from_factors(0, [m] * self.rank + [gcd(d, m) for d in self.torsion])

    def tor(self, m):
        if m == 0:
            return FinAbGroup()
        return FinAbGroup.from_factors(0, [gcd(d, m) for d in self.torsion])

    def hom(self, m):
        if m == 0:
            return FinAbGroup(self.rank)
        return self.tensor(m)

    def ext(self, m):
        if m == 0:
            return FinAbGroup(0, self.torsion)
        return FinAbGroup.from_factors(0, [gcd(d, m) for d in self.torsion])

    def to_dict(self):
        return {"rank": self.rank, "torsion": list(self.torsion)}

    def __str__(self):
        if self.is_trivial():
            return "0"
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        run = []
        for d in self.torsion:
            if run and run[-1][0] == d:
                run[-1][1] += 1
            else:
                run.append([d, 1])
        parts += [f"Z{d}" if k == 1 else f"Z{d}^{k}" for d, k in run]
        return " + ".join(parts)


def uct_homology(h_n, h_prev, m):
    """``H_n(C; Z/m)`` predicted from integral ``H_n`` and ``H_{n-1}``."""
    return h_n.tensor(m) + h_prev.tor(m)


def uct_cohomology(h_n, h_prev, m):
    """``H^n(C; Z/m)`` predicted from integral ``H_n`` and ``H_{n-1}``."""
    return h_prev.ext(m) + h_n.hom(m)
