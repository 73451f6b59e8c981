"""Finite quandles given by their operation tables.

Elements are the integers ``0..n-1`` and ``table[i][j]`` is ``i * j``.

>>> q = dihedral(3)
>>> q.table
((0, 2, 1), (2, 1, 0), (1, 0, 2))
>>> q.op(0, 1), q.inv(2, 1)
(2, 0)
"""

import json
from dataclasses import dataclass, field
from math import gcd

from .errors import AxiomViolation, NotAUnit, ParseError


@dataclass(frozen=True)
class Quandle:
    table: tuple
    name: str = field(default=None, compare=False)

    @property
    def order(self):
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def op(self, a, b):
        return self.table[a][b]

    def inv(self, c, b):
        """The unique ``a`` with ``a * b == c``."""
        return self._inverse_table[c][b]

    @property
    def _inverse_table(self):
        try:
            return self.__dict__["_inv"]
        except KeyError:
            pass
        n = self.order
        inv = [[0] * n for _ in range(n)]
        for b in range(n):
            for a in range(n):
                inv[self.table[a][b]][b] = a
        inv = tuple(tuple(r) for r in inv)
        object.__setattr__(self, "_inv", inv)
        return inv

    def to_dict(self):
        d = {"order": self.order, "table": [list(r) for r in self.table]}
        if self.name:
            d = {"name": self.name, **d}
        return d

    def __repr__(self):
        label = self.name or f"order {self.order}"
        return f"<Quandle {label}>"


@dataclass(frozen=True)
class OrbitPartition:
    blocks: tuple

    def __len__(self):
        return len(self.blocks)

    def block_of(self, a):
        for i, b in enumerate(self.blocks):
            if a in b:
                return i
        raise KeyError(a)


def _check_shape(table):
    if not isinstance(table, (list, tuple)) or not table:
        raise ParseError("table must be a non-empty list of rows")
    n = len(table)
    for row in table:
        if not isinstance(row, (list, tuple)) or len(row) != n:
            raise ParseError("table is not square")
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
                raise ParseError(f"entry {x!r} out of range 0..{n - 1}")


def validate(table, name=None):
    """Return a :class:`Quandle` or raise :class:`AxiomViolation`.

    Axioms are checked in order 1, 2, 3 and the witness is the
    lexicographically first failing tuple:
    ``(a,)`` for idempotence, ``(b, c)`` for invertibility (``c`` is hit
    twice, or never, by ``x -> x * b``), ``(a, b, c)`` for distributivity.

    >>> validate([[1, 0], [0, 1]])
    Traceback (most recent call last):
    ...
    quandlehom.errors.AxiomViolation: axiom 1 fails at (0,)
    """
    _check_shape(table)
    t = tuple(tuple(r) for r in table)
    n = len(t)
    for a in range(n):
        if t[a][a] != a:
            raise AxiomViolation(1, (a,))
    for b in range(n):
        hits = [0] * n
        for a in range(n):
            hits[t[a][b]] += 1
        for c in range(n):
            if hits[c] != 1:
                raise AxiomViolation(2, (b, c))
    for a in range(n):
        for b in range(n):
            ab = t[a][b]
            for c in range(n):
                if t[ab][c] != t[t[a][c]][t[b][c]]:
                    raise AxiomViolation(3, (a, b, c))
    return Quandle(t, name)


def dihedral(n):
    """``R_n``: ``i * j = 2j - i (mod n)``."""
    return Quandle(
        tuple(tuple((2 * j - i) % n for j in range(n)) for i in range(n)), f"R{n}"
    )


def trivial(n):
    """``T_n``: ``a * b = a``."""
    return Quandle(tuple(tuple(i for _ in range(n)) for i in range(n)), f"T{n}")


def alexander(m, t):
    """Alexander quandle on ``Z_m``: ``a * b = t a + (1 - t) b``."""
    if m < 1 or gcd(t, m) != 1:
        raise NotAUnit(f"{t} is not a unit modulo {m}")
    return Quandle(
        tuple(tuple((t * a + (1 - t) * b) % m for b in range(m)) for a in range(m)),
        f"Alex({m},{t % m})",
    )


# Four element quandle used for the trefoil / figure-eight example.
S4_TABLE = ((0, 2, 3, 1), (3, 1, 0, 2), (1, 3, 2, 0), (2, 0, 1, 3))


def s4():
    return Quandle(S4_TABLE, "S4")


def dual(q):
    """The quandle ``(X, *^-1)``."""
    n = q.order
    name = f"{q.name}*" if q.name else None
    return Quandle(tuple(tuple(q.inv(a, b) for b in range(n)) for a in range(n)), name)


def is_kei(q):
    n = q.order
    return all(q.op(q.op(c, b), b) == c for b in range(n) for c in range(n))


def orbits(q):
    """Orbit partition, blocks sorted by their minimum element.

    >>> orbits(dihedral(4)).blocks
    ((0, 2), (1, 3))
    """
    n = q.order
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    # a ~ a*b covers a ~ a*^-1 b as well, since the relation is symmetric
    for a in range(n):
        for b in range(n):
            ra, rb = find(a), find(q.op(a, b))
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    blocks = {}
    for a in range(n):
        blocks.setdefault(find(a), []).append(a)
    return OrbitPartition(tuple(tuple(b) for _, b in sorted(blocks.items())))


# -- named quandles ---------------------------------------------------------

def builtin(name):
    """Look up ``R<n>``, ``T<n>``, ``S4`` or ``Alex<m>_<t>`` (leading ``@`` ok)."""
    key = name.lstrip("@")
    try:
        if key == "S4":
            return s4()
        if key[0] == "R":
            return dihedral(int(key[1:]))
        if key[0] == "T":
            return trivial(int(key[1:]))
        if key.startswith("Alex"):
            m, t = key[4:].split("_")
            return alexander(int(m), int(t))
    except (ValueError, IndexError):
        pass
    raise ParseError(f"unknown quandle {name!r}")


#: quandles exercised by the verification suite
BUILTIN_NAMES = (
    "T1", "T2", "T3", "T4", "T5", "T6",
    "R3", "R4", "R5", "R6", "R7", "R8",
    "S4",
)


def builtins(max_order=None):
    qs = [builtin(n) for n in BUILTIN_NAMES]
    if max_order is not None:
        qs = [q for q in qs if q.order <= max_order]
    return qs


# -- file format --------------------------------------------------------------

def from_dict(d):
    if not isinstance(d, dict) or "table" not in d:
        raise ParseError("quandle JSON needs a 'table' field")
    table = d["table"]
    _check_shape(table)
    if "order" in d and d["order"] != len(table):
        raise ParseError(f"order {d['order']} does not match table size {len(table)}")
    return validate(table, d.get("name"))


def loads(text):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    return from_dict(d)


def load(path):
    """Read a quandle file, or resolve a built-in name such as ``@R3``."""
    if str(path).startswith("@"):
        return builtin(str(path))
    with open(path) as f:
        return loads(f.read())


def dumps(q):
    return json.dumps(q.to_dict())
