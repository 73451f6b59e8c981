"""Oriented link diagrams in planar-diagram (PD) notation.

A crossing ``X[i,j,k,l]`` lists its four edge labels counterclockwise,
starting from the incoming under-edge: ``i`` enters and ``k`` leaves along
the under-strand, ``j`` and ``l`` are the two halves of the over-strand.
The direction of the over-strand comes from the component clauses
``C[e1,e2,...]`` (edge sequences along the orientation); without them it is
inferred from the under-strands and, failing that, from consecutive edge
numbering. ``U`` adds a crossingless unknotted component. ``O[e]`` declares
the face left of edge ``e`` unbounded (``O[-e]``: the face on its right);
otherwise the longest face of each connected piece is taken.

Separate connected pieces are laid side by side in the plane, none inside
another, so they all share the unbounded face.

>>> d = parse_diagram("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")
>>> len(d.crossings), len(d.edges), len(d.components), len(faces(d))
(3, 6, 1, 5)
"""

import json
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from .errors import InconsistentOrientation, NonPlanar, ParseError

WHITE, BLACK = 0, 1

# Handedness of the checkerboard sign. Fixed so that the standard
# Borromean diagram has every crossing positive.
EPSILON_ORIENTATION = 1


@dataclass(frozen=True)
class LinkDiagram:
    """Validated diagram. Build with :func:`parse_diagram` or :func:`from_pd`.

    ``crossings`` holds the PD 4-tuples, ``over_in`` the slot (1 or 3) where
    each over-strand enters, ``components`` the edge sequences (a
    crossingless component is a 1-tuple holding its loop edge) and ``outer``
    a tuple of ``(edge, side)`` choices for the unbounded face.
    """

    crossings: tuple
    over_in: tuple
    components: tuple
    outer: tuple = ()
    name: str = field(default=None, compare=False)

    # -- basic structure --------------------------------------------------

    @cached_property
    def edges(self):
        return tuple(e for comp in self.components for e in comp)

    @cached_property
    def loops(self):
        """Edges of crossingless components."""
        used = {e for x in self.crossings for e in x}
        return tuple(e for e in self.edges if e not in used)

    @cached_property
    def component_of(self):
        return {e: i for i, comp in enumerate(self.components) for e in comp}

    @cached_property
    def _ends(self):
        head, tail, occ = {}, {}, {}
        for c, x in enumerate(self.crossings):
            for p, e in enumerate(x):
                occ.setdefault(e, []).append((c, p))
            pin = self.over_in[c]
            head[x[0]], tail[x[2]] = (c, 0), (c, 2)
            head[x[pin]], tail[x[4 - pin]] = (c, pin), (c, 4 - pin)
        return head, tail, occ

    @property
    def head(self):
        """``head[e]``: the (crossing, slot) where edge ``e`` ends."""
        return self._ends[0]

    @property
    def tail(self):
        """``tail[e]``: the (crossing, slot) where edge ``e`` starts."""
        return self._ends[1]

    def other_end(self, c, p):
        e = self.crossings[c][p]
        a, b = self._ends[2][e]
        return b if a == (c, p) else a

    def writhe(self, c):
        """Orientation sign of crossing ``c``: +1 when the over-strand runs slot 3 -> slot 1."""
        return 1 if self.over_in[c] == 3 else -1

    def crossing_components(self, c):
        """(under component, over component) of crossing ``c``."""
        x = self.crossings[c]
        return self.component_of[x[0]], self.component_of[x[1]]

    # -- arcs ---------------------------------------------------------------

    @cached_property
    def _arcs(self):
        arcs, arc_of = [], {}
        for comp in self.components:
            # an arc starts right after an under-crossing; a component without
            # under-crossings is one closed arc
            starts = [k for k, e in enumerate(comp) if self.tail.get(e, (0, 1))[1] == 2]
            # begin with the arc holding the component's first edge
            k0 = starts[-1] if starts and starts[0] != 0 else 0
            for e in comp[k0:] + comp[:k0]:
                if not arcs or e in self.tail and self.tail[e][1] == 2 or e == comp[k0]:
                    arcs.append([])
                arcs[-1].append(e)
                arc_of[e] = len(arcs) - 1
        return tuple(map(tuple, arcs)), arc_of

    @property
    def arcs(self):
        """Arcs (maximal over-passing edge runs) in order of first encounter."""
        return self._arcs[0]

    @property
    def arc_of(self):
        return self._arcs[1]

    def crossing_arcs(self, c):
        """(incoming under arc, over arc, outgoing under arc) at crossing ``c``."""
        x = self.crossings[c]
        return self.arc_of[x[0]], self.arc_of[x[1]], self.arc_of[x[2]]

    # -- serialisation ----------------------------------------------------------

    def to_pd(self):
        parts = [f"X[{','.join(map(str, x))}]" for x in self.crossings]
        loops = set(self.loops)
        for comp in self.components:
            if comp[0] in loops:
                parts.append("U")
            else:
                parts.append(f"C[{','.join(map(str, comp))}]")
        parts += [f"O[{e if side == 'L' else -e}]" for e, side in self.outer]
        return " ".join(parts)

    def to_dict(self):
        loops = set(self.loops)
        return {
            "crossings": [list(x) for x in self.crossings],
            "components": [list(c) for c in self.components if c[0] not in loops],
            "unknots": len(loops),
            "outer": [e if side == "L" else -e for e, side in self.outer],
        }

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return (f"<LinkDiagram{label}: {len(self.crossings)} crossings, "
                f"{len(self.components)} components>")


# -- construction and validation ------------------------------------------------

_TOKEN = re.compile(r"\s*(?:([XCO])\s*\[([^\]]*)\]|(U)\b)\s*,?")


def _ints(body, what):
    try:
        return [int(x) for x in body.split(",") if x.strip()]
    except ValueError:
        raise ParseError(f"non-integer label in {what}[{body}]") from None


def parse_diagram(text, name=None):
    """Parse PD text (see the module docstring) into a validated diagram."""
    text = text.strip()
    if text.startswith("PD[") and text.endswith("]"):
        text = text[3:-1]
    crossings, comps, outer = [], [], []
    slots = []  # component slots in textual order: crossing index or "U"
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse diagram text at {text[pos:pos + 20]!r}")
        pos = m.end()
        kind = m.group(1) or m.group(3)
        if kind == "X":
            labels = _ints(m.group(2), "X")
            if len(labels) != 4:
                raise ParseError(f"crossing needs 4 edge labels, got {labels}")
            crossings.append(tuple(labels))
        elif kind == "C":
            comps.append(tuple(_ints(m.group(2), "C")))
            slots.append("C")
        elif kind == "O":
            outer += _ints(m.group(2), "O")
        else:
            slots.append("U")
    if not crossings and not slots:
        raise ParseError("empty diagram")
    if comps:
        return from_pd(crossings, comps, outer=outer, name=name, layout=slots)
    return from_pd(crossings, None, slots.count("U"), outer, name=name)


def from_pd(crossings, components=None, unknots=0, outer=(), name=None, layout=None):
    """Build and validate a diagram from PD tuples.

    ``components`` may be omitted, in which case orientations are inferred.
    ``outer`` holds signed edge labels (see :func:`parse_diagram`).
    ``layout`` interleaves crossingless components with listed ones: a
    sequence of ``"C"`` and ``"U"`` markers in textual order.
    """
    crossings = tuple(tuple(int(e) for e in x) for x in crossings)
    count = {}
    for x in crossings:
        if len(x) != 4:
            raise ParseError(f"crossing {x} does not have 4 edges")
        for e in x:
            count[e] = count.get(e, 0) + 1
    bad = sorted(e for e, k in count.items() if k != 2)
    if bad:
        raise ParseError(f"edge {bad[0]} appears {count[bad[0]]} time(s); every edge needs 2 ends")
    if components is not None:
        components = [tuple(int(e) for e in c) for c in components]
        listed = [e for c in components for e in c]
        if sorted(listed) != sorted(count) or any(not c for c in components):
            raise ParseError("component clauses must list every edge exactly once")
    over_in = _orient(crossings, components)
    succ = {}
    for c, x in enumerate(crossings):
        succ[x[0]] = x[2]
        succ[x[over_in[c]]] = x[4 - over_in[c]]
    if components is None:
        comps = _cycles(succ, crossings)
    else:
        for comp in components:
            for a, b in zip(comp, comp[1:] + comp[:1]):
                if succ[a] != b:
                    raise InconsistentOrientation(
                        f"component {list(comp)}: edge {a} is followed by {succ[a]}, not {b}")
        comps = components
    # crossingless components get fresh labels
    fresh = iter(range(max(count, default=0) + 1, 10 ** 9))
    if layout is None:
        comps = list(comps) + [(next(fresh),) for _ in range(unknots)]
    else:
        listed, placed = iter(comps), []
        for s in layout:
            if s == "U":
                placed.append((next(fresh),))
            else:
                placed.append(next(listed))
        comps = placed + list(listed)
    edges = {e for c in comps for e in c}
    out = []
    for e in outer:
        if abs(e) not in edges:
            raise ParseError(f"outer-face edge {e} is not in the diagram")
        out.append((abs(e), "L" if e > 0 else "R"))
    d = LinkDiagram(crossings, tuple(over_in), tuple(map(tuple, comps)), tuple(out), name)
    _validate(d)
    return d


def _orient(crossings, components):
    """Slot (1 or 3) where each over-strand enters.

    Every edge occurrence is a head or a tail: under-strands enter at slot 0
    and leave at slot 2, the two over slots have opposite roles, and the two
    occurrences of an edge have opposite roles. Remaining choices come from
    the component clauses or, without them, from the edge numbering.
    """
    occ = {}
    for c, x in enumerate(crossings):
        for p, e in enumerate(x):
            occ.setdefault(e, []).append((c, p))
    role = {}  # (c, p) -> "h" (edge ends here) or "t"
    queue = deque()

    def fix(o, r):
        if o in role:
            if role[o] != r:
                c, p = o
                raise InconsistentOrientation(
                    f"edge {crossings[c][p]} cannot be oriented consistently at X{list(crossings[c])}")
            return
        role[o] = r
        queue.append(o)

    def run():
        while queue:
            c, p = queue.popleft()
            r = role[(c, p)]
            flip = "t" if r == "h" else "h"
            a, b = occ[crossings[c][p]]
            fix(b if a == (c, p) else a, flip)
            if p in (1, 3):
                fix((c, 4 - p), flip)
            elif role[(c, p)] != ("h" if p == 0 else "t"):
                raise InconsistentOrientation(f"under-strand at X{list(crossings[c])} runs backwards")

    for c in range(len(crossings)):
        fix((c, 0), "h")
        fix((c, 2), "t")
    run()
    succ = None
    if components is not None:
        succ = {}
        for comp in components:
            for a, b in zip(comp, comp[1:] + comp[:1]):
                succ[a] = b
    for c, x in enumerate(crossings):
        if (c, 1) in role:
            continue
        j, l = x[1], x[3]
        if succ is not None and succ[l] == j and succ[j] != l:
            fix((c, 3), "h")
        elif succ is not None and succ[j] == l and succ[l] != j:
            fix((c, 1), "h")
        elif l == j + 1:
            fix((c, 1), "h")
        elif j == l + 1:
            fix((c, 3), "h")
        else:
            # closing edge of a numbered component runs from the largest label
            fix((c, 1) if j > l else (c, 3), "h")
        run()
    return tuple(1 if role[(c, 1)] == "h" else 3 for c in range(len(crossings)))


def _cycles(succ, crossings):
    """Components from the successor map, ordered by first appearance, each
    starting at its smallest edge label."""
    seen, comps = set(), []
    for x in crossings:
        for e in x:
            if e in seen:
                continue
            cyc = [e]
            seen.add(e)
            while succ[cyc[-1]] != e:
                cyc.append(succ[cyc[-1]])
                seen.add(cyc[-1])
            k = cyc.index(min(cyc))
            comps.append(tuple(cyc[k:] + cyc[:k]))
    return comps


def _validate(d):
    for piece in _pieces(d):
        # a crossingless circle counts as one vertex on one edge
        v = len(piece["crossings"]) or 1
        e = len(piece["edges"])
        f = len(piece["faces"])
        if v - e + f != 2:
            raise NonPlanar(f"Euler characteristic {v - e + f} != 2 (V={v}, E={e}, F={f})")
    # force the shading, which checks the outer-face choices
    checkerboard(d)


# -- faces and shading ----------------------------------------------------------

def _dart_faces(d):
    """Orbits of darts ``(crossing, slot)``; each face lies left of its darts."""
    seen = {}
    orbits = []
    for c in range(len(d.crossings)):
        for p in range(4):
            if (c, p) in seen:
                continue
            orbit = []
            cur = (c, p)
            while cur not in seen:
                seen[cur] = len(orbits)
                orbit.append(cur)
                c2, p2 = d.other_end(*cur)
                cur = (c2, (p2 - 1) % 4)
            orbits.append(tuple(orbit))
    return orbits, seen


def _dart_side(d, dart):
    """``(edge, side)`` for the face left of ``dart`` (side relative to the edge's orientation)."""
    c, p = dart
    e = d.crossings[c][p]
    return (e, "L") if d.tail[e] == dart else (e, "R")


@dataclass(frozen=True)
class Face:
    """A region of the plane: its boundary walks as ``(edge, side)`` lists."""

    walks: tuple
    unbounded: bool = False

    @property
    def size(self):
        return sum(len(w) for w in self.walks)


def _pieces(d):
    """Connected pieces of the diagram with their crossings, edges and faces."""
    cache = d.__dict__.get("_pieces_cache")
    if cache is not None:
        return cache
    n = len(d.crossings)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in range(n):
        for p in range(4):
            c2, _ = d.other_end(c, p)
            parent[find(c)] = find(c2)
    orbits, dart_face = _dart_faces(d)
    groups = {}
    for c in range(n):
        groups.setdefault(find(c), []).append(c)
    pieces = []
    for root in sorted(groups, key=lambda r: min(groups[r])):
        cs = groups[root]
        fids = sorted({dart_face[(c, p)] for c in cs for p in range(4)})
        edges = sorted({e for c in cs for e in d.crossings[c]})
        pieces.append({
            "crossings": cs,
            "edges": edges,
            "faces": [tuple(_dart_side(d, x) for x in orbits[f]) for f in fids],
            "dart_faces": fids,
        })
    for e in d.loops:
        pieces.append({
            "crossings": [],
            "edges": [e],
            # a loop is drawn counterclockwise: its inside is on the left
            "faces": [((e, "L"),), ((e, "R"),)],
            "dart_faces": [],
        })
    object.__setattr__(d, "_pieces_cache", pieces)
    return pieces


def _outer_index(d, piece):
    """Index (within ``piece['faces']``) of the face chosen as unbounded."""
    for e, side in d.outer:
        for i, walk in enumerate(piece["faces"]):
            if (e, side) in walk:
                return i
    if not piece["crossings"]:
        return 1
    # longest face; ties broken by the smallest edge label on the boundary
    return min(range(len(piece["faces"])),
               key=lambda i: (-len(piece["faces"][i]), min(e for e, _ in piece["faces"][i])))


def faces(d):
    """All regions of the diagram, the unbounded one first.

    The unbounded region collects the outer walk of every connected piece.
    """
    outer_walks = []
    inner = []
    for piece in _pieces(d):
        k = _outer_index(d, piece)
        for i, walk in enumerate(piece["faces"]):
            if i == k:
                outer_walks.append(walk)
            else:
                inner.append(Face((walk,)))
    return [Face(tuple(outer_walks), unbounded=True)] + inner


@dataclass(frozen=True)
class Shading:
    """Checkerboard colouring: ``colors[i]`` is the colour of ``faces[i]``."""

    faces: tuple
    colors: tuple

    def color_of(self, edge, side):
        for f, col in zip(self.faces, self.colors):
            for walk in f.walks:
                if (edge, side) in walk:
                    return col
        raise KeyError((edge, side))


def checkerboard(d):
    """The 2-colouring of the faces with the unbounded face white.

    >>> s = checkerboard(parse_diagram("U"))
    >>> s.colors
    (0, 1)
    """
    fs = faces(d)
    where = {}
    for i, f in enumerate(fs):
        for walk in f.walks:
            for side in walk:
                where[side] = i
    color = {0: WHITE}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for walk in fs[i].walks:
            for e, side in walk:
                j = where[(e, "R" if side == "L" else "L")]
                want = 1 - color[i]
                if j not in color:
                    color[j] = want
                    queue.append(j)
                elif color[j] != want:
                    raise NonPlanar(f"faces on both sides of edge {e} cannot be shaded apart")
    if len(color) != len(fs):
        raise NonPlanar("face adjacency graph is disconnected")
    return Shading(tuple(fs), tuple(color[i] for i in range(len(fs))))


def epsilon_sign(d, shading, c):
    """Checkerboard sign of crossing ``c`` (independent of orientations).

    The two quadrants reached by turning the over-strand a quarter turn
    counterclockwise have the same colour; the sign is +1 when that colour
    is black (up to the global handedness :data:`EPSILON_ORIENTATION`).
    """
    x = d.crossings[c]
    # quadrant counterclockwise of slot p is the face left of dart (c, p)
    q1 = shading.color_of(*_dart_side(d, (c, 1)))
    q3 = shading.color_of(*_dart_side(d, (c, 3)))
    if q1 != q3:
        raise NonPlanar(f"opposite quadrants at X{list(x)} have different colours")
    return EPSILON_ORIENTATION * (1 if q1 == BLACK else -1)


def epsilon_signs(d, shading=None):
    shading = shading or checkerboard(d)
    return [epsilon_sign(d, shading, c) for c in range(len(d.crossings))]


def writhe_sign(d, c):
    return d.writhe(c)


def linking_number(d, i, j):
    total = 0
    for c in range(len(d.crossings)):
        if set(d.crossing_components(c)) == {i, j} and i != j:
            total += d.writhe(c)
    return total // 2


# -- colourings -------------------------------------------------------------------

def crossing_relation(d, c):
    """``(source arc, over arc, target arc)``: a proper colouring has ``target = source * over``.

    Walking along the under-strand the label changes ``a -> a*b`` at a
    positive crossing and ``a -> a*^-1 b`` at a negative one, so the source
    is the incoming under-arc when the writhe is +1 and the outgoing one
    otherwise.
    """
    a_in, b, a_out = d.crossing_arcs(c)
    return (a_in, b, a_out) if d.writhe(c) == 1 else (a_out, b, a_in)


def is_proper(d, q, labels):
    return all(labels[t] == q.op(labels[s], labels[b])
               for s, b, t in (crossing_relation(d, c) for c in range(len(d.crossings))))


def colorings(d, q):
    """Every proper colouring, as tuples indexed by arc, in lexicographic order."""
    rels = [crossing_relation(d, c) for c in range(len(d.crossings))]
    n_arcs = len(d.arcs)
    touching = [[] for _ in range(n_arcs)]
    for r in rels:
        for a in set(r):
            touching[a].append(r)
    out = []
    labels = [None] * n_arcs

    def assign(a, v, trail):
        # set arc a to v and propagate forced labels; False on conflict
        stack = [(a, v)]
        while stack:
            a, v = stack.pop()
            if labels[a] is not None:
                if labels[a] != v:
                    return False
                continue
            labels[a] = v
            trail.append(a)
            for s, b, t in touching[a]:
                ls, lb, lt = labels[s], labels[b], labels[t]
                if lb is None:
                    continue
                if ls is not None:
                    stack.append((t, q.op(ls, lb)))
                elif lt is not None:
                    stack.append((s, q.inv(lt, lb)))
        return True

    def search(i):
        while i < n_arcs and labels[i] is not None:
            i += 1
        if i == n_arcs:
            out.append(tuple(labels))
            return
        for v in range(q.order):
            trail = []
            if assign(i, v, trail):
                search(i + 1)
            for a in trail:
                labels[a] = None

    search(0)
    return out


# -- diagram transformations --------------------------------------------------------

def mirror(d):
    """Swap over and under at every crossing."""
    xs = []
    for c, (i, j, k, l) in enumerate(d.crossings):
        xs.append((l, i, j, k) if d.writhe(c) == 1 else (j, k, l, i))
    over_in = tuple(4 - p for p in d.over_in)
    return LinkDiagram(tuple(xs), over_in, d.components, d.outer,
                       f"{d.name}_mirror" if d.name else None)


def reverse_component(d, k):
    """Reverse the orientation of component ``k``."""
    comp = d.components[k]
    members = set(comp)
    xs, over_in = [], []
    for (i, j, kk, l), p in zip(d.crossings, d.over_in):
        under, over = i in members, j in members
        xs.append((kk, l, i, j) if under else (i, j, kk, l))
        # rotating by two slots moves the over-strand entry to the opposite slot
        over_in.append(4 - p if under != over else p)
    comps = list(d.components)
    comps[k] = comp[:1] + tuple(reversed(comp[1:]))
    outer = tuple((e, ("R" if s == "L" else "L") if e in members else s) for e, s in d.outer)
    out = LinkDiagram(tuple(xs), tuple(over_in), tuple(comps), outer, d.name)
    _validate(out)
    return out


def from_braid(word, strands=None, name=None):
    """Closure of a braid word (``i`` for σ_i, ``-i`` for its inverse, 1-based).

    Strands run upward and close up on the right, so the face left of the
    first strand is unbounded. Closures that fall apart would nest pieces
    inside one another and are rejected.
    """
    strands = strands or (max(abs(g) for g in word) + 1 if word else 1)
    linked = {abs(g) for g in word}
    if strands > 1 and any(i not in linked for i in range(1, strands)):
        raise ParseError("braid closure is split; give split links as PD code")
    next_label = iter(range(1, 10 ** 9))
    start = [next(next_label) for _ in range(strands)]
    cur = list(start)
    xs, succ = [], {}
    for g in word:
        i = abs(g) - 1
        if not 0 <= i < strands - 1:
            raise ParseError(f"generator {g} out of range for {strands} strands")
        a_in, b_in = cur[i], cur[i + 1]
        a_out, b_out = next(next_label), next(next_label)
        if g > 0:
            xs.append((b_in, a_out, b_out, a_in))
        else:
            xs.append((a_in, b_in, a_out, b_out))
        succ[a_in], succ[b_in] = a_out, b_out
        cur[i], cur[i + 1] = b_out, a_out
    # close up: the top edge at each position is the bottom edge there
    same = {top: bot for top, bot in zip(cur, start)}

    def canon(e):
        while e in same and same[e] != e:
            e = same[e]
        return e

    xs = [tuple(canon(e) for e in x) for x in xs]
    succ = {canon(a): canon(b) for a, b in succ.items()}
    used = {e for x in xs for e in x}
    comps, seen = [], set()
    loops = 0
    for s in start:
        e = canon(s)
        if e in seen:
            continue
        if e not in used:
            loops += 1
            seen.add(e)
            continue
        cyc = [e]
        seen.add(e)
        while succ[cyc[-1]] != e:
            cyc.append(succ[cyc[-1]])
            seen.add(cyc[-1])
        comps.append(cyc)
    # relabel edges 1..E consecutively along components
    relabel = {}
    for cyc in comps:
        for e in cyc:
            relabel[e] = len(relabel) + 1
    xs = [tuple(relabel[e] for e in x) for x in xs]
    comps = [[relabel[e] for e in cyc] for cyc in comps]
    outer = [relabel[canon(start[0])]] if canon(start[0]) in relabel else []
    return from_pd(xs, comps, loops, outer, name=name)


# -- JSON ----------------------------------------------------------------------------

def from_dict(obj, name=None):
    try:
        return from_pd(obj["crossings"], obj.get("components") or None,
                       int(obj.get("unknots", 0)), obj.get("outer", ()), name=name or obj.get("name"))
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"malformed diagram JSON: {e}") from None


def load(path):
    """Read a diagram from a ``.json`` or PD text file, or a fixture name like ``@trefoil``."""
    path = str(path)
    if path.startswith("@"):
        from .fixtures import diagram as fixture
        return fixture(path[1:])
    with open(path) as f:
        text = f.read()
    if text.lstrip().startswith("{"):
        try:
            return from_dict(json.loads(text))
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e}") from None
    return parse_diagram(text)
