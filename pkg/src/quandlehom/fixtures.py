"""Bundled link diagrams, addressable by name (``@trefoil`` on the command line)."""

from functools import lru_cache

from .diagram import from_braid, mirror, parse_diagram
from .errors import ParseError

_LEFT_TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
_LEFT_TREFOIL_KINKED = "X[1,4,2,5] X[3,8,4,1] X[5,2,6,3] X[6,7,7,8]"

_PD = {
    "figure8": "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]",
    "5_2": "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]",
    # reduced alternating diagram, Dowker-Thistlethwaite code 6 10 12 14 4 2 8
    "7_4": "X[1,6,2,7] X[3,10,4,11] X[5,12,6,13] X[7,14,8,1] X[9,4,10,5] X[11,2,12,3] X[13,8,14,9]",
    "unknot": "U",
    "unlink2": "U U",
    "unlink3": "U U U",
    "trefoil_left": _LEFT_TREFOIL,
}

_BRAIDS = {
    "trefoil_braid": [1, 2, 1, 2],
    "trefoil_2braid": [1, 1, 1],
    "figure8_braid": [1, -2, 1, -2],
    "hopf": [1, 1],
    "borromean": [1, -2] * 3,
    # one component tied into a trefoil: differs from the Borromean rings
    # by self-crossing changes only
    "borromean_selfcross": [1, -2] * 3 + [3, 3, 3],
    # an extra strand with a kink: same link as the Borromean rings
    "borromean_kinked": [1, -2] * 3 + [3, 3, -3],
}

_ALIASES = {"3_1": "trefoil", "4_1": "figure8", "figure_eight": "figure8", "borromean_rings": "borromean"}


@lru_cache(maxsize=None)
def diagram(name):
    """The bundled diagram called ``name``."""
    name = _ALIASES.get(name, name)
    if name == "trefoil":
        return _renamed(mirror(parse_diagram(_LEFT_TREFOIL)), name)
    if name == "trefoil_kinked":
        return _renamed(mirror(parse_diagram(_LEFT_TREFOIL_KINKED)), name)
    if name in _PD:
        return parse_diagram(_PD[name], name=name)
    if name in _BRAIDS:
        return from_braid(_BRAIDS[name], name=name)
    raise ParseError(f"unknown diagram fixture {name!r}; known: {', '.join(NAMES)}")


def _renamed(d, name):
    object.__setattr__(d, "name", name)
    return d


NAMES = ("trefoil", "trefoil_braid", "trefoil_kinked", "trefoil_2braid", "trefoil_left",
         "figure8", "figure8_braid", "5_2", "7_4", "hopf", "borromean",
         "borromean_selfcross", "borromean_kinked", "unknot", "unlink2", "unlink3")

# diagrams of the same link, related by Reidemeister moves
TREFOILS = ("trefoil", "trefoil_braid", "trefoil_kinked")
FIGURE_EIGHTS = ("figure8", "figure8_braid")
KNOTS = ("trefoil", "trefoil_braid", "trefoil_kinked", "trefoil_2braid", "trefoil_left",
         "figure8", "figure8_braid", "5_2", "7_4")
