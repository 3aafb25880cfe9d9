"""Combinatorial virtual link diagrams.

A diagram is a list of crossings wired together by named semiarcs, plus
optional crossing-free circles ("free loops").  Classical crossings carry
a sign and distinguish the under- and over-passing strand; virtual
crossings are symmetric.  Every semiarc name must occur exactly once as
an input and once as an output; no planarity data is kept.

Strands are stored with a traversal direction (the in/out slots), but for
involutory biracks the labeling semantics is direction-independent, so
the orientation is pure bookkeeping.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, replace
from importlib import resources

POSITIVE = "+"
NEGATIVE = "-"
VIRTUAL = "v"

_KIND_TAGS = {"C+": POSITIVE, "C-": NEGATIVE, "V": VIRTUAL}
_TAG_OF_KIND = {v: k for k, v in _KIND_TAGS.items()}
_NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")

# Fresh semiarc names created by kink insertion use this marker, which the
# file format's name alphabet excludes -- parsed names can never collide.
_FRESH = "§"  # section sign


@dataclass(frozen=True)
class Crossing:
    """One crossing; two strand passages, each with an in and an out slot.

    Classical: passage 1 is the understrand (under_in -> under_out),
    passage 2 the overstrand.  Virtual: the passages are symmetric and
    called a and b.
    """

    kind: str
    in1: str
    out1: str
    in2: str
    out2: str

    def __post_init__(self):
        if self.kind not in (POSITIVE, NEGATIVE, VIRTUAL):
            raise ValueError(f"unknown crossing kind {self.kind!r}")

    @property
    def is_classical(self) -> bool:
        return self.kind != VIRTUAL

    # slot aliases for the classical reading
    under_in = property(lambda self: self.in1)
    under_out = property(lambda self: self.out1)
    over_in = property(lambda self: self.in2)
    over_out = property(lambda self: self.out2)

    # and for the virtual reading
    a_in = property(lambda self: self.in1)
    a_out = property(lambda self: self.out1)
    b_in = property(lambda self: self.in2)
    b_out = property(lambda self: self.out2)

    @property
    def sign(self) -> int:
        if self.kind == POSITIVE:
            return 1
        if self.kind == NEGATIVE:
            return -1
        return 0


@dataclass(frozen=True)
class Diagram:
    name: str = ""
    crossings: tuple[Crossing, ...] = ()
    free_loops: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        object.__setattr__(self, "free_loops", tuple(self.free_loops))
        if not self.crossings and not self.free_loops:
            raise ValueError("empty diagram")
        ins: dict[str, int] = {}
        outs: dict[str, int] = {}
        for c in self.crossings:
            for s in (c.in1, c.in2):
                ins[s] = ins.get(s, 0) + 1
            for s in (c.out1, c.out2):
                outs[s] = outs.get(s, 0) + 1
        for s in self.free_loops:
            ins[s] = ins.get(s, 0) + 1
            outs[s] = outs.get(s, 0) + 1
        for s in sorted(set(ins) | set(outs)):
            if ins.get(s, 0) != 1:
                raise ValueError(f"semiarc {s}: in-degree {ins.get(s, 0)}")
            if outs.get(s, 0) != 1:
                raise ValueError(f"semiarc {s}: out-degree {outs.get(s, 0)}")

    @functools.cached_property
    def semiarcs(self) -> tuple[str, ...]:
        """All semiarc names in order of first appearance."""
        seen: dict[str, None] = {}
        for c in self.crossings:
            for s in (c.in1, c.out1, c.in2, c.out2):
                seen.setdefault(s)
        for s in self.free_loops:
            seen.setdefault(s)
        return tuple(seen)

    @functools.cached_property
    def successor(self) -> dict[str, str]:
        """Map each semiarc to the next one along its strand."""
        succ = {c.in1: c.out1 for c in self.crossings}
        succ.update({c.in2: c.out2 for c in self.crossings})
        succ.update({s: s for s in self.free_loops})
        return succ

    @functools.cached_property
    def components(self) -> tuple[tuple[str, ...], ...]:
        """Orbits of the successor map, ordered by first appearance."""
        succ = self.successor
        comps = []
        seen: set[str] = set()
        for start in self.semiarcs:
            if start in seen:
                continue
            orbit = [start]
            seen.add(start)
            s = succ[start]
            while s != start:
                orbit.append(s)
                seen.add(s)
                s = succ[s]
            comps.append(tuple(orbit))
        return tuple(comps)

    @functools.cached_property
    def component_of(self) -> dict[str, int]:
        return {s: k for k, comp in enumerate(self.components) for s in comp}

    @functools.cached_property
    def self_writhe(self) -> tuple[int, ...]:
        """Per-component algebraic self-crossing count (inter-component
        crossings do not contribute)."""
        w = [0] * len(self.components)
        at = self.component_of
        for c in self.crossings:
            if c.is_classical and at[c.in1] == at[c.in2]:
                w[at[c.in1]] += c.sign
        return tuple(w)


def components(d: Diagram) -> tuple[tuple[str, ...], ...]:
    return d.components


def self_writhe(d: Diagram) -> tuple[int, ...]:
    return d.self_writhe


def parse_diagram(text: str) -> Diagram:
    """Parse the diagram file format.

    Lines: "C+ u_in u_out o_in o_out", "C- ...", "V a_in a_out b_in b_out",
    "O s" for a free loop, optional "link <name>" header, '#' comments.
    Semiarc names are tokens over [A-Za-z0-9_].
    """
    name = ""
    crossings: list[Crossing] = []
    loops: list[str] = []
    saw_name = False
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tag, *rest = stripped.split()
        if tag == "link":
            if saw_name:
                raise ValueError("duplicate link header")
            if len(rest) != 1:
                raise ValueError(f"link header wants one name: {stripped!r}")
            name, saw_name = rest[0], True
            continue
        if tag in _KIND_TAGS:
            if len(rest) != 4:
                raise ValueError(f"crossing line wants 4 semiarcs: {stripped!r}")
            for tok in rest:
                if not _NAME_RE.match(tok):
                    raise ValueError(f"bad semiarc name {tok!r}")
            crossings.append(Crossing(_KIND_TAGS[tag], *rest))
        elif tag == "O":
            if len(rest) != 1:
                raise ValueError(f"free loop line wants one semiarc: {stripped!r}")
            if not _NAME_RE.match(rest[0]):
                raise ValueError(f"bad semiarc name {rest[0]!r}")
            loops.append(rest[0])
        else:
            raise ValueError(f"unknown line tag {tag!r}")
    return Diagram(name=name, crossings=tuple(crossings), free_loops=tuple(loops))


def format_diagram(d: Diagram) -> str:
    """Serialize back to the file format (inverse of parse_diagram)."""
    lines = []
    if d.name:
        lines.append(f"link {d.name}")
    for c in d.crossings:
        lines.append(f"{_TAG_OF_KIND[c.kind]} {c.in1} {c.out1} {c.in2} {c.out2}")
    for s in d.free_loops:
        lines.append(f"O {s}")
    return "\n".join(lines) + "\n"


def _fresh_pair(taken: set[str], site: str) -> tuple[str, str]:
    for k in ("", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11", "12"):
        loop, exit_ = f"{site}{_FRESH}l{k}", f"{site}{_FRESH}x{k}"
        if loop not in taken and exit_ not in taken:
            return loop, exit_
    raise ValueError("could not generate fresh semiarc names")  # pragma: no cover


def add_positive_kink(d: Diagram, component_index: int, *,
                      site: str | None = None, over_first: bool = False) -> Diagram:
    """Insert one positive kink into the given component.

    The strand is cut at ``site`` (default: the lexicographically least
    semiarc of the component) and a positive self-crossing is spliced in;
    the site keeps its upstream out-slot.  With ``over_first`` the strand
    runs through the new crossing's over passage before its under passage
    (the mirror-image kink, still writhe +1).  Labeling counts do not
    depend on either choice.
    """
    comps = d.components
    if not 0 <= component_index < len(comps):
        raise ValueError(f"component index {component_index} out of range")
    comp = comps[component_index]
    if site is None:
        site = min(comp)
    elif site not in comp:
        raise ValueError(f"semiarc {site} not on component {component_index}")
    taken = set(d.semiarcs)

    if site in d.free_loops:
        loop, _ = _fresh_pair(taken, site)
        kink = (Crossing(POSITIVE, loop, site, site, loop) if over_first
                else Crossing(POSITIVE, site, loop, loop, site))
        return replace(d, crossings=d.crossings + (kink,),
                       free_loops=tuple(s for s in d.free_loops if s != site))

    loop, exit_ = _fresh_pair(taken, site)
    rewired = []
    for c in d.crossings:
        if c.in1 == site:
            c = replace(c, in1=exit_)
        elif c.in2 == site:
            c = replace(c, in2=exit_)
        rewired.append(c)
    kink = (Crossing(POSITIVE, loop, exit_, site, loop) if over_first
            else Crossing(POSITIVE, site, loop, loop, exit_))
    return replace(d, crossings=tuple(rewired) + (kink,))


@functools.cache
def _load_builtin_diagrams() -> dict[str, Diagram]:
    out = {}
    root = resources.files(__package__) / "data" / "diagrams"
    for entry in sorted(root.iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".vlink"):
            out[entry.name[:-len(".vlink")]] = parse_diagram(entry.read_text())
    return out


def builtin_diagrams() -> dict[str, Diagram]:
    """The shipped diagram corpus, keyed by name (file name sans suffix)."""
    return dict(_load_builtin_diagrams())


def builtin_diagram(name: str) -> Diagram:
    try:
        return builtin_diagrams()[name]
    except KeyError:
        raise ValueError(f"no builtin diagram named {name!r}") from None
