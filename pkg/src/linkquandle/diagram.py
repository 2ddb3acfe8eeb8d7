"""Oriented virtual link diagrams as signed Gauss codes.

A diagram is a list of components; each component is the cyclic sequence
of classical crossings met while walking along it, recorded as passages
``O<label><sign>`` (passing over) or ``U<label><sign>`` (passing under).
Virtual crossings are not recorded: detour moves never change the code.

Text format::

    link      := component ("/" component)*
    component := "*" | passage (WS passage)*
    passage   := ("O"|"U") INT ("+"|"-")

Example: the Hopf link is ``"O1+ U2+ / U1+ O2+"``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DiagramError

OVER = "O"
UNDER = "U"

_PASSAGE_RE = re.compile(r"([OU])([0-9]+)([+-])\Z")


@dataclass(frozen=True)
class Passage:
    crossing: int
    role: str
    sign: int

    def __str__(self):
        return f"{self.role}{self.crossing}{'+' if self.sign > 0 else '-'}"

    @property
    def is_over(self):
        return self.role == OVER


def _validate(components):
    if len(components) < 1:
        raise DiagramError("a diagram needs at least one component")
    seen = {}
    for ci, comp in enumerate(components):
        for pi, p in enumerate(comp):
            if p.role not in (OVER, UNDER):
                raise DiagramError(f"bad role {p.role!r}", p.crossing, (ci, pi))
            if p.sign not in (-1, 1):
                raise DiagramError(f"bad sign {p.sign!r}", p.crossing, (ci, pi))
            if p.crossing < 1:
                raise DiagramError("crossing labels must be >= 1", p.crossing, (ci, pi))
            seen.setdefault(p.crossing, []).append((p, (ci, pi)))
    for label, uses in seen.items():
        if len(uses) != 2:
            raise DiagramError(
                f"crossing {label} occurs {len(uses)} times (expected 2)",
                label, uses[-1][1])
        (p, _), (q, pos) = uses
        if {p.role, q.role} != {OVER, UNDER}:
            raise DiagramError(
                f"crossing {label} needs one O and one U passage", label, pos)
        if p.sign != q.sign:
            raise DiagramError(f"crossing {label} has mismatched signs", label, pos)


@dataclass(frozen=True)
class LinkDiagram:
    """Validated, immutable signed Gauss code.

    ``components[i]`` is the passage sequence of the i-th component, read
    cyclically in the orientation direction; an empty tuple is a component
    with no classical crossings.
    """

    components: tuple

    def __post_init__(self):
        comps = tuple(tuple(c) for c in self.components)
        object.__setattr__(self, "components", comps)
        _validate(comps)

    @property
    def mu(self):
        return len(self.components)

    @property
    def crossings(self):
        return sorted({p.crossing for c in self.components for p in c})

    @property
    def n_passages(self):
        return sum(len(c) for c in self.components)

    def writhe(self, label):
        for comp in self.components:
            for p in comp:
                if p.crossing == label:
                    return p.sign
        raise KeyError(label)

    def locate(self, label):
        """Return ``(over_position, under_position)`` as (component, index) pairs."""
        over = under = None
        for ci, comp in enumerate(self.components):
            for pi, p in enumerate(comp):
                if p.crossing == label:
                    if p.is_over:
                        over = (ci, pi)
                    else:
                        under = (ci, pi)
        if over is None:
            raise KeyError(label)
        return over, under

    def normalized(self):
        """Relabel crossings 1..n in order of first appearance."""
        relabel = {}
        for comp in self.components:
            for p in comp:
                relabel.setdefault(p.crossing, len(relabel) + 1)
        return LinkDiagram(tuple(
            tuple(Passage(relabel[p.crossing], p.role, p.sign) for p in comp)
            for comp in self.components))

    def __str__(self):
        return serialize(self)


def parse(text: str) -> LinkDiagram:
    """Parse one link in Gauss-code text format. Labels are preserved."""
    if "\n" in text.strip("\n"):
        raise DiagramError("expected a single line")
    text = text.strip("\n")
    components = []
    offset = 0
    for chunk in text.split("/"):
        start = offset
        offset += len(chunk) + 1
        body = chunk.strip(" ")
        if body == "":
            raise DiagramError(f"empty component at column {start}", position=start)
        if body == "*":
            components.append(())
            continue
        col = start + (len(chunk) - len(chunk.lstrip(" ")))
        passages = []
        for token in body.split(" "):
            if token == "":
                col += 1
                continue
            m = _PASSAGE_RE.match(token)
            if m is None or int(m.group(2)) < 1:
                raise DiagramError(f"bad token {token!r} at column {col}", position=col)
            passages.append(Passage(int(m.group(2)), m.group(1),
                                    1 if m.group(3) == "+" else -1))
            col += len(token) + 1
        components.append(tuple(passages))
    return LinkDiagram(tuple(components))


def serialize(d: LinkDiagram) -> str:
    """Normalized text form; ``parse(serialize(d)) == d.normalized()``."""
    d = d.normalized()
    return " / ".join(" ".join(map(str, c)) if c else "*" for c in d.components)


def read_links(path) -> list:
    """Read a UTF-8 file of Gauss codes, one link per line; ``#`` starts a comment line."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\r\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            try:
                out.append(parse(line))
            except DiagramError as exc:
                raise DiagramError(f"line {lineno}: {exc}", exc.label, exc.position) from None
    return out


@dataclass(frozen=True)
class CrossingRecord:
    over_arc: int
    under_in: int
    under_out: int
    writhe: int
    over_component: int
    under_component: int


@dataclass(frozen=True)
class ArcTable:
    """Arcs of a diagram, cut at under-passages only.

    Arcs are numbered globally, component by component; arc ``offsets[i] + m``
    is the m-th arc of component i, the 0-th arc starting right after the
    first listed under-passage of that component.
    """

    n_arcs: tuple
    offsets: tuple
    crossings: dict
    arc_component: tuple

    @property
    def total_arcs(self):
        return len(self.arc_component)

    def base_arc(self, i):
        return self.offsets[i]

    def arc_name(self, arc):
        i = self.arc_component[arc]
        return (i, arc - self.offsets[i])

    def under_sequence(self, i):
        """Crossing records met walking component i from its base arc, in order."""
        recs = [r for r in self.crossings.values() if r.under_component == i]
        base = self.offsets[i]
        return sorted(recs, key=lambda r: r.under_in - base)


def arc_table(d: LinkDiagram) -> ArcTable:
    n_arcs, offsets, arc_component = [], [], []
    over_at, under_at = {}, {}
    for ci, comp in enumerate(d.components):
        unders = [k for k, p in enumerate(comp) if not p.is_over]
        under_rank = {k: m for m, k in enumerate(unders)}
        n = max(len(unders), 1)
        offsets.append(len(arc_component))
        n_arcs.append(n)
        arc_component.extend([ci] * n)
        base = offsets[-1]
        # arc m runs from after unders[m] up to unders[m+1]; overs before
        # unders[0] wrap onto the last arc
        current = n - 1
        for k, p in enumerate(comp):
            if p.is_over:
                over_at[p.crossing] = (base + current, ci)
            else:
                m = under_rank[k]
                under_at[p.crossing] = (base + (m - 1) % n, base + m, ci, p.sign)
                current = m
    crossings = {}
    for label, (u_in, u_out, ci, sign) in sorted(under_at.items()):
        over_arc, oc = over_at[label]
        crossings[label] = CrossingRecord(over_arc, u_in, u_out, sign, oc, ci)
    return ArcTable(tuple(n_arcs), tuple(offsets), crossings, tuple(arc_component))


def _fresh(d):
    labels = d.crossings
    return labels[-1] + 1 if labels else 1


def _check_site(d, component, position):
    if not 0 <= component < d.mu:
        raise IndexError(f"component {component} out of range (mu={d.mu})")
    if not 0 <= position <= len(d.components[component]):
        raise IndexError(f"position {position} out of range on component {component}")


def r1_insert(d: LinkDiagram, component: int, position: int, sign: int,
              order: str = "OU") -> LinkDiagram:
    """Add a kink: an adjacent ``O c``/``U c`` pair with a fresh label.

    ``component`` is 0-based; ``position`` is the insertion offset in the
    component's passage list.
    """
    _check_site(d, component, position)
    if order not in ("OU", "UO"):
        raise ValueError("order must be 'OU' or 'UO'")
    c = _fresh(d)
    pair = [Passage(c, order[0], sign), Passage(c, order[1], sign)]
    comps = [list(x) for x in d.components]
    comps[component][position:position] = pair
    return LinkDiagram(tuple(map(tuple, comps)))


def r2_insert(d: LinkDiagram, site1, site2, sign: int) -> LinkDiagram:
    """Push one strand over another, creating a bigon with fresh labels a, b.

    ``[O a s, O b -s]`` goes in at site1 and ``[U b -s, U a s]`` at site2;
    sites are ``(component, position)`` with 0-based components.
    """
    (c1, p1), (c2, p2) = site1, site2
    _check_site(d, c1, p1)
    _check_site(d, c2, p2)
    if c1 == c2 and p1 == p2:
        raise ValueError("same-component sites need distinct positions")
    a = _fresh(d)
    b = a + 1
    over_pair = [Passage(a, OVER, sign), Passage(b, OVER, -sign)]
    under_pair = [Passage(b, UNDER, -sign), Passage(a, UNDER, sign)]
    comps = [list(x) for x in d.components]
    inserts = [(c1, p1, over_pair), (c2, p2, under_pair)]
    # larger offset first so the smaller one stays valid
    inserts.sort(key=lambda t: (t[0], t[1]), reverse=True)
    for c, p, pair in inserts:
        comps[c][p:p] = pair
    return LinkDiagram(tuple(map(tuple, comps)))


def fuzz(d: LinkDiagram, seed: int, steps: int, log=None) -> LinkDiagram:
    """Apply ``steps`` random R1/R2 insertions, reproducibly from ``seed``.

    If ``log`` is a list, each applied move is appended to it as
    ``("r1", component, position, sign, order)`` or ``("r2", site1, site2, sign)``.
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    rng = random.Random(seed)
    for _ in range(steps):
        sign = rng.choice((1, -1))
        if rng.random() < 0.5:
            c = rng.randrange(d.mu)
            p = rng.randrange(len(d.components[c]) + 1)
            order = rng.choice(("OU", "UO"))
            d = r1_insert(d, c, p, sign, order)
            if log is not None:
                log.append(("r1", c, p, sign, order))
        else:
            c1 = rng.randrange(d.mu)
            c2 = rng.randrange(d.mu)
            p1 = rng.randrange(len(d.components[c1]) + 1)
            p2 = rng.randrange(len(d.components[c2]) + 1)
            if c1 == c2 and p1 == p2:
                p2 = (p2 + 1) % (len(d.components[c2]) + 1)
                if p1 == p2:
                    # single-gap component: fall back to a kink
                    d = r1_insert(d, c1, p1, sign, "OU")
                    if log is not None:
                        log.append(("r1", c1, p1, sign, "OU"))
                    continue
            d = r2_insert(d, (c1, p1), (c2, p2), sign)
            if log is not None:
                log.append(("r2", (c1, p1), (c2, p2), sign))
    return d


def from_components(components: Iterable[Sequence[str]]) -> LinkDiagram:
    """Build a diagram from per-component token lists, e.g. ``[["O1+", "U1+"]]``."""
    return parse(" / ".join(" ".join(c) if c else "*" for c in components))
