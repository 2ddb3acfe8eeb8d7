"""Named Gauss codes and small generators used by the tests and demos.

``CLASSICAL`` marks entries asserted to be classical (planar) diagrams;
nothing here checks planarity.
"""

from __future__ import annotations

from .diagram import LinkDiagram, parse

CODES = {
    "unknot": "*",
    "kinked-unknot": "O1+ U1+",
    "trefoil": "O1+ U2+ O3+ U1+ O2+ U3+",
    "figure-eight": "O1+ U2- O3- U1+ O4+ U3- O2- U4+",
    "virtual-trefoil": "O1- O2- U1- U2-",
    "hopf": "O1+ U2+ / U1+ O2+",
    "hopf-neg": "O1- U2- / U1- O2-",
    "virtual-hopf": "O1+ / U1+",
    "unlink2": "* / *",
    "unlink3": "* / * / *",
    # trefoil with an R1 kink; Hopf link padded by an R2 bigon
    "kinked-trefoil": "O1+ U2+ O3+ U1+ O4- U4- O2+ U3+",
    "r2-hopf": "O1+ U2+ O3+ O4- / U1+ U4- U3+ O2+",
}

CLASSICAL = {"unknot", "kinked-unknot", "trefoil", "figure-eight", "hopf", "hopf-neg",
             "unlink2", "unlink3", "kinked-trefoil", "r2-hopf"}

EQUIVALENT_PAIRS = [("trefoil", "kinked-trefoil"), ("hopf", "r2-hopf"),
                    ("unknot", "kinked-unknot")]

KNOTS = ["trefoil", "figure-eight", "virtual-trefoil"]


def get(name) -> LinkDiagram:
    return parse(CODES[name])


def torus_2(k, sign=1) -> LinkDiagram:
    """Closure of the 2-braid sigma^(2k): a 2-component link with linking number sign*k."""
    s = "+" if sign > 0 else "-"
    a = " ".join(f"{'O' if c % 2 else 'U'}{c}{s}" for c in range(1, 2 * k + 1))
    b = " ".join(f"{'U' if c % 2 else 'O'}{c}{s}" for c in range(1, 2 * k + 1))
    return parse(f"{a} / {b}")


def virtual_two(l12, l21) -> LinkDiagram:
    """A 2-component virtual link with K1 over K2 summing to l12 and K2 over K1 to l21."""
    first, second = [], []
    c = 0
    for count, (top, bottom) in ((l12, (first, second)), (l21, (second, first))):
        s = "+" if count > 0 else "-"
        for _ in range(abs(count)):
            c += 1
            top.append(f"O{c}{s}")
            bottom.append(f"U{c}{s}")
    return parse(" / ".join(" ".join(x) if x else "*" for x in (first, second)))


def clasped(mu, pairs) -> LinkDiagram:
    """Components 0..mu-1 joined by Hopf clasps; ``pairs`` maps (i, j) to a sign.

    Each clasp contributes one crossing with i over j and one with j over i,
    both of the given sign, so the linking matrix is symmetric.
    """
    comps = [[] for _ in range(mu)]
    c = 0
    for (i, j), sign in sorted(pairs.items()):
        s = "+" if sign > 0 else "-"
        a, b = c + 1, c + 2
        c += 2
        comps[i] += [f"O{a}{s}", f"U{b}{s}"]
        comps[j] += [f"U{a}{s}", f"O{b}{s}"]
    return parse(" / ".join(" ".join(x) if x else "*" for x in comps))


def chain(signs) -> LinkDiagram:
    """Connected sum of Hopf links: consecutive components linked with the given signs."""
    return clasped(len(signs) + 1, {(i, i + 1): s for i, s in enumerate(signs)})


def four_cycle(signs=(1, 1, 1, 1)) -> LinkDiagram:
    """Four components linked along the cycle 0-1-3-2-0 (pairs {0,1},{0,2},{1,3},{2,3})."""
    return clasped(4, dict(zip([(0, 1), (0, 2), (1, 3), (2, 3)], signs)))


def two_component_corpus():
    """Two-component diagrams covering all divisibility patterns of (l12, l21)."""
    out = {name: get(name) for name in ("hopf", "hopf-neg", "virtual-hopf", "unlink2", "r2-hopf")}
    for k in (2, 3, 4, 6):
        out[f"torus-2-{2 * k}"] = torus_2(k)
    out["torus-2-4-neg"] = torus_2(2, -1)
    for a, b in ((2, 0), (2, 1), (3, -1), (0, -2), (6, 4), (5, 0), (-4, 3)):
        out[f"virtual-{a}-{b}"] = virtual_two(a, b)
    return out
