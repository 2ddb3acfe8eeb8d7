import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from linkquandle import corpus  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def hopf():
    return corpus.get("hopf")


@pytest.fixture
def trefoil():
    return corpus.get("trefoil")


@pytest.fixture
def virtual_hopf():
    return corpus.get("virtual-hopf")


def all_corpus():
    """Every named and generated diagram used in the invariance suites."""
    out = {name: corpus.get(name) for name in corpus.CODES}
    out.update(corpus.two_component_corpus())
    out["chain-3"] = corpus.chain((1, -1))
    out["chain-4"] = corpus.chain((1, 1, -1))
    out["four-cycle"] = corpus.four_cycle()
    return out


def random_family(rng, m=None, max_index=8):
    """A random finite-index subgroup family with every index <= max_index."""
    from linkquandle import SubgroupFamily, lattice

    if m is None:
        m = rng.randint(1, 3)
    subs = []
    for b in range(m):
        while True:
            gens = [[int(k == b) for k in range(m)]]
            gens += [[rng.randint(1, 4) * (k == c) for k in range(m)] for c in range(m)]
            gens += [[rng.randint(-3, 3) for _ in range(m)] for _ in range(rng.randint(0, 2))]
            s = lattice.hnf(gens, m)
            if lattice.index(s) <= max_index:
                subs.append(s)
                break
    return SubgroupFamily(m, tuple(subs))
