import math
import random
import sys

import pytest
from hypothesis import assume, strategies as st

from splicenorm.diagram import random_diagram, seifert_diagram, splice, validate
from splicenorm import l_en, trefoil


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in mod.LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def len_diagram():
    return l_en()


@pytest.fixture(scope="session")
def trefoil_diagram():
    return trefoil()


def seeded_corpus(count, seed, *, min_r=1, **kw):
    """Deterministic corpus of random diagrams with at least ``min_r`` arrows."""
    out = []
    i = 0
    while len(out) < count:
        d = random_diagram(seed * 100_003 + i, **kw)
        i += 1
        if d.r >= min_r:
            out.append(d)
    return out


@st.composite
def seifert_pieces(draw, max_weight=5):
    sign = draw(st.sampled_from((1, -1)))
    n_arrows = draw(st.integers(1, 3))
    n_leaves = draw(st.integers(max(0, 3 - n_arrows), 4 - n_arrows))
    chosen = []

    def weight(lo):
        pool = [w for w in range(lo, max_weight + 1)
                if w == 1 or all(math.gcd(w, c) == 1 for c in chosen)]
        w = draw(st.sampled_from(pool))
        chosen.append(w)
        return w

    # 1 is always available for arrows; leaves need >= 2, so draw them first
    # from a pool that cannot run dry (at most 3 of 2, 3, 5 are needed)
    leaves = [weight(2) for _ in range(n_leaves)]
    arrows = [weight(1) for _ in range(n_arrows)]
    return sign, arrows, leaves


@st.composite
def diagrams(draw, max_nodes=3, min_r=1):
    """Splice diagrams built from Seifert pieces; shrinks towards fewer nodes
    and smaller weights."""
    k = draw(st.integers(1, max_nodes))
    d = None
    for i in range(k):
        sign, arrows, leaves = draw(seifert_pieces())
        s = seifert_diagram(sign, arrows, leaves, prefix=f"h{i}")
        if d is None:
            d = s
            continue
        if d.r + s.r - 2 < 1:
            break
        a1 = draw(st.sampled_from(d.arrows))
        a2 = draw(st.sampled_from(s.arrows))
        d = splice(d, a1, s, a2, name="drawn")
    assume(validate(d).ok and d.r >= min_r)
    return d


def random_class(rng: random.Random, r: int, bound: int = 10):
    return tuple(rng.randint(-bound, bound) for _ in range(r))
