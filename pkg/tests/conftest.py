from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import HealthCheck, assume, settings
from hypothesis import strategies as st

from adjcross.corpus import fixtures
from adjcross.geometry import general_position_check, make_input

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("default")


@st.composite
def geometric_inputs(draw, min_n=3, max_n=9, box=24):
    """Random straight-line drawings in general position."""
    n = draw(st.integers(min_n, max_n))
    pts = draw(
        st.lists(
            st.tuples(st.integers(0, box), st.integers(0, box)),
            min_size=n,
            max_size=n,
            unique=True,
        )
    )
    pairs = list(combinations(range(n), 2))
    segs = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=min(len(pairs), 3 * n), unique=True))
    g = make_input(pts, sorted(segs))
    assume(general_position_check(g).ok)
    return g


@pytest.fixture(scope="session")
def k5():
    return fixtures.build("k5-convex")


@pytest.fixture(scope="session")
def dodeca():
    return fixtures.build("pentagram-dodecahedron")


@pytest.fixture(scope="session")
def tri():
    return fixtures.build("triangle")
