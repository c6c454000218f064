import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from monostab.core import MonomialIdeal, VariableContext  # noqa: E402

XY = VariableContext(("x", "y"))
XYZ = VariableContext(("x", "y", "z"))


def ctx_for(n):
    return VariableContext.indexed("x", 1, n)


@st.composite
def small_ideals(draw, max_vars=4, max_exp=3, max_gens=6, proper=True):
    """Random monomial ideals; proper nonzero unless ``proper`` is false."""
    n = draw(st.integers(1, max_vars))
    vec = st.tuples(*[st.integers(0, max_exp)] * n)
    gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
    if proper:
        gens = [g for g in gens if any(g)] or [(1,) + (0,) * (n - 1)]
    return MonomialIdeal(ctx_for(n), gens)


@pytest.fixture
def xy():
    return XY
