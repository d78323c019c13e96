import os
import random
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tspread.fuzz import FuzzBounds, random_instance
from tspread.hypergraph import SpreadInstance
from tspread.monomials import Monomial, MonomialIdeal

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

GOLDENS = Path(__file__).resolve().parent.parent / "goldens"


@pytest.fixture
def goldens() -> Path:
    return GOLDENS


def monomials(n_vars: int = 4, max_exp: int = 3):
    return st.lists(st.integers(0, max_exp), min_size=n_vars, max_size=n_vars).map(
        lambda v: Monomial.from_vector(v, range(1, n_vars + 1)))


def ideals(n_vars: int = 4, max_exp: int = 3, max_gens: int = 5, squarefree: bool = False):
    mono = monomials(n_vars, 1 if squarefree else max_exp)
    return (st.lists(mono.filter(lambda m: not m.is_one()), min_size=1, max_size=max_gens)
            .map(MonomialIdeal))


@st.composite
def spread_instances(draw, max_vertices: int = 10) -> SpreadInstance:
    seed = draw(st.integers(0, 2**32 - 1))
    return random_instance(random.Random(seed), FuzzBounds(max_vertices=max_vertices))
