import itertools

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hyperdeg import Hypergraph, WeightVector

settings.register_profile(
    "workbench",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("workbench")


def all_triples(n):
    return list(itertools.combinations(range(n), 3))


@st.composite
def hypergraphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    universe = all_triples(n)
    if not universe:
        return Hypergraph(n, ())
    edges = draw(st.sets(st.sampled_from(universe)))
    return Hypergraph(n, tuple(sorted(edges)))


@st.composite
def weight_vectors(draw, min_n=0, max_n=8, lo=-30, hi=30):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    vals = draw(st.lists(st.integers(lo, hi), min_size=n, max_size=n))
    return WeightVector(tuple(vals))
