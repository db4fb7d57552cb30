import random

import pytest
from hypothesis import HealthCheck, settings

# Closure-based word problems have heavy-tailed runtimes, so per-example
# deadlines are off; example counts are kept moderate instead.
settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def random_diagram(rng: random.Random, max_rank: int = 5):
    """A random labelled diagram: labels in {2,3,4,5,6,inf}, where 2 means
    the edge is absent."""
    from artin.diagram import INF, CoxeterDiagram

    n = rng.randint(1, max_rank)
    names = [f"s{i}" for i in range(1, n + 1)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            m = rng.choice([2, 3, 4, 5, 6, INF])
            if m != 2:
                edges.append((names[i], names[j], m))
    return CoxeterDiagram(tuple(names), tuple(edges))


@pytest.fixture
def rng():
    return random.Random(20260819)
