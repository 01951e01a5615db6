import random

import pytest

from radius_stepping import GeneratorSpec, WeightSpec, generate


def random_graph(seed, n_lo=2, n_hi=150, m_cap=600, w_lo=1, w_hi=100):
    """One seeded random connected weighted graph plus a source vertex."""
    rng = random.Random(seed)
    n = rng.randint(n_lo, n_hi)
    mmax = min(m_cap, n * (n - 1) // 2)
    m = rng.randint(max(0, n - 1), mmax)
    spec = GeneratorSpec(
        kind="random",
        n=n,
        m=m,
        seed=rng.randrange(2**30),
        weights=WeightSpec(w_lo, w_hi, seed=rng.randrange(2**30)),
    )
    return generate(spec), rng.randrange(n)


def corpus(count, seed, **kw):
    return [random_graph(1000 * seed + i, **kw) for i in range(count)]


@pytest.fixture(scope="session")
def acceptance_corpus():
    """The 200 seeded graphs shared by the oracle/equivalence/budget criteria."""
    return corpus(200, seed=20240501)
