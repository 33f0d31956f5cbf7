import random

import pytest

from quadsums import QuadFunc, build_field_ctx


def random_quadfunc(rng: random.Random, p: int, max_terms: int = 3, max_alpha: int = 3) -> QuadFunc:
    """Random f with distinct exponents <= max_alpha and nonzero top term."""
    k = rng.randint(1, max_terms)
    alphas = sorted(rng.sample(range(max_alpha + 1), k))
    coeffs = [rng.randrange(1, p) if i == k - 1 else rng.randrange(p) for i in range(k)]
    pairs = [(c, a) for c, a in zip(coeffs, alphas) if c]
    if not pairs:
        pairs = [(1, alphas[-1])]
    if pairs[-1][1] != alphas[-1]:
        pairs.append((rng.randrange(1, p), alphas[-1]))
    return QuadFunc.from_terms(build_field_ctx(p, 1), pairs)


@pytest.fixture
def rng():
    return random.Random(20260810)
