import random

import pytest

from clusterbounds import hypergraph_product, toric_code
from clusterbounds.gf2 import BitMatrix


def make_random_matrix(rng: random.Random, rows: int, cols: int, weight: int) -> BitMatrix:
    """Random binary matrix with fixed row weight and no empty column."""
    for _ in range(10000):
        out = []
        for _ in range(rows):
            r = 0
            for j in rng.sample(range(cols), weight):
                r |= 1 << j
            out.append(r)
        if all(any((r >> j) & 1 for r in out) for j in range(cols)):
            return BitMatrix(tuple(out), cols)
    raise RuntimeError("shape cannot cover all columns")


RANDOM_CSS_SHAPES = [
    ((2, 3, 2), (2, 3, 2)),
    ((1, 3, 3), (2, 3, 2)),
    ((2, 4, 2), (1, 3, 3)),
    ((2, 2, 2), (2, 3, 2)),
    ((3, 4, 2), (1, 2, 2)),
]


def make_random_css_codes():
    rng = random.Random(20240811)
    codes = []
    for (r1, n1, w1), (r2, n2, w2) in RANDOM_CSS_SHAPES:
        h1 = make_random_matrix(rng, r1, n1, w1)
        h2 = make_random_matrix(rng, r2, n2, w2)
        codes.append(hypergraph_product(h1, h2))
    return codes


@pytest.fixture(scope="session")
def toric2():
    return toric_code(2)


@pytest.fixture(scope="session")
def toric3():
    return toric_code(3)


@pytest.fixture(scope="session")
def toric4():
    return toric_code(4)


@pytest.fixture(scope="session")
def random_css_codes():
    return make_random_css_codes()
