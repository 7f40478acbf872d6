import random

import pytest

from multseq import RingSpec, minimalize

# Pinned family for the randomized checks: at most 3 variables, exponents at
# most 4, at most 5 generators.
FAMILY_SEED = 20240611
FAMILY_SIZE = 200
MAX_VARS = 3
MAX_EXP = 4
MAX_GENS = 5


def random_ideals(count=FAMILY_SIZE, seed=FAMILY_SEED, max_vars=MAX_VARS, max_exp=MAX_EXP, max_gens=MAX_GENS):
    """``count`` proper nonzero monomial ideals drawn reproducibly."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.randint(1, max_vars)
        ring = RingSpec.standard(d)
        pts = [tuple(rng.randint(0, max_exp) for _ in range(d)) for _ in range(rng.randint(1, max_gens))]
        A = minimalize(pts, ring)
        if A.is_proper_nonzero:
            out.append(A)
    return out


R1 = RingSpec(("x",))
R2 = RingSpec(("x", "y"))
R3 = RingSpec(("x", "y", "z"))
R4 = RingSpec(("a", "b", "c", "d"))

# the 4-variable ideal from the timing comparison
CYCLE_GENS = [(1, 2, 0, 0), (0, 1, 3, 0), (0, 0, 1, 4), (5, 0, 0, 1)]


def ideal(ring, *gens):
    return minimalize(gens, ring)


@pytest.fixture
def cycle_ideal():
    return minimalize(CYCLE_GENS, R4)
