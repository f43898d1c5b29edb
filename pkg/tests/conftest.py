import random

import pytest


def rand_str(rng, n, alphabet="abc"):
    return "".join(rng.choice(alphabet) for _ in range(n))


def noisy_supersequence(rng, inputs, alphabet="abc", noise=0.3):
    """Random interleaving of ``inputs`` with extra symbols sprinkled in."""
    cursors = [0] * len(inputs)
    out = []
    live = [i for i, s in enumerate(inputs) if s]
    while live:
        if rng.random() < noise:
            out.append(rng.choice(alphabet))
        i = rng.choice(live)
        out.append(inputs[i][cursors[i]])
        cursors[i] += 1
        if cursors[i] == len(inputs[i]):
            live.remove(i)
    if rng.random() < noise:
        out.append(rng.choice(alphabet))
    return "".join(out)


@pytest.fixture
def rng():
    return random.Random(20240611)
