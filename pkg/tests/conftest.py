import pytest

from qmindeg.models import Space


def spaces_up_to(max_letters, families="ABC"):
    """Every valid space whose ambient letter count is at most ``max_letters``."""
    out = []
    if "A" in families:
        out += [Space("A", k, n) for n in range(2, max_letters + 1) for k in range(1, n)]
    for fam in "CB":
        if fam in families:
            out += [Space(fam, k, n) for n in range(1, max_letters // 2 + 1) for k in range(1, n + 1)]
    return out


@pytest.fixture
def ig_5_16():
    return Space("C", k=5, n=8)


@pytest.fixture
def og_5_17():
    return Space("B", k=5, n=8)
