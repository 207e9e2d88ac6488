"""
Degree-d curve neighborhood operators ``delta -> delta^d`` in every model.

Each operator is a closed-form combinatorial rule; none of them calls into
:mod:`qmindeg.weyl`. Degree 0 is the identity everywhere.
"""

from __future__ import annotations

from typing import Sequence

from . import models
from .models import (
    KSTRICT, PARTITION, PPRIME, WINDOW, WORD,
    Space, ell, ell1, validate_kstrict, validate_pprime,
    validate_window, wingtip, boundary_word,
)

__all__ = [
    "InconsistentBranch",
    "step_a_partition", "nbhd_a_partition", "step_a_window", "nbhd_a_window",
    "step_a_word", "nbhd_a_word",
    "step_c_kstrict", "nbhd_c_kstrict", "cominuscule_step_c", "cominuscule_step_b",
    "step_b_kstrict_1", "nbhd_b_kstrict",
    "step_c_pprime", "nbhd_c_pprime", "step_b_pprime_1", "nbhd_b_pprime",
    "step_c_window", "nbhd_c_window", "step_b_window_1", "nbhd_b_window",
    "nbhd", "chain",
]


class InconsistentBranch(AssertionError):
    """A branch guard admitted an input its formula cannot handle."""


def _check_degree(d: int):
    if d < 0:
        raise ValueError(f"degree must be nonnegative, got {d}")


def _iterate(step, value, d: int):
    _check_degree(d)
    for _ in range(d):
        value = step(value)
    return value


def _shift_down(parts: Sequence[int], k: int) -> tuple[int, ...]:
    """(lam_2 - 1, ..., lam_k - 1, 0) with negatives clamped to 0."""
    return tuple(max(p - 1, 0) for p in parts[1:]) + (0,) * (k - len(parts) + 1)


# -- type A -----------------------------------------------------------------

def step_a_partition(lam: Sequence[int]) -> tuple[int, ...]:
    """
    >>> step_a_partition((11, 11, 11, 4, 4))
    (10, 10, 3, 3, 0)
    """
    return _shift_down(tuple(lam), len(lam))


def nbhd_a_partition(lam: Sequence[int], d: int) -> tuple[int, ...]:
    return _iterate(step_a_partition, tuple(lam), d)


def step_a_window(u: Sequence[int], space: Space) -> tuple[int, ...]:
    u = validate_window(u, space)
    n, k = space.n, space.k
    if u[-1] < n:
        return u[1:] + (n,)
    # maximal suffix n - j0, ..., n - 1, n
    j0 = 0
    while j0 + 1 < k and u[k - 2 - j0] == n - j0 - 1:
        j0 += 1
    if j0 == k - 1:
        # the window is the whole top block: nothing is left to move
        return u
    return u[1:k - j0 - 1] + (n - j0 - 1,) + u[k - j0 - 1:]


def nbhd_a_window(u: Sequence[int], d: int, space: Space) -> tuple[int, ...]:
    return _iterate(lambda w: step_a_window(w, space), tuple(u), d)


def step_a_word(word: str) -> str:
    """Delete the first 1, turn every ``10`` into ``01``, append a 1.

    >>> step_a_word("001101010000")
    '000101010001'
    """
    first = word.find("1")
    if first < 0:
        return word
    rest = word[:first] + word[first + 1:]
    # every maximal factor 1^a 0 becomes 0 1^a, i.e. each 0 after a 1 jumps left
    out = []
    ones = 0
    for b in rest:
        if b == "1":
            ones += 1
        else:
            out.append("0")
            if ones:
                out[-1:] = ["0"] + ["1"] * ones
                ones = 0
    out.extend("1" * ones)
    return "".join(out) + "1"


def nbhd_a_word(word: str, d: int) -> str:
    return _iterate(step_a_word, word, d)


# -- type C -----------------------------------------------------------------

def _c_threshold(lam: Sequence[int], space: Space) -> int | None:
    """Smallest 1-based j >= 2 with lam_1 + lam_j <= 2(n-k) + j - 1."""
    n, k = space.n, space.k
    for j in range(2, k + 1):
        if lam[0] + lam[j - 1] <= 2 * (n - k) + j - 1:
            return j
    return None


def step_c_kstrict(lam: Sequence[int], space: Space) -> tuple[int, ...]:
    lam = validate_kstrict(lam, space)
    j = _c_threshold(lam, space)
    if j is None:
        return lam[1:] + (0,)
    return lam[1:j - 1] + tuple(max(p - 1, 0) for p in lam[j - 1:]) + (0,)


def nbhd_c_kstrict(lam: Sequence[int], d: int, space: Space) -> tuple[int, ...]:
    return _iterate(lambda x: step_c_kstrict(x, space), tuple(lam), d)


def cominuscule_step_c(lam: Sequence[int], d: int) -> tuple[int, ...]:
    """Lagrangian Grassmannian: drop the first d parts."""
    _check_degree(d)
    lam = tuple(lam)
    return lam[d:] + (0,) * min(d, len(lam))


def cominuscule_step_b(lam: Sequence[int], d: int) -> tuple[int, ...]:
    """Maximal odd orthogonal Grassmannian: drop the first 2d parts."""
    _check_degree(d)
    lam = tuple(lam)
    return lam[2 * d:] + (0,) * min(2 * d, len(lam))


def step_c_pprime(mu: Sequence[int]) -> tuple[int, ...]:
    return step_a_partition(mu)


def nbhd_c_pprime(mu: Sequence[int], d: int) -> tuple[int, ...]:
    return nbhd_a_partition(mu, d)


def step_c_window(u: Sequence[int], space: Space) -> tuple[int, ...]:
    u = validate_window(u, space)
    k, top = space.k, space.letters
    if u[-1] < top:
        return u[1:] + (top,)
    # maximal suffix bar(j0+1), ..., bar(2), bar(1)
    j0 = 0
    while j0 + 1 < k and u[k - 2 - j0] == top - j0 - 1:
        j0 += 1
    if j0 == k - 1:
        return u
    return u[1:k - j0 - 1] + (space.bar(j0 + 2),) + u[k - j0 - 1:]


def nbhd_c_window(u: Sequence[int], d: int, space: Space) -> tuple[int, ...]:
    return _iterate(lambda w: step_c_window(w, space), tuple(u), d)


# -- type B -----------------------------------------------------------------

def _run(value: int, count: int, what: str) -> tuple[int, ...]:
    if count < 0:
        raise InconsistentBranch(f"negative run length {count} for the {what} block")
    return (value,) * count


def step_b_kstrict_1(lam: Sequence[int], space: Space) -> tuple[int, ...]:
    """Degree-one neighborhood on (n-k)-strict partitions for OG(k, 2n+1), 2 <= k <= n-1."""
    if not 2 <= space.k <= space.n - 1:
        raise ValueError(f"step_b_kstrict_1 needs 2 <= k <= n-1, got {space}")
    lam = validate_kstrict(lam, space)
    n, k = space.n, space.k
    lead = lam[0]
    if not lead - ell(lam) >= 2 * (n - k):
        return step_c_kstrict(lam, space)
    zeros = _run(0, 2 * n - k - lead, "zero")
    j = _c_threshold(lam, space)
    if j is None:
        top = ell(lam)
        body = lam[1:top]
    else:
        top = ell1(lam)
        if top >= j:
            body = lam[1:j - 1] + tuple(p - 1 for p in lam[j - 1:top])
        else:
            body = lam[1:top]
    ones = _run(1, 1 + 2 * k + lead - 2 * n - top, "one")
    out = body + ones + zeros
    if len(out) != k:
        raise InconsistentBranch(f"{lam} produced {out}, which does not have {k} parts")
    return out


def nbhd_b_kstrict(lam: Sequence[int], d: int, space: Space) -> tuple[int, ...]:
    _check_degree(d)
    lam = validate_kstrict(lam, space)
    if d == 0:
        return lam
    n, k = space.n, space.k
    if k == n:
        return cominuscule_step_b(lam, d)
    if k == 1:
        return (1,) if d == 1 and lam == (2 * n - 1,) else (0,)
    if d == 1:
        return step_b_kstrict_1(lam, space)
    if d % 2 == 0:
        return nbhd_c_kstrict(lam, d, space)
    return step_b_kstrict_1(nbhd_b_kstrict(lam, d - 1, space), space)


def step_b_pprime_1(mu: Sequence[int], space: Space) -> tuple[int, ...]:
    """Degree-one neighborhood on P'(k,2n) for OG(k, 2n+1), k < n.

    With m the wingtip of ``mu``, the boundary step at position bar(m)
    decides which row of the shifted diagram gets rebuilt.
    """
    if not space.k < space.n:
        raise ValueError(f"step_b_pprime_1 needs k < n, got {space}")
    mu = validate_pprime(mu, space)
    k, N = space.k, space.letters
    if k == 1:
        return (1,) if mu == (N - 1,) else (0,)
    m = wingtip(mu, space)
    if m == 0:
        # no step bar(0); behaves as a down step closing a virtual row k+1
        return _shift_down(mu, k)
    word = boundary_word(mu, space)
    pos = space.bar(m)
    row = word[:pos].count("1")  # rows completed once step bar(m) is taken
    if word.find("1") + 1 >= pos:
        # no down step before bar(m): mu is the empty diagram, a fixed point
        return mu
    if word[pos - 1] == "1":
        i = row
        out = tuple(p - 1 for p in mu[1:i - 1]) + (mu[i - 1], mu[i - 1]) + mu[i:]
    else:
        i = row
        column = (N - k) - (pos - 1 - i)  # x-coordinate before this left step
        out = tuple(p - 1 for p in mu[1:i]) + (column,) + mu[i:]
    if len(out) != k or any(p < 0 for p in out):
        raise InconsistentBranch(f"{mu} produced {out}")
    return out


def nbhd_b_pprime(mu: Sequence[int], d: int, space: Space) -> tuple[int, ...]:
    _check_degree(d)
    mu = validate_pprime(mu, space)
    if d == 0:
        return mu
    if space.k == 1:
        return step_b_pprime_1(mu, space) if d == 1 else (0,)
    if d == 1:
        return step_b_pprime_1(mu, space)
    if d % 2 == 0:
        return nbhd_c_pprime(mu, d)
    return step_b_pprime_1(nbhd_b_pprime(mu, d - 1, space), space)


def step_b_window_1(u: Sequence[int], space: Space) -> tuple[int, ...]:
    if not space.k < space.n:
        raise ValueError(f"step_b_window_1 needs k < n, got {space}")
    u = validate_window(u, space)
    n, k = space.n, space.k
    if k == 1:
        return (space.bar(2),) if u == (1,) else (space.bar(1),)
    used = {space.absolute(x) for x in u}
    J = min(set(range(1, n + 1)) - used)
    barJ = space.bar(J)
    j0 = next((j for j in range(k) if u[j] > barJ), k)
    if j0 == 0:
        # every letter is barred: u is the top coset, fixed by all neighborhoods
        return u
    return u[1:j0] + (barJ,) + u[j0:]


def nbhd_b_window(u: Sequence[int], d: int, space: Space) -> tuple[int, ...]:
    _check_degree(d)
    u = validate_window(u, space)
    if d == 0:
        return u
    if space.k == 1:
        return step_b_window_1(u, space) if d == 1 else (space.bar(1),)
    if d == 1:
        return step_b_window_1(u, space)
    if d % 2 == 0:
        return nbhd_c_window(u, d, space)
    return step_b_window_1(nbhd_b_window(u, d - 1, space), space)


# -- dispatcher -------------------------------------------------------------

def nbhd(model: str, space: Space, delta, d: int):
    """Index of the degree-d curve neighborhood of the Schubert class ``delta``."""
    _check_degree(d)
    model = models._canonical_model(model, space)
    delta = models.validate(model, delta, space)
    fam = space.family
    if fam == "A":
        if model == PARTITION:
            return nbhd_a_partition(delta, d)
        if model == WINDOW:
            return nbhd_a_window(delta, d, space)
        return nbhd_a_word(delta, d)
    if fam == "B" and space.k == space.n:
        # only the (n-k)-strict rule exists here; other models go through it
        lam = models.convert(model, KSTRICT, delta, space)
        return models.convert(KSTRICT, model, cominuscule_step_b(lam, d), space)
    if model == WORD:
        u = models.word_to_window(delta, space)
        return models.window_to_word(nbhd(WINDOW, space, u, d), space)
    if fam == "C":
        if model == KSTRICT:
            return nbhd_c_kstrict(delta, d, space)
        if model == PPRIME:
            return nbhd_c_pprime(delta, d)
        return nbhd_c_window(delta, d, space)
    if model == KSTRICT:
        return nbhd_b_kstrict(delta, d, space)
    if model == PPRIME:
        return nbhd_b_pprime(delta, d, space)
    return nbhd_b_window(delta, d, space)


def chain(model: str, space: Space, delta, dmax: int) -> list:
    """``[delta^0, delta^1, ..., delta^dmax]``."""
    return [nbhd(model, space, delta, d) for d in range(dmax + 1)]
