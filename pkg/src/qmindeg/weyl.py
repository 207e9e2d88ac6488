"""
Symmetric and hyperoctahedral Weyl groups acting on one-line permutations.

Families B and C share the hyperoctahedral group, embedded in the symmetric
group on ``2n`` letters as the permutations with ``w(bar i) = bar(w(i))``.
Everything here is deliberately naive: it serves as the independent oracle
for the closed-form operators in :mod:`qmindeg.curves`.
"""

from __future__ import annotations

from typing import Sequence

from .models import Space, validate_window

__all__ = [
    "is_full_permutation", "identity", "longest", "lift", "apply_simple",
    "is_ascent", "length", "hecke_mul", "z_word", "reflection_t1_plus_t2",
    "min_coset_rep", "curve_nbhd_oracle", "oracle_chain", "bruhat_leq",
    "dual_window", "codimension",
]


def is_full_permutation(w: Sequence[int], space: Space) -> bool:
    N = space.letters
    if sorted(w) != list(range(1, N + 1)):
        return False
    if space.family == "A":
        return True
    return all(w[N - 1 - i] == N + 1 - w[i] for i in range(N))


def identity(space: Space) -> tuple[int, ...]:
    return tuple(range(1, space.letters + 1))


def longest(space: Space) -> tuple[int, ...]:
    return tuple(range(space.letters, 0, -1))


def lift(u: Sequence[int], space: Space) -> tuple[int, ...]:
    """Minimal full representative of the coset with window ``u``.

    Positions k+1..n hold the unused (unbarred) letters in increasing order;
    in families B/C the second half is forced by mirror symmetry.
    """
    u = validate_window(u, space)
    if space.family == "A":
        rest = [x for x in range(1, space.n + 1) if x not in u]
        return u + tuple(rest)
    used = {space.absolute(x) for x in u}
    first = list(u) + [x for x in range(1, space.n + 1) if x not in used]
    return tuple(first) + tuple(space.bar(x) for x in reversed(first))


def _check_index(i: int, space: Space):
    if not 1 <= i <= space.rank:
        raise IndexError(f"simple reflection s_{i} out of range 1..{space.rank}")


def apply_simple(w: Sequence[int], i: int, space: Space) -> tuple[int, ...]:
    """Right multiplication by the simple reflection s_i (acts on positions)."""
    _check_index(i, space)
    w = list(w)
    N = space.letters
    if space.family == "A" or i < space.n:
        w[i - 1], w[i] = w[i], w[i - 1]
        if space.family != "A":
            w[N - i - 1], w[N - i] = w[N - i], w[N - i - 1]
    else:
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def is_ascent(w: Sequence[int], i: int, space: Space) -> bool:
    """True when l(w s_i) > l(w)."""
    return w[i - 1] < w[i]


def length(w: Sequence[int], space: Space) -> int:
    """Coxeter length, by stripping descents until the identity is reached."""
    w = tuple(w)
    steps = 0
    while True:
        for i in range(1, space.rank + 1):
            if not is_ascent(w, i, space):
                w = apply_simple(w, i, space)
                steps += 1
                break
        else:
            return steps


def hecke_mul(w: Sequence[int], word: Sequence[int], space: Space) -> tuple[int, ...]:
    """Hecke (0-Hecke monoid) product ``w . s_{i1} . s_{i2} ...``."""
    w = tuple(w)
    for i in word:
        _check_index(i, space)
        if is_ascent(w, i, space):
            w = apply_simple(w, i, space)
    return w


def _z_type_a(n: int) -> list[int]:
    return list(range(1, n)) + list(range(n - 2, 0, -1))


def _z_type_c(n: int) -> list[int]:
    return list(range(1, n + 1)) + list(range(n - 1, 0, -1))


def reflection_t1_plus_t2(n: int, start: int = 1) -> list[int]:
    """Reduced word ``(s_{j+1} s_j) ... (s_n s_{n-1}) s_n (s_{n-2} s_{n-1}) ... (s_j s_{j+1})``
    for ``j = start``; with ``start = 1`` this is the reflection in t1 + t2."""
    word = []
    for j in range(start, n):
        word += [j + 1, j]
    word.append(n)
    for j in range(n - 2, start - 1, -1):
        word += [j, j + 1]
    return word


def _z1_type_b(n: int, k: int) -> list[int]:
    # reflection in t1 + t_{k+1}
    head = list(range(1, k))
    return head + reflection_t1_plus_t2(n, start=k) + head[::-1]


def z_word(space: Space, d: int) -> list[int]:
    """Explicit word whose Hecke action gives the degree-d curve neighborhood."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0:
        return []
    n, k = space.n, space.k
    if space.family == "A":
        return _z_type_a(n) * d
    if space.family == "C":
        return _z_type_c(n) * d
    z2 = reflection_t1_plus_t2(n)
    if k == 1 or k == n:
        # t1 + t2 already has degree 1 here
        return z2 * d
    if d % 2 == 0:
        return z2 * (d // 2)
    return z2 * ((d - 1) // 2) + _z1_type_b(n, k)


def min_coset_rep(w: Sequence[int], space: Space) -> tuple[int, ...]:
    return tuple(sorted(w[: space.k]))


def curve_nbhd_oracle(u: Sequence[int], d: int, space: Space) -> tuple[int, ...]:
    """Window of ``lift(u) . z_d`` modulo W_P."""
    return min_coset_rep(hecke_mul(lift(u, space), z_word(space, d), space), space)


def oracle_chain(u: Sequence[int], space: Space, dmax: int) -> list[tuple[int, ...]]:
    """``[curve_nbhd_oracle(u, d) for d in 0..dmax]``, sharing word prefixes.

    ``z_word(space, d)`` always extends ``z_word(space, d')`` for the largest
    d' < d of the same shape (d-1 in types A/C; d-1 or d-2 in type B), and the
    Hecke product folds left to right, so full elements can be reused.
    """
    full = {0: lift(u, space)}
    out = [min_coset_rep(full[0], space)]
    for d in range(1, dmax + 1):
        prev = d - 1
        if space.family == "B" and 1 < space.k < space.n and d % 2 == 0:
            prev = d - 2
        extra = z_word(space, d)[len(z_word(space, prev)):]
        assert z_word(space, prev) + extra == z_word(space, d)
        full[d] = hecke_mul(full[prev], extra, space)
        out.append(min_coset_rep(full[d], space))
    return out


def bruhat_leq(v: Sequence[int], u: Sequence[int]) -> bool:
    """Bruhat order on W^P, compared letter by letter on sorted windows."""
    if len(v) != len(u):
        raise ValueError("windows come from different spaces")
    return all(a <= b for a, b in zip(v, u))


def dual_window(u: Sequence[int], space: Space) -> tuple[int, ...]:
    """Window of the coset ``w0 u W_P`` (left multiplication by the longest element)."""
    return tuple(sorted(space.bar(x) for x in u))


def codimension(u: Sequence[int], space: Space) -> int:
    """Codimension of the Schubert variety with window ``u``: l(w0 u) on W^P."""
    return length(lift(dual_window(u, space), space), space)
