"""
Indexing sets for Schubert classes of Gr(k,n), IG(k,2n) and OG(k,2n+1).

Four interchangeable models are supported:

* ``partition`` / ``pprime``: partitions in the k x (letters-k) box, read
  through their boundary word. In families B and C only the inclusion
  compatible subset P'(k,2n) is valid.
* ``kstrict``: (n-k)-strict partitions (families B and C only).
* ``window``: the sorted k-window ``(u(1) < ... < u(k))`` of a minimal coset
  representative. Barred letters are encoded as ``bar(i) = letters + 1 - i``
  so the order ``1 < ... < n < bar(n) < ... < bar(1)`` is integer order.
* ``word``: 01-strings of length ``letters`` with exactly k ones.

Partitions are tuples of fixed length k, windows are tuples, words are str.

>>> sp = Space("C", k=5, n=8)
>>> kstrict_to_window((5, 3, 2, 2, 1), sp)
(7, 9, 12, 13, 15)
>>> format_window((7, 9, 12, 13, 15), sp)
'7,-8,-5,-4,-2'
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

__all__ = [
    "Space", "InvalidIndex", "InvalidPartition", "InvalidKStrict",
    "InvalidWord", "InvalidWindow",
    "MODELS", "models_for",
    "validate_partition", "validate_kstrict", "validate_pprime",
    "validate_word", "validate_window",
    "is_kstrict", "is_pprime", "ell", "ell1", "wingtip", "contains",
    "transpose", "dual_partition",
    "boundary_word", "word_to_partition", "word_to_window", "window_to_word",
    "kstrict_to_window", "window_to_kstrict",
    "to_window", "from_window", "convert", "validate",
    "all_partitions", "all_pprime", "all_kstrict", "all_windows", "all_words",
    "all_indices", "coset_count",
    "parse_partition", "parse_window", "parse_word", "parse_index",
    "format_partition", "format_window", "format_index",
]


class InvalidIndex(ValueError):
    """An index is not a member of the indexing set it claims to be in."""


class InvalidPartition(InvalidIndex):
    pass


class InvalidKStrict(InvalidPartition):
    pass


class InvalidWord(InvalidIndex):
    pass


class InvalidWindow(InvalidIndex):
    pass


_FAMILY_ALIASES = {"A": "A", "GR": "A", "B": "B", "OG": "B", "C": "C", "IG": "C"}
_SUGAR = re.compile(r"^\s*(GR|IG|OG)\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$", re.IGNORECASE)


@dataclass(frozen=True)
class Space:
    """Which Grassmannian: ``family`` in {A, B, C} with parameters k and n.

    Family A is Gr(k, n); family C is IG(k, 2n); family B is OG(k, 2n+1).
    """

    family: str
    k: int
    n: int

    def __post_init__(self):
        fam = _FAMILY_ALIASES.get(str(self.family).upper())
        if fam is None:
            raise ValueError(f"unknown family {self.family!r}; use A, B or C")
        object.__setattr__(self, "family", fam)
        if self.n < 1 or self.k < 1:
            raise ValueError("k and n must be positive")
        if fam == "A" and not self.k <= self.n - 1:
            raise ValueError(f"Gr(k,n) needs 1 <= k <= n-1, got k={self.k}, n={self.n}")
        if fam in "BC" and not self.k <= self.n:
            raise ValueError(f"isotropic Grassmannian needs 1 <= k <= n, got k={self.k}, n={self.n}")

    @classmethod
    def parse(cls, text: str) -> "Space":
        """Parse ``Gr(k,n)``, ``IG(k,2n)`` or ``OG(k,2n+1)``."""
        m = _SUGAR.match(text)
        if not m:
            raise ValueError(f"cannot parse space {text!r}; expected Gr(k,n), IG(k,2n) or OG(k,2n+1)")
        kind, k, dim = m.group(1).upper(), int(m.group(2)), int(m.group(3))
        if kind == "GR":
            return cls("A", k, dim)
        if kind == "IG":
            if dim % 2:
                raise ValueError(f"IG(k,2n) needs an even ambient dimension, got {dim}")
            return cls("C", k, dim // 2)
        if dim % 2 == 0:
            raise ValueError(f"OG(k,2n+1) needs an odd ambient dimension, got {dim}")
        return cls("B", k, dim // 2)

    @property
    def letters(self) -> int:
        return self.n if self.family == "A" else 2 * self.n

    @property
    def cominuscule(self) -> bool:
        return self.family == "A" or self.k == self.n

    @property
    def rank(self) -> int:
        """Number of simple reflections of the ambient Weyl group."""
        return self.n - 1 if self.family == "A" else self.n

    def bar(self, i: int) -> int:
        return self.letters + 1 - i

    def absolute(self, i: int) -> int:
        return min(i, self.bar(i))

    def __str__(self):
        if self.family == "A":
            return f"Gr({self.k},{self.n})"
        if self.family == "C":
            return f"IG({self.k},{2 * self.n})"
        return f"OG({self.k},{2 * self.n + 1})"


KSTRICT = "kstrict"
PPRIME = "pprime"
PARTITION = "partition"
WINDOW = "window"
WORD = "word"
MODELS = (KSTRICT, PPRIME, PARTITION, WINDOW, WORD)


def models_for(space: Space) -> tuple[str, ...]:
    if space.family == "A":
        return (PARTITION, WINDOW, WORD)
    return (KSTRICT, PPRIME, WINDOW, WORD)


def _canonical_model(model: str, space: Space) -> str:
    # P'(k,2n) plays the role of P(k,n) in families B/C; accept either name
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}; use one of {', '.join(MODELS)}")
    if space.family == "A":
        if model == KSTRICT:
            raise InvalidIndex("kstrict partitions index families B and C only")
        return PARTITION if model == PPRIME else model
    return PPRIME if model == PARTITION else model


# -- partitions -------------------------------------------------------------

def validate_partition(parts: Sequence[int], space: Space) -> tuple[int, ...]:
    """Return ``parts`` padded to length k, checking the box bound."""
    parts = list(parts)
    k, width = space.k, space.letters - space.k
    while len(parts) > k and parts[-1] == 0:
        parts.pop()
    if len(parts) > k:
        raise InvalidPartition(f"{tuple(parts)} has more than k={k} nonzero parts")
    parts += [0] * (k - len(parts))
    if any(p < 0 for p in parts):
        raise InvalidPartition(f"{tuple(parts)} has a negative part")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise InvalidPartition(f"{tuple(parts)} is not weakly decreasing")
    if parts and parts[0] > width:
        raise InvalidPartition(f"{tuple(parts)} does not fit in the {k} x {width} box")
    return tuple(parts)


def is_kstrict(lam: Sequence[int], space: Space) -> bool:
    slack = space.n - space.k
    return all(not (a > slack and b >= a) for a, b in zip(lam, lam[1:]))


def validate_kstrict(parts: Sequence[int], space: Space) -> tuple[int, ...]:
    if space.family == "A":
        raise InvalidKStrict("kstrict partitions index families B and C only")
    lam = validate_partition(parts, space)
    if not is_kstrict(lam, space):
        raise InvalidKStrict(f"{lam} is not {space.n - space.k}-strict")
    return lam


def ell(lam: Sequence[int]) -> int:
    """Number of nonzero parts (0 for the empty partition)."""
    return sum(1 for p in lam if p > 0)


def ell1(lam: Sequence[int]) -> int:
    """Number of parts exceeding 1 (0 if there are none)."""
    return sum(1 for p in lam if p > 1)


def contains(big: Sequence[int], small: Sequence[int]) -> bool:
    """Young diagram containment ``small`` inside ``big``."""
    return all(s <= b for s, b in itertools.zip_longest(small, big, fillvalue=0))


def transpose(lam: Sequence[int]) -> tuple[int, ...]:
    top = lam[0] if lam else 0
    return tuple(sum(1 for p in lam if p > c) for c in range(top))


def dual_partition(lam: Sequence[int], space: Space) -> tuple[int, ...]:
    """Complement of ``lam`` in the k x (letters-k) box, rotated by 180 degrees."""
    lam = validate_partition(lam, space)
    width = space.letters - space.k
    return tuple(width - p for p in reversed(lam))


# -- words ------------------------------------------------------------------

def validate_word(word: str, space: Space) -> str:
    if not isinstance(word, str) or set(word) - {"0", "1"}:
        raise InvalidWord(f"{word!r} is not a 01-string")
    if len(word) != space.letters:
        raise InvalidWord(f"{word!r} has length {len(word)}, expected {space.letters}")
    if word.count("1") != space.k:
        raise InvalidWord(f"{word!r} has {word.count('1')} ones, expected k={space.k}")
    return word


def boundary_word(lam: Sequence[int], space: Space) -> str:
    """Read the boundary of ``lam`` from the top-right corner: 0 = left, 1 = down.

    >>> boundary_word((5, 2, 1), Space("C", k=3, n=4))
    '10001010'
    """
    lam = validate_partition(lam, space)
    bits = ["0"] * space.letters
    for pos in _one_positions(lam, space):
        bits[pos - 1] = "1"
    return "".join(bits)


def _one_positions(lam: Sequence[int], space: Space) -> list[int]:
    # the i-th down step is preceded by (letters-k) - lam_i left steps
    width = space.letters - space.k
    return [width - p + i for i, p in enumerate(lam, start=1)]


def word_to_partition(word: str, space: Space) -> tuple[int, ...]:
    word = validate_word(word, space)
    width = space.letters - space.k
    ones = [pos for pos, b in enumerate(word, start=1) if b == "1"]
    return tuple(width - pos + i for i, pos in enumerate(ones, start=1))


def word_to_window(word: str, space: Space | None = None) -> tuple[int, ...]:
    if space is not None:
        validate_word(word, space)
    return tuple(pos for pos, b in enumerate(word, start=1) if b == "1")


def window_to_word(u: Sequence[int], space: Space) -> str:
    u = validate_window(u, space)
    bits = ["0"] * space.letters
    for pos in u:
        bits[pos - 1] = "1"
    return "".join(bits)


def is_pprime(lam: Sequence[int], space: Space) -> bool:
    """Mirrored boundary steps may agree only when both are left steps.

    >>> sp = Space("C", k=3, n=4)
    >>> is_pprime((5, 2, 1), sp), is_pprime((5, 5, 1), sp)
    (True, False)
    """
    word = boundary_word(lam, space)
    return not any(word[i] == "1" and word[-1 - i] == "1" for i in range(space.letters // 2))


def validate_pprime(parts: Sequence[int], space: Space) -> tuple[int, ...]:
    lam = validate_partition(parts, space)
    if space.family != "A" and not is_pprime(lam, space):
        raise InvalidPartition(f"{lam} is not in P'({space.k},{space.letters})")
    return lam


def wingtip(mu: Sequence[int], space: Space) -> int:
    """Largest m with boundary steps i and bar(i) differing for all i <= m.

    >>> wingtip((10, 8, 3, 1, 0), Space("B", k=5, n=8))
    3
    """
    word = boundary_word(mu, space)
    m = 0
    while m < space.letters // 2 and word[m] != word[-1 - m]:
        m += 1
    return m


# -- windows ----------------------------------------------------------------

def validate_window(u: Sequence[int], space: Space) -> tuple[int, ...]:
    u = tuple(u)
    if len(u) != space.k:
        raise InvalidWindow(f"{u} has {len(u)} letters, expected k={space.k}")
    if any(not 1 <= x <= space.letters for x in u):
        raise InvalidWindow(f"{u} has a letter outside 1..{space.letters}")
    if any(a >= b for a, b in zip(u, u[1:])):
        raise InvalidWindow(f"{u} is not strictly increasing")
    if space.family != "A" and len({space.absolute(x) for x in u}) != len(u):
        raise InvalidWindow(f"{u} contains a letter together with its bar")
    return u


def kstrict_to_window(lam: Sequence[int], space: Space) -> tuple[int, ...]:
    lam = validate_kstrict(lam, space)
    n, k = space.n, space.k
    w = []
    for j in range(k):
        bumps = sum(1 for i in range(j) if lam[i] + lam[j] <= 2 * (n - k) + j - i)
        w.append(2 * n + 1 - k - lam[j] + bumps)
    return validate_window(w, space)


def window_to_kstrict(u: Sequence[int], space: Space) -> tuple[int, ...]:
    if space.family == "A":
        raise InvalidKStrict("kstrict partitions index families B and C only")
    u = validate_window(u, space)
    n, k = space.n, space.k
    lam = []
    for j in range(k):
        bumps = sum(1 for i in range(j) if u[i] + u[j] > 2 * n + 1)
        lam.append(2 * n + 1 - k - u[j] + bumps)
    return validate_kstrict(lam, space)


# -- model dispatch ---------------------------------------------------------

def validate(model: str, value, space: Space):
    model = _canonical_model(model, space)
    if model == KSTRICT:
        return validate_kstrict(value, space)
    if model == PPRIME:
        return validate_pprime(value, space)
    if model == PARTITION:
        return validate_partition(value, space)
    if model == WINDOW:
        return validate_window(value, space)
    return validate_word(value, space)


def to_window(model: str, value, space: Space) -> tuple[int, ...]:
    model = _canonical_model(model, space)
    if model == KSTRICT:
        return kstrict_to_window(value, space)
    if model in (PPRIME, PARTITION):
        return word_to_window(boundary_word(validate(model, value, space), space))
    if model == WORD:
        return word_to_window(value, space)
    return validate_window(value, space)


def from_window(model: str, u: Sequence[int], space: Space):
    model = _canonical_model(model, space)
    if model == KSTRICT:
        return window_to_kstrict(u, space)
    if model in (PPRIME, PARTITION):
        return word_to_partition(window_to_word(u, space), space)
    if model == WORD:
        return window_to_word(u, space)
    return validate_window(u, space)


def convert(source: str, target: str, value, space: Space):
    """Re-express ``value`` from model ``source`` in model ``target``."""
    return from_window(target, to_window(source, value, space), space)


# -- enumeration (lexicographic on windows) --------------------------------

def coset_count(space: Space) -> int:
    if space.family == "A":
        return comb(space.n, space.k)
    return 2 ** space.k * comb(space.n, space.k)


def all_windows(space: Space) -> Iterator[tuple[int, ...]]:
    for u in itertools.combinations(range(1, space.letters + 1), space.k):
        if space.family == "A" or len({space.absolute(x) for x in u}) == space.k:
            yield u


def all_words(space: Space) -> Iterator[str]:
    for u in all_windows(space):
        yield window_to_word(u, space)


def all_partitions(space: Space) -> Iterator[tuple[int, ...]]:
    """Every partition in the k x (letters-k) box, P' or not."""
    width = space.letters - space.k
    for u in itertools.combinations(range(1, space.letters + 1), space.k):
        yield tuple(width - pos + i for i, pos in enumerate(u, start=1))


def all_pprime(space: Space) -> Iterator[tuple[int, ...]]:
    for u in all_windows(space):
        yield word_to_partition(window_to_word(u, space), space)


def all_kstrict(space: Space) -> Iterator[tuple[int, ...]]:
    """Brute-force enumeration of the (n-k)-strict partitions in the box."""
    width = space.letters - space.k
    for parts in itertools.combinations_with_replacement(range(width, -1, -1), space.k):
        if is_kstrict(parts, space):
            yield tuple(parts)


def all_indices(model: str, space: Space) -> Iterator:
    model = _canonical_model(model, space)
    if model == KSTRICT:
        return all_kstrict(space)
    if model == PPRIME:
        return all_pprime(space)
    if model == PARTITION:
        return all_partitions(space)
    if model == WORD:
        return all_words(space)
    return all_windows(space)


# -- text grammar -----------------------------------------------------------

_INT_LIST = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$")


def _parse_ints(text: str, what: str) -> list[int]:
    if not _INT_LIST.match(text):
        raise ValueError(f"cannot parse {text!r} as a {what}: expected comma-separated integers")
    return [int(t) for t in text.split(",")]


def parse_partition(text: str) -> tuple[int, ...]:
    """``"11,11,11,4,4"`` -> (11, 11, 11, 4, 4). An empty string is the empty partition."""
    if not text.strip():
        return ()
    parts = _parse_ints(text, "partition")
    if any(p < 0 for p in parts):
        raise ValueError(f"cannot parse {text!r} as a partition: parts must be nonnegative")
    return tuple(parts)


def parse_window(text: str, space: Space) -> tuple[int, ...]:
    """``"7,-8,-5,-4,-2"`` -> (7, 9, 12, 13, 15) for n=8; ``-i`` is bar(i)."""
    letters = _parse_ints(text, "window")
    if any(x == 0 for x in letters):
        raise ValueError(f"cannot parse {text!r} as a window: letters start at 1")
    if space.family == "A" and any(x < 0 for x in letters):
        raise ValueError(f"cannot parse {text!r} as a window: barred letters need family B or C")
    return tuple(space.bar(-x) if x < 0 else x for x in letters)


def parse_word(text: str) -> str:
    text = text.strip()
    if not text or set(text) - {"0", "1"}:
        raise ValueError(f"cannot parse {text!r} as a word: expected a raw 01 string")
    return text


def parse_index(model: str, text: str, space: Space):
    model = _canonical_model(model, space)
    if model == WINDOW:
        return parse_window(text, space)
    if model == WORD:
        return parse_word(text)
    return parse_partition(text)


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam)


def format_window(u: Sequence[int], space: Space) -> str:
    if space.family == "A":
        return ",".join(str(x) for x in u)
    return ",".join(str(x) if x <= space.n else f"-{space.bar(x)}" for x in u)


def format_index(model: str, value, space: Space) -> str:
    model = _canonical_model(model, space)
    if model == WINDOW:
        return format_window(value, space)
    if model == WORD:
        return value
    return format_partition(value)
