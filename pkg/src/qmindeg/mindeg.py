"""
Minimum power of q in a quantum product of two Schubert classes.

Two independent routes:

* :func:`min_degree_diagram`: smallest d with ``lambda^d`` contained in ``mu``,
  using the closed-form operators of :mod:`qmindeg.curves`;
* :func:`min_degree_oracle`: smallest d with ``v <= u . z_d`` in Bruhat order,
  using only :mod:`qmindeg.weyl`.

:func:`cross_verify` runs both on every ordered pair of a space.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import curves, models, weyl
from .models import KSTRICT, PARTITION, PPRIME, Space

__all__ = [
    "DegreeAnswer", "VerifyReport", "DegreeBoundExceeded", "ResourceBoundExceeded",
    "diagram_model", "min_degree_diagram", "min_degree_oracle", "cross_verify",
    "DEFAULT_MAX_LETTERS",
]

DEFAULT_MAX_LETTERS = 12


class DegreeBoundExceeded(AssertionError):
    """The minimal degree search ran past 2k, the empirically validated bound."""


class ResourceBoundExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class DegreeAnswer:
    """Minimal degree ``d`` with its certificate ``witness = lambda^d``.

    ``chain`` holds ``lambda^0, ..., lambda^d`` in ``model``.
    """

    d: int
    witness: tuple
    chain: tuple
    model: str


def diagram_model(space: Space) -> str:
    """The model in which containment of diagrams decides the degree."""
    if space.family == "A":
        return PARTITION
    return KSTRICT if space.k == space.n else PPRIME


def _degree_bound(space: Space) -> int:
    return 2 * space.k


def min_degree_diagram(space: Space, lam, mu, model: str | None = None) -> DegreeAnswer:
    """Smallest d such that the diagram of ``lam^d`` fits inside ``mu``.

    ``lam`` and ``mu`` may be given in any model (``model``); they are converted
    to :func:`diagram_model` first.

    >>> sp = Space("C", k=5, n=8)
    >>> min_degree_diagram(sp, (11, 11, 11, 4, 4), (7, 7)).d
    3
    """
    target = diagram_model(space)
    source = model or target
    lam = models.convert(source, target, lam, space)
    mu = models.convert(source, target, mu, space)
    chain = []
    for d in range(_degree_bound(space) + 1):
        lam_d = curves.nbhd(target, space, lam, d)
        chain.append(lam_d)
        if models.contains(mu, lam_d):
            return DegreeAnswer(d, lam_d, tuple(chain), target)
    raise DegreeBoundExceeded(f"{space}: no d <= {_degree_bound(space)} with {lam}^d inside {mu}")


def min_degree_oracle(space: Space, u, v) -> DegreeAnswer:
    """Smallest d with ``v <= u . z_d W_P`` in Bruhat order (windows in, window witness out)."""
    u = models.validate_window(u, space)
    v = models.validate_window(v, space)
    chain = []
    d = 0
    while True:
        top = weyl.curve_nbhd_oracle(u, d, space)
        chain.append(top)
        if weyl.bruhat_leq(v, top):
            return DegreeAnswer(d, top, tuple(chain), models.WINDOW)
        if top == weyl.min_coset_rep(weyl.longest(space), space):
            raise AssertionError(f"{v} is not below the longest coset {top}")
        d += 1


@dataclass
class VerifyReport:
    space: Space
    indices: int = 0
    pairs: int = 0
    mismatches: list = field(default_factory=list)
    max_degree: int = 0
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.mismatches)} MISMATCHES"
        return (f"{self.space}: {self.indices} classes, {self.pairs} pairs, "
                f"max degree {self.max_degree}, {status} ({self.seconds:.2f}s)")


def _first(pred, seq) -> int | None:
    return next((d for d, x in enumerate(seq) if pred(x)), None)


def _verify_batch(space: Space, lams: list, targets: list) -> tuple[int, int, list]:
    """Compare both routes for ``lams`` x ``targets`` (diagram model indices)."""
    model = diagram_model(space)
    dmax = _degree_bound(space)
    pairs, top, bad = 0, 0, []
    target_windows = [models.to_window(model, mu, space) for mu in targets]
    for lam in lams:
        diag = curves.chain(model, space, lam, dmax)
        orc = weyl.oracle_chain(models.to_window(model, lam, space), space, dmax)
        for mu, v in zip(targets, target_windows):
            d_diag = _first(lambda x: models.contains(mu, x), diag)
            d_orc = _first(lambda w: weyl.bruhat_leq(v, w), orc)
            pairs += 1
            if d_diag is None or d_diag != d_orc:
                bad.append((lam, mu, d_diag, d_orc))
            else:
                top = max(top, d_diag)
    return pairs, top, bad


def cross_verify(space: Space, max_letters: int = DEFAULT_MAX_LETTERS, workers: int = 1) -> VerifyReport:
    """Compare :func:`min_degree_diagram` with :func:`min_degree_oracle` on every ordered pair."""
    if space.letters > max_letters:
        raise ResourceBoundExceeded(
            f"{space} has {space.letters} letters, above the sweep bound {max_letters}; "
            "raise max_letters explicitly to run it")
    start = time.perf_counter()
    indices = list(models.all_indices(diagram_model(space), space))
    report = VerifyReport(space, indices=len(indices))
    if workers > 1 and len(indices) > 1:
        size = -(-len(indices) // workers)
        batches = [indices[i:i + size] for i in range(0, len(indices), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_verify_batch, [space] * len(batches), batches, [indices] * len(batches)))
    else:
        results = [_verify_batch(space, indices, indices)]
    for pairs, top, bad in results:
        report.pairs += pairs
        report.max_degree = max(report.max_degree, top)
        report.mismatches.extend(bad)
    report.seconds = time.perf_counter() - start
    return report
