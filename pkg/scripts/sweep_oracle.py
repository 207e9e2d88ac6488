"""Compare every curve neighborhood operator with the Weyl group oracle.

    python3 scripts/sweep_oracle.py --max-letters 12
"""

import time

import click

from qmindeg import curves, weyl
from qmindeg.models import Space, all_windows, convert, models_for


def spaces(max_letters):
    for n in range(2, max_letters + 1):
        for k in range(1, n):
            yield Space("A", k, n)
    for n in range(1, max_letters // 2 + 1):
        for k in range(1, n + 1):
            yield Space("C", k, n)
            yield Space("B", k, n)


@click.command()
@click.option("--max-letters", default=12, show_default=True)
def main(max_letters):
    total_bad = 0
    for sp in spaces(max_letters):
        start, bad, count = time.perf_counter(), 0, 0
        dmax = 2 * sp.k
        for u in all_windows(sp):
            expected = weyl.oracle_chain(u, sp, dmax)
            for model in models_for(sp):
                delta = convert("window", model, u, sp)
                got = [convert(model, "window", x, sp) for x in curves.chain(model, sp, delta, dmax)]
                count += 1
                bad += got != expected
        total_bad += bad
        click.echo(f"{str(sp):>10}  {count:6d} chains  {bad} bad  {time.perf_counter() - start:.2f}s")
    click.echo(f"total mismatches: {total_bad}")
    raise SystemExit(1 if total_bad else 0)


if __name__ == "__main__":
    main()
