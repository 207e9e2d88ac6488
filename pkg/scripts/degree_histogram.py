"""Distribution of minimum degrees over all ordered pairs of Schubert classes."""

from collections import Counter

import click

from qmindeg import curves
from qmindeg.mindeg import diagram_model
from qmindeg.models import Space, all_indices, contains


@click.command()
@click.argument("space")
def main(space):
    sp = Space.parse(space)
    model = diagram_model(sp)
    idx = list(all_indices(model, sp))
    hist = Counter()
    for lam in idx:
        ch = curves.chain(model, sp, lam, 2 * sp.k)
        for mu in idx:
            hist[next(d for d, x in enumerate(ch) if contains(mu, x))] += 1
    click.echo(f"{sp}: {len(idx)} classes, {len(idx) ** 2} pairs")
    for d in sorted(hist):
        click.echo(f"  d={d}: {hist[d]}")


if __name__ == "__main__":
    main()
