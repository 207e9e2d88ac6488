"""Print the degree chains for the standard example pair in each family."""

from qmindeg import min_degree_diagram
from qmindeg.cli import render_diagram
from qmindeg.models import Space

LAM, MU = (11, 11, 11, 4, 4), (7, 7, 0, 0, 0)

for sp in [Space("A", 5, 16), Space("C", 5, 8), Space("B", 5, 8)]:
    ans = min_degree_diagram(sp, LAM, MU)
    print(f"{sp}: lambda={LAM} mu={MU} -> d={ans.d}")
    for d, lam in enumerate(ans.chain):
        print(f"  lambda^{d} = {lam}")
        for row in render_diagram(lam).splitlines():
            print("      " + row)

for fam in "CB":
    sp = Space(fam, 5, 5)
    ans = min_degree_diagram(sp, (4, 3, 2, 1, 0), (3, 1, 0, 0, 0))
    print(f"{sp}: (4,3,2,1) vs (3,1) -> d={ans.d}, chain {ans.chain}")
