"""A walk through the classification table, one representative per cell.

Each cell is decided from the plane cubic wbar = bar(w) and the scalar mu(w);
the rank-one and ATV procedures are run alongside as independent witnesses.
"""
from cy3 import classify as cl
from cy3.corpus import table1_grid
from cy3.tensor3 import bar, mu


def main():
    for cell in table1_grid():
        t = cl.table1_verdict(cell.w)
        others = (bool(cl.rank_one_verdict(cell.w)), bool(cl.atv_verdict(cell.w)))
        mark = "ok" if (bool(t),) + others == (cell.expected,) * 3 else "MISMATCH"
        print(f"{cell.name:42s} mu={mu(cell.w)!s:4s} 3-CY={bool(t)!s:5s} [{mark}]")
        print(f"    wbar = {bar(cell.w)}")
        print(f"    {'; '.join(t.reasons)}")


if __name__ == "__main__":
    main()
