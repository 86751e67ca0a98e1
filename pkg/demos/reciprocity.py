"""Compare projective and injective multiplicities with local Weyl composition factors.

Prints, for A1 and J = [0, 1], which of the two index conventions for BGG
reciprocity holds on each side, and then the table for P(2w1, 0).
"""
from tiltcat.charring import TruncationSpec
from tiltcat.rootdata import build_root_system
from tiltcat.tilting import bgg_check


def main():
    rs = build_root_system("A1")
    rep = bgg_check(rs, TruncationSpec(0, 1), (4,))
    for side in ("projective", "injective"):
        print(f"{side:10s} side: {', '.join(rep.conventions_holding(side)) or 'none'}")
    print("\n[P(2w1,0) : W(mu,s)] against [Delta(mu,0) : V(2w1,s)]")
    for (p, q), m in sorted(rep.projective_side.items()):
        if p != ((2,), 0):
            continue
        lit = rep.literal[(p, q)]
        if m or lit:
            print(f"    ({q[0][0]}w1,{q[1]})  {m}  {lit}")


if __name__ == "__main__":
    main()
