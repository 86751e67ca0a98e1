"""Build the A1 tilting modules over J = [0, 1] and show how each one is assembled.

Run with `python3 demos/tilting_a1.py`.
"""
from tiltcat.charring import TruncationSpec, simple_decompose
from tiltcat.modengine import graded_character_of
from tiltcat.rootdata import build_root_system
from tiltcat.tilting import build_tilting


def main():
    rs = build_root_system("A1")
    J = TruncationSpec(0, 1)
    for m in range(3):
        for r in J.grades():
            T, cert, tower = build_tilting(rs, J, ((m,), r))
            print(f"T({m}w1, {r}) over {J.label()}: dim {T.dim}")
            # each step adds d copies of one Delta by a universal extension
            for step in tower:
                (w,), s = step.point[0], step.point[1]
                print(f"    after Delta({w}w1, {s}): +{step.d} copies, dim {step.dim}")
            mults = ", ".join(f"({w[0]}w1,{s}):{c}" for (w, s), c in cert.delta_multiplicities.items())
            print(f"    Delta multiplicities  {mults}")
            simples = simple_decompose(rs, graded_character_of(T))
            print(f"    composition factors   {sorted(simples.items())}")
            print(f"    End dim {cert.end_dim}, radical dim {cert.rad_dim}, nabla-filtered {cert.nabla}")


if __name__ == "__main__":
    main()
