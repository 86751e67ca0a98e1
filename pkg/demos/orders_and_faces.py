"""The covering order and the face order for psi = {alpha} on a small A1 sample."""
from tiltcat.orders import adjoint_face, covering_leq, psi_distance, psi_face_check, psi_leq
from tiltcat.rootdata import build_root_system


def main():
    rs = build_root_system("A1")
    face = adjoint_face(rs, [(2,)])
    verdict = psi_face_check(face)
    print(f"{{alpha}} is a face: {verdict.holds} (checked to coefficient sum {verdict.radius})")
    bad = psi_face_check(adjoint_face(rs, [(2,), (-2,)]))
    print(f"{{alpha, -alpha}} is a face: {bad.holds}, witness {bad.witness}")
    pts = [((m,), g) for m in range(4) for g in range(0, 3)]
    print("\npairs related by the covering order but not by the face order")
    for p in pts:
        for q in pts:
            if p != q and covering_leq(rs, p, q) and not psi_leq(p, q, face):
                d = psi_distance(p[0], q[0], face)
                print(f"    ({p[0][0]}w1,{p[1]}) <= ({q[0][0]}w1,{q[1]})   d_psi = {d}")


if __name__ == "__main__":
    main()
