"""Point-dislocation kernel basics.

Evaluates the half-space displacement kernel for a buried slipping element,
checks the traction-free surface by extrapolating the stress to the surface,
and prints a small map of the surface deformation pattern.
"""
import numpy as np

from faultinv.green import (ElasticModel, PointDislocation, green_displacement,
                            green_stress)


def main():
    em = ElasticModel(lam=1.0, mu=1.0)
    disloc = PointDislocation(source=np.array([0.0, 0.0, -10.0]),
                              normal=np.array([0.0, 0.0, 1.0]),
                              burgers_dir=np.array([1.0, 0.0, 0.0]),
                              magnitude=1.0)

    print("surface displacement (km^-2 kernel units) on the x1 axis:")
    for x1 in (5.0, 10.0, 20.0, 40.0):
        u = green_displacement(np.array([x1, 0.0, 0.0]), disloc, em)
        print(f"  x1 = {x1:5.1f} km   u = ({u[0]:+.3e}, {u[1]:+.3e}, {u[2]:+.3e})")

    # traction on horizontal planes approaching the surface: linear in depth
    x12 = (7.0, 3.0)
    print("\ntraction |sigma . e3| approaching the free surface at", x12)
    for h in (1.0, 0.1, 0.01):
        s = green_stress(np.array([*x12, -h]), disloc, em)
        print(f"  depth {h:5.2f} km   |t| = {np.linalg.norm(s[:, 2]):.3e}")
    print("(decays linearly to zero: the surface carries no traction)")

    # homogeneity: shrink the whole configuration by 2, kernel grows by 4
    u1 = green_displacement(np.array([8.0, 2.0, 0.0]), disloc, em)
    half = PointDislocation(disloc.source / 2, disloc.normal,
                            disloc.burgers_dir)
    u2 = green_displacement(np.array([4.0, 1.0, 0.0]), half, em)
    print(f"\nscale invariance: |u(x/2; y/2)| / |u(x; y)| = "
          f"{np.linalg.norm(u2) / np.linalg.norm(u1):.6f}  (expect 4)")


if __name__ == "__main__":
    main()
