#!/usr/bin/env python3
"""Generate src/faultinv/_halfspace_kernel.py.

Derives, with sympy, the elastostatic Green function of a unit point force in
the half space x3 < 0 with a traction-free surface at x3 = 0 (Mindlin-type
solution, general Lame constants), takes its gradient with respect to the
source position, contracts with a seismic moment density, and emits vectorized
numpy code for

  * the displacement kernel of a point dislocation (moment source), and
  * its receiver-gradient (for stresses).

The point-force solution is written as Kelvin part plus an image-point
corrective part in Papkovich-Neuber form; the corrective coefficients below
were obtained by solving the traction-free condition at x3 = 0 symbolically.
Both the boundary condition and the Navier equilibrium equations are
re-verified numerically every time this script runs.

Usage: python3 tools/generate_halfspace_kernel.py
"""
import sys
import numpy as np
import sympy as sp
from sympy.printing.pycode import PythonCodePrinter


x, y, z, c = sp.symbols("x y z c", real=True)
lam, mu = sp.symbols("lam mu", positive=True)
nu = lam / (2 * (lam + mu))

R1 = sp.sqrt(x**2 + y**2 + (z + c) ** 2)    # distance to source (0,0,-c)
R2 = sp.sqrt(x**2 + y**2 + (z - c) ** 2)    # distance to image  (0,0,+c)
T = R2 + c - z

_k = 1 / (4 * (1 - nu))


def pn_disp(psi, phi):
    """Papkovich-Neuber: u_i = psi_i - k d_i(phi + x_m psi_m)."""
    chi = phi + x * psi[0] + y * psi[1] + z * psi[2]
    return [psi[i] - _k * sp.diff(chi, v) for i, v in enumerate((x, y, z))]


def kelvin(j):
    r = [x, y, z + c]
    pref = 1 / (16 * sp.pi * mu * (1 - nu))
    return [pref * ((3 - 4 * nu) * (1 if i == j else 0) / R1 + r[i] * r[j] / R1**3)
            for i in range(3)]


def force_z():
    """Unit vertical point force at (0,0,-c)."""
    h1 = 1 / R2
    h1z = sp.diff(h1, z)
    A0 = (3 - 4 * nu) / (4 * sp.pi * mu)
    A1 = c / (2 * sp.pi * mu)
    A3 = c * (3 - 4 * nu) / (4 * sp.pi * mu)
    A5 = -(1 - nu) * (1 - 2 * nu) / (sp.pi * mu)
    psi = [sp.S.Zero, sp.S.Zero, A0 * h1 + A1 * h1z]
    phi = A3 * h1 + A5 * sp.log(T)
    uc = pn_disp(psi, phi)
    uk = kelvin(2)
    return [uk[i] + uc[i] for i in range(3)]


def force_x():
    """Unit point force along x1 at (0,0,-c)."""
    h1 = 1 / R2
    lt = sp.log(T)
    f = (c - z) * lt - R2     # line potential; d/dz f = -lt
    q = 8 * sp.pi * mu * (1 - nu)
    B0 = 1 / (4 * sp.pi * mu)
    B5 = -c / (2 * sp.pi * mu)
    B7 = -(4 * nu**2 - 8 * nu + 3) / q          # -(3-2nu)(1-2nu)... kept raw
    B9 = c * (4 * nu**2 - 8 * nu + 3) / q
    B14 = -((2 * nu - 1) ** 2) / q
    psi = [B0 * h1 + B14 * sp.diff(f, x, 2),
           B14 * sp.diff(sp.diff(f, x), y),
           B5 * sp.diff(h1, x) + B7 * sp.diff(lt, x)]
    phi = B9 * sp.diff(lt, x)
    uc = pn_disp(psi, phi)
    uk = kelvin(0)
    return [uk[i] + uc[i] for i in range(3)]


def force_y():
    """Unit point force along x2: swap x <-> y in the x-force field."""
    ux = force_x()
    swap = {x: y, y: x}
    return [ux[1].subs(swap, simultaneous=True),
            ux[0].subs(swap, simultaneous=True),
            ux[2].subs(swap, simultaneous=True)]


def stress_tensor(u, variables=(x, y, z)):
    div = sum(sp.diff(u[i], variables[i]) for i in range(3))
    return [[lam * div * (1 if i == j else 0)
             + mu * (sp.diff(u[i], variables[j]) + sp.diff(u[j], variables[i]))
             for j in range(3)] for i in range(3)]


def verify_point_force(u, label, rng):
    """Numeric spot checks: Navier equilibrium and zero surface traction."""
    sig = stress_tensor(u)
    navier = [sum(sp.diff(sig[i][j], (x, y, z)[j]) for j in range(3)) for i in range(3)]
    fn_nav = sp.lambdify((x, y, z, c, lam, mu), navier, "numpy")
    fn_trac = sp.lambdify((x, y, c, lam, mu), [sig[i][2].subs(z, 0) for i in range(3)],
                          "numpy")
    fn_u = sp.lambdify((x, y, z, c, lam, mu), u, "numpy")
    for _ in range(12):
        px, py = rng.uniform(-3, 3, 2)
        pz = -rng.uniform(0.1, 4)
        pc = rng.uniform(0.3, 3)
        pl, pm = rng.uniform(0.5, 3, 2)
        scale = np.max(np.abs(fn_u(px, py, pz, pc, pl, pm))) / max(abs(pz + pc), 1e-3)
        nav = np.max(np.abs(fn_nav(px, py, pz, pc, pl, pm)))
        tra = np.max(np.abs(fn_trac(px, py, pc, pl, pm)))
        assert nav < 1e-9 * max(scale, 1), (label, "equilibrium", nav, scale)
        assert tra < 1e-9 * max(scale, 1), (label, "traction", tra, scale)
    print(f"verified {label}: equilibrium + traction-free OK")


class _Printer(PythonCodePrinter):
    def _print_Pow(self, expr):
        # keep integer powers as repeated multiplication-friendly ** form
        return super()._print_Pow(expr, rational=False)


def emit(name, args, exprs, outnames):
    reps, reduced = sp.cse(exprs, optimizations="basic", order="none")
    printer = _Printer({"fully_qualified_modules": False})
    lines = [f"def {name}({', '.join(args)}):"]
    for sym, val in reps:
        lines.append(f"    {printer.doprint(val, assign_to=sym)}")
    for nm, val in zip(outnames, reduced):
        lines.append(f"    {nm} = {printer.doprint(val)}")
    lines.append(f"    return {', '.join(outnames)}")
    return "\n".join(lines)


def main():
    rng = np.random.default_rng(20240819)
    ux = force_x()
    uy = force_y()
    uz = force_z()
    verify_point_force(ux, "x-force", rng)
    verify_point_force(uy, "y-force", rng)
    verify_point_force(uz, "z-force", rng)

    # Green tensor with explicit source position: receiver (X1,X2,X3),
    # source (Y1,Y2,Y3) with Y3<0.  G[i][j]: displacement component i for a
    # unit force along j.
    X1, X2, X3, Y1, Y2, Y3 = sp.symbols("X1 X2 X3 Y1 Y2 Y3", real=True)
    sub = {x: X1 - Y1, y: X2 - Y2, z: X3, c: -Y3}
    G = [[u[i].subs(sub, simultaneous=True) for u in (ux, uy, uz)] for i in range(3)]

    # Moment contraction: u_i = m_pq dG_ip/dY_q  (symmetric m).
    m11, m22, m33, m12, m13, m23 = sp.symbols("m11 m22 m33 m12 m13 m23", real=True)
    M = [[m11, m12, m13], [m12, m22, m23], [m13, m23, m33]]
    Y = (Y1, Y2, Y3)
    H = []
    for i in range(3):
        acc = sp.S.Zero
        for p in range(3):
            for q_ in range(3):
                if M[p][q_] is not sp.S.Zero:
                    acc += M[p][q_] * sp.diff(G[i][p], Y[q_])
        H.append(acc)

    DH = [[sp.diff(H[i], v) for v in (X1, X2, X3)] for i in range(3)]

    args = ["X1", "X2", "X3", "Y1", "Y2", "Y3",
            "m11", "m22", "m33", "m12", "m13", "m23", "lam", "mu"]
    print("emitting displacement kernel ...")
    code_disp = emit("moment_displacement", args, H, ["u1", "u2", "u3"])
    print("emitting surface displacement kernel ...")
    surf_args = [a for a in args if a != "X3"]
    Hs = [sp.expand(h.subs(X3, 0)) for h in H]
    code_surf = emit("surface_moment_displacement", surf_args, Hs,
                     ["u1", "u2", "u3"])
    print("emitting gradient kernel ...")
    flat = [DH[i][j] for i in range(3) for j in range(3)]
    names = [f"g{i+1}{j+1}" for i in range(3) for j in range(3)]
    code_grad = emit("moment_displacement_gradient", args, flat, names)

    header = '''"""Half-space dislocation (moment point source) kernel.

GENERATED by tools/generate_halfspace_kernel.py -- do not edit by hand.

Conventions: half space x3 < 0, traction-free surface x3 = 0, receiver
(X1,X2,X3) with X3 <= 0, source (Y1,Y2,Y3) with Y3 < 0, symmetric moment
density m (per unit fault area, units of stress times slip).  All arguments
broadcast as numpy arrays.

moment_displacement          -> displacement components (u1, u2, u3)
surface_moment_displacement  -> same with the receiver on X3 = 0 (faster)
moment_displacement_gradient -> du_i/dX_j as g11, g12, ..., g33
"""
from numpy import sqrt, log, pi


'''
    out = (header + code_disp + "\n\n\n" + code_surf + "\n\n\n"
           + code_grad + "\n")
    path = "src/faultinv/_halfspace_kernel.py"
    with open(path, "w") as fh:
        fh.write(out)
    print(f"wrote {path} ({len(out.splitlines())} lines)")

    # smoke check of generated code against direct lambdify
    scope = {}
    exec(compile(out, path, "exec"), scope)
    fn = scope["moment_displacement"]
    ref = sp.lambdify(args, H, "numpy")
    for _ in range(5):
        vals = dict(X1=rng.uniform(-2, 2), X2=rng.uniform(-2, 2),
                    X3=-rng.uniform(0, 2), Y1=rng.uniform(-1, 1),
                    Y2=rng.uniform(-1, 1), Y3=-rng.uniform(0.5, 3),
                    m11=rng.normal(), m22=rng.normal(), m33=rng.normal(),
                    m12=rng.normal(), m13=rng.normal(), m23=rng.normal(),
                    lam=rng.uniform(0.5, 2), mu=rng.uniform(0.5, 2))
        a = np.array(fn(**vals))
        b = np.array(ref(**{k: vals[k] for k in args}))
        assert np.allclose(a, b, rtol=1e-10), (a, b)
    fns = scope["surface_moment_displacement"]
    refs = sp.lambdify(surf_args, Hs, "numpy")
    for _ in range(5):
        vals = dict(X1=rng.uniform(-2, 2), X2=rng.uniform(-2, 2),
                    Y1=rng.uniform(-1, 1), Y2=rng.uniform(-1, 1),
                    Y3=-rng.uniform(0.5, 3),
                    m11=rng.normal(), m22=rng.normal(), m33=rng.normal(),
                    m12=rng.normal(), m13=rng.normal(), m23=rng.normal(),
                    lam=rng.uniform(0.5, 2), mu=rng.uniform(0.5, 2))
        a = np.array(fns(**vals))
        b = np.array(refs(**{k: vals[k] for k in surf_args}))
        assert np.allclose(a, b, rtol=1e-10), (a, b)
    fng = scope["moment_displacement_gradient"]
    refg = sp.lambdify(args, flat, "numpy")
    vals = dict(X1=1.1, X2=-0.4, X3=-0.8, Y1=0.2, Y2=0.1, Y3=-1.5,
                m11=1.0, m22=-0.3, m33=0.2, m12=0.5, m13=-0.7, m23=0.9,
                lam=1.0, mu=1.0)
    a = np.array(fng(**vals))
    b = np.array(refg(**{k: vals[k] for k in args}))
    assert np.allclose(a, b, rtol=1e-10)
    print("generated code agrees with direct symbolic evaluation")
    return 0


if __name__ == "__main__":
    sys.exit(main())
