"""The narrow disk sector: the continuous bound is sharp up to a factor 2.

For a sector of radius r and opening fraction alpha, the reachable part of
the boundary is the arc 2*pi*r*alpha while the bound (d-1)|area|/diam is
pi*r*alpha, so the ratio is exactly 2 whatever r and alpha. The bound rests
on the radial identity  laplacian |x| = (d-1)/|x|,  checked here by central
finite differences at second order.

Run: python demos/04_sector_geometry.py
"""

from graphboundary import radial_laplacian_identity_check, sector_check

for r, alpha in ((1.0, 0.01), (2.0, 0.05), (0.5, 0.001)):
    chk = sector_check(r, alpha)
    print(
        f"r={r} alpha={alpha}: arc={chk.arc_length:.6f} "
        f"bound={chk.bound:.6f} ratio={chk.ratio}"
    )

print("\nradial identity deviation by dimension (step 1e-3):")
samples = {
    2: [(1.0, 0.0), (0.6, 0.8), (-0.7, 0.3)],
    3: [(1.0, 1.0, 1.0), (0.5, 0.5, -0.5)],
    4: [(1.0, 0.0, 0.0, 0.0)],
}
for d, pts in samples.items():
    print(f"  d={d}: {radial_laplacian_identity_check(d, pts, step=1e-3):.2e}")

print("\nsecond-order convergence (halving the step divides the error by ~4):")
prev = None
for h in (4e-2, 2e-2, 1e-2, 5e-3):
    dev = radial_laplacian_identity_check(2, [(1.0, 0.0)], step=h)
    note = f"  ratio vs previous: {prev / dev:.2f}" if prev else ""
    print(f"  h={h:<6}: {dev:.3e}{note}")
    prev = dev
