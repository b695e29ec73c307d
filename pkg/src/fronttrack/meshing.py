"""Fixed-domain grids on [0, 1] and Lagrange-polynomial derivative stencils.

Four grid families are supported.  D1-D3 start from M uniform subintervals
and successively subdivide the trailing ones so the grid is finest next to
y = 1 (the interface image).  D4 uses subinterval lengths in geometric
progression, h_i = (1/M) * q**(i-1), with q in (0, 1] chosen so the lengths
sum to 1.

All derivative weights are precomputed once per mesh: the stiff integrator
evaluates the semidiscrete right-hand side thousands of times, so RHS
assembly must reduce to weight-times-value dot products.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidSpec, NoGeometricRatio

_BISECT_TOL = 1e-14
_BISECT_MAXITER = 200


@dataclass(frozen=True)
class MeshSpec:
    """Grid-construction parameters.

    strategy: one of "D1", "D2", "D3" (trailing subdivision with power
    p = 1, 2, 3) or "D4" (geometric).  N counts subintervals (grid points
    y_1..y_N, with y_0 = 0 prepended); for D1-D3 it is derived from (M, d)
    and may be omitted.  M is the coarse subinterval count; d the number of
    trailing coarse intervals involved in the subdivision (the last d-2 are
    actually split).
    """

    strategy: str
    N: int | None = None
    M: int = 10
    d: int | None = None

    def __post_init__(self):
        if self.strategy not in ("D1", "D2", "D3", "D4"):
            raise InvalidSpec(f"unknown mesh strategy {self.strategy!r}")
        if self.M < 2:
            raise InvalidSpec(f"M must be >= 2, got {self.M}")
        if self.strategy == "D4":
            if self.N is None:
                raise InvalidSpec("D4 needs an explicit grid-point count N")
            if self.N < 4:
                raise InvalidSpec(f"N must be >= 4, got {self.N}")
        else:
            if self.d is None:
                raise InvalidSpec(f"{self.strategy} needs the trailing-interval count d")
            if not 3 <= self.d <= self.M:
                raise InvalidSpec(f"d must satisfy 3 <= d <= M, got d={self.d}, M={self.M}")

    @property
    def subdivision_power(self) -> int:
        return {"D1": 1, "D2": 2, "D3": 3}[self.strategy]


@dataclass(frozen=True)
class Mesh:
    """Grid points with precomputed derivative stencils.

    y holds y_0 = 0 < y_1 < ... < y_N = 1.  first/second are (3, N-1)
    arrays of interior-node weights acting on (C_{i-1}, C_i, C_{i+1}).
    boundary_slope acts on (C_{N-2}, C_{N-1}) and gives dw/dy at y = 1 of
    the quadratic pinned to 0 there; boundary_curvature acts on
    (C_{N-3}, C_{N-2}, C_{N-1}) and gives d2w/dy2 at y = 1 of the pinned
    cubic.
    """

    spec: MeshSpec
    y: np.ndarray
    alpha: np.ndarray              # spacings alpha_i = y_i - y_{i-1}, i = 1..N
    first: np.ndarray
    second: np.ndarray
    boundary_slope: np.ndarray
    boundary_curvature: np.ndarray
    q: float | None = None         # geometric ratio (D4 only)
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def n_intervals(self) -> int:
        return len(self.y) - 1

    def interface_slope(self, c_nm2: float, c_nm1: float) -> float:
        """dw/dy at y = 1 from the last two interior values (pinned zero folded in)."""
        return self.boundary_slope[0] * c_nm2 + self.boundary_slope[1] * c_nm1

    def interface_curvature(self, c_nm3: float, c_nm2: float, c_nm1: float) -> float:
        """d2w/dy2 at y = 1 from the last three interior values."""
        w = self.boundary_curvature
        return w[0] * c_nm3 + w[1] * c_nm2 + w[2] * c_nm1


def interior_stencil(h1: float, h2: float):
    """First/second derivative weights at the center of three nodes.

    The weights are the derivatives of the quadratic through
    (-h1, f0), (0, f1), (h2, f2), evaluated at the center.  The center
    weight is assembled as minus the sum of the outer ones so constants are
    annihilated exactly.
    """
    if h1 <= 0 or h2 <= 0:
        raise InvalidSpec("stencil spacings must be positive")
    w1l = -h2 / (h1 * (h1 + h2))
    w1r = h1 / (h2 * (h1 + h2))
    w1c = -(w1l + w1r)
    w2l = 2.0 / (h1 * (h1 + h2))
    w2r = 2.0 / (h2 * (h1 + h2))
    w2c = -(w2l + w2r)
    return (w1l, w1c, w1r), (w2l, w2c, w2r)


def boundary_stencils(y: np.ndarray):
    """One-sided derivative weights at y = 1 with the pinned zero folded in.

    Slope: dl/dy at 1 of the quadratic through (y_{N-2}, C_{N-2}),
    (y_{N-1}, C_{N-1}), (1, 0).  Curvature: d2/dy2 at 1 of the cubic through
    those plus (y_{N-3}, C_{N-3}).  Since the value at y = 1 is 0, the
    interpolant is xi*(c1 + c2*xi + ...) in xi = 1 - y; the weights are rows
    of the inverse of the corresponding Vandermonde system.
    """
    if len(y) < 4:
        raise InvalidSpec("boundary stencils need at least 4 grid points")
    xi = 1.0 - np.asarray(y[-4:-1], dtype=float)   # distances of y_{N-3}, y_{N-2}, y_{N-1} from 1

    # slope: P(xi) = c1*xi + c2*xi^2 through the last two interior nodes
    a, b = xi[1], xi[2]
    V2 = np.array([[a, a * a], [b, b * b]])
    c_rows = np.linalg.inv(V2)          # coefficients = rows @ values
    slope = -c_rows[0]                  # d/dy = -d/dxi; dP/dxi(0) = c1

    # curvature: P(xi) = c1*xi + c2*xi^2 + c3*xi^3 through the last three
    V3 = np.vander(xi, 4, increasing=True)[:, 1:]   # columns xi, xi^2, xi^3
    c_rows3 = np.linalg.inv(V3)
    curvature = 2.0 * c_rows3[1]        # d2/dy2 = d2/dxi2 = 2*c2

    return slope, curvature


def _geometric_ratio(N: int, M: int) -> float:
    """Root q in (0, 1] of sum_{i=1..N} (1/M) * q**(i-1) = 1, by bisection."""
    if N < M:
        raise NoGeometricRatio(f"N={N} < M={M} would force q > 1")
    if N == M:
        return 1.0

    def total(q):
        # sum of the geometric series; q < 1 strictly here
        return (1.0 - q**N) / (1.0 - q) / M - 1.0

    lo, hi = 1e-12, 1.0 - 1e-16
    if total(lo) > 0:
        raise NoGeometricRatio(f"no ratio in (0, 1) for N={N}, M={M}")
    for _ in range(_BISECT_MAXITER):
        mid = 0.5 * (lo + hi)
        if total(mid) <= 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo < _BISECT_TOL:
            break
    return 0.5 * (lo + hi)


def _spacings(spec: MeshSpec):
    if spec.strategy == "D4":
        q = _geometric_ratio(spec.N, spec.M)
        h = (1.0 / spec.M) * q ** np.arange(spec.N)
        return h, q
    # D1-D3: M uniform intervals; the j-th counted backward from y=1
    # (j = 1..d-2) splits into (d-j)^p equal parts, finest adjacent to y=1.
    p = spec.subdivision_power
    base = 1.0 / spec.M
    parts = []
    n_split = spec.d - 2
    for i in range(spec.M):            # forward order, i = 0 .. M-1
        j = spec.M - i                 # backward index, j = 1 at the last interval
        if j <= n_split:
            k = (spec.d - j) ** p
            parts.extend([base / k] * k)
        else:
            parts.append(base)
    h = np.array(parts)
    if spec.N is not None and spec.N != len(h):
        raise InvalidSpec(f"{spec.strategy} with M={spec.M}, d={spec.d} "
                          f"yields N={len(h)}, not the requested N={spec.N}")
    return h, None


def build_mesh(spec: MeshSpec) -> Mesh:
    """Build the grid and precompute every derivative stencil.

    The last point is assigned y_N = 1 exactly rather than accumulated.
    """
    h, q = _spacings(spec)
    y = np.empty(len(h) + 1)
    y[0] = 0.0
    np.cumsum(h, out=y[1:])
    y[-1] = 1.0
    alpha = np.diff(y)
    if np.any(alpha <= 0):
        raise InvalidSpec("grid points are not strictly increasing")

    n = len(y) - 1
    first = np.empty((3, n - 1))
    second = np.empty((3, n - 1))
    for i in range(1, n):
        (first[0, i - 1], first[1, i - 1], first[2, i - 1]), \
            (second[0, i - 1], second[1, i - 1], second[2, i - 1]) = \
            interior_stencil(alpha[i - 1], alpha[i])
    slope, curvature = boundary_stencils(y)
    return Mesh(spec=spec, y=y, alpha=alpha, first=first, second=second,
                boundary_slope=slope, boundary_curvature=curvature, q=q)


def mesh_table(mesh: Mesh) -> str:
    """Plain-text dump of points, spacings and stencil weights (debug aid)."""
    lines = [f"# strategy={mesh.spec.strategy} N={mesh.n_intervals} M={mesh.spec.M}"
             + (f" d={mesh.spec.d}" if mesh.spec.d is not None else "")
             + (f" q={mesh.q:.17g}" if mesh.q is not None else "")]
    lines.append("#    i              y_i          alpha_i    w1(l,c,r) | w2(l,c,r)")
    for i, yi in enumerate(mesh.y):
        row = f"{i:6d} {yi:.17g}"
        if i >= 1:
            row += f" {mesh.alpha[i - 1]:.17g}"
        if 1 <= i <= mesh.n_intervals - 1:
            w1 = mesh.first[:, i - 1]
            w2 = mesh.second[:, i - 1]
            row += "  " + " ".join(f"{v:.10g}" for v in w1)
            row += " | " + " ".join(f"{v:.10g}" for v in w2)
        lines.append(row)
    lines.append("# boundary slope weights (C_{N-2}, C_{N-1}): "
                 + " ".join(f"{v:.17g}" for v in mesh.boundary_slope))
    lines.append("# boundary curvature weights (C_{N-3}, C_{N-2}, C_{N-1}): "
                 + " ".join(f"{v:.17g}" for v in mesh.boundary_curvature))
    return "\n".join(lines) + "\n"
