"""Rigid kinematics of popup unit cells and slice chains.

A unit cell is the four-bar linkage cut into a folded sheet: two parallel
cuts of depth ``lx`` and ``lz`` about the central fold, fold width ``ly``,
and an optional splay that tilts the cuts.  The deployment angle ``psi``
is the dihedral opened between the two base half-planes, ``0 <= psi <= pi``
with ``psi = pi/2`` the fully deployed state used for design.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import IsometryViolation, SingularSystem

ISOMETRY_TOL = 1e-9


def validate_psi(psi):
    """Reject deployment angles outside [0, pi]."""
    if not (0.0 <= psi <= np.pi):
        raise ValueError(f"deployment angle {psi!r} outside [0, pi]")
    return float(psi)


@dataclass(frozen=True)
class UnitCell:
    """Cut lengths of one popup unit; splay is a slope, 0 for rectangular."""

    lx: float
    lz: float
    ly: float = 1.0
    splay: float = 0.0

    def __post_init__(self):
        if self.lx <= 0 or self.lz <= 0 or self.ly <= 0:
            raise ValueError("cell cut lengths must be positive")
        if self.splay < 0:
            raise ValueError("splay slope must be non-negative")


@dataclass(frozen=True)
class FoldVertex:
    """A fold vertex position tagged with its unit (and optionally slice) index."""

    position: np.ndarray
    unit_index: int = 0
    slice_index: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "position", np.asarray(self.position, dtype=float))


def unit_vertex(cell, psi):
    """Deployed fold vertex of a single unit, Eq-of-motion of the four-bar.

    The vertex traces (lx + lz cos(psi), 0, lz sin(psi)): a circle of radius
    lz about (lx, 0, 0) in the slice plane y = 0.
    """
    psi = validate_psi(psi)
    p = np.array([cell.lx + cell.lz * np.cos(psi), 0.0, cell.lz * np.sin(psi)])
    return FoldVertex(p, unit_index=0)


def chain_positions(lx, lz, psi, slice_y=0.0):
    """Deployed vertex coordinates of a chain of rectangular units.

    Vertex i sits at x = sum(lx[:i+1]) + rem(i) cos(psi), z = rem(i) sin(psi)
    where rem(i) = sum(lz) - sum(lz[:i+1]) is the cut length still folded.
    Returns an (N, 3) array; y is constant at slice_y.
    """
    lx = np.asarray(lx, dtype=float)
    lz = np.asarray(lz, dtype=float)
    cx = np.cumsum(lx)
    rem = np.sum(lz) - np.cumsum(lz)
    x = cx + rem * np.cos(psi)
    z = rem * np.sin(psi)
    y = np.full_like(x, slice_y)
    return np.column_stack([x, y, z])


def chain_vertices(cells, psi, length=None):
    """Fold vertices of a slice chain, one per unit cell.

    The chain is isometric: sum(lx) and sum(lz) must both equal the chain
    length (IsometryViolation otherwise).  At psi = pi/2 with uniform cells
    the vertices form the descending staircase from near (0, L) to (L, 0).
    """
    psi = validate_psi(psi)
    lx = np.array([c.lx for c in cells], dtype=float)
    lz = np.array([c.lz for c in cells], dtype=float)
    total = float(np.sum(lx)) if length is None else float(length)
    scale = max(abs(total), 1.0)
    if abs(np.sum(lx) - total) > ISOMETRY_TOL * scale or abs(np.sum(lz) - total) > ISOMETRY_TOL * scale:
        raise IsometryViolation(
            f"cut sums ({np.sum(lx):.12g}, {np.sum(lz):.12g}) != chain length {total:.12g}"
        )
    pos = chain_positions(lx, lz, psi)
    return [FoldVertex(pos[i], unit_index=i + 1) for i in range(len(cells))]


def chain_polyline(lx, lz, psi, slice_y=0.0):
    """Panel centerline of a deployed chain: start, then corner/vertex per unit.

    Each unit contributes an x-panel lying in the base-plane direction and a
    z-panel tilted by psi; the corner between them is the moving fold line.
    Returns a (2N+1, 3) array.  Panel lengths are psi-invariant by rigidity.
    """
    lx = np.asarray(lx, dtype=float)
    lz = np.asarray(lz, dtype=float)
    n = len(lx)
    verts = chain_positions(lx, lz, psi, slice_y)
    start = np.array([np.sum(lz) * np.cos(psi), slice_y, np.sum(lz) * np.sin(psi)])
    pts = np.empty((2 * n + 1, 3))
    pts[0] = start
    prev = start
    for i in range(n):
        corner = np.array([prev[0] + lx[i], slice_y, prev[2]])
        pts[2 * i + 1] = corner
        pts[2 * i + 2] = verts[i]
        prev = verts[i]
    return pts


# ---------------------------------------------------------------------------
# splayed units
# ---------------------------------------------------------------------------


def splay_theta(alpha, psi):
    """Fold orientation angle of a splayed unit.

    theta = 2 arctan(t) with t = alpha cos(psi/2), evaluated as
    atan2(2t, 1 - t^2) so the branch is correct past theta = pi/2.
    """
    psi = validate_psi(psi)
    if alpha < 0:
        raise ValueError("splay slope must be non-negative")
    t = alpha * np.cos(psi / 2.0)
    return float(np.arctan2(2.0 * t, 1.0 - t * t))


def splayed_vertex(cell, psi):
    """Deployed fold vertex of a splayed unit in its swing plane.

    Position (w (1-t^2)/(1+t^2), w 2t/(1+t^2), 0) with w = cell.ly and
    t = splay * cos(psi/2).  The norm is exactly w for every psi; the second
    component is the out-of-plane height, maximal (= w) on t = 1.
    """
    psi = validate_psi(psi)
    w = cell.ly
    t = cell.splay * np.cos(psi / 2.0)
    denom = 1.0 + t * t
    p = np.array([w * (1.0 - t * t) / denom, w * 2.0 * t / denom, 0.0])
    return FoldVertex(p, unit_index=0)


def splay_height(alpha, psi, w=1.0):
    """Out-of-plane height of a splayed unit's fold vertex: w 2t/(1+t^2)."""
    t = alpha * np.cos(psi / 2.0)
    return w * 2.0 * t / (1.0 + t * t)


def strip_offset(b1, b3, slope, psi):
    """Transverse offset of a connector strip between two splayed cells.

    d = ((b1 - b3)/s) [1 - (1 - q^2)/(1 + q^2)], q = s cos(psi/2).
    At s = 0 the offset is 0 by continuity (splayless strips do not shift).
    """
    psi = validate_psi(psi)
    if slope == 0.0:
        return 0.0
    q = slope * np.cos(psi / 2.0)
    return float((b1 - b3) / slope * (1.0 - (1.0 - q * q) / (1.0 + q * q)))


@dataclass(frozen=True)
class ConnectorSolve:
    """Connector fold intersection points between two adjacent splayed cells."""

    P1: np.ndarray
    P2: np.ndarray
    P3: np.ndarray
    P4: np.ndarray
    O1: np.ndarray
    O2: np.ndarray
    d: float
    condition_number: float = field(default=0.0, compare=False)


def _solve_fold_point(Pa, Pb, Pc, Pd, y_known, cos_gamma):
    """Point O = (x, y_known, z) with equal projections onto the two fold
    directions and prescribed inclination against the first one."""
    u_ab = Pb - Pa
    u_ab = u_ab / np.linalg.norm(u_ab)
    u_cd = Pd - Pc
    u_cd = u_cd / np.linalg.norm(u_cd)
    # (Pa - O).u_ab = cos_gamma  and  (Pa - O).u_ab = (Pc - O).u_cd
    A = np.array(
        [
            [-u_ab[0], -u_ab[2]],
            [u_cd[0] - u_ab[0], u_cd[2] - u_ab[2]],
        ]
    )
    rhs = np.array(
        [
            cos_gamma - float(Pa @ u_ab) + y_known * u_ab[1],
            -float(Pa @ u_ab) + float(Pc @ u_cd) + y_known * (u_ab[1] - u_cd[1]),
        ]
    )
    cond = np.linalg.cond(A)
    if not np.isfinite(cond) or cond > 1e12:
        raise SingularSystem("connector constraint system is singular", condition_number=cond)
    x, z = np.linalg.solve(A, rhs)
    return np.array([x, y_known, z]), cond


def solve_connector(P1, P2, P3, P4, slope, psi):
    """Solve the two connector fold points O1, O2 between adjacent cells.

    P1..P4 are the fixed edge points of the two fold edges (P1-P2 on one
    cell, P3-P4 on the other).  O1 lies at y = P1_y - d with d the strip
    offset for the cells' heights; its (x, z) solves the linear pair:
    equal projections onto both fold directions, and projection onto the
    first direction equal to cos(splay angle).  O2 is the analogous point
    for the opposite edge ends at y = P2_y - d.
    """
    psi = validate_psi(psi)
    P1, P2, P3, P4 = (np.asarray(p, dtype=float) for p in (P1, P2, P3, P4))
    d = strip_offset(P1[2], P3[2], slope, psi)
    cos_gamma = np.cos(np.arctan(slope))
    O1, c1 = _solve_fold_point(P1, P2, P3, P4, P1[1] - d, cos_gamma)
    O2, c2 = _solve_fold_point(P2, P1, P4, P3, P2[1] - d, cos_gamma)
    return ConnectorSolve(P1, P2, P3, P4, O1, O2, d, condition_number=max(c1, c2))


def connector_residuals(solve, slope):
    """Constraint residuals of a connector solve, for verification."""
    cos_gamma = np.cos(np.arctan(slope))
    out = []
    for O, Pa, Pb, Pc, Pd in (
        (solve.O1, solve.P1, solve.P2, solve.P3, solve.P4),
        (solve.O2, solve.P2, solve.P1, solve.P4, solve.P3),
    ):
        u_ab = Pb - Pa
        u_ab = u_ab / np.linalg.norm(u_ab)
        u_cd = Pd - Pc
        u_cd = u_cd / np.linalg.norm(u_cd)
        proj_a = float((Pa - O) @ u_ab)
        proj_c = float((Pc - O) @ u_cd)
        out.append(abs(proj_a - proj_c))
        out.append(abs(proj_a - cos_gamma))
    return out
