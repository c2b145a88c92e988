"""Dense linear programming backend.

A single bounded-variable primal simplex (two phases, Bland's rule so it
cannot cycle) drives every set query in the toolbox.  Inequality-form
problems  max/min c'x  s.t.  Cx <= d  are solved through their dual

    min d'y  s.t.  C'y = c,  y >= 0,

whose equality system has only n rows (n = ambient dimension, small here),
so the simplex basis stays tiny no matter how many halfspaces C has.  The
primal optimizer x* is read off the equality multipliers of the dual.
"""

from dataclasses import dataclass

import numpy as np

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_RTOL = 1e-10       # reduced-cost tolerance
_PIV = 1e-11        # pivot magnitude below which a direction entry is zero
_FEAS = 1e-8        # phase-1 residual accepted as feasible
_MAX_ITER = 100_000


@dataclass
class LPResult:
    """Outcome of a linear program.

    status is one of {optimal, infeasible, unbounded}; value and point are
    only meaningful when status == optimal.
    """
    status: str
    value: float = np.nan
    point: np.ndarray | None = None


class SimplexError(RuntimeError):
    pass


def _simplex_bounded(A, b, c, lb, ub, max_iter=_MAX_ITER):
    """min c'x  s.t.  A x = b,  lb <= x <= ub  (bounds may be +-inf).

    Two-phase primal simplex on the bounded-variable form.  Entering
    variable: lowest-index candidate (Bland); leaving variable: lowest
    variable index among the ratio-test ties (Bland), which guarantees
    finite termination under degeneracy.

    Returns (status, x, value, eq_duals).
    """
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float).ravel()
    c = np.asarray(c, dtype=float).ravel()
    lb = np.asarray(lb, dtype=float).ravel()
    ub = np.asarray(ub, dtype=float).ravel()
    m, n = A.shape
    if b.size != m or c.size != n or lb.size != n or ub.size != n:
        raise ValueError("inconsistent simplex dimensions")
    if np.any(lb > ub + 1e-15):
        return INFEASIBLE, None, np.nan, None

    # Start nonbasic variables at a finite bound (0 when free both ways).
    x0 = np.where(np.isfinite(lb), lb, np.where(np.isfinite(ub), ub, 0.0))
    resid = b - A @ x0

    # Artificial columns carry the phase-1 residual with value |resid_i|.
    sign = np.where(resid >= 0.0, 1.0, -1.0)
    A_ext = np.hstack([A, np.diag(sign)])
    lb_ext = np.concatenate([lb, np.zeros(m)])
    ub_ext = np.concatenate([ub, np.full(m, np.inf)])
    ntot = n + m

    basis = np.arange(n, ntot)
    in_basis = np.zeros(ntot, dtype=bool)
    in_basis[basis] = True
    # nonbasic position: -1 at lower bound, +1 at upper, 0 free at value 0
    state = np.where(np.isfinite(lb_ext), -1,
                     np.where(np.isfinite(ub_ext), 1, 0)).astype(np.int8)

    def nonbasic_values():
        v = np.where(state == -1, lb_ext, np.where(state == 1, ub_ext, 0.0))
        v[in_basis] = 0.0
        return v

    def run(cost, allow_unbounded):
        for _ in range(max_iter):
            B = A_ext[:, basis]
            xn = nonbasic_values()
            try:
                xB = np.linalg.solve(B, b - A_ext @ xn)
                y = np.linalg.solve(B.T, cost[basis])
            except np.linalg.LinAlgError:
                raise SimplexError("singular simplex basis")
            r = cost - y @ A_ext
            # Bland: smallest-index eligible entering variable.  A variable
            # at its lower bound (or free) may increase when its reduced
            # cost is negative; one at its upper bound (or free) may
            # decrease when it is positive.
            enter = -1
            gamma = 0.0
            for j in range(ntot):
                if in_basis[j]:
                    continue
                if state[j] <= 0 and r[j] < -_RTOL:
                    enter, gamma = j, 1.0
                    break
                if state[j] >= 0 and r[j] > _RTOL:
                    enter, gamma = j, -1.0
                    break
            if enter < 0:
                return OPTIMAL, xB, y
            d = np.linalg.solve(B, A_ext[:, enter])
            # own-bound travel of the entering variable
            if state[enter] == 0:
                t_own = np.inf
            else:
                span = ub_ext[enter] - lb_ext[enter]
                t_own = span if np.isfinite(span) else np.inf
            t_best, leave_pos = t_own, -1
            for k in range(m):
                delta = -gamma * d[k]
                if delta > _PIV:
                    room = ub_ext[basis[k]] - xB[k]
                    t_k = max(room, 0.0) / delta
                elif delta < -_PIV:
                    room = xB[k] - lb_ext[basis[k]]
                    t_k = max(room, 0.0) / (-delta)
                else:
                    continue
                if t_k < t_best - 1e-13 or (
                        t_k < t_best + 1e-13
                        and (leave_pos < 0 or basis[k] < basis[leave_pos])):
                    t_best, leave_pos = t_k, k
            if not np.isfinite(t_best):
                if allow_unbounded:
                    return UNBOUNDED, None, None
                raise SimplexError("phase-1 cost unbounded below")
            if leave_pos < 0:
                # entering variable travels to its opposite bound
                state[enter] = -state[enter]
                continue
            leave = basis[leave_pos]
            delta = -gamma * d[leave_pos]
            state[leave] = 1 if delta > 0 else -1
            basis[leave_pos] = enter
            in_basis[leave] = False
            in_basis[enter] = True
        raise SimplexError("simplex iteration limit reached")

    # Phase 1: drive the artificial residual to zero.
    cost1 = np.concatenate([np.zeros(n), np.ones(m)])
    status, xB, _ = run(cost1, allow_unbounded=False)
    art_val = sum(xB[k] for k in range(m) if basis[k] >= n)
    if art_val > _FEAS * max(1.0, np.linalg.norm(b, np.inf)):
        return INFEASIBLE, None, np.nan, None

    # Pin artificials at zero and optimize the true cost.
    ub_ext[n:] = 0.0
    state[n:][~in_basis[n:]] = -1
    cost2 = np.concatenate([c, np.zeros(m)])
    status, xB, y = run(cost2, allow_unbounded=True)
    if status == UNBOUNDED:
        return UNBOUNDED, None, np.nan, None

    x = nonbasic_values()
    x[basis] = xB
    x = x[:n]
    return OPTIMAL, x, float(c @ x), y


def solve_standard(A_eq, b_eq, lb, ub, cost=None):
    """min cost'x  s.t.  A_eq x = b_eq, lb <= x <= ub  (feasibility if cost None)."""
    A_eq = np.atleast_2d(np.asarray(A_eq, dtype=float))
    if cost is None:
        cost = np.zeros(A_eq.shape[1])
    status, x, val, _ = _simplex_bounded(A_eq, b_eq, cost, lb, ub)
    return LPResult(status, val, x)


def solve_inequality(cost, C, d, sense="max"):
    """max/min cost'x  s.t.  C x <= d  with x free.

    Solved via the dual; the primal point is recovered from the equality
    multipliers, and nonnegative dual reduced costs certify C x* <= d.
    """
    C = np.atleast_2d(np.asarray(C, dtype=float))
    d = np.asarray(d, dtype=float).ravel()
    cost = np.asarray(cost, dtype=float).ravel()
    q, n = C.shape
    if cost.size != n:
        raise ValueError(f"cost has dimension {cost.size}, polytope has {n}")
    if not np.all(np.isfinite(cost)):
        raise ValueError("non-finite cost vector")
    cmax = cost if sense == "max" else -cost

    status, y, val, x = _simplex_bounded(
        C.T, cmax, d, np.zeros(q), np.full(q, np.inf))
    if status == OPTIMAL:
        value = val if sense == "max" else -val
        return LPResult(OPTIMAL, value, np.asarray(x, dtype=float))
    if status == UNBOUNDED:
        # dual unbounded below => primal infeasible
        return LPResult(INFEASIBLE)
    # Dual infeasible: primal is unbounded if it has a point at all.
    feasible, _ = feasible_point(C, d)
    return LPResult(UNBOUNDED if feasible else INFEASIBLE)


def feasible_point(C, d):
    """(bool, point) for {x : C x <= d}, via  min t  s.t.  C x - t <= d, t >= 0."""
    C = np.atleast_2d(np.asarray(C, dtype=float))
    d = np.asarray(d, dtype=float).ravel()
    q, n = C.shape
    Caug = np.vstack([np.hstack([C, -np.ones((q, 1))]),
                      np.concatenate([np.zeros(n), [-1.0]])])
    daug = np.concatenate([d, [0.0]])
    res = solve_inequality(np.concatenate([np.zeros(n), [-1.0]]),
                           Caug, daug, sense="max")
    if res.status != OPTIMAL:       # always feasible and bounded by design
        raise SimplexError("feasibility auxiliary LP failed")
    t = -res.value
    if t <= _FEAS:
        return True, res.point[:n]
    return False, None
