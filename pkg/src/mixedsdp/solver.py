"""Embedded primal-dual interior-point solver for block-diagonal linear
matrix inequalities, SDPA sparse-format interchange, and a guarded step that
turns solver output into certified integer bounds.

The solver follows the central path with Nesterov-Todd scaling and an
adaptive centering parameter from an affine predictor probe, starting from
identity slacks (infeasible start).  One-dimensional blocks, including the
explicit nonnegativity constraints, are handled as linear inequalities.
Rational problem data is converted to binary floating point once, at entry;
coefficients that do not round-trip through a double are counted and
reported.  Each block is rescaled to unit magnitude, which changes neither
the feasible set nor the dual objective value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from mixedsdp.model import SdpProblem


class SolverError(RuntimeError):
    """Base class for solver failures."""


class NonConvergenceError(SolverError):
    """Iteration limit reached; carries the last iterate."""

    def __init__(self, message: str, solution: "Solution"):
        super().__init__(message)
        self.solution = solution


class ConditioningError(SolverError):
    """The Newton system became numerically singular."""


class CertificationError(SolverError):
    """The guard is too large to report a meaningful integer bound."""


class SdpaParseError(ValueError):
    """Malformed SDPA file or solver output."""


@dataclass
class Solution:
    """Solver output: primal value of the maximization, the dual value that
    upper-bounds it, and feasibility diagnostics."""

    objective: float
    dual_objective: float
    y: np.ndarray
    iterations: int
    converged: bool
    primal_residual: float
    dual_residual: float
    min_block_eig: float
    inexact_coefficients: int
    trace: list[dict] = field(default_factory=list)

    @property
    def gap(self) -> float:
        return abs(self.objective - self.dual_objective)

    @property
    def feas_residual(self) -> float:
        return max(self.primal_residual, self.dual_residual, -min(self.min_block_eig, 0.0))

    def log_lines(self) -> list[str]:
        out = []
        for t in self.trace:
            out.append(
                "it {iter:3d} obj {pobj:+.12e} dual {dobj:+.12e} "
                "relgap {relgap:.3e} pinf {pinf:.3e} dinf {dinf:.3e} "
                "step {alpha_p:.3f}/{alpha_d:.3f} sigma {sigma:.3f}".format(**t)
            )
        return out


@dataclass(frozen=True)
class CertifiedBound:
    value: int
    guard: float
    provenance: str


def solution_to_json(solution: Solution) -> str:
    import json

    return json.dumps({
        "objective": solution.objective,
        "dualObjective": solution.dual_objective,
        "gap": solution.gap,
        "iterations": solution.iterations,
        "converged": solution.converged,
        "primalResidual": solution.primal_residual,
        "dualResidual": solution.dual_residual,
        "minBlockEigenvalue": solution.min_block_eig,
        "inexactCoefficients": solution.inexact_coefficients,
        "y": [float(v) for v in solution.y],
        "trace": solution.trace,
    }, indent=2)


def _to_float(value, counter: list[int]) -> float:
    f = float(value)
    if f != value:
        counter[0] += 1
    return f


@dataclass
class _SdpBlockData:
    label: str
    dim: int
    gamma: float
    f0: np.ndarray          # (s, s)
    var_ids: np.ndarray     # (mk,)
    fmat: np.ndarray        # (mk, s, s)


@dataclass
class _LpData:
    l0: np.ndarray          # (n,)
    rows: np.ndarray        # (n, m)
    gammas: np.ndarray      # (n,)


def _prepare(problem: SdpProblem):
    m = problem.num_vars
    counter = [0]
    sdp_blocks: list[_SdpBlockData] = []
    lp_l0: list[float] = []
    lp_rows: list[np.ndarray] = []
    lp_gammas: list[float] = []

    for block in problem.blocks:
        if block.dim == 1:
            row = np.zeros(m)
            for var, mat in block.coeff.items():
                row[var] = _to_float(mat[0][0], counter)
            c0 = _to_float(block.f0[0][0], counter)
            gamma = max(1.0, np.abs(row).max(initial=0.0), abs(c0))
            lp_l0.append(c0 / gamma)
            lp_rows.append(row / gamma)
            lp_gammas.append(gamma)
            continue
        s = block.dim
        f0 = np.array(
            [[_to_float(v, counter) for v in r] for r in block.f0]
        )
        var_ids = np.array(sorted(block.coeff), dtype=np.int64)
        fmat = np.zeros((len(var_ids), s, s))
        for pos, var in enumerate(var_ids):
            fmat[pos] = [[_to_float(v, counter) for v in r] for r in block.coeff[var]]
        gamma = max(1.0, np.abs(f0).max(initial=0.0), np.abs(fmat).max(initial=0.0))
        sdp_blocks.append(_SdpBlockData(
            block.label, s, gamma, f0 / gamma, var_ids, fmat / gamma
        ))

    for var in problem.nonneg:
        row = np.zeros(m)
        row[var] = 1.0
        lp_l0.append(0.0)
        lp_rows.append(row)
        lp_gammas.append(1.0)

    lp = _LpData(
        np.array(lp_l0),
        np.vstack(lp_rows) if lp_rows else np.zeros((0, m)),
        np.array(lp_gammas),
    )
    b = np.array([_to_float(c, counter) for c in problem.objective])
    return b, sdp_blocks, lp, counter[0]


def _sym_sqrt_pair(mat: np.ndarray):
    """(sqrt, inverse sqrt) of a symmetric positive definite matrix."""
    vals, vecs = np.linalg.eigh(mat)
    vals = np.maximum(vals, 1e-300)
    r = np.sqrt(vals)
    return (vecs * r) @ vecs.T, (vecs / r) @ vecs.T


def _lyapunov(v: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Solve V U + U V = 2 R for symmetric U, V positive definite."""
    vals, vecs = np.linalg.eigh(v)
    vals = np.maximum(vals, 1e-300)
    r = vecs.T @ rhs @ vecs
    u = 2.0 * r / np.add.outer(vals, vals)
    return vecs @ u @ vecs.T


def _max_step(mat: np.ndarray, direction: np.ndarray) -> float:
    """Largest alpha with mat + alpha*direction still positive definite."""
    try:
        chol = np.linalg.cholesky(mat)
    except np.linalg.LinAlgError:
        return 0.0
    inv = np.linalg.inv(chol)
    w = inv @ direction @ inv.T
    lam = float(np.linalg.eigvalsh(0.5 * (w + w.T))[0])
    if lam >= -1e-14:
        return np.inf
    return -1.0 / lam


def _lp_max_step(vec: np.ndarray, direction: np.ndarray) -> float:
    neg = direction < 0
    if not neg.any():
        return np.inf
    return float((-vec[neg] / direction[neg]).min())


def solve(problem: SdpProblem, tol: float = 1e-8, max_iter: int = 500) -> Solution:
    """Maximize the problem objective subject to its matrix inequalities.

    Converged when the relative duality gap and the scaled feasibility
    residuals all fall below ``tol``.  Deterministic for identical inputs.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    b, blocks, lp, inexact = _prepare(problem)
    m = problem.num_vars
    nu = sum(bl.dim for bl in blocks) + len(lp.l0)
    if m == 0 or nu == 0:
        return Solution(0.0, 0.0, np.zeros(m), 0, True, 0.0, 0.0, 0.0, inexact)

    # objective normalized to unit magnitude; reported values are unscaled
    bscale = max(1.0, float(np.abs(b).max(initial=0.0)))
    b = b / bscale
    eta_p = 100.0
    eta_d = 100.0
    y = np.zeros(m)
    S = [eta_p * np.eye(bl.dim) for bl in blocks]
    Z = [eta_d * np.eye(bl.dim) for bl in blocks]
    s_lp = eta_p * np.ones(len(lp.l0))
    z_lp = eta_d * np.ones(len(lp.l0))

    fvecs = [bl.fmat.reshape(len(bl.var_ids), -1) for bl in blocks]
    trace: list[dict] = []
    tiny_steps = 0

    def objective_pair():
        pobj = bscale * float(b @ y)
        dobj = float(lp.l0 @ z_lp)
        for bl, zk in zip(blocks, Z):
            dobj += float(np.tensordot(bl.f0, zk))
        return pobj, bscale * dobj

    def residuals():
        rp = []
        for bl, sk in zip(blocks, S):
            rp.append(bl.f0 + np.tensordot(y[bl.var_ids], bl.fmat, axes=1) - sk)
        rlp = lp.l0 + lp.rows @ y - s_lp
        # dual residual, with the magnitude of the summed terms tracked so
        # infeasibility is measured backward-error style
        rd = -b.copy()
        rd_mag = np.abs(b).copy()
        for k, bl in enumerate(blocks):
            contrib = fvecs[k] @ Z[k].reshape(-1)
            rd[bl.var_ids] -= contrib
            rd_mag[bl.var_ids] += np.abs(contrib)
        lp_contrib = lp.rows.T @ z_lp
        rd -= lp_contrib
        rd_mag += np.abs(lp_contrib)
        return rp, rlp, rd, rd_mag

    converged = False
    it = 0
    for it in range(1, max_iter + 1):
        rp, rlp, rd, rd_mag = residuals()
        pobj, dobj = objective_pair()
        mu = sum(float(np.tensordot(sk, zk)) for sk, zk in zip(S, Z))
        mu += float(s_lp @ z_lp)
        mu /= nu
        relgap = abs(pobj - dobj) / max(1.0, 0.5 * (abs(pobj) + abs(dobj)))
        pinf = max(
            [float(np.abs(r).max(initial=0.0)) for r in rp] + [float(np.abs(rlp).max(initial=0.0))]
        ) / (1.0 + float(np.abs(y).max(initial=0.0)))
        dinf = float((np.abs(rd) / (1.0 + rd_mag)).max(initial=0.0))
        certifiable = pinf <= 1e-6 and dinf <= 1e-6
        entry = {
            "iter": it - 1, "pobj": pobj, "dobj": dobj, "mu": mu,
            "relgap": relgap, "pinf": pinf, "dinf": dinf,
            "alpha_p": 0.0, "alpha_d": 0.0, "sigma": 0.0,
            "certifiable": certifiable,
        }
        if relgap <= tol and pinf <= tol and dinf <= tol:
            trace.append(entry)
            converged = True
            break

        # centering floor: driving mu far below what the tolerance needs
        # destroys the Newton system's conditioning before the dual residual
        # has finished converging
        gap_scale = max(1.0, 0.5 * (abs(pobj) + abs(dobj))) / bscale
        mu_target = 0.02 * tol * gap_scale / nu

        # NT scalings
        winv = []
        s_inv = []
        w_half = []
        w_ihalf = []
        v_mats = []
        for sk, zk in zip(S, Z):
            zh, _ = _sym_sqrt_pair(zk)
            g = zh @ sk @ zh
            _, gih = _sym_sqrt_pair(0.5 * (g + g.T))
            wi = 0.5 * ((zh @ gih @ zh) + (zh @ gih @ zh).T)
            winv.append(wi)
            wih, wh = _sym_sqrt_pair(wi)  # sqrt of W^-1 is W^-1/2
            w_half.append(wh)
            w_ihalf.append(wih)
            v = wih @ sk @ wih
            v_mats.append(0.5 * (v + v.T))
            vals, vecs = np.linalg.eigh(sk)
            s_inv.append((vecs / np.maximum(vals, 1e-300)) @ vecs.T)
        lp_ratio = z_lp / s_lp

        # Schur complement
        B = np.zeros((m, m))
        for bl, wi, fv in zip(blocks, winv, fvecs):
            t = np.einsum("ab,ibc,cd->iad", wi, bl.fmat, wi, optimize=True)
            B[np.ix_(bl.var_ids, bl.var_ids)] += fv @ t.reshape(len(bl.var_ids), -1).T
        if len(lp.l0):
            B += (lp.rows.T * lp_ratio) @ lp.rows
        B = 0.5 * (B + B.T)
        if not np.isfinite(B).all():
            raise ConditioningError(f"Newton system lost finiteness at iteration {it}")

        bmax = float(np.abs(B).max(initial=1.0))
        chol = None
        ridge = 0.0
        for attempt in range(6):
            try:
                chol = np.linalg.cholesky(B + ridge * np.eye(m))
                break
            except np.linalg.LinAlgError:
                ridge = bmax * 10.0 ** (-14 + 2 * attempt)
        if chol is None:
            raise ConditioningError(f"Schur complement not positive definite at iteration {it}")

        def solve_newton(rc_blocks, rc_lp):
            g = -rd.copy()
            for k, bl in enumerate(blocks):
                mk = rc_blocks[k] - winv[k] @ rp[k] @ winv[k]
                g[bl.var_ids] += fvecs[k] @ mk.reshape(-1)
            if len(lp.l0):
                g += lp.rows.T @ (rc_lp - lp_ratio * rlp)
            dy = np.linalg.solve(chol.T, np.linalg.solve(chol, g))
            resid = g - B @ dy
            dy += np.linalg.solve(chol.T, np.linalg.solve(chol, resid))
            d_s = [
                rp[k] + np.tensordot(dy[bl.var_ids], bl.fmat, axes=1)
                for k, bl in enumerate(blocks)
            ]
            d_z = []
            for k in range(len(blocks)):
                dz = rc_blocks[k] - winv[k] @ d_s[k] @ winv[k]
                d_z.append(0.5 * (dz + dz.T))
            d_slp = rlp + lp.rows @ dy
            d_zlp = rc_lp - lp_ratio * d_slp if len(lp.l0) else np.zeros(0)
            return dy, d_s, d_z, d_slp, d_zlp

        def step_lengths(d_s, d_z, d_slp, d_zlp):
            ap = min(
                [_max_step(sk, ds) for sk, ds in zip(S, d_s)] + [_lp_max_step(s_lp, d_slp)]
            )
            ad = min(
                [_max_step(zk, dz) for zk, dz in zip(Z, d_z)] + [_lp_max_step(z_lp, d_zlp)]
            )
            return min(1.0, 0.98 * ap), min(1.0, 0.98 * ad)

        # affine predictor
        rc_aff = [-zk for zk in Z]
        dy_a, ds_a, dz_a, dslp_a, dzlp_a = solve_newton(rc_aff, -z_lp)
        ap_a, ad_a = step_lengths(ds_a, dz_a, dslp_a, dzlp_a)
        mu_aff = sum(
            float(np.tensordot(sk + ap_a * ds, zk + ad_a * dz))
            for sk, ds, zk, dz in zip(S, ds_a, Z, dz_a)
        )
        mu_aff += float((s_lp + ap_a * dslp_a) @ (z_lp + ad_a * dzlp_a))
        mu_aff /= nu
        sigma = min(0.99, max(1e-8, (max(mu_aff, 0.0) / mu) ** 3))
        sigma_mu = max(sigma * mu, min(0.5 * mu, mu_target))

        # corrector: second-order term in the scaled space, per block a
        # Lyapunov solve V U + U V = 2(sigma*mu*I - V^2 - H(dVs dVz));
        # falls back to plain centering if the scaled products overflow
        rc_combined = []
        with np.errstate(over="ignore", invalid="ignore"):
            for k in range(len(blocks)):
                v = v_mats[k]
                cross = w_ihalf[k] @ (ds_a[k] @ dz_a[k]) @ w_half[k]
                rc = None
                if np.isfinite(cross).all():
                    rhs = (
                        sigma_mu * np.eye(blocks[k].dim)
                        - v @ v
                        - 0.5 * (cross + cross.T)
                    )
                    u = _lyapunov(v, 0.5 * (rhs + rhs.T))
                    cand = w_ihalf[k] @ u @ w_ihalf[k]
                    if np.isfinite(cand).all():
                        rc = 0.5 * (cand + cand.T)
                if rc is None:
                    rc = sigma_mu * s_inv[k] - Z[k]
                rc_combined.append(rc)
            rc_lp = np.zeros(0)
            if len(lp.l0):
                rc_lp = sigma_mu / s_lp - z_lp - dslp_a * dzlp_a / s_lp
                bad = ~np.isfinite(rc_lp)
                if bad.any():
                    rc_lp[bad] = (sigma_mu / s_lp - z_lp)[bad]
        dy, d_s, d_z, d_slp, d_zlp = solve_newton(rc_combined, rc_lp)
        alpha_p, alpha_d = step_lengths(d_s, d_z, d_slp, d_zlp)

        y += alpha_p * dy
        for k in range(len(blocks)):
            S[k] = 0.5 * (S[k] + S[k].T) + alpha_p * d_s[k]
            Z[k] = 0.5 * (Z[k] + Z[k].T) + alpha_d * d_z[k]
        s_lp = s_lp + alpha_p * d_slp
        z_lp = z_lp + alpha_d * d_zlp
        if not (
            np.isfinite(y).all()
            and all(np.isfinite(sk).all() for sk in S)
            and all(np.isfinite(zk).all() for zk in Z)
        ):
            raise ConditioningError(f"iterate lost finiteness at iteration {it}")

        entry.update(alpha_p=alpha_p, alpha_d=alpha_d, sigma=sigma)
        trace.append(entry)

        if max(alpha_p, alpha_d) < 1e-7:
            tiny_steps += 1
            if tiny_steps >= 5:
                achieved = max(
                    min(t["relgap"] for t in trace),
                    min(t["pinf"] for t in trace),
                    min(t["dinf"] for t in trace),
                )
                raise ConditioningError(
                    f"no progress for {tiny_steps} iterations (iteration {it}); "
                    f"precision floor near {achieved:.1e}, consider a larger tol"
                )
        else:
            tiny_steps = 0

    pobj, dobj = objective_pair()
    rp, rlp, rd, rd_mag = residuals()
    pres = max(
        [bl.gamma * float(np.abs(r).max(initial=0.0)) for bl, r in zip(blocks, rp)]
        + [float((lp.gammas * np.abs(rlp)).max(initial=0.0))],
        default=0.0,
    )
    dres = float((np.abs(rd) / (1.0 + rd_mag)).max(initial=0.0))
    min_eig = np.inf
    for bl in blocks:
        actual = bl.f0 + np.tensordot(y[bl.var_ids], bl.fmat, axes=1)
        min_eig = min(min_eig, float(np.linalg.eigvalsh(actual)[0]))
    if len(lp.l0):
        min_eig = min(min_eig, float((lp.l0 + lp.rows @ y).min()))
    solution = Solution(
        objective=pobj,
        dual_objective=dobj,
        y=y.copy(),
        iterations=it,
        converged=converged,
        primal_residual=pres,
        dual_residual=dres,
        min_block_eig=float(min_eig),
        inexact_coefficients=inexact,
        trace=trace,
    )
    if not converged:
        raise NonConvergenceError(
            f"no convergence within {max_iter} iterations "
            f"(relgap {trace[-1]['relgap']:.2e})",
            solution,
        )
    return solution


def certify(problem: SdpProblem, solution: Solution) -> CertifiedBound:
    """Integer bound from a converged solve: floor of the dual objective
    plus a guard covering the gap and the feasibility error."""
    if not solution.converged:
        raise CertificationError("cannot certify an unconverged solution")
    scale = max(1.0, abs(solution.objective))
    guard = max(solution.gap, 10.0 * solution.feas_residual * scale)
    if guard >= 0.5:
        raise CertificationError(
            f"guard {guard:.3g} too large for an integer certificate"
        )
    return CertifiedBound(
        value=int(np.floor(solution.dual_objective + guard)),
        guard=guard,
        provenance="solver",
    )


# ---------------------------------------------------------------------------
# SDPA sparse format (.dat-s) interchange.

@dataclass(frozen=True)
class SdpaData:
    """Canonical content of an SDPA sparse file."""

    num_vars: int
    block_sizes: tuple[int, ...]
    objective: tuple[float, ...]
    entries: tuple[tuple[int, int, int, int, float], ...]


def problem_to_sdpa_data(problem: SdpProblem) -> SdpaData:
    """Float view of a problem in SDPA terms: minimize (-objective).y with
    X = sum_i y_i F_i - (-F0) >= 0 blockwise; one trailing diagonal block
    collects the scalar inequalities and the nonnegativity constraints."""
    m = problem.num_vars
    sdp_blocks = [b for b in problem.blocks if b.dim >= 2]
    scalar_blocks = [b for b in problem.blocks if b.dim == 1]
    diag_size = len(scalar_blocks) + len(problem.nonneg)
    sizes = tuple(b.dim for b in sdp_blocks) + ((-diag_size,) if diag_size else ())
    objective = tuple(-float(c) for c in problem.objective)
    entries: list[tuple[int, int, int, int, float]] = []
    for blkno, b in enumerate(sdp_blocks, start=1):
        for i in range(b.dim):
            for j in range(i, b.dim):
                if b.f0[i][j]:
                    entries.append((0, blkno, i + 1, j + 1, -float(b.f0[i][j])))
        for var in sorted(b.coeff):
            mat = b.coeff[var]
            for i in range(b.dim):
                for j in range(i, b.dim):
                    if mat[i][j]:
                        entries.append((var + 1, blkno, i + 1, j + 1, float(mat[i][j])))
    if diag_size:
        blkno = len(sdp_blocks) + 1
        pos = 0
        for b in scalar_blocks:
            pos += 1
            if b.f0[0][0]:
                entries.append((0, blkno, pos, pos, -float(b.f0[0][0])))
            for var in sorted(b.coeff):
                val = b.coeff[var][0][0]
                if val:
                    entries.append((var + 1, blkno, pos, pos, float(val)))
        for var in problem.nonneg:
            pos += 1
            entries.append((var + 1, blkno, pos, pos, 1.0))
    entries.sort()
    return SdpaData(m, sizes, objective, tuple(entries))


def emit_sdpa(problem: SdpProblem, destination) -> Path:
    """Write the problem in SDPA sparse format (.dat-s).

    The header comment documents the sign conventions: the maximization is
    encoded by negating the objective vector, and constant matrices are
    emitted as -F0 per the SDPA convention X = sum_i x_i F_i - F0.
    """
    data = problem_to_sdpa_data(problem)
    spec = problem.spec
    lines = [
        f'"mixed binary/ternary code bound: n2={spec.n2} n3={spec.n3} '
        f'd={spec.d} k={problem.k}',
        '"maximization encoded by negated objective; constant matrices are -F0',
        f"{data.num_vars}",
        f"{len(data.block_sizes)}",
        " ".join(str(s) for s in data.block_sizes),
        " ".join(repr(c) for c in data.objective),
    ]
    for matno, blkno, i, j, val in data.entries:
        lines.append(f"{matno} {blkno} {i} {j} {repr(val)}")
    path = Path(destination)
    path.write_text("\n".join(lines) + "\n")
    return path


def parse_sdpa(source) -> SdpaData:
    """Read an SDPA sparse file (path, or text containing newlines) back
    into its canonical content."""
    text = str(source)
    if "\n" not in text:
        text = Path(source).read_text()
    tokens_needed = 4
    header: list[str] = []
    entries: list[tuple[int, int, int, int, float]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith('"') or line.startswith("*"):
            continue
        if tokens_needed:
            header.append(line)
            tokens_needed -= 1
            continue
        parts = line.split()
        if len(parts) != 5:
            raise SdpaParseError(f"bad entry line: {raw!r}")
        matno, blkno, i, j = (int(p) for p in parts[:4])
        entries.append((matno, blkno, i, j, float(parts[4])))
    if len(header) < 4:
        raise SdpaParseError("incomplete SDPA header")
    try:
        num_vars = int(header[0].split()[0])
        num_blocks = int(header[1].split()[0])
        sizes = tuple(
            int(t) for t in re.split(r"[\s,{}()]+", header[2]) if t
        )
        objective = tuple(
            float(t) for t in re.split(r"[\s,{}()]+", header[3]) if t
        )
    except ValueError as exc:
        raise SdpaParseError(f"bad SDPA header: {exc}") from exc
    if len(sizes) != num_blocks:
        raise SdpaParseError(
            f"block count {num_blocks} does not match sizes line {sizes}"
        )
    if len(objective) != num_vars:
        raise SdpaParseError(
            f"variable count {num_vars} does not match objective length "
            f"{len(objective)}"
        )
    entries.sort()
    return SdpaData(num_vars, sizes, objective, tuple(entries))


_PRIMAL_PATTERNS = (
    re.compile(r"objValPrimal\s*=\s*([-+0-9.eE]+)"),
    re.compile(r"Primal objective value:\s*([-+0-9.eE]+)"),
)
_DUAL_PATTERNS = (
    re.compile(r"objValDual\s*=\s*([-+0-9.eE]+)"),
    re.compile(r"Dual objective value:\s*([-+0-9.eE]+)"),
)


def parse_sdpa_output(text: str) -> tuple[float, float]:
    """Extract (primal, dual) objective values from SDPA-family solver
    output; raises on malformed text."""
    primal = dual = None
    for pat in _PRIMAL_PATTERNS:
        match = pat.search(text)
        if match:
            primal = float(match.group(1))
            break
    for pat in _DUAL_PATTERNS:
        match = pat.search(text)
        if match:
            dual = float(match.group(1))
            break
    if primal is None or dual is None:
        raise SdpaParseError("missing objective values in solver output")
    return primal, dual
