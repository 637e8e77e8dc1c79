"""Assembly of the reduced optimization problem: orbit variables, objective,
PSD blocks and nonnegativity constraints, plus the level-2 linear-programming
mode and the doubling inequality for derived bounds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from mixedsdp.blocks import BlockSpec, build_blocks_d0, build_blocks_empty
from mixedsdp.codes import (
    Code,
    OrbitId,
    OrbitTable,
    ProblemSpec,
    canonical_orbit,
    enumerate_orbits,
    orbit_size,
    singleton_orbit,
)
from mixedsdp.tableaux import build_shape_index_d0, build_shape_index_empty


@dataclass(frozen=True)
class SdpBlock:
    """One affine constraint F0 + sum_i y_i F_i >= 0 (matrix inequality)."""

    label: str
    dim: int
    f0: tuple
    coeff: dict  # variable index -> integer matrix (tuple of tuples)


@dataclass(frozen=True)
class SdpProblem:
    """Block-diagonal linear matrix inequality in orbit variables.

    Variables are the feasible orbits except the empty one, whose value is
    the constant 1 (substituted into the constant parts).  The objective is
    maximization of ``objective . y``; every variable also has an explicit
    nonnegativity constraint.
    """

    spec: ProblemSpec
    k: int
    variables: tuple[OrbitId, ...]
    objective: tuple[int, ...]
    blocks: tuple[SdpBlock, ...]
    nonneg: tuple[int, ...]
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self._index.update({w: i for i, w in enumerate(self.variables)})

    @property
    def num_vars(self) -> int:
        return len(self.variables)

    def variable_index(self, w: OrbitId) -> int:
        return self._index[w]

    def singleton_index(self) -> int:
        return self.variable_index(singleton_orbit(self.spec))


def _adopt_blocks(
    raw: list[BlockSpec], var_of_orbit: dict[int, int]
) -> list[SdpBlock]:
    out = []
    for b in raw:
        coeff = {}
        for widx, mat in b.coeff.items():
            if widx in var_of_orbit:
                coeff[var_of_orbit[widx]] = mat
        f0 = b.f0 if b.f0 is not None else tuple(
            tuple(0 for _ in range(b.dim)) for _ in range(b.dim)
        )
        out.append(SdpBlock(f"{b.case}:{b.label}", b.dim, f0, coeff))
    return out


def _variable_map(table: OrbitTable, max_size: int) -> tuple[list[OrbitId], dict[int, int]]:
    variables = []
    var_of_orbit = {}
    for i, w in enumerate(table.orbits):
        if i == 0 or not table.feasible[i] or w.size > max_size:
            continue
        var_of_orbit[i] = len(variables)
        variables.append(w)
    return variables, var_of_orbit


def build_sdp(spec: ProblemSpec, table: OrbitTable | None = None) -> SdpProblem:
    """The full level-3 problem: blocks from both stabilizer cases, the
    augmented empty-code block carrying the constant, and nonnegativity for
    every orbit variable."""
    if spec.k != 3:
        raise ValueError("build_sdp expects hierarchy level 3")
    if table is None:
        table = enumerate_orbits(spec)
    variables, var_of_orbit = _variable_map(table, max_size=3)
    raw = build_blocks_d0(spec, build_shape_index_d0(spec), table)
    raw += build_blocks_empty(spec, build_shape_index_empty(spec), table)
    blocks = _adopt_blocks(raw, var_of_orbit)
    objective = [0] * len(variables)
    sidx = variables.index(singleton_orbit(spec))
    objective[sidx] = spec.num_words
    return SdpProblem(
        spec=spec,
        k=3,
        variables=tuple(variables),
        objective=tuple(objective),
        blocks=tuple(blocks),
        nonneg=tuple(range(len(variables))),
    )


def build_lp_k2(spec: ProblemSpec, table: OrbitTable | None = None) -> SdpProblem:
    """The level-2 problem: only the empty-code-case blocks (scalars plus
    the augmented 2x2) and nonnegativity on singleton and pair variables."""
    if spec.k != 2:
        raise ValueError("build_lp_k2 expects hierarchy level 2")
    if table is None:
        table = enumerate_orbits(spec)
    variables, var_of_orbit = _variable_map(table, max_size=2)
    raw = build_blocks_empty(spec, build_shape_index_empty(spec), table)
    blocks = _adopt_blocks(raw, var_of_orbit)
    objective = [0] * len(variables)
    sidx = variables.index(singleton_orbit(spec))
    objective[sidx] = spec.num_words
    return SdpProblem(
        spec=spec,
        k=2,
        variables=tuple(variables),
        objective=tuple(objective),
        blocks=tuple(blocks),
        nonneg=tuple(range(len(variables))),
    )


def build_problem(spec: ProblemSpec) -> SdpProblem:
    return build_sdp(spec) if spec.k == 3 else build_lp_k2(spec)


def derived_doubling_bound(spec: ProblemSpec, known_bound: int) -> int:
    """Bound for (n2+1, n3, d) from a valid bound for (n2, n3, d): adding a
    binary coordinate at most doubles the maximum code size."""
    return 2 * known_bound


def code_indicator_assignment(
    spec: ProblemSpec, table: OrbitTable, c: Code
) -> dict[int, Fraction]:
    """Group-averaged indicator of a code: the fraction of each orbit's
    codes that are subcodes of ``c``.  Feasible for the assembled problem
    whenever ``c`` has minimum distance >= d, with objective |c|."""
    counts: dict[int, int] = {}
    for size in (1, 2, 3):
        for sub in combinations(c.words, size):
            w = canonical_orbit(spec, Code(tuple(sub)))
            idx = table.index_of(w)
            counts[idx] = counts.get(idx, 0) + 1
    return {
        idx: Fraction(cnt, orbit_size(spec, table.orbits[idx]))
        for idx, cnt in counts.items()
    }


def problem_to_json(problem: SdpProblem) -> str:
    """JSON form: variables with orbit descriptions, blocks as sparse
    triplets of rational strings."""
    spec = problem.spec
    doc = {
        "spec": {"n2": spec.n2, "n3": spec.n3, "d": spec.d, "k": problem.k},
        "variables": [
            {"index": i, "size": w.size, "orbit": w.describe()}
            for i, w in enumerate(problem.variables)
        ],
        "objective": {
            str(i): str(Fraction(c))
            for i, c in enumerate(problem.objective)
            if c
        },
        "nonneg": list(problem.nonneg),
        "blocks": [],
    }
    for b in problem.blocks:
        entry = {"label": b.label, "dim": b.dim, "f0": [], "coeff": {}}
        for i in range(b.dim):
            for j in range(i, b.dim):
                if b.f0[i][j]:
                    entry["f0"].append([i, j, str(Fraction(b.f0[i][j]))])
        for var, mat in sorted(b.coeff.items()):
            trips = [
                [i, j, str(Fraction(mat[i][j]))]
                for i in range(b.dim)
                for j in range(i, b.dim)
                if mat[i][j]
            ]
            if trips:
                entry["coeff"][str(var)] = trips
        doc["blocks"].append(entry)
    return json.dumps(doc, indent=2)
