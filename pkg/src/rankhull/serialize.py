"""JSON forms of towers, elements, matrices, codes and reports.

Elements are emitted as canonical integers; on input either the integer or a
coefficient array is accepted.
"""
from __future__ import annotations

from typing import Any

from .codes import Flavor, HullReport, RankCode, ZeroCode
from .construct import GabidulinSpec, ScaledSelfDualBasis
from .gf import FieldTower
from .hullvary import DescentWitness, VariationTrace
from .linalg import Matrix
from .oracle import SpectrumReport


def tower_to_json(T: FieldTower) -> dict:
    return T.config()


def tower_from_json(d: dict) -> FieldTower:
    return FieldTower.from_config(d)


def matrix_to_json(M: Matrix) -> list[list[int]]:
    return M.tolist()


def matrix_from_json(rows: list, tower: FieldTower, over_fq: bool = False) -> Matrix:
    parsed = [[tower.parse(x) for x in r] for r in rows]
    if over_fq:
        return Matrix.from_rows(tower.Fq, parsed)
    return Matrix.from_rows(tower, parsed)


def code_to_json(C: RankCode | ZeroCode) -> dict:
    G = matrix_to_json(C.G) if isinstance(C, RankCode) else []
    return {"field": tower_to_json(C.tower), "n": C.n, "k": C.k, "G": G}


def code_from_json(d: dict, tower: FieldTower | None = None) -> RankCode:
    tower = tower or tower_from_json(d["field"])
    C = RankCode(matrix_from_json(d["G"], tower), tower)
    if "n" in d and d["n"] != C.n or "k" in d and d["k"] != C.k:
        raise ValueError("n/k do not match the generator matrix")
    return C


def hull_report_to_json(r: HullReport) -> dict:
    return {
        "flavor": r.flavor.value,
        "h": r.h,
        "hull_basis": [list(v) for v in r.hull_basis],
        "kernel_basis": [list(z) for z in r.kernel_basis],
    }


def trace_to_json(t: VariationTrace) -> dict:
    return {
        "flavor": t.flavor.value,
        "initial_h": t.initial_h,
        "final_h": t.final_h,
        "steps": [{"M": matrix_to_json(M), "h_after": h} for M, h in t.steps],
    }


def witness_to_json(w: DescentWitness) -> dict:
    return {"u": list(w.u), "M": matrix_to_json(w.M), "lam": w.lam}


def spectrum_to_json(r: SpectrumReport) -> dict:
    return {
        "code": code_to_json(r.code),
        "flavor": r.flavor.value,
        "group_size": r.group_size,
        "histogram": [[h, c] for h, c in sorted(r.histogram.items())],
        "attained": r.attained,
    }


def basis_to_json(b: ScaledSelfDualBasis) -> dict:
    return {"alpha": list(b.alpha), "lambda": b.lam}


def basis_from_json(d: dict, tower: FieldTower) -> ScaledSelfDualBasis:
    return ScaledSelfDualBasis(tower, tuple(tower.parse(a) for a in d["alpha"]), tower.parse(d["lambda"]))


def gabidulin_spec_to_json(s: GabidulinSpec) -> dict:
    return {"alpha": list(s.alpha), "k": s.k, "s": s.s}


def gabidulin_spec_from_json(d: dict, tower: FieldTower) -> GabidulinSpec:
    return GabidulinSpec(tower, tuple(tower.parse(a) for a in d["alpha"]), int(d["k"]), int(d.get("s", 1)))


def flavor_from_str(s: Any) -> Flavor:
    return Flavor(str(s).lower())
