"""rankhull command line: JSON reports on stdout, optional summary on stderr."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import errors
from .codes import DEFAULT_CAP, Flavor, RankCode, gram, hull, hull_oracle, min_rank_distance, random_code
from .construct import (
    GabidulinSpec,
    gabidulin_code,
    hermitian_so_gabidulin,
    power_basis,
    power_sums,
    scaled_self_dual_basis,
    verify_scaled_basis,
)
from .demos import CASES
from .gf import FieldTower, standard_tower
from .hullvary import mrd_with_hull, vary_hull
from .linalg import rowspace_equal, Matrix
from .oracle import GROUP_CAP, hull_spectrum
from .report import CommandReport
from .serialize import (
    basis_from_json,
    basis_to_json,
    code_from_json,
    code_to_json,
    hull_report_to_json,
    spectrum_to_json,
    tower_from_json,
    trace_to_json,
)

# raised when the mathematics says no, as opposed to a bad request
MATH_ERRORS = (errors.Obstructed22, errors.NotOrthonormalizable, errors.Degenerate)


class UsageError(Exception):
    pass


def _load_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def _tower(args) -> FieldTower:
    if args.field:
        return tower_from_json(_load_json(args.field))
    if args.code:
        return tower_from_json(_load_json(args.code)["field"])
    if args.q is None or args.m is None:
        raise UsageError("give --field, --code, or both --q and --m")
    return standard_tower(args.q, args.m)


def _code(args, T: FieldTower) -> RankCode:
    if args.code:
        return code_from_json(_load_json(args.code), T)
    if args.n is None or args.k is None:
        raise UsageError("give --code, or --n and --k for a random code")
    return random_code(T, args.n, args.k, args.seed, args.min_hull, _flavor(args))


def _flavor(args) -> Flavor:
    return Flavor(args.flavor)


def _check_mrd(rep: CommandReport, C: RankCode, cap: int) -> None:
    try:
        d = min_rank_distance(C, cap)
    except errors.TooLargeToEnumerate as exc:
        rep.outputs["d"] = None
        rep.outputs["d_skipped"] = str(exc)
        return
    rep.outputs["d"] = d
    rep.check("MRD: d = n - k + 1", d == C.n - C.k + 1, d)


def _check_hull(rep: CommandReport, C: RankCode, flavor: Flavor, want: int | None = None) -> int:
    r = hull(C, flavor)
    o = hull_oracle(C, flavor)
    same = r.h == o.h and (
        r.h == 0 or rowspace_equal(Matrix(C.tower, tuple(map(tuple, r.hull_basis)), C.n),
                                   Matrix(C.tower, tuple(map(tuple, o.hull_basis)), C.n))
    )
    rep.check("nullity formula agrees with C and dual intersection", same, [r.h, o.h])
    if want is not None:
        rep.check(f"hull dimension = {want}", r.h == want, r.h)
    return r.h


def cmd_field_check(args) -> CommandReport:
    T = _tower(args)
    rep = CommandReport("field-check", {"field": T.config()})
    g = T.K.generator
    rep.outputs = {"q": T.q, "order": T.order, "degree": T.degree, "generator": g, "omega": T.omega}
    rep.check("generator has order |K| - 1", T.K.log(g) == 1 and len({T.K.exp(i) for i in range(T.order - 1)}) == T.order - 1)
    rep.check("sigma is an involution", all(T.sigma(T.sigma(x)) == x for x in T.elements()))
    rep.check("trace lands in F_q", all(T.in_base(T.trace(x)) for x in T.elements()))
    rep.check("norm lands in F_q", all(T.in_base(T.norm(x)) for x in T.elements()))
    fixed = sum(1 for x in T.elements() if T.sigma(x) == x)
    rep.check("fixed field of sigma has q^m elements", fixed == T.q**T.m, fixed)
    return rep


def cmd_basis(args) -> CommandReport:
    T = _tower(args)
    rep = CommandReport("basis", {"field": T.config(), "seed": args.seed})
    b = scaled_self_dual_basis(T, args.seed)
    rep.outputs = basis_to_json(b)
    rep.check("Tr(lam a_i a_j) = delta_ij", verify_scaled_basis(b))
    S = power_sums(b.alpha, T).values
    rep.outputs["power_sums"] = list(S)
    rep.check("S_0 lam = 1", T.mul(S[0], b.lam) == 1)
    rep.check("S_r = 0 for r >= 1", not any(S[1:]))
    return rep


def cmd_gabidulin(args) -> CommandReport:
    T = _tower(args)
    k = _need(args.k, "--k")
    if args.basis:
        alpha = basis_from_json(_load_json(args.basis), T).alpha
    else:
        alpha = power_basis(T)
    rep = CommandReport("gabidulin", {"field": T.config(), "k": k, "s": args.s, "alpha": list(alpha)})
    C = gabidulin_code(GabidulinSpec(T, tuple(alpha), k, args.s))
    rep.outputs = {"code": code_to_json(C)}
    _check_mrd(rep, C, args.cap)
    return rep


def cmd_so_mrd(args) -> CommandReport:
    T = _tower(args)
    k = _need(args.k, "--k")
    rep = CommandReport("so-mrd", {"field": T.config(), "k": k, "s": args.s, "seed": args.seed})
    C = hermitian_so_gabidulin(T, k, args.s, args.seed)
    rep.outputs = {"code": code_to_json(C)}
    rep.check("GG^dagger = 0", gram(C, Flavor.HERMITIAN).is_zero())
    _check_hull(rep, C, Flavor.HERMITIAN, k)
    _check_mrd(rep, C, args.cap)
    return rep


def cmd_mrd_with_hull(args) -> CommandReport:
    T = _tower(args)
    k = _need(args.k, "--k")
    ell = _need(args.ell, "--ell")
    rep = CommandReport("mrd-with-hull", {"field": T.config(), "k": k, "ell": ell, "s": args.s, "seed": args.seed})
    C = mrd_with_hull(T, k, ell, args.s, args.seed)
    rep.outputs = {"code": code_to_json(C)}
    _check_hull(rep, C, Flavor.HERMITIAN, ell)
    _check_mrd(rep, C, args.cap)
    return rep


def cmd_hull(args) -> CommandReport:
    T = _tower(args)
    C = _code(args, T)
    fl = _flavor(args)
    rep = CommandReport("hull", {"code": code_to_json(C), "flavor": fl.value})
    rep.outputs = hull_report_to_json(hull(C, fl))
    _check_hull(rep, C, fl)
    return rep


def cmd_vary_hull(args) -> CommandReport:
    T = _tower(args)
    C = _code(args, T)
    fl = _flavor(args)
    target = _need(args.target, "--target")
    rep = CommandReport("vary-hull", {"code": code_to_json(C), "flavor": fl.value, "target": target, "seed": args.seed})
    C2, trace = vary_hull(C, target, fl, args.seed)
    rep.outputs = {"code": code_to_json(C2), "trace": trace_to_json(trace)}
    _check_hull(rep, C2, fl, target)
    return rep


def cmd_lcd(args) -> CommandReport:
    args.target = 0
    rep = cmd_vary_hull(args)
    rep.command = "lcd"
    return rep


def cmd_spectrum(args) -> CommandReport:
    T = _tower(args)
    C = _code(args, T)
    fl = _flavor(args)
    cap = args.cap if args.cap is not None else GROUP_CAP
    rep = CommandReport("spectrum", {"code": code_to_json(C), "flavor": fl.value})
    s = hull_spectrum(C, fl, cap)
    rep.outputs = spectrum_to_json(s)
    rep.check("histogram counts all of GL_n(F_q)", sum(s.histogram.values()) == s.group_size)
    return rep


def cmd_demo(args) -> CommandReport:
    return CASES[args.case]()


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


COMMANDS: dict[str, Callable] = {
    "field-check": cmd_field_check,
    "basis": cmd_basis,
    "gabidulin": cmd_gabidulin,
    "hull": cmd_hull,
    "vary-hull": cmd_vary_hull,
    "lcd": cmd_lcd,
    "so-mrd": cmd_so_mrd,
    "mrd-with-hull": cmd_mrd_with_hull,
    "spectrum": cmd_spectrum,
    "demo": cmd_demo,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--field", metavar="PATH", help="field configuration JSON")
    common.add_argument("--q", type=int)
    common.add_argument("--m", type=int)
    common.add_argument("--n", type=int, help="length of a random code when --code is absent")
    common.add_argument("--k", type=int)
    common.add_argument("--s", type=int, default=1)
    common.add_argument("--ell", type=int)
    common.add_argument("--target", type=int)
    common.add_argument("--min-hull", type=int, default=0, help="lower bound on the hull of a random code")
    common.add_argument("--code", metavar="PATH", help="code JSON")
    common.add_argument("--basis", metavar="PATH", help="basis JSON")
    common.add_argument("--cap", type=int, default=None)
    common.add_argument("--flavor", choices=[f.value for f in Flavor], default="hermitian")
    common.add_argument("--verbose", action="store_true", help="summary on stderr")

    parser = argparse.ArgumentParser(prog="rankhull", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "demo":
            p.add_argument("--case", required=True, choices=sorted(CASES))
    return parser


def run(argv: list[str] | None = None) -> tuple[int, CommandReport | None, str]:
    """Execute one command; returns (exit code, report, error message)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    cap_given = args.cap is not None
    if args.command != "spectrum" and not cap_given:
        args.cap = DEFAULT_CAP
    try:
        rep = COMMANDS[args.command](args)
    except MATH_ERRORS as exc:
        return 1, None, f"{type(exc).__name__}: {exc}"
    except (UsageError, errors.RankHullError, ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        return 2, None, f"{type(exc).__name__}: {exc}"
    if args.verbose:
        for c in rep.checks:
            print(f"[{'PASS' if c['passed'] else 'FAIL'}] {c['name']}", file=sys.stderr)
    return (0 if rep.ok else 1), rep, ""


def main(argv: list[str] | None = None) -> int:
    code, rep, msg = run(argv)
    if rep is not None:
        print(json.dumps(rep.to_json(), sort_keys=True))
        if not rep.ok:
            print("failing checks: " + ", ".join(rep.failing()), file=sys.stderr)
    else:
        print(json.dumps({"error": msg}, sort_keys=True))
        print(msg, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
