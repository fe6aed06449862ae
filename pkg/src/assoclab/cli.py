"""Command line front end.

Subcommands:
  expand     build one or both series expansions and print them
  relations  extract coefficient relations, optionally reduce modulo aux sets
  verify     numerically certify relations at a given precision
  eval       evaluate a single zeta or delta value
  selftest   run the built-in consistency checks

Exit codes: 0 success, 1 verification/selftest failure, 2 usage error.
Primary outputs are deterministic: the same configuration yields byte
identical JSON across runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from mpmath import mp

from . import _oracles
from .symring import NotAdmissibleError, check_composition
from .freealg import nc_mul, nc_swap, nc_unit, series_to_json
from .mzv_side import phi_mzv
from .delta_side import iint_to_sym, phi_delta
from .relations import (
    Relation,
    Span,
    comparison_relations,
    duality_relations,
    known_values,
    reduce as reduce_relations,
    shuffle_relations,
)
from .numeric import Precision, eval_delta, eval_zeta, verify_relation

DEFAULT_ORDER = 5
DEFAULT_DIGITS = 40
AUX_NAMES = ("shuffle", "duality", "known")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    order: int = DEFAULT_ORDER
    side: str = "both"
    digits: int = DEFAULT_DIGITS
    aux: tuple[str, ...] = ()
    reduce: bool = False
    fmt: str = "json"
    output: str | None = None
    report: str | None = None
    kind: str | None = None
    composition: tuple[int, ...] = field(default_factory=tuple)


def _max_order() -> int:
    raw = os.environ.get("ASSOCLAB_MAX_ORDER", "6")
    try:
        return int(raw)
    except ValueError:
        raise UsageError("ASSOCLAB_MAX_ORDER must be an integer, got %r" % raw)


def _check_order(n: int) -> int:
    cap = _max_order()
    if n < 0 or n > cap:
        raise UsageError("order must lie in 0..%d (ASSOCLAB_MAX_ORDER), got %d" % (cap, n))
    return n


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=True) + "\n"


def _aux_relations(names, order: int) -> list[Relation]:
    out: list[Relation] = []
    if "shuffle" in names and order >= 2:
        out.extend(shuffle_relations(order))
    if "duality" in names and order >= 3:
        out.extend(duality_relations(order))
    if "known" in names:
        out.extend(r for r in known_values() if r.weight <= order)
    return out


def _cmd_expand(cfg: RunConfig) -> int:
    order = _check_order(cfg.order)
    builders = {"mzv": phi_mzv, "delta": phi_delta}
    payload = {"command": "expand", "side": cfg.side, "order": order}
    if cfg.side == "both":
        payload["mzv"] = series_to_json(phi_mzv(order))
        payload["delta"] = series_to_json(phi_delta(order))
    else:
        payload["series"] = series_to_json(builders[cfg.side](order))
    if cfg.fmt == "json":
        _emit(_json_text(payload), cfg.output)
    else:
        lines = []
        keys = ("mzv", "delta") if cfg.side == "both" else ("series",)
        for key in keys:
            lines.append("# %s order %d" % (key, order))
            for term in payload[key]["terms"]:
                lines.append("%s: %s" % (term["word"], term["coeff"]))
        _emit("\n".join(lines) + "\n", cfg.output)
    return 0


def _relations_payload(cfg: RunConfig) -> dict:
    order = _check_order(cfg.order)
    rels = comparison_relations(order)
    aux = _aux_relations(cfg.aux, order)
    if cfg.reduce:
        rels = reduce_relations(rels, aux, only_rels=True)
    payload = {
        "command": "relations",
        "order": order,
        "aux": sorted(cfg.aux),
        "reduced": cfg.reduce,
        "count": len(rels),
        "relations": [r.to_json() for r in rels],
    }
    return payload


def _cmd_relations(cfg: RunConfig) -> int:
    payload = _relations_payload(cfg)
    if cfg.fmt == "json":
        _emit(_json_text(payload), cfg.output)
    elif cfg.fmt == "latex":
        lines = [r"\begin{alignat*}{1}"]
        for rel in payload["relations"]:
            lines.append(rel["latex"].replace(" = 0", " &= 0 \\\\"))
        lines.append(r"\end{alignat*}")
        _emit("\n".join(lines) + "\n", cfg.output)
    else:
        lines = []
        for rel in payload["relations"]:
            lines.append(
                "w=%d %s: %s = 0"
                % (rel["weight"], _prov_text(rel["provenance"]), rel["lhs"])
            )
        _emit("\n".join(lines) + "\n", cfg.output)
    return 0


def _prov_text(p: dict) -> str:
    kind = p["kind"]
    if kind == "comparison":
        return "comparison[%d:%s]" % (p["order"], p["word"])
    if kind == "shuffle":
        return "shuffle[%s:%s|%s]" % (
            p["kernel"],
            ",".join(map(str, p["u"])),
            ",".join(map(str, p["v"])),
        )
    if kind == "duality":
        return "duality[%s]" % ",".join(map(str, p["composition"]))
    return "known[%s]" % p["name"]


def _cmd_verify(cfg: RunConfig) -> int:
    order = _check_order(cfg.order)
    if cfg.digits < 10:
        raise UsageError("digits must be >= 10")
    prec = Precision(cfg.digits)
    rels = comparison_relations(order) + _aux_relations(AUX_NAMES, order)
    rows = []
    failures = 0
    for r in rels:
        res = verify_relation(r, prec)
        if not res.ok:
            failures += 1
        rows.append(
            {
                "provenance": r.provenance.to_json(),
                "lhs": r.expr.render(),
                "latex": r.expr.latex() + " = 0",
                "residual": mp.nstr(res.residual, 8),
                "verdict": "pass" if res.ok else "fail",
            }
        )
    payload = {
        "command": "verify",
        "order": order,
        "digits": cfg.digits,
        "count": len(rows),
        "failures": failures,
        "relations": rows,
    }
    if cfg.report:
        with open(cfg.report, "w", encoding="utf-8") as fh:
            fh.write(_json_text(payload))
    summary = "verified %d relations at %d digits: %s\n" % (
        len(rows),
        cfg.digits,
        "all pass" if failures == 0 else "%d FAILED" % failures,
    )
    sys.stdout.write(summary)
    if failures:
        for row in rows:
            if row["verdict"] == "fail":
                sys.stdout.write(
                    "fail %s residual=%s\n" % (_prov_text(row["provenance"]), row["residual"])
                )
    return 0 if failures == 0 else 1


def _cmd_eval(cfg: RunConfig) -> int:
    if cfg.digits < 10:
        raise UsageError("digits must be >= 10")
    prec = Precision(cfg.digits)
    try:
        comp = check_composition(cfg.composition)
        if cfg.kind == "zeta":
            value = eval_zeta(comp, prec)
        else:
            value = eval_delta(comp, prec)
    except (NotAdmissibleError, ValueError) as exc:
        raise UsageError(str(exc))
    text = mp.nstr(value, cfg.digits)
    if cfg.fmt == "json":
        payload = {
            "command": "eval",
            "kind": cfg.kind,
            "composition": list(comp),
            "digits": cfg.digits,
            "value": text,
        }
        _emit(_json_text(payload), cfg.output)
    else:
        _emit(text + "\n", cfg.output)
    return 0


def _selftest_checks():
    from .symring import SymExpr, SymMonomial, LOG2, delta, zeta
    from fractions import Fraction

    euler = SymExpr.gen(zeta((2,))) - SymExpr.gen(delta((2,)), coeff=2) - SymExpr(
        {SymMonomial(((LOG2, 2),)): Fraction(1)}
    )

    def order2_comparison():
        rels = comparison_relations(2)
        return len(rels) == 1 and rels[0].expr == Relation(euler, None).expr

    def iint_special_cases():
        c3 = SymExpr({SymMonomial(((LOG2, 3),)): Fraction(1, 6)})
        ok = iint_to_sym((0, 0, 0)) == c3
        ok = ok and iint_to_sym((2,)) == SymExpr.gen(delta((3,)))
        want = SymExpr.gen(delta((2, 2))) + SymExpr.gen(delta((3, 1)), coeff=2)
        return ok and iint_to_sym((1, 1)) == want

    def delta_inverse_raw():
        phi = phi_delta(4)
        return nc_mul(phi, nc_swap(phi)) == nc_unit(4)

    def mzv_inverse_reduced():
        phi = phi_mzv(4)
        prod = nc_mul(phi, nc_swap(phi))
        span = Span(_aux_relations(AUX_NAMES, 4))
        for w, e in prod.coeffs.items():
            if w == "":
                if e != SymExpr.one():
                    return False
            elif not span.contains(e):
                return False
        return True

    def numeric_known_values():
        prec = Precision(30)
        return all(verify_relation(r, prec).ok for r in known_values())

    def numeric_duality():
        prec = Precision(30)
        a = eval_zeta((3, 1), prec)
        b = eval_zeta((4,), prec)
        # compare inside a wide context: ambient dps would round b/4
        with mp.workdps(prec.digits + 10):
            return bool(abs(a - b / 4) < mp.mpf(10) ** (-25))

    return [
        ("order-2 comparison yields the dilogarithm relation", order2_comparison),
        ("kernel integral special cases", iint_special_cases),
        ("delta side times its swap is the unit series", delta_inverse_raw),
        ("mzv side inverse holds modulo aux relations", mzv_inverse_reduced),
        ("psi recursion rebuilds the delta side", lambda: _oracles.check_psi_recursion(5)),
        ("degree-2 antisymmetrisation closed form", lambda: _oracles.check_omega2(4)),
        ("known closed forms verify at 30 digits", numeric_known_values),
        ("self-dual evaluation verifies numerically", numeric_duality),
    ]


def _cmd_selftest(cfg: RunConfig) -> int:
    failures = 0
    for name, check in _selftest_checks():
        try:
            ok = check()
        except Exception as exc:  # a crashed check is a failed check
            ok = False
            sys.stdout.write("error in %s: %s\n" % (name, exc))
        sys.stdout.write("%s - %s\n" % ("ok" if ok else "FAIL", name))
        if not ok:
            failures += 1
    return 0 if failures == 0 else 1


def run(cfg: RunConfig) -> int:
    handlers = {
        "expand": _cmd_expand,
        "relations": _cmd_relations,
        "verify": _cmd_verify,
        "eval": _cmd_eval,
        "selftest": _cmd_selftest,
    }
    if cfg.command not in handlers:
        raise UsageError("unknown command %r" % cfg.command)
    return handlers[cfg.command](cfg)


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="assoclab",
        description="Two expansions of the same associator series, their "
        "coefficient relations, and numeric certification.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    ex = sub.add_parser("expand", help="build series expansions")
    ex.add_argument("--side", choices=("mzv", "delta", "both"), default="both")
    ex.add_argument("--order", type=int, default=DEFAULT_ORDER)
    ex.add_argument("--format", choices=("json", "text"), default="json")
    ex.add_argument("--output")

    rl = sub.add_parser("relations", help="extract and reduce relations")
    rl.add_argument("--order", type=int, default=DEFAULT_ORDER)
    rl.add_argument(
        "--aux",
        default="none",
        help="comma separated subset of {shuffle,duality,known}, or none/all",
    )
    rl.add_argument("--reduce", action="store_true")
    rl.add_argument("--format", choices=("json", "latex", "text"), default="json")
    rl.add_argument("--output")

    vf = sub.add_parser("verify", help="numeric certification")
    vf.add_argument("--order", type=int, default=DEFAULT_ORDER)
    vf.add_argument("--digits", type=int, default=DEFAULT_DIGITS)
    vf.add_argument("--report")

    ev = sub.add_parser("eval", help="evaluate one zeta or delta value")
    group = ev.add_mutually_exclusive_group(required=True)
    group.add_argument("--zeta")
    group.add_argument("--delta")
    ev.add_argument("--digits", type=int, default=DEFAULT_DIGITS)
    ev.add_argument("--format", choices=("json", "text"), default="json")
    ev.add_argument("--output")

    sub.add_parser("selftest", help="run built-in consistency checks")
    return p


def _parse_aux(raw: str) -> tuple[str, ...]:
    names = tuple(s.strip() for s in raw.split(",") if s.strip())
    if names == ("none",) or not names:
        return ()
    if names == ("all",):
        return AUX_NAMES
    bad = [n for n in names if n not in AUX_NAMES]
    if bad:
        raise UsageError("unknown aux set(s): %s" % ", ".join(bad))
    return tuple(dict.fromkeys(names))


def _parse_composition(raw: str) -> tuple[int, ...]:
    try:
        return tuple(int(s) for s in raw.split(","))
    except ValueError:
        raise UsageError("composition must be comma separated integers, got %r" % raw)


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    if args.command == "expand":
        cfg.side = args.side
        cfg.order = args.order
        cfg.fmt = args.format
        cfg.output = args.output
    elif args.command == "relations":
        cfg.order = args.order
        cfg.aux = _parse_aux(args.aux)
        cfg.reduce = args.reduce
        cfg.fmt = args.format
        cfg.output = args.output
    elif args.command == "verify":
        cfg.order = args.order
        cfg.digits = args.digits
        cfg.report = args.report
    elif args.command == "eval":
        cfg.digits = args.digits
        cfg.fmt = args.format
        cfg.output = args.output
        if args.zeta is not None:
            cfg.kind = "zeta"
            cfg.composition = _parse_composition(args.zeta)
        else:
            cfg.kind = "delta"
            cfg.composition = _parse_composition(args.delta)
    return cfg


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return run(_config_from_args(args))
    except UsageError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
