"""Command-line front end.

One binary, subcommands for each analysis.  Machine-readable results go to
standard output as canonical JSON (sorted keys, exact integers, fraction
strings); diagnostics go to standard error.  Exit codes: 0 on success, 1 on
usage errors, 2 on domain errors (including certificate rejections).

``certify`` writes the bare certificate document (the file format itself) so
it can be piped straight into ``check -``; every other subcommand wraps its
result in a small envelope recording the command and its parameters.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .certificates import (
    CertificateRejection,
    build_certificate,
    check_certificate,
    deserialize,
    serialize,
)
from .covers import cover_numerics
from .errors import (
    DuplicateLabel,
    LabelOutOfRange,
    MalformedCycle,
    SchemaViolation,
    TschirnError,
)
from .etale import etale_evidence, etale_stability
from .families import (
    agl1,
    alternating_group,
    cyclic_group,
    pgl2,
    psl2,
    symmetric_group,
)
from .perms import DEFAULT_ENUM_CAP, PermGroup, perm_from_cycles, perm_from_image_text
from .splitting import general_p1_splitting, is_balanced, is_perfectly_balanced
from .verdicts import StabilityVerdict

_USAGE_EXIT = 1
_DOMAIN_EXIT = 2


class _Parser(argparse.ArgumentParser):
    # Argument errors are usage errors; argparse's default status of 2 is
    # reserved here for domain failures.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(_USAGE_EXIT, f"{self.prog}: error: {message}\n")


_FAMILIES = {
    "cyclic": cyclic_group,
    "sym": symmetric_group,
    "alt": alternating_group,
    "pgl2": pgl2,
    "psl2": psl2,
    "agl1": agl1,
}


class _UsageError(Exception):
    pass


def _group_from_spec(spec: str) -> PermGroup:
    name, sep, param = spec.partition(":")
    if not sep:
        raise _UsageError(f"group spec {spec!r} is not of the form name:parameter")
    ctor = _FAMILIES.get(name)
    if ctor is None:
        raise _UsageError(
            f"unknown family {name!r}; choose from {', '.join(sorted(_FAMILIES))}"
        )
    try:
        value = int(param, 10)
    except ValueError:
        raise _UsageError(f"family parameter {param!r} is not an integer") from None
    return ctor(value)


def _group_from_gens(gens: list[str], degree: int | None) -> PermGroup:
    perms = []
    for chunk in gens:
        for text in chunk.split(";"):
            text = text.strip()
            if not text:
                continue
            if "(" in text:
                if degree is None:
                    raise _UsageError("--degree is required with cycle-notation generators")
                perms.append(perm_from_cycles(text, degree))
            else:
                p = perm_from_image_text(text)
                if degree is not None and p.degree != degree:
                    raise _UsageError(
                        f"generator {text!r} has degree {p.degree}, expected {degree}"
                    )
                perms.append(p)
    if not perms:
        raise _UsageError("no generators given")
    return PermGroup(perms)


def _jsonable(value):
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_jsonable(v) for v in value]
    return value


def _verdict_dict(v: StabilityVerdict) -> dict:
    return {"tag": v.tag.value, "reason": v.reason, "witness": _jsonable(v.witness)}


def _emit(command: str, parameters: dict, result: dict, human_lines=None, human=False) -> None:
    if human and human_lines is not None:
        for line in human_lines:
            print(line)
        return
    envelope = {
        "command": command,
        "parameters": parameters,
        "result": result,
        "diagnostics": [],
    }
    print(json.dumps(envelope, sort_keys=True, indent=2))


# ------------------------------------------------------------------ commands


def _cmd_etale(args) -> int:
    if args.group is not None:
        group = _group_from_spec(args.group)
        parameters = {"group": args.group}
    else:
        group = _group_from_gens(args.gens, args.degree)
        parameters = {"gens": args.gens, "degree": group.degree}
    verdict = etale_stability(group, cap=args.cap)
    evidence = etale_evidence(group, cap=args.cap)
    result = {
        "verdict": _verdict_dict(verdict),
        "oracles": {
            "group_order": evidence.order,
            "char_sum": evidence.char_sum,
            "pair_orbit_count": evidence.pair_orbit_count,
        },
    }
    lines = [
        f"verdict:          {verdict.tag.value}",
        f"reason:           {verdict.reason}",
        f"group order:      {evidence.order}",
        f"char sum:         {evidence.char_sum if evidence.char_sum is not None else '(skipped)'}",
        f"pair orbits:      {evidence.pair_orbit_count}",
    ]
    _emit("etale", parameters, result, lines, args.human)
    return 0


def _cmd_invariants(args) -> int:
    num = cover_numerics(args.r, args.g, args.target_genus)
    result = {
        "r": num.r,
        "g": num.g,
        "h": num.h,
        "b": num.b,
        "tsch_rank": num.tsch_rank,
        "tsch_degree": num.tsch_degree,
        "slope": str(num.slope),
    }
    parameters = {"r": args.r, "g": args.g, "h": args.target_genus}
    lines = [f"{k}: {v}" for k, v in result.items()]
    _emit("invariants", parameters, result, lines, args.human)
    return 0


def _cmd_p1(args) -> int:
    split = general_p1_splitting(args.r, args.g)
    result = {
        "degrees": list(split.degrees),
        "rank": split.rank,
        "total_degree": split.total_degree,
        "balanced": is_balanced(split),
        "perfectly_balanced": is_perfectly_balanced(split),
    }
    parameters = {"r": args.r, "g": args.g}
    lines = [
        f"splitting type:     {split}",
        f"rank:               {split.rank}",
        f"total degree:       {split.total_degree}",
        f"balanced:           {is_balanced(split)}",
        f"perfectly balanced: {is_perfectly_balanced(split)}",
    ]
    _emit("p1", parameters, result, lines, args.human)
    return 0


def _cmd_certify(args) -> int:
    cert = build_certificate(args.r, args.g, args.target_genus, characteristic=args.char)
    text = serialize(cert)
    if args.out is None or args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote certificate to {args.out}", file=sys.stderr)
    return 0


def _cmd_check(args) -> int:
    if args.certificate == "-":
        text = sys.stdin.read()
        parameters = {"certificate": "-"}
    else:
        with open(args.certificate, "r", encoding="utf-8") as fh:
            text = fh.read()
        parameters = {"certificate": args.certificate}
    try:
        cert = deserialize(text)
    except SchemaViolation as e:
        result = {
            "rejection": {"code": "SchemaViolation", "location": e.path, "message": str(e)}
        }
        _emit("check", parameters, result, [f"rejected: {e}"], args.human)
        return _DOMAIN_EXIT
    outcome = check_certificate(cert)
    if isinstance(outcome, CertificateRejection):
        result = {
            "rejection": {
                "code": outcome.code,
                "location": outcome.location,
                "message": outcome.message,
            }
        }
        lines = [f"rejected ({outcome.code} at {outcome.location}): {outcome.message}"]
        _emit("check", parameters, result, lines, args.human)
        return _DOMAIN_EXIT
    result = {"verdict": _verdict_dict(outcome)}
    lines = [f"verdict: {outcome.tag.value}", f"reason:  {outcome.reason}"]
    _emit("check", parameters, result, lines, args.human)
    return 0


def _prime_powers_up_to(limit: int) -> list[int]:
    out = []
    for q in range(2, limit + 1):
        m, p = q, 2
        while p * p <= m:
            if m % p == 0:
                break
            p += 1
        else:
            p = m
        while m % p == 0:
            m //= p
        if m == 1:
            out.append(q)
    return out


def _cmd_families(args) -> int:
    rows = []
    for r in range(4, args.rmax + 1):
        rows.append(("alt", r, alternating_group(r)))
    for q in _prime_powers_up_to(args.qmax):
        rows.append(("pgl2", q, pgl2(q)))
        rows.append(("psl2", q, psl2(q)))
        rows.append(("agl1", q, agl1(q)))
    table = []
    for family, param, group in rows:
        ev = etale_evidence(group, cap=DEFAULT_ENUM_CAP)
        holds = ev.char_sum == 2 * ev.order and ev.pair_orbit_count == 2
        table.append(
            {
                "family": family,
                "param": param,
                "degree": group.degree,
                "order": ev.order,
                "char_sum": ev.char_sum,
                "pair_orbits": ev.pair_orbit_count,
                "identity_holds": holds,
            }
        )
    result = {"rows": table, "all_pass": all(row["identity_holds"] for row in table)}
    lines = [f"{'family':<8}{'param':>6}{'degree':>8}{'order':>10}{'charsum':>10}{'pairs':>7}  status"]
    for row in table:
        lines.append(
            f"{row['family']:<8}{row['param']:>6}{row['degree']:>8}{row['order']:>10}"
            f"{row['char_sum']:>10}{row['pair_orbits']:>7}  "
            + ("PASS" if row["identity_holds"] else "FAIL")
        )
    lines.append("all rows PASS" if result["all_pass"] else "SOME ROWS FAIL")
    parameters = {"rmax": args.rmax, "qmax": args.qmax}
    _emit("families", parameters, result, lines, args.human)
    return 0


# ------------------------------------------------------------------ wiring


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tschirn", description=__doc__)
    parser.add_argument("--version", action="version", version=f"tschirn {__version__}")
    parser.add_argument(
        "--human", action="store_true", help="tables for people instead of JSON"
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("etale", help="stability of an unramified cover from its monodromy")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--group", help="family spec, e.g. cyclic:7, alt:5, pgl2:9")
    src.add_argument(
        "--gens",
        action="append",
        help="generator in cycle notation or as an image list; repeatable",
    )
    p.add_argument("--degree", type=int, help="degree for cycle-notation generators")
    p.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_ENUM_CAP,
        help="enumeration cap for the character-sum oracle",
    )
    p.set_defaults(func=_cmd_etale)

    p = sub.add_parser("invariants", help="branch count, rank, degree and slope ledger")
    p.add_argument("-r", type=int, required=True, help="cover degree")
    p.add_argument("-g", type=int, required=True, help="source genus")
    p.add_argument("-H", dest="target_genus", type=int, required=True, help="target genus")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("p1", help="splitting type over a rational target")
    p.add_argument("-r", type=int, required=True, help="cover degree")
    p.add_argument("-g", type=int, required=True, help="source genus")
    p.set_defaults(func=_cmd_p1)

    p = sub.add_parser("certify", help="build a stability certificate")
    p.add_argument("-r", type=int, required=True, help="cover degree")
    p.add_argument("-g", type=int, required=True, help="source genus")
    p.add_argument("-H", dest="target_genus", type=int, required=True, help="target genus")
    p.add_argument(
        "--char",
        type=int,
        default=None,
        help="declare a positive characteristic; > degree adds the strong-stability label",
    )
    p.add_argument("--out", default=None, help="output file ('-' or omitted: stdout)")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("check", help="validate a certificate file")
    p.add_argument("certificate", help="path to a certificate, or '-' for stdin")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("families", help="character-identity sweep over standard families")
    p.add_argument("--rmax", type=int, default=8, help="largest alternating degree")
    p.add_argument("--qmax", type=int, default=11, help="largest field size")
    p.set_defaults(func=_cmd_families)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as e:
        print(f"tschirn: error: {e}", file=sys.stderr)
        return _USAGE_EXIT
    except (MalformedCycle, LabelOutOfRange, DuplicateLabel) as e:
        print(f"tschirn: error: {e}", file=sys.stderr)
        return _USAGE_EXIT
    except TschirnError as e:
        print(f"tschirn: error: {e}", file=sys.stderr)
        _emit(
            args.command,
            {},
            {"error": {"type": type(e).__name__, "message": str(e)}},
            [f"error: {e}"],
            args.human,
        )
        return _DOMAIN_EXIT
    except OSError as e:
        print(f"tschirn: error: {e}", file=sys.stderr)
        return _DOMAIN_EXIT


if __name__ == "__main__":
    sys.exit(main())
