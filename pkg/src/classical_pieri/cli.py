"""Command-line front end: ``pieri <verb> ...``.

Exit codes: 0 success, 1 a ``verify`` verb found mismatches, 2 usage error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from ._parallel import default_workers
from .branching import branch_gl, cauchy_dimension_check, equivalence_check
from .kostant import kostant_bound_check, kostant_power_check, levi_equality_check, shift_invariance_check
from .partition import Partition
from .pieri import NonRegularWeightWarning, classical_exterior, gl_exterior, gl_symmetric, is_pieri_regular
from .report import weight_json
from .rootdata import GroupType, Weight, dominant_weights, format_true, is_dominant, weyl_dim
from .tensor import InvalidCharacterError, InvariantViolation, klimyk_decompose, necessity_scan, tensor_irreps
from .weightdiagram import exterior_power, freudenthal, symmetric_power

VERBS = ("rule", "decompose", "branch", "dim", "weights", "verify")
CHECKS = ("kostant", "extended-kostant", "shift", "equivalence", "cauchy", "necessity")


class UsageError(Exception):
    """Bad command line; reported with exit code 2."""


@dataclass
class Command:
    verb: str
    group: GroupType | None = None
    payload: dict[str, Any] = field(default_factory=dict)
    format: str = "text"
    json_path: str | None = None
    threads: int = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--json", dest="json_path", metavar="PATH", help="also write the JSON result to PATH")
    common.add_argument("--threads", type=int, default=None, help="worker processes (default: $PIERI_THREADS or 1)")

    parser = _Parser(prog="pieri", description="Pieri rules and tensor decompositions for classical groups.")
    parser.add_argument("--version", action="version", version=f"pieri {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def factor_flags(p, mu: bool = True):
        grp = p.add_mutually_exclusive_group(required=True)
        grp.add_argument("--ext", type=int, metavar="I", help="tensor with the I-th exterior power")
        grp.add_argument("--sym", type=int, metavar="I", help="tensor with the I-th symmetric power")
        if mu:
            grp.add_argument("--mu", metavar="WEIGHT", help="tensor with the irreducible of highest weight WEIGHT")

    p = sub.add_parser("rule", parents=[common], help="closed-form Pieri rule")
    p.add_argument("--group", required=True)
    p.add_argument("--lambda", dest="lam", required=True, metavar="PARTITION")
    factor_flags(p, mu=False)
    p.add_argument("--force", action="store_true", help="allow a non-regular lambda (B, C, D)")

    p = sub.add_parser("decompose", parents=[common], help="tensor decomposition by Weyl-group straightening")
    p.add_argument("--group", required=True)
    p.add_argument("--lambda", dest="lam", required=True, metavar="WEIGHT")
    factor_flags(p)

    p = sub.add_parser("branch", parents=[common], help="GL(n+1) -> GL(n) branching")
    p.add_argument("--from", dest="source", required=True, metavar="GROUP")
    p.add_argument("--hw", required=True, metavar="PARTITION")

    for verb, text in (("dim", "dimension of an irreducible"), ("weights", "weight diagram of an irreducible")):
        p = sub.add_parser(verb, parents=[common], help=text)
        p.add_argument("--group", required=True)
        p.add_argument("--lambda", dest="lam", required=True, metavar="WEIGHT")

    p = sub.add_parser("verify", help="cross-check a combinatorial rule")
    vsub = p.add_subparsers(dest="check", required=True, parser_class=_Parser)
    v = vsub.add_parser("kostant", parents=[common])
    v.add_argument("--group", required=True)
    v.add_argument("--lambda", dest="lam", required=True, metavar="WEIGHT")
    factor_flags(v)
    v = vsub.add_parser("extended-kostant", parents=[common])
    v.add_argument("--group", required=True)
    v.add_argument("--lambda", dest="lam", required=True, metavar="PARTITION")
    v.add_argument("--ext", type=int, required=True, metavar="I")
    v.add_argument("--exploratory", action="store_true", help="allow families B and D")
    v = vsub.add_parser("shift", parents=[common])
    v.add_argument("--group", metavar="GROUP", help="C<n>; alternative to --n")
    v.add_argument("--n", type=int)
    v.add_argument("--lambda", dest="lam", required=True, metavar="PARTITION")
    v.add_argument("--ext", "--d", dest="degree", type=int, required=True, metavar="D")
    v = vsub.add_parser("equivalence", parents=[common])
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--bound", type=int, default=4)
    v = vsub.add_parser("cauchy", parents=[common])
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--d", type=int, required=True)
    v = vsub.add_parser("necessity", parents=[common])
    v.add_argument("--group", required=True)
    v.add_argument("--bound", type=int, default=2, help="largest entry of lambda")
    v.add_argument("--max-power", type=int, default=3, help="largest i in Λ^i and Sym^i")
    return parser


def _group(text: str) -> GroupType:
    try:
        return GroupType.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _partition(text: str, rank: int | None = None) -> Partition:
    try:
        lam = Partition.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if rank is not None and len(lam) > rank:
        raise UsageError(f"rank mismatch: {lam} has {len(lam)} rows, rank is {rank}")
    return lam


def _weight(g: GroupType, text: str) -> Weight:
    """Parse a dominant weight; halves like ``3/2`` are allowed for B and D."""
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    try:
        coords = [Fraction(t) for t in tokens]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"malformed weight: {text!r}") from None
    if any(c.denominator not in (1, 2) for c in coords):
        raise UsageError(f"weight {text!r}: coordinates must be integers or halves")
    if len({c.denominator for c in coords}) > 1:
        raise UsageError(f"parity mismatch in {text!r}: mix of integer and half-integer coordinates")
    spin = bool(coords) and coords[0].denominator == 2
    if spin and not g.allows_spin:
        raise UsageError(f"half-integral weight {text!r} is only valid for families B and D, not {g}")
    if len(coords) > g.rank or (spin and len(coords) != g.rank):
        raise UsageError(f"rank mismatch: {text!r} has {len(coords)} entries, {g} has rank {g.rank}")
    coords += [Fraction(0)] * (g.rank - len(coords))
    w = Weight.from_true(coords)
    if not is_dominant(g, w):
        if any(a < b for a, b in zip(coords, coords[1:])):
            raise UsageError(f"not weakly decreasing: {text!r}")
        raise UsageError(f"{format_true(w)} is not dominant for {g}")
    return w


def _factor(ns, g: GroupType) -> dict:
    if ns.ext is not None:
        if not 0 <= ns.ext <= g.defining_dim:
            raise UsageError(f"--ext {ns.ext} out of range 0..{g.defining_dim} for {g}")
        return {"power": "ext", "i": ns.ext}
    if ns.sym is not None:
        if ns.sym < 0:
            raise UsageError("--sym must be nonnegative")
        return {"power": "sym", "i": ns.sym}
    return {"mu": _weight(g, ns.mu)}


def _positive(name: str, value: int | None) -> int:
    if value is None or value < 0:
        raise UsageError(f"--{name} must be a nonnegative integer")
    return value


def parse(argv: Sequence[str]) -> Command:
    """Turn an argument vector into a validated ``Command`` (raises ``UsageError``)."""
    ns = _build_parser().parse_args(list(argv))
    threads = ns.threads if ns.threads is not None else default_workers()
    if threads < 1:
        raise UsageError("--threads must be at least 1")
    cmd = Command(verb=ns.verb, format=ns.format, json_path=ns.json_path, threads=threads)
    payload = cmd.payload

    if ns.verb == "rule":
        g = cmd.group = _group(ns.group)
        payload["lambda"] = _partition(ns.lam, g.rank)
        payload.update(_factor(ns, g))
        payload["force"] = ns.force
        if g.family != "A":
            if payload["power"] == "sym":
                raise UsageError(f"no closed-form symmetric-power rule for {g}; use 'decompose'")
            if not ns.force and not is_pieri_regular(payload["lambda"], g.rank):
                raise UsageError(f"lambda={ns.lam} is not regular for {g} (need lam_1 > ... > lam_n > 0); pass --force")
        elif ns.force:
            raise UsageError("--force only applies to families B, C and D")
    elif ns.verb == "decompose":
        g = cmd.group = _group(ns.group)
        payload["lambda"] = _weight(g, ns.lam)
        payload.update(_factor(ns, g))
    elif ns.verb == "branch":
        g = _group(ns.source)
        if g.family != "A" or g.rank < 2:
            raise UsageError(f"--from must be GL(n+1) with n >= 1, got {ns.source}")
        cmd.group = GroupType("A", g.rank - 1)
        payload["hw"] = _partition(ns.hw, g.rank)
        payload["from"] = g
    elif ns.verb in ("dim", "weights"):
        g = cmd.group = _group(ns.group)
        payload["lambda"] = _weight(g, ns.lam)
    else:
        payload["check"] = ns.check
        _parse_verify(ns, cmd)
    return cmd


def _parse_verify(ns, cmd: Command) -> None:
    payload = cmd.payload
    check = ns.check
    if check == "kostant":
        g = cmd.group = _group(ns.group)
        payload["lambda"] = _weight(g, ns.lam)
        payload.update(_factor(ns, g))
    elif check == "extended-kostant":
        g = cmd.group = _group(ns.group)
        if g.family == "A":
            raise UsageError("extended-kostant needs family B, C or D")
        if g.family != "C" and not ns.exploratory:
            raise UsageError(f"the equality is claimed for family C only; pass --exploratory for {g}")
        payload["lambda"] = _partition(ns.lam, g.rank)
        if not 0 <= ns.ext <= g.defining_dim:
            raise UsageError(f"--ext {ns.ext} out of range 0..{g.defining_dim} for {g}")
        payload["i"] = ns.ext
        payload["exploratory"] = ns.exploratory
    elif check == "shift":
        if ns.group is not None:
            g = _group(ns.group)
            if g.family != "C":
                raise UsageError(f"shift invariance is checked on Sp(2n) (family C), got {g}")
            if ns.n is not None and ns.n != g.rank:
                raise UsageError(f"rank mismatch: --n {ns.n} vs {g}")
        elif ns.n is not None and ns.n >= 1:
            g = GroupType("C", ns.n)
        else:
            raise UsageError("shift needs --group C<n> or --n")
        cmd.group = g
        payload["lambda"] = _partition(ns.lam, g.rank)
        payload["d"] = _positive("d", ns.degree)
    elif check == "equivalence":
        if ns.n < 1:
            raise UsageError("--n must be positive")
        cmd.group = GroupType("A", ns.n)
        payload["n"] = ns.n
        payload["bound"] = _positive("bound", ns.bound)
    elif check == "cauchy":
        if not 1 <= ns.n <= ns.m:
            raise UsageError(f"need 1 <= n <= m, got n={ns.n}, m={ns.m}")
        cmd.group = GroupType("A", ns.n)
        payload.update(n=ns.n, m=ns.m, d=_positive("d", ns.d))
    elif check == "necessity":
        cmd.group = _group(ns.group)
        payload["bound"] = _positive("bound", ns.bound)
        payload["max_power"] = _positive("max-power", ns.max_power)


# ---------------------------------------------------------------- execution


def _rows(lam: Partition, rank: int) -> str:
    return "(" + ",".join(map(str, lam.padded(rank))) + ")"


def _factor_label(payload: dict) -> str:
    if "mu" in payload:
        return f"Pi{format_true(payload['mu'])}"
    return ("Λ^" if payload["power"] == "ext" else "Sym^") + str(payload["i"])


def _factor_json(payload: dict) -> dict:
    if "mu" in payload:
        return {"mu": weight_json(payload["mu"])}
    return {payload["power"]: payload["i"]}


def _decomposition_text(title: str, dec) -> list[str]:
    lines = [title]
    if not dec:
        lines.append("  (zero)")
    width = max((len(str(nu)) for nu in dec), default=0)
    for nu, m in dec.items():
        lines.append(f"  {str(nu):<{width}}  x{m}  dim {weyl_dim(dec.group, nu)}")
    lines.append(f"  total dimension {dec.dimension}")
    return lines


def _run_rule(cmd: Command) -> tuple[int, dict, list[str]]:
    g, p = cmd.group, cmd.payload
    lam, i = p["lambda"], p["i"]
    disclaimer = None
    if g.family == "A":
        dec = (gl_exterior if p["power"] == "ext" else gl_symmetric)(lam, i, g.rank)
    else:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", NonRegularWeightWarning)
            try:
                dec = classical_exterior(g, lam, i, force=p["force"])
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        if caught:
            disclaimer = str(caught[0].message)
    title = f"{g.classical_name}: Pi{_rows(lam, g.rank)} ⊗ {_factor_label(p)}  [closed-form rule]"
    lines = _decomposition_text(title, dec)
    data = {"verb": "rule", "lambda": list(lam), **_factor_json(p), **dec.to_json()}
    if disclaimer:
        lines.append(f"disclaimer: {disclaimer}")
        data["disclaimer"] = disclaimer
    return 0, data, lines


def _run_decompose(cmd: Command) -> tuple[int, dict, list[str]]:
    g, p = cmd.group, cmd.payload
    lam = p["lambda"]
    if "mu" in p:
        dec = tensor_irreps(g, lam, p["mu"])
    else:
        u = exterior_power(g, p["i"]) if p["power"] == "ext" else symmetric_power(g, p["i"])
        dec = klimyk_decompose(g, lam, u)
    title = f"{g.classical_name}: Pi{format_true(lam)} ⊗ {_factor_label(p)}"
    data = {"verb": "decompose", "lambda": weight_json(lam), **_factor_json(p), **dec.to_json()}
    return 0, data, _decomposition_text(title, dec)


def _run_branch(cmd: Command) -> tuple[int, dict, list[str]]:
    src, hw = cmd.payload["from"], cmd.payload["hw"]
    dec = branch_gl(hw, cmd.group.rank)
    title = f"{src.classical_name} -> {cmd.group.classical_name}: Pi{_rows(hw, src.rank)}"
    data = {"verb": "branch", "from": str(src), "hw": list(hw), **dec.to_json()}
    return 0, data, _decomposition_text(title, dec)


def _run_dim(cmd: Command) -> tuple[int, dict, list[str]]:
    g, lam = cmd.group, cmd.payload["lambda"]
    d = weyl_dim(g, lam)
    data = {"verb": "dim", "group": str(g), "hw": weight_json(lam), "dim": d}
    return 0, data, [f"{g.classical_name}: dim Pi{format_true(lam)} = {d}"]


def _run_weights(cmd: Command) -> tuple[int, dict, list[str]]:
    g, lam = cmd.group, cmd.payload["lambda"]
    diagram = freudenthal(g, lam)
    lines = [f"{g.classical_name}: weights of Pi{format_true(lam)} ({len(diagram)} weights, dim {diagram.mass})"]
    width = max(len(str(w)) for w in diagram)
    lines += [f"  {str(w):<{width}}  x{m}" for w, m in diagram.items()]
    return 0, {"verb": "weights", "hw": weight_json(lam), **diagram.to_json()}, lines


def _report_lines(title: str, data: dict) -> list[str]:
    lines = [title, f"  checked {data.get('checked', data.get('checked_pairs'))}", f"  passed  {data['passed']}"]
    for key in ("mismatches", "converse_gaps", "exterior_unpaired", "symmetric_violations", "symmetric_unpaired"):
        if key in data and (key == "mismatches" or data[key]):
            lines.append(f"  {key}: {len(data[key])}")
            lines += [f"    {json.dumps(item, ensure_ascii=False)}" for item in data[key]]
    return lines


def _run_verify(cmd: Command) -> tuple[int, dict, list[str]]:
    g, p = cmd.group, cmd.payload
    check = p["check"]
    if check == "kostant":
        lam = p["lambda"]
        if "mu" in p:
            report = kostant_bound_check(g, lam, p["mu"])
        else:
            report = kostant_power_check(g, lam, p["power"], p["i"])
        data = report.to_json()
        title = f"kostant bound, {g}: Pi{format_true(lam)} ⊗ {_factor_label(p)}"
    elif check == "extended-kostant":
        report = levi_equality_check(g, p["lambda"], p["i"], exploratory=p["exploratory"])
        data = report.to_json()
        title = f"Levi multiplicity equality, {g}: Pi{_rows(p['lambda'], g.rank)} ⊗ Λ^{p['i']}"
    elif check == "shift":
        report = shift_invariance_check(g.rank, p["lambda"], p["d"])
        data = report.to_json()
        title = f"shift invariance, {g}: lambda={_rows(p['lambda'], g.rank)}, d={p['d']}"
    elif check == "equivalence":
        report = equivalence_check(p["n"], p["bound"])
        data = report.to_json()
        title = f"branching/Pieri/strip equivalence, n={p['n']}, |mu| <= {p['bound']}"
    elif check == "cauchy":
        report = cauchy_dimension_check(p["n"], p["m"], p["d"])
        data = report.to_json()
        title = f"Cauchy dimension identity, n={p['n']}, m={p['m']}, d={p['d']}: {data['sum']} vs {data['binomial']}"
    else:
        top = min(p["max_power"], g.defining_dim)
        reps = [exterior_power(g, i) for i in range(1, top + 1)]
        labels = [f"Λ^{i}" for i in range(1, top + 1)]
        reps += [symmetric_power(g, i) for i in range(1, p["max_power"] + 1)]
        labels += [f"Sym^{i}" for i in range(1, p["max_power"] + 1)]
        records = necessity_scan(g, p["bound"], reps, workers=cmd.threads)
        found = [
            {"lambda": weight_json(r.lam), "u": labels[r.rep_index], "terms": r.decomposition.to_json()["terms"]}
            for r in records
        ]
        data = {
            "claim": "weight rule holds only inside the deep chamber",
            "group": str(g),
            "domain": {"max_entry": p["bound"], "reps": labels},
            "checked": sum(1 for _ in dominant_weights(g, p["bound"])) * len(reps),
            "passed": not found,
            "mismatches": found,
        }
        title = f"necessity scan, {g}: entries <= {p['bound']}, U in {{{', '.join(labels)}}}"
    data = {"verb": "verify", "check": check, **data}
    return (0 if data["passed"] else 1), data, _report_lines(title, data)


_RUNNERS = {
    "rule": _run_rule,
    "decompose": _run_decompose,
    "branch": _run_branch,
    "dim": _run_dim,
    "weights": _run_weights,
    "verify": _run_verify,
}


def run(cmd: Command) -> tuple[int, bytes]:
    """Execute ``cmd``; returns the exit code and the bytes destined for stdout."""
    try:
        code, data, lines = _RUNNERS[cmd.verb](cmd)
    except UsageError as exc:
        return 2, f"pieri: error: {exc}\n".encode()
    except (InvariantViolation, InvalidCharacterError) as exc:
        return 3, f"pieri: internal error: {exc}\n".encode()
    blob = json.dumps(data, indent=2, ensure_ascii=False) + "\n"
    if cmd.json_path:
        with open(cmd.json_path, "w", encoding="utf-8") as fh:
            fh.write(blob)
    text = blob if cmd.format == "json" else "\n".join(lines) + "\n"
    return code, text.encode()


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cmd = parse(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        sys.stderr.write(f"pieri: error: {exc}\n")
        return 2
    code, out = run(cmd)
    stream = sys.stdout if code in (0, 1) else sys.stderr
    stream.buffer.write(out) if hasattr(stream, "buffer") else stream.write(out.decode())
    stream.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
