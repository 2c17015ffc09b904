"""Command-line surface.

Subcommands:
  check      decide effectiveness of one action spec
  enumerate  effectiveness table over parameter ranges
  act        apply a unitary to a point, print raw + canonical form
  verify     run the full numerical verification suite

Configuration is a single JSON document (path or ``-`` for stdin); flags
override config fields.  Exit codes: 0 success / effective, 1 not
effective (check only), 2 invalid input, 3 verification failure.
"""

import argparse
import csv
import io
import itertools
import json
import os
import sys

from . import serialize
from .action import ActionKind, act
from .cmatrix import unitarity_residual
from .effectiveness import find_witness, is_effective
from .hopf import canonicalize
from .oracle import run_full_verification

EXIT_OK = 0
EXIT_NOT_EFFECTIVE = 1
EXIT_INVALID = 2
EXIT_VERIFY_FAILED = 3


def _load_config(path: str) -> dict:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    config = json.loads(text)
    if not isinstance(config, dict):
        raise ValueError("config must be a JSON object")
    return config


def _apply_overrides(config: dict, args) -> dict:
    for name in ("seed", "tol", "trials", "format"):
        value = getattr(args, name, None)
        if value is not None:
            config[name] = value
    return config


def _emit(text: str, args) -> None:
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_json_or_path(value: str):
    """Accept inline JSON or a path to a JSON file."""
    try:
        return json.loads(value)
    except json.JSONDecodeError:
        if os.path.exists(value):
            with open(value, "r", encoding="utf-8") as fh:
                return json.load(fh)
        raise ValueError(f"{value!r} is neither inline JSON nor an existing file")


def cmd_check(args) -> int:
    config = _apply_overrides(_load_config(args.spec), args)
    spec = serialize.spec_from_config(config)
    verdict = is_effective(spec)
    fmt = config.get("format", "json")
    if fmt == "text":
        lines = [f"effective: {verdict.effective}"]
        if verdict.witness is not None:
            lines.append(f"witness: ell={verdict.witness.ell} K={verdict.witness.K}")
            lines.append(f"kernel element: t={verdict.kernel_element.t!r} "
                         f"k={verdict.kernel_element.k}")
        _emit("\n".join(lines) + "\n", args)
    else:
        _emit(json.dumps(verdict.to_dict(), indent=2) + "\n", args)
    return EXIT_OK if verdict.effective else EXIT_NOT_EFFECTIVE


def _enumerate_rows(config: dict):
    ranges = config.get("ranges")
    if not isinstance(ranges, dict):
        raise ValueError("enumerate requires a 'ranges' object in the config")
    try:
        n_list = [int(x) for x in ranges["n_list"]]
        m_list = [int(x) for x in ranges["m_list"]]
        p_vals = range(int(ranges["p_min"]), int(ranges["p_max"]) + 1)
        q_vals = range(int(ranges["q_min"]), int(ranges["q_max"]) + 1)
        r_vals = [r for r in range(int(ranges["r_min"]), int(ranges["r_max"]) + 1)
                  if r != 0]
    except KeyError as exc:
        raise ValueError(f"ranges is missing field {exc.args[0]!r}")
    if any(n < 2 for n in n_list) or any(m < 1 for m in m_list):
        raise ValueError("n_list entries must be >= 2 and m_list entries >= 1")
    if not (n_list and m_list and list(p_vals) and list(q_vals) and r_vals):
        raise ValueError("empty enumeration ranges")
    kinds = [ActionKind.TYPE1, ActionKind.TYPE2]
    rows = []
    for n, m, kind, p, q, r in itertools.product(
            sorted(n_list), sorted(m_list), kinds, p_vals, q_vals, sorted(r_vals)):
        witness = find_witness(kind, n, m, p, q, r)
        rows.append({
            "n": n, "m": m, "kind": kind.value, "p": p, "q": q, "r": r,
            "effective": witness is None,
            "witness_ell": "" if witness is None else witness.ell,
            "witness_K": "" if witness is None else witness.K,
        })
    rows.sort(key=lambda row: (row["n"], row["m"], row["kind"],
                               row["p"], row["q"], row["r"]))
    return rows


def cmd_enumerate(args) -> int:
    config = _apply_overrides(_load_config(args.spec), args)
    rows = _enumerate_rows(config)
    fmt = config.get("format", "csv")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(
            buf, fieldnames=["n", "m", "kind", "p", "q", "r", "effective",
                             "witness_ell", "witness_K"],
            lineterminator="\r\n")
        writer.writeheader()
        for row in rows:
            out = dict(row)
            out["effective"] = "true" if row["effective"] else "false"
            writer.writerow(out)
        _emit(buf.getvalue(), args)
    elif fmt == "json":
        clean = [{**row,
                  "witness_ell": None if row["witness_ell"] == "" else row["witness_ell"],
                  "witness_K": None if row["witness_K"] == "" else row["witness_K"]}
                 for row in rows]
        _emit(json.dumps(clean, indent=2) + "\n", args)
    else:
        lines = [f"{r['n']} {r['m']} {r['kind']} p={r['p']} q={r['q']} r={r['r']} "
                 f"effective={r['effective']} witness=({r['witness_ell']},{r['witness_K']})"
                 for r in rows]
        _emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def cmd_act(args) -> int:
    config = _apply_overrides(_load_config(args.spec), args)
    spec = serialize.spec_from_config(config)
    matrix = serialize.matrix_from_json(_load_json_or_path(args.matrix))
    point = serialize.point_from_json(spec.params, _load_json_or_path(args.point))
    if matrix.shape[0] != spec.params.n:
        raise ValueError("matrix dimension does not match the manifold")
    if unitarity_residual(matrix) > 1e-8:
        raise ValueError("matrix is not unitary to 1e-8")
    result = act(spec, matrix, point)
    canonical = canonicalize(result)
    payload = {
        "raw": serialize.vector_to_json(result.rep),
        "canonical": serialize.vector_to_json(canonical.rep),
    }
    _emit(json.dumps(payload, indent=2) + "\n", args)
    return EXIT_OK


def cmd_verify(args) -> int:
    config = _apply_overrides(_load_config(args.spec), args)
    trials = int(config.get("trials", 200))
    seed = int(config.get("seed", 0))
    tol = float(config.get("tol", 1e-8))
    if "ranges" in config:
        specs = []
        for row in _enumerate_rows(config):
            sub = dict(config)
            sub.update({k: row[k] for k in ("n", "m", "kind", "p", "q", "r")})
            sub.pop("ranges")
            specs.append(serialize.spec_from_config(sub))
    else:
        specs = [serialize.spec_from_config(config)]
    reports = [run_full_verification(s, trials=trials, seed=seed, tol=tol)
               for s in specs]
    payload = [r.to_dict() for r in reports]
    _emit(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2) + "\n",
          args)
    return EXIT_OK if all(r.all_passed for r in reports) else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfact",
        description="Effective transitive unitary actions on quotients of "
                    "Hopf manifolds")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--spec", required=True,
                       help="JSON config path, or - for stdin")
        p.add_argument("--out", help="output file (default: stdout)")
        p.add_argument("--format", choices=["json", "csv", "text"])
        p.add_argument("--seed", type=int)
        p.add_argument("--tol", type=float)
        p.add_argument("--trials", type=int)

    p_check = sub.add_parser("check", help="decide effectiveness of one spec")
    common(p_check)
    p_check.set_defaults(func=cmd_check)

    p_enum = sub.add_parser("enumerate", help="effectiveness table over ranges")
    common(p_enum)
    p_enum.set_defaults(func=cmd_enumerate)

    p_act = sub.add_parser("act", help="apply a unitary to a point")
    common(p_act)
    p_act.add_argument("--matrix", required=True,
                       help="unitary matrix, inline JSON or file path")
    p_act.add_argument("--point", required=True,
                       help="point vector, inline JSON or file path")
    p_act.set_defaults(func=cmd_act)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
