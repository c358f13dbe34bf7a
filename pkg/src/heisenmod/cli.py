"""Command-line front end.

Subcommands read a JSON job file describing a group, a lattice, and windows,
run the corresponding computation, and print JSON (default) or CSV. Output is
deterministic: identical job file and seed give byte-identical stdout.

Exit codes: 0 success, 1 failed identity in ``verify``, 2 malformed job file
or arguments, 3 mathematical domain error (for example, asking for dual
windows of a system that is not a frame).

The environment variable HEISENMOD_THREADS caps the linear-algebra thread
pools; it must be honored before numpy loads, so this module defers heavy
imports until after it is read.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction


class SpecError(ValueError):
    """Malformed job file: bad schema, field type, or window name."""


def _apply_thread_cap() -> None:
    cap = os.environ.get("HEISENMOD_THREADS")
    if not cap:
        return
    for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS",
                "VECLIB_MAXIMUM_THREADS", "NUMEXPR_NUM_THREADS"):
        os.environ.setdefault(var, cap)


def _load_job(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            job = json.load(fh)
    except OSError as exc:
        raise SpecError(f"cannot read job file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecError(f"job file {path} is not valid JSON: {exc}") from exc
    if not isinstance(job, dict):
        raise SpecError("job file must hold a JSON object")
    return job


def _parse_group(job: dict):
    from .groups import FiniteAbelianGroup

    orders = job.get("group")
    if not isinstance(orders, list) or not orders or not all(
        isinstance(n, int) and n >= 1 for n in orders
    ):
        raise SpecError('field "group" must be a nonempty list of integers >= 1')
    return FiniteAbelianGroup(tuple(orders))


def _parse_lattice(job: dict, group):
    from .groups import subgroup_from_generators

    gens = job.get("generators", [])
    if not isinstance(gens, list):
        raise SpecError('field "generators" must be a list of [[x...],[w...]] pairs')
    parsed = []
    for g in gens:
        if (
            not isinstance(g, list)
            or len(g) != 2
            or not all(isinstance(part, list) for part in g)
            or not all(isinstance(v, int) for part in g for v in part)
            or any(len(part) != group.rank for part in g)
        ):
            raise SpecError(f"generator {g!r} is not a [[x...],[w...]] integer pair")
        parsed.append((tuple(g[0]), tuple(g[1])))
    weight_raw = job.get("weight", "1")
    try:
        weight = Fraction(str(weight_raw))
    except (ValueError, ZeroDivisionError) as exc:
        raise SpecError(f'field "weight" is not a rational: {weight_raw!r}') from exc
    if weight <= 0:
        raise SpecError(f'field "weight" must be positive, got {weight}')
    return subgroup_from_generators(group, parsed, weight)


def _parse_windows(job: dict, group):
    from .shifts import Window, parse_window

    raw = job.get("windows", [])
    if not isinstance(raw, list):
        raise SpecError('field "windows" must be a list')
    windows = []
    for item in raw:
        if isinstance(item, str):
            try:
                windows.append(parse_window(group, item))
            except ValueError as exc:
                raise SpecError(str(exc)) from exc
        elif isinstance(item, list):
            if len(item) != group.order or not all(
                isinstance(p, list) and len(p) == 2 for p in item
            ):
                raise SpecError(
                    f"explicit window needs {group.order} [re, im] pairs, got {item!r}"
                )
            import numpy as np

            vals = np.array([complex(p[0], p[1]) for p in item])
            windows.append(Window(group, vals))
        else:
            raise SpecError(f"window entry {item!r} is neither a name nor [re, im] pairs")
    return windows


def _resolve_seed(job: dict, args) -> int:
    if args.seed is not None:
        return args.seed
    seed = job.get("seed", 0)
    if not isinstance(seed, int) or seed < 0:
        raise SpecError('field "seed" must be a nonnegative integer')
    return seed


def _frac(x: Fraction) -> str:
    return str(x)


def _cpair(c: complex) -> list[float]:
    return [float(c.real), float(c.imag)]


def _point(z) -> list[list[int]]:
    return [list(z[0]), list(z[1])]


def _emit(payload: dict, out: str, csv_rows=None) -> None:
    if out == "csv":
        if csv_rows is None:
            csv_rows = [f"{k},{_plain(v)}" for k, v in payload.items()]
        sys.stdout.write("\n".join(csv_rows) + "\n")
    else:
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")


def _plain(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True)
    return str(v)


def cmd_adjoint(job: dict, args) -> int:
    from .groups import adjoint_subgroup

    group = _parse_group(job)
    lattice = _parse_lattice(job, group)
    adj = adjoint_subgroup(lattice)
    payload = {
        "elements": [_point(z) for z in adj.elements],
        "weight": _frac(adj.weight),
        "s": _frac(lattice.size),
        "count": len(adj),
    }
    _emit(payload, args.out)
    return 0


def _system(job: dict, args, need_windows: int = 1):
    from .gabor import GaborSystem

    group = _parse_group(job)
    lattice = _parse_lattice(job, group)
    windows = _parse_windows(job, group)
    if len(windows) < need_windows:
        raise SpecError(f"this command needs at least {need_windows} window(s)")
    return group, lattice, windows, GaborSystem(lattice, tuple(windows))


def cmd_frame_bounds(job: dict, args) -> int:
    from .gabor import frame_bounds, is_frame

    _, lattice, _, sys_ = _system(job, args)
    bounds = frame_bounds(sys_)
    payload = {
        "A": bounds.lower,
        "B": bounds.upper,
        "frame": is_frame(sys_, args.tol),
        "s": _frac(lattice.size),
    }
    _emit(payload, args.out)
    return 0


def cmd_dual_window(job: dict, args) -> int:
    from .gabor import dual_window, frame_bounds

    _, _, _, sys_ = _system(job, args)
    duals = dual_window(sys_, args.tol)
    bounds = frame_bounds(sys_)
    payload = {
        "windows": [[_cpair(v) for v in w.values] for w in duals],
        "A": bounds.lower,
        "B": bounds.upper,
    }
    rows = [",".join(str(x) for pair in w for x in pair) for w in payload["windows"]]
    _emit(payload, args.out, csv_rows=rows)
    return 0


def cmd_figa(job: dict, args) -> int:
    from .module import figa_check, module_context

    group, lattice, windows, _ = _system(job, args)
    four = [windows[i % len(windows)] for i in range(4)]
    res = figa_check(four[0], four[1], four[2], four[3], module_context(lattice))
    payload = {
        "lhs": _cpair(res["lhs"]),
        "rhs": _cpair(res["rhs"]),
        "abs_gap": res["abs_gap"],
        "rel_gap": res["rel_gap"],
    }
    _emit(payload, args.out)
    return 0


def cmd_gen_check(job: dict, args) -> int:
    from .gabor import is_frame
    from .module import module_context, module_frame_check

    _, lattice, windows, sys_ = _system(job, args)
    res = module_frame_check(windows, module_context(lattice), args.tol)
    frame = is_frame(sys_, args.tol)
    payload = {
        "generating": res["generating"],
        "frame": frame,
        "agree": res["generating"] == frame,
        "A": res["bounds"].lower,
        "B": res["bounds"].upper,
    }
    _emit(payload, args.out)
    return 0


def cmd_janssen(job: dict, args) -> int:
    import numpy as np

    from .gabor import GaborSystem, frame_operator, janssen_frame_operator

    _, lattice, windows, _ = _system(job, args)
    eta = windows[0]
    gap = float(
        np.abs(
            janssen_frame_operator(eta, lattice)
            - frame_operator(GaborSystem(lattice, (eta,)))
        ).max()
    )
    payload = {"max_abs_gap": gap, "pass": gap <= 1e-10, "s": _frac(lattice.size)}
    _emit(payload, args.out)
    return 0


def cmd_spectrum(job: dict, args) -> int:
    from .gabor import spectrum

    _, _, _, sys_ = _system(job, args)
    eigs = [float(v) for v in spectrum(sys_)]
    payload = {"spectrum": eigs}
    _emit(payload, args.out, csv_rows=[str(v) for v in eigs])
    return 0


def cmd_verify(job: dict, args) -> int:
    from .module import verify_suite

    group = _parse_group(job)
    lattice = _parse_lattice(job, group)
    seed = _resolve_seed(job, args)
    report = verify_suite(lattice, seed=seed, frame_tol=args.tol)
    rows = ["name,cases,max_abs_gap,max_rel_gap,pass"] + [
        f'{e["name"]},{e["cases"]},{e["max_abs_gap"]},{e["max_rel_gap"]},{_plain(e["pass"])}'
        for e in report["identities"]
    ]
    _emit(report, args.out, csv_rows=rows)
    return 0 if report["pass"] else 1


_COMMANDS = {
    "adjoint": cmd_adjoint,
    "frame-bounds": cmd_frame_bounds,
    "dual-window": cmd_dual_window,
    "figa": cmd_figa,
    "gen-check": cmd_gen_check,
    "janssen": cmd_janssen,
    "spectrum": cmd_spectrum,
    "verify": cmd_verify,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heisenmod",
        description="Gabor frames and Heisenberg modules over finite abelian groups.",
    )
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("--spec", required=True, help="path to the JSON job file")
    parser.add_argument("--seed", type=int, default=None, help="override the job file seed")
    parser.add_argument("--tol", type=float, default=1e-9, help="frame invertibility tolerance")
    parser.add_argument("--out", choices=("json", "csv"), default="json")
    return parser


def main(argv: list[str] | None = None) -> int:
    _apply_thread_cap()
    args = _build_parser().parse_args(argv)
    try:
        job = _load_job(args.spec)
        return _COMMANDS[args.command](job, args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
