"""``zeta-arr`` command line: inspect, zeta, dl, verify.

Exit codes: 0 ok, 2 parse error, 3 mathematical precondition, 4 jet budget
exceeded, 5 verification mismatch.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from .cache import ResultCache, job_key
from .errors import BudgetExceededError, PreconditionError, VerificationError, ZetaArrError
from .fan import chains, check_chain_bijection, check_u
from .fields import is_prime
from .io import dumps, load_input
from .matroid import Matroid
from .oracle import DEFAULT_BUDGET, verify
from .realization import Arrangement
from .zeta import MONODROMY_NOTE, VARIANTS, dl_pointcount_series, igusa_rational, igusa_series

COMMANDS = ("inspect", "zeta", "dl", "verify")
DEFAULT_DEGREE = 12
DEFAULT_VERIFY_DEGREE = 3


@dataclass(frozen=True)
class JobConfig:
    input: str
    command: str
    degree: int
    u: tuple[int, ...] | None
    variant: str
    primes: tuple[int, ...]
    budget: int
    format: str
    workers: int = 1
    cache: str | None = None
    output: str | None = None

    def key_fields(self) -> dict:
        # workers, cache and output never change the bytes produced
        out = asdict(self)
        for k in ("input", "workers", "cache", "output"):
            out.pop(k)
        out["u"] = list(self.u) if self.u is not None else None
        out["primes"] = list(self.primes)
        return out


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _budget(text: str) -> int:
    try:
        value = float(text) if any(c in text for c in ".eE") else int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad budget {text!r}") from exc
    if value != int(value) or value < 0:
        raise argparse.ArgumentTypeError(f"budget must be a nonnegative integer, got {text!r}")
    return int(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zeta-arr", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", required=True, help="matroid or arrangement JSON file")
    parser.add_argument("--degree", type=int, default=None, help="truncation order D (default 12; 3 for verify)")
    parser.add_argument("--u", type=_int_list, default=None, help="multiplicities, e.g. 1,2,1 (default all ones)")
    parser.add_argument("--variant", choices=VARIANTS, default="global")
    parser.add_argument("--primes", type=_int_list, default=(), help="e.g. 2,3,5 (dl and verify)")
    parser.add_argument("--budget", type=_budget, default=DEFAULT_BUDGET, help="max jets per oracle count")
    parser.add_argument("--cache", default=None, help="result cache directory")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--output", default=None, help="write the result here instead of stdout")
    parser.add_argument("--workers", type=int, default=1, help="processes for jet enumeration")
    return parser


def config_from_args(args: argparse.Namespace) -> JobConfig:
    degree = args.degree
    if degree is None:
        degree = DEFAULT_VERIFY_DEGREE if args.command == "verify" else DEFAULT_DEGREE
    if degree < 0:
        raise PreconditionError("--degree must be >= 0")
    if args.workers < 1:
        raise PreconditionError("--workers must be >= 1")
    bad = [p for p in args.primes if not is_prime(p)]
    if bad:
        raise PreconditionError(f"not prime: {bad}")
    if args.command in ("dl", "verify") and not args.primes:
        raise PreconditionError(f"{args.command} needs --primes")
    return JobConfig(
        input=args.input,
        command=args.command,
        degree=degree,
        u=args.u,
        variant=args.variant,
        primes=tuple(args.primes),
        budget=args.budget,
        format=args.format,
        workers=args.workers,
        cache=args.cache,
        output=args.output,
    )


def _realized(source, command: str) -> Arrangement:
    if not isinstance(source, Arrangement):
        raise PreconditionError(f"{command} needs a realization (a 'matrix'), not an abstract matroid")
    return source


def _matroid(source) -> Matroid:
    return source.matroid if isinstance(source, Arrangement) else source


# commands return (document, text lines, exit code)


def cmd_inspect(source, cfg: JobConfig):
    M = _matroid(source)
    doc = {
        "n": M.n,
        "d": M.d,
        "bases": len(M.bases),
        "circuits": [sorted(C) for C in M.circuits()],
        "flats": [{"elements": sorted(F.elements), "rank": F.rank} for F in M.flats()],
        "chains": len(chains(M)) if M.is_loop_free() else None,
        "chi": str(M.characteristic_polynomial()),
    }
    if isinstance(source, Arrangement):
        doc["field"] = source.field.to_json()
    text = [
        f"n: {M.n}",
        f"d: {M.d}",
        f"bases: {len(M.bases)}",
        f"circuits: {len(doc['circuits'])}",
        f"flats: {len(doc['flats'])}",
        f"chains: {doc['chains']}",
        f"chi: {doc['chi']}",
    ]
    return doc, text, 0


def cmd_zeta(source, cfg: JobConfig):
    M = _matroid(source)
    u = check_u(cfg.u, M.n)
    series = igusa_series(M, u, cfg.degree, cfg.variant)
    rational = None
    if check_chain_bijection(M, cfg.degree, u):
        rational = igusa_rational(M, u, cfg.variant, check_degree=-1).to_json()
    doc = {
        "variant": cfg.variant,
        "u": list(u),
        "degree": cfg.degree,
        "series": series.to_json(),
        "rational": rational,
    }
    text = [f"variant: {cfg.variant}", f"u: {','.join(map(str, u))}"]
    text += [f"T^{ell}: {c}" for ell, c in enumerate(series)]
    text.append(f"rational: {'available' if rational is not None else 'unavailable'}")
    return doc, text, 0


def cmd_dl(source, cfg: JobConfig):
    A = _realized(source, "dl")
    u = check_u(cfg.u, A.n)
    counts = []
    text = [f"variant: {cfg.variant}", f"u: {','.join(map(str, u))}", f"note: {MONODROMY_NOTE}"]
    for p in cfg.primes:
        series = dl_pointcount_series(A, p, u, cfg.degree, cfg.variant)
        counts.append({"q": p, "series": series.to_json()})
        text += [f"q={p} T^{ell}: {c}" for ell, c in enumerate(series)]
    doc = {
        "variant": cfg.variant,
        "u": list(u),
        "degree": cfg.degree,
        "monodromy": MONODROMY_NOTE,
        "counts": counts,
    }
    return doc, text, 0


def cmd_verify(source, cfg: JobConfig):
    A = _realized(source, "verify")
    report = verify(A, cfg.primes, cfg.degree, cfg.u, cfg.budget, cfg.workers)
    doc = report.to_json()
    text = [
        f"p={c['p']} deg={c['deg']} {c['variant']}: {c['status']} (expected {c['expected']}, got {c['actual']})"
        for c in report.checks
    ]
    if report.failures:
        code = VerificationError.exit_code
    elif report.skipped:
        code = BudgetExceededError.exit_code
    else:
        code = 0
    text.append(f"{len(report.checks) - len(report.failures) - len(report.skipped)} passed, "
                f"{len(report.failures)} failed, {len(report.skipped)} over budget")
    return doc, text, code


HANDLERS = {"inspect": cmd_inspect, "zeta": cmd_zeta, "dl": cmd_dl, "verify": cmd_verify}


def run(cfg: JobConfig) -> tuple[str, int]:
    """Execute a job, consulting the cache; returns the rendered output and exit code."""
    source = load_input(cfg.input)
    cache = ResultCache(cfg.cache) if cfg.cache else None
    key = None
    if cache is not None:
        canonical = source.to_json()
        key = job_key(canonical, cfg.command, cfg.key_fields())
        hit = cache.get(key)
        if hit is not None and isinstance(hit.get("output"), str) and isinstance(hit.get("exit_code"), int):
            print(f"cache hit {key}", file=sys.stderr)
            return hit["output"], hit["exit_code"]
    doc, text, code = HANDLERS[cfg.command](source, cfg)
    rendered = dumps(doc) if cfg.format == "json" else "\n".join(text) + "\n"
    if cache is not None:
        cache.put(key, {"output": rendered, "exit_code": code})
    return rendered, code


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="warning: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        rendered, code = run(cfg)
    except ZetaArrError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    if cfg.output:
        try:
            Path(cfg.output).write_text(rendered)
        except OSError as exc:
            print(f"error: cannot write {cfg.output}: {exc.strerror}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(rendered)
    if code == BudgetExceededError.exit_code:
        print("error: some checks exceeded the jet budget", file=sys.stderr)
    elif code == VerificationError.exit_code:
        print("error: verification mismatch", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
