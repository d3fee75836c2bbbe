"""``verify``: command-line harness for the pure-spinor and twistor checks.

Exit status is 0 when every check passes or is skipped, 1 when any check
fails and 2 on bad input.  ``--format json`` emits a deterministic report::

    {"suite": ..., "n": ..., "seed": ..., "checks": [...], "data": {...}}
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from ..connection import AntisymmetryError, FrameConnection
from ..exact_linalg import DimensionError, Subspace
from ..pure import IsotropicSubspace, NotIsotropicError, random_isotropic
from . import suites
from .parsing import InputError, connection_from_json, parse_spinor, parse_vector_list

__all__ = ["VerifyConfig", "main", "run", "build_parser"]

COMMANDS = ("theorem1", "pure", "annihilator", "twistor", "integrability", "geodesic", "sweep")
MAX_N = 12


@dataclass
class VerifyConfig:
    command: str
    n: int = 3
    seed: int = 0
    trials: int | None = None
    input_path: str | None = None
    output_format: str = "text"
    gens: str | None = None
    gens2: str | None = None
    spinor: str | None = None
    k: int | None = None

    def validate(self):
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}")
        if not 1 <= self.n <= MAX_N:
            raise InputError(f"--n must be in 1..{MAX_N}, got {self.n}")
        if self.trials is not None and self.trials < 1:
            raise InputError("--trials must be >= 1")
        if self.output_format not in ("text", "json"):
            raise InputError("--format must be text or json")


def _isotropic(text: str, n: int) -> IsotropicSubspace:
    vs = parse_vector_list(text, n)
    return IsotropicSubspace.span(n, vs)


def _load_connection(cfg: VerifyConfig) -> FrameConnection:
    try:
        text = Path(cfg.input_path).read_text()
    except OSError as err:
        raise InputError(f"cannot read {cfg.input_path}: {err.strerror}") from None
    return connection_from_json(text)


def _execute(cfg: VerifyConfig):
    n, seed = cfg.n, cfg.seed
    cmd = cfg.command
    data: dict = {}
    if cmd == "theorem1":
        checks = suites.theorem1_suite(n, seed, cfg.trials or 50)
    elif cmd == "pure":
        if cfg.gens is not None:
            I = _isotropic(cfg.gens, n)
        else:
            rng = random.Random(seed)
            I = random_isotropic(n, rng.randint(0, n), rng.randrange(1 << 30))
        I2 = _isotropic(cfg.gens2, n) if cfg.gens2 is not None else None
        checks, data = suites.pure_suite(I, I2)
    elif cmd == "annihilator":
        if cfg.spinor is not None:
            spinors = [parse_spinor(cfg.spinor, n)]
            if not spinors[0]:
                raise InputError("the zero spinor has no annihilator")
        else:
            rng = random.Random(seed)
            spinors = []
            for _ in range(cfg.trials or 20):
                s = suites._random_spinor(rng, n, 0.6)
                if s:
                    spinors.append(s)
        checks, data = suites.annihilator_suite(spinors)
    elif cmd == "twistor":
        if cfg.input_path:
            c = _load_connection(cfg)
            if c.n < 2:
                raise InputError("twistor analysis needs n >= 2")
            n = c.n
            checks, data = suites.twistor_report(c)
        else:
            checks, data = suites.twistor_suite(n, seed, cfg.trials or 10)
    elif cmd in ("integrability", "geodesic"):
        fn = suites.integrability_suite if cmd == "integrability" else suites.geodesic_suite
        c = _load_connection(cfg) if cfg.input_path else None
        if c is not None:
            n = c.n
        k = cfg.k
        if k is not None and not 1 <= k <= n:
            raise InputError(f"--k must be in 1..{n}")
        checks, data = fn(n, seed, cfg.trials or 50, c=c, k=k)
    else:  # sweep covers n = 2..5; the report records the largest
        n = 5
        checks = suites.sweep_suite(seed, cfg.trials or 100)
    return n, checks, data


def run(cfg: VerifyConfig, out=None) -> int:
    out = out or sys.stdout
    try:
        cfg.validate()
        n, checks, data = _execute(cfg)
    except (InputError, NotIsotropicError, AntisymmetryError, DimensionError) as err:
        print(f"input error: {err}", file=sys.stderr)
        return 2
    report = {"suite": cfg.command, "n": n, "seed": cfg.seed, "checks": [c.to_dict() for c in checks]}
    if data:
        report["data"] = data
    if cfg.output_format == "json":
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        _print_text(report, out)
    return 1 if any(c.status == "fail" for c in checks) else 0


def _compact(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _print_text(report: dict, out):
    out.write(f"{report['suite']}  n={report['n']}  seed={report['seed']}\n")
    for c in report["checks"]:
        line = f"  {c['status'].upper():4}  {c['name']}"
        if "detail" in c:
            line += f"  {_compact(c['detail'])}"
        out.write(line + "\n")
        if c.get("witness") is not None:
            out.write(f"        witness: {_compact(c['witness'])}\n")
    for key, value in report.get("data", {}).items():
        if isinstance(value, list) and all(isinstance(v, str) for v in value):
            value = "{" + ", ".join(value) + "}"
        elif not isinstance(value, str):
            value = _compact(value)
        out.write(f"  {key}: {value}\n")
    fails = sum(c["status"] == "fail" for c in report["checks"])
    out.write(f"{len(report['checks'])} checks, {fails} failed\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="verify", description="Exact checks of pure-spinor and twistor identities.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--n", type=int, default=3, help="dimension of V (1..12)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=None, help="number of random instances")
    p.add_argument("--input", dest="input_path", help="connection JSON document")
    p.add_argument("--format", dest="output_format", choices=("text", "json"), default="text")
    p.add_argument("--gens", help='generators of I, e.g. "e1; t2"')
    p.add_argument("--gens2", help="generators of a second isotropic subspace")
    p.add_argument("--spinor", help='spinor, e.g. "1 + t{1234}"')
    p.add_argument("--k", type=int, default=None, help="rank of span{e_1..e_k}")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    return run(VerifyConfig(**vars(ns)))
