"""Command-line driver.

Exit codes: 0 the command's assertion holds, 1 it fails, 2 usage error,
3 unsupported algebra.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import report as rpt
from .chevalley import build_chevalley, read_cache, write_cache
from .errors import CacheCorrupted, ConformalSystemsError, UnsupportedAlgebra
from .invariance import (
    EXISTS,
    NOT_EXISTS,
    all_special_values,
    omega2_invariance,
    reducibility_witness,
    singleton_components,
    verify_annihilation,
)
from .omega import Context, omega3
from .chevalley import LieElement
from .parabolic import deleted_components, vminus_components
from .polys import format_rational
from .rootsys import AlgebraType, build_root_system
from .selftest import DEFAULT_SAMPLES, DEFAULT_SEED, run_selftest
from .verma import specialize

CACHE_ENV = "CONFORMAL_SYSTEMS_CACHE_DIR"
COMMANDS = ("build", "special-values", "verify", "omega2-check", "nonexist", "selftest")


@dataclass
class RunConfig:
    algebra: AlgebraType
    command: str
    s: Fraction | None = None
    t: Fraction | None = None
    output_format: str = "text"
    cache_path: Path | None = None
    sign_seed: int | None = None
    audit: bool = False
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.command == "verify" and (self.s is None or self.t is None):
            raise ValueError("verify requires both s and t")
        if self.command == "special-values" and (self.s is not None or self.t is not None):
            raise ValueError("special-values does not accept s or t")


def _cache_file(cfg: RunConfig) -> Path | None:
    if cfg.cache_path is not None:
        return cfg.cache_path
    base = os.environ.get(CACHE_ENV)
    if base:
        return Path(base) / f"{cfg.algebra.label}-seed{cfg.sign_seed}.sc"
    return None


def build_context(cfg: RunConfig) -> Context:
    rs = build_root_system(cfg.algebra)
    path = _cache_file(cfg)
    if path is not None and path.exists():
        tab = read_cache(rs, path)
    else:
        tab = build_chevalley(rs, cfg.sign_seed)
        if path is not None:
            write_cache(tab, path)
    return Context.build(cfg.algebra, tab=tab)


def _emit(cfg: RunConfig, doc: dict[str, Any], text: str, out) -> None:
    if cfg.output_format == "json":
        out.write(rpt.dumps(doc) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _cmd_build(cfg, ctx, out) -> int:
    g = ctx.grad
    comps = vminus_components(g)
    deleted = deleted_components(ctx.rs).components
    doc = {
        "algebra": ctx.label,
        "command": cfg.command,
        "positive_roots": len(ctx.rs.positives),
        "highest_root": list(ctx.rs.gamma),
        "rho": [format_rational(x) for x in ctx.rs.rho],
        "grading_dims": list(g.dims),
        "deleted_components": [[i + 1 for i in c] for c in deleted],
        "vminus_components": [
            {"roots": [list(r) for r in E.roots], "highest_weight": list(E.highest_weight)} for E in comps
        ],
        "structure_constants": len(ctx.tab.N),
    }
    lines = [
        f"{ctx.label}: {len(ctx.rs.positives)} positive roots, highest root {rpt.root_label(ctx.rs.gamma)}",
        "grading dims (z(nbar), V-, l, V+, z(n)): " + " ".join(str(d) for d in g.dims),
        "deleted diagram: " + (" ".join("{" + ",".join(f"a{i + 1}" for i in c) + "}" for c in deleted) or "empty"),
    ]
    for E in comps:
        lines.append(f"V- component of size {len(E.roots)}, highest weight {rpt.root_label(E.highest_weight)}")
    _emit(cfg, doc, "\n".join(lines), out)
    return 0


def _cmd_special_values(cfg, ctx, out) -> int:
    reports = all_special_values(ctx, audit=cfg.audit)
    subs = []
    texts = [f"{ctx.label}: special values of the third-order systems"]
    for r in reports:
        d = rpt.report_to_dict(r)
        texts.append(rpt.report_text(r))
        if r.status == EXISTS:
            s0, t0 = r.solutions[0]
            w = reducibility_witness(ctx, r.submodule, s0, t0)
            d["reducibility"] = {k: (format_rational(v) if not isinstance(v, bool) else v) for k, v in w.items()}
            if w["reducible"]:
                texts.append(
                    f"  H_gamma acts on F by {format_rational(w['h_gamma_on_F'])} and on the vacuum by "
                    f"{format_rational(w['h_gamma_on_vacuum'])}: the generalized Verma module at s = {format_rational(s0)} is reducible"
                )
        subs.append(d)
    doc = {"algebra": ctx.label, "command": cfg.command, "submodules": subs}
    _emit(cfg, doc, "\n".join(texts), out)
    return 0


def _cmd_verify(cfg, ctx, out) -> int:
    subs = []
    texts = [f"{ctx.label}: verifying n-annihilation at s = {format_rational(cfg.s)}, t = {format_rational(cfg.t)}"]
    ok_all = True
    for E in vminus_components(ctx.grad):
        vectors = [omega3(ctx, LieElement.X(b)) for b in E.roots]
        nonzero = any(not specialize(v, cfg.s, cfg.t).is_zero() for v in vectors)
        annihilated = verify_annihilation(ctx, E, cfg.s, cfg.t, vectors)
        checks = len(vectors) * len(ctx.grad.nilradical())
        ok = nonzero and annihilated
        ok_all &= ok
        subs.append({
            "roots": [list(r) for r in E.roots],
            "highest_weight": list(E.highest_weight),
            "checks": checks,
            "annihilated": annihilated,
            "nonzero": nonzero,
        })
        texts.append(
            f"  component {rpt.root_label(E.highest_weight)} ({len(E.roots)} roots): "
            f"{checks} checks, annihilated={annihilated}, nonzero={nonzero}"
        )
    texts.append("PASS" if ok_all else "FAIL")
    doc = {
        "algebra": ctx.label,
        "command": cfg.command,
        "s": format_rational(cfg.s),
        "t": format_rational(cfg.t),
        "submodules": subs,
        "passed": ok_all,
    }
    _emit(cfg, doc, "\n".join(texts), out)
    return 0 if ok_all else 1


def _cmd_omega2(cfg, ctx, out) -> int:
    reports = [omega2_invariance(ctx, c) for c in singleton_components(ctx)]
    doc = {"algebra": ctx.label, "command": cfg.command, "components": [rpt.report_to_dict(r) for r in reports]}
    texts = [f"{ctx.label}: second-order systems on singleton components of the deleted diagram"]
    texts += [rpt.report_text(r) for r in reports] or ["  (no singleton components)"]
    _emit(cfg, doc, "\n".join(texts), out)
    return 0 if all(r.status == EXISTS for r in reports) else 1


def _cmd_nonexist(cfg, ctx, out) -> int:
    reports = all_special_values(ctx, audit=cfg.audit)
    ok = all(r.status == NOT_EXISTS for r in reports)
    doc = {
        "algebra": ctx.label,
        "command": cfg.command,
        "submodules": [rpt.report_to_dict(r) for r in reports],
        "all_not_exist": ok,
    }
    texts = [f"{ctx.label}: nonexistence check"] + [rpt.report_text(r) for r in reports]
    texts.append("PASS" if ok else "FAIL")
    _emit(cfg, doc, "\n".join(texts), out)
    return 0 if ok else 1


def _cmd_selftest(cfg, ctx, out) -> int:
    results = run_selftest(ctx, seed=cfg.seed, samples=cfg.samples)
    ok = all(r.passed for r in results)
    doc = {
        "algebra": ctx.label,
        "command": cfg.command,
        "seed": cfg.seed,
        "samples": cfg.samples,
        "suites": [{"name": r.name, "checked": r.checked, "passed": r.passed, "failures": r.failures} for r in results],
        "passed": ok,
    }
    texts = [f"{ctx.label}: selftest (seed {cfg.seed})"]
    texts += [f"  {'PASS' if r.passed else 'FAIL'}  {r.name:<28} {r.checked} checks" for r in results]
    _emit(cfg, doc, "\n".join(texts), out)
    return 0 if ok else 1


_DISPATCH = {
    "build": _cmd_build,
    "special-values": _cmd_special_values,
    "verify": _cmd_verify,
    "omega2-check": _cmd_omega2,
    "nonexist": _cmd_nonexist,
    "selftest": _cmd_selftest,
}


def run(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    try:
        ctx = build_context(cfg)
        return _DISPATCH[cfg.command](cfg, ctx, out)
    except CacheCorrupted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="conformal-systems", description=__doc__.splitlines()[0], allow_abbrev=False)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        # --s would otherwise be accepted as an abbreviation of --sign-seed
        sp.allow_abbrev = False
        sp.add_argument("--type", required=True, help="algebra label, e.g. A2, D4, E6")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--cache", type=Path, help=f"structure-constant cache file (default dir: ${CACHE_ENV})")
        sp.add_argument("--sign-seed", type=int, default=None, help="seed for extraspecial signs (default: all +1)")
        return sp

    common(sub.add_parser("build", help="construct the algebra and print grading data"))
    sv = common(sub.add_parser("special-values", help="solve for (s, t) on every V- component"))
    sv.add_argument("--audit", action="store_true", help="cross-check s with pairwise resultants")
    v = common(sub.add_parser("verify", help="check n-annihilation at given (s, t)"))
    v.add_argument("--s", required=True, type=Fraction)
    v.add_argument("--t", required=True, type=Fraction)
    common(sub.add_parser("omega2-check", help="special values of the second-order systems"))
    ne = common(sub.add_parser("nonexist", help="assert that no component admits a solution"))
    ne.add_argument("--audit", action="store_true")
    st = common(sub.add_parser("selftest", help="run the property batteries"))
    st.add_argument("--seed", type=int, default=DEFAULT_SEED)
    st.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        algebra = AlgebraType.parse(args.type)
    except UnsupportedAlgebra as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    cfg = RunConfig(
        algebra=algebra,
        command=args.command,
        s=getattr(args, "s", None),
        t=getattr(args, "t", None),
        output_format=args.format,
        cache_path=args.cache,
        sign_seed=args.sign_seed,
        audit=getattr(args, "audit", False),
        seed=getattr(args, "seed", DEFAULT_SEED),
        samples=getattr(args, "samples", DEFAULT_SAMPLES),
    )
    try:
        return run(cfg)
    except ConformalSystemsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
