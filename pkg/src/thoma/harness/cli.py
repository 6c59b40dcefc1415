"""Command line entry point ``thoma``.

Parameter specs for ``--omega``:

* ``0`` for the Plancherel point,
* ``uniform:d`` for d equal letters 1/d,
* ``qt:q,t`` for ω_{q,t},
* ``alpha=2/3,1/3;beta=1/4`` or ``alpha=[2/3,1/3] beta=[] gamma=auto``, with
  either alphabet optionally ``geom(scale,ratio)`` (or ``geom:scale,ratio``).
"""
from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from contextlib import contextmanager
from fractions import Fraction

import numpy as np

from .. import hecke, measures
from ..shuffle_rsk import deck_shuffle, descents, recoils, rsk, sample_permutations
from ..specialization import ZERO, ThomaParameter, geometric, thoma
from . import experiments as ex
from .selftest import SUITES, run_all


def parse_number(text: str, exact: bool):
    v = Fraction(text.strip())
    return v if exact else float(v)


def parse_omega(spec: str, exact: bool = True) -> ThomaParameter:
    spec = spec.strip()
    if spec in ("0", "zero", "plancherel"):
        return ZERO
    if spec.startswith("uniform:"):
        d = int(spec.split(":", 1)[1])
        return thoma([Fraction(1, d)] * d, exact=exact)
    if spec.startswith("qt:"):
        q, t = (parse_number(x, exact) for x in spec[3:].split(","))
        return hecke.QtParams(q, t).omega
    parts = {"alpha": (), "beta": ()}
    gamma = None
    for key, val in re.findall(r"(\w+)\s*=\s*(geom[:(][^;)\s]*\)?|\[[^\]]*\]|[^;\s]*)", spec):
        key = {"a": "alpha", "b": "beta", "g": "gamma"}.get(key, key)
        if key == "gamma":
            gamma = None if val in ("", "auto") else Fraction(val)
            continue
        if key not in parts:
            raise ValueError(f"unknown alphabet {key!r} in {spec!r}")
        if val.startswith("geom"):
            s, r = (parse_number(x, exact) for x in val[5:].rstrip(")").split(","))
            parts[key] = geometric(s, r, exact)
        else:
            parts[key] = [parse_number(x, exact) for x in val.strip("[]").split(",") if x.strip()]
    omega = thoma(parts["alpha"], parts["beta"], exact=exact)
    if gamma is not None and abs(omega.gamma - gamma) > 1e-12:
        raise ValueError(f"gamma = {gamma} does not match 1 - Σα - Σβ = {omega.gamma}")
    return omega


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.replace(" ", ",").split(",") if x]


def _blocks(text: str) -> list:
    """``1/4x2,1/6x3`` -> [(1/4, 2), (1/6, 3)]."""
    out = []
    for item in text.split(","):
        p, _, d = item.partition("x")
        out.append((Fraction(p), int(d or 1)))
    return out


@contextmanager
def _output(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _header(fh, args) -> None:
    cfg = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "out")}
    fh.write("# config: " + json.dumps(cfg, sort_keys=True, default=str) + "\n")


def _emit_report(rep: ex.Report, args) -> int:
    rep.config = dict(rep.config, exact=args.exact)
    with _output(args.out) as fh:
        rep.to_csv(fh)
    if args.out not in (None, "-"):
        print(rep.summary())
    return 0 if rep.ok else 1


# ------------------------------------------------------------ subcommands

def cmd_exact_measure(args) -> int:
    omega = parse_omega(args.omega, args.exact)
    m = measures.q_measure(args.n, omega) if args.permutations else measures.p_measure(args.n, omega)
    with _output(args.out) as fh:
        _header(fh, args)
        m.to_csv(fh)
    return 0


def cmd_sample_shuffle(args) -> int:
    omega = parse_omega(args.omega, args.exact)
    rng = np.random.default_rng(np.random.SeedSequence(args.seed))
    if args.deck:
        perms = [deck_shuffle(args.n, omega, rng) for _ in range(args.samples)]
    else:
        perms = [tuple(int(x) for x in s) for s in sample_permutations(args.n, omega, args.samples, rng)]
    with _output(args.out) as fh:
        _header(fh, args)
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["sample", "permutation", "shape"])
        for i, s in enumerate(perms):
            w.writerow([i, " ".join(map(str, s)), ",".join(map(str, rsk(s).shape))])
    return 0


def cmd_rsk(args) -> int:
    text = args.word.strip()
    word = _ints(text) if ("," in text or " " in text) else [int(c) for c in text]
    out = rsk(word)
    with _output(args.out) as fh:
        _header(fh, args)
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["field", "value"])
        w.writerow(["shape", ",".join(map(str, out.shape))])
        w.writerow(["P", "/".join(" ".join(map(str, r)) for r in out.p.rows)])
        w.writerow(["Q", "/".join(" ".join(map(str, r)) for r in out.q.rows)])
        if sorted(word) == list(range(1, len(word) + 1)):
            w.writerow(["descents", ",".join(map(str, sorted(descents(word))))])
            w.writerow(["recoils", ",".join(map(str, sorted(recoils(word))))])
    return 0


def cmd_lln(args) -> int:
    omega = parse_omega(args.omega, args.exact)
    return _emit_report(ex.lln_experiment(omega, _ints(args.n_grid), args.samples, args.seed, args.workers,
                                          cycles=_ints(args.cycles), final_tol=args.final_tol), args)


def cmd_clt_char(args) -> int:
    omega = parse_omega(args.omega, args.exact)
    return _emit_report(ex.clt_char_experiment(omega, args.n, args.samples, args.seed, args.workers,
                                               cycles=_ints(args.cycles)), args)


def cmd_clt_rows(args) -> int:
    omega = parse_omega(args.omega, args.exact)
    return _emit_report(ex.clt_rows_experiment(omega, args.n, args.samples, args.seed, args.workers,
                                               rows=args.rows, cols=args.cols), args)


def cmd_bessel(args) -> int:
    return _emit_report(ex.bessel_experiment(args.n, args.samples, args.seed, args.workers), args)


def cmd_gue(args) -> int:
    return _emit_report(ex.gue_experiment(args.d, args.n, args.samples, args.seed, args.workers), args)


def cmd_mixed(args) -> int:
    return _emit_report(ex.mixed_experiment(_blocks(args.blocks), args.n, args.samples, args.seed,
                                            args.workers), args)


def cmd_markov_chain(args) -> int:
    omega = parse_omega(args.omega, args.exact)
    return _emit_report(ex.markov_chain_experiment(omega, args.n, args.samples, args.seed, args.workers), args)


def cmd_pitman_verify(args) -> int:
    from .selftest import pitman_rsk
    ok, detail = pitman_rsk(args.d_max, args.n_max, args.random_words, args.braid_trials, args.seed)
    with _output(args.out) as fh:
        _header(fh, args)
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["check", "verdict", "detail"])
        w.writerow(["pitman-rsk", "PASS" if ok else "FAIL", detail])
    return 0 if ok else 1


def cmd_qt(args) -> int:
    q = parse_number(args.q, args.exact)
    t = parse_number(args.t, args.exact)
    params = hecke.QtParams(q, t)
    pm = measures.p_measure(args.n, params.omega)
    res = hecke.qt_plancherel_residuals(args.n, params)
    with _output(args.out) as fh:
        _header(fh, args)
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["partition", "weight", "product_form", "residual"])
        for lam, p in pm.weights.items():
            w.writerow(["(" + ",".join(map(str, lam)) + ")", str(p),
                        str(hecke.qt_hook_content(lam, q, t)), str(res[lam])])
    return 0


def cmd_selftest(args) -> int:
    results = run_all(args.suite or None)
    with _output(args.out) as fh:
        _header(fh, args)
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["suite", "verdict", "detail"])
        for r in results:
            w.writerow([r.name, "PASS" if r.ok else "FAIL", r.detail])
    return 0 if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="thoma", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--seed", type=int, default=0, help="master seed (u64)")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", default=None, help="output CSV path (default: stdout)")
    ap.add_argument("--exact", action="store_true", help="exact rational arithmetic for parameters")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=fn)
        return p

    p = add("exact-measure", cmd_exact_measure, "exact P_{n,ω} (or Q_{n,ω} with --permutations)")
    p.add_argument("--omega", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--permutations", action="store_true")

    p = add("sample-shuffle", cmd_sample_shuffle, "sample ω-shuffles and their RSK shapes")
    p.add_argument("--omega", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--deck", action="store_true", help="literal deck simulation")

    p = add("rsk", cmd_rsk, "RSK insertion of a word")
    p.add_argument("word")

    p = add("lln", cmd_lln, "law of large numbers for characters and rows")
    p.add_argument("--omega", required=True)
    p.add_argument("--n-grid", required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--cycles", default="2")
    p.add_argument("--final-tol", type=float, default=None)

    p = add("clt-char", cmd_clt_char, "central limit theorem for characters")
    p.add_argument("--omega", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--cycles", default="2")

    p = add("clt-rows", cmd_clt_rows, "central limit theorem for rows and columns")
    p.add_argument("--omega", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--rows", type=int, default=None)
    p.add_argument("--cols", type=int, default=None)

    p = add("bessel", cmd_bessel, "2-shuffles against the Bessel-3 law")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)

    p = add("gue", cmd_gue, "uniform d-shuffles against the GUE chamber law")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)

    p = add("mixed", cmd_mixed, "block parameters p_1^{d_1}...p_r^{d_r}")
    p.add_argument("--blocks", required=True, help="e.g. 1/4x2,1/6x3")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)

    p = add("pitman-verify", cmd_pitman_verify, "G_d against Schensted, braid relations")
    p.add_argument("--d-max", type=int, default=3)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--random-words", type=int, default=10_000)
    p.add_argument("--braid-trials", type=int, default=10_000)

    p = add("markov-chain", cmd_markov_chain, "Young-graph chain against P_{n,ω}")
    p.add_argument("--omega", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=10_000)

    p = add("qt", cmd_qt, "(q,t)-Plancherel measure with both computation paths")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--t", required=True)

    p = add("selftest", cmd_selftest, "run every exact invariant suite")
    p.add_argument("--suite", action="append", choices=sorted(SUITES))
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
