"""Command-line front end. Exit codes: 0 ok, 1 domain error, 2 usage error."""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import bounds, coding, dyck, genfun, legit, lll, plane
from .ecrun import (EdgeGraph, RandomTape, VariableTapes, is_acyclic_coloring, ksat_instance,
                    project_record, random_ksat, reconstruct_acyclic, reconstruct_generic,
                    run_acyclic, run_generic, satisfies, tape_range)
from .errors import EcplanesError

OUTDIR_ENV = "ECPLANES_OUTDIR"


def _out_path(path):
    if path is None or os.path.isabs(path):
        return path
    base = os.environ.get(OUTDIR_ENV)
    return os.path.join(base, path) if base else path


def _write(path, text):
    path = _out_path(path)
    d = os.path.dirname(path)
    if d:
        os.makedirs(d, exist_ok=True)
    with open(path, "w") as fh:
        fh.write(text)


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _bigint(x):
    return x if abs(x) < 2 ** 53 else str(x)


# -- plane

def cmd_plane_build(a):
    p = plane.build_plane(a.q)
    rep = plane.verify_axioms(p) if a.verify else None
    if a.out:
        _write(a.out, plane.to_json(p) if a.out.endswith(".json") else plane.to_csv(p))
    msg = f"{p.num_points} points, {p.num_lines} lines"
    _emit(a, {"order": p.order, "points": p.num_points, "lines": p.num_lines,
              "axioms": rep.to_dict() if rep else None}, msg)
    if rep and not rep.ok:
        print("axiom check failed", file=sys.stderr)
        return 1
    return 0


def _load_plane(path):
    with open(path) as fh:
        text = fh.read()
    return plane.from_json(text) if path.endswith(".json") else plane.from_csv(text)


def cmd_plane_verify(a):
    rep = plane.verify_axioms(_load_plane(a.file))
    lines = [f"{k}: {'pass' if v else 'FAIL'}" for k, v in
             (("axiom1", rep.axiom1), ("axiom2", rep.axiom2), ("axiom3", rep.axiom3), ("counts", rep.counts))]
    _emit(a, rep.to_dict(), "\n".join(lines))
    return 0 if rep.ok else 1


# -- legit

def cmd_legit_search(a):
    p = plane.build_plane(a.q)
    if a.method == "brute":
        res = legit.brute_force_search(p, a.c, a.budget)
    else:
        res = legit.randomized_search(p, a.c, a.seed, a.max_iters)
    if isinstance(res, legit.LegitColoring):
        cols = list(res.coloring.colors)
        _emit(a, {"found": True, "coloring": cols}, json.dumps(cols))
    else:
        _emit(a, {"found": False, "outcome": type(res).__name__}, type(res).__name__)
    return 0


def cmd_legit_badpairs(a):
    p = plane.build_plane(a.q)
    with open(a.coloring) as fh:
        cols = json.load(fh)
    pairs = legit.find_bad_pairs(p, legit.PointColoring(cols, a.c))
    _emit(a, {"bad_pairs": [list(x) for x in pairs]},
          "\n".join(["line_i,line_j"] + [f"{i},{j}" for i, j in pairs]))
    return 0


# -- bounds

def _cfg(a):
    return bounds.BoundsConfig.load(a.config) if getattr(a, "config", None) else bounds.DEFAULT


def cmd_bounds_region(a):
    cfg = _cfg(a)
    lo = cfg.exp_lo if a.lo is None else a.lo
    hi = cfg.exp_hi if a.hi is None else a.hi
    step = cfg.exp_step if a.step is None else a.step
    rows = bounds.region_scan(a.c_min, a.c_max, bounds.exponent_grid(lo, hi, step), cfg)
    text = bounds.region_csv(rows)
    if a.out:
        _write(a.out, text)
    if a.json:
        print(json.dumps(bounds.region_json(rows), sort_keys=True))
    elif not a.out:
        sys.stdout.write(text)
    return 0


def cmd_bounds_minorder(a):
    cfg = _cfg(a)
    e = bounds.min_feasible_exponent(a.c, a.lo, a.hi, cfg)
    _emit(a, {"c": a.c, "min_exponent": e}, f"{e:.4f}")
    return 0


def _n_arg(a):
    if a.n_exp is not None:
        return bounds.order_from_exponent(a.n_exp)
    if a.n is None:
        raise EcplanesError("give --n or --n-exp")
    return a.n


def _lr(x):
    return {"sign": x.sign, "lnmag": x.lnmag, "log10": x.lnmag / bounds.LN10 if x.sign else None}


def cmd_bounds_eval(a):
    q = a.quantity
    if q == "ec":
        v, m = bounds.ec_color_requirement(a.a, a.b)
        _emit(a, {"value": v, "m_bar": m}, f"{v:.12g} (m={m})")
        return 0
    if q in ("chernoff-upper", "chernoff-lower"):
        fn = bounds.chernoff_upper if q == "chernoff-upper" else bounds.chernoff_lower
        v = fn(a.np, a.dev)
        _emit(a, {"value": v}, f"{v:.12g}")
        return 0
    if q == "multinomial":
        v = bounds.multinomial_peak_prob(a.m, a.k, a.c)
        _emit(a, _lr(v), repr(v))
        return 0
    if q == "types":
        v = bounds.type_vectors_within(a.D, a.c)
        _emit(a, {"value": _bigint(v)}, str(v))
        return 0
    n = _n_arg(a)
    if q == "feasible":
        v = bounds.feasible(n, a.c, _cfg(a))
        payload = {"ok": v.ok, "route": v.route, "witness": list(v.witness) if v.witness else None,
                   "ec_requirement": v.ec_requirement, "log10_Pa_plus_Pb": v.log10_Pa_plus_Pb}
        _emit(a, payload, f"{'feasible' if v.ok else 'infeasible'} {payload['witness'] or ''}".strip())
        return 0
    fns = {
        "K": lambda: bounds.K_factor(n, a.d),
        "Pa": lambda: bounds.P_a_bound(n, a.d, a.a),
        "Pb": lambda: bounds.P_b_bound(n, a.d, a.b),
        "dangerous": lambda: bounds.dangerous_pair_bound(n),
        "triple": lambda: bounds.triple_bound(n),
        "five-star": lambda: bounds.five_star_bound(n),
    }
    v = fns[q]()
    _emit(a, _lr(v), repr(v))
    return 0


# -- lll

def cmd_lll_check(a):
    if a.mode == "symmetric":
        ok = lll.symmetric_check(a.p, a.delta)
        _emit(a, {"ok": ok}, "ok" if ok else "fails")
        return 0
    with open(a.graph) as fh:
        g = lll.DependencyGraph.from_json(fh.read())
    rep = lll.spencer_check(g) if a.mode == "spencer" else lll.cluster_check(g)
    _emit(a, rep.to_dict(), ("ok" if rep.ok else f"fails at {rep.failures}")
          + (f", lower bound {rep.lower_bound:.12g}" if rep.lower_bound is not None else ""))
    return 0


def cmd_lll_thresholds(a):
    t = lll.thresholds()
    _emit(a, t, "\n".join(f"{k},{v:.10f}" for k, v in t.items()))
    return 0


# -- dyck / genfun

def cmd_dyck_count(a):
    E = dyck.DescentSet.parse(a.E)
    v = dyck.count_words(a.t, a.r, E)
    _emit(a, {"t": a.t, "r": a.r, "E": str(E), "count": v}, str(v))
    return 0


def cmd_genfun_table31(a):
    rows = genfun.table_31()
    text = genfun.table_31_csv(rows)
    if a.out:
        _write(a.out, text)
    if a.json:
        print(json.dumps(rows, sort_keys=True))
    elif not a.out:
        sys.stdout.write(text)
    return 0


def cmd_genfun_coeffs(a):
    E = dyck.DescentSet.parse(a.E)
    cs = genfun.series_coefficients(E, a.N)
    _emit(a, [_bigint(c) for c in cs], json.dumps([_bigint(c) for c in cs]))
    return 0


def cmd_genfun_taugamma(a):
    E = dyck.DescentSet.parse(a.E)
    tg = genfun.solve_tau_gamma(E)
    _emit(a, {"E": str(E), "tau": tg.tau, "gamma": tg.gamma, "residual": tg.residual},
          f"tau={tg.tau:.10f} gamma={tg.gamma:.10f}")
    return 0


# -- entropy-compression runs

def _graph(a):
    if a.graph:
        with open(a.graph) as fh:
            d = json.load(fh)
        return EdgeGraph(d["n"], d["edges"])
    n = a.cycle
    return EdgeGraph(n, [(i, (i + 1) % n) for i in range(n)])


def cmd_ec_acyclic(a):
    g = _graph(a)
    D = g.max_degree
    K = a.K if a.K is not None else 4 * (D - 1)
    tape = RandomTape.uniform(a.seed, a.tape_length, max(1, tape_range(K, D)))
    out = run_acyclic(g, K, tape, a.max_steps)
    _, _, circ = project_record(out.record, delta=D)
    if a.dump:
        _write(a.dump, json.dumps(out.to_dict()))
    ok = out.success and is_acyclic_coloring(g, out.state)
    _emit(a, {"status": out.status, "steps": out.steps, "K": K, "coloring": out.state,
              "acyclic": ok, "R_circle": circ},
          f"{out.status} after {out.steps} steps, K={K}\n{json.dumps(out.state)}")
    return 0


def cmd_ec_sat(a):
    clauses = random_ksat(a.n, a.clauses, a.k, a.seed)
    inst = ksat_instance(a.n, clauses)
    tapes = VariableTapes.uniform(a.seed, inst.ranges, a.tape_length)
    out = run_generic(inst, tapes, a.max_steps)
    if a.dump:
        _write(a.dump, json.dumps(out.to_dict()))
    ok = out.success and satisfies(clauses, out.state)
    _emit(a, {"status": out.status, "steps": out.steps, "satisfied": ok, "assignment": out.state},
          f"{out.status} after {out.steps} steps\n{json.dumps(out.state)}")
    return 0


def cmd_ec_roundtrip(a):
    good = 0
    for t in range(a.trials):
        seed = a.seed + t
        if a.kind == "acyclic":
            n = a.cycle
            g = EdgeGraph(n, [(i, (i + 1) % n) for i in range(n)])
            K = a.K if a.K is not None else 4 * (g.max_degree - 1)
            tape = RandomTape.uniform(seed, a.tape_length, tape_range(K, g.max_degree))
            out = run_acyclic(g, K, tape, a.max_steps)
            good += reconstruct_acyclic(g, K, out.record, out.state) == tape.entries[:out.cursor]
        else:
            inst = ksat_instance(a.n, random_ksat(a.n, a.clauses, 3, seed))
            tapes = VariableTapes.uniform(seed, inst.ranges, a.tape_length)
            out = run_generic(inst, tapes, a.max_steps)
            want = [s[:c] for s, c in zip(tapes.streams, out.cursor)]
            good += reconstruct_generic(inst, out.record, out.state) == want
    _emit(a, {"trials": a.trials, "exact": good}, f"{good}/{a.trials} exact")
    return 0 if good == a.trials else 1


# -- coding

def cmd_coding_entropy(a):
    h = coding.entropy(a.p, a.base)
    payload = {"entropy": h}
    text = f"{h:.10g}"
    if a.q:
        d = coding.relative_entropy(a.p, a.q, a.base)
        payload["relative_entropy"] = d
        text += f"\n{d:.10g}"
    _emit(a, payload, text)
    return 0


def cmd_coding_kraft(a):
    s = coding.kraft_sum(a.lengths, a.D)
    _emit(a, {"sum": str(s), "ok": s <= 1}, str(s))
    return 0


def cmd_coding_code(a):
    if a.shannon:
        p = [float(Fraction(x)) for x in a.values]
        lengths = coding.shannon_lengths(p, a.D)
        keep = [l for l in lengths if l is not None]
    else:
        keep = [int(x) for x in a.values]
    code = coding.code_from_lengths(keep, a.D)
    _emit(a, json.loads(code.to_json()), " ".join(code.words))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON payload")
    P = argparse.ArgumentParser(prog="ecplanes", description=__doc__)
    sub = P.add_subparsers(dest="group", required=True)

    def group(name, help_):
        g = sub.add_parser(name, help=help_)
        return g.add_subparsers(dest="cmd", required=True)

    def cmd(grp, name, fn, help_=None):
        p = grp.add_parser(name, parents=[common], help=help_)
        p.set_defaults(fn=fn)
        return p

    g = group("plane", "projective planes")
    p = cmd(g, "build", cmd_plane_build)
    p.add_argument("q", type=int)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--out")
    p = cmd(g, "verify", cmd_plane_verify)
    p.add_argument("file")

    g = group("legit", "legitimate colorings")
    p = cmd(g, "search", cmd_legit_search)
    p.add_argument("q", type=int)
    p.add_argument("c", type=int)
    p.add_argument("--method", choices=["brute", "random"], default="brute")
    p.add_argument("--budget", type=int, default=legit.DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iters", type=int, default=10 ** 5)
    p = cmd(g, "bad-pairs", cmd_legit_badpairs)
    p.add_argument("q", type=int)
    p.add_argument("c", type=int)
    p.add_argument("coloring", help="JSON array of colors")

    g = group("bounds", "probability bounds and feasibility")
    p = cmd(g, "region", cmd_bounds_region)
    p.add_argument("--c-min", type=int, default=8)
    p.add_argument("--c-max", type=int, default=15)
    p.add_argument("--lo", type=float)
    p.add_argument("--hi", type=float)
    p.add_argument("--step", type=float)
    p.add_argument("--out")
    p.add_argument("--config")
    p = cmd(g, "min-order", cmd_bounds_minorder)
    p.add_argument("c", type=int)
    p.add_argument("--lo", type=float)
    p.add_argument("--hi", type=float)
    p.add_argument("--config")
    p = cmd(g, "eval", cmd_bounds_eval)
    p.add_argument("quantity", choices=["K", "Pa", "Pb", "ec", "feasible", "dangerous", "triple",
                                        "five-star", "chernoff-upper", "chernoff-lower",
                                        "multinomial", "types"])
    p.add_argument("--n", type=float)
    p.add_argument("--n-exp", type=float, help="decimal exponent of n")
    p.add_argument("--d", type=int, default=8)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--c", type=int, default=8)
    p.add_argument("--m", type=int, default=8)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--D", type=int, default=0)
    p.add_argument("--np", type=float, default=1.0)
    p.add_argument("--dev", type=float, default=1.0)
    p.add_argument("--config")

    g = group("lll", "local lemma criteria")
    p = cmd(g, "check", cmd_lll_check)
    p.add_argument("--mode", choices=["symmetric", "spencer", "cluster"], default="cluster")
    p.add_argument("--graph", help="DependencyGraph JSON")
    p.add_argument("--p", type=float, default=0.0)
    p.add_argument("--delta", type=int, default=0)
    cmd(g, "thresholds", cmd_lll_thresholds)

    g = group("dyck", "Dyck words")
    p = cmd(g, "count", cmd_dyck_count)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--E", default="all")

    g = group("genfun", "generating functions")
    p = cmd(g, "table31", cmd_genfun_table31)
    p.add_argument("--out")
    p = cmd(g, "coeffs", cmd_genfun_coeffs)
    p.add_argument("--E", default="all")
    p.add_argument("--N", type=int, default=10)
    p = cmd(g, "taugamma", cmd_genfun_taugamma)
    p.add_argument("--E", default="2N+4")

    g = group("ec", "entropy-compression runs")
    for name, fn in (("run-acyclic", cmd_ec_acyclic), ("run-sat", cmd_ec_sat), ("roundtrip", cmd_ec_roundtrip)):
        p = cmd(g, name, fn)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--tape-length", type=int, default=1000)
        p.add_argument("--max-steps", type=int)
        if name != "run-sat":
            p.add_argument("--cycle", type=int, default=6)
            p.add_argument("--K", type=int)
        if name == "run-acyclic":
            p.add_argument("--graph", help='JSON {"n": .., "edges": [[u, v], ...]}')
        if name != "run-acyclic":
            p.add_argument("--n", type=int, default=30)
            p.add_argument("--clauses", type=int, default=60)
        if name == "run-sat":
            p.add_argument("--k", type=int, default=3)
        if name != "roundtrip":
            p.add_argument("--dump", help="write the trace JSON here")
        else:
            p.add_argument("--kind", choices=["acyclic", "sat"], default="sat")
            p.add_argument("--trials", type=int, default=100)

    g = group("coding", "information theory")
    p = cmd(g, "entropy", cmd_coding_entropy)
    p.add_argument("p", type=float, nargs="+")
    p.add_argument("--q", type=float, nargs="+")
    p.add_argument("--base", type=float, default=2)
    p = cmd(g, "kraft", cmd_coding_kraft)
    p.add_argument("lengths", type=int, nargs="+")
    p.add_argument("--D", type=int, default=2)
    p = cmd(g, "code", cmd_coding_code)
    p.add_argument("values", nargs="+", help="lengths, or probabilities with --shannon")
    p.add_argument("--D", type=int, default=2)
    p.add_argument("--shannon", action="store_true")
    return P


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (EcplanesError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
