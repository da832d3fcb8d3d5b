"""Command-line front end.

Exit codes: 0 success, 1 a check ran and failed, 2 bad input, 3 numerical
failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .braid import check_braid_relation, check_yang_baxter, local_dim
from .entanglers import (HULL_TOL, classify, hull_distance, m_eigenvalues,
                         max_min_basis_search)
from .epower import (entangling_power_closed_form, entangling_power_mc,
                     entangling_power_quadrature)
from .gates import GATE_NAMES, catalog_gate, invariants
from .linalg import NumericalFailure, is_unitary
from .matrixio import read_matrix, read_state, write_matrix
from .states import BASES, STATE_NAMES, catalog_state, concurrence, measure_qubit

FILE_UNITARY_TOL = 1e-8

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_NUMERICAL = 0, 1, 2, 3


class InputError(Exception):
    pass


def _parse_params(text):
    if not text:
        return ()
    try:
        return tuple(complex(p.strip().replace("i", "j")) for p in text.split(","))
    except ValueError as exc:
        raise InputError(f"cannot parse --params {text!r}") from exc


def _real_params(params):
    return tuple(p.real if p.imag == 0 else p for p in params)


def _clean(x: float) -> float:
    return float(x) + 0.0


def _cx(z) -> list[float]:
    z = complex(z)
    return [_clean(z.real), _clean(z.imag)]


class _Formatter:
    def __init__(self, digits):
        self.digits = digits

    def cx(self, z) -> str:
        z = complex(z)
        d = self.digits
        return f"{_clean(z.real):.{d}g}{_clean(z.imag):+.{d}g}i"

    def real(self, x) -> str:
        return f"{_clean(x):.{self.digits}g}"


def _load_gate(args, square_only=True):
    """Resolve --gate/--params or --file into (label, matrix)."""
    if bool(args.gate) == bool(args.file):
        raise InputError("give exactly one of --gate or --file")
    if args.gate:
        try:
            g = catalog_gate(args.gate, _real_params(_parse_params(args.params)))
        except (KeyError, ValueError) as exc:
            raise InputError(str(exc).strip("'\"")) from exc
        return {"gate": g.name, "params": [_cx(p) for p in g.params]}, g.matrix
    try:
        m = read_matrix(args.file)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {args.file}: {exc}") from exc
    if square_only and m.shape != (4, 4):
        raise InputError(f"expected a 4x4 gate, got dim {m.shape[0]}")
    if not is_unitary(m, FILE_UNITARY_TOL):
        raise InputError(f"matrix in {args.file} is not unitary within {FILE_UNITARY_TOL}")
    return {"file": args.file}, m


def _report(command, inputs, results, tolerances, seeds=None):
    return {"command": command, "inputs": inputs, "results": results,
            "tolerances": tolerances, "seeds": seeds or {}, "version": __version__}


def cmd_invariants(args, fmt):
    inputs, m = _load_gate(args)
    g = invariants(m)
    eig = sorted(m_eigenvalues(m), key=lambda z: (round(np.angle(z), 9), z.real))
    doc = _report("invariants", inputs,
                  {"g1": _cx(g.g1), "g2": _cx(g.g2), "m_eigenvalues": [_cx(z) for z in eig]},
                  {"unitarity": FILE_UNITARY_TOL, "eigen_residual": 1e-10})
    lines = [f"G1 = {fmt.cx(g.g1)}", f"G2 = {fmt.cx(g.g2)}",
             "m(U) eigenvalues: " + ", ".join(fmt.cx(z) for z in eig)]
    return doc, lines, EXIT_OK


def cmd_classify(args, fmt):
    inputs, m = _load_gate(args)
    tol = args.tol if args.tol is not None else HULL_TOL
    label = classify(m, tol)
    pts = m_eigenvalues(m)
    dist = hull_distance(pts)
    doc = _report("classify", inputs,
                  {"class": label.value, "hull_points": [_cx(z) for z in pts],
                   "hull_distance": _clean(dist)},
                  {"hull": tol, "local_invariants": tol})
    lines = [f"class: {label.value}",
             "hull points: " + ", ".join(fmt.cx(z) for z in pts),
             f"distance from origin to hull: {fmt.real(dist)} (tol {tol:g})"]
    return doc, lines, EXIT_OK


def cmd_epower(args, fmt):
    inputs, m = _load_gate(args)
    seeds = {}
    if args.method == "quad":
        n = args.nodes or 16
        est = entangling_power_quadrature(m, n, 2 * n)
        tol = {"quadrature_nodes": [n, 2 * n]}
    elif args.method == "mc":
        seeds = {"seed": args.seed}
        est = entangling_power_mc(m, args.samples, args.seed)
        tol = {"stderr": est.stderr}
    else:
        if not args.gate:
            raise InputError("no closed form for a matrix file; use --method quad")
        try:
            est = entangling_power_closed_form(args.gate, _parse_params(args.params))
        except KeyError as exc:
            raise InputError(str(exc).strip("'\"")) from exc
        tol = {"exact": 0.0}
    doc = _report("epower", inputs,
                  {"value": _clean(est.value), "method": est.method,
                   "stderr": est.stderr, "nodes_or_samples": est.nodes_or_samples},
                  tol, seeds)
    line = f"e_p = {fmt.real(est.value)} ({est.method}"
    line += f", stderr {fmt.real(est.stderr)})" if est.stderr is not None else ")"
    return doc, [line], EXIT_OK


def cmd_braid_check(args, fmt):
    inputs, m = _load_gate(args, square_only=False)
    try:
        local_dim(m)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    tol = args.tol if args.tol is not None else (1e-12 if args.gate else 1e-10)
    check = check_braid_relation if args.relation == "braid" else check_yang_baxter
    res = check(m, tol)
    doc = _report("braid-check", dict(inputs, relation=args.relation),
                  {"holds": bool(res.holds), "residual": _clean(res.residual)},
                  {"residual": tol})
    lines = [f"{args.relation} relation: {'pass' if res.holds else 'fail'}"
             f" (residual {fmt.real(res.residual)}, tol {tol:g})"]
    return doc, lines, EXIT_OK if res.holds else EXIT_CHECK_FAILED


def cmd_measure(args, fmt):
    if bool(args.state) == bool(args.state_file):
        raise InputError("give exactly one of --state or --state-file")
    try:
        if args.state:
            params = tuple(int(p.real) for p in _parse_params(args.params))
            s = catalog_state(args.state, *params)
            inputs = {"state": args.state.lower(), "params": list(params)}
        else:
            s = read_state(args.state_file)
            inputs = {"state_file": args.state_file}
        records = measure_qubit(s, args.qubit, BASES[args.basis])
    except (KeyError, ValueError, OSError) as exc:
        raise InputError(str(exc).strip("'\"")) from exc
    inputs.update(qubit=args.qubit, basis=args.basis)
    out, lines = [], []
    for r in records:
        item = {"outcome": r.outcome, "probability": _clean(r.probability),
                "possible": r.possible}
        line = f"outcome {r.outcome}: p = {fmt.real(r.probability)}"
        if r.possible:
            item["residual"] = [_cx(z) for z in r.residual.amplitudes]
            if r.residual.qubits == 2:
                c = concurrence(r.residual)
                item["residual_concurrence"] = _clean(c)
                line += f", residual C = {fmt.real(c)}"
        else:
            line += " (impossible)"
        out.append(item)
        lines.append(line)
    doc = _report("measure", inputs, {"records": out},
                  {"impossible_below": 1e-12, "basis_orthonormality": 1e-10})
    return doc, lines, EXIT_OK


def cmd_basis_search(args, fmt):
    inputs, m = _load_gate(args)
    res = max_min_basis_search(m, args.restarts, args.seed)
    doc = _report("basis-search", dict(inputs, restarts=args.restarts),
                  {"value": _clean(res.value), "basis_params": list(res.basis.params),
                   "best_restart": res.restart, "evaluations": res.evaluations},
                  {"simplex_xatol": 1e-8, "max_evaluations_per_restart": 2000},
                  {"seed": args.seed})
    lines = [f"best min-concurrence: {fmt.real(res.value)}",
             "basis angles: " + ", ".join(fmt.real(x) for x in res.basis.params)]
    return doc, lines, EXIT_OK


def cmd_catalog(args, fmt):
    doc = _report("catalog", {}, {"gates": list(GATE_NAMES), "states": list(STATE_NAMES)}, {})
    return doc, ["gates: " + ", ".join(GATE_NAMES), "states: " + ", ".join(STATE_NAMES)], EXIT_OK


def cmd_export(args, fmt):
    inputs, m = _load_gate(args, square_only=False)
    try:
        write_matrix(args.out, m)
    except OSError as exc:
        raise InputError(str(exc)) from exc
    doc = _report("export", inputs, {"path": args.out, "dim": m.shape[0]}, {})
    return doc, [f"wrote {args.out}"], EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="braident", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    common.add_argument("--digits", type=int, default=12, help="significant digits in text output")

    gate = argparse.ArgumentParser(add_help=False)
    gate.add_argument("--gate", help="catalog gate name")
    gate.add_argument("--params", help="comma-separated gate parameters (complex allowed, e.g. 1j)")
    gate.add_argument("--file", help="JSON matrix file")

    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("catalog", parents=[common], help="list catalog gates and states")
    sub.add_parser("invariants", parents=[common, gate], help="local invariants G1, G2")
    c = sub.add_parser("classify", parents=[common, gate], help="perfect-entangler classification")
    c.add_argument("--tol", type=float)
    e = sub.add_parser("epower", parents=[common, gate], help="entangling power")
    e.add_argument("--method", choices=("quad", "mc", "closed"), default="quad")
    e.add_argument("--nodes", type=int, help="Gauss-Legendre nodes per cos(theta); phi uses twice as many")
    e.add_argument("--samples", type=int, default=1_000_000)
    e.add_argument("--seed", type=int, default=42)
    b = sub.add_parser("braid-check", parents=[common, gate], help="braid or Yang-Baxter relation")
    b.add_argument("--relation", choices=("braid", "yang-baxter"), default="braid")
    b.add_argument("--tol", type=float)
    m = sub.add_parser("measure", parents=[common], help="measure one qubit of a state")
    m.add_argument("--state", help="catalog state name")
    m.add_argument("--params", help="integer state parameters, e.g. bell index")
    m.add_argument("--state-file", help="JSON state file")
    m.add_argument("--qubit", type=int, default=1, help="1-based qubit index")
    m.add_argument("--basis", choices=sorted(BASES), default="computational")
    s = sub.add_parser("basis-search", parents=[common, gate], help="max-min product basis search")
    s.add_argument("--restarts", type=int, default=50)
    s.add_argument("--seed", type=int, default=7)
    x = sub.add_parser("export", parents=[common, gate], help="write a gate as a JSON matrix file")
    x.add_argument("--out", required=True)
    return p


COMMANDS = {"catalog": cmd_catalog, "invariants": cmd_invariants, "classify": cmd_classify,
            "epower": cmd_epower, "braid-check": cmd_braid_check, "measure": cmd_measure,
            "basis-search": cmd_basis_search, "export": cmd_export}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    fmt = _Formatter(args.digits)
    try:
        doc, lines, code = COMMANDS[args.command](args, fmt)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NumericalFailure as exc:
        print(f"numerical failure: {exc}; residuals {exc.residuals}", file=sys.stderr)
        return EXIT_NUMERICAL
    if args.json:
        print(json.dumps(doc, sort_keys=True))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
