"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
Charges are comma-separated; write ``--charge=-1,1`` when the first entry is
negative.  Multipartitions are given as JSON (``[[2,1],[1]]``) or as
components separated by ``|`` (``2,1|1``; an empty component is ∅).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

from . import fock
from .algebra import LaurentPoly
from .canonical import TransitionBlock, canonical_basis, dual_basis, verify_inversion
from .combinatorics import (
    Multipartition,
    format_multipartition,
    format_partition,
    multipartitions,
    partition,
    partitions,
)
from .crystal import crystal_component, to_dot
from .fock import FockVector
from .hecke_oracle import crosscheck_KL
from .indexing import sigma_s, to_l_pair, to_n_pair
from .wedge import straighten

__all__ = ["main", "RunConfig", "format_block"]


class UsageError(Exception):
    """Malformed flag value; reported with exit status 2."""


@dataclass(frozen=True)
class RunConfig:
    n: int
    l: int
    charge: tuple[int, ...]
    size: int
    basis: str = "plus"
    fmt: str = "text"
    var: str | None = None
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.n < 1 or self.l < 1:
            raise UsageError("--n and --l must be positive")
        if len(self.charge) != self.l:
            raise UsageError(f"--charge has {len(self.charge)} entries, expected l = {self.l}")
        if self.size < 0:
            raise UsageError("--size must be non-negative")

    @property
    def display_var(self) -> str:
        if self.var:
            return self.var
        return "p" if self.basis == "minus" else "q"


# -- parsing helpers ------------------------------------------------------------------


def _ints(text: str, flag: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"{flag}: expected comma-separated integers, got {text!r}") from None


def _multipartition(text: str, flag: str) -> Multipartition:
    try:
        if text.strip().startswith("["):
            return tuple(partition(c) for c in json.loads(text))
        return tuple(partition(_ints(c, flag)) for c in text.split("|"))
    except (ValueError, TypeError) as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _state(args: argparse.Namespace) -> FockVector:
    if args.state:
        text = args.state
        if text.startswith("@"):
            with open(text[1:], encoding="utf-8") as fh:
                text = fh.read()
        try:
            return FockVector.from_json(json.loads(text))
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"--state: {exc}") from None
    if args.n is None or args.charge is None or args.mp is None:
        raise UsageError("give --state, or --n with --charge and --mp")
    charge = _ints(args.charge, "--charge")
    mp = _multipartition(args.mp, "--mp")
    if len(mp) != len(charge):
        raise UsageError("--mp and --charge must have the same number of components")
    return fock.basis_l(mp, charge, args.n)


def _emit_vector(v: FockVector, fmt: str, var: str) -> None:
    if fmt == "json":
        print(json.dumps(v.to_json()))
    else:
        print(v.format("l", var))


# -- tables ---------------------------------------------------------------------------


def format_block(block: TransitionBlock, var: str) -> str:
    """One weight block as text: header, then 'star partition | multipartition | entries'."""
    labels = [("* " if r.star else "") + format_partition(r.partition) for r in block.rows]
    mps = [format_multipartition(r.multipartition) for r in block.rows]
    cells = [
        [
            "·" if e.is_zero() else (e.express_in_p() if var == "p" else e).format(var).replace(" ", "")
            for e in row
        ]
        for row in block.entries
    ]
    w0 = max(len(x) for x in labels)
    w1 = max(len(x) for x in mps)
    widths = [max(len(cells[i][j]) for i in range(block.size)) for j in range(block.size)]
    lines = [f"wt = {block.label()}"]
    for i in range(block.size):
        entries = "  ".join(cells[i][j].ljust(widths[j]) for j in range(block.size)).rstrip()
        lines.append(f"{labels[i].ljust(w0)} | {mps[i].ljust(w1)} | {entries}")
    return "\n".join(lines)


def _cmd_canon(args: argparse.Namespace) -> int:
    cfg = RunConfig(args.n, args.l, _ints(args.charge, "--charge"), args.size, args.basis, args.format, args.var, args.jobs)
    sign = "plus" if cfg.basis == "star" else cfg.basis
    blocks = canonical_basis(cfg.n, cfg.l, cfg.charge, cfg.size, sign, jobs=cfg.jobs, check_positivity=args.check_positivity)
    if cfg.basis == "star":
        blocks = [dual_basis(b) for b in blocks]
    if cfg.fmt == "json":
        params = {"n": cfg.n, "l": cfg.l, "charge": list(cfg.charge), "size": cfg.size, "basis": cfg.basis, "var": "q"}
        print(json.dumps({"params": params, "blocks": [b.to_json() for b in blocks]}))
    else:
        print("\n\n".join(format_block(b, cfg.display_var) for b in blocks))
    return 0


def _cmd_bar(args: argparse.Namespace) -> int:
    _emit_vector(fock.bar(_state(args)), args.format, args.var)
    return 0


def _operator(op: str) -> Callable[[FockVector], FockVector]:
    simple = {"bar": fock.bar, "prime": fock.prime, "d": fock.d_op, "ddot": fock.ddot_op}
    if op in simple:
        return simple[op]
    if ":" in op:
        name, _, num = op.partition(":")
        try:
            m = int(num)
        except ValueError:
            raise UsageError(f"--op: bad index in {op!r}") from None
        if name == "b":
            if m == 0:
                raise UsageError("--op: boson index must be nonzero")
            return lambda v: fock.boson(m, v)
        if name in ("E", "H", "Et", "Ht"):
            return lambda v: fock.symmetric_op(name, m, v)
        raise UsageError(f"--op: unknown operator {op!r}")
    for prefix, fn in (
        ("bdot-f", fock.fdot_op),
        ("bdot-e", fock.edot_op),
        ("fdot", fock.fdot_op),
        ("edot", fock.edot_op),
        ("tdot", fock.tdot_op),
        ("f", fock.f_op),
        ("e", fock.e_op),
        ("t", fock.t_op),
    ):
        if op.startswith(prefix) and op[len(prefix) :].isdigit():
            i = int(op[len(prefix) :])
            return lambda v, fn=fn, i=i: fn(i, v)
    raise UsageError(f"--op: unknown operator {op!r}")


def _cmd_act(args: argparse.Namespace) -> int:
    op = _operator(args.op)
    _emit_vector(op(_state(args)), args.format, args.var)
    return 0


def _cmd_straighten(args: argparse.Namespace) -> int:
    res = straighten(_ints(args.wedge, "--wedge"), args.n, args.l)
    if args.format == "json":
        print(json.dumps([{"wedge": list(k), "coeff": c.to_json()} for k, c in sorted(res.items(), reverse=True)]))
    elif not res:
        print("0")
    else:
        for k, c in sorted(res.items(), reverse=True):
            print(f"({c.format()}) u{list(k)}")
    return 0


def _cmd_index(args: argparse.Namespace) -> int:
    lam = partition(_ints(args.partition.strip().strip("[]"), "--partition"))
    lp = to_l_pair(lam, args.s, args.n, args.l)
    np_ = to_n_pair(lam, args.s, args.n, args.l)
    sig = sigma_s(lam, args.s, args.n, args.l)
    if args.format == "json":
        out = {
            "partition": list(lam),
            "s": args.s,
            "l_pair": {"multipartition": [list(c) for c in lp[0]], "charge": list(lp[1])},
            "n_pair": {"multipartition": [list(c) for c in np_[0]], "charge": list(np_[1])},
            "sigma": list(sig),
        }
        print(json.dumps(out))
    else:
        print(f"partition: {format_partition(lam)}, s = {args.s}")
        print(f"l-pair:    {format_multipartition(lp[0])}, {list(lp[1])}")
        print(f"n-pair:    {format_multipartition(np_[0])}, {list(np_[1])}")
        print(f"sigma:     {format_partition(sig)}")
    return 0


def _cmd_crystal(args: argparse.Namespace) -> int:
    cfg = RunConfig(args.n, args.l, _ints(args.charge, "--charge"), args.max_size)
    members, arrows = crystal_component(cfg.n, cfg.l, cfg.charge, cfg.size)
    if args.dot:
        text = to_dot(members, arrows)
        if args.dot == "-":
            sys.stdout.write(text)
            return 0
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(text)
    for mp in sorted(members, key=lambda m: (sum(map(sum, m)), m)):
        print(f"{sum(map(sum, mp))}  {format_multipartition(mp)}")
    return 0


# -- verify ---------------------------------------------------------------------------


def _report(ok: bool, message: str) -> int:
    print(("OK: " if ok else "FAIL: ") + message)
    return 0 if ok else 1


def _verify_inversion(args: argparse.Namespace) -> int:
    cfg = RunConfig(args.n, args.l, _ints(args.charge, "--charge"), args.size)
    rep = verify_inversion(cfg.n, cfg.l, cfg.charge, cfg.size)
    return _report(rep.ok, rep.message)


def _verify_kl(args: argparse.Namespace) -> int:
    cfg = RunConfig(args.n, args.l, _ints(args.charge, "--charge"), args.size)
    rank = args.rank if args.rank is not None else cfg.size + 2
    if rank < 2:
        raise UsageError("--rank must be at least 2")
    rep = crosscheck_KL(cfg.n, cfg.l, cfg.charge, cfg.size, rank)
    return _report(rep.ok, rep.message)


def _verify_gamma(args: argparse.Namespace) -> int:
    if args.m <= 0:
        raise UsageError("--m must be positive")
    vac = fock.basis((), args.s, args.n, args.l)
    lhs = fock.boson(args.m, fock.boson(-args.m, vac)) - fock.boson(-args.m, fock.boson(args.m, vac))
    expect = vac * fock.gamma_m(args.m, args.n, args.l)
    return _report(lhs == expect, f"[B_{args.m}, B_-{args.m}]|{args.s}> = {lhs.coeff(()).format()}, γ = {fock.gamma_m(args.m, args.n, args.l).format()}")


def _commutator_checks(n: int, l: int) -> list[tuple[str, Callable[[FockVector], FockVector], Callable[[FockVector], FockVector]]]:
    ops: list[tuple[str, Callable[[FockVector], FockVector]]] = []
    for i in range(n):
        ops.append((f"f{i}", lambda v, i=i: fock.f_op(i, v)))
        ops.append((f"e{i}", lambda v, i=i: fock.e_op(i, v)))
    dots: list[tuple[str, Callable[[FockVector], FockVector]]] = []
    for j in range(l):
        dots.append((f"fdot{j}", lambda v, j=j: fock.fdot_op(j, v)))
        dots.append((f"edot{j}", lambda v, j=j: fock.edot_op(j, v)))
    bosons = [(f"B{m}", lambda v, m=m: fock.boson(m, v)) for m in (-2, -1, 1, 2)]
    pairs = []
    for a_name, a in ops:
        for b_name, b in dots + bosons:
            pairs.append((f"[{a_name},{b_name}]", a, b))
    for a_name, a in dots:
        for b_name, b in bosons:
            pairs.append((f"[{a_name},{b_name}]", a, b))
    return pairs


def _verify_commute(args: argparse.Namespace) -> int:
    if args.size < 0:
        raise UsageError("--size must be non-negative")
    checked = 0
    for name, a, b in _commutator_checks(args.n, args.l):
        for k in range(args.size + 1):
            for lam in partitions(k):
                v = fock.basis(lam, args.s, args.n, args.l)
                checked += 1
                if a(b(v)) != b(a(v)):
                    return _report(False, f"{name} does not vanish on |{list(lam)},{args.s}>")
    return _report(True, f"{checked} commutators vanish")


def _verify_dominant(args: argparse.Namespace) -> int:
    charge = _ints(args.charge, "--charge")
    mp = _multipartition(args.mp, "--mp")
    if len(mp) != len(charge):
        raise UsageError("--mp and --charge must have the same number of components")
    if args.m <= 0:
        raise UsageError("--m must be positive")
    if args.side == "l":
        v = fock.basis_l(mp, charge, args.n)
        if len(charge) != args.l:
            raise UsageError("--charge must have l entries on the l-side")
        scale = args.n
    else:
        v = fock.basis_n(mp, charge, args.l)
        if len(charge) != args.n:
            raise UsageError("--charge must have n entries on the n-side")
        scale = args.l
    dominant = fock.is_dominant(mp, charge, scale * args.m)
    failures = []
    if fock.boson(-args.m, v) != fock.boson_split(-args.m, v, args.side):
        failures.append(f"B_-{args.m}")
    if fock.boson(args.m, v) != fock.boson_split(args.m, v, args.side):
        failures.append(f"B_{args.m}")
    for kind in ("Et", "Ht", "E", "H"):
        if fock.symmetric_op(kind, args.m, v) != fock.symmetric_split(kind, args.m, v, args.side):
            failures.append(f"{kind}_{args.m}")
    status = f"{scale * args.m}-dominant: {dominant}"
    if failures:
        return _report(False, f"split fails for {', '.join(failures)} ({status})")
    return _report(True, f"all splits hold ({status})")


# -- parser -----------------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    jobs_default = int(os.environ.get("QFOCK_JOBS", "1") or 1)
    p = argparse.ArgumentParser(prog="qfock", description="Canonical bases of q-deformed higher-level Fock spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    def nl(sp: argparse.ArgumentParser, need_charge: bool = True) -> None:
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--l", type=int, required=True)
        if need_charge:
            sp.add_argument("--charge", required=True, help="comma-separated, e.g. --charge=1,-1")

    c = sub.add_parser("canon", help="transition matrices of G+, G- or G*")
    nl(c)
    c.add_argument("--size", type=int, required=True)
    c.add_argument("--basis", choices=["plus", "minus", "star"], default="plus")
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.add_argument("--var", choices=["q", "p"], default=None, help="display variable (default p for minus)")
    c.add_argument("--jobs", type=int, default=jobs_default, help="worker processes (env QFOCK_JOBS)")
    c.add_argument("--check-positivity", action="store_true", help="warn on entries outside N[q] (N[p])")
    c.set_defaults(func=_cmd_canon)

    def state(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--state", help="FockVector JSON, or @file")
        sp.add_argument("--n", type=int)
        sp.add_argument("--charge", help="with --mp: build the basis vector |mp, charge>")
        sp.add_argument("--mp", help="multipartition, e.g. '[[1],[]]' or '1|'")
        sp.add_argument("--format", choices=["text", "json"], default="text")
        sp.add_argument("--var", choices=["q", "p"], default="q")

    b = sub.add_parser("bar", help="apply the bar involution to a vector")
    state(b)
    b.set_defaults(func=_cmd_bar)

    a = sub.add_parser("act", help="apply an operator: f0, e1, t0, fdot0, edot1, bdot-f0, b:-2, E:2, Ht:1, bar, prime")
    a.add_argument("--op", required=True)
    state(a)
    a.set_defaults(func=_cmd_act)

    s = sub.add_parser("straighten", help="normal form of a finite wedge")
    nl(s, need_charge=False)
    s.add_argument("--wedge", required=True, help="comma-separated indices, e.g. --wedge=0,1")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=_cmd_straighten)

    i = sub.add_parser("index", help="l-pair, n-pair and sigma of a charged partition")
    nl(i, need_charge=False)
    i.add_argument("--partition", "--lambda", dest="partition", required=True, help="e.g. 5,2 or [5,2]")
    i.add_argument("--s", type=int, default=0)
    i.add_argument("--format", choices=["text", "json"], default="json")
    i.set_defaults(func=_cmd_index)

    cr = sub.add_parser("crystal", help="connected component of the empty multipartition")
    nl(cr)
    cr.add_argument("--max-size", type=int, required=True)
    cr.add_argument("--dot", help="write a DOT digraph to this file ('-' for stdout)")
    cr.set_defaults(func=_cmd_crystal)

    v = sub.add_parser("verify", help="run a verification")
    vs = v.add_subparsers(dest="check", required=True)
    vi = vs.add_parser("inversion")
    nl(vi)
    vi.add_argument("--size", type=int, required=True)
    vi.set_defaults(func=_verify_inversion)
    vk = vs.add_parser("kl")
    nl(vk)
    vk.add_argument("--size", type=int, required=True)
    vk.add_argument("--rank", type=int, default=None, help="wedge length r (default size + 2)")
    vk.set_defaults(func=_verify_kl)
    vg = vs.add_parser("gamma")
    nl(vg, need_charge=False)
    vg.add_argument("--m", type=int, required=True)
    vg.add_argument("--s", type=int, default=0)
    vg.set_defaults(func=_verify_gamma)
    vc = vs.add_parser("commute")
    nl(vc, need_charge=False)
    vc.add_argument("--s", type=int, default=0)
    vc.add_argument("--size", type=int, default=2)
    vc.set_defaults(func=_verify_commute)
    vd = vs.add_parser("dominant")
    nl(vd)
    vd.add_argument("--mp", required=True)
    vd.add_argument("--m", type=int, required=True)
    vd.add_argument("--side", choices=["l", "n"], default="l")
    vd.set_defaults(func=_verify_dominant)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors (and --help) this way
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"qfock: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"qfock: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
