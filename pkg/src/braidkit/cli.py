"""
Command-line front end.

Every subcommand takes ``-n/--strands`` and words in the braid word grammar as
single arguments. ``--json`` switches to machine output carrying
``"schema_version": "1"``; the schemas live in ``docs/schemas``.

Exit status: 0 on success, 1 on a domain error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Optional, Sequence

from . import artin, classification, combing, conjugacy, dehornoy, lattice, normal_form
from .words import (
    BraidError,
    BraidWord,
    WordSyntaxError,
    concat,
    exponent_sum,
    parse_word,
    permutation,
)

SCHEMA_VERSION = "1"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _word_text(w: BraidWord) -> str:
    return str(w)


class _Out:
    def __init__(self, args, stream):
        self.args = args
        self.stream = stream

    def emit(self, text: str, payload):
        if self.args.json:
            if isinstance(payload, dict) and "schema_version" in payload:
                doc = payload
            else:
                doc = {"schema_version": SCHEMA_VERSION, "command": self.args.command, "result": payload}
            self.stream.write(json.dumps(doc, sort_keys=True) + "\n")
        else:
            self.stream.write(text + "\n")


def _w(args, text: str) -> BraidWord:
    return parse_word(text, args.strands)


def cmd_nf(args, out):
    f = normal_form.normal_form(_w(args, args.word))
    out.emit(str(f), {"schema_version": SCHEMA_VERSION, **f.to_json()})


def cmd_eq(args, out):
    r = normal_form.equal(_w(args, args.a), _w(args, args.b))
    out.emit(str(r).lower(), r)


def cmd_gcd(args, out):
    g = lattice.gcd(_w(args, args.a), _w(args, args.b))
    out.emit(_word_text(g), list(g.letters))


def cmd_lcm(args, out):
    m = lattice.lcm(_w(args, args.a), _w(args, args.b))
    out.emit(_word_text(m), list(m.letters))


def cmd_divides(args, out):
    r = lattice.prefix_divides(_w(args, args.a), _w(args, args.b))
    out.emit(str(r).lower(), r)


def cmd_conj(args, out):
    c = conjugacy.are_conjugate(_w(args, args.x), _w(args, args.y), args.max_vertices)
    if c is None:
        out.emit("no", None)
    else:
        out.emit("yes\n" + _word_text(c), list(c.letters))


def cmd_sc(args, out):
    g = conjugacy.sliding_circuits(_w(args, args.x), args.max_vertices)
    lines = [f"{len(g.vertices)} vertices, {len(g.edges)} edges, base {g.base}"]
    lines += [f"{k}: {v}" for k, v in enumerate(g.vertices)]
    out.emit("\n".join(lines), {"schema_version": SCHEMA_VERSION, **g.to_json()})


def cmd_slide(args, out):
    z, c, period = conjugacy.slide_to_circuit(_w(args, args.x))
    text = f"{z}\nconjugator: {_word_text(c)}\nperiod: {period}"
    out.emit(text, {"element": z.to_json(), "conjugator": list(c.letters), "period": period})


def cmd_sign(args, out):
    s = dehornoy.sign(_w(args, args.word), args.fuel)
    out.emit(dehornoy.SIGN_SYMBOLS[s], dehornoy.SIGN_SYMBOLS[s])


def cmd_cmp(args, out):
    c = dehornoy.compare(_w(args, args.a), _w(args, args.b), args.fuel)
    sym = {1: "<", 0: "=", -1: ">"}[c]
    out.emit(sym, sym)


def cmd_perm(args, out):
    p = permutation(_w(args, args.word))
    out.emit(str(p), p.one_based())


def cmd_expsum(args, out):
    s = exponent_sum(_w(args, args.word))
    out.emit(str(s), s)


def cmd_periodic(args, out):
    r = classification.is_periodic(_w(args, args.word), args.max_vertices)
    if r is None:
        out.emit("no", None)
    else:
        out.emit(f"{r[0]} {r[1]}", {"base": r[0], "power": r[1]})


def cmd_central(args, out):
    r = classification.is_central(_w(args, args.word))
    out.emit("yes" if r else "no", r)


def cmd_comb(args, out):
    c = combing.comb(_w(args, args.word))
    text = "\n".join(f"rank {lv.rank}: {lv}" for lv in c.levels)
    out.emit(text, {"schema_version": SCHEMA_VERSION, **c.to_json()})


def cmd_rmstrand(args, out):
    w = combing.remove_last_strand(_w(args, args.word))
    out.emit(_word_text(w), list(w.letters))


def cmd_artin_act(args, out):
    beta = _w(args, args.braid)
    img = artin.act(beta, artin.parse_free_word(args.free, args.strands))
    out.emit(str(img), list(img.letters))


def cmd_is_braid_aut(args, out):
    if len(args.images) != args.strands:
        raise UsageError(f"expected {args.strands} images, got {len(args.images)}")
    images = [artin.parse_free_word(t, args.strands) for t in args.images]
    r = artin.is_braid_automorphism(images)
    out.emit(str(r).lower(), r)


def cmd_torsion_probe(args, out):
    x = _w(args, args.x)
    d = lattice.torsion_witness(x, args.k)
    fixed = normal_form.equal(concat(x, d), d)
    out.emit(f"{_word_text(d)}\nfixed: {str(fixed).lower()}", {"witness": list(d.letters), "fixed": fixed})


def cmd_centralizer(args, out):
    gens = conjugacy.centralizer_generators(_w(args, args.x), args.max_vertices)
    out.emit("\n".join(_word_text(g) for g in gens), [list(g.letters) for g in gens])


COMMANDS: dict[str, tuple[Callable, Sequence[str], str]] = {
    "nf": (cmd_nf, ["word"], "left normal form"),
    "eq": (cmd_eq, ["a", "b"], "decide braid equality"),
    "gcd": (cmd_gcd, ["a", "b"], "greatest common prefix"),
    "lcm": (cmd_lcm, ["a", "b"], "least common multiple"),
    "divides": (cmd_divides, ["a", "b"], "whether a is a prefix of b"),
    "conj": (cmd_conj, ["x", "y"], "conjugator c with c^-1 x c = y"),
    "sc": (cmd_sc, ["x"], "sliding circuit graph"),
    "slide": (cmd_slide, ["x"], "iterate cyclic sliding to a circuit"),
    "sign": (cmd_sign, ["word"], "Dehornoy sign (-, 0, +)"),
    "cmp": (cmd_cmp, ["a", "b"], "compare in the Dehornoy order"),
    "perm": (cmd_perm, ["word"], "induced permutation"),
    "expsum": (cmd_expsum, ["word"], "exponent sum"),
    "periodic": (cmd_periodic, ["word"], "periodicity test"),
    "central": (cmd_central, ["word"], "centrality test"),
    "comb": (cmd_comb, ["word"], "combing coordinates of a pure braid"),
    "rmstrand": (cmd_rmstrand, ["word"], "remove the last strand"),
    "artin-act": (cmd_artin_act, ["braid", "free"], "Artin action on a free word"),
    "is-braid-aut": (cmd_is_braid_aut, [], "Artin's criterion on generator images"),
    "torsion-probe": (cmd_torsion_probe, ["x"], "gcd of 1, x, ..., x^(k-1)"),
    "centralizer": (cmd_centralizer, ["x"], "centralizer elements from circuit loops"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="braidkit", description="Braid group computations.")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True
    for name, (_fn, positionals, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-n", "--strands", type=int, required=True)
        p.add_argument("--json", action="store_true")
        p.add_argument("--fuel", type=int, default=dehornoy.DEFAULT_FUEL)
        p.add_argument("--max-vertices", type=int, default=conjugacy.DEFAULT_MAX_VERTICES)
        for pos in positionals:
            p.add_argument(pos)
        if name == "is-braid-aut":
            p.add_argument("images", nargs="*")
        if name == "torsion-probe":
            p.add_argument("k", type=int)
    return parser


def run(argv: Sequence[str], stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        if args.strands < 1:
            raise UsageError("--strands must be >= 1")
        fn = COMMANDS[args.command][0]
        fn(args, _Out(args, stdout))
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        stderr.write("valid commands: " + ", ".join(COMMANDS) + "\n")
        return 2
    except WordSyntaxError as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    except (BraidError, ValueError) as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    return 0


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))
