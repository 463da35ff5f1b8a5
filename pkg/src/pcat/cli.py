"""Command-line surface for the partition category toolkit.

Every verb is deterministic given its flags and the cache state. Text and
JSON output carry the same result; --json switches the encoding. Exit codes:
0 success, 2 input error, 3 resource or budget exhaustion (including a
closure that did not saturate).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from pcat.partition import (InputError, Partition, all_partitions,
                            parse_word, word_to_text)
from pcat.catalog import named_partition
from pcat.category import (CategoryTruncation, closure, single_leg_version,
                           UNKNOWN)
from pcat.words import Oracle, category_of_subgroup_member, word_of_partition
from pcat.tensors import (ResourceLimitError, intertwines, t_map,
                          hyperoct_relations_check, parse_model,
                          word_projection_check)

_PARAM_KEY = {"h": "s", "k": "l"}


def resolve_partition(text):
    """A partition spec is a mnemonic (pair, cross, h:s=3, ...), the text
    format k;l;b1,...,bn, or a word over a-z for a one-row diagram."""
    t = text.strip()
    if ";" in t:
        return Partition.from_text(t)
    if ":" in t:
        name, _, arg = t.partition(":")
        key, eq, val = arg.partition("=")
        if name not in _PARAM_KEY:
            raise InputError(f"unknown parametric name {name!r}")
        if not eq or key != _PARAM_KEY[name]:
            raise InputError(
                f"{name} takes {_PARAM_KEY[name]}=<int>, got {arg!r}")
        try:
            return named_partition(name, int(val))
        except ValueError:
            raise InputError(f"bad parameter in {text!r}") from None
    try:
        return named_partition(t)
    except InputError:
        pass
    try:
        return Partition.from_word(parse_word(t))
    except InputError:
        raise InputError(
            f"cannot read {text!r} as a mnemonic, a k;l;blocks text, "
            f"or a word") from None


def _resolve_generators(specs):
    gens = []
    for spec in specs:
        # commas separate specs unless the value is a single text format,
        # which carries its own commas
        parts = [spec] if ";" in spec else [s for s in spec.split(",") if s]
        for part in parts:
            gens.append(resolve_partition(part))
    if not gens:
        raise InputError("no generators given")
    return gens


def _cache_path(path):
    if path is None:
        return None
    base = os.environ.get("PCAT_CACHE_DIR")
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _truncation(gens, max_points, slack, budget, cache):
    path = _cache_path(cache)
    if path and os.path.exists(path):
        trunc = CategoryTruncation.load(path)
        same = (set(g.text() for g in trunc.generators)
                == set(g.text() for g in gens)
                and trunc.max_points == max_points and trunc.slack == slack)
        if not same:
            raise InputError(
                f"cache {path} was built with different parameters")
        if trunc.saturated:
            return trunc
        # a budget-truncated cache is worth recomputing, not trusting
    trunc = closure(gens, max_points, slack=slack, budget=budget)
    if path:
        parent = os.path.dirname(path)
        if parent:
            os.makedirs(parent, exist_ok=True)
        trunc.save(path)
    return trunc


def _member_verdict(trunc, p):
    """Library answers stay yes/unknown; the CLI turns unknown into no once
    the truncation is saturated, since nothing more could be derived."""
    ans = trunc.member(p)
    if ans == UNKNOWN and trunc.saturated:
        return "no"
    return ans


def _render_rows(p):
    k = p.upper_count
    return ([word_to_text((b,)) for b in p.blocks[:k]],
            [word_to_text((b,)) for b in p.blocks[k:]])


def _parse_assignment(text):
    out = {}
    for field in text.split(";"):
        if not field:
            continue
        letter, eq, val = field.partition("=")
        if not eq:
            raise InputError(f"bad assignment field {field!r}")
        block = parse_word(letter.strip())
        if len(block) != 1:
            raise InputError(f"assignment key must be one letter, got {letter!r}")
        try:
            i, j = (int(x) for x in val.split(","))
        except ValueError:
            raise InputError(f"assignment value must be i,j in {field!r}") from None
        out[block[0]] = (i, j)
    if not out:
        raise InputError("empty assignment")
    return out


# ---------------------------------------------------------------------------
# verb handlers; each returns (result dict, text lines, exit code)

def _do_render(args):
    p = resolve_partition(args.partition)
    upper, lower = _render_rows(p)
    lines = [p.text(),
             "upper: " + " ".join(upper),
             "lower: " + " ".join(lower)]
    return {"text": p.text(), "upper": upper, "lower": lower}, lines, 0


def _do_op(args):
    kind = args.kind
    operands = args.operands
    def need(n):
        if len(operands) != n:
            raise InputError(f"op {kind} takes {n} argument(s)")
    if kind == "tensor":
        need(2)
        r = resolve_partition(operands[0]).tensor(resolve_partition(operands[1]))
        return {"partition": r.text()}, [r.text()], 0
    if kind == "compose":
        need(2)
        res = resolve_partition(operands[0]).compose(resolve_partition(operands[1]))
        return ({"partition": res.partition.text(), "loops": res.loops},
                [res.partition.text(), f"loops={res.loops}"], 0)
    if kind == "involute":
        need(1)
        r = resolve_partition(operands[0]).involute()
        return {"partition": r.text()}, [r.text()], 0
    if kind == "rotate":
        need(3)
        r = resolve_partition(operands[0]).rotate(operands[1], operands[2])
        return {"partition": r.text()}, [r.text()], 0
    raise InputError(f"unknown op {kind!r}")


def _do_word(args):
    p = resolve_partition(args.partition)
    w = word_to_text(word_of_partition(p))
    return {"word": w}, [w], 0


def _do_singleleg(args):
    p = resolve_partition(args.partition)
    w = word_to_text(single_leg_version(p).to_word())
    return {"word": w}, [w], 0


def _do_closure(args):
    gens = _resolve_generators(args.gens)
    trunc = _truncation(gens, args.max_points, args.slack, args.budget,
                        args.cache)
    texts = sorted(p.text() for p in trunc.members)
    result = {"members": len(texts), "saturated": trunc.saturated,
              "max_points": trunc.max_points, "slack": trunc.slack}
    lines = [f"members={len(texts)}",
             f"saturated={'true' if trunc.saturated else 'false'}"]
    if args.list:
        result["partitions"] = texts
        lines.extend(texts)
    return result, lines, 0 if trunc.saturated else 3


def _do_member(args):
    gens = _resolve_generators(args.gens)
    p = resolve_partition(args.partition)
    trunc = _truncation(gens, args.max_points, args.slack, args.budget,
                        args.cache)
    result = {"closure": _member_verdict(trunc, p)}
    lines = [f"closure: {result['closure']}"]
    if args.oracle:
        oracle = Oracle.parse(args.oracle)
        result["oracle"] = category_of_subgroup_member(p, oracle)
        lines.append(f"oracle: {result['oracle']}")
    return result, lines, 0 if trunc.saturated else 3


def _do_sl(args):
    gens = _resolve_generators(args.gens)
    trunc = _truncation(gens, args.max_points, args.slack, args.budget,
                        args.cache)
    words = sorted((word_to_text(p.to_word()) for p in trunc.sl_subset()),
                   key=lambda w: (len(w), w))
    return ({"words": words, "saturated": trunc.saturated}, words,
            0 if trunc.saturated else 3)


def _do_tmap(args):
    p = resolve_partition(args.partition)
    m = t_map(p, args.dim)
    result = {"rows": m.rows, "cols": m.cols,
              "entries": [list(row) for row in m.entries]}
    return result, m.to_text().rstrip("\n").split("\n"), 0


def _do_intertwine(args):
    p = resolve_partition(args.partition)
    model = parse_model(args.model)
    ans = intertwines(p, model)
    return {"intertwines": ans}, ["true" if ans else "false"], 0


def _do_relcheck(args):
    model = parse_model(args.model)
    ok = hyperoct_relations_check(model)
    result = {"relations": ok}
    lines = [f"relations: {'true' if ok else 'false'}"]
    if args.partition is not None:
        if args.assign is None:
            raise InputError("projection check needs --assign")
        p = resolve_partition(args.partition)
        proj = word_projection_check(model, p, _parse_assignment(args.assign))
        result["projection"] = proj
        lines.append(f"projection: {'true' if proj else 'false'}")
    return result, lines, 0


def _do_bijection_test(args):
    gens = _resolve_generators(args.gens)
    oracle = Oracle.parse(args.oracle)
    trunc = _truncation(gens, args.max_points, args.slack, args.budget,
                        args.cache)
    checked = agree = 0
    disagreements = []
    for p in all_partitions(args.max_points):
        if p.upper_count != 0:
            continue
        if args.max_blocks is not None and p.block_count > args.max_blocks:
            continue
        checked += 1
        left = _member_verdict(trunc, p)
        right = category_of_subgroup_member(p, oracle)
        if left == right:
            agree += 1
        elif len(disagreements) < 10:
            disagreements.append(
                {"partition": p.text(), "closure": left, "oracle": right})
    result = {"checked": checked, "agree": agree,
              "disagree": checked - agree, "disagreements": disagreements}
    lines = [f"checked={checked} agree={agree} disagree={checked - agree}"]
    for d in disagreements:
        lines.append(f"{d['partition']} closure={d['closure']} "
                     f"oracle={d['oracle']}")
    return result, lines, 0 if trunc.saturated else 3


_HANDLERS = {
    "render": _do_render,
    "op": _do_op,
    "word": _do_word,
    "singleleg": _do_singleleg,
    "closure": _do_closure,
    "member": _do_member,
    "sl": _do_sl,
    "tmap": _do_tmap,
    "intertwine": _do_intertwine,
    "relcheck": _do_relcheck,
    "bijection-test": _do_bijection_test,
}


def _build_parser():
    shared = argparse.ArgumentParser(add_help=False)
    # the same flags exist on the root parser; SUPPRESS defaults here let a
    # post-verb occurrence override a pre-verb one in the single namespace
    for flags, kwargs in (
            (("--json",), dict(action="store_true")),
            (("--max-points",), dict(type=int, metavar="N")),
            (("--slack",), dict(type=int, metavar="D")),
            (("--budget",), dict(type=int, metavar="STEPS")),
            (("--cache",), dict(metavar="FILE"))):
        shared.add_argument(*flags, default=argparse.SUPPRESS, **kwargs)

    top = argparse.ArgumentParser(
        prog="pcat",
        description="categories of set partitions, their single-leg normal "
                    "forms, word oracles and exact intertwiner checks")
    top.add_argument("--json", action="store_true",
                     help="machine-readable output")
    top.add_argument("--max-points", type=int, default=6, metavar="N",
                     help="truncation size for closure-based verbs")
    top.add_argument("--slack", type=int, default=4, metavar="D",
                     help="scaffolding margin above the truncation size")
    top.add_argument("--budget", type=int, default=None, metavar="STEPS",
                     help="derivation step cap; exhausting it exits 3")
    top.add_argument("--cache", default=None, metavar="FILE",
                     help="closure cache file, resolved under PCAT_CACHE_DIR")
    sub = top.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("render", parents=[shared],
                       help="show a partition's rows")
    p.add_argument("partition")

    p = sub.add_parser("op", parents=[shared],
                       help="tensor, compose, involute or rotate")
    p.add_argument("kind", choices=("tensor", "compose", "involute", "rotate"))
    p.add_argument("operands", nargs="+",
                   help="partitions; rotate takes partition side direction")

    p = sub.add_parser("word", parents=[shared],
                       help="reduced word of a partition")
    p.add_argument("partition")

    p = sub.add_parser("singleleg", parents=[shared],
                       help="canonical word of the single-leg version")
    p.add_argument("partition")

    p = sub.add_parser("closure", parents=[shared],
                       help="generate a truncated category")
    p.add_argument("--gens", action="append", required=True, metavar="SPECS")
    p.add_argument("--list", action="store_true",
                   help="print every member")

    p = sub.add_parser("member", parents=[shared],
                       help="membership via closure and via an oracle")
    p.add_argument("--gens", action="append", required=True, metavar="SPECS")
    p.add_argument("-p", "--partition", required=True)
    p.add_argument("--oracle", metavar="SPEC")

    p = sub.add_parser("sl", parents=[shared],
                       help="single-leg members of a truncated category")
    p.add_argument("--gens", action="append", required=True, metavar="SPECS")

    p = sub.add_parser("tmap", parents=[shared],
                       help="the linear map of a partition")
    p.add_argument("partition")
    p.add_argument("-n", "--dim", type=int, default=2, metavar="N")

    p = sub.add_parser("intertwine", parents=[shared],
                       help="does a model's matrix intertwine along p")
    p.add_argument("partition")
    p.add_argument("--model", required=True, metavar="SPEC")

    p = sub.add_parser("relcheck", parents=[shared],
                       help="reflection relations, optionally a word projection")
    p.add_argument("--model", required=True, metavar="SPEC")
    p.add_argument("-p", "--partition")
    p.add_argument("--assign", metavar="a=i,j;b=i,j")

    p = sub.add_parser("bijection-test", parents=[shared],
                       help="compare closure and oracle membership on one-row "
                            "partitions")
    p.add_argument("--gens", action="append", required=True, metavar="SPECS")
    p.add_argument("--oracle", required=True, metavar="SPEC")
    p.add_argument("--max-blocks", type=int, default=None, metavar="B")

    return top


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        result, lines, code = _HANDLERS[args.verb](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(result, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
