"""natlab: count, verify, biject, render and regression-check from the shell.

Every command prints one JSON document on stdout (``render --format ascii``
prints the picture itself).  Timing goes to stderr so that stdout is
byte-identical between runs.

Exit codes: 0 ok, 2 violation, 3 budget exceeded, 4 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from math import factorial

from . import complete_ids as ci
from . import polyomino as po
from . import rectangles as rc
from .core import (
    CodePair,
    LabeledBinaryTree,
    NonAmbiguousTree,
    all_trees,
    count_nats,
    decode,
    encode,
    enumerate_nats,
    underlying_tree,
)
from .errors import BudgetExceeded, NatlabError
from .hooks import na_count

EXIT_OK = 0
EXIT_VIOLATION = 2
EXIT_BUDGET = 3
EXIT_PARSE = 4

A136127 = (1, 2, 5, 16, 63, 294, 1585, 9692)
A002190 = (1, 1, 4, 33, 456, 9460)
CATALAN = (1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796)


class ParseError(Exception):
    pass


class Violation(Exception):
    def __init__(self, message: str, payload: dict | None = None):
        super().__init__(message)
        self.payload = payload or {}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


# ---------------------------------------------------------------------------
#  input helpers
# ---------------------------------------------------------------------------

def _load_json(source: str | None):
    if source is None:
        raise ParseError("this command needs --json FILE (or - for stdin)")
    try:
        if source == "-":
            return json.load(sys.stdin)
        with open(source, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read JSON from {source}: {exc}") from exc


def _params(args) -> dict:
    params = {}
    if args.params:
        try:
            params = json.loads(args.params)
        except json.JSONDecodeError as exc:
            raise ParseError(f"--params is not JSON: {exc}") from exc
        if not isinstance(params, dict):
            raise ParseError("--params must be a JSON object")
    for name in ("n", "k", "ell"):
        val = getattr(args, name, None)
        if val is not None:
            params[name] = val
    return params


def _need(params: dict, *names) -> list:
    out = []
    for name in names:
        if name not in params:
            raise ParseError(f"missing parameter {name!r}")
        val = params[name]
        if not isinstance(val, int) or isinstance(val, bool):
            raise ParseError(f"parameter {name!r} must be an integer")
        out.append(val)
    return out


def _check_budget(what: str, value: int, limit: int) -> None:
    if value > limit:
        raise BudgetExceeded(what, f"<= {limit}")


def _obj(kind: str, doc):
    """Parse a JSON document into a domain object (shape errors -> parse error)."""
    try:
        if kind == "nat":
            return NonAmbiguousTree.from_json(doc)
        if kind == "tree":
            return LabeledBinaryTree.from_json(doc)
        if kind == "codes":
            return CodePair.from_json(doc)
        if kind == "pp":
            return po.ParallelogramPolyomino.from_json(doc)
        if kind == "tlt":
            return rc.TreeLikeTableau.from_json(doc)
    except NatlabError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise ParseError(f"malformed {kind} document: {exc!r}") from exc
    raise ParseError(f"unknown object kind {kind}")


def _field(doc, key):
    if not isinstance(doc, dict) or key not in doc:
        raise ParseError(f"input document lacks {key!r}")
    return doc[key]


# ---------------------------------------------------------------------------
#  count
# ---------------------------------------------------------------------------

def _count_na_of_tree(tree: LabeledBinaryTree) -> int:
    return sum(1 for a in enumerate_nats(tree.size) if underlying_tree(a) == tree)


COUNT_BUDGETS = {"nat": 10, "nat-box": 9, "complete-nat": 5, "tlt-ell": 7,
                 "gridded": 5, "labeled": 8, "pp": 10, "na-of-tree": 9}


def cmd_count(args) -> dict:
    kind = args.kind
    params = _params(args)
    budget = args.budget if args.budget is not None else COUNT_BUDGETS[kind]
    closed = brute = None
    want_closed = args.method in ("closed-form", "both")
    want_brute = args.method in ("brute-force", "both")

    if kind == "nat":
        (n,) = _need(params, "n")
        if n < 1:
            raise ParseError("n must be positive")
        closed_fn = lambda: sum(na_count(t) for t in all_trees(n))
        brute_fn = lambda: count_nats(n)
        size = n
    elif kind == "nat-box":
        k, ell = _need(params, "k", "ell")
        if k < 1 or ell < 1:
            raise ParseError("k and ell must be positive")
        closed_fn = lambda: rc.count_box_closed(k, ell)
        brute_fn = lambda: rc.count_box_brute(k, ell, budget=budget)
        size = k + ell - 1
    elif kind == "complete-nat":
        (k,) = _need(params, "k")
        if k < 0:
            raise ParseError("k must be non-negative")
        closed_fn = lambda: ci.b_of(k)
        brute_fn = lambda: sum(1 for _ in ci.enumerate_complete_nats(k, budget=budget))
        size = k
    elif kind == "tlt-ell":
        n, ell = _need(params, "n", "ell")
        if n < 1 or ell < 1:
            raise ParseError("n and ell must be positive")
        closed_fn = lambda: n ** (ell - 1) * factorial(n)
        brute_fn = lambda: sum(1 for _ in rc.tlt_class(n, ell))
        size = n + ell - 1
    elif kind == "gridded":
        k, n = _need(params, "k", "n")
        if k < 0 or n < 1:
            raise ParseError("need k >= 0 and n >= 1")
        closed_fn = lambda: ci.gridded_count(k, n)
        brute_fn = lambda: sum(1 for _ in ci.enumerate_gridded(k, n, budget=budget))
        size = n
    elif kind == "labeled":
        k, ell = _need(params, "k", "ell")
        if k < 0 or ell < 0:
            raise ParseError("k and ell must be non-negative")
        closed_fn = lambda: ci.labeled_count(k, ell)
        brute_fn = lambda: sum(1 for _ in ci.enumerate_labeled(k, ell, budget=budget))
        size = k + ell
    elif kind == "pp":
        (n,) = _need(params, "n")
        if n < 1:
            raise ParseError("n must be positive")
        closed_fn = lambda: ci.catalan(n)
        brute_fn = lambda: sum(1 for _ in po.enumerate_pp(n, budget=budget))
        size = n
    else:  # na-of-tree
        tree = _obj("tree", _load_json(args.json))
        params = {"tree": tree.to_json()}
        closed_fn = lambda: na_count(tree)
        brute_fn = lambda: _count_na_of_tree(tree)
        size = tree.size

    if want_closed:
        if kind == "nat":  # the hook-formula sum still walks every tree
            _check_budget(f"count {kind}", size, budget)
        closed = closed_fn()
    if want_brute:
        _check_budget(f"count {kind}", size, budget)
        brute = brute_fn()
    payload = {"kind": kind, "params": params, "method": args.method}
    if closed is not None and brute is not None and closed != brute:
        payload.update({"closed_form": str(closed), "brute_force": str(brute)})
        raise Violation("closed form and brute force disagree", payload)
    payload["count"] = str(closed if closed is not None else brute)
    return payload


# ---------------------------------------------------------------------------
#  verify
# ---------------------------------------------------------------------------

def _v_fixed_box(m):
    for n in range(1, m + 1):
        for ell in range(1, 4):
            yield {"n": n, "ell": ell}, rc.check_fixed_box_identity(n, ell)


def _v_es(m):
    for total in range(1, m + 1):
        for k in range(1, total + 1):
            ell = total + 1 - k
            yield {"k": k, "ell": ell}, rc.count_box_closed(k, ell) == rc.count_box_brute(k, ell)


def _v_idii(m):
    for k in range(m + 1):
        census = sum(1 for _ in ci.enumerate_complete_nats(k))
        yield {"k": k, "census": census}, census == ci.b_of(k)


def _v_idiii(m):
    for n in range(1, m + 1):
        total = sum((-1) ** k * ci.gridded_count(k, n) for k in range(n))
        ok = total == 1
        if n <= 4:
            for k in range(n):
                for g in ci.enumerate_gridded(k, n):
                    if g.is_trivial():
                        continue
                    h = ci.gridded_involution(g)
                    ok = ok and abs(h.k - g.k) == 1 and ci.gridded_involution(h) == g
        yield {"n": n, "sum": total}, ok


def _v_id_catalan(m):
    for n in range(1, m + 1):
        total = sum((-1) ** (n + k) * ci.binom(n + k, n - k) * ci.catalan(k) for k in range(n + 1))
        ok = total == 0
        if n <= 6:
            for k in range(n + 1):
                for t in ci.enumerate_labeled(k, n - k):
                    u = ci.labeled_involution(t)
                    ok = ok and abs(u.k - t.k) == 1 and ci.labeled_involution(u) == t
        yield {"n": n, "sum": total}, ok


def _v_id_anac(m):
    for n in range(1, m + 1):
        yield {"n": n}, ci.check_id_anac(n)


def _v_bessel(m):
    for K in range(m + 1):
        yield {"K": K}, ci.bessel_log_check(K)


def _v_wz(m):
    yield {"i_max": m}, ci.wz_certificate_check(m)


def _v_matrix(m):
    for n0 in range(1, m + 1):
        yield {"n0": n0}, ci.matrix_identity_check(n0)


def _v_psi_lambda(m):
    for n in range(1, m + 1):
        ok = all(po.psi(po.lambda_(t)) == t for t in all_trees(n))
        ok = ok and all(po.lambda_(po.psi(p)) == p for p in po.enumerate_pp(n))
        yield {"n": n}, ok


def _v_insert(m):
    for n in range(1, m + 1):
        for ell in range(1, 4):
            ok = True
            for t in rc.tlt_class(n, ell):
                for mm in range(1, n + 1):
                    ok = ok and rc.ell_insert_inverse(rc.ell_insert(t, ell, mm), ell) == (t, mm)
            yield {"n": n, "ell": ell}, ok


def _v_cut(m):
    for n in range(1, m + 1):
        for ell in range(1, 4):
            ok = all(rc.ell_glue(*rc.ell_cut(t, ell)) == t for t in rc.tlt_class(n, ell))
            yield {"n": n, "ell": ell}, ok


VERIFY = {
    # name: (runner, default max, budget max)
    "fixed-box": (_v_fixed_box, 5, 6),
    "ES": (_v_es, 8, 9),
    "idII": (_v_idii, 5, 5),
    "idIII": (_v_idiii, 8, 40),
    "id-catalan": (_v_id_catalan, 12, 40),
    "id-anac": (_v_id_anac, 25, 60),
    "bessel": (_v_bessel, 8, 12),
    "wz": (_v_wz, 12, 15),
    "matrix": (_v_matrix, 10, 12),
    "roundtrip-psi-lambda": (_v_psi_lambda, 7, 10),
    "roundtrip-insert": (_v_insert, 4, 5),
    "roundtrip-cut": (_v_cut, 4, 5),
}


def cmd_verify(args) -> dict:
    runner, default_max, limit = VERIFY[args.identity]
    m = args.max if args.max is not None else default_max
    if m < 1 and args.identity not in ("idII", "bessel"):
        raise ParseError("--max must be positive")
    if args.budget is not None:
        limit = min(limit, args.budget)
    _check_budget(f"verify {args.identity}", m, limit)
    instances = []
    failure = None
    for params, ok in runner(m):
        instances.append({"params": params, "ok": bool(ok)})
        if not ok and failure is None:
            failure = params
    payload = {"identity": args.identity, "max": m, "instances": instances,
               "verdict": "ok" if failure is None else "violation"}
    if args.seed is not None:
        payload["seed"] = args.seed
    if failure is not None:
        payload["counterexample"] = failure
        raise Violation(f"{args.identity} fails", payload)
    return payload


# ---------------------------------------------------------------------------
#  biject
# ---------------------------------------------------------------------------

def _tlt_and_ell(doc):
    tlt = _obj("tlt", _field(doc, "tlt"))
    ell = _field(doc, "ell")
    if not isinstance(ell, int) or ell < 1:
        raise ParseError("ell must be a positive integer")
    return tlt, ell


def _biject(direction: str, doc) -> dict:
    if direction == "tree-to-pp":
        return po.lambda_(_obj("tree", doc)).to_json()
    if direction == "pp-to-tree":
        return po.psi(_obj("pp", doc)).to_json()
    if direction == "pp-to-nat":
        return po.enlighten(_obj("pp", doc)).to_json()
    if direction == "nat-to-pp":
        nat = _obj("nat", doc)
        filled = po.fill(nat)
        try:
            pp = po.ParallelogramPolyomino(filled.cells)
        except NatlabError as exc:
            raise Violation(f"filling does not give a polyomino: {exc}") from exc
        if po.enlighten(pp) != nat:
            raise Violation("this NAT is not the enlightening of a polyomino")
        return pp.to_json()
    if direction == "nat-to-codes":
        tree, codes = encode(_obj("nat", doc))
        return {"tree": tree.to_json(), "codes": codes.to_json()}
    if direction == "codes-to-nat":
        tree = _obj("tree", _field(doc, "tree"))
        codes = _obj("codes", _field(doc, "codes"))
        return decode(tree, codes).to_json()
    if direction == "tlt-insert":
        tlt, ell = _tlt_and_ell(doc)
        m = _field(doc, "m")
        if not isinstance(m, int):
            raise ParseError("m must be an integer")
        return {"tlt": rc.ell_insert(tlt, ell, m).to_json(), "ell": ell + 1}
    if direction == "tlt-uninsert":
        tlt, ell = _tlt_and_ell(doc)
        if ell < 2:
            raise Violation("an insertion image has ell >= 2")
        prev, m = rc.ell_insert_inverse(tlt, ell - 1)
        return {"tlt": prev.to_json(), "ell": ell - 1, "m": m}
    if direction == "tlt-cut":
        tlt, ell = _tlt_and_ell(doc)
        b, a = rc.ell_cut(tlt, ell)
        return {"b": b.to_json(), "a": a.to_json()}
    if direction == "tlt-glue":
        b = _obj("tlt", _field(doc, "b"))
        a = _obj("nat", _field(doc, "a"))
        return {"tlt": rc.ell_glue(b, a).to_json(), "ell": a.rows}
    raise ParseError(f"unknown direction {direction}")


DIRECTIONS = ("tree-to-pp", "pp-to-tree", "pp-to-nat", "nat-to-pp", "nat-to-codes",
              "codes-to-nat", "tlt-insert", "tlt-uninsert", "tlt-cut", "tlt-glue")


def cmd_biject(args) -> dict:
    doc = _load_json(args.json)
    return {"direction": args.direction, "result": _biject(args.direction, doc)}


# ---------------------------------------------------------------------------
#  render
# ---------------------------------------------------------------------------

def _grid(rows: int, cols: int, mark) -> str:
    lines = ["".join(mark(x, y) for y in range(cols)) for x in range(rows)]
    return "\n".join(line.rstrip() for line in lines)


def render_ascii(doc) -> str:
    if not isinstance(doc, dict):
        raise ParseError("render expects a JSON object")
    if "shape" in doc:
        t = _obj("tlt", doc)
        return _grid(t.rows, t.cols, lambda x, y: "*" if (x, y) in t.dots
                     else "." if t.in_shape(x, y) else " ")
    if "upper" in doc or ("cells" in doc and "points" not in doc):
        p = _obj("pp", doc)
        return _grid(p.height, p.width, lambda x, y: "#" if (x, y) in p.cells else ".")
    if "n" in doc and "points" in doc:
        try:
            g = ci.GriddedTree.from_json(doc)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed gridded tree: {exc!r}") from exc
        return _grid(g.n, g.n, lambda x, y: "*" if (x, y) in g.points else ".")
    a = _obj("nat", doc)
    return _grid(a.rows, a.cols, lambda x, y: "*" if (x, y) in a.points else ".")


def cmd_render(args):
    doc = _load_json(args.json)
    text = render_ascii(doc)
    if args.format == "ascii":
        return text
    return {"format": "json", "lines": text.split("\n"), "object": doc}


# ---------------------------------------------------------------------------
#  oeis
# ---------------------------------------------------------------------------

def cmd_oeis(args) -> dict:
    sid = args.sequence
    if sid == "A136127":
        terms = args.terms or 8
        _check_budget("oeis A136127", terms, args.budget or 10)
        computed = [count_nats(n) for n in range(1, terms + 1)]
        expected = list(A136127[:terms])
    elif sid == "A002190":
        terms = args.terms or 6
        _check_budget("oeis A002190", terms, args.budget or 30)
        computed = [sum(1 for _ in ci.enumerate_complete_nats(k)) if k <= 5 else ci.b_of(k)
                    for k in range(terms)]
        expected = list(A002190[:terms])
    else:
        terms = args.terms or 5
        _check_budget("oeis catalan", terms, args.budget or 11)
        computed = [len(all_trees(n)) if n else 1 for n in range(terms)]
        expected = list(CATALAN[:terms])
    payload = {"id": sid, "terms": terms, "computed": [str(c) for c in computed],
               "expected": [str(e) for e in expected]}
    payload["match"] = computed[:len(expected)] == expected
    if not payload["match"]:
        raise Violation(f"{sid} prefix mismatch", payload)
    return payload


# ---------------------------------------------------------------------------
#  entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="natlab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--json", metavar="FILE", help="input document, '-' for stdin")
        sp.add_argument("--budget", type=int, help="override the desk-scale limit")
        sp.add_argument("--seed", type=int, help="accepted for reproducibility; no effect")

    c = sub.add_parser("count", help="count a family of objects")
    c.add_argument("kind", choices=sorted(COUNT_BUDGETS))
    c.add_argument("--params", help="JSON object of parameters")
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--ell", type=int)
    c.add_argument("--method", choices=("closed-form", "brute-force", "both"), default="both")
    common(c)

    v = sub.add_parser("verify", help="check an identity over a range")
    v.add_argument("identity", choices=list(VERIFY))
    v.add_argument("--max", type=int, help="upper end of the checked range")
    common(v)

    b = sub.add_parser("biject", help="apply a bijection to a JSON object")
    b.add_argument("direction", choices=DIRECTIONS)
    common(b)

    r = sub.add_parser("render", help="draw an object")
    r.add_argument("--format", choices=("ascii", "json"), default="ascii")
    common(r)

    o = sub.add_parser("oeis", help="compare computed prefixes to embedded sequences")
    o.add_argument("sequence", choices=("A136127", "A002190", "catalan"))
    o.add_argument("--terms", type=int)
    common(o)
    return p


COMMANDS = {"count": cmd_count, "verify": cmd_verify, "biject": cmd_biject,
            "render": cmd_render, "oeis": cmd_oeis}


def _emit(payload, status: str) -> None:
    if isinstance(payload, str):
        sys.stdout.write(payload + "\n")
        return
    doc = dict(payload)
    doc["status"] = status
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def main(argv=None) -> int:
    start = time.perf_counter()
    code = EXIT_OK
    try:
        args = build_parser().parse_args(argv)
        _emit(COMMANDS[args.command](args), "ok")
    except ParseError as exc:
        code = EXIT_PARSE
        _emit({"error": str(exc)}, "parse_error")
    except BudgetExceeded as exc:
        code = EXIT_BUDGET
        _emit({"error": str(exc)}, "budget_exceeded")
    except Violation as exc:
        code = EXIT_VIOLATION
        doc = dict(exc.payload)
        doc["error"] = str(exc)
        _emit(doc, "violation")
    except NatlabError as exc:
        code = EXIT_VIOLATION
        _emit({"error": str(exc), "error_type": type(exc).__name__}, "violation")
    elapsed = (time.perf_counter() - start) * 1000
    print(f"elapsed_ms={elapsed:.1f}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
