"""Command-line front end: expansions, conversions, coproducts,
enumerations and cross-route verification suites.

Exit codes: 0 success, 1 verification failure, 2 usage error.
All output is deterministic; ``--json`` switches to the JSON schemas of
the owning modules.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import (
    algebra,
    compositions as comps,
    factorization,
    hopf,
    incidence,
    lagrange,
    noncrossing,
    parking,
)


def _comp_arg(text):
    try:
        return comps.from_text(text)
    except (ValueError, TypeError) as e:
        raise argparse.ArgumentTypeError(str(e))


def _word_arg(text):
    if "," in text:
        return tuple(int(x) for x in text.split(","))
    return tuple(int(ch) for ch in text)


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _element_payload(x):
    return x.to_json_dict()


# ---------------------------------------------------------------------------
# Subcommands


def cmd_expand(args):
    n = args.degree
    if args.series == "g":
        x = lagrange.g_component(n)
    elif args.series == "gk":
        x = lagrange.gk_component(args.k, n)
    elif args.series == "gneg":
        x = algebra.convert(lagrange.g_neg(n), "S")
    elif args.series == "antipode":
        x = algebra.convert(lagrange.antipode_g(n), "S")
    elif args.series == "cumulant":
        x = lagrange.free_cumulants(n).component(n)
    else:
        raise AssertionError(args.series)
    x = algebra.convert(x, args.basis)
    _emit(args, _element_payload(x), repr(x))
    return 0


def cmd_convert(args):
    x = algebra.NSymElement.monomial(args.basis_from, args.index)
    y = algebra.convert(x, args.basis_to)
    _emit(args, _element_payload(y), repr(y))
    return 0


def cmd_coproduct(args):
    if args.word is not None:
        cp = hopf.coproduct_P(args.word)
        items = sorted(cp.items())
        payload = [
            {"left": list(u), "right": list(v), "coeff": c}
            for (u, v), c in items
        ]
        text = "\n".join(
            f"{c} * P[{','.join(map(str, u))}] (x) P[{','.join(map(str, v))}]"
            for (u, v), c in items
        )
        _emit(args, payload, text)
        return 0
    if args.index is not None:
        t = hopf.delta_g_monomial(args.index)
    else:
        routes = {
            "algebraic": hopf.delta_g_algebraic,
            "biprofiles": hopf.delta_g_biprofiles,
            "noncrossing": hopf.delta_g_noncrossing,
        }
        t = routes[args.route](args.degree)
    _emit(args, t.to_json_dict(), repr(t))
    return 0


def cmd_antipode(args):
    if args.index is not None:
        x = algebra.NSymElement.monomial(args.basis, args.index)
        y = algebra.convert(algebra.antipode(x), args.basis)
    else:
        y = lagrange.antipode_g(args.degree)
    _emit(args, _element_payload(y), repr(y))
    return 0


def cmd_enumerate(args):
    n = args.n
    if args.what == "compositions":
        items = [list(c) for c in comps.all_compositions(n)]
        text = "\n".join(comps.to_text(c) for c in comps.all_compositions(n))
    elif args.what == "ndpf":
        words = parking.enumerate_k_ndpf(n, args.k)
        items = [list(w) for w in words]
        text = "\n".join("".join(map(str, w)) for w in words)
    elif args.what == "nc":
        ps = noncrossing.enumerate_nc(n)
        items = [[list(b) for b in p.blocks] for p in ps]
        text = "\n".join(noncrossing.to_text(p) for p in ps)
    elif args.what == "trees":
        ts = noncrossing.enumerate_trees(n)
        items = [repr(t) for t in ts]
        text = "\n".join(items)
    elif args.what == "compatible":
        pairs = parking.enumerate_compatible_pairs(n)
        items = [[list(i), list(j)] for i, j in pairs]
        text = "\n".join(
            f"{comps.to_text(i)} | {comps.to_text(j)}" for i, j in pairs
        )
    else:
        raise AssertionError(args.what)
    _emit(args, {"what": args.what, "n": n, "items": items}, text)
    return 0


def cmd_profile(args):
    s, c = parking.profile(args.word)
    payload = {"starts": list(s), "lengths": list(c)}
    text = f"starts {list(s)} lengths {list(c)}"
    if args.encode is not None:
        image = parking.c_map((s, c), args.encode)
        payload["composition"] = list(image)
        text += f" -> {comps.to_text(image)}"
    _emit(args, payload, text)
    return 0


def cmd_compatible(args):
    js = parking.compatible_with(args.index)
    payload = {
        "index": list(args.index),
        "compatible": [list(j) for j in js],
        "count": len(js),
    }
    _emit(args, payload, "\n".join(comps.to_text(j) for j in js))
    return 0


def cmd_biprofiles(args):
    bps = parking.enumerate_parking_biprofiles(args.n)
    payload = []
    lines = []
    for left, right in bps:
        i, j = parking.biprofile_to_compositions(left, right)
        payload.append(
            {
                "left": [list(left[0]), list(left[1])],
                "right": [list(right[0]), list(right[1])],
                "compositions": [list(i), list(j)],
            }
        )
        lines.append(
            f"{left} {right} -> {comps.to_text(i)} | {comps.to_text(j)}"
        )
    _emit(args, {"n": args.n, "count": len(bps), "items": payload}, "\n".join(lines))
    return 0


def cmd_kreweras(args):
    p = noncrossing.from_text(args.partition)
    k = noncrossing.kreweras(p)
    payload = {
        "input": [list(b) for b in p.blocks],
        "complement": [list(b) for b in k.blocks],
    }
    _emit(args, payload, noncrossing.to_text(k))
    return 0


def cmd_tree(args):
    if args.action == "rebuild":
        trace = [] if args.trace else None
        try:
            t = noncrossing.rebuild_tree(args.left, args.right, trace=trace)
        except noncrossing.RebuildFailure as e:
            _emit(
                args,
                {"ok": False, "step": e.step, "message": str(e)},
                f"rebuild failed at step {e.step}: {e}",
            )
            return 1
        i, j = noncrossing.tau(t)
        payload = {
            "ok": True,
            "tree": repr(t),
            "left": list(i),
            "right": list(j),
        }
        lines = [repr(t)]
        if args.trace:
            payload["trace"] = trace
            lines.extend(str(step) for step in trace)
        _emit(args, payload, "\n".join(lines))
        return 0
    if args.action == "tau":
        t = noncrossing.rebuild_tree(args.left, args.right)
        pl, pr = noncrossing.tree_phi(t)
        payload = {
            "left_partition": [list(b) for b in pl.blocks],
            "right_partition": [list(b) for b in pr.blocks],
        }
        text = f"{noncrossing.to_text(pl)}  ||  {noncrossing.to_text(pr)}"
        _emit(args, payload, text)
        return 0
    raise AssertionError(args.action)


def cmd_motzkin(args):
    if args.path is not None:
        w = noncrossing.path_to_word(args.path)
        payload = {"path": args.path, "word": list(w)}
        text = "".join(map(str, w))
    else:
        w = args.word
        if noncrossing.is_s_word(w):
            w = noncrossing.s_to_sprime(w)
        path = noncrossing.word_to_path(w)
        payload = {"word": list(args.word), "path": path}
        text = path
    _emit(args, payload, text)
    return 0


def cmd_factorize(args):
    count = factorization.count_minimal_factorizations(
        args.index, args.left, args.right
    )
    payload = {
        "index": list(args.index),
        "left": list(args.left),
        "right": list(args.right),
        "count": count,
    }
    if args.list:
        facs = factorization.minimal_factorizations(
            factorization.canonical_permutation(args.index), args.left, args.right
        )
        payload["factorizations"] = [[list(a), list(b)] for a, b in facs]
        text = "\n".join(f"{a} * {b}" for a, b in payload["factorizations"])
        text = f"{count}\n{text}" if text else str(count)
    else:
        text = str(count)
    _emit(args, payload, text)
    return 0


def cmd_incidence(args):
    if args.action == "values":
        base = {
            "zeta": incidence.zeta,
            "mobius": incidence.mobius,
            "identity": incidence.identity_character,
        }[args.function](args.degree)
        phi = base
        for _ in range(args.power - 1):
            phi = incidence.convolve(phi, base)
        vals = incidence.g_values(phi)
        payload = {
            "function": args.function,
            "power": args.power,
            "hat": [str(x) for x in phi.hat],
            "values": [str(v) for v in vals],
        }
        text = " ".join(str(v) for v in vals)
    elif args.action == "multichains":
        c = incidence.multichain_count(args.n, args.k)
        payload = {"n": args.n, "k": args.k, "count": c}
        text = str(c)
    elif args.action == "chains":
        c = incidence.chain_count(args.n, args.jumps)
        payload = {"n": args.n, "jumps": list(args.jumps), "count": c}
        text = str(c)
    elif args.action == "biane":
        c = incidence.biane_count(args.n, args.orders)
        payload = {"n": args.n, "orders": list(args.orders), "count": c}
        text = str(c)
    elif args.action == "mobius-number":
        lat = incidence.lattice_oracle(args.n)
        c = lat.mobius(lat.bottom, lat.top)
        payload = {"n": args.n, "mobius": c}
        text = str(c)
    else:
        raise AssertionError(args.action)
    _emit(args, payload, text)
    return 0


# ---------------------------------------------------------------------------
# Verification suites


def _suite_lagrange(max_n):
    for n in range(max_n + 1):
        yield f"g expansion counts ndpf types, n={n}", lagrange.g_expansion_check(n), {"n": n}
    for k in (2, 3):
        for n in range(min(max_n, 4) + 1):
            a = lagrange.gk_component(k, n)
            b = lagrange.gk_component_iterative(k, n)
            c = lagrange.gk_component_via_phi(k, n)
            yield f"k-analogue routes agree, k={k} n={n}", a == b == c, {"k": k, "n": n}
            yield f"k-parking expansion, k={k} n={n}", lagrange.k_parking_check(n, k), {"k": k, "n": n}
    yield "free cumulant functional equation", lagrange.free_cumulant_check(max_n), {"N": max_n}
    for n in range(1, max_n + 1):
        yield f"cumulant reciprocity, n={n}", lagrange.cumulant_reciprocity_check(n), {"n": n}
    yield "inverse series fixed point", lagrange.gamma_check(max_n), {"N": max_n}


def _suite_bases(max_n):
    import itertools

    for n in range(max_n + 1):
        for basis in ("L", "R", "G", "F"):
            ok = True
            for i in comps.all_compositions(n):
                x = algebra.NSymElement.monomial("S", i)
                y = algebra.convert(algebra.convert(x, basis), "S")
                if y != x:
                    ok = False
                    break
            yield f"S<->{basis} round trip, n={n}", ok, {"n": n, "basis": basis}
        for basis in ("E", "V", "C"):
            ok = True
            for i in comps.all_compositions(n):
                x = algebra.QSymElement.monomial("M", i)
                y = algebra.qsym_convert(algebra.qsym_convert(x, basis), "M")
                if y != x:
                    ok = False
                    break
            yield f"M<->{basis} round trip, n={n}", ok, {"n": n, "basis": basis}
    for n in range(1, min(max_n, 5) + 1):
        yield (
            f"conjugate reading fixes g, n={n}",
            algebra.mirror_invariance_check(n, "conjugate"),
            {"n": n},
        )
    for n in range(1, max_n + 1):
        a = lagrange.s_generator_on_g(n)
        b = lagrange.s_to_g_via_recipe(n)
        yield f"generator on G via recipe, n={n}", a == b, {"n": n}


def _suite_negation(max_n):
    for n in range(max_n + 1):
        a = lagrange.g_neg(n)
        b = lagrange.g_neg_via_pairing(n)
        c = lagrange.g_neg_via_counting(n)
        d = lagrange.g_neg_via_doubling(n)
        yield f"negated alphabet routes agree, n={n}", a == b == c == d, {"n": n}
        yield f"negated S-coefficients, n={n}", lagrange.g_neg_s_coefficient_check(n), {"n": n}


def _suite_antipode(max_n):
    for n in range(max_n + 1):
        a = lagrange.antipode_g(n)
        b = lagrange.antipode_g_four_step(n)
        c = lagrange.antipode_g_formula(n)
        yield f"antipode routes agree, n={n}", a == b == c, {"n": n}


def _suite_coproduct(max_n):
    for n in range(max_n + 1):
        a = hopf.delta_g_algebraic(n)
        b = hopf.delta_g_biprofiles(n)
        c = hopf.delta_g_noncrossing(n)
        yield f"coproduct routes agree, n={n}", a == b == c, {"n": n}
        yield f"cocommutative, n={n}", hopf.cocommutativity_check(n), {"n": n}
        yield f"coassociative, n={n}", hopf.coassociativity_check(n), {"n": n}
        yield (
            f"biprofile regrouping, n={n}",
            hopf.biprofile_regrouping_check(n),
            {"n": n},
        )
        t = hopf.delta_g_commutative(n)
        w = hopf.delta_g_commutative_via_trees(n)
        yield f"commutative tree series, n={n}", t == w, {"n": n}
    if max_n >= 5:
        a5 = hopf.delta_g_algebraic(5)
        yield "coefficient 7 at (1,2)|(1,1)", a5.coeff((1, 2), (1, 1)) == 7, {"n": 5}
        yield "coefficient 11 at (2,1)|(1,1)", a5.coeff((2, 1), (1, 1)) == 11, {"n": 5}


def _suite_trees(max_n):
    for n in range(1, max_n + 1):
        images = {}
        ok_inj = True
        ok_round = True
        for t in noncrossing.enumerate_trees(n):
            ij = noncrossing.tau(t)
            if ij in images:
                ok_inj = False
            images[ij] = t
            if noncrossing.rebuild_tree(*ij) != t:
                ok_round = False
        yield f"tau injective, n={n}", ok_inj, {"n": n}
        yield f"rebuild round trip, n={n}", ok_round, {"n": n}
    for n in range(1, min(max_n, 7) + 1):
        ok = True
        for t in noncrossing.enumerate_trees(n):
            order = list(range(2, n + 1)) + [1]
            for i in range(1, n + 1):
                if noncrossing.infix_successor(t, i) != order[i - 1]:
                    ok = False
        yield f"infix successor rule, n={n}", ok, {"n": n}


def _suite_kreweras(max_n):
    for n in range(1, max_n + 1):
        ok = True
        for p in noncrossing.enumerate_nc(n):
            k = noncrossing.kreweras(p)
            if len(p.blocks) + len(k.blocks) != n + 1:
                ok = False
        yield f"block count complement, n={n}", ok, {"n": n}
    for n in range(1, min(max_n, 7) + 1):
        ok = all(
            noncrossing.kreweras(noncrossing.tree_phi(t)[0])
            == noncrossing.tree_phi(t)[1]
            for t in noncrossing.enumerate_trees(n)
        )
        yield f"tree partitions are complements, n={n}", ok, {"n": n}


def _suite_appendix(max_n):
    import math

    for n in range(1, max_n + 1):
        pairs = parking.enumerate_compatible_pairs(n)
        cat = math.comb(2 * n, n) // (n + 1)
        yield f"compatible pair count Catalan, n={n}", len(pairs) == cat, {"n": n}
        ok = True
        seen = set()
        for i, j in pairs:
            w = parking.dumb_bijection(i, j)
            if parking.dumb_bijection_inverse(w) != (i, j):
                ok = False
            seen.add(w)
        yield f"direct bijection round trip, n={n}", ok, {"n": n}
        yield (
            f"direct bijection onto ndpf, n={n}",
            seen == set(parking.enumerate_ndpf(n)),
            {"n": n},
        )
    for n in range(1, min(max_n, 10) + 1):
        ok = True
        for w in noncrossing.enumerate_s_words(n):
            w2 = noncrossing.s_to_sprime(w)
            if noncrossing.sprime_to_s(w2) != w:
                ok = False
            if noncrossing.path_to_word(noncrossing.word_to_path(w2)) != w2:
                ok = False
        yield f"Motzkin codec round trip, n={n}", ok, {"n": n}
    for n in range(1, min(max_n, 12) + 1):
        total = sum(
            2 ** (n - 2 * k) * math.comb(n, 2 * k) * (math.comb(2 * k, k) // (k + 1))
            for k in range(n // 2 + 1)
        )
        cat = math.comb(2 * (n + 1), n + 1) // (n + 2)
        yield f"Touchard identity, n={n}", total == cat, {"n": n}


def _suite_factorization(max_n):
    for n in range(1, max_n + 1):
        for i in comps.all_compositions(n):
            if comps.weight(i) + len(i) > 8:
                continue
            yield (
                f"factorization counts match coproduct, I={comps.to_text(i)}",
                factorization.verify_coproduct_match(i),
                {"index": list(i)},
            )


def _suite_incidence(max_n):
    import itertools
    import math

    N = min(max_n, 6)
    gm = incidence.g_values(incidence.mobius(N))
    for n in range(N + 1):
        cat = math.comb(2 * n, n) // (n + 1)
        yield (
            f"Moebius values signed Catalan, n={n}",
            gm[n] == (-1) ** n * cat,
            {"n": n},
        )
    for n in range(2, N + 2):
        lat = incidence.lattice_oracle(n)
        cat = math.comb(2 * (n - 1), n - 1) // n
        yield (
            f"lattice Moebius recursion, n={n}",
            lat.mobius(lat.bottom, lat.top) == (-1) ** (n - 1) * cat,
            {"n": n},
        )
    for k in (1, 2, 3):
        gv = incidence.g_values(incidence.zeta_power(k, N))
        ok = all(gv[n] == incidence.zeta_power_value(k, n) for n in range(N + 1))
        yield f"zeta power closed form, k={k}", ok, {"k": k}
    for n in range(1, min(max_n, 4) + 1):
        lat = incidence.lattice_oracle(n + 1)
        for k in (1, 2, 3):
            yield (
                f"multichain count vs oracle, n={n} k={k}",
                lat.count_multichains(k) == incidence.multichain_count(n, k),
                {"n": n, "k": k},
            )
    for m in range(2, min(max_n + 1, 6) + 1):
        lat = incidence.lattice_oracle(m)
        ok = True
        for r in range(1, m):
            for s in itertools.product(range(1, m), repeat=r):
                if sum(s) == m - 1 and lat.count_chains(s) != incidence.chain_count(m, s):
                    ok = False
        yield f"Edelman chain counts, n+1={m}", ok, {"m": m}


SUITES = {
    "lagrange": _suite_lagrange,
    "bases": _suite_bases,
    "negation": _suite_negation,
    "antipode": _suite_antipode,
    "coproduct": _suite_coproduct,
    "trees": _suite_trees,
    "kreweras": _suite_kreweras,
    "appendix": _suite_appendix,
    "factorization": _suite_factorization,
    "incidence": _suite_incidence,
}


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    failed = 0
    for name in names:
        t0 = time.monotonic()
        cases = []
        for label, ok, witness in SUITES[name](args.max_n):
            cases.append({"case": label, "ok": bool(ok), "witness": witness})
            if not ok:
                failed += 1
        reports.append(
            {
                "suite": name,
                "max_n": args.max_n,
                "cases": cases,
                "seconds": round(time.monotonic() - t0, 3),
            }
        )
    if args.json:
        print(json.dumps({"reports": reports, "failed": failed}, sort_keys=True))
    else:
        for rep in reports:
            print(f"suite {rep['suite']} (max n {rep['max_n']}, {rep['seconds']}s)")
            for case in rep["cases"]:
                mark = "ok  " if case["ok"] else "FAIL"
                print(f"  {mark} {case['case']}")
                if not case["ok"]:
                    print(f"       witness: {case['witness']}", file=sys.stderr)
        print(f"{failed} failures" if failed else "all checks passed")
    return 1 if failed else 0


# ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(
        prog="nclag",
        description="Lagrange inversion in noncommutative symmetric functions",
    )
    p.add_argument("--json", action="store_true", help="emit JSON payloads")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("expand", help="expand a series component on a basis")
    q.add_argument(
        "--series",
        choices=("g", "gk", "gneg", "antipode", "cumulant"),
        default="g",
    )
    q.add_argument("--degree", type=int, required=True)
    q.add_argument("--k", type=int, default=2, help="parameter for --series gk")
    q.add_argument("--basis", choices=("S", "L", "R", "G", "F"), default="S")
    q.set_defaults(fn=cmd_expand)

    q = sub.add_parser("convert", help="convert a basis monomial")
    q.add_argument("--from", dest="basis_from", required=True, choices=("S", "L", "R", "G", "F"))
    q.add_argument("--to", dest="basis_to", required=True, choices=("S", "L", "R", "G", "F"))
    q.add_argument("--index", type=_comp_arg, required=True)
    q.set_defaults(fn=cmd_convert)

    q = sub.add_parser("coproduct", help="coproduct of g_n, G^I or a P-word")
    q.add_argument("--degree", type=int)
    q.add_argument("--index", type=_comp_arg)
    q.add_argument("--word", type=_word_arg)
    q.add_argument(
        "--route",
        choices=("algebraic", "biprofiles", "noncrossing"),
        default="algebraic",
    )
    q.set_defaults(fn=cmd_coproduct)

    q = sub.add_parser("antipode", help="antipode of g_n or of a monomial")
    q.add_argument("--degree", type=int)
    q.add_argument("--index", type=_comp_arg)
    q.add_argument("--basis", choices=("S", "L", "R", "G"), default="S")
    q.set_defaults(fn=cmd_antipode)

    q = sub.add_parser("enumerate", help="list combinatorial families")
    q.add_argument(
        "--what",
        choices=("compositions", "ndpf", "nc", "trees", "compatible"),
        required=True,
    )
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, default=1)
    q.set_defaults(fn=cmd_enumerate)

    q = sub.add_parser("profile", help="profile of a nondecreasing word")
    q.add_argument("--word", type=_word_arg, required=True)
    q.add_argument("--encode", type=int, help="encode as a composition of N")
    q.set_defaults(fn=cmd_profile)

    q = sub.add_parser("compatible", help="compositions compatible with I")
    q.add_argument("--index", type=_comp_arg, required=True)
    q.set_defaults(fn=cmd_compatible)

    q = sub.add_parser("biprofiles", help="parking biprofiles of size n")
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(fn=cmd_biprofiles)

    q = sub.add_parser("kreweras", help="Kreweras complement")
    q.add_argument("--partition", required=True, help='e.g. "157|234|6|89"')
    q.set_defaults(fn=cmd_kreweras)

    q = sub.add_parser("tree", help="binary tree reconstruction")
    q.add_argument("action", choices=("rebuild", "tau"))
    q.add_argument("--left", type=_word_arg, required=True)
    q.add_argument("--right", type=_word_arg, required=True)
    q.add_argument("--trace", action="store_true")
    q.set_defaults(fn=cmd_tree)

    q = sub.add_parser("motzkin", help="Motzkin path codec")
    q.add_argument("--word", type=_word_arg)
    q.add_argument("--path", help="string over U, D, H")
    q.set_defaults(fn=cmd_motzkin)

    q = sub.add_parser("factorize", help="count minimal factorizations")
    q.add_argument("--index", type=_comp_arg, required=True)
    q.add_argument("--left", type=_comp_arg, required=True)
    q.add_argument("--right", type=_comp_arg, required=True)
    q.add_argument("--list", action="store_true")
    q.set_defaults(fn=cmd_factorize)

    q = sub.add_parser("incidence", help="incidence-algebra computations")
    q.add_argument(
        "action",
        choices=("values", "multichains", "chains", "biane", "mobius-number"),
    )
    q.add_argument("--function", choices=("zeta", "mobius", "identity"), default="zeta")
    q.add_argument("--power", type=int, default=1)
    q.add_argument("--degree", type=int, default=6)
    q.add_argument("--n", type=int)
    q.add_argument("--k", type=int)
    q.add_argument("--jumps", type=_comp_arg)
    q.add_argument("--orders", type=_comp_arg)
    q.set_defaults(fn=cmd_incidence)

    q = sub.add_parser("verify", help="run cross-route verification suites")
    q.add_argument("--suite", choices=["all"] + sorted(SUITES), required=True)
    q.add_argument("--max-n", type=int, default=5)
    q.set_defaults(fn=cmd_verify)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
