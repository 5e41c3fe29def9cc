"""Subcommand implementations; each returns a RunReport."""

from __future__ import annotations

from argparse import Namespace

from .. import campaign
from ..egh import egh_at_degree, liaison_transform, slice_construct, socle_degree
from ..lpp import cl_compress, lpp_growth, macaulay_growth, refined_bound
from ..mideal import DEFAULT_SLICE_BUDGET, MonomialIdeal, contains_pure_powers, hilbert_function
from ..monom import INF, DegreeSequence, box_count
from ..polyfp import hilbert_function_poly, is_regular_sequence
from .document import InputDocument
from .report import RunReport


class InputError(ValueError):
    """Input that is well-formed but unsuitable for the command."""


def _doc_inputs(doc: InputDocument) -> dict:
    return {
        "ring": list(doc.ring.names),
        "field": "monomial" if doc.is_monomial else str(doc.field),
        "degrees": str(doc.degrees) if doc.degrees is not None else "-",
        "ideal": doc.generator_texts(),
    }


def _opt(opts: Namespace, name: str, default=None):
    value = getattr(opts, name, None)
    return default if value is None else value


def _need_ideal(doc: InputDocument) -> None:
    if not doc.generators:
        raise InputError("the document has no 'ideal' declaration")


def _full_degrees(doc: InputDocument) -> tuple[int, ...]:
    if doc.degrees is None or len(doc.degrees) != doc.ring.n or not doc.degrees.finite:
        raise InputError(f"this command needs {doc.ring.n} finite degrees")
    return tuple(doc.degrees)


def _hf(doc: InputDocument, bound: int, opts: Namespace):
    budget = _opt(opts, "budget", DEFAULT_SLICE_BUDGET)
    if doc.is_monomial:
        return hilbert_function(doc.monomial_ideal(), bound, budget)
    return hilbert_function_poly(doc.polynomial_ideal(), bound, _opt(opts, "order", "degrevlex"), budget)


def _default_bound(doc: InputDocument) -> int:
    if doc.degrees is not None and len(doc.degrees) == doc.ring.n and doc.degrees.finite:
        return doc.degrees.socle + 1
    if doc.is_monomial:
        top = max((sum(g) for g in doc.generators), default=0)
    else:
        top = max((g.degree for g in doc.generators), default=0)
    return top + 2


def cmd_hilbert(doc: InputDocument, opts: Namespace) -> RunReport:
    bound = _opt(opts, "max_degree", _default_bound(doc))
    h = _hf(doc, bound, opts)
    ideal_side = h.flipped()
    report = RunReport("hilbert", {**_doc_inputs(doc), "max-degree": bound},
                       ("degree", "quotient", "ideal"), document=doc.to_text())
    report.rows = [{"degree": d, "quotient": h[d], "ideal": ideal_side[d]} for d in range(bound + 1)]
    report.summary = {"hilbert": list(h.values)}
    return report


def cmd_lpp(doc: InputDocument, opts: Namespace) -> RunReport:
    _need_ideal(doc)
    I = doc.monomial_ideal()
    if doc.degrees is None:
        raise InputError("the lpp command needs a 'degrees' declaration")
    a = tuple(doc.degrees)
    if not contains_pure_powers(I, a):
        raise InputError(f"{I} does not contain the pure powers of degrees {doc.degrees}")
    bound = _opt(opts, "max_degree", _default_bound(doc))
    J = cl_compress(I, a, bound)
    hI = hilbert_function(I, bound)
    hJ = hilbert_function(J.whole, bound)
    report = RunReport("lpp", {**_doc_inputs(doc), "max-degree": bound},
                       ("degree", "input", "lpp", "pass"), document=doc.to_text())
    report.rows = [{"degree": d, "input": hI[d], "lpp": hJ[d], "pass": hI[d] == hJ[d]} for d in range(bound + 1)]
    report.summary = {"lpp": str(J.whole), "lex_part": str(J.lex_part)}
    return report


def cmd_growth(opts: Namespace) -> RunReport:
    n, d, q = opts.n, opts.d, opts.q
    a = DegreeSequence.parse(opts.degrees) if opts.degrees else DegreeSequence(())
    if len(a) > n:
        raise InputError(f"{len(a)} degrees for {n} variables")
    bound = refined_bound(n, tuple(a), d, q)
    classical = macaulay_growth(n, d, q)
    report = RunReport("growth", {"n": n, "degrees": str(a) or "-", "d": d, "q": q},
                       ("d", "q", "bound", "macaulay", "refined"))
    report.rows = [{"d": d, "q": q, "bound": bound, "macaulay": classical, "refined": bound < classical}]
    report.summary = {"bound": bound, "macaulay": classical, "refined": bound < classical}
    return report


def _check_contains_sequence(doc: InputDocument, a: tuple[int, ...]) -> None:
    if doc.is_monomial:
        if not contains_pure_powers(doc.monomial_ideal(), a):
            raise InputError(f"{doc.monomial_ideal()} does not contain x_i^a_i for degrees {doc.degrees}")
        return
    head = list(doc.generators[: len(a)])
    if len(head) < len(a) or tuple(g.degree for g in head) != a:
        raise InputError("the first generators must have the declared degrees")
    if not is_regular_sequence(head):
        raise InputError("the first generators do not form a regular sequence")


def cmd_egh(doc: InputDocument, opts: Namespace) -> RunReport:
    _need_ideal(doc)
    a = _full_degrees(doc)
    _check_contains_sequence(doc, a)
    n = doc.ring.n
    s = socle_degree(a)
    h = _hf(doc, s + 1, opts)
    report = RunReport("egh", _doc_inputs(doc), ("degree", "h", "h_next", "bound", "pass"), document=doc.to_text())
    for d in range(s + 1):
        if h[d] > box_count(n, a, d):
            bound, ok = "-", False
        else:
            bound = lpp_growth(a, n, d, h[d])
            ok = egh_at_degree(h[d], h[d + 1], a, n, d)
        report.rows.append({"degree": d, "h": h[d], "h_next": h[d + 1], "bound": bound, "pass": ok})
    report.summary = {"socle": s}
    return report


def cmd_liaison(doc: InputDocument, opts: Namespace) -> RunReport:
    _need_ideal(doc)
    J = doc.monomial_ideal()
    a = _full_degrees(doc)
    if not contains_pure_powers(J, a):
        raise InputError(f"{J} does not contain the complete intersection of degrees {doc.degrees}")
    linked = liaison_transform(J, a)
    s = socle_degree(a)
    hM = hilbert_function(MonomialIdeal.pure_powers(J.ring, a), s)
    hJ = hilbert_function(J, s)
    hL = hilbert_function(linked, s)
    report = RunReport("liaison", _doc_inputs(doc), ("t", "ci", "ideal", "linked_dual", "pass"),
                       document=doc.to_text())
    report.rows = [{"t": t, "ci": hM[t], "ideal": hJ[t], "linked_dual": hL[s - t], "pass": hM[t] == hJ[t] + hL[s - t]}
                   for t in range(s + 1)]
    report.summary = {"linked": str(linked), "socle": s}
    return report


def cmd_slice(doc: InputDocument, opts: Namespace) -> RunReport:
    _need_ideal(doc)
    I = doc.monomial_ideal()
    if doc.degrees is None or any(e == INF for e in doc.degrees) or len(doc.degrees) >= doc.ring.n:
        raise InputError("the slice command needs finite degrees for fewer than all variables")
    a = tuple(doc.degrees)
    if not contains_pure_powers(I, a):
        raise InputError(f"{I} does not contain the pure powers of degrees {doc.degrees}")
    bound = _opt(opts, "max_degree", socle_degree(a) + 2)
    dec = slice_construct(I, a, bound=bound)
    hI = hilbert_function(I, bound)
    hK = hilbert_function(dec.result, bound)
    report = RunReport("slice", {**_doc_inputs(doc), "max-degree": bound}, ("t", "input", "sliced", "pass"),
                       document=doc.to_text())
    report.rows = [{"t": t, "input": hI[t], "sliced": hK[t], "pass": hI[t] == hK[t]} for t in range(bound + 1)]
    report.summary = {
        "result": str(dec.result),
        "N": dec.N,
        "slices": [str(sl.compressed.whole) for sl in dec.slices],
        "powers": contains_pure_powers(dec.result, a),
    }
    return report


def cmd_verify(opts: Namespace) -> RunReport:
    a = DegreeSequence.parse(opts.degrees)
    if not a.finite or len(a) != opts.n:
        raise InputError(f"verify needs {opts.n} finite degrees")
    a = tuple(a)
    order = _opt(opts, "order", "degrevlex")
    items = [(opts.n, a, opts.p, opts.seed, i, order) for i in range(opts.trials)]
    results = campaign.run_parallel(campaign.verify_instance, items, _opt(opts, "jobs", 1))
    report = RunReport("verify", {"n": opts.n, "degrees": list(a), "p": opts.p, "trials": opts.trials,
                                  "seed": opts.seed, "order": order},
                       ("trial", "extra", "hf", "failing", "pass"))
    report.rows = [{"trial": r["index"], "extra": r["extra"], "hf": list(r["hf"]), "failing": r["failing"],
                    "pass": not r["failing"]} for r in results]
    report.summary = {"trials": opts.trials, "seed": opts.seed}
    return report


def cmd_search(opts: Namespace) -> RunReport:
    cases = campaign.cl_minimality_search(opts.n_max, opts.a_max, opts.d_max, _opt(opts, "jobs", 1))
    report = RunReport("search", {"n-max": opts.n_max, "a-max": opts.a_max, "d-max": opts.d_max},
                       ("n", "a", "d", "subsets", "violations", "pass"))
    report.rows = [{**c.params, "subsets": c.checked, "violations": c.violations, "pass": not c.failures}
                   for c in cases]
    report.summary = {"subsets": sum(c.checked for c in cases)}
    return report


DOCUMENT_COMMANDS = {
    "hilbert": cmd_hilbert,
    "lpp": cmd_lpp,
    "egh": cmd_egh,
    "liaison": cmd_liaison,
    "slice": cmd_slice,
}
FLAG_COMMANDS = {
    "growth": cmd_growth,
    "verify": cmd_verify,
    "search": cmd_search,
}
