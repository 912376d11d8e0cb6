"""Plain-dict reports for the command line; key order is fixed by ``sort_keys`` at dump time."""

from __future__ import annotations

import json

from . import __version__
from . import form as _form
from .errors import SingularAtRoot
from .form import IntersectionForm
from .knot import (
    SeifertMatrix,
    alexander_polynomial,
    arf_invariant,
    branched_cover_h1_order,
    certified_signature,
    knot_determinant,
)
from .slice import (
    decide_simple_slice,
    decide_stably_slice,
    genus_lower_bound,
    sigma_table,
    stabilizing_number,
    stable_genus_representable,
)

ENGINE = {"name": "simpleslice", "version": __version__}


def knot_invariants(V: SeifertMatrix, d: int, max_bits: int | None = None) -> tuple[dict, int]:
    """Invariant table of a knot at the d-th roots of unity, plus the largest precision used."""
    delta = alexander_polynomial(V)
    rows = []
    bits = 0
    for j in range(d):
        try:
            cert = certified_signature(V, j, d, max_bits)
        except SingularAtRoot:
            rows.append({"j": j, "signature": "singular"})
            continue
        bits = max(bits, cert.bits)
        rows.append({"j": j, "signature": cert.value})
    return {
        "alexander_polynomial": str(delta),
        "alexander_coefficients": {str(e): c for e, c in delta.terms},
        "determinant": knot_determinant(V),
        "arf": arf_invariant(V),
        "d": d,
        "h1_order": branched_cover_h1_order(V, d),
        "levine_tristram": rows,
    }, bits


def invariants_report(knot_name: str, V: SeifertMatrix, d: int, max_bits: int | None = None) -> dict:
    inv, bits = knot_invariants(V, d, max_bits)
    return {
        "engine": ENGINE,
        "query": {"command": "invariants", "knot": knot_name, "d": d},
        "knot": inv,
        "precision_bits": bits,
    }


def query_report(
    command: str,
    Q: IntersectionForm,
    x,
    V: SeifertMatrix,
    *,
    manifold_echo,
    knot_name: str,
    genus: int | None = None,
    max_bits: int | None = None,
) -> dict:
    """Full report for one (N, x, K) query.

    ``command`` is one of ``decide-simple``, ``decide-stable``, ``sn``,
    ``genus-bound`` or ``batch``; batch reports carry all four results.
    """
    x = tuple(int(v) for v in x)
    d = _form.divisibility(x)
    if d == 0:
        raise ValueError("the class x must be nonzero")
    inv, bits = knot_invariants(V, d, max_bits)
    table = sigma_table(Q, x, V, max_bits)
    bits = max([bits] + [t.bits for t in table])
    values = [t.value for t in table]
    query = {"command": command, "manifold": manifold_echo, "class": list(x), "knot": knot_name}
    if genus is not None:
        query["genus"] = genus
    report = {
        "engine": ENGINE,
        "query": query,
        "knot": inv,
        "manifold": {"b2": Q.b2, "signature": _form.signature(Q), "ks": Q.ks},
        "class": {
            "d": d,
            "self_intersection": _form.self_intersection(Q, x),
            "characteristic": _form.is_characteristic(Q, x),
        },
        "sigma_j": [
            {
                "j": t.j,
                "knot_signature": "singular" if t.knot_signature is None else t.knot_signature,
                "correction": t.correction,
                "value": "singular" if t.value is None else t.value,
            }
            for t in table
        ],
        "max_bound": None if None in values else max(abs(v) for v in values),
        "precision_bits": bits,
    }
    results = {}
    if command in ("decide-simple", "batch"):
        results["simple"] = decide_simple_slice(Q, x, V, max_bits).as_dict()
    if command in ("decide-stable", "batch"):
        if genus:
            results["stable"] = stable_genus_representable(Q, x, V, genus).as_dict()
        else:
            results["stable"] = decide_stably_slice(Q, x, V).as_dict()
    if command in ("sn", "batch"):
        results["sn"] = stabilizing_number(Q, x, V, max_bits).as_dict()
    if command in ("genus-bound", "batch"):
        g = genus_lower_bound(Q, x, V, max_bits)
        results["genus_bound"] = {"value": g.value, "scope": g.scope.value}
    report["result"] = results
    return report


def dumps(report: dict, compact: bool = False) -> str:
    if compact:
        return json.dumps(report, sort_keys=True, separators=(",", ":"))
    return json.dumps(report, sort_keys=True, indent=2)


def _fmt(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def render_table(report: dict) -> str:
    """Human-readable rendering of a report."""
    out = []
    q = report["query"]
    out.append(" ".join(f"{k}={_fmt(v)}" for k, v in sorted(q.items()) if k != "manifold"))
    k = report["knot"]
    out.append(f"Alexander polynomial  {k['alexander_polynomial']}")
    out.append(f"determinant           {k['determinant']}")
    out.append(f"Arf                   {k['arf']}")
    h1 = "infinite" if k["h1_order"] == 0 else k["h1_order"]
    label = f"|H1(Sigma_{k['d']})|"
    out.append(f"{label:<22}{h1}")
    out.append("j     " + " ".join(f"{r['j']:>9}" for r in k["levine_tristram"]))
    out.append("sig_K " + " ".join(f"{_fmt(r['signature']):>9}" for r in k["levine_tristram"]))
    if "manifold" in report:
        m, c = report["manifold"], report["class"]
        out.append(f"b2={m['b2']} sigma(N)={m['signature']} ks={m['ks']}")
        out.append(f"d={c['d']} x.x={c['self_intersection']} characteristic={_fmt(c['characteristic'])}")
        out.append("sig_j " + " ".join(f"{_fmt(r['value']):>9}" for r in report["sigma_j"]))
        out.append(f"max |sigma_j|         {_fmt(report['max_bound'])}")
        for name, res in report["result"].items():
            if "answer" in res:
                out.append(f"{name:<22}{res['answer']}")
                for r in res["reasons"]:
                    status = {True: "pass", False: "FAIL", None: "undetermined"}[r["passed"]]
                    out.append(f"  {r['condition']:<28}{status:<13}actual={_fmt(r['actual'])} required={_fmt(r['required'])}")
            elif name == "sn":
                if not res["finite"]:
                    out.append(f"{name:<22}infinite")
                elif res["exactness"] == "Exact":
                    note = "" if res["simple_equals_plain"] else " (simple; plain sn may be smaller)"
                    out.append(f"{name:<22}{res['value']}{note}")
                else:
                    out.append(f"{name:<22}>= {res['lower_bound']}")
            else:
                out.append(f"{name:<22}{res['value']} ({res['scope']})")
    out.append(f"precision_bits        {report['precision_bits']}")
    return "\n".join(out)
