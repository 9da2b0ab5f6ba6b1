"""JSON documents and pandas tables for the tiltcell commands.

Every JSON document opens with a header carrying the schema version, the
package version and the scalar context, so the same invocation always
produces the same bytes.
"""

import json

import pandas as pd

from .. import __version__
from .const import SCHEMA_VERSION
from .diagrams import TLElement


def header(ctx):
    return {"schema_version": SCHEMA_VERSION, "version": __version__, "context": ctx.label}


def dumps(ctx, payload):
    return json.dumps({"header": header(ctx), **payload}, indent=2)


def emit(ctx, payload, frame, fmt):
    """Text for one command result in the requested format."""
    if fmt == "json":
        return dumps(ctx, payload)
    if fmt == "csv":
        return frame.to_csv(index=False).rstrip("\n")
    return frame.to_string(index=False)


def decomposition_frame(multiset):
    return pd.DataFrame(
        [[lam, m, multiset.weyl_multiplicities().get(lam, 0)] for lam, m in multiset.items()],
        columns=["lam", "multiplicity", "weyl_multiplicity"],
    )


def decomposition_payload(multiset):
    return {
        "decomposition": multiset.to_json(),
        "weyl_multiplicities": {str(k): m for k, m in multiset.weyl_multiplicities().items()},
        "end_dimension": multiset.end_dimension(),
    }


def _element_json(x):
    if isinstance(x, TLElement):
        return x.to_json()
    return x.to_text()


def cell_datum_payload(cd, report=None):
    """Poset, index sets, elements with their degrees, involution table and report."""
    elements = []
    for key in cd.keys():
        lam, i, j = key
        elements.append({
            "lam": lam,
            "i": i + 1,
            "j": j + 1,
            "degree": cd.degree(key),
            "value": _element_json(cd.basis[key]),
        })
    payload = {
        "poset": cd.poset,
        "index_sets": {str(lam): s for lam, s in cd.index_sets.items()},
        "dimension": len(cd),
        "elements": elements,
        "involution": [[f"{lam},{i + 1},{j + 1}", f"{lam},{j + 1},{i + 1}"] for lam, i, j in cd.keys()],
    }
    if cd.graded:
        payload["degrees"] = cd.degrees()
    if report is not None:
        payload["verification"] = report_payload(report)
    return payload


def cell_datum_frame(cd):
    rows = []
    for key in cd.keys():
        lam, i, j = key
        x = cd.basis[key]
        size = len(x.terms) if isinstance(x, TLElement) else x.entry_count()
        rows.append([lam, i + 1, j + 1, cd.degree(key), size])
    return pd.DataFrame(rows, columns=["lam", "i", "j", "degree", "nonzeros"])


def report_payload(report):
    return {
        "passed": report.passed,
        "checks": [{"name": c.name, "passed": c.passed, "witness": c.witness} for c in report.checks],
    }


def simples_frame(dims, formula=None):
    """dims from simple_dimensions; formula optionally maps lam to the alternating-sum value."""
    rows = []
    for lam, (dim_c, rank, m) in sorted(dims.items()):
        agree = rank == m and (formula is None or formula[lam] == m)
        rows.append([lam, dim_c, rank, m, agree])
    return pd.DataFrame(rows, columns=["lam", "dimC", "gramRank", "m_lam", "agree"])


def element_frame(x):
    return pd.DataFrame(x.to_json(), columns=["diagram", "coefficient"])


def element_payload(x):
    return {"bottom": x.bottom, "top": x.top, "terms": x.to_json()}


def records(frame):
    """Frame rows as plain JSON-ready dicts."""
    return json.loads(frame.to_json(orient="records"))
