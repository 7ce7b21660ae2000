"""
Versioned, human-readable artifact files.

Every artifact is a `# `-prefixed header (timestamp, runtimes) followed by
canonical JSON (sorted keys, fixed indentation).  Header lines carry the
only run-dependent content, so rerunning with the same seed reproduces the
JSON body byte-identically.
"""

from __future__ import annotations

import json
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path

from .ael import AELCode
from .codes import ERASED, ErasedWord, LinearCode
from .errors import ConfigInvalid
from .gf import Field
from .graphs import BipartiteGraph
from .inner import ARLDCertificate, FoldedRSCode
from .outer import RSOuterCode

FORMAT_VERSION = 1


def frac_str(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def parse_frac(s) -> Fraction:
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    return Fraction(s)


def save_artifact(path, payload: dict, header_extras: dict | None = None) -> None:
    path = Path(path)
    lines = [f"# generated: {datetime.now(timezone.utc).isoformat()}"]
    for key, value in (header_extras or {}).items():
        lines.append(f"# {key}: {value}")
    body = json.dumps(payload, sort_keys=True, indent=2)
    path.write_text("\n".join(lines) + "\n" + body + "\n")


def load_artifact(path) -> dict:
    text = Path(path).read_text()
    body = "\n".join(ln for ln in text.splitlines() if not ln.startswith("#"))
    return json.loads(body)


def artifact_body_bytes(path) -> bytes:
    """Artifact content with header lines stripped, for determinism checks."""
    text = Path(path).read_text()
    return "\n".join(
        ln for ln in text.splitlines() if not ln.startswith("#")
    ).encode()


# -- fields and codes ----------------------------------------------------------


def field_payload(field: Field) -> dict:
    return field.record()


def field_from_payload(rec: dict) -> Field:
    return Field(rec["p"], rec["m"], tuple(rec["modulus"]))


def save_code(path, code: LinearCode) -> None:
    payload = {
        "kind": "linear_code",
        "version": FORMAT_VERSION,
        "field": field_payload(code.field),
        "n": code.n,
        "dim": code.dim,
        "generator": [list(row) for row in code.generator],
    }
    if isinstance(code, RSOuterCode):
        payload["kind"] = "rs_code"
        payload["evaluation_points"] = list(code.points)
    save_artifact(path, payload)


def load_code(path) -> LinearCode:
    rec = load_artifact(path)
    field = field_from_payload(rec["field"])
    if rec["kind"] == "rs_code":
        return RSOuterCode(field, rec["n"], rec["dim"], rec["evaluation_points"])
    if rec["kind"] == "linear_code":
        return LinearCode(field, rec["generator"])
    raise ConfigInvalid(f"not a code file: kind={rec.get('kind')}")


def save_frs(path, frs: FoldedRSCode) -> None:
    save_artifact(
        path,
        {
            "kind": "folded_rs",
            "version": FORMAT_VERSION,
            "field": field_payload(frs.field),
            "b": frs.b,
            "n": frs.n,
            "rho": frac_str(frs.rho),
            "gamma": frs.gamma,
            "alphas": list(frs.alphas),
        },
    )


def load_frs(path) -> FoldedRSCode:
    rec = load_artifact(path)
    if rec["kind"] != "folded_rs":
        raise ConfigInvalid(f"not an FRS file: kind={rec.get('kind')}")
    field = field_from_payload(rec["field"])
    return FoldedRSCode(field, rec["b"], rec["n"], parse_frac(rec["rho"]), rec["alphas"])


# -- graphs --------------------------------------------------------------------


def save_graph(path, graph: BipartiteGraph) -> None:
    save_artifact(
        path,
        {
            "kind": "bipartite_graph",
            "version": FORMAT_VERSION,
            "n": graph.n,
            "d": graph.d,
            "left_adj": [list(row) for row in graph.left_adj],
            "lambda": graph.lam,
            "seed": graph.seed,
        },
    )


def load_graph(path) -> BipartiteGraph:
    rec = load_artifact(path)
    if rec["kind"] != "bipartite_graph":
        raise ConfigInvalid(f"not a graph file: kind={rec.get('kind')}")
    return BipartiteGraph(rec["n"], rec["d"], rec["left_adj"], seed=rec.get("seed"))


# -- AEL bundles ---------------------------------------------------------------


def save_bundle(path, graph_file: str, inner_file: str, outer_file: str) -> None:
    save_artifact(
        path,
        {
            "kind": "ael_bundle",
            "version": FORMAT_VERSION,
            "graph_file": str(graph_file),
            "inner_file": str(inner_file),
            "outer_file": str(outer_file),
            "phi": "lexicographic",
        },
    )


def load_bundle(path) -> AELCode:
    rec = load_artifact(path)
    if rec["kind"] != "ael_bundle":
        raise ConfigInvalid(f"not an AEL bundle: kind={rec.get('kind')}")
    base = Path(path).parent
    graph = load_graph(base / rec["graph_file"])
    inner = load_code(base / rec["inner_file"])
    outer = load_code(base / rec["outer_file"])
    return AELCode(graph, inner, outer)


# -- words ---------------------------------------------------------------------


def save_word(path, word) -> None:
    symbols = [None if sym is ERASED else list(sym) for sym in word]
    save_artifact(
        path, {"kind": "word", "version": FORMAT_VERSION, "symbols": symbols}
    )


def load_word(path) -> ErasedWord:
    rec = load_artifact(path)
    if rec["kind"] != "word":
        raise ConfigInvalid(f"not a word file: kind={rec.get('kind')}")
    return ErasedWord(
        tuple(ERASED if sym is None else tuple(sym) for sym in rec["symbols"])
    )


# -- certificates and reports ----------------------------------------------------


def save_certificate(path, cert: ARLDCertificate) -> None:
    payload = {
        "kind": "arld_certificate",
        "version": FORMAT_VERSION,
        "delta0": frac_str(cert.delta0),
        "k": cert.k,
        "eps_min": frac_str(cert.eps_min),
        "n": cert.n,
        "witness_indices": list(cert.witness_indices),
        "witness_center": _jsonable_symbols(cert.witness_center),
        "witness_disagreements": cert.witness_disagreements,
        "subsets_examined": cert.subsets_examined,
        "min_disagreements_by_size": {
            str(m): d for m, d in cert.min_disagreements_by_size.items()
        },
        "code_description": cert.code_description,
    }
    save_artifact(
        path, payload, header_extras={"runtime_seconds": f"{cert.runtime_seconds:.3f}"}
    )


def load_certificate(path) -> ARLDCertificate:
    rec = load_artifact(path)
    if rec["kind"] != "arld_certificate":
        raise ConfigInvalid(f"not a certificate: kind={rec.get('kind')}")
    return ARLDCertificate(
        delta0=parse_frac(rec["delta0"]),
        k=rec["k"],
        eps_min=parse_frac(rec["eps_min"]),
        n=rec["n"],
        witness_indices=tuple(rec["witness_indices"]),
        witness_center=_symbols_from_json(rec["witness_center"]),
        witness_disagreements=rec["witness_disagreements"],
        subsets_examined=rec["subsets_examined"],
        runtime_seconds=0.0,
        code_description=rec.get("code_description", ""),
        min_disagreements_by_size={
            int(m): d for m, d in rec.get("min_disagreements_by_size", {}).items()
        },
    )


def _jsonable_symbols(symbols):
    return [list(s) if isinstance(s, tuple) else s for s in symbols]


def _symbols_from_json(symbols):
    return tuple(tuple(s) if isinstance(s, list) else s for s in symbols)


def save_report(path, name: str, rows: list[dict], passed: bool, extra: dict | None = None) -> None:
    """Verification report: a named pass/fail plus CSV-ready rows.

    Each row: {instance, parameter, value, bound, margin, pass}.
    """
    payload = {
        "kind": "verification_report",
        "version": FORMAT_VERSION,
        "name": name,
        "passed": passed,
        "rows": rows,
    }
    if extra:
        payload["extra"] = extra
    save_artifact(path, payload)


CSV_HEADER = "instance,parameter,value,bound,margin,pass"


def report_csv_rows(report_paths) -> list[str]:
    lines = [CSV_HEADER]
    for p in sorted(str(x) for x in report_paths):
        rec = load_artifact(p)
        if rec.get("kind") != "verification_report":
            continue
        for row in rec["rows"]:
            lines.append(
                ",".join(
                    str(row.get(col, ""))
                    for col in ("instance", "parameter", "value", "bound", "margin", "pass")
                )
            )
    return lines
