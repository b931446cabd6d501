"""Byte-stable TSV/JSON emitters for the main tables."""
from __future__ import annotations

import json

from . import fock, qseries
from .fusion import EvaluationParams, build_filtration
from .tableaux import partitions_in_box

KINDS = ("maj-dist", "kostka-foulkes", "graded-char", "q-binomial", "gensegal-matrix")


class UsageError(ValueError):
    """Invalid parameters for a table; ``flag`` names the offending option."""

    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


def _require_even(N):
    if N is None:
        raise UsageError("--N", "required")
    if N < 2 or N % 2:
        raise UsageError("--N", f"must be a positive even integer, got {N}")


def _require_k(k, low=0):
    if k is None:
        raise UsageError("--k", "required")
    if k < low:
        raise UsageError("--k", f"must be at least {low}, got {k}")


def _shapes(N):
    n = N // 2
    return [(n + k, n - k) for k in range(n, -1, -1)]


def _poly_rows(N, fn, fmt):
    rows = [(shape, fn(shape)) for shape in _shapes(N)]
    if fmt == "json":
        return json.dumps([{"shape": list(s), "coefficients": [str(c) for c in p.coeffs]} for s, p in rows],
                          indent=2) + "\n"
    return "shape\tqpoly\n" + "".join(f"{','.join(map(str, s))}\t{p.to_json()}\n" for s, p in rows)


def emit_table(kind: str, *, N=None, k=None, z_points="consecutive", fmt=None) -> str:
    if kind not in KINDS:
        raise UsageError("kind", f"must be one of {', '.join(KINDS)}")
    if kind == "maj-dist":
        _require_even(N)
        return _poly_rows(N, qseries.maj_gf, fmt or "tsv")
    if kind == "kostka-foulkes":
        _require_even(N)
        return _poly_rows(N, lambda s: qseries.kostka_foulkes_column(s, N), fmt or "tsv")
    if kind == "graded-char":
        _require_even(N)
        if N > 12:
            raise UsageError("--N", "graded-char is limited to N <= 12")
        try:
            z = EvaluationParams.named(z_points, N)
        except ValueError as exc:
            raise UsageError("--z-points", str(exc)) from None
        table = build_filtration(N, z)
        if (fmt or "tsv") == "json":
            return json.dumps([{"degree": d, "weight": w, "dimension": n} for d, w, n in table.entries()],
                              indent=2) + "\n"
        return table.to_tsv()
    if kind == "q-binomial":
        _require_k(k)
        return qseries.gauss_binomial(2 * k, k).to_json() + "\n"
    # gensegal-matrix
    _require_k(k, low=1)
    out = []
    for nu in partitions_in_box(k, k):
        out.append({
            "nu": list(nu),
            "terms": [{"mu": list(mu), "weight": str(wt), "word": list(word.indices)}
                      for mu, wt, word in fock.gensegal_terms(nu, k)],
        })
    return json.dumps({"k": k, "sign": fock.rectangular_sign(k), "rows": out}, indent=2) + "\n"
