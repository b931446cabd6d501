"""Named verification checks, one per identity, and the suite runner."""
from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from math import comb

from . import fock, qseries, tableaux
from .fusion import EvaluationParams, build_filtration, multiplicity_qcharacters_from_table, verify_theorem1
from .qseries import QPoly
from .reports import CheckReport, timed

# default bounds reproduce the acceptance thresholds
DEFAULT_BOUNDS = {
    "theorem1": {"n_max": 10},
    "charge-maj-complement": {"n_max": 12},
    "qhook-oracle": {"n_max": 14},
    "embedding-maj": {"n_max": 12},
    "embedding-stability": {"n_max": 12},
    "principal-r": {"k_max": 6},
    "qbinomial-level": {"k_max": 8},
    "partition-stabilization": {"k_max": 8},
    "rectangular": {"k_max": 4},
    "gensegal": {"k_max": 3},
    "ebasis-span": {"k_max": 4},
    "virasoro-commutator": {"k_max": 4, "degree_max": 8},
    "singular-vector": {"k_max": 4},
    "heisenberg-ccr": {"k_max": 4, "degree_max": 8},
    "heisenberg-adjoint": {"k_max": 4, "degree_max": 8},
    "schur-weyl-dimension": {"n_max": 14},
    "fusion-z-independence": {"n_max": 8},
    "l0-spectrum": {"k_max": 4},
}


@dataclass
class SuiteConfig:
    n_max: int | None = None
    k_max: int | None = None
    degree_max: int | None = None
    z_points: str = "consecutive"
    jobs: int = 1
    out: str | None = None
    format: str = "json"
    only: list = field(default_factory=list)

    def __post_init__(self):
        for name in ("n_max", "k_max", "degree_max"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise ValueError(f"--{name.replace('_', '-')} must be positive, got {v}")
        if self.jobs < 1:
            raise ValueError("--jobs must be positive")
        if self.z_points not in ("consecutive", "geometric"):
            raise ValueError(f"--z-points must be consecutive or geometric, got {self.z_points!r}")
        if self.format not in ("json", "tsv"):
            raise ValueError(f"--format must be json or tsv, got {self.format!r}")
        unknown = [c for c in self.only if c not in CHECKS]
        if unknown:
            raise ValueError(f"unknown check(s): {', '.join(unknown)}")

    @classmethod
    def from_mapping(cls, data: dict) -> "SuiteConfig":
        names = {f.name for f in fields(cls)}
        kwargs = {}
        for key, value in data.items():
            attr = key.replace("-", "_")
            if attr not in names:
                raise ValueError(f"unknown configuration key {key!r}")
            kwargs[attr] = value
        return cls(**kwargs)

    def bound(self, check: str, name: str) -> int:
        default = DEFAULT_BOUNDS[check][name]
        cap = getattr(self, name)
        return default if cap is None else min(default, cap)

    def to_dict(self) -> dict:
        return asdict(self)


def _even_upto(n_max: int):
    return range(2, n_max + 1, 2)


def _poly(p: QPoly) -> list:
    return [str(c) for c in p.coeffs]


def _sweep(name: str, params: dict, subreports) -> CheckReport:
    """Fold per-instance reports into one; the first failure becomes the witness."""
    report = CheckReport(name, params)
    with timed(report):
        count = 0
        for sub in subreports:
            count += 1
            if not sub.passed:
                report.status = "fail"
                report.witness = sub.to_dict(timing=False)
                break
        report.params["instances"] = count
    return report


def check_theorem1(cfg: SuiteConfig) -> CheckReport:
    n_max = cfg.bound("theorem1", "n_max")
    params = {"n_max": n_max, "z": [cfg.z_points, "geometric" if cfg.z_points == "consecutive" else "consecutive"]}

    def instances():
        for N in _even_upto(n_max):
            rep = verify_theorem1(N, tuple(params["z"]))
            if rep.passed:
                for k in range(N // 2 + 1):
                    via_kedem = qseries.multiplicity_qcharacter(k, N)
                    expected = qseries.maj_gf((N // 2 + k, N // 2 - k))
                    if via_kedem != expected:
                        rep = CheckReport("theorem1", {"N": N, "k": k}, "fail",
                                          {"kostka_foulkes_reflected": _poly(via_kedem), "maj": _poly(expected)})
                        break
            yield rep

    return _sweep("theorem1", params, instances())


def _tableaux_upto(n_max: int, even_only: bool = False):
    for N in range(1, n_max + 1):
        if even_only and N % 2:
            continue
        yield from tableaux.all_two_row_syt(N)


def check_charge_maj(cfg: SuiteConfig) -> CheckReport:
    n_max = cfg.bound("charge-maj-complement", "n_max")
    report = CheckReport("charge-maj-complement", {"n_max": n_max})
    with timed(report):
        checked = 0
        for tau in _tableaux_upto(n_max):
            checked += 1
            N = tau.N
            if tableaux.maj(tau) + tableaux.charge(tau) != N * (N - 1) // 2:
                report.status = "fail"
                report.witness = {"row1": list(tau.row1), "row2": list(tau.row2),
                                  "maj": tableaux.maj(tau), "charge": tableaux.charge(tau)}
                break
        report.params["tableaux"] = checked
    return report


def check_qhook(cfg: SuiteConfig) -> CheckReport:
    n_max = cfg.bound("qhook-oracle", "n_max")
    report = CheckReport("qhook-oracle", {"n_max": n_max})
    with timed(report):
        for N in range(1, n_max + 1):
            for second in range(N // 2 + 1):
                shape = (N - second, second)
                a, b = qseries.maj_gf(shape), qseries.qhook_maj_gf(shape)
                if a != b:
                    report.status = "fail"
                    report.witness = {"shape": list(shape), "enumerated": _poly(a), "hook_formula": _poly(b)}
                    return report
    return report


def check_embedding_maj(cfg: SuiteConfig) -> CheckReport:
    n_max = cfg.bound("embedding-maj", "n_max")
    report = CheckReport("embedding-maj", {"n_max": n_max})
    with timed(report):
        for tau in _tableaux_upto(n_max):
            up = tableaux.embed(tau)
            ok = tableaux.maj(up) == tableaux.maj(tau) + tau.N + 1 and (
                tau.N % 2 or up.k == tau.k)
            if not ok:
                report.status = "fail"
                report.witness = {"row1": list(tau.row1), "row2": list(tau.row2)}
                break
    return report


def check_embedding_stability(cfg: SuiteConfig) -> CheckReport:
    n_max = cfg.bound("embedding-stability", "n_max")
    report = CheckReport("embedding-stability", {"n_max": n_max})
    with timed(report):
        for tau in _tableaux_upto(n_max, even_only=True):
            if tableaux.stable_major_index(tableaux.embed(tau)) != tableaux.stable_major_index(tau):
                report.status = "fail"
                report.witness = {"row1": list(tau.row1), "row2": list(tau.row2)}
                break
    return report


def check_principal_r(cfg: SuiteConfig) -> CheckReport:
    k_max = cfg.bound("principal-r", "k_max")
    report = CheckReport("principal-r", {"k_max": k_max})
    with timed(report):
        for k in range(k_max + 1):
            for length in range(max(2 * k, 2), 2 * k + 9, 2):
                t = tableaux.StableTableau(tableaux.principal_tableau(k, length))
                if tableaux.stable_major_index(t) != k * k:
                    report.status = "fail"
                    report.witness = {"k": k, "length": length, "r": tableaux.stable_major_index(t)}
                    return report
    return report


def level_gf(K: int) -> QPoly:
    return QPoly.from_exponents(tableaux.stable_major_index(t) for t in tableaux.enumerate_level(K))


def check_qbinomial_level(cfg: SuiteConfig) -> CheckReport:
    k_max = cfg.bound("qbinomial-level", "k_max")
    report = CheckReport("qbinomial-level", {"k_max": k_max})
    with timed(report):
        for K in range(1, k_max + 1):
            level = tableaux.enumerate_level(K)
            gf, gb, box = level_gf(K), qseries.gauss_binomial(2 * K, K), qseries.box_partition_gf(K)
            if len(level) != comb(2 * K, K) or not gf == gb == box:
                report.status = "fail"
                report.witness = {"K": K, "size": len(level), "level": _poly(gf),
                                  "gauss": _poly(gb), "box": _poly(box)}
                break
    return report


def check_partition_stabilization(cfg: SuiteConfig) -> CheckReport:
    K = cfg.bound("partition-stabilization", "k_max")
    report = CheckReport("partition-stabilization", {"K": K})
    with timed(report):
        gf = level_gf(K)
        bad = [d for d in range(K + 1) if gf[d] != tableaux.partition_count(d)]
        if bad:
            report.status = "fail"
            report.witness = {"degrees": bad, "level": _poly(gf)}
    return report


def check_rectangular(cfg: SuiteConfig) -> CheckReport:
    k_max = cfg.bound("rectangular", "k_max")
    return _sweep("rectangular", {"k_max": k_max},
                  (fock.verify_rectangular(k, m) for k in range(1, k_max + 1) for m in range(k + 1)))


def check_gensegal(cfg: SuiteConfig) -> CheckReport:
    k_max = cfg.bound("gensegal", "k_max")
    return _sweep("gensegal", {"k_max": k_max},
                  (fock.gensegal_check(nu, k) for k in range(1, k_max + 1)
                   for nu in tableaux.partitions_in_box(k, k)))


def check_span(cfg: SuiteConfig) -> CheckReport:
    k_max = cfg.bound("ebasis-span", "k_max")
    return _sweep("ebasis-span", {"n_max": k_max}, (fock.span_check(n) for n in range(1, k_max + 1)))


def check_virasoro(cfg: SuiteConfig) -> CheckReport:
    k_max = cfg.bound("virasoro-commutator", "k_max")
    d = cfg.bound("virasoro-commutator", "degree_max")
    rng = range(-k_max, k_max + 1)
    return _sweep("virasoro-commutator", {"abs_max": k_max, "degree_max": d},
                  (fock.virasoro_commutator_check(m, n, d) for m in rng for n in rng))


def check_singular(cfg: SuiteConfig) -> CheckReport:
    k_max = cfg.bound("singular-vector", "k_max")
    return _sweep("singular-vector", {"k_max": k_max},
                  (fock.singular_vector_check(k, maxn=4) for k in range(1, k_max + 1)))


def check_ccr(cfg: SuiteConfig) -> CheckReport:
    k_max = cfg.bound("heisenberg-ccr", "k_max")
    d = cfg.bound("heisenberg-ccr", "degree_max")
    return _sweep("heisenberg-ccr", {"nm_max": k_max, "degree_max": d},
                  (fock.heisenberg_ccr_check(n, m, d) for n in range(1, k_max + 1) for m in range(1, k_max + 1)))


def check_adjoint(cfg: SuiteConfig) -> CheckReport:
    k_max = cfg.bound("heisenberg-adjoint", "k_max")
    d = cfg.bound("heisenberg-adjoint", "degree_max")
    return _sweep("heisenberg-adjoint", {"n_max": k_max, "degree_max": d},
                  (fock.adjointness_check(n, d) for n in range(1, k_max + 1)))


def check_schur_weyl(cfg: SuiteConfig) -> CheckReport:
    n_max = cfg.bound("schur-weyl-dimension", "n_max")
    report = CheckReport("schur-weyl-dimension", {"n_max": n_max})
    with timed(report):
        for N in _even_upto(n_max):
            total = sum((2 * k + 1) * len(tableaux.enumerate_syt(N, k)) for k in range(N // 2 + 1))
            if total != 2 ** N:
                report.status = "fail"
                report.witness = {"N": N, "sum": total}
                break
    return report


def check_z_independence(cfg: SuiteConfig) -> CheckReport:
    n_max = cfg.bound("fusion-z-independence", "n_max")
    report = CheckReport("fusion-z-independence", {"n_max": n_max, "z": ["consecutive", "geometric"]})
    with timed(report):
        for N in _even_upto(n_max):
            a = build_filtration(N, EvaluationParams.consecutive(N))
            b = build_filtration(N, EvaluationParams.geometric(N))
            if a != b:
                report.status = "fail"
                report.witness = {"N": N, "consecutive": a.to_tsv(), "geometric": b.to_tsv()}
                break
    return report


def check_l0_spectrum(cfg: SuiteConfig) -> CheckReport:
    k_max = cfg.bound("l0-spectrum", "k_max")
    report = CheckReport("l0-spectrum", {"k_max": k_max})
    with timed(report):
        for K in range(1, k_max + 1):
            r_values = Counter(tableaux.stable_major_index(t) for t in tableaux.enumerate_level(K))
            spectrum = Counter({v: m for v, m in fock.l0_spectrum(K).items() if m})
            if r_values != spectrum:
                report.status = "fail"
                report.witness = {"K": K, "stable_major_index": dict(sorted(r_values.items())),
                                  "l0": dict(sorted(spectrum.items()))}
                break
    return report


CHECKS = {
    "theorem1": check_theorem1,
    "charge-maj-complement": check_charge_maj,
    "qhook-oracle": check_qhook,
    "embedding-maj": check_embedding_maj,
    "embedding-stability": check_embedding_stability,
    "principal-r": check_principal_r,
    "qbinomial-level": check_qbinomial_level,
    "partition-stabilization": check_partition_stabilization,
    "rectangular": check_rectangular,
    "gensegal": check_gensegal,
    "ebasis-span": check_span,
    "virasoro-commutator": check_virasoro,
    "singular-vector": check_singular,
    "heisenberg-ccr": check_ccr,
    "heisenberg-adjoint": check_adjoint,
    "schur-weyl-dimension": check_schur_weyl,
    "fusion-z-independence": check_z_independence,
    "l0-spectrum": check_l0_spectrum,
}


def run_check(name: str, cfg: SuiteConfig) -> CheckReport:
    return CHECKS[name](cfg)


def run_suite(cfg: SuiteConfig, checks: dict | None = None) -> list[CheckReport]:
    """Run every registered check (or ``cfg.only``) and return reports sorted by name."""
    registry = CHECKS if checks is None else checks
    names = sorted(cfg.only or registry)
    if cfg.jobs > 1 and checks is None:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            reports = list(pool.map(run_check, names, [cfg] * len(names)))
    else:
        reports = [registry[name](cfg) for name in names]
    return sorted(reports, key=CheckReport.sort_key)


def reports_document(reports) -> str:
    """Deterministic serialisation (no wall times)."""
    return json.dumps([r.to_dict(timing=False) for r in reports], indent=2, sort_keys=True) + "\n"


def timings_document(reports) -> str:
    return json.dumps([{"check": r.check, "params": r.params, "ms": round(r.ms, 3)} for r in reports],
                      indent=2, sort_keys=True) + "\n"


def reports_tsv(reports) -> str:
    lines = ["check\tparams\tstatus\twitness"]
    for r in reports:
        witness = "" if r.witness is None else json.dumps(r.witness, sort_keys=True)
        lines.append(f"{r.check}\t{json.dumps(r.params, sort_keys=True)}\t{r.status}\t{witness}")
    return "\n".join(lines) + "\n"
