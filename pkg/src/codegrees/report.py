"""The verification pipeline: per-group records, suite aggregation, JSON output.

For every group in a manifest the runner computes the character table,
codegree sets, prime graphs, the classification certificate, and the
oracle battery, then aggregates pass/fail tallies.  Records appear in
manifest order and contain only deterministic data, so two runs over the
same manifest produce byte-identical reports.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .chartable import (
    character_table,
    check_column_orthogonality,
    check_degree_squares,
    check_row_orthogonality,
)
from .classify import (
    BRANCH_NOT_STAR,
    classify,
    oracle_abelian_kernel_divisibility,
    oracle_direct_product_scaling,
    oracle_nq_count,
    oracle_solvability,
    oracle_subnormal_divisibility,
    oracle_sylow_frobenius_action,
)
from .codegree import cod_relative, cod_set, prime_graph
from .constructions import GroupSpec, build_from_spec, lemma_nil_prime, spec_to_line
from .groups import (
    DEFAULT_ORDER_BOUND,
    GroupError,
    as_group,
    derived_subgroup,
    is_normal,
    normal_subgroups,
    prime_factors,
    subgroup_centralizer,
)
from .structure import is_elementary_abelian

LEMMA_SWEEP_MAX_ORDER = 200


def _graph_summary(values) -> dict:
    g = prime_graph(values)
    return {
        "vertices": list(g.vertices),
        "edges": [list(e) for e in g.edges],
        "component_count": g.component_count,
        "components": [list(c) for c in g.components],
    }


def _certificate_dict(cert) -> dict:
    out = {
        "is_star": cert.is_star,
        "branch": cert.branch,
        "cod_nonlinear": list(cert.cod_nonlinear),
    }
    if cert.not_star_reason is not None:
        out["not_star_reason"] = cert.not_star_reason
    if cert.noncoprime_pair is not None:
        out["noncoprime_pair"] = list(cert.noncoprime_pair)
    if cert.frobenius_witness is not None:
        out["frobenius_witness"] = {"p": cert.frobenius_witness[0],
                                    "k": cert.frobenius_witness[1]}
    if cert.two_frobenius_witness is not None:
        out["two_frobenius_witness"] = dict(cert.two_frobenius_witness)
    out["failure_reason"] = cert.failure_reason
    return out


def run_group(spec: GroupSpec, bound: int = DEFAULT_ORDER_BOUND) -> dict:
    """The full pipeline for one manifest entry; failures become record data."""
    record: dict = {"name": spec.name, "spec": spec_to_line(spec)}
    try:
        G = build_from_spec(spec, bound=bound)
    except (GroupError, OSError, ValueError) as exc:
        record["error"] = f"{type(exc).__name__}: {exc}"
        record["ok"] = False
        return record

    record["order"] = G.order
    record["num_classes"] = len(G.classes)
    record["exponent"] = G.exponent()

    T = character_table(G)
    D = derived_subgroup(G)
    record["degrees"] = sorted(T.degrees)
    record["derived_order"] = D.order

    cods = cod_set(T)
    record["cod"] = list(cods)
    record["graph"] = _graph_summary(cods)
    if D.order > 1:
        rel = cod_relative(T, D)
        record["cod_gprime"] = list(rel)
        record["graph_gprime"] = _graph_summary(rel)
    else:
        record["cod_gprime"] = []
        record["graph_gprime"] = None

    table_checks = {
        "degree_squares": check_degree_squares(T),
        "row_orthogonality": check_row_orthogonality(T),
        "column_orthogonality": check_column_orthogonality(T),
        "linear_count": T.linear_row_count() == G.order // D.order,
        "kernels_normal": all(is_normal(G, k) for k in T.kernels),
    }
    record["table_checks"] = table_checks

    cert = classify(G, T)
    record["certificate"] = _certificate_dict(cert)

    oracles: dict = {}
    sylow_results = oracle_sylow_frobenius_action(T, D)
    oracles["sylow_frobenius_action"] = [
        {"prime": p, "ok": ok} for p, ok in sylow_results]
    oracles["solvability"] = oracle_solvability(T, D)

    normals = normal_subgroups(G)
    nq_results = []
    for M in normals:
        if not M.minimal_normal:
            continue
        flag, _, _ = is_elementary_abelian(M)
        if not flag:
            continue
        index = G.order // subgroup_centralizer(G, M).order
        for q in prime_factors(G.order):
            if index % q:
                continue
            nq_results.append({"module_order": M.order, "q": q,
                               "result": oracle_nq_count(G, M, q)})
    oracles["nq_counting"] = nq_results

    if G.order <= LEMMA_SWEEP_MAX_ORDER:
        sub_viol = 0
        for M in normals:
            if not 1 < M.order < G.order:
                continue
            T_M = character_table(as_group(M))
            sub_viol += len(oracle_subnormal_divisibility(T, M, T_M))
        oracles["subnormal_divisibility_violations"] = sub_viol
        oracles["abelian_kernel_violations"] = len(
            oracle_abelian_kernel_divisibility(T, normals))
    else:
        oracles["subnormal_divisibility_violations"] = None
        oracles["abelian_kernel_violations"] = None

    nil_p = lemma_nil_prime(spec)
    if nil_p is not None and G.order % (nil_p * nil_p) and D.order > 1:
        oracles["direct_product_scaling"] = oracle_direct_product_scaling(T, nil_p, D)
    record["oracles"] = oracles

    ok = (
        all(table_checks.values())
        and cert.failure_reason is None
        and all(x["ok"] for x in oracles["sylow_frobenius_action"])
        and oracles["solvability"]
        and all(x["result"] != "fail" for x in nq_results)
        and not oracles["subnormal_divisibility_violations"]
        and not oracles["abelian_kernel_violations"]
        and oracles.get("direct_product_scaling", True)
    )
    record["ok"] = bool(ok)
    return record


@dataclass
class RunReport:
    records: list[dict]
    summary: dict

    def to_json(self) -> str:
        return json.dumps({"groups": self.records, "summary": self.summary},
                          indent=2, ensure_ascii=False, default=_json_default) + "\n"

    @property
    def all_ok(self) -> bool:
        return self.summary["failed"] == 0


def _json_default(obj):
    if isinstance(obj, int) and abs(obj) > 2 ** 53:
        return str(obj)
    raise TypeError(f"not JSON serializable: {type(obj)}")


def _summarize(records: list[dict]) -> dict:
    failed = [r["name"] for r in records if not r["ok"]]
    star = [r["name"] for r in records
            if r.get("certificate", {}).get("is_star")]
    violations = [r["name"] for r in records
                  if r.get("certificate", {}).get("failure_reason")]
    build_errors = [r["name"] for r in records if "error" in r]
    return {
        "groups": len(records),
        "passed": len(records) - len(failed),
        "failed": len(failed),
        "failed_names": failed,
        "star_groups": star,
        "theorem_violations": violations,
        "build_errors": build_errors,
    }


def _run_group_args(args) -> dict:
    spec, bound = args
    return run_group(spec, bound)


def run_suite(manifest: list[GroupSpec], jobs: int = 1,
              bound: int = DEFAULT_ORDER_BOUND) -> RunReport:
    """Run the pipeline over a manifest; records stay in manifest order."""
    if not manifest:
        raise ValueError("manifest must contain at least one group spec")
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_run_group_args, [(s, bound) for s in manifest]))
    else:
        records = [run_group(s, bound) for s in manifest]
    return RunReport(records=records, summary=_summarize(records))
