"""Verification campaigns.  Each returns a CampaignReport whose ``violations``
list must be empty; the CLI turns a non-empty list into exit code 1."""

from __future__ import annotations

import os
import time
from collections import Counter
from dataclasses import dataclass, field
from multiprocessing import Pool
from pathlib import Path

from .. import atlas
from ..coloring import ceil_3w_2, characterize_excess, color_gk, color_master, validate_trace
from ..errors import InputError, ParagliderError
from ..graph import Graph, component_masks, from_graph6, subgraph_mask, to_graph6, to_json_dict
from ..oracle import chromatic_number, clique_number, independence_number, induced_tables, verify_coloring
from ..patterns import is_p5_paraglider_free, iter_c5
from ..structure import (
    c5_partition,
    find_comparable_pair,
    find_universal,
    is_atom,
    is_awesome,
    is_dominating,
    structure_outcome,
    validate_partition_properties,
)

CORPUS_ENV = "CHROMA_CORPUS_DIR"
STREAM_N_MAX = 10


@dataclass
class CampaignReport:
    name: str
    records: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def fingerprint(self) -> dict:
        """Everything except timings; equal for equal inputs whatever the job count."""
        recs = [{k: v for k, v in r.items() if k != "seconds"} for r in self.records]
        return {"name": self.name, "records": recs, "summary": self.summary, "violations": self.violations}

    def to_json(self) -> dict:
        return {**self.fingerprint(), "records": self.records, "seconds": round(self.seconds, 3), "ok": self.ok}

    def to_text(self, columns: list[str] | None = None) -> str:
        lines = [f"### campaign {self.name}"]
        lines += [f"{k}: {v}" for k, v in self.summary.items()]
        if self.records:
            cols = columns or list(self.records[0])
            lines.append("### records")
            lines.append("\t".join(cols))
            for r in self.records:
                lines.append("\t".join(str(r.get(c, "")) for c in cols))
        lines.append("### violations")
        lines += self.violations or ["none"]
        lines.append(f"### end {self.name} ({'ok' if self.ok else 'FAIL'}, {self.seconds:.2f}s)")
        return "\n".join(lines)


# inputs -------------------------------------------------------------------------------

def resolve_graph(spec: str, line: int | None = None) -> tuple[str, Graph]:
    """``atlas:<tag>`` or a graph6 string."""
    spec = spec.strip()
    if spec.startswith("atlas:"):
        return spec, atlas.make_named(spec[6:])
    return spec, from_graph6(spec, line)


def corpus_dir() -> Path:
    env = os.environ.get(CORPUS_ENV)
    if env:
        return Path(env)
    return Path(__file__).resolve().parents[3] / "tests" / "fixtures" / "corpus"


def corpus_lines(n_max: int) -> list[str]:
    """The vendored exhaustive corpus for ``1 <= n <= n_max``."""
    root = corpus_dir()
    out = []
    for n in range(1, n_max + 1):
        path = root / f"graphs{n}.g6"
        if not path.exists():
            raise InputError(f"no corpus file {path} (set {CORPUS_ENV})")
        out += [ln.strip() for ln in path.read_text().splitlines() if ln.strip()]
    return out


def _timed(fn, *args):
    t = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t


# check / color --------------------------------------------------------------------------

def _outcome_json(G: Graph) -> list[dict]:
    out = []
    for c in component_masks(G):
        sub, back = subgraph_mask(G, c)
        o = structure_outcome(sub, check=False)
        out.append({"vertices": back, **o.to_json()})
    return out


def cmd_check(inputs: list[str]) -> CampaignReport:
    rep = CampaignReport("check")
    t0 = time.perf_counter()
    for spec in inputs:
        name, G = resolve_graph(spec)
        ok, emb = is_p5_paraglider_free(G)
        rec = {"input": name, "n": G.n, "member": ok}
        if ok:
            try:
                outs = _outcome_json(G)
            except ParagliderError as e:
                rep.violations.append(f"{name}: {e}")
                outs = []
            rec["outcome"] = "+".join(o["tag"] for o in outs)
            rec["certificates"] = outs
        else:
            rec["outcome"] = "-"
            rec["certificate"] = str(emb)
            rec["certificates"] = [{"pattern": emb.pattern, "vertices": list(emb.vertices)}]
        rep.records.append(rec)
    rep.summary = {"graphs": len(rep.records), "members": sum(r["member"] for r in rep.records)}
    rep.seconds = time.perf_counter() - t0
    return rep


def cmd_color(inputs: list[str], emit_trace: bool = False) -> CampaignReport:
    """Certified colouring of every input; raises CertificateError on a non-member."""
    rep = CampaignReport("color")
    t0 = time.perf_counter()
    for spec in inputs:
        name, G = resolve_graph(spec)
        cc, secs = _timed(color_master, G)
        problems = validate_trace(G, cc)
        rep.violations += [f"{name}: {p}" for p in problems]
        rec = {"input": name, "n": G.n, "omega": cc.omega, "k": cc.k, "bound": cc.bound,
               "colors": list(cc.coloring.colors), "seconds": round(secs, 4)}
        if emit_trace:
            rec["trace"] = cc.trace
        rep.records.append(rec)
    rep.summary = {"graphs": len(rep.records), "max_k_over_bound": max((r["k"] / r["bound"] for r in rep.records), default=0)}
    rep.seconds = time.perf_counter() - t0
    return rep


# the base-graph verification --------------------------------------------------------------

def cmd_verify_base() -> CampaignReport:
    """Every vertex subset of the Clebsch complement: which ones need more than 3w/2 colours."""
    rep = CampaignReport("verify-base")
    t0 = time.perf_counter()
    H = atlas.clebsch_complement()
    for tag in ("clebsch_complement", "clebsch_complement_minus_vertex"):
        good, K = is_awesome(atlas.make_named(tag))
        rep.records.append({"item": f"awesome {tag}", "value": good})
        if not good:
            rep.violations.append(f"{tag} is not awesome (clique {sorted(K)})")
    omega, chi = induced_tables(H)
    counts = Counter()
    strict = Counter()
    for S in range(1, 1 << H.n):
        n, w, c = S.bit_count(), int(omega[S]), int(chi[S])
        counts[(n, w, c)] += 1
        if 2 * c > 3 * w:
            strict[n] += 1
    for (n, w, c), cnt in sorted(counts.items()):
        rep.records.append({"item": f"n={n} omega={w} chi={c}", "value": cnt})
    rep.summary = {
        "subsets": (1 << H.n) - 1,
        "strict_subsets": sum(strict.values()),
        "strict_by_size": dict(sorted(strict.items())),
        "chi_full": int(chi[H.full_mask]),
        "omega_full": int(omega[H.full_mask]),
    }
    if dict(strict) != {16: 1, 15: 16}:
        rep.violations.append(f"strict subsets by size {dict(strict)} != {{16: 1, 15: 16}}")
    rep.seconds = time.perf_counter() - t0
    return rep


# sweep -----------------------------------------------------------------------------------

def check_graph(G: Graph) -> tuple[dict, list[str]]:
    """All per-graph checks of the sweep for a free graph."""
    bad = []
    w = clique_number(G)[0]
    chi, _ = chromatic_number(G)
    bound = ceil_3w_2(w)
    if chi > bound or G.n < 15 and 2 * chi > 3 * w:
        bad.append(f"chi {chi} over the bound for omega {w}")
    cc = color_master(G)
    if cc.k > bound:
        bad.append(f"colouring uses {cc.k} > {bound}")
    bad += validate_trace(G, cc)
    tags = []
    for c in component_masks(G):
        sub, _ = subgraph_mask(G, c)
        tags.append(structure_outcome(sub, check=False).tag)
        structure_outcome(sub, small_atom_cutoff=0, check=False)
        if find_universal(sub) is None and find_comparable_pair(sub) is None and is_atom(sub):
            for C in iter_c5(sub):
                if not is_dominating(sub, C):
                    bad.append(f"C5 {C} is not dominating")
                bad += [f"C5 {C}: {v}" for v in validate_partition_properties(sub, c5_partition(sub, C))]
    flagged, _ = characterize_excess(G)
    if flagged and G.n < 15:
        bad.append("flagged as an excess graph")
    rec = {"n": G.n, "omega": w, "chi": chi, "k": cc.k, "bound": bound, "outcome": "+".join(tags)}
    return rec, bad


def _sweep_item(item) -> tuple[dict, list[str]]:
    lineno, text, n_max = item
    rec = {"line": lineno, "graph6": text}
    t = time.perf_counter()
    try:
        G = from_graph6(text, lineno)
        if G.n > n_max:
            rec["status"] = "too_large"
            return rec, []
        if not is_p5_paraglider_free(G)[0]:
            rec["status"] = "non_member"
            return rec, []
        fields, bad = check_graph(G)
        rec.update(fields, status="member")
    except InputError as e:
        rec["status"] = "parse_error"
        bad = [f"line {lineno}: {e}"]
    except Exception as e:  # isolate the failure to this line
        rec["status"] = "error"
        bad = [f"line {lineno}: {type(e).__name__}: {e}"]
    rec["seconds"] = round(time.perf_counter() - t, 4)
    return rec, [b if b.startswith("line ") else f"line {lineno} ({text}): {b}" for b in bad]


def _record(line: str) -> str:
    # a bare header line carries no graph
    return line.strip().removeprefix(">>graph6<<")


def cmd_sweep(lines, n_max: int = 8, jobs: int = 1) -> CampaignReport:
    """Check every (P5, paraglider)-free graph of a graph6 stream; results in input order."""
    if not 1 <= n_max <= STREAM_N_MAX:
        raise InputError(f"--n-max must be between 1 and {STREAM_N_MAX}")
    items = [(i, ln.strip(), n_max) for i, ln in enumerate(lines, 1) if _record(ln)]
    return _run_sweep("sweep", items, jobs)


def cmd_sweep_random(count: int, n_max: int = 12, seed: int = 0, jobs: int = 1) -> CampaignReport:
    """The sweep checks on seeded random free graphs with ``5 <= n <= n_max``."""
    if not 5 <= n_max <= 24:
        raise InputError("random sweeps support 5 <= n_max <= 24")
    items = []
    for i in range(count):
        n = 5 + (seed + i) % (n_max - 4)
        G = atlas.sample_free_graph(n, 0.3 + 0.5 * ((seed * 7 + i) % 11) / 10, seed * 100003 + i)
        items.append((i + 1, to_graph6(G), 24))
    return _run_sweep("sweep-random", items, jobs)


def _run_sweep(name: str, items, jobs: int) -> CampaignReport:
    rep = CampaignReport(name)
    t0 = time.perf_counter()
    if jobs > 1:
        with Pool(jobs) as pool:
            results = pool.map(_sweep_item, items, chunksize=max(1, len(items) // (8 * jobs)))
    else:
        results = [_sweep_item(it) for it in items]
    status = Counter()
    outcomes = Counter()
    ratio = 0.0
    for rec, bad in results:
        rep.records.append(rec)
        rep.violations += bad
        status[rec["status"]] += 1
        if rec["status"] == "member":
            outcomes.update(rec["outcome"].split("+"))
            ratio = max(ratio, rec["chi"] / rec["omega"])
    rep.summary = {
        "lines": len(items),
        **{k: status[k] for k in ("member", "non_member", "too_large", "parse_error", "error")},
        "max_chi_over_omega": round(ratio, 4),
        "outcomes": dict(sorted(outcomes.items())),
    }
    rep.seconds = time.perf_counter() - t0
    return rep


# tightness family --------------------------------------------------------------------------

def cmd_family(k_max: int, oracle_max: int = 7) -> CampaignReport:
    if k_max < 2:
        raise InputError("k_max must be at least 2")
    rep = CampaignReport("family")
    t0 = time.perf_counter()
    for k in range(2, k_max + 1):
        G = atlas.make_gk(k)
        w = clique_number(G)[0]
        scheme = color_gk(k)
        if not verify_coloring(G, scheme) or scheme.k != -(-3 * k // 2):
            rep.violations.append(f"k={k}: scheme gives {scheme.k} colours")
        chi = chromatic_number(G, lower=scheme.k - 1)[0] if k <= oracle_max else None
        bound = ceil_3w_2(w)
        if chi is not None and k % 2 and chi != 3 * (k // 2) + 2:
            rep.violations.append(f"k={k}: chi {chi} != {3 * (k // 2) + 2}")
        rep.records.append({
            "k": k, "n": G.n, "omega": w, "alpha": independence_number(G)[0], "scheme": scheme.k,
            "chi": "-" if chi is None else chi, "bound": bound, "gap": bound - (scheme.k if chi is None else chi),
        })
    rep.summary = {"k_max": k_max, "oracle_max": oracle_max}
    rep.seconds = time.perf_counter() - t0
    return rep


def atlas_dump(tags: list[str] | None = None) -> list[dict]:
    """graph6 and JSON adjacency of named graphs (all of them by default)."""
    tags = tags or [t for t in atlas.NAMED_TAGS if t not in ("Gstar_placeholder", "G_k")]
    out = []
    for t in tags:
        G = atlas.make_named(t)
        out.append({"tag": t, "graph6": to_graph6(G), **to_json_dict(G)})
    return out
