"""Figures written next to a campaign's text report."""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .campaigns import CampaignReport  # noqa: E402


def _save(fig, out_dir: Path, name: str) -> Path:
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"{name}.png"
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_family(rep: CampaignReport, out_dir: Path) -> Path:
    ks = [r["k"] for r in rep.records]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ks, [r["bound"] for r in rep.records], "k--", label="ceil(3w/2)")
    ax.plot(ks, [r["scheme"] for r in rep.records], "o-", label="explicit scheme")
    pts = [(r["k"], r["chi"]) for r in rep.records if r["chi"] != "-"]
    if pts:
        ax.plot(*zip(*pts), "s", mfc="none", ms=9, label="exact chi")
    ax.set_xlabel("k")
    ax.set_ylabel("colours")
    ax.set_title("G_k: colours against the bound")
    ax.legend()
    return _save(fig, out_dir, "family")


def plot_sweep(rep: CampaignReport, out_dir: Path) -> Path:
    worst = defaultdict(int)
    for r in rep.records:
        if r.get("status") == "member":
            worst[r["omega"]] = max(worst[r["omega"]], r["chi"])
    ws = sorted(worst)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(ws, [worst[w] for w in ws], color="tab:blue", label="largest chi seen")
    ax.step(ws, [(3 * w + 1) // 2 for w in ws], "k--", where="mid", label="ceil(3w/2)")
    ax.set_xlabel("clique number")
    ax.set_ylabel("chromatic number")
    ax.set_title(f"{rep.name}: {rep.summary.get('member', 0)} free graphs")
    ax.legend()
    return _save(fig, out_dir, rep.name)


def plot_verify_base(rep: CampaignReport, out_dir: Path) -> Path:
    by_n = defaultdict(int)
    for r in rep.records:
        if r["item"].startswith("n="):
            n = int(r["item"].split()[0][2:])
            by_n[n] += r["value"]
    strict = rep.summary.get("strict_by_size", {})
    ns = sorted(by_n)
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar(ns, [by_n[n] for n in ns], color="lightgray", label="all subsets")
    ax.bar(list(strict), list(strict.values()), color="tab:red", label="chi > 3w/2")
    ax.set_yscale("log")
    ax.set_xlabel("subset size")
    ax.set_ylabel("count")
    ax.set_title("Vertex subsets of the Clebsch complement")
    ax.legend()
    return _save(fig, out_dir, "verify_base")


PLOTTERS = {"family": plot_family, "sweep": plot_sweep, "sweep-random": plot_sweep, "verify-base": plot_verify_base}


def render(rep: CampaignReport, out_dir: str | Path) -> Path | None:
    fn = PLOTTERS.get(rep.name)
    return None if fn is None else fn(rep, Path(out_dir))
