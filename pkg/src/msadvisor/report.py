"""Report rendering: ranking/trade-off CSVs with matplotlib figures alongside."""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .engine import Ranking, TradeoffReport


def write_ranking_report(ranking: Ranking, out_dir: Path, stem: str = "ranking") -> list[Path]:
    """ranking.csv plus a horizontal score bar chart; returns the written paths."""
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / f"{stem}.csv"
    with csv_path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["pattern", "name", "score"])
        for entry in ranking.entries:
            writer.writerow([entry.pattern_id, entry.name, float(entry.score)])

    fig_path = out_dir / f"{stem}.png"
    names = [e.name for e in reversed(ranking.entries)]
    scores = [float(e.score) for e in reversed(ranking.entries)]
    colors = ["#2a9d8f" if s >= 0 else "#e76f51" for s in scores]
    fig, ax = plt.subplots(figsize=(8, max(2.5, 0.35 * len(names) + 1)))
    ax.barh(range(len(names)), scores, color=colors)
    ax.set_yticks(range(len(names)), labels=names, fontsize=8)
    ax.set_xlabel("weighted score")
    ax.set_title("Pattern ranking")
    ax.axvline(0, color="black", linewidth=0.8)
    fig.tight_layout()
    fig.savefig(fig_path, dpi=120)
    plt.close(fig)
    return [csv_path, fig_path]


def write_tradeoff_report(report: TradeoffReport, out_dir: Path, stem: str = "tradeoff") -> list[Path]:
    """tradeoff.csv plus diverging +/- bars per quality attribute."""
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / f"{stem}.csv"
    with csv_path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["qa", "plus", "minus", "net", "conflict"])
        for agg in report.aggregates:
            writer.writerow([agg.qa, agg.plus, agg.minus, agg.net, agg.qa in report.conflicts])

    fig_path = out_dir / f"{stem}.png"
    qas = [a.qa for a in reversed(report.aggregates)]
    plus = [a.plus for a in reversed(report.aggregates)]
    minus = [-a.minus for a in reversed(report.aggregates)]
    fig, ax = plt.subplots(figsize=(8, max(2.5, 0.35 * len(qas) + 1)))
    ax.barh(range(len(qas)), plus, color="#2a9d8f", label="positive")
    ax.barh(range(len(qas)), minus, color="#e76f51", label="negative")
    ax.set_yticks(range(len(qas)), labels=qas, fontsize=8)
    ax.set_xlabel("impact count")
    ax.set_title("Quality-attribute trade-offs")
    ax.axvline(0, color="black", linewidth=0.8)
    if qas:
        ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(fig_path, dpi=120)
    plt.close(fig)
    return [csv_path, fig_path]
