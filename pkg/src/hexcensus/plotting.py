"""Figure rendering for the report-producing CLI paths."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def plot_asympt_report(report, path: str) -> None:
    """Measured centered probabilities against the arcsine limit."""
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(report.n_values, report.measured, "o-", label="measured R(n, round(a n))")
    ax.axhline(report.target, color="crimson", linestyle="--",
               label=f"(2/pi) arcsin(1/(a+1)) = {report.target:.5f}")
    ax.set_xlabel("n")
    ax.set_ylabel("centered probability")
    ax.set_title(f"aspect ratio a = {report.ratio:g}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_table(rows: list[dict], theorem: int, path: str) -> None:
    """Exact centered probabilities from a table, one curve per n."""
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    by_n: dict[int, list[tuple[int, float]]] = {}
    for row in rows:
        by_n.setdefault(row["n"], []).append((row["x"], float(row["probability"])))
    for n, pts in sorted(by_n.items()):
        pts.sort()
        ax.plot([x for x, _ in pts], [p for _, p in pts], "o-", label=f"n = {n}")
    ax.set_xlabel("x")
    ax.set_ylabel("probability")
    ax.set_title(f"theorem {theorem} centered probabilities")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
