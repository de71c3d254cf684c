"""Figure rendering for the report paths (bounds tables, search results).

Uses the Agg backend so files render headlessly; figures are written
next to the delimited output, never shown interactively.
"""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .search import BoundTable, SearchResult  # noqa: E402


def plot_bounds(table: BoundTable, path) -> None:
    """Lower-bound curves for kappa(n) on a log scale."""
    ns = [r[0] for r in table.rows]
    eq1 = [r[1] for r in table.rows]
    bevan = [r[2] for r in table.rows]
    ref = [r[3] for r in table.rows]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.step(ns, eq1, where="mid", label="probabilistic floor", color="tab:blue")
    ax.step(ns, bevan, where="mid", label="Bevan floor", color="tab:orange")
    ax.plot(
        ns,
        ref,
        label=r"$11^{3n/50}$ envelope",
        color="tab:green",
        linestyle="--",
    )
    ax.set_xlabel("code length n")
    ax.set_ylabel(r"lower bound on $\kappa(n)$")
    ax.set_yscale("log")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_search(results: Sequence[SearchResult], path) -> None:
    """Computed kappa values against the probabilistic floor."""
    from .search import eq1_lower_bound

    ns = [r.n for r in results]
    kappas = [r.kappa for r in results]
    floors = [eq1_lower_bound(n) for n in ns]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(ns, kappas, "o-", label=r"$\kappa(n)$ (exact search)", color="tab:blue")
    ax.step(ns, floors, where="mid", label="probabilistic floor", color="tab:gray")
    for r in results:
        if r.status == "timeout":
            ax.annotate("timeout", (r.n, r.kappa), textcoords="offset points",
                        xytext=(0, 8), ha="center", fontsize=8, color="tab:red")
    ax.set_xlabel("code length n")
    ax.set_ylabel("code size")
    ax.set_xticks(ns)
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
