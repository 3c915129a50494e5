"""Matplotlib figures for tableaux and verification reports."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402

from .syzygy import FORMS  # noqa: E402

ODD_FACE = "#f4d6a0"
EVEN_FACE = "white"
FORM_COLORS = {"A": "#4c72b0", "B": "#55a868", "C": "#c44e52", "C'": "#8172b2", "D": "#ccb974"}


def plot_tableau(alpha, t, path, title=None):
    """Draw ``t`` in English notation; odd letters get a shaded box."""
    height = max(len(t.rows), 1)
    width = max((len(r) for r in t.rows), default=1)
    fig, ax = plt.subplots(figsize=(0.6 * width + 1, 0.6 * height + 1))
    for i, row in enumerate(t.rows):
        for j, x in enumerate(row):
            face = ODD_FACE if alpha.is_odd(x) else EVEN_FACE
            ax.add_patch(Rectangle((j, -i - 1), 1, 1, facecolor=face, edgecolor="black"))
            ax.text(j + 0.5, -i - 0.5, alpha.names[x], ha="center", va="center", fontsize=14)
    ax.set_xlim(-0.1, width + 0.1)
    ax.set_ylim(-height - 0.1, 0.1)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    fig.savefig(path, bbox_inches="tight", dpi=120)
    plt.close(fig)
    return path


def plot_form_counts(counts, path):
    """Stacked bars of syzygy forms, one bar per alphabet.

    ``counts`` maps an alphabet description to ``{form: count}``.
    """
    labels = list(counts)
    fig, ax = plt.subplots(figsize=(max(6, 0.9 * len(labels) + 2), 4))
    bottom = [0] * len(labels)
    for form in FORMS:
        vals = [counts[k].get(form, 0) for k in labels]
        ax.bar(range(len(labels)), vals, bottom=bottom, label=form, color=FORM_COLORS[form])
        bottom = [b + v for b, v in zip(bottom, vals)]
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels([k.split("parity=")[-1] for k in labels], rotation=45)
    ax.set_xlabel("parity pattern")
    ax.set_ylabel("critical branchings")
    ax.legend(title="form")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_suite_summary(reports, path):
    """Horizontal bars of case counts per suite, red where a suite failed."""
    names = [r.suite for r in reports]
    fig, ax = plt.subplots(figsize=(7, 0.4 * len(names) + 1.5))
    colors = ["#55a868" if r.passed else "#c44e52" for r in reports]
    ax.barh(range(len(names)), [max(r.cases, 1) for r in reports], color=colors)
    ax.set_yticks(range(len(names)))
    ax.set_yticklabels(names)
    ax.set_xscale("log")
    ax.set_xlabel("cases checked")
    ax.invert_yaxis()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
