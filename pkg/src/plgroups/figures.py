"""Matplotlib rendering of support diagrams and orbit coverage.

Figures are a display companion to the delimited records; all report
numbers stay exact in the text outputs, floats appear only here.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Arc as ArcPatch


def render_supports(records, path, modulus=None):
    """Draw named supports: arcs around a circle, or bars over the line.

    ``records`` is a list of ``(name, lo, hi)`` with endpoints coercible
    to float; for circle groups ``hi`` may be numerically below ``lo`` to
    wrap.
    """
    fig, ax = plt.subplots(figsize=(6, 6) if modulus else (8, 0.6 + 0.4 * len(records)))
    if modulus:
        L = float(modulus)
        ax.add_patch(plt.Circle((0, 0), 1.0, fill=False, color="0.8"))
        for k, (name, lo, hi) in enumerate(records):
            r = 1.06 + 0.09 * k
            t0 = 360.0 * float(lo) / L
            span = (360.0 * (float(hi) - float(lo)) / L) % 360.0 or 360.0
            ax.add_patch(ArcPatch((0, 0), 2 * r, 2 * r, theta1=t0, theta2=t0 + span,
                                  color=f"C{k % 10}", lw=2.5))
            mid = math.radians(t0 + span / 2)
            ax.annotate(name, (r * math.cos(mid), r * math.sin(mid)),
                        color=f"C{k % 10}", fontsize=9,
                        xytext=(4, 4), textcoords="offset points")
        lim = 1.1 + 0.09 * len(records)
        ax.set_xlim(-lim, lim)
        ax.set_ylim(-lim, lim)
        ax.set_aspect("equal")
        ax.axis("off")
    else:
        for k, (name, lo, hi) in enumerate(records):
            ax.hlines(k, float(lo), float(hi), color=f"C{k % 10}", lw=6)
            ax.annotate(name, (float(lo), k), xytext=(0, 6),
                        textcoords="offset points", fontsize=9)
        ax.set_yticks([])
        ax.set_xlabel("line coordinate")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_coverage(rows, path):
    """Coverage fraction against word length for an orbit probe."""
    depths = [r.depth for r in rows]
    fracs = [r.hits / r.cells for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.step(depths, fracs, where="post", marker="o")
    ax.set_xlabel("word length")
    ax.set_ylabel("grid cells hit (fraction)")
    ax.set_ylim(0, 1.05)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
