"""Matplotlib renderings for reports: gap grids, Hasse diagrams, CSV tables."""

from __future__ import annotations

import csv

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

MEMBER = "#6b8e23"
GAP = "#c9c9c9"
FROBENIUS = "#7030a0"
GENERATOR = "#1f77b4"


def save_gap_grid(monoid, path, bound=None):
    """Square grid of members and gaps for a two-dimensional pattern.

    Members are olive, minimal generators blue, gaps gray, and the
    two-sided Frobenius points purple.  Axes follow the two pattern
    positions in row-major order.
    """
    positions = monoid.group.sorted_positions()
    if len(positions) != 2:
        raise ValueError("the gap grid needs a pattern with exactly two positions")
    from .frobenius import frobenius
    from .matrices import UniMatrix

    if bound is None:
        bound = monoid.generating_number + 2
    frob = set(frobenius(monoid, "twosided")) if monoid.gaps else set()
    mingens = set(monoid.minimal_generators)

    fig, ax = plt.subplots(figsize=(0.45 * bound + 1.2, 0.45 * bound + 1.2))
    for x in range(bound):
        for y in range(bound):
            point = UniMatrix.from_entries(
                monoid.group.n, {positions[0]: x, positions[1]: y}
            )
            if point in frob:
                color = FROBENIUS
            elif point in mingens:
                color = GENERATOR
            elif monoid.contains(point):
                color = MEMBER
            else:
                color = GAP
            ax.add_patch(
                plt.Rectangle((x - 0.4, y - 0.4), 0.8, 0.8, color=color)
            )
    ax.set_xlim(-0.6, bound - 0.4)
    ax.set_ylim(-0.6, bound - 0.4)
    ax.set_xlabel(f"entry {positions[0]}")
    ax.set_ylabel(f"entry {positions[1]}")
    ax.set_xticks(range(bound))
    ax.set_yticks(range(bound))
    ax.set_aspect("equal")
    handles = [
        plt.Rectangle((0, 0), 1, 1, color=c)
        for c in (MEMBER, GENERATOR, GAP, FROBENIUS)
    ]
    ax.legend(
        handles,
        ["member", "minimal generator", "gap", "Frobenius"],
        loc="upper left",
        bbox_to_anchor=(1.02, 1.0),
        frameon=False,
    )
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)
    return path


def save_hasse(lattice, path):
    """Hasse diagram of the idempotent lattice, levels by gap-part size."""
    labels = lattice.node_labels()
    sizes = [len(node.gap_part()) for node in lattice.nodes]
    levels = sorted(set(sizes))
    row = {s: [i for i, v in enumerate(sizes) if v == s] for s in levels}
    coords = {}
    for height, s in enumerate(levels):
        members = row[s]
        for k, i in enumerate(members):
            coords[i] = ((k + 1) / (len(members) + 1), height)

    width = max(len(v) for v in row.values())
    fig, ax = plt.subplots(figsize=(2.2 * width + 1.5, 1.4 * len(levels) + 1.0))
    for low, high in lattice.hasse_edges:
        (x0, y0), (x1, y1) = coords[low], coords[high]
        ax.plot([x0, x1], [y0, y1], color="#888888", zorder=1)
    for i, label in enumerate(labels):
        x, y = coords[i]
        shown = label if label != "{}" else "base"
        ax.text(
            x,
            y,
            shown,
            ha="center",
            va="center",
            zorder=2,
            fontsize=9,
            bbox=dict(boxstyle="round,pad=0.3", fc="white", ec="#444444"),
        )
    ax.set_xlim(0, 1)
    ax.set_ylim(-0.5, len(levels) - 0.5)
    ax.axis("off")
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)
    return path


def write_report_csv(report, path):
    """Flat key/value table of the classification report."""
    group = report.monoid.group
    def names(points):
        return " ".join(group.label(p) for p in points)

    data = report.frobenius
    rows = [
        ("group", f"{group.tag}({group.n})"),
        ("gaps", names(report.monoid.sorted_gaps())),
        ("generating_number", report.generating_number),
        ("conductor", report.conductor),
        ("genus", report.genus),
        ("sporadicity", report.sporadicity),
        ("minimal_generators", names(report.monoid.minimal_generators)),
        ("f_left", names(data.f_left)),
        ("f_right", names(data.f_right)),
        ("f_twosided", names(data.f_twosided)),
        ("pf_left", names(data.pf_left)),
        ("pf_right", names(data.pf_right)),
        ("pf_twosided", names(data.pf_twosided)),
        ("special_gaps", names(data.special)),
        ("type_left", data.types[0]),
        ("type_right", data.types[1]),
        ("type_twosided", data.types[2]),
        ("irreducible", report.irreducible),
        ("symmetry", report.symmetry),
        ("strong", report.strong),
        (
            "pseudo_witness",
            "" if report.pseudo_witness is None else group.label(report.pseudo_witness),
        ),
        (
            "witness_gap_sets",
            ""
            if report.witness is None
            else " | ".join(names(t.sorted_gaps()) for t in report.witness),
        ),
        (
            "counts_below_frobenius",
            "" if report.counts is None else f"{report.counts[0]} {report.counts[1]}",
        ),
    ]
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(("field", "value"))
        writer.writerows(rows)
    return path
