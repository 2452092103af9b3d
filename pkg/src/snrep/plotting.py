"""Figures written next to the CLI's delimited output."""
from __future__ import annotations

import pathlib
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def bench_figure(rows: Sequence[dict], figure_path: pathlib.Path) -> None:
    """Per-element time for each path and repetition, log scale."""
    paths = sorted({r["path"] for r in rows})
    fig, ax = plt.subplots(figsize=(5, 3.5))
    width = 0.8 / len(paths)
    for i, path in enumerate(paths):
        sel = [r for r in rows if r["path"] == path]
        offset = (i - (len(paths) - 1) / 2) * width
        ax.bar([r["rep"] + offset for r in sel],
               [r["per_element_us"] for r in sel], width=width, label=path)
    ax.set_xticks(sorted({r["rep"] for r in rows}))
    ax.set_yscale("log")
    ax.set_xlabel("repetition")
    ax.set_ylabel("time per element [us]")
    ax.set_title(f"S_{rows[0]['n']}: {rows[0]['elements']} elements")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(figure_path)
    plt.close(fig)


def character_figure(n: int, classes: Sequence[str], kinds: Sequence[str],
                     values: Sequence[Sequence[int]], figure_path: pathlib.Path) -> None:
    """Heatmap of the character table, classes down, representations across."""
    fig, ax = plt.subplots(figsize=(1.2 * len(kinds) + 2, 0.4 * len(classes) + 1.5))
    vmax = max(1, max(abs(v) for row in values for v in row))
    im = ax.imshow(values, cmap="RdBu_r", vmin=-vmax, vmax=vmax, aspect="auto")
    for i, row in enumerate(values):
        for j, v in enumerate(row):
            ax.text(j, i, str(v), ha="center", va="center", fontsize=8)
    ax.set_xticks(range(len(kinds)), kinds, rotation=30, ha="right")
    ax.set_yticks(range(len(classes)), classes)
    ax.set_title(f"characters of S_{n}")
    fig.colorbar(im, ax=ax)
    fig.tight_layout()
    fig.savefig(figure_path)
    plt.close(fig)
