"""Figure rendering for the CLI report path.

Line sweeps produce one splitting type per sampled line; the figure shows
the multiplicity profile of every sampled line as a heat map (lines x
twist index) with the generic type highlighted, which makes jumping lines
visually obvious.  Written to file only; no interactive backends.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def splitting_sweep_figure(rows, path, title=None):
    """rows: list of (line_label, SplittingType, is_dissenter)."""
    if not rows:
        raise ValueError("nothing to plot")
    max_idx = 0
    for _, st, _ in rows:
        sup = st.support()
        if sup:
            max_idx = max(max_idx, sup[-1])
    width = max_idx + 1
    grid = np.zeros((len(rows), width))
    for i, (_, st, _) in enumerate(rows):
        for j, b in st.multiplicities.items():
            grid[i, j] = b
    fig, (ax, axb) = plt.subplots(
        1, 2, figsize=(7.2, max(2.2, 0.28 * len(rows) + 1.2)),
        gridspec_kw={"width_ratios": [3, 2]})
    im = ax.imshow(grid, aspect="auto", cmap="viridis", interpolation="nearest")
    ax.set_xlabel("twist index i")
    ax.set_ylabel("sampled line")
    ax.set_xticks(range(width))
    ax.set_yticks(range(len(rows)))
    ax.set_yticklabels([label for label, _, _ in rows], fontsize=6)
    for i, (_, _, dissent) in enumerate(rows):
        if dissent:
            ax.axhline(i, color="red", linewidth=0.8, alpha=0.6)
    fig.colorbar(im, ax=ax, label="multiplicity b_i")
    # majority profile bar chart
    tally = {}
    for _, st, _ in rows:
        tally[st] = tally.get(st, 0) + 1
    generic = max(tally.items(), key=lambda kv: kv[1])[0]
    heights = [generic.multiplicities.get(j, 0) for j in range(width)]
    axb.bar(range(width), heights, color="steelblue")
    axb.set_xticks(range(width))
    axb.set_xlabel("twist index i")
    axb.set_title("majority splitting type", fontsize=9)
    if title:
        fig.suptitle(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def splitting_csv(rows, path):
    """Delimited companion of the figure: one row per sampled line."""
    max_idx = 0
    for _, st, _ in rows:
        sup = st.support()
        if sup:
            max_idx = max(max_idx, sup[-1])
    with open(path, "w", encoding="utf-8") as fh:
        header = ["line"] + ["b_%d" % j for j in range(max_idx + 1)] + \
                 ["remainder", "dissenter"]
        fh.write(",".join(header) + "\n")
        for label, st, dissent in rows:
            cells = [label.replace(",", " ")]
            cells += [str(st.multiplicities.get(j, 0)) for j in range(max_idx + 1)]
            rem = st.remainder
            cells.append("" if rem is None else "%d|%d" % (rem.x, rem.y))
            cells.append("1" if dissent else "0")
            fh.write(",".join(cells) + "\n")
