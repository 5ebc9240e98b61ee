"""Figure rendering for attack graphs and labellings."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import networkx as nx

from .core import AttackGraph, Label, Labelling

_FILL = {Label.IN: "#7cb342", Label.OUT: "#e57373", Label.UNDEC: "#bdbdbd"}


def draw_labelled_graph(
    graph: AttackGraph, labelling: Labelling, title: str, path: str | Path
) -> Path:
    """Render the attack graph with nodes coloured by their labels.

    Uses a circular layout so the picture is reproducible for a given
    graph; returns the written path.
    """
    digraph = nx.DiGraph()
    digraph.add_nodes_from(graph.arguments)
    digraph.add_edges_from(graph.attacks)
    positions = nx.circular_layout(sorted(graph.arguments))
    colors = [_FILL[labelling[a]] for a in digraph.nodes]

    fig, ax = plt.subplots(figsize=(5, 5))
    nx.draw_networkx_nodes(digraph, positions, ax=ax, node_color=colors, node_size=900)
    nx.draw_networkx_labels(digraph, positions, ax=ax, font_size=9)
    nx.draw_networkx_edges(
        digraph,
        positions,
        ax=ax,
        arrows=True,
        arrowsize=14,
        connectionstyle="arc3,rad=0.12",
        node_size=900,
    )
    handles = [
        plt.Line2D([], [], marker="o", linestyle="", color=_FILL[l], label=str(l))
        for l in (Label.IN, Label.OUT, Label.UNDEC)
    ]
    ax.legend(handles=handles, loc="upper right", fontsize=8)
    ax.set_title(title)
    ax.set_axis_off()
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path
