"""Shared helpers for generated pipeline and lemma instances."""

from __future__ import annotations

import random

from pathramsey.graphs import ColoredGraph, Graph


def grid_coloring(rows: int, cols: int, seed: int | None = None) -> ColoredGraph:
    """Red row-cliques and blue column-cliques on a rows x cols vertex grid.

    Every monochromatic part is a clique with no oriented edges (main), every
    vertex lies in exactly one part per color, and the minimum degree is
    (rows - 1) + (cols - 1).  An optional seed relabels the vertices.
    """
    n = rows * cols
    relabel = list(range(n))
    if seed is not None:
        random.Random(seed).shuffle(relabel)
    color = {}
    for i in range(rows):
        row = [relabel[i * cols + j] for j in range(cols)]
        for a in range(cols):
            for b in range(a + 1, cols):
                u, v = sorted((row[a], row[b]))
                color[(u, v)] = 0
    for j in range(cols):
        col = [relabel[i * cols + j] for i in range(rows)]
        for a in range(rows):
            for b in range(a + 1, rows):
                u, v = sorted((col[a], col[b]))
                color[(u, v)] = 1
    return ColoredGraph(Graph.from_edges(n, color.keys()), 2, color)
