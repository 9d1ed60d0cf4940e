#pragma once

#include "umbral/poly.hpp"

#include <utility>
#include <vector>

namespace umbral {

/// Simple undirected graph on vertices 0..vertex_count-1.  Edges are kept
/// normalized (u < v, sorted, duplicate-free); loops and parallel edges are
/// rejected at construction.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
};

Graph make_graph(int vertex_count, std::vector<std::pair<int, int>> edges);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// Vertex 0 is the hub.
Graph star_graph(int n);

/// Relabels the second operand past the first; no shared vertices.
Graph disjoint_union(const Graph& g, const Graph& h);

inline constexpr int kDefaultChromaticVertexLimit = 14;

/// Proper-coloring polynomial in the color count, by deletion-contraction
/// with memoization on a canonicalized edge list.  The vertex limit guards
/// against accidental exponential blowups; raise it explicitly (or through
/// UMBRAL_RZ_MAX_VERTICES in the CLI) for bigger instances.
Poly chromatic_poly(const Graph& g, int max_vertices = kDefaultChromaticVertexLimit);

/// Coefficients over the falling-factorial basis; always non-negative
/// integers (number of ways to partition vertices into k independent blocks).
std::vector<Int> alpha_coeffs(const Graph& g, int max_vertices = kDefaultChromaticVertexLimit);

/// sum_k alpha_k x^k; computed both from alpha_coeffs and through
/// umbral_eval of the chromatic polynomial, and the two are compared.
Poly sigma_poly(const Graph& g, int max_vertices = kDefaultChromaticVertexLimit);

} // namespace umbral
