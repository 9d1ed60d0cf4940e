#include "umbral/graphs.hpp"

#include "umbral/errors.hpp"
#include "umbral/umbra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace umbral {

Graph make_graph(int vertex_count, std::vector<std::pair<int, int>> edges) {
    if (vertex_count < 0) throw InputError("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
            throw InputError("edge endpoint out of range");
        }
        if (u == v) throw InputError("self-loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw InputError("duplicate edge");
    }
    return Graph{vertex_count, std::move(edges)};
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return make_graph(n, std::move(e));
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return make_graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    e.emplace_back(0, n - 1);
    return make_graph(n, std::move(e));
}

Graph star_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(0, v);
    return make_graph(n, std::move(e));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<std::pair<int, int>> e = g.edges;
    for (auto [u, v] : h.edges) e.emplace_back(u + g.vertex_count, v + g.vertex_count);
    return make_graph(g.vertex_count + h.vertex_count, std::move(e));
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Cheap deterministic relabeling: order vertices by (degree, sorted neighbor
// degrees), ties by original index.  Not a full canonical form, but any two
// graphs mapping to the same key are isomorphic, which is all the memo needs.
EdgeList canonical_key(int n, const EdgeList& edges) {
    std::vector<int> degree(n, 0);
    for (auto [u, v] : edges) {
        ++degree[u];
        ++degree[v];
    }
    std::vector<std::vector<int>> neighbor_degrees(n);
    for (auto [u, v] : edges) {
        neighbor_degrees[u].push_back(degree[v]);
        neighbor_degrees[v].push_back(degree[u]);
    }
    for (auto& nd : neighbor_degrees) std::sort(nd.begin(), nd.end());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (degree[a] != degree[b]) return degree[a] < degree[b];
        if (neighbor_degrees[a] != neighbor_degrees[b]) return neighbor_degrees[a] < neighbor_degrees[b];
        return a < b;
    });
    std::vector<int> relabel(n);
    for (int i = 0; i < n; ++i) relabel[order[i]] = i;
    EdgeList key;
    key.reserve(edges.size());
    for (auto [u, v] : edges) {
        int a = relabel[u], b = relabel[v];
        if (a > b) std::swap(a, b);
        key.emplace_back(a, b);
    }
    std::sort(key.begin(), key.end());
    return key;
}

// Memoization table for one top-level chromatic_poly call.  Scoping the
// cache to the invocation keeps the operation pure: no state survives
// between calls, and concurrent calls never touch shared data.
using Memo = std::map<std::pair<int, EdgeList>, Poly>;

Poly chromatic_rec(int n, EdgeList edges, Memo& memo);

// Multiply per connected component; isolated vertices fold into one lambda^k.
Poly chromatic_components(int n, const EdgeList& edges, Memo& memo) {
    std::vector<int> comp(n, -1);
    int comp_count = 0;
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = comp_count;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u]) {
                if (comp[v] == -1) {
                    comp[v] = comp_count;
                    stack.push_back(v);
                }
            }
        }
        ++comp_count;
    }
    if (comp_count == 1) return chromatic_rec(n, edges, memo);

    std::vector<int> size(comp_count, 0);
    for (int v = 0; v < n; ++v) ++size[comp[v]];
    std::vector<std::vector<int>> members(comp_count);
    for (int v = 0; v < n; ++v) members[comp[v]].push_back(v);

    Poly result = Poly::one();
    std::size_t isolated = 0;
    for (int c = 0; c < comp_count; ++c) {
        if (size[c] == 1) {
            ++isolated;
            continue;
        }
        std::vector<int> local(n, -1);
        for (int i = 0; i < size[c]; ++i) local[members[c][i]] = i;
        EdgeList sub;
        for (auto [u, v] : edges) {
            if (comp[u] == c) sub.emplace_back(local[u], local[v]);
        }
        result *= chromatic_rec(size[c], std::move(sub), memo);
    }
    return result.times_power_of_x(isolated);
}

Poly chromatic_rec(int n, EdgeList edges, Memo& memo) {
    if (edges.empty()) return Poly::monomial(static_cast<std::size_t>(n));
    const auto key = std::make_pair(n, canonical_key(n, edges));
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    std::vector<int> degree(n, 0);
    for (auto [u, v] : edges) {
        ++degree[u];
        ++degree[v];
    }
    const int hub = static_cast<int>(std::max_element(degree.begin(), degree.end()) - degree.begin());
    std::pair<int, int> pick = edges.front();
    for (auto e : edges) {
        if (e.first == hub || e.second == hub) {
            pick = e;
            break;
        }
    }

    EdgeList deleted;
    deleted.reserve(edges.size() - 1);
    for (auto e : edges) {
        if (e != pick) deleted.push_back(e);
    }

    // Contract pick.second into pick.first, relabel the last vertex down.
    const int keep = pick.first, gone = pick.second;
    EdgeList contracted;
    contracted.reserve(edges.size());
    for (auto [u, v] : edges) {
        int a = (u == gone) ? keep : u;
        int b = (v == gone) ? keep : v;
        if (a == b) continue;
        a = (a == n - 1) ? gone : a;
        b = (b == n - 1) ? gone : b;
        if (a > b) std::swap(a, b);
        contracted.emplace_back(a, b);
    }
    std::sort(contracted.begin(), contracted.end());
    contracted.erase(std::unique(contracted.begin(), contracted.end()), contracted.end());

    Poly result = chromatic_components(n, deleted, memo) - chromatic_components(n - 1, contracted, memo);
    memo.emplace(key, result);
    return result;
}

} // namespace

Poly chromatic_poly(const Graph& g, int max_vertices) {
    if (g.vertex_count > max_vertices) {
        throw InputError("graph has " + std::to_string(g.vertex_count) + " vertices, over the limit of " +
                         std::to_string(max_vertices) +
                         "; raise the limit via the max-vertices setting (UMBRAL_RZ_MAX_VERTICES)");
    }
    if (g.vertex_count == 0) return Poly::one();
    Memo memo;
    return chromatic_components(g.vertex_count, g.edges, memo);
}

std::vector<Int> alpha_coeffs(const Graph& g, int max_vertices) {
    const FactPoly f = to_falling(chromatic_poly(g, max_vertices));
    std::vector<Int> out;
    out.reserve(f.coeff_count());
    for (const Rational& c : f.coeffs()) {
        if (boost::multiprecision::denominator(c) != 1 || c < 0) {
            throw InternalInconsistency("chromatic falling-basis coefficients must be non-negative integers");
        }
        out.push_back(Int(boost::multiprecision::numerator(c)));
    }
    return out;
}

Poly sigma_poly(const Graph& g, int max_vertices) {
    const Poly p = chromatic_poly(g, max_vertices);
    const std::vector<Int> alpha = alpha_coeffs(g, max_vertices);
    std::vector<Rational> coeffs;
    coeffs.reserve(alpha.size());
    for (const Int& a : alpha) coeffs.emplace_back(a);
    const Poly via_alpha{std::move(coeffs)};
    if (via_alpha != umbral_eval(p)) {
        throw InternalInconsistency("falling-basis route and umbral route disagree on a sigma-polynomial");
    }
    return via_alpha;
}

} // namespace umbral
