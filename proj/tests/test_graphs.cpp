#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include "umbral/errors.hpp"
#include "umbral/graphs.hpp"
#include "umbral/poly.hpp"
#include "umbral/rzcert.hpp"
#include "umbral/umbra.hpp"

#include <utility>
#include <vector>

using namespace umbral;
using oracle::P;
using oracle::Q;

namespace {

std::vector<Graph> corpus_graphs() {
    std::vector<Graph> out;
    for (int n = 1; n <= 7; ++n) out.push_back(path_graph(n));
    for (int n = 3; n <= 7; ++n) out.push_back(cycle_graph(n));
    for (int n = 3; n <= 7; ++n) out.push_back(star_graph(n));
    for (int n = 0; n <= 5; ++n) out.push_back(complete_graph(n));
    for (int n = 1; n <= 4; ++n) out.push_back(make_graph(n, {}));
    oracle::Rng rng(71);
    for (int i = 0; i < 10; ++i) out.push_back(oracle::random_graph(rng, rng.in(4, 7), rng.in(20, 80)));
    out.push_back(disjoint_union(path_graph(3), complete_graph(2)));
    out.push_back(disjoint_union(cycle_graph(4), complete_graph(1)));
    out.push_back(disjoint_union(complete_graph(2), complete_graph(2)));
    return out;
}

} // namespace

TEST_CASE("construction normalizes and validates") {
    const Graph g = make_graph(3, {{2, 1}, {0, 2}});
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
    CHECK_THROWS_AS(make_graph(2, {{0, 2}}), InputError);
    CHECK_THROWS_AS(make_graph(3, {{1, 1}}), InputError);
    CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(make_graph(-1, {}), InputError);
}

TEST_CASE("preset shapes") {
    CHECK(complete_graph(0).vertex_count == 0);
    CHECK(complete_graph(1).edges.empty());
    CHECK(complete_graph(4).edges.size() == 6);
    CHECK(path_graph(1).edges.empty());
    CHECK(path_graph(4).edges.size() == 3);
    CHECK(cycle_graph(3).edges == complete_graph(3).edges);
    CHECK(cycle_graph(5).edges.size() == 5);
    CHECK_THROWS_AS(cycle_graph(2), InputError);
    CHECK(star_graph(1).vertex_count == 1);
    CHECK(star_graph(5).edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
}

TEST_CASE("coloring polynomial closed forms") {
    CHECK(chromatic_poly(complete_graph(3)) == P({0, 2, -3, 1}));
    CHECK(chromatic_poly(path_graph(3)) == P({0, 1, -2, 1}));
    CHECK(chromatic_poly(make_graph(2, {})) == P({0, 0, 1}));
    CHECK(chromatic_poly(complete_graph(0)) == Poly::one());
    CHECK(chromatic_poly(cycle_graph(4)) == P({0, -3, 6, -4, 1}));
    // Stars and paths on equal vertex counts are both trees, so they share
    // the coloring polynomial.
    for (int n = 3; n <= 7; ++n) {
        CHECK(chromatic_poly(star_graph(n)) == chromatic_poly(path_graph(n)));
    }
}

TEST_CASE("coloring counts match exhaustive enumeration at small color counts") {
    for (const Graph& g : corpus_graphs()) {
        for (int colors = 0; colors <= 4; ++colors) {
            CHECK(chromatic_poly(g).eval(Rational(colors)) == Rational(oracle::coloring_count(g, colors)));
        }
    }
}

TEST_CASE("vertex limit guards the exponential recursion") {
    CHECK_THROWS_AS(chromatic_poly(path_graph(15)), InputError);
    const Poly p15 = chromatic_poly(path_graph(15), 20);
    CHECK(p15.eval(Q(2)) == Q(2)); // 2-colorings of a path: exactly two
    CHECK_THROWS_AS(alpha_coeffs(path_graph(15)), InputError);
    CHECK_THROWS_AS(sigma_poly(path_graph(15)), InputError);
}

TEST_CASE("independent-partition counts") {
    CHECK(alpha_coeffs(path_graph(3)) == std::vector<Int>{0, 0, 1, 1});
    CHECK(alpha_coeffs(complete_graph(4)) == std::vector<Int>{0, 0, 0, 0, 1});
    CHECK(alpha_coeffs(make_graph(2, {})) == std::vector<Int>{0, 1, 1});
    CHECK(alpha_coeffs(path_graph(4)) == std::vector<Int>{0, 0, 1, 3, 1});
    for (const Graph& g : corpus_graphs()) {
        for (const Int& v : alpha_coeffs(g)) CHECK(v >= 0);
    }
}

TEST_CASE("partition polynomial examples and the tree closed form") {
    CHECK(sigma_poly(path_graph(3)) == P({0, 0, 1, 1}));
    for (int n = 1; n <= 5; ++n) CHECK(sigma_poly(complete_graph(n)) == Poly::monomial(static_cast<std::size_t>(n)));
    oracle::Rng rng(72);
    for (int n = 1; n <= 8; ++n) {
        const Poly expected = bell_poly(static_cast<unsigned>(n - 1)).times_power_of_x(1);
        CHECK(sigma_poly(path_graph(n)) == expected);
        if (n >= 3) CHECK(sigma_poly(star_graph(n)) == expected);
        if (n >= 2) CHECK(sigma_poly(oracle::random_tree(rng, n)) == expected);
    }
}

TEST_CASE("disjoint union relabels and multiplies coloring polynomials") {
    const Graph g = path_graph(3);
    const Graph merged = disjoint_union(g, complete_graph(0));
    CHECK(merged.vertex_count == 3);
    CHECK(merged.edges == g.edges);

    const Graph kk = disjoint_union(complete_graph(2), complete_graph(2));
    CHECK(kk.vertex_count == 4);
    CHECK(chromatic_poly(kk) == chromatic_poly(complete_graph(2)) * chromatic_poly(complete_graph(2)));

    oracle::Rng rng(73);
    for (int i = 0; i < 100; ++i) {
        const Graph a = oracle::random_graph(rng, rng.in(0, 6), rng.in(10, 90));
        const Graph b = oracle::random_graph(rng, rng.in(0, 6), rng.in(10, 90));
        const Graph u = disjoint_union(a, b);
        CHECK(u.vertex_count == a.vertex_count + b.vertex_count);
        CHECK(chromatic_poly(u) == chromatic_poly(a) * chromatic_poly(b));
    }
}

TEST_CASE("adding one clique matches one operator step") {
    oracle::Rng rng(74);
    std::vector<Graph> bases;
    for (int n = 2; n <= 6; ++n) bases.push_back(path_graph(n));
    for (int n = 3; n <= 6; ++n) bases.push_back(star_graph(n));
    for (int n = 3; n <= 6; ++n) bases.push_back(oracle::random_tree(rng, n));
    bases.push_back(cycle_graph(4));
    bases.push_back(cycle_graph(5));
    bases.push_back(complete_graph(4));
    for (const Graph& g : bases) {
        const Poly chi = chromatic_poly(g);
        for (unsigned r = 1; r <= 3; ++r) {
            const Graph merged = disjoint_union(g, complete_graph(static_cast<int>(r)));
            CHECK(sigma_poly(merged) == apply_falling_op(chi, r));
        }
    }
}

TEST_CASE("adding two cliques works one step at a time on the grown graph") {
    const std::pair<unsigned, unsigned> shifts[] = {{1, 2}, {2, 3}, {1, 3}, {2, 2}};
    const Graph bases[] = {path_graph(2), path_graph(4), cycle_graph(4), star_graph(4)};
    for (const Graph& g : bases) {
        for (const auto& [r1, r2] : shifts) {
            const Graph first = disjoint_union(g, complete_graph(static_cast<int>(r1)));
            const Graph second = disjoint_union(first, complete_graph(static_cast<int>(r2)));
            CHECK(sigma_poly(second) == apply_falling_op(chromatic_poly(first), r2));
        }
    }
}

TEST_CASE("iterating the operator on the original polynomial is a different animal") {
    // Folding both steps over the *original* coloring polynomial skips the
    // regrowth of the graph between steps and lands on a different (still
    // real-rooted) polynomial.  Pin one concrete instance of the divergence.
    const Graph g = path_graph(2);
    const Graph grown = disjoint_union(disjoint_union(g, complete_graph(1)), complete_graph(2));
    const Poly union_route = sigma_poly(grown);
    const Poly folded = apply_falling_chain(chromatic_poly(g), {1, 2}).value;
    CHECK(union_route == P({0, 0, 4, 14, 8, 1}));
    CHECK(folded == P({0, 0, 16, 29, 11, 1}));
    CHECK(union_route != folded);
    CHECK(certify_rz(union_route).all_real);
    CHECK(certify_rz(folded).all_real);
}

TEST_CASE("tree plus clique stays real-rooted") {
    oracle::Rng rng(75);
    for (int n = 1; n <= 7; ++n) {
        std::vector<Graph> trees{path_graph(n)};
        if (n >= 3) trees.push_back(star_graph(n));
        if (n >= 2) trees.push_back(oracle::random_tree(rng, n));
        for (const Graph& t : trees) {
            for (int r = 0; r <= 4; ++r) {
                const Poly sig = sigma_poly(disjoint_union(t, complete_graph(r)));
                CHECK(certify_rz(sig).all_real);
            }
        }
    }
}
