#include "umbral/suites.hpp"

#include "umbral/bellpart.hpp"
#include "umbral/combinat.hpp"
#include "umbral/errors.hpp"
#include "umbral/graphs.hpp"
#include "umbral/io.hpp"
#include "umbral/rzcert.hpp"
#include "umbral/umbra.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

namespace umbral {

bool SuiteReport::all_passed() const {
    return std::all_of(instances.begin(), instances.end(), [](const SuiteInstance& i) { return i.passed; });
}

namespace {

void add(SuiteReport& rep, std::string params, bool passed, std::string witness = "") {
    rep.instances.push_back({std::move(params), passed, std::move(witness)});
}

std::string join_chain(const std::vector<unsigned>& rs) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rs.size(); ++i) os << (i ? "," : "") << rs[i];
    os << "]";
    return os.str();
}

// Deterministic across platforms: draw through modulo, not distributions.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    int in(int lo, int hi) { return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

Poly random_int_poly(Rng& rng, int max_degree, int coeff_bound) {
    const int deg = rng.in(0, max_degree);
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = Rational(Int(rng.in(-coeff_bound, coeff_bound)));
    return Poly(std::move(c));
}

// Order-preserving sublists of (1,..,top) with 1 <= length <= max_len.
std::vector<std::vector<unsigned>> increasing_chains(unsigned top, unsigned max_len) {
    std::vector<std::vector<unsigned>> out;
    const unsigned total = 1u << top;
    for (unsigned mask = 1; mask < total; ++mask) {
        std::vector<unsigned> rs;
        for (unsigned i = 0; i < top; ++i) {
            if (mask & (1u << i)) rs.push_back(i + 1);
        }
        if (rs.size() <= max_len) out.push_back(std::move(rs));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

// RZ check that treats the zero polynomial as vacuously real rooted.
bool rz_ok(const Poly& p, std::string& note) {
    if (p.is_zero()) {
        note = "zero polynomial, vacuously real-rooted";
        return true;
    }
    return certify_rz(p).all_real;
}

Poly falling_scalar(unsigned r, unsigned k) {
    // (r)_k for integer r as an exact scalar polynomial factor.
    if (k > r) return Poly::zero();
    return Poly::constant(Rational(factorial(r) / factorial(r - k)));
}

// ---------------------------------------------------------------- theorem1

SuiteReport suite_theorem1(unsigned nmax, std::uint64_t seed) {
    SuiteReport rep;
    rep.suite_name = "theorem1";
    rep.nmax = nmax;
    rep.seed = seed;

    Rng rng(seed);
    bool identity_ok = true;
    std::string identity_witness;
    for (int trial = 0; trial < 1000 && identity_ok; ++trial) {
        const Poly f = random_int_poly(rng, 8, 9);
        for (unsigned n = 0; n <= 5; ++n) {
            const Poly via_shift = apply_falling_op(f, n);
            const Poly via_product = umbral_eval(falling_factorial_poly(n) * f);
            if (via_shift != via_product) {
                identity_ok = false;
                identity_witness = "trial " + std::to_string(trial) + ", n=" + std::to_string(n) +
                                   ", f = " + f.to_string();
                break;
            }
        }
    }
    add(rep, "operator identity, 1000 random polynomials, n <= 5", identity_ok, identity_witness);

    for (const auto& rs : increasing_chains(4, 3)) {
        const unsigned m = rs.back();
        for (unsigned n = 0; n <= nmax; ++n) {
            const Poly value = apply_falling_chain(Poly::monomial(n), rs).value;
            std::string note;
            bool ok = rz_ok(value, note);
            std::string witness = note;
            try {
                (void)multi_r_bell(n, rs);
            } catch (const std::exception& e) {
                ok = false;
                witness = e.what();
            }
            if (!ok && witness.empty()) witness = "not real-rooted: " + value.to_string();
            add(rep, "chain rs=" + join_chain(rs) + " on y^" + std::to_string(n) + ", divisible by x^" + std::to_string(m),
                ok, ok ? "" : witness);
        }
    }

    {
        // Order sensitivity probe: both orders stay real-rooted, but the
        // polynomials differ, so chain order is semantically meaningful.
        const Poly forward = apply_falling_chain(Poly::variable(), {1, 2}).value;
        const Poly backward = apply_falling_chain(Poly::variable(), {2, 1}).value;
        std::string note_f, note_b;
        const bool both_rz = rz_ok(forward, note_f) && rz_ok(backward, note_b);
        std::ostringstream w;
        w << "chain [1,2] on y gives " << forward.to_string() << "; chain [2,1] gives " << backward.to_string()
          << (forward == backward ? " (orders agree)" : " (order-dependent, as expected for the nested fold)");
        add(rep, "order-sensitivity probe on y", both_rz, w.str());
    }
    return rep;
}

// ---------------------------------------------------------------- examples2

SuiteReport suite_examples2(unsigned nmax, std::uint64_t seed) {
    SuiteReport rep;
    rep.suite_name = "examples2";
    rep.nmax = nmax;
    rep.seed = seed;

    // Single-step closed form on (y)_n via Vandermonde in the falling basis.
    for (unsigned n = 0; n <= nmax; ++n) {
        for (unsigned r = 0; r <= 3; ++r) {
            const Poly lhs = apply_falling_op(falling_factorial_poly(n), r);
            Poly rhs;
            for (unsigned k = 0; k <= std::min(n, r); ++k) {
                rhs += Poly::monomial(n - k, Rational(binomial(n, k))) * falling_scalar(r, k);
            }
            rhs = rhs.times_power_of_x(r);
            std::string note;
            const bool ok = (lhs == rhs) && rz_ok(lhs, note);
            add(rep, "one-step closed form, n=" + std::to_string(n) + " r=" + std::to_string(r), ok,
                ok ? note : "mismatch or not real-rooted: " + lhs.to_string());
        }
    }

    const auto chains = increasing_chains(3, 2);

    // Chains on (y)_n expand through signed Stirling numbers of the first kind.
    for (unsigned n = 0; n <= nmax; ++n) {
        for (const auto& rs : chains) {
            const Poly lhs = apply_falling_chain(falling_factorial_poly(n), rs).value;
            Poly rhs;
            for (unsigned k = 0; k <= n; ++k) {
                rhs += multi_r_bell(k, rs) * Rational(stirling1_signed(n, k));
            }
            rhs = rhs.times_power_of_x(rs.back());
            std::string note;
            const bool ok = (lhs == rhs) && rz_ok(lhs, note);
            add(rep, "first-kind chain expansion, n=" + std::to_string(n) + " rs=" + join_chain(rs), ok,
                ok ? note : "lhs " + lhs.to_string() + " vs rhs " + rhs.to_string());
        }
    }

    // Chains on rising factorials: the unsigned first-kind expansion is the
    // one that matches the operator route; the restricted-Stirling variant
    // with alternating signs does not (it expands (y-n+1)_n instead), so its
    // status is reported rather than asserted.
    for (unsigned n = 1; n <= nmax; ++n) {
        const Poly rising = rising_factorial_poly(n);
        {
            const Poly direct = umbral_eval(rising);
            const bool ok = direct == lah_poly(n);
            add(rep, "rising factorial evaluates to the Lah polynomial, n=" + std::to_string(n), ok,
                ok ? "" : direct.to_string());
        }
        for (const auto& rs : chains) {
            const Poly lhs = apply_falling_chain(rising, rs).value;
            Poly corrected;
            for (unsigned k = 0; k <= n; ++k) {
                corrected += multi_r_bell(k, rs) * Rational(stirling1_unsigned(n, k));
            }
            corrected = corrected.times_power_of_x(rs.back());
            Poly claimed;
            for (unsigned k = 0; k <= n; ++k) {
                Rational c(r_stirling1_unsigned(2 * n - 1, k + n - 1, n - 1));
                if ((n - k) % 2 == 1) c = -c;
                claimed += multi_r_bell(k, rs) * c;
            }
            claimed = claimed.times_power_of_x(rs.back());
            std::string note;
            const bool ok = (lhs == corrected) && rz_ok(lhs, note);
            std::ostringstream w;
            if (!ok) {
                w << "lhs " << lhs.to_string() << " vs corrected " << corrected.to_string();
            } else if (claimed != lhs) {
                w << "documented discrepancy: alternating restricted-Stirling variant gives " << claimed.to_string()
                  << ", operator route gives " << lhs.to_string();
            } else {
                w << "alternating restricted-Stirling variant agrees here";
            }
            add(rep, "rising chain expansion, n=" + std::to_string(n) + " rs=" + join_chain(rs), ok, w.str());
        }
    }
    return rep;
}

// ----------------------------------------------------------- sigma-corollary

Graph random_tree(unsigned n, Rng& rng) {
    std::vector<std::pair<int, int>> e;
    for (unsigned v = 1; v < n; ++v) e.emplace_back(rng.in(0, static_cast<int>(v) - 1), static_cast<int>(v));
    return make_graph(static_cast<int>(n), std::move(e));
}

SuiteReport suite_sigma_corollary(unsigned nmax, std::uint64_t seed) {
    SuiteReport rep;
    rep.suite_name = "sigma-corollary";
    rep.nmax = nmax;
    rep.seed = seed;
    Rng rng(seed);

    for (unsigned n = 1; n <= nmax; ++n) {
        std::vector<std::pair<std::string, Graph>> trees;
        trees.emplace_back("path", path_graph(static_cast<int>(n)));
        if (n >= 3) trees.emplace_back("star", star_graph(static_cast<int>(n)));
        if (n >= 4) trees.emplace_back("random", random_tree(n, rng));
        for (const auto& [shape, tree] : trees) {
            for (unsigned r = 0; r <= 4; ++r) {
                const Poly direct = sigma_poly(disjoint_union(tree, complete_graph(static_cast<int>(r))));
                Poly formula = Poly::variable() * r_bell_poly(n - 1, r);
                if (r >= 1) formula += r_bell_poly(n - 1, r - 1) * Rational(Int(r));
                formula = formula.times_power_of_x(r);
                std::string note;
                const bool ok = (direct == formula) && rz_ok(direct, note);
                add(rep, "tree(" + shape + ", n=" + std::to_string(n) + ") + complete:" + std::to_string(r), ok,
                    ok ? note : "sigma " + direct.to_string() + " vs formula " + formula.to_string());
            }
        }
    }

    std::vector<std::pair<std::string, Graph>> base_graphs;
    for (unsigned n = 2; n <= std::min(nmax, 6u); ++n) {
        base_graphs.emplace_back("path:" + std::to_string(n), path_graph(static_cast<int>(n)));
    }
    base_graphs.emplace_back("cycle:4", cycle_graph(4));
    base_graphs.emplace_back("cycle:5", cycle_graph(5));
    base_graphs.emplace_back("complete:4", complete_graph(4));

    for (const auto& [name, g] : base_graphs) {
        const Poly f = chromatic_poly(g);
        for (unsigned r = 1; r <= 3; ++r) {
            const Poly via_graph = sigma_poly(disjoint_union(g, complete_graph(static_cast<int>(r))));
            const Poly via_op = apply_falling_op(f, r);
            std::string note;
            const bool ok = (via_graph == via_op) && rz_ok(via_graph, note);
            add(rep, "union with one clique: " + name + " + complete:" + std::to_string(r), ok,
                ok ? note : via_graph.to_string() + " vs " + via_op.to_string());
        }
        for (const auto& rs : increasing_chains(3, 2)) {
            if (rs.size() != 2) continue;
            Graph u = g;
            for (unsigned r : rs) u = disjoint_union(u, complete_graph(static_cast<int>(r)));
            const Poly via_graph = sigma_poly(u);
            const Poly via_chain = apply_falling_chain(f, rs).value;
            std::string note_a, note_b;
            const bool ok = rz_ok(via_graph, note_a) && rz_ok(via_chain, note_b);
            std::ostringstream w;
            if (via_graph == via_chain) {
                w << "nested chain agrees with the union route here";
            } else {
                w << "documented divergence: union route " << via_graph.to_string() << " vs nested chain "
                  << via_chain.to_string() << "; both certified real-rooted";
            }
            add(rep, "union with two cliques: " + name + " + " + join_chain(rs), ok, w.str());
        }
    }
    return rep;
}

// -------------------------------------------------------------------- prop5

SuiteReport suite_prop5(unsigned nmax, std::uint64_t seed) {
    SuiteReport rep;
    rep.suite_name = "prop5";
    rep.nmax = nmax;
    rep.seed = seed;

    const std::size_t len = nmax + 2;
    const std::vector<std::pair<std::string, Seq>> seqs = {
        {"ones", seq_ones(len)},
        {"shift:1", shift_seq(seq_ones(len), 1)},
        {"shift:2", shift_seq(seq_ones(len), 2)},
        {"factorials", seq_factorials(len)},
    };

    for (const auto& [name, a] : seqs) {
        const bool associated = name.rfind("shift:", 0) == 0;
        for (unsigned n = 0; n <= nmax; ++n) {
            for (unsigned r = 0; r <= 3; ++r) {
                const Poly series_route = v_poly(n, r, a);
                const Poly umbral_route = v_poly_umbral(n, r, a);
                bool ok = series_route == umbral_route;
                std::string witness;
                if (!ok) {
                    witness = series_route.to_string() + " vs " + umbral_route.to_string();
                } else if (associated) {
                    ok = rz_ok(series_route, witness);
                    if (!ok) witness = "not real-rooted: " + series_route.to_string();
                }
                add(rep, "a=" + name + " n=" + std::to_string(n) + " r=" + std::to_string(r), ok, witness);
            }
        }
    }

    {
        // Spot identity: the ones sequence reproduces the shifted Bell family.
        bool ok = true;
        std::string witness;
        for (unsigned n = 0; n <= nmax && ok; ++n) {
            for (unsigned r = 0; r <= 3 && ok; ++r) {
                if (v_poly(n, r, seq_ones(len)) != r_bell_poly(n, r)) {
                    ok = false;
                    witness = "n=" + std::to_string(n) + " r=" + std::to_string(r);
                }
            }
        }
        add(rep, "ones sequence matches the shifted Bell family", ok, witness);
    }
    return rep;
}

// -------------------------------------------------------------------- assoc

SuiteReport suite_assoc(unsigned nmax, std::uint64_t seed) {
    SuiteReport rep;
    rep.suite_name = "assoc";
    rep.nmax = nmax;
    rep.seed = seed;

    for (unsigned m = 2; m <= 3; ++m) {
        for (unsigned n = 0; n <= nmax; ++n) {
            const Poly p = assoc_bell_poly(m, n);
            bool ok = true;
            std::string witness;
            for (unsigned k = 0; k <= n && ok; ++k) {
                if (p.coeff(k) != Rational(assoc_stirling2(m, n, k))) {
                    ok = false;
                    witness = "coefficient k=" + std::to_string(k) + " of " + p.to_string();
                }
            }
            if (ok) {
                ok = rz_ok(p, witness);
                if (!ok) witness = "not real-rooted: " + p.to_string();
            }
            add(rep, "m=" + std::to_string(m) + " n=" + std::to_string(n), ok, witness);
        }
    }

    const bool spot = assoc_stirling2(2, 4, 2) == 3 && assoc_stirling2(2, 5, 2) == 10 &&
                      assoc_stirling2(3, 6, 2) == 10 && assoc_stirling2(2, 2, 1) == 1 &&
                      assoc_stirling2(3, 2, 1) == 0;
    add(rep, "hand-counted block-partition values", spot);
    return rep;
}

// ----------------------------------------------------------------- theorem3

SuiteReport suite_theorem3(unsigned nmax, std::uint64_t seed) {
    SuiteReport rep;
    rep.suite_name = "theorem3";
    rep.nmax = nmax;
    rep.seed = seed;

    const std::vector<std::pair<std::string, Seq>> hs = {
        {"ones", seq_ones(nmax)},
        {"factorials-offset", seq_factorials_offset(nmax)},
    };

    for (const auto& [name, h] : hs) {
        for (unsigned s = 1; s <= 2; ++s) {
            bool ok = true;
            std::string witness;
            try {
                const auto umbral_route = iterated_family(h, s, nmax);
                const auto egf_route = iterated_family_egf(h, s, nmax);
                if (umbral_route != egf_route) {
                    ok = false;
                    witness = "routes diverge";
                }
            } catch (const std::exception& e) {
                ok = false;
                witness = e.what();
            }
            add(rep, "generating-function identity, h=" + name + " s=" + std::to_string(s), ok, witness);
        }
    }

    {
        const auto a0 = iterated_family(seq_factorials_offset(nmax), 0, nmax);
        const auto a1 = iterated_family(seq_factorials_offset(nmax), 1, nmax);
        const auto a2 = iterated_family(seq_factorials_offset(nmax), 2, nmax);
        const auto bells = iterated_family(seq_ones(nmax), 0, nmax);
        bool ok = true;
        std::string witness;
        for (unsigned n = 0; n <= nmax && ok; ++n) {
            Poly lah_mix;
            for (unsigned k = 0; k <= n; ++k) lah_mix += bell_poly(k) * Rational(lah(n, k));
            if (a0[n] != rising_factorial_poly(n) || a1[n] != lah_poly(n) || a2[n] != lah_mix ||
                bells[n] != bell_poly(n)) {
                ok = false;
                witness = "n=" + std::to_string(n);
            }
        }
        add(rep, "level-0/1/2 closed families (rising, Lah, Lah-of-Bell; Bell)", ok, witness);
    }

    const unsigned log_n = std::max(nmax, 12u);
    const std::vector<Rational> xs = {Rational(1, 2), Rational(1), Rational(2)};
    for (const Rational& x : xs) {
        std::vector<Rational> rising_vals, lah_vals, rising_norm, lah_norm;
        for (unsigned n = 1; n <= log_n; ++n) {
            const Rational rv = rising_factorial_poly(n).eval(x);
            const Rational lv = lah_poly(n).eval(x);
            rising_vals.push_back(rv);
            lah_vals.push_back(lv);
            rising_norm.push_back(rv / Rational(factorial(n)));
            lah_norm.push_back(lv / Rational(factorial(n)));
        }
        const auto report_seq = [&](const char* label, const std::vector<Rational>& v, SeqProperty prop) {
            const SeqVerdict verdict =
                prop == SeqProperty::LogConvex ? is_log_convex(v, true) : is_log_concave(v, true);
            std::string witness;
            if (!verdict.holds && verdict.first_violation_index) {
                const std::size_t i = *verdict.first_violation_index;
                std::ostringstream w;
                w << "violated at position " << i << " (n=" << i + 1 << "): (" << rational_to_string(v[i]) << ")^2 "
                  << (prop == SeqProperty::LogConcave ? "<" : ">") << " (" << rational_to_string(v[i - 1]) << ") * ("
                  << rational_to_string(v[i + 1]) << ")";
                witness = w.str();
            }
            add(rep,
                std::string(label) + " at x=" + rational_to_string(x) + ", n=1.." + std::to_string(log_n) + " " +
                    (prop == SeqProperty::LogConvex ? "log-convex" : "log-concave"),
                verdict.holds, witness);
        };
        report_seq("rising factorial values", rising_vals, SeqProperty::LogConvex);
        report_seq("Lah values", lah_vals, SeqProperty::LogConvex);
        report_seq("rising factorial values / n!", rising_norm, SeqProperty::LogConcave);
        report_seq("Lah values / n!", lah_norm, SeqProperty::LogConcave);
    }

    // Conditional second-level certificates: only assert the r-indexed family
    // real-rooted when the r=0 member certifies first.
    for (const auto& [name, h] : hs) {
        for (unsigned s = 0; s <= 1; ++s) {
            const auto level = iterated_family(h, s, nmax);
            std::vector<Rational> at_one;
            for (unsigned j = 1; j <= nmax; ++j) at_one.push_back(level[j].eval(Rational(1)));
            const Seq a_s{std::vector<Rational>(at_one.begin(), at_one.end())};
            const unsigned top = std::min(nmax, 6u);
            bool base_ok = true;
            std::string witness;
            for (unsigned n = 0; n <= top && base_ok; ++n) {
                base_ok = rz_ok(v_poly(n, 0, a_s), witness);
                if (!base_ok) witness = "hypothesis fails at base member n=" + std::to_string(n) + "; conclusion vacuous";
            }
            bool ok = true;
            if (base_ok) {
                witness.clear();
                for (unsigned n = 0; n <= top && ok; ++n) {
                    for (unsigned r = 1; r <= 3 && ok; ++r) {
                        ok = rz_ok(v_poly(n, r, a_s), witness);
                        if (!ok) witness = "n=" + std::to_string(n) + " r=" + std::to_string(r);
                    }
                }
            }
            add(rep, "conditional r-indexed certificates, h=" + name + " s=" + std::to_string(s), ok, witness);
        }
    }
    return rep;
}

// ----------------------------------------------------------------- section4

SuiteReport suite_section4(unsigned nmax, std::uint64_t seed) {
    SuiteReport rep;
    rep.suite_name = "section4";
    rep.nmax = nmax;
    rep.seed = seed;

    struct Family {
        std::string name;
        Seq h;
        std::vector<Poly> base; // expected f^{(0)}
    };
    std::vector<Family> families;
    {
        std::vector<Poly> bells, fallings, lahs;
        for (unsigned n = 0; n <= nmax; ++n) {
            bells.push_back(bell_poly(n));
            fallings.push_back(falling_factorial_poly(n));
            lahs.push_back(lah_poly(n));
        }
        families.push_back({"exp-minus-one", seq_ones(nmax), bells});
        families.push_back({"log-one-plus", seq_log_coeffs(nmax), fallings});
        families.push_back({"geometric", seq_factorials(nmax), lahs});
    }

    const std::vector<Rational> one{Rational(1)};

    for (const Family& fam : families) {
        std::vector<std::vector<Poly>> levels;
        bool build_ok = true;
        std::string build_witness;
        try {
            for (unsigned r = 0; r <= 3; ++r) levels.push_back(f_family(one, fam.h, r, nmax));
        } catch (const std::exception& e) {
            build_ok = false;
            build_witness = e.what();
        }
        add(rep, fam.name + ": series extraction with derivative and convolution identities", build_ok, build_witness);
        if (!build_ok) continue;

        {
            bool ok = true;
            std::string witness;
            for (unsigned n = 0; n <= nmax && ok; ++n) {
                if (levels[0][n] != fam.base[n]) {
                    ok = false;
                    witness = "n=" + std::to_string(n) + ": " + levels[0][n].to_string();
                }
            }
            add(rep, fam.name + ": level 0 matches its closed family", ok, witness);
        }

        {
            bool ok = true;
            std::string witness;
            for (unsigned n = 0; n <= nmax && ok; ++n) {
                for (unsigned r = 1; r <= std::min(3u, n) && ok; ++r) {
                    if (levels[r][n] != levels[r - 1][n].derivative()) {
                        ok = false;
                        witness = "n=" + std::to_string(n) + " r=" + std::to_string(r);
                    }
                }
            }
            add(rep, fam.name + ": derivative ladder", ok, witness);
        }

        {
            bool ok = true;
            std::string witness;
            for (unsigned n = 0; n <= nmax && ok; ++n) {
                for (unsigned r = 0; r <= std::min(3u, n) && ok; ++r) {
                    const Poly& p = levels[r][n];
                    if (p.is_zero() || *p.degree() != static_cast<int>(n - r)) {
                        ok = false;
                        witness = "n=" + std::to_string(n) + " r=" + std::to_string(r) + ": " + p.to_string();
                    }
                }
            }
            add(rep, fam.name + ": degree drops by exactly r", ok, witness);
        }

        {
            bool ok = true;
            std::string witness;
            for (unsigned n = 0; n <= nmax && ok; ++n) {
                for (unsigned r = 0; r <= std::min(3u, n) && ok; ++r) {
                    std::string note;
                    ok = rz_ok(levels[r][n], note);
                    if (!ok) witness = "n=" + std::to_string(n) + " r=" + std::to_string(r);
                }
            }
            add(rep, fam.name + ": real-rootedness across the ladder", ok, witness);
        }
    }

    // Closed summation forms.  The generating-function route is ground truth;
    // each claimed variant is compared and its status reported.
    {
        const Family& fam = families[0];
        bool derived_ok = true;
        bool claimed_matches = true;
        std::string witness, claimed_note;
        for (unsigned r = 1; r <= 3; ++r) {
            const auto level = f_family(one, fam.h, r, nmax);
            for (unsigned n = r; n <= nmax; ++n) {
                Poly derived, claimed;
                for (unsigned k = r; k <= n; ++k) {
                    const Rational c(binomial(n, k));
                    derived += fam.base[n - k] * (c * Rational(stirling2(k, r)));
                    claimed += fam.base[n - k] * (c * Rational(stirling2(n, k)));
                }
                derived *= Rational(factorial(r));
                claimed *= Rational(factorial(r));
                if (level[n] != derived) {
                    derived_ok = false;
                    witness = "n=" + std::to_string(n) + " r=" + std::to_string(r);
                }
                if (level[n] != claimed && claimed_matches) {
                    claimed_matches = false;
                    claimed_note = "first divergence at n=" + std::to_string(n) + " r=" + std::to_string(r) + ": " +
                                   claimed.to_string() + " vs " + level[n].to_string();
                }
            }
        }
        add(rep, fam.name + ": summation with second-kind index {k,r}", derived_ok, witness);
        add(rep, fam.name + ": row-indexed variant {n,k} status", true,
            claimed_matches ? "matches (unexpected)" : "documented discrepancy: " + claimed_note);
    }
    {
        const Family& fam = families[1];
        bool ok = true;
        std::string witness;
        for (unsigned r = 1; r <= 3 && ok; ++r) {
            const auto level = f_family(one, fam.h, r, nmax);
            for (unsigned n = r; n <= nmax && ok; ++n) {
                Poly expected;
                for (unsigned k = r; k <= n; ++k) {
                    Rational c = Rational(binomial(n, k)) * Rational(stirling1_unsigned(k, r));
                    if ((k - r) % 2 == 1) c = -c;
                    expected += fam.base[n - k] * c;
                }
                expected *= Rational(factorial(r));
                if (level[n] != expected) {
                    ok = false;
                    witness = "n=" + std::to_string(n) + " r=" + std::to_string(r);
                }
            }
        }
        add(rep, fam.name + ": alternating first-kind summation", ok, witness);
    }
    {
        const Family& fam = families[2];
        bool derived_ok = true;
        bool claimed_matches = true;
        std::string witness, claimed_note;
        for (unsigned r = 1; r <= 3; ++r) {
            const auto level = f_family(one, fam.h, r, nmax);
            const auto scaled = f_family(one, fam.h, r, nmax, Rational(1) / Rational(factorial(r)));
            for (unsigned n = r; n <= nmax; ++n) {
                Poly derived, claimed;
                for (unsigned k = r; k <= n; ++k) {
                    const Rational c = Rational(binomial(n, k)) * Rational(lah(k, r));
                    derived += fam.base[n - k] * c;
                    Rational signed_c = c;
                    if ((k - r) % 2 == 1) signed_c = -signed_c;
                    claimed += fam.base[n - k] * signed_c;
                }
                derived *= Rational(factorial(r));
                claimed *= Rational(factorial(r));
                if (level[n] != derived) {
                    derived_ok = false;
                    witness = "n=" + std::to_string(n) + " r=" + std::to_string(r);
                }
                // The factorial-scaled variant pairs with the summation
                // without the leading r!; check that consistency as well.
                if (scaled[n] * Rational(factorial(r)) != level[n]) {
                    derived_ok = false;
                    witness = "scale mismatch at n=" + std::to_string(n) + " r=" + std::to_string(r);
                }
                if (level[n] != claimed && claimed_matches) {
                    claimed_matches = false;
                    claimed_note = "first divergence at n=" + std::to_string(n) + " r=" + std::to_string(r) + ": " +
                                   claimed.to_string() + " vs " + level[n].to_string();
                }
            }
        }
        add(rep, fam.name + ": Lah-coefficient summation", derived_ok, witness);
        add(rep, fam.name + ": alternating-sign variant status", true,
            claimed_matches ? "matches (unexpected)" : "documented discrepancy: " + claimed_note);
    }
    return rep;
}

} // namespace

std::vector<std::string> list_suites() {
    return {"theorem1", "examples2", "sigma-corollary", "prop5", "assoc", "theorem3", "section4"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport rep;
    if (name == "theorem1") {
        rep = suite_theorem1(opts.nmax.value_or(8), opts.seed);
    } else if (name == "examples2") {
        rep = suite_examples2(opts.nmax.value_or(6), opts.seed);
    } else if (name == "sigma-corollary") {
        rep = suite_sigma_corollary(opts.nmax.value_or(7), opts.seed);
    } else if (name == "prop5") {
        rep = suite_prop5(opts.nmax.value_or(8), opts.seed);
    } else if (name == "assoc") {
        rep = suite_assoc(opts.nmax.value_or(8), opts.seed);
    } else if (name == "theorem3") {
        rep = suite_theorem3(opts.nmax.value_or(8), opts.seed);
    } else if (name == "section4") {
        rep = suite_section4(opts.nmax.value_or(8), opts.seed);
    } else {
        throw InputError("unknown suite '" + name + "'; available: theorem1, examples2, sigma-corollary, prop5, assoc, theorem3, section4");
    }
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

nlohmann::ordered_json suite_report_to_json(const SuiteReport& report) {
    nlohmann::ordered_json j;
    j["suite_name"] = report.suite_name;
    j["nmax"] = report.nmax;
    j["seed"] = report.seed;
    j["all_passed"] = report.all_passed();
    j["elapsed_seconds"] = report.elapsed_seconds;
    nlohmann::ordered_json instances = nlohmann::ordered_json::array();
    for (const SuiteInstance& inst : report.instances) {
        nlohmann::ordered_json ji;
        ji["params"] = inst.params;
        ji["passed"] = inst.passed;
        if (!inst.witness.empty()) ji["witness"] = inst.witness;
        instances.push_back(std::move(ji));
    }
    j["instances"] = std::move(instances);
    return j;
}

} // namespace umbral
