#include "umbral/bellpart.hpp"

#include "umbral/combinat.hpp"
#include "umbral/errors.hpp"
#include "umbral/series.hpp"
#include "umbral/umbra.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace umbral {

Seq::Seq(std::vector<Rational> entries, std::string label)
    : entries_(std::move(entries)), label_(std::move(label)) {}

const Rational& Seq::at(std::size_t i) const {
    if (i == 0 || i > entries_.size()) {
        throw InputError("sequence index " + std::to_string(i) + " outside stored prefix of length " +
                         std::to_string(entries_.size()));
    }
    return entries_[i - 1];
}

Seq shift_seq(const Seq& a, unsigned m) {
    std::vector<Rational> out(m, Rational(0));
    out.insert(out.end(), a.entries().begin(), a.entries().end());
    return Seq(std::move(out), a.label().empty() ? "" : "shift:" + a.label());
}

Seq e_plus(const Seq& a) {
    std::vector<Rational> out;
    out.reserve(a.length() + 1);
    out.push_back(Rational(1));
    out.insert(out.end(), a.entries().begin(), a.entries().end());
    return Seq(std::move(out));
}

Seq seq_ones(std::size_t len) {
    return Seq(std::vector<Rational>(len, Rational(1)), "ones");
}

Seq seq_factorials(std::size_t len) {
    std::vector<Rational> v;
    v.reserve(len);
    for (std::size_t j = 1; j <= len; ++j) v.emplace_back(factorial(static_cast<unsigned>(j)));
    return Seq(std::move(v), "factorials");
}

Seq seq_factorials_offset(std::size_t len) {
    std::vector<Rational> v;
    v.reserve(len);
    for (std::size_t j = 1; j <= len; ++j) v.emplace_back(factorial(static_cast<unsigned>(j) - 1));
    return Seq(std::move(v), "factorials-offset");
}

Seq seq_log_coeffs(std::size_t len) {
    std::vector<Rational> v;
    v.reserve(len);
    for (std::size_t j = 1; j <= len; ++j) {
        Rational c(factorial(static_cast<unsigned>(j) - 1));
        if (j % 2 == 0) c = -c;
        v.push_back(std::move(c));
    }
    return Seq(std::move(v), "log-coeffs");
}

namespace {

// EGF series over constant coefficients built from a 1-indexed sequence; the
// needed prefix must exist, entries beyond `needed` cannot influence the
// extracted coefficient and are zero-padded.
TruncSeries phi_series(const Seq& a, unsigned order, std::size_t needed) {
    if (a.length() < needed) {
        throw InputError("sequence too short: need entries up to index " + std::to_string(needed) +
                         ", have " + std::to_string(a.length()));
    }
    TruncSeries s(order);
    const std::size_t top = std::min<std::size_t>(order, a.length());
    for (std::size_t j = 1; j <= top; ++j) s.set_coeff(static_cast<unsigned>(j), Poly::constant(a.at(j)));
    return s;
}

// (sum_j b_{j+1} t^j/j!): index 0 of the series reads entry 1 of b.
TruncSeries b_series(const Seq& b, unsigned order, std::size_t needed) {
    if (b.length() < needed) {
        throw InputError("companion sequence too short: need entries up to index " + std::to_string(needed) +
                         ", have " + std::to_string(b.length()));
    }
    TruncSeries s(order);
    for (unsigned j = 0; j <= order; ++j) {
        if (j + 1 <= b.length()) s.set_coeff(j, Poly::constant(b.at(j + 1)));
    }
    return s;
}

Rational constant_of(const Poly& p, const char* what) {
    if (p.is_zero()) return Rational(0);
    if (*p.degree() != 0) throw InternalInconsistency(std::string(what) + " produced a non-constant coefficient");
    return p.coeff(0);
}

} // namespace

Rational partial_bell(unsigned n, unsigned k, const Seq& a) {
    if (k > n) return Rational(0);
    if (n == 0) return Rational(1); // k == 0 here
    if (k == 0) return Rational(0);
    const std::size_t needed = n - k + 1;
    const TruncSeries phi = phi_series(a, n, needed);
    const TruncSeries pw = series_pow(phi, k);
    return constant_of(pw.coeff(n), "partial Bell series") / Rational(factorial(k));
}

Rational partial_r_bell(unsigned n, unsigned k, const RBellSpec& spec) {
    if (spec.r == 0) return partial_bell(n, k, spec.a);
    if (k > n) return Rational(0);
    const std::size_t b_needed = n - k + 1;
    TruncSeries acc = series_pow(b_series(spec.b, n, b_needed), spec.r);
    if (k > 0) {
        const TruncSeries phi = phi_series(spec.a, n, n - k + 1);
        acc = series_mul(acc, series_pow(phi, k));
    }
    return constant_of(acc.coeff(n), "partial r-Bell series") / Rational(factorial(k));
}

Poly v_poly(unsigned n, unsigned r, const Seq& a) {
    const RBellSpec spec{a, e_plus(a), r};
    std::vector<Rational> coeffs(n + 1);
    for (unsigned k = 0; k <= n; ++k) coeffs[k] = partial_r_bell(n, k, spec);
    return Poly(std::move(coeffs));
}

Poly v_poly_umbral(unsigned n, unsigned r, const Seq& a) {
    std::vector<Rational> d(n + 1);
    for (unsigned k = 0; k <= n; ++k) d[k] = partial_bell(n, k, a);
    const Poly f = from_falling(FactPoly(std::move(d)));
    return umbral_eval(f.shifted(Rational(Int(r))));
}

Poly assoc_bell_poly(unsigned m, unsigned n) {
    if (m == 0) throw InputError("associated family needs block size >= 1");
    return v_poly(n, 0, shift_seq(seq_ones(n + 1), m - 1));
}

namespace {

// exp(x * sum_j v_j t^j/j!) for a 1-indexed value list v.
TruncSeries exp_x_times(const std::vector<Rational>& v, unsigned order) {
    TruncSeries xh(order);
    for (unsigned j = 1; j <= order; ++j) {
        if (j <= v.size()) xh.set_coeff(j, Poly::monomial(1, v[j - 1]));
    }
    return series_exp(xh);
}

std::vector<Poly> extract(const TruncSeries& s) {
    std::vector<Poly> out;
    out.reserve(s.order() + 1);
    for (unsigned n = 0; n <= s.order(); ++n) out.push_back(s.coeff(n));
    return out;
}

} // namespace

std::vector<Poly> iterated_family(const Seq& h_coeffs, unsigned s, unsigned n_max) {
    if (h_coeffs.length() < n_max) {
        throw InputError("h needs coefficients up to index " + std::to_string(n_max));
    }
    std::vector<Poly> level =
        extract(exp_x_times(std::vector<Rational>(h_coeffs.entries().begin(), h_coeffs.entries().end()), n_max));
    for (unsigned step = 1; step <= s; ++step) {
        std::vector<Poly> next;
        next.reserve(level.size());
        for (const Poly& p : level) next.push_back(umbral_eval(p));
        // Cross-check against the generating-function route at every level.
        std::vector<Rational> at_one;
        at_one.reserve(n_max);
        for (unsigned j = 1; j <= n_max; ++j) at_one.push_back(level[j].eval(Rational(1)));
        const std::vector<Poly> via_egf = extract(exp_x_times(at_one, n_max));
        if (via_egf != next) {
            throw InternalInconsistency("iterated family level " + std::to_string(step) +
                                        " disagrees with its generating function");
        }
        level = std::move(next);
    }
    return level;
}

std::vector<Poly> iterated_family_egf(const Seq& h_coeffs, unsigned s, unsigned n_max) {
    if (h_coeffs.length() < n_max) {
        throw InputError("h needs coefficients up to index " + std::to_string(n_max));
    }
    std::vector<Rational> coeffs(h_coeffs.entries().begin(), h_coeffs.entries().end());
    std::vector<Poly> level = extract(exp_x_times(coeffs, n_max));
    for (unsigned step = 1; step <= s; ++step) {
        std::vector<Rational> at_one;
        at_one.reserve(n_max);
        for (unsigned j = 1; j <= n_max; ++j) at_one.push_back(level[j].eval(Rational(1)));
        level = extract(exp_x_times(at_one, n_max));
    }
    return level;
}

namespace {

std::vector<Poly> f_family_plain(const std::vector<Rational>& f_coeffs, const Seq& h, unsigned r, unsigned n_max) {
    TruncSeries hs(n_max);
    for (unsigned j = 1; j <= n_max; ++j) hs.set_coeff(j, Poly::constant(h.at(j)));
    std::vector<Rational> hv(h.entries().begin(), h.entries().end());
    TruncSeries acc = series_mul(series_pow(hs, r), exp_x_times(hv, n_max));
    TruncSeries fs(n_max);
    for (unsigned j = 0; j <= n_max; ++j) {
        if (j < f_coeffs.size()) fs.set_coeff(j, Poly::constant(f_coeffs[j]));
    }
    return extract(series_mul(fs, acc));
}

} // namespace

std::vector<Poly> f_family(const std::vector<Rational>& f_coeffs, const Seq& h_coeffs, unsigned r,
                           unsigned n_max, const Rational& scale) {
    if (h_coeffs.length() < n_max) {
        throw InputError("h needs coefficients up to index " + std::to_string(n_max));
    }
    std::vector<Poly> fam = f_family_plain(f_coeffs, h_coeffs, r, n_max);

    if (r >= 1) {
        const std::vector<Poly> below = f_family_plain(f_coeffs, h_coeffs, r - 1, n_max);
        for (unsigned n = 0; n <= n_max; ++n) {
            if (fam[n] != below[n].derivative()) {
                throw InternalInconsistency("derivative identity failed at n = " + std::to_string(n) +
                                            ", r = " + std::to_string(r));
            }
        }
    }

    const std::vector<Poly> base =
        (r == 0) ? fam : f_family_plain(f_coeffs, h_coeffs, 0, n_max);
    const Rational rfac(factorial(r));
    for (unsigned n = 0; n <= n_max; ++n) {
        Poly conv;
        for (unsigned k = r; k <= n; ++k) {
            const Rational b = partial_bell(k, r, h_coeffs);
            if (b == 0) continue;
            conv += base[n - k] * (Rational(binomial(n, k)) * b);
        }
        conv *= rfac;
        if (conv != fam[n]) {
            throw InternalInconsistency("convolution identity failed at n = " + std::to_string(n) +
                                        ", r = " + std::to_string(r));
        }
    }

    if (scale != 1) {
        for (Poly& p : fam) p *= scale;
    }
    return fam;
}

} // namespace umbral
