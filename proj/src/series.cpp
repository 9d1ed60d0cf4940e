#include "umbral/series.hpp"

#include "umbral/combinat.hpp"
#include "umbral/errors.hpp"

#include <utility>

namespace umbral {

TruncSeries::TruncSeries(unsigned order) : order_(order), coeffs_(order + 1) {}

TruncSeries::TruncSeries(unsigned order, std::vector<Poly> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != order_ + 1) {
        throw InputError("series coefficient count does not match its order");
    }
}

TruncSeries TruncSeries::one(unsigned order) {
    TruncSeries s(order);
    s.set_coeff(0, Poly::one());
    return s;
}

const Poly& TruncSeries::coeff(unsigned n) const {
    if (n > order_) throw InputError("series coefficient index beyond truncation order");
    return coeffs_[n];
}

void TruncSeries::set_coeff(unsigned n, Poly p) {
    if (n > order_) throw InputError("series coefficient index beyond truncation order");
    coeffs_[n] = std::move(p);
}

bool TruncSeries::operator==(const TruncSeries& rhs) const {
    return order_ == rhs.order_ && coeffs_ == rhs.coeffs_;
}

namespace {
void require_same_order(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order()) throw InputError("series order mismatch");
}
} // namespace

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b);
    TruncSeries out(a.order());
    for (unsigned n = 0; n <= a.order(); ++n) out.set_coeff(n, a.coeff(n) + b.coeff(n));
    return out;
}

TruncSeries series_scale(const TruncSeries& a, const Poly& factor) {
    TruncSeries out(a.order());
    for (unsigned n = 0; n <= a.order(); ++n) out.set_coeff(n, a.coeff(n) * factor);
    return out;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b);
    TruncSeries out(a.order());
    for (unsigned n = 0; n <= a.order(); ++n) {
        Poly c;
        for (unsigned k = 0; k <= n; ++k) {
            if (a.coeff(k).is_zero() || b.coeff(n - k).is_zero()) continue;
            c += a.coeff(k) * b.coeff(n - k) * Rational(binomial(n, k));
        }
        out.set_coeff(n, std::move(c));
    }
    return out;
}

TruncSeries series_exp(const TruncSeries& a) {
    if (!a.coeff(0).is_zero()) {
        throw InputError("series_exp requires a zero constant term");
    }
    // E_0 = 1 and E_{n+1} = sum_k C(n,k) a_{k+1} E_{n-k}, from E' = a' E.
    TruncSeries e(a.order());
    e.set_coeff(0, Poly::one());
    for (unsigned n = 0; n + 1 <= a.order(); ++n) {
        Poly next;
        for (unsigned k = 0; k <= n; ++k) {
            if (a.coeff(k + 1).is_zero()) continue;
            next += a.coeff(k + 1) * e.coeff(n - k) * Rational(binomial(n, k));
        }
        e.set_coeff(n + 1, std::move(next));
    }
    return e;
}

TruncSeries series_pow(const TruncSeries& a, unsigned k) {
    TruncSeries out = TruncSeries::one(a.order());
    for (unsigned i = 0; i < k; ++i) out = series_mul(out, a);
    return out;
}

TruncSeries series_derivative_t(const TruncSeries& a) {
    if (a.order() == 0) throw InputError("cannot differentiate an order-0 series in t");
    TruncSeries out(a.order() - 1);
    for (unsigned n = 0; n + 1 <= a.order(); ++n) out.set_coeff(n, a.coeff(n + 1));
    return out;
}

TruncSeries series_truncate(const TruncSeries& a, unsigned order) {
    if (order > a.order()) throw InputError("cannot extend a truncated series");
    TruncSeries out(order);
    for (unsigned n = 0; n <= order; ++n) out.set_coeff(n, a.coeff(n));
    return out;
}

} // namespace umbral
