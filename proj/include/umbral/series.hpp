#pragma once

#include "umbral/poly.hpp"

#include <vector>

namespace umbral {

/// Truncated exponential generating function: coeff(n) is the coefficient of
/// t^n/n!, itself a polynomial in x.  The truncation order is fixed at
/// construction and all binary operations require matching orders.
class TruncSeries {
public:
    explicit TruncSeries(unsigned order);
    TruncSeries(unsigned order, std::vector<Poly> coeffs);

    static TruncSeries one(unsigned order);

    unsigned order() const { return order_; }
    const Poly& coeff(unsigned n) const;
    void set_coeff(unsigned n, Poly p);

    bool operator==(const TruncSeries& rhs) const;
    bool operator!=(const TruncSeries& rhs) const { return !(*this == rhs); }

private:
    unsigned order_;
    std::vector<Poly> coeffs_;
};

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_scale(const TruncSeries& a, const Poly& factor);

/// Cauchy product in EGF form: c_n = sum_k C(n,k) a_k b_{n-k}.
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

/// exp of a series with zero constant term, via E' = a' E.
TruncSeries series_exp(const TruncSeries& a);

TruncSeries series_pow(const TruncSeries& a, unsigned k);

/// d/dt: shifts EGF coefficients down one slot; order drops by one.
TruncSeries series_derivative_t(const TruncSeries& a);

TruncSeries series_truncate(const TruncSeries& a, unsigned order);

} // namespace umbral
