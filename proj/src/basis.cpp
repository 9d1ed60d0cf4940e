#include "umbral/combinat.hpp"
#include "umbral/poly.hpp"

namespace umbral {

// Basis changes ride on y^n = sum_k S(n,k) (y)_k and its signed inverse.

FactPoly to_falling(const Poly& p) {
    if (p.is_zero()) return FactPoly();
    const std::size_t count = p.coeff_count();
    std::vector<Rational> d(count, Rational(0));
    for (std::size_t n = 0; n < count; ++n) {
        const Rational& c = p.coeff(n);
        if (c == 0) continue;
        for (std::size_t k = 0; k <= n; ++k) {
            d[k] += c * Rational(stirling2(static_cast<unsigned>(n), static_cast<unsigned>(k)));
        }
    }
    return FactPoly(std::move(d));
}

Poly from_falling(const FactPoly& f) {
    Poly p;
    for (std::size_t k = 0; k < f.coeff_count(); ++k) {
        const Rational& d = f.coeff(k);
        if (d == 0) continue;
        p += falling_factorial_poly(static_cast<unsigned>(k)) * d;
    }
    return p;
}

} // namespace umbral
