#pragma once

#include "umbral/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace umbral {

/// Dense univariate polynomial over the rationals, indexed from the constant
/// coefficient upward.  The zero polynomial is the empty coefficient vector;
/// its degree is reported as std::nullopt rather than any integer sentinel.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);

    static Poly zero();
    static Poly one();
    static Poly variable();
    static Poly constant(const Rational& c);
    static Poly monomial(std::size_t k, const Rational& c = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree() const;
    std::size_t coeff_count() const { return coeffs_.size(); }

    const Rational& coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading_coeff() const;

    Rational eval(const Rational& x) const;
    Poly derivative() const;

    /// p(y) -> p(y + r).
    Poly shifted(const Rational& r) const;

    Poly times_power_of_x(std::size_t k) const;
    /// Exact division by x^k; the k lowest coefficients must vanish.
    Poly divided_by_power_of_x(std::size_t k) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    bool operator==(const Poly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    /// Human-readable form for diagnostics, e.g. "x^3 + 3x^2 + x".
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of exact rational long division (deg rem < deg divisor).
std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den);

/// Primitive integer multiple of p with positive leading coefficient.
Poly primitive_part(const Poly& p);

/// Content-normalized gcd (primitive, positive leading coefficient).
Poly poly_gcd(const Poly& a, const Poly& b);

/// Coefficients over the falling-factorial basis: value = sum d_k * (y)_k.
class FactPoly {
public:
    FactPoly() = default;
    explicit FactPoly(std::vector<Rational> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t coeff_count() const { return coeffs_.size(); }
    const Rational& coeff(std::size_t k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool operator==(const FactPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const FactPoly& rhs) const { return !(*this == rhs); }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Exact basis changes between power and falling-factorial coefficients.
FactPoly to_falling(const Poly& p);
Poly from_falling(const FactPoly& f);

/// (y)_n = y (y-1) ... (y-n+1) as an ordinary polynomial.
Poly falling_factorial_poly(unsigned n);
/// y (y+1) ... (y+n-1).
Poly rising_factorial_poly(unsigned n);

} // namespace umbral
