#include "umbral/poly.hpp"

#include "umbral/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <sstream>

namespace umbral {

namespace {
const Rational kZero(0);
} // namespace

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::zero() { return Poly(); }

Poly Poly::one() { return constant(Rational(1)); }

Poly Poly::variable() { return monomial(1); }

Poly Poly::constant(const Rational& c) {
    Poly p;
    if (c != 0) p.coeffs_.push_back(c);
    return p;
}

Poly Poly::monomial(std::size_t k, const Rational& c) {
    Poly p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, kZero);
        p.coeffs_[k] = c;
    }
    return p;
}

std::optional<int> Poly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

const Rational& Poly::coeff(std::size_t i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return kZero;
}

const Rational& Poly::leading_coeff() const {
    if (coeffs_.empty()) throw InputError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * Rational(Int(i));
    }
    return Poly(std::move(d));
}

Poly Poly::shifted(const Rational& r) const {
    // Horner in the shifted variable: p(y+r) built factor by factor.
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        // acc = acc * (y + r) + c_i
        std::vector<Rational> next(acc.coeffs_.size() + 1, kZero);
        for (std::size_t i = 0; i < acc.coeffs_.size(); ++i) {
            next[i + 1] += acc.coeffs_[i];
            next[i] += acc.coeffs_[i] * r;
        }
        Poly stepped{std::move(next)};
        stepped += Poly::constant(*it);
        acc = std::move(stepped);
    }
    return acc;
}

Poly Poly::times_power_of_x(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> out(coeffs_.size() + k, kZero);
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<std::ptrdiff_t>(k));
    return Poly(std::move(out));
}

Poly Poly::divided_by_power_of_x(std::size_t k) const {
    if (k == 0) return *this;
    if (coeffs_.size() < k) {
        if (is_zero()) return *this;
        throw InputError("polynomial not divisible by x^" + std::to_string(k));
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (coeffs_[i] != 0) {
            throw InputError("polynomial not divisible by x^" + std::to_string(k));
        }
    }
    return Poly(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

Poly Poly::operator-() const {
    Poly out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), kZero);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), kZero);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, kZero);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        const Rational a = c > 0 ? c : Rational(-c);
        if (a != 1 || i == 0) os << rational_to_string(a);
        if (i >= 1) {
            if (a != 1) os << "*";
            os << "x";
            if (i >= 2) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw InputError("polynomial division by zero");
    Poly rem = num;
    Poly quot;
    const int dden = *den.degree();
    while (!rem.is_zero() && *rem.degree() >= dden) {
        const std::size_t shift = static_cast<std::size_t>(*rem.degree() - dden);
        const Rational factor = rem.leading_coeff() / den.leading_coeff();
        Poly term = Poly::monomial(shift, factor);
        quot += term;
        rem -= term * den;
    }
    return {quot, rem};
}

Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    Int den_lcm(1);
    for (const auto& c : p.coeffs()) {
        if (c == 0) continue;
        den_lcm = boost::multiprecision::lcm(den_lcm, Int(boost::multiprecision::denominator(c)));
    }
    Int num_gcd(0);
    for (const auto& c : p.coeffs()) {
        if (c == 0) continue;
        Int scaled_num = Int(boost::multiprecision::numerator(c)) * (den_lcm / Int(boost::multiprecision::denominator(c)));
        num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(scaled_num));
    }
    Rational scale(den_lcm, num_gcd);
    if (p.leading_coeff() < 0) scale = -scale;
    return p * scale;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = primitive_part(a);
    Poly y = primitive_part(b);
    while (!y.is_zero()) {
        Poly r = poly_divmod(x, y).second;
        x = std::move(y);
        y = primitive_part(r);
    }
    return x;
}

FactPoly::FactPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void FactPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& FactPoly::coeff(std::size_t k) const {
    if (k < coeffs_.size()) return coeffs_[k];
    return kZero;
}

Poly falling_factorial_poly(unsigned n) {
    Poly p = Poly::one();
    for (unsigned i = 0; i < n; ++i) {
        p *= Poly({Rational(-Int(i)), Rational(1)});
    }
    return p;
}

Poly rising_factorial_poly(unsigned n) {
    Poly p = Poly::one();
    for (unsigned i = 0; i < n; ++i) {
        p *= Poly({Rational(Int(i)), Rational(1)});
    }
    return p;
}

} // namespace umbral
