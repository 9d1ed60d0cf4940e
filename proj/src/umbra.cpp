#include "umbral/umbra.hpp"

#include "umbral/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <string>

namespace umbral {

Poly umbral_eval(const Poly& f) {
    const FactPoly d = to_falling(f);
    std::vector<Rational> out(d.coeffs().begin(), d.coeffs().end());
    return Poly(std::move(out));
}

Poly bell_poly(unsigned n) {
    return umbral_eval(Poly::monomial(n));
}

Poly r_bell_poly(unsigned n, unsigned r) {
    return umbral_eval(Poly::monomial(n).shifted(Rational(Int(r))));
}

Poly lah_poly(unsigned n) {
    if (n == 0) return Poly::one();
    return umbral_eval(falling_factorial_poly(n).shifted(Rational(Int(n) - 1)));
}

Poly apply_falling_op(const Poly& f, unsigned r) {
    return umbral_eval(f.shifted(Rational(Int(r)))).times_power_of_x(r);
}

UmbralResult apply_falling_chain(const Poly& f, const std::vector<unsigned>& rs) {
    UmbralResult result;
    result.source = f;
    result.chain = rs;
    Poly acc = f;
    for (unsigned r : rs) acc = apply_falling_op(acc, r);
    result.value = std::move(acc);
    return result;
}

Poly multi_r_bell(unsigned n, const std::vector<unsigned>& rs) {
    const UmbralResult chained = apply_falling_chain(Poly::monomial(n), rs);
    const unsigned m = rs.empty() ? 0u : *std::max_element(rs.begin(), rs.end());
    try {
        return chained.value.divided_by_power_of_x(m);
    } catch (const InputError&) {
        throw InternalInconsistency(
            "chain output on y^" + std::to_string(n) + " is not divisible by x^" + std::to_string(m) +
            "; this divisibility is guaranteed for non-decreasing chains");
    }
}

bool rolle_step_check(const Poly& f, unsigned r) {
    if (r == 0) throw InputError("rolle_step_check needs r >= 1");
    const Poly lower = umbral_eval(f.shifted(Rational(Int(r) - 1)));
    const Poly upper = umbral_eval(f.shifted(Rational(Int(r))));
    return upper == lower + lower.derivative();
}

double dobinski_oracle(const Poly& f, const Rational& x0, unsigned terms) {
    using BigFloat = boost::multiprecision::cpp_bin_float_50;
    const BigFloat x0f(x0);
    BigFloat weight(1); // x0^k / k!
    BigFloat sum(0);
    for (unsigned k = 0; k < terms; ++k) {
        if (k > 0) weight *= x0f / k;
        sum += BigFloat(f.eval(Rational(Int(k)))) * weight;
    }
    const BigFloat value = sum * exp(-x0f);
    return value.convert_to<double>();
}

} // namespace umbral
