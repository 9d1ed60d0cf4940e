#pragma once

#include "umbral/poly.hpp"

#include <vector>

namespace umbral {

/// Umbral evaluation: expand f over the falling-factorial basis and replace
/// (y)_k by x^k.  Sends y^n to the exponential (Bell-type) polynomial of
/// degree n and is the workhorse behind everything else in this header.
Poly umbral_eval(const Poly& f);

/// umbral_eval(y^n): sum_k S(n,k) x^k.
Poly bell_poly(unsigned n);

/// umbral_eval((y+r)^n): shifted variant whose coefficients count partitions
/// with r distinguished extra elements.
Poly r_bell_poly(unsigned n, unsigned r);

/// umbral_eval((y+n-1)_n): sum_k L(n,k) x^k with Lah coefficients.
Poly lah_poly(unsigned n);

/// One operator step: f |-> x^r * umbral_eval(f(y+r)).
Poly apply_falling_op(const Poly& f, unsigned r);

/// Chain application result plus the inputs needed to reproduce it.
struct UmbralResult {
    Poly value;
    Poly source;
    std::vector<unsigned> chain;
};

/// Left fold of apply_falling_op over rs: the first list element is applied
/// first, and each intermediate output is re-read as a polynomial in y.
/// The fold is order-sensitive; see the docs for a concrete example.
UmbralResult apply_falling_chain(const Poly& f, const std::vector<unsigned>& rs);

/// apply_falling_chain(y^n, rs).value / x^max(rs), with the division checked
/// to be exact.  Exactness is guaranteed for chains applied in non-decreasing
/// order (the last factor contributes x^max); a failure raises
/// InternalInconsistency.
Poly multi_r_bell(unsigned n, const std::vector<unsigned>& rs);

/// Checks umbral_eval(f(y+r)) == umbral_eval(f(y+r-1)) + d/dx umbral_eval(f(y+r-1)),
/// the Rolle-style step that moves shifted evaluations up by one.
bool rolle_step_check(const Poly& f, unsigned r);

/// Floating reference value for umbral_eval(f)(x0) from the truncated series
/// e^{-x0} * sum_{k < terms} f(k) x0^k / k!, summed in 50-digit floats with
/// exact rational f(k).
double dobinski_oracle(const Poly& f, const Rational& x0, unsigned terms);

} // namespace umbral
