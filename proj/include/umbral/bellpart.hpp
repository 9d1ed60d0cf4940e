#pragma once

#include "umbral/poly.hpp"

#include <string>
#include <vector>

namespace umbral {

/// Finite prefix of a coefficient sequence a_1, a_2, ... (1-indexed).
/// Operations that need entries beyond the stored prefix fail fast instead of
/// padding silently.
class Seq {
public:
    Seq() = default;
    explicit Seq(std::vector<Rational> entries, std::string label = "");

    std::size_t length() const { return entries_.size(); }
    /// 1-based accessor; out-of-range raises.
    const Rational& at(std::size_t i) const;
    const std::vector<Rational>& entries() const { return entries_; }
    const std::string& label() const { return label_; }

private:
    std::vector<Rational> entries_;
    std::string label_;
};

/// Prepend m zeros (drops the tail beyond the stored prefix).
Seq shift_seq(const Seq& a, unsigned m);

/// b = (1, a_1, a_2, ...): the "1 +" companion used by the r-indexed series.
Seq e_plus(const Seq& a);

Seq seq_ones(std::size_t len);
/// a_j = j!.
Seq seq_factorials(std::size_t len);
/// a_j = (j-1)!.
Seq seq_factorials_offset(std::size_t len);
/// a_j = (-1)^(j-1) (j-1)!, the coefficients of log(1+t).
Seq seq_log_coeffs(std::size_t len);

struct RBellSpec {
    Seq a;
    Seq b;
    unsigned r = 0;
};

/// B_{n,k}(a) = n! [t^n] phi(t)^k / k! with phi = sum_j a_j t^j / j!.
Rational partial_bell(unsigned n, unsigned k, const Seq& a);

/// r-indexed variant: n! [t^n] phi_a^k (sum_j b_{j+1} t^j/j!)^r / k!.
Rational partial_r_bell(unsigned n, unsigned k, const RBellSpec& spec);

/// sum_k partial_r_bell(n, k, {a, e_plus(a), r}) x^k, the series route.
Poly v_poly(unsigned n, unsigned r, const Seq& a);

/// Same polynomial through the operator route: build f_n over the
/// falling-factorial basis from partial_bell, shift by r, umbrally evaluate.
Poly v_poly_umbral(unsigned n, unsigned r, const Seq& a);

/// v_poly(n, 0, .) for the sequence with ones from index m on: coefficients
/// count partitions into blocks of size >= m.
Poly assoc_bell_poly(unsigned m, unsigned n);

/// Level-s family: level 0 extracts exp(x h(t)); each next level feeds every
/// polynomial through umbral_eval.  The EGF identity
///   1 + sum A_n^{(s)} t^n/n! = exp(x sum_j A_j^{(s-1)}(1) t^j/j!)
/// is re-verified internally at every level.
std::vector<Poly> iterated_family(const Seq& h_coeffs, unsigned s, unsigned n_max);

/// Same family computed purely through the EGF identity (no umbral step);
/// exposed so callers can compare the two routes independently.
std::vector<Poly> iterated_family_egf(const Seq& h_coeffs, unsigned s, unsigned n_max);

/// f_n^{(r)} for n = 0..n_max from F(t) h(t)^r exp(x h(t)), scaled by `scale`.
/// F is given by its EGF coefficients from index 0 and is zero-extended.
/// Two internal cross-checks run on the unscaled family: the derivative
/// identity f_n^{(r)} = d/dx f_n^{(r-1)} and the convolution
/// f_n^{(r)} = r! sum_k C(n,k) B_{k,r}(h) f_{n-k}^{(0)}.
std::vector<Poly> f_family(const std::vector<Rational>& f_coeffs, const Seq& h_coeffs, unsigned r,
                           unsigned n_max, const Rational& scale = Rational(1));

} // namespace umbral
