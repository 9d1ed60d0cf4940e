#include "umbral/rzcert.hpp"

#include "umbral/errors.hpp"

namespace umbral {

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw InputError("square-free part of the zero polynomial");
    if (*p.degree() == 0) return Poly::one();
    const Poly g = poly_gcd(p, p.derivative());
    Poly q = poly_divmod(p, g).first;
    return q * (Rational(1) / q.leading_coeff());
}

namespace {

// Primitive integer scaling by a positive factor only.  Unlike
// primitive_part, the sign of the input is preserved: Sturm sequences are
// only invariant under positive scalar multiples.
Poly positive_primitive(const Poly& q) {
    Poly pp = primitive_part(q);
    if (sign_of(q.leading_coeff()) < 0) pp = -pp;
    return pp;
}

} // namespace

std::vector<Poly> sturm_chain(const Poly& p) {
    if (p.is_zero()) throw InputError("Sturm chain of the zero polynomial");
    std::vector<Poly> chain;
    chain.push_back(positive_primitive(p));
    if (*p.degree() == 0) return chain;
    Poly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(positive_primitive(d));
    while (true) {
        const Poly& a = chain[chain.size() - 2];
        const Poly& b = chain.back();
        Poly r = poly_divmod(a, b).second;
        if (r.is_zero()) break;
        chain.push_back(positive_primitive(-r));
    }
    return chain;
}

namespace {

// Sign variation counts of the chain at -infinity and +infinity, read off the
// leading coefficients and degree parities.
std::pair<int, int> variations_at_infinity(const std::vector<Poly>& chain) {
    int prev_neg = 0, prev_pos = 0;
    int var_neg = 0, var_pos = 0;
    for (const Poly& p : chain) {
        const int lead = sign_of(p.leading_coeff());
        const int deg = *p.degree();
        const int at_pos = lead;
        const int at_neg = (deg % 2 == 0) ? lead : -lead;
        if (prev_neg != 0 && at_neg != prev_neg) ++var_neg;
        if (prev_pos != 0 && at_pos != prev_pos) ++var_pos;
        prev_neg = at_neg;
        prev_pos = at_pos;
    }
    return {var_neg, var_pos};
}

} // namespace

RzCertificate certify_rz(const Poly& p) {
    if (p.is_zero()) throw InputError("cannot certify the zero polynomial");
    RzCertificate cert;
    cert.degree = *p.degree();
    if (cert.degree == 0) {
        cert.all_real = true;
        return cert;
    }

    const Poly sf = squarefree_part(p);
    cert.squarefree_part_degree = *sf.degree();
    const std::vector<Poly> chain = sturm_chain(sf);
    cert.sturm_sign_variations = variations_at_infinity(chain);
    const int distinct = cert.sturm_sign_variations.first - cert.sturm_sign_variations.second;

    int with_multiplicity = distinct;
    const Poly g = poly_gcd(p, p.derivative());
    if (!g.is_zero() && *g.degree() >= 1) {
        with_multiplicity += certify_rz(g).real_root_count_with_multiplicity;
    }
    cert.real_root_count_with_multiplicity = with_multiplicity;
    cert.all_real = (with_multiplicity == cert.degree);
    return cert;
}

namespace {

SeqVerdict scan(const std::vector<Rational>& a, SeqProperty prop, bool strict_positivity) {
    SeqVerdict v;
    v.property = prop;
    v.holds = true;
    if (strict_positivity) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!(a[i] > 0)) {
                v.holds = false;
                v.first_violation_index = i;
                return v;
            }
        }
    }
    for (std::size_t i = 1; i + 1 < a.size(); ++i) {
        const Rational lhs = a[i] * a[i];
        const Rational rhs = a[i - 1] * a[i + 1];
        const bool ok = (prop == SeqProperty::LogConcave) ? (lhs >= rhs) : (lhs <= rhs);
        if (!ok) {
            v.holds = false;
            v.first_violation_index = i;
            return v;
        }
    }
    return v;
}

} // namespace

SeqVerdict is_log_concave(const std::vector<Rational>& a, bool strict_positivity_required) {
    return scan(a, SeqProperty::LogConcave, strict_positivity_required);
}

SeqVerdict is_log_convex(const std::vector<Rational>& a, bool strict_positivity_required) {
    return scan(a, SeqProperty::LogConvex, strict_positivity_required);
}

} // namespace umbral
