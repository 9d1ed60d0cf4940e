#pragma once

#include "umbral/poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace umbral {

/// Outcome of an exact real-rootedness check.  `sturm_sign_variations` holds
/// the variation counts at -infinity and +infinity for the square-free part.
struct RzCertificate {
    bool all_real = false;
    int degree = 0;
    int real_root_count_with_multiplicity = 0;
    int squarefree_part_degree = 0;
    std::pair<int, int> sturm_sign_variations{0, 0};
};

/// p / gcd(p, p'), normalized monic.
Poly squarefree_part(const Poly& p);

/// Classical remainder chain p, p', -rem(...), ... with each element reduced
/// to its primitive integer form (positive scalar only, signs preserved).
std::vector<Poly> sturm_chain(const Poly& p);

/// Exact real-root census.  Distinct roots come from the Sturm chain of the
/// square-free part; multiplicities are restored by recursing on gcd(p, p').
/// Degree-0 inputs certify vacuously; the zero polynomial is rejected.
RzCertificate certify_rz(const Poly& p);

enum class SeqProperty { LogConcave, LogConvex };

struct SeqVerdict {
    SeqProperty property{};
    bool holds = false;
    /// Index of the middle element of the first violating triple (or of the
    /// first non-positive entry when positivity is demanded).
    std::optional<std::size_t> first_violation_index;
};

// Exact three-term inequality scans: a_i^2 >= a_{i-1} a_{i+1} for concave,
// <= for convex.  No divisions, so zero entries are handled literally.
SeqVerdict is_log_concave(const std::vector<Rational>& a, bool strict_positivity_required);
SeqVerdict is_log_convex(const std::vector<Rational>& a, bool strict_positivity_required);

} // namespace umbral
