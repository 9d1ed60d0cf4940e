#pragma once

#include "umbral/rational.hpp"

#include <vector>

namespace umbral {

// Cached combinatorial number triangles.  All functions return 0 outside their
// support and are safe to call concurrently (caches carry internal locks).

Int binomial(unsigned n, unsigned k);

/// Set partitions of n into k blocks: S(n,k) = k S(n-1,k) + S(n-1,k-1).
Int stirling2(unsigned n, unsigned k);

/// Permutations of n with k cycles: c(n,k) = (n-1) c(n-1,k) + c(n-1,k-1).
Int stirling1_unsigned(unsigned n, unsigned k);

/// (-1)^(n-k) * stirling1_unsigned(n,k); these expand (y)_n in powers of y.
Int stirling1_signed(unsigned n, unsigned k);

/// Restricted cycle counts: elements 1..r pinned to distinct cycles.
/// Base case: value(r, r) = 1; same recurrence as stirling1_unsigned above it.
/// Zero for n < r, k < r or k > n.  r = 0 reduces to stirling1_unsigned.
Int r_stirling1_unsigned(unsigned n, unsigned k, unsigned r);

/// Lah numbers L(n,k) = C(n-1,k-1) n!/k!.
Int lah(unsigned n, unsigned k);

/// Partitions of n into k blocks, each of size >= m, read off the EGF
/// (e^t - 1 - t - ... - t^(m-1)/(m-1)!)^k / k!.  m = 1 recovers stirling2.
Int assoc_stirling2(unsigned m, unsigned n, unsigned k);

enum class NumberKind {
    Binomial,
    Stirling2,
    Stirling1Unsigned,
    Stirling1Signed,
    RStirling1Unsigned,
    Lah,
    AssocStirling2,
};

/// Uniform handle over one triangle; `param` carries r (restricted Stirling)
/// or the minimum block size m (associated Stirling), ignored otherwise.
class NumberTable {
public:
    explicit NumberTable(NumberKind kind, unsigned param = 0);

    NumberKind kind() const { return kind_; }
    unsigned param() const { return param_; }

    Int value(unsigned n, unsigned k) const;
    std::vector<std::vector<Int>> rows(unsigned n_max) const;

private:
    NumberKind kind_;
    unsigned param_;
};

} // namespace umbral
