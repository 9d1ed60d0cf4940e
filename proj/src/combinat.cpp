#include "umbral/combinat.hpp"

#include "umbral/errors.hpp"
#include "umbral/poly.hpp"
#include "umbral/series.hpp"

#include <map>
#include <mutex>

namespace umbral {

namespace {

// Row-by-row triangle cache; grow() fills rows [rows.size(), n].
class TriangleCache {
public:
    template <typename Fill>
    Int at(unsigned n, unsigned k, Fill fill) {
        std::lock_guard<std::mutex> lock(mutex_);
        while (rows_.size() <= n) {
            const unsigned m = static_cast<unsigned>(rows_.size());
            std::vector<Int> row(m + 1, Int(0));
            fill(m, rows_, row);
            rows_.push_back(std::move(row));
        }
        if (k >= rows_[n].size()) return Int(0);
        return rows_[n][k];
    }

private:
    std::mutex mutex_;
    std::vector<std::vector<Int>> rows_;
};

} // namespace

Int binomial(unsigned n, unsigned k) {
    if (k > n) return Int(0);
    static TriangleCache cache;
    return cache.at(n, k, [](unsigned m, const std::vector<std::vector<Int>>& prev, std::vector<Int>& row) {
        row[0] = 1;
        row[m] = 1;
        for (unsigned j = 1; j < m; ++j) row[j] = prev[m - 1][j - 1] + prev[m - 1][j];
    });
}

Int stirling2(unsigned n, unsigned k) {
    if (k > n) return Int(0);
    static TriangleCache cache;
    return cache.at(n, k, [](unsigned m, const std::vector<std::vector<Int>>& prev, std::vector<Int>& row) {
        if (m == 0) {
            row[0] = 1;
            return;
        }
        for (unsigned j = 1; j <= m; ++j) {
            Int v = Int(j) * (j < prev[m - 1].size() ? prev[m - 1][j] : Int(0));
            v += prev[m - 1][j - 1];
            row[j] = v;
        }
    });
}

Int stirling1_unsigned(unsigned n, unsigned k) {
    if (k > n) return Int(0);
    static TriangleCache cache;
    return cache.at(n, k, [](unsigned m, const std::vector<std::vector<Int>>& prev, std::vector<Int>& row) {
        if (m == 0) {
            row[0] = 1;
            return;
        }
        for (unsigned j = 1; j <= m; ++j) {
            Int v = Int(m - 1) * (j < prev[m - 1].size() ? prev[m - 1][j] : Int(0));
            v += prev[m - 1][j - 1];
            row[j] = v;
        }
    });
}

Int stirling1_signed(unsigned n, unsigned k) {
    Int v = stirling1_unsigned(n, k);
    if ((n - k) % 2 == 1) v = -v;
    return v;
}

Int r_stirling1_unsigned(unsigned n, unsigned k, unsigned r) {
    if (r == 0) return stirling1_unsigned(n, k);
    if (n < r || k < r || k > n) return Int(0);
    static std::mutex registry_mutex;
    static std::map<unsigned, TriangleCache> registry;
    TriangleCache* cache = nullptr;
    {
        std::lock_guard<std::mutex> lock(registry_mutex);
        cache = &registry[r];
    }
    // Store row n at index n - r so the base row sits at 0.
    return cache->at(n - r, k - r, [r](unsigned m, const std::vector<std::vector<Int>>& prev, std::vector<Int>& row) {
        if (m == 0) {
            row[0] = 1; // value(r, r) = 1
            return;
        }
        const unsigned n_abs = m + r;
        for (unsigned j = 0; j <= m; ++j) {
            Int v = Int(n_abs - 1) * (j < prev[m - 1].size() ? prev[m - 1][j] : Int(0));
            if (j >= 1) v += prev[m - 1][j - 1];
            row[j] = v;
        }
    });
}

Int lah(unsigned n, unsigned k) {
    if (k > n) return Int(0);
    if (n == 0) return Int(1);
    if (k == 0) return Int(0);
    return binomial(n - 1, k - 1) * factorial(n) / factorial(k);
}

Int assoc_stirling2(unsigned m, unsigned n, unsigned k) {
    if (m == 0) throw InputError("associated Stirling block size must be >= 1");
    if (k > n) return Int(0);
    if (n == 0) return Int(1); // the empty partition
    if (k == 0) return Int(0);
    // n! [t^n] phi^k / k!  with phi = sum_{j >= m} t^j / j!.
    TruncSeries phi(n);
    for (unsigned j = m; j <= n; ++j) phi.set_coeff(j, Poly::one());
    const TruncSeries pw = series_pow(phi, k);
    const Poly c = pw.coeff(n);
    if (!c.is_zero() && *c.degree() != 0) {
        throw InternalInconsistency("associated Stirling series produced a non-constant coefficient");
    }
    const Rational v = c.coeff(0) / Rational(factorial(k));
    if (boost::multiprecision::denominator(v) != 1) {
        throw InternalInconsistency("associated Stirling value is not an integer");
    }
    return Int(boost::multiprecision::numerator(v));
}

NumberTable::NumberTable(NumberKind kind, unsigned param) : kind_(kind), param_(param) {}

Int NumberTable::value(unsigned n, unsigned k) const {
    switch (kind_) {
        case NumberKind::Binomial: return binomial(n, k);
        case NumberKind::Stirling2: return stirling2(n, k);
        case NumberKind::Stirling1Unsigned: return stirling1_unsigned(n, k);
        case NumberKind::Stirling1Signed: return stirling1_signed(n, k);
        case NumberKind::RStirling1Unsigned: return r_stirling1_unsigned(n, k, param_);
        case NumberKind::Lah: return lah(n, k);
        case NumberKind::AssocStirling2: return assoc_stirling2(param_, n, k);
    }
    throw InputError("unknown number table kind");
}

std::vector<std::vector<Int>> NumberTable::rows(unsigned n_max) const {
    std::vector<std::vector<Int>> out;
    out.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        std::vector<Int> row;
        row.reserve(n + 1);
        for (unsigned k = 0; k <= n; ++k) row.push_back(value(n, k));
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace umbral
