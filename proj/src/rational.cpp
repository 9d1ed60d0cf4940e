#include "umbral/rational.hpp"

#include "umbral/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <mutex>
#include <vector>

namespace umbral {

Int factorial(unsigned n) {
    static std::mutex m;
    static std::vector<Int> cache{1};
    std::lock_guard<std::mutex> lock(m);
    while (cache.size() <= n) {
        cache.push_back(cache.back() * Int(cache.size()));
    }
    return cache[n];
}

std::string rational_to_string(const Rational& q) {
    const Int num = boost::multiprecision::numerator(q);
    const Int den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Int(s));
        }
        const Int num(s.substr(0, slash));
        const Int den(s.substr(slash + 1));
        if (den == 0) throw InputError("zero denominator in rational literal '" + s + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw InputError("malformed rational literal '" + s + "'");
    }
}

int sign_of(const Rational& q) {
    if (q > 0) return 1;
    if (q < 0) return -1;
    return 0;
}

} // namespace umbral
