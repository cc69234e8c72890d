#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulerlab {

// Exact arithmetic carriers. Every coordinate, weight, norm and certificate
// entry in this library is an Int or a Rat; there is no floating point.
using Int = mpz_class;
using Rat = mpq_class;

/// num/den in canonical form (den > 0, gcd = 1). Throws on den == 0.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

inline Int ceil_rat(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

/// Fractional part {x} in [0, 1).
inline Rat frac_rat(const Rat& x) { return x - Rat(floor_rat(x)); }

/// Canonical representative of x mod 1 in [0, 1).
inline Rat mod1(const Rat& x) { return frac_rat(x); }

inline Rat abs_rat(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

/// "p" when integral, "p/q" otherwise.
inline std::string rat_str(const Rat& x) {
    if (is_integer(x)) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline std::string int_str(const Int& x) { return x.get_str(); }

/// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument on junk.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
    auto slash = s.find('/');
    auto check_int = [&](const std::string& t) {
        if (t.empty()) throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    };
    if (slash == std::string::npos) {
        check_int(s);
        return Rat(Int(s, 10));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    Int d(den, 10);
    if (d == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
    return make_rat(Int(num, 10), d);
}

inline Int parse_int(const std::string& s) {
    Rat r = parse_rat(s);
    if (!is_integer(r)) throw std::invalid_argument("parse_int: '" + s + "' is not an integer");
    return r.get_num();
}

/// Deterministic small PRNG for corpus generation (engine output reduced by
/// modulo so corpora are identical across standard library implementations).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, n).
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    long range(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Random rational p/q with 1 <= q <= max_den, 0 <= p/q < 1.
    Rat unit_fraction(long max_den) {
        long q = range(1, max_den);
        long p = range(0, q - 1);
        return make_rat(p, q);
    }

private:
    std::uint64_t state_;
};

}  // namespace eulerlab
