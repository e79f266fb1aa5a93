#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace comin {

// All arithmetic in the library is exact: arbitrary-precision integers and
// rationals, no floating point.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

// Exact integer value of a rational known to be integral.
inline Int to_int(const Rat& q) {
    if (!is_integral(q)) throw std::invalid_argument("to_int: not an integer: " + q.get_str());
    return q.get_num();
}

inline std::string to_string(const Int& z) { return z.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline int lex_compare(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

struct IntVecLess {
    bool operator()(const IntVec& a, const IntVec& b) const { return lex_compare(a, b) < 0; }
};

} // namespace comin
