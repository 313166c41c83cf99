#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace siegel {

// Arbitrary-precision integers everywhere. Coefficient swell in exact
// elimination is real even on small matrices, so fixed-width types are not
// an option for the lattice layer.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int igcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Int ilcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int g = igcd(a, b);
    Int l = (a / g) * b;
    return l < 0 ? -l : l;
}

inline Int iabs(const Int& a) { return a < 0 ? Int(-a) : a; }

// Extended gcd: returns g = gcd(a,b) and (x,y) with a*x + b*y = g, g >= 0.
struct ExtGcd {
    Int g, x, y;
};

inline ExtGcd egcd(const Int& a, const Int& b) {
    if (b == 0) {
        if (a < 0) return {-a, Int(-1), Int(0)};
        return {a, Int(1), Int(0)};
    }
    ExtGcd r = egcd(b, a % b);
    return {r.g, r.y, r.x - (a / b) * r.y};
}

inline long to_long(const Int& v) {
    return static_cast<long>(v);
}

[[noreturn]] inline void fail(const std::string& msg) {
    throw std::runtime_error(msg);
}

inline void check(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
}

}  // namespace siegel
