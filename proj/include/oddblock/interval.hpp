#ifndef ODDBLOCK_INTERVAL_HPP
#define ODDBLOCK_INTERVAL_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "oddblock/ints.hpp"

namespace oddblock {

// Closed interval with exact rational endpoints.  No rounding anywhere.
struct RationalInterval {
    Rat lo, hi;

    RationalInterval() : lo(0), hi(0) {}
    RationalInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
    static RationalInterval point(const Rat& v) { return {v, v}; }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    bool strictly_positive() const { return lo > 0; }
    bool strictly_negative() const { return hi < 0; }
    bool disjoint(const RationalInterval& o) const { return hi < o.lo || o.hi < lo; }
    bool intersects(const RationalInterval& o) const { return !disjoint(o); }

    RationalInterval operator+(const RationalInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RationalInterval operator-(const RationalInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RationalInterval operator-() const { return {-hi, -lo}; }
    RationalInterval operator*(const RationalInterval& o) const {
        Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
    }
    RationalInterval operator*(const Rat& s) const {
        return s >= 0 ? RationalInterval{lo * s, hi * s} : RationalInterval{hi * s, lo * s};
    }
    RationalInterval operator+(const Rat& s) const { return {lo + s, hi + s}; }

    // Reciprocal; caller must ensure 0 is excluded.
    RationalInterval inverse() const { return {Rat(1) / hi, Rat(1) / lo}; }
    RationalInterval operator/(const RationalInterval& o) const { return *this * o.inverse(); }
};

inline RationalInterval operator*(const Int& c, const RationalInterval& v) {
    Rat s(c);
    return v * s;
}

} // namespace oddblock

#endif
