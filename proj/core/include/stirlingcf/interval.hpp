#ifndef STIRLINGCF_INTERVAL_HPP
#define STIRLINGCF_INTERVAL_HPP

#include <string>

#include "stirlingcf/rational.hpp"

namespace stirlingcf {

/// Closed rational interval [lo, hi]; certifies that a real quantity lies
/// between exact endpoints.
struct Interval {
    Rational lo, hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw DomainError("Interval: lo > hi");
    }

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }

    /// Intersection of two enclosures of the same quantity.
    /// Throws DomainError if disjoint.
    Interval intersect(const Interval& o) const {
        Rational l = lo > o.lo ? lo : o.lo;
        Rational h = hi < o.hi ? hi : o.hi;
        if (l > h) throw DomainError("Interval::intersect: disjoint intervals");
        return Interval(std::move(l), std::move(h));
    }

    Interval& operator+=(const Interval& o) {
        lo += o.lo;
        hi += o.hi;
        return *this;
    }
    friend Interval operator+(Interval a, const Interval& b) { return a += b; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }

    std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
};

} // namespace stirlingcf

#endif
