#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "pvi/errors.hpp"

namespace pvi::detail {

// Truncated Laurent series sum_{k=lo}^{hi} c[k-lo] T^k. hi is the last order
// whose coefficient is trusted; every operation computes the window of the
// result from the windows of its operands, so accuracy claims are audited by
// construction rather than by convention. The scalar type is a parameter so
// ill-conditioned pipelines can run in extended precision.
template <class C>
struct BasicSeries {
    int lo = 0;
    std::vector<C> c;

    int hi() const { return lo + int(c.size()) - 1; }

    C at(int k) const {
        if (k < lo || k > hi()) return C(0);
        return c[std::size_t(k - lo)];
    }
};

using LSeries = BasicSeries<std::complex<double>>;

template <class C>
BasicSeries<C> sconst(C v, int cap) {
    BasicSeries<C> s;
    s.lo = 0;
    s.c.assign(std::size_t(cap + 1), C(0));
    s.c[0] = v;
    return s;
}

inline LSeries sconst(double v, int cap) { return sconst(std::complex<double>(v), cap); }

// T^m
template <class C = std::complex<double>>
BasicSeries<C> smonomial(int m, int cap) {
    BasicSeries<C> s;
    s.lo = m;
    s.c.assign(std::size_t(cap - m + 1), C(0));
    s.c[0] = C(1);
    return s;
}

template <class C>
BasicSeries<C> sadd(const BasicSeries<C>& a, const BasicSeries<C>& b) {
    BasicSeries<C> r;
    r.lo = std::min(a.lo, b.lo);
    const int hi = std::min(a.hi(), b.hi());
    if (hi < r.lo) throw Error("series add: empty window");
    r.c.assign(std::size_t(hi - r.lo + 1), C(0));
    for (int k = r.lo; k <= hi; ++k) r.c[std::size_t(k - r.lo)] = a.at(k) + b.at(k);
    return r;
}

template <class C>
BasicSeries<C> sscale(const BasicSeries<C>& a, C v) {
    BasicSeries<C> r = a;
    for (auto& x : r.c) x *= v;
    return r;
}

inline LSeries sscale(const LSeries& a, double v) { return sscale(a, std::complex<double>(v)); }

template <class C>
BasicSeries<C> ssub(const BasicSeries<C>& a, const BasicSeries<C>& b) {
    return sadd(a, sscale(b, C(-1)));
}

template <class C>
BasicSeries<C> smul(const BasicSeries<C>& a, const BasicSeries<C>& b, int cap) {
    BasicSeries<C> r;
    r.lo = a.lo + b.lo;
    const int hi = std::min({a.hi() + b.lo, b.hi() + a.lo, cap});
    if (hi < r.lo) throw Error("series mul: empty window");
    r.c.assign(std::size_t(hi - r.lo + 1), C(0));
    for (int i = a.lo; i <= a.hi(); ++i) {
        if (a.at(i) == C(0)) continue;
        const int jmax = std::min(b.hi(), hi - i);
        for (int j = b.lo; j <= jmax; ++j)
            r.c[std::size_t(i + j - r.lo)] += a.at(i) * b.at(j);
    }
    return r;
}

// d/dT; window shifts down by one order at both ends
template <class C>
BasicSeries<C> sdiff(const BasicSeries<C>& a) {
    using R = typename C::value_type;
    BasicSeries<C> r;
    r.lo = a.lo - 1;
    r.c.assign(a.c.size(), C(0));
    for (int k = a.lo; k <= a.hi(); ++k)
        r.c[std::size_t((k - 1) - r.lo)] = R(k) * a.at(k);
    return r;
}

// strip leading entries that are zero relative to the largest coefficient
template <class C>
BasicSeries<C> strim(const BasicSeries<C>& a, double rel = 1e-9) {
    using R = typename C::value_type;
    R big = 0;
    for (const auto& x : a.c) big = std::max(big, std::abs(x));
    BasicSeries<C> r = a;
    std::size_t drop = 0;
    while (drop + 1 < r.c.size() && std::abs(r.c[drop]) <= R(rel) * big) ++drop;
    r.lo += int(drop);
    r.c.erase(r.c.begin(), r.c.begin() + long(drop));
    return r;
}

// 1/a; the leading coefficient must be genuinely nonzero
template <class C>
BasicSeries<C> sinv(const BasicSeries<C>& a_in, int cap) {
    const BasicSeries<C> a = strim(a_in);
    if (a.c.empty() || std::abs(a.c[0]) == 0)
        throw Error("series inverse: zero leading coefficient");
    BasicSeries<C> r;
    r.lo = -a.lo;
    const int hi = std::min(a.hi() - 2 * a.lo, cap);
    if (hi < r.lo) throw Error("series inverse: empty window");
    r.c.assign(std::size_t(hi - r.lo + 1), C(0));
    r.c[0] = C(1) / a.c[0];
    // (a0 + a1 T + ...)(r0 + r1 T + ...) = 1 at each order
    for (std::size_t n = 1; n < r.c.size(); ++n) {
        C acc = 0;
        for (std::size_t j = 1; j <= n && j < a.c.size(); ++j)
            acc += a.c[j] * r.c[n - j];
        r.c[n] = -acc / a.c[0];
    }
    return r;
}

// a(u(T)) for u with strictly positive valuation; Horner over the poly part,
// then the Laurent prefactor u^{a.lo}
template <class C>
BasicSeries<C> scompose(const BasicSeries<C>& a, const BasicSeries<C>& u, int cap) {
    if (strim(u).lo < 1) throw Error("series compose: inner valuation must be >= 1");
    BasicSeries<C> acc = sconst(a.at(a.hi()), cap);
    for (int k = a.hi() - 1; k >= a.lo; --k)
        acc = sadd(smul(acc, u, cap), sconst(a.at(k), cap));
    if (a.lo > 0) {
        for (int j = 0; j < a.lo; ++j) acc = smul(acc, u, cap);
    } else if (a.lo < 0) {
        const BasicSeries<C> iu = sinv(u, cap);
        for (int j = 0; j < -a.lo; ++j) acc = smul(acc, iu, cap);
    }
    return acc;
}

template <class C>
C seval(const BasicSeries<C>& a, C u) {
    C acc = 0;
    for (int k = a.hi(); k >= a.lo; --k) acc = acc * u + a.at(k);
    if (a.lo != 0) acc *= std::pow(u, a.lo);
    return acc;
}

} // namespace pvi::detail
