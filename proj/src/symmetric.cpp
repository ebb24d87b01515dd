#include "pvi/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "pvi/detail/series.hpp"

namespace pvi {

namespace {

using detail::LSeries;
using detail::sadd;
using detail::scompose;
using detail::sconst;
using detail::sdiff;
using detail::seval;
using detail::sinv;
using detail::smonomial;
using detail::smul;
using detail::sscale;
using detail::ssub;
using detail::strim;

LSeries make_poly(std::initializer_list<std::pair<int, cplx>> terms, int cap) {
    int lo = cap;
    for (const auto& [k, v] : terms) lo = std::min(lo, k);
    LSeries s;
    s.lo = lo;
    s.c.assign(std::size_t(cap - lo + 1), 0.0);
    for (const auto& [k, v] : terms) s.c[std::size_t(k - lo)] += v;
    return s;
}

// Residuals of the cleared first-order system,
//   Ry = t(t-1) y' - G(y, z, t),   Rz = t(t-1) z' - H(y, z, t),
// for series y, z around t = t0. In magnitude mode every subtraction turns
// into an addition and every coefficient into its modulus, so the result
// bounds the term size feeding each order: the audit compares residual rows
// against it instead of against an arbitrary absolute gate.
struct ClearedSystem {
    PviParams p;
    cplx t0;
    int cap;
    bool mag = false;

    cplx k(cplx v) const { return mag ? cplx(std::abs(v)) : v; }
    LSeries kabs(const LSeries& s) const {
        if (!mag) return s;
        LSeries r = s;
        for (auto& x : r.c) x = std::abs(x);
        return r;
    }
    LSeries minus(const LSeries& a, const LSeries& b) const {
        return mag ? sadd(a, b) : ssub(a, b);
    }

    LSeries tser() const { return make_poly({{0, k(t0)}, {1, 1.0}}, cap); }
    LSeries tpoly() const {
        return make_poly({{0, k(t0 * (t0 - 1.0))}, {1, k(2.0 * t0 - 1.0)}, {2, 1.0}}, cap);
    }

    LSeries big_g(const LSeries& y, const LSeries& z) const {
        const LSeries ym1 = minus(y, sconst(1.0, cap));
        const LSeries ymt = minus(y, tser());
        const LSeries yy1 = smul(y, ym1, cap);
        LSeries g = sscale(smul(smul(yy1, ymt, cap), z, cap), 2.0);
        g = minus(g, sscale(yy1, k(p.alpha0 - 1.0)));
        g = minus(g, sscale(smul(y, ymt, cap), k(p.alpha3)));
        g = minus(g, sscale(smul(ym1, ymt, cap), k(p.alpha4)));
        return g;
    }

    LSeries big_s(const LSeries& y) const {
        const LSeries ym1 = minus(y, sconst(1.0, cap));
        const LSeries ymt = minus(y, tser());
        return sadd(smul(y, ym1, cap), sadd(smul(ym1, ymt, cap), smul(y, ymt, cap)));
    }

    LSeries big_w(const LSeries& y) const {
        const LSeries ty = sscale(y, 2.0);
        LSeries w = sscale(minus(ty, sconst(1.0, cap)), k(p.alpha0 - 1.0));
        w = sadd(w, sscale(minus(ty, tser()), k(p.alpha3)));
        w = sadd(w, sscale(minus(minus(ty, tser()), sconst(1.0, cap)), k(p.alpha4)));
        return w;
    }

    LSeries big_h(const LSeries& y, const LSeries& z) const {
        const LSeries sz2 = smul(big_s(y), smul(z, z, cap), cap);
        const LSeries wz = smul(big_w(y), z, cap);
        return minus(minus(wz, sz2), sconst(k((p.alpha1 + p.alpha2) * p.alpha2), cap));
    }

    std::pair<LSeries, LSeries> residuals(const LSeries& y, const LSeries& z) const {
        // in magnitude mode the derivative weights |k| so negative orders do
        // not reintroduce signs
        const LSeries dy = mag ? kabs(sdiff(y)) : sdiff(y);
        const LSeries dz = mag ? kabs(sdiff(z)) : sdiff(z);
        const LSeries ry = minus(smul(tpoly(), dy, cap), big_g(y, z));
        const LSeries rz = minus(smul(tpoly(), dz, cap), big_h(y, z));
        return {ry, rz};
    }

    // partial derivatives of G and H in y and z, as series
    LSeries g_y(const LSeries& y, const LSeries& z) const {
        const LSeries ym1 = ssub(y, sconst(1.0, cap));
        const LSeries ymt = ssub(y, tser());
        LSeries b = sadd(smul(ym1, ymt, cap), sadd(smul(y, ymt, cap), smul(y, ym1, cap)));
        LSeries g = sscale(smul(b, z, cap), 2.0);
        const LSeries ty = sscale(y, 2.0);
        g = ssub(g, sscale(ssub(ty, sconst(1.0, cap)), p.alpha0 - 1.0));
        g = ssub(g, sscale(ssub(ty, tser()), p.alpha3));
        g = ssub(g, sscale(ssub(ssub(ty, tser()), sconst(1.0, cap)), p.alpha4));
        return g;
    }
    LSeries g_z(const LSeries& y) const {
        const LSeries ym1 = ssub(y, sconst(1.0, cap));
        const LSeries ymt = ssub(y, tser());
        return sscale(smul(smul(y, ym1, cap), ymt, cap), 2.0);
    }
    LSeries h_y(const LSeries& y, const LSeries& z) const {
        // S_y = 6y - 2(1 + t), W_y = 2(alpha0 - 1 + alpha3 + alpha4)
        const LSeries sy =
            ssub(sscale(y, 6.0), sadd(sconst(2.0, cap), sscale(tser(), 2.0)));
        const cplx wy = 2.0 * (p.alpha0 - 1.0 + p.alpha3 + p.alpha4);
        return sadd(sscale(smul(sy, smul(z, z, cap), cap), -1.0), sscale(z, wy));
    }
    LSeries h_z(const LSeries& y, const LSeries& z) const {
        return sadd(sscale(smul(big_s(y), z, cap), -2.0), big_w(y));
    }
};

struct BranchSpec {
    cplx center;
    int y_lo, z_lo;
    std::vector<std::pair<int, cplx>> y_seeds, z_seeds;
    std::vector<int> y_unknowns, z_unknowns;
};

struct Hit {
    int which;  // 0 = Ry row, 1 = Rz row
    int order;
};

// first order at which the column pair (contribution to Ry, to Rz) is
// nonzero; preference breaks ties between the two residual rows. "Nonzero"
// is judged against the entries of a short leading band: hits always land
// within a couple of orders of the column valuation, while far coefficients
// grow geometrically and would drown a global scale.
Hit first_hit(const LSeries& into_ry, const LSeries& into_rz, int prefer, int avoid_which,
              int avoid_order) {
    const int lo = std::min(into_ry.lo, into_rz.lo);
    const int hi = std::max(into_ry.hi(), into_rz.hi());
    const int band = std::min(hi, lo + 8);
    double scale = 0.0;
    for (int k = lo; k <= band; ++k)
        scale = std::max({scale, std::abs(into_ry.at(k)), std::abs(into_rz.at(k))});
    const double gate = 1e-7 * scale;
    for (int k = lo; k <= band; ++k) {
        for (int w : {prefer, 1 - prefer}) {
            if (w == avoid_which && k == avoid_order) continue;
            const cplx v = (w == 0) ? into_ry.at(k) : into_rz.at(k);
            if (std::abs(v) > gate) return {w, k};
        }
    }
    return {-1, 0};
}

LaurentSeriesPair solve_direct(const PviParams& p, const BranchSpec& spec,
                               const std::string& branch, int n, double trust) {
    const int cap = n + 6;
    const ClearedSystem sys{p, spec.center, cap};

    LSeries y, z;
    y.lo = spec.y_lo;
    y.c.assign(std::size_t(cap - y.lo + 1), 0.0);
    z.lo = spec.z_lo;
    z.c.assign(std::size_t(cap - z.lo + 1), 0.0);
    for (const auto& [k, v] : spec.y_seeds) y.c[std::size_t(k - y.lo)] = v;
    for (const auto& [k, v] : spec.z_seeds) z.c[std::size_t(k - z.lo)] = v;

    const std::size_t nsteps = std::min(spec.y_unknowns.size(), spec.z_unknowns.size());
    for (std::size_t step = 0; step < nsteps; ++step) {
        const int my = spec.y_unknowns[step];
        const int mz = spec.z_unknowns[step];

        Hit ra{-1, 0}, rb{-1, 0};
        for (int iter = 0; iter < 10; ++iter) {
            const LSeries gy = sys.g_y(y, z);
            const LSeries gz = sys.g_z(y);
            const LSeries hy = sys.h_y(y, z);
            const LSeries hz = sys.h_z(y, z);
            const LSeries tp = sys.tpoly();

            // columns of the Jacobian with respect to the two coefficients
            const LSeries col_y_ry = ssub(sscale(smul(tp, smonomial(my - 1, cap), cap),
                                                 double(my)),
                                          smul(gy, smonomial(my, cap), cap));
            const LSeries col_y_rz = sscale(smul(hy, smonomial(my, cap), cap), -1.0);
            const LSeries col_z_ry = sscale(smul(gz, smonomial(mz, cap), cap), -1.0);
            const LSeries col_z_rz = ssub(sscale(smul(tp, smonomial(mz - 1, cap), cap),
                                                 double(mz)),
                                          smul(hz, smonomial(mz, cap), cap));

            if (iter == 0) {
                ra = first_hit(col_y_ry, col_y_rz, 0, -1, 0);
                rb = first_hit(col_z_ry, col_z_rz, 1, ra.which, ra.order);
                if (ra.which < 0 || rb.which < 0)
                    throw NonGenericParameters(
                        "series recursion: no usable rows at order " + std::to_string(my) +
                            " for branch " + branch,
                        my);
            }

            const auto pick = [&](const Hit& h, const LSeries& a, const LSeries& b) {
                return (h.which == 0) ? a.at(h.order) : b.at(h.order);
            };
            const cplx j00 = pick(ra, col_y_ry, col_y_rz);
            const cplx j01 = pick(ra, col_z_ry, col_z_rz);
            const cplx j10 = pick(rb, col_y_ry, col_y_rz);
            const cplx j11 = pick(rb, col_z_ry, col_z_rz);
            const cplx det = j00 * j11 - j01 * j10;
            if (std::abs(det) <= 1e-10 * (std::abs(j00 * j11) + std::abs(j01 * j10) + 1e-30))
                throw NonGenericParameters("series recursion: singular solve at order " +
                                               std::to_string(my) + " for branch " + branch,
                                           my);

            const auto [ry, rz] = sys.residuals(y, z);
            const cplx f0 = (ra.which == 0) ? ry.at(ra.order) : rz.at(ra.order);
            const cplx f1 = (rb.which == 0) ? ry.at(rb.order) : rz.at(rb.order);
            const cplx dy = -(j11 * f0 - j01 * f1) / det;
            const cplx dz = -(-j10 * f0 + j00 * f1) / det;
            y.c[std::size_t(my - y.lo)] += dy;
            z.c[std::size_t(mz - z.lo)] += dz;
            const double sz = 1.0 + std::abs(y.c[std::size_t(my - y.lo)]) +
                              std::abs(z.c[std::size_t(mz - z.lo)]);
            if (std::abs(dy) + std::abs(dz) < 1e-14 * sz && iter >= 1) break;
        }
    }

    // audit: every certified residual row must vanish against the magnitude
    // of the terms feeding it; this includes the rows never targeted by the
    // solver (the parity rows), which is what certifies the ansatz
    {
        ClearedSystem msys = sys;
        msys.mag = true;
        const auto [ry, rz] = sys.residuals(y, z);
        const auto [my_, mz_] = msys.residuals(msys.kabs(y), msys.kabs(z));
        const int top = std::min({n - 1, ry.hi(), rz.hi()});
        for (int k = std::min(ry.lo, rz.lo); k <= top; ++k) {
            const double gy = 1.0 + std::abs(my_.at(k));
            const double gz2 = 1.0 + std::abs(mz_.at(k));
            if (std::abs(ry.at(k)) > 1e-8 * gy || std::abs(rz.at(k)) > 1e-8 * gz2)
                throw NonGenericParameters(
                    "series recursion: residual row " + std::to_string(k) +
                        " failed to close for branch " + branch,
                    k);
        }
    }

    LaurentSeriesPair out;
    out.center = spec.center;
    out.branch = branch;
    out.truncation = n;
    out.trust_radius = trust;
    out.y_min_order = spec.y_lo;
    out.z_min_order = spec.z_lo;
    out.y_coeffs.assign(y.c.begin(), y.c.begin() + (n - y.lo + 1));
    out.z_coeffs.assign(z.c.begin(), z.c.begin() + (n - z.lo + 1));
    return out;
}

std::vector<int> odd_orders_upto(int n) {
    std::vector<int> v;
    for (int k = 1; k <= n; k += 2) v.push_back(k);
    return v;
}

std::vector<int> all_orders_upto(int n) {
    std::vector<int> v;
    for (int k = 1; k <= n; ++k) v.push_back(k);
    return v;
}

PviParams map_params(const PviParams& a, std::array<int, 25> m) {
    const std::array<cplx, 5> in{a.alpha0, a.alpha1, a.alpha2, a.alpha3, a.alpha4};
    std::array<cplx, 5> out{};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) out[i] += double(m[std::size_t(5 * i + j)]) * in[j];
    return {out[0], out[1], out[2], out[3], out[4]};
}

PviParams s0_params(const PviParams& a) {
    return map_params(a, {-1, 0, 0, 0, 0,  0, 1, 0, 0, 0,  1, 0, 1, 0, 0,
                          0, 0, 0, 1, 0,  0, 0, 0, 0, 1});
}
PviParams s1_params(const PviParams& a) {
    return map_params(a, {1, 0, 0, 0, 0,  0, -1, 0, 0, 0,  0, 1, 1, 0, 0,
                          0, 0, 0, 1, 0,  0, 0, 0, 0, 1});
}
PviParams s2_params(const PviParams& a) {
    return map_params(a, {1, 0, 1, 0, 0,  0, 1, 1, 0, 0,  0, 0, -1, 0, 0,
                          0, 0, 1, 1, 0,  0, 0, 1, 0, 1});
}

LSeries series_of(const std::vector<cplx>& c, int lo) {
    LSeries s;
    s.lo = lo;
    s.c = c;
    return s;
}

// y |-> y + c / z with z given as a series: used to push a regular branch to
// the pole branch it borders
LaurentSeriesPair shift_y_by_c_over_z(const LaurentSeriesPair& src, cplx c,
                                       const std::string& branch) {
    const int cap = src.truncation;
    const LSeries zs = series_of(src.z_coeffs, src.z_min_order);
    const LSeries ys = series_of(src.y_coeffs, src.y_min_order);
    const LSeries yt = sadd(ys, sscale(sinv(zs, cap), c));
    const LSeries ytt = strim(yt, 1e-12);
    LaurentSeriesPair out = src;
    out.branch = branch;
    out.truncation = std::min(cap, yt.hi());
    out.y_min_order = ytt.lo;
    out.y_coeffs.assign(ytt.c.begin(), ytt.c.begin() + (out.truncation - ytt.lo + 1));
    out.z_coeffs.assign(src.z_coeffs.begin(),
                        src.z_coeffs.begin() + (out.truncation - src.z_min_order + 1));
    return out;
}

// z |-> z + c / (y - t), same role for the other reflection
LaurentSeriesPair shift_z_by_c_over_ymt(const LaurentSeriesPair& src, cplx c,
                                        const std::string& branch) {
    const int cap = src.truncation;
    const LSeries ys = series_of(src.y_coeffs, src.y_min_order);
    const LSeries zs = series_of(src.z_coeffs, src.z_min_order);
    const LSeries ymt =
        ssub(ys, make_poly({{0, src.center}, {1, 1.0}}, cap));
    const LSeries zt = sadd(zs, sscale(sinv(ymt, cap), c));
    const LSeries ztt = strim(zt, 1e-12);
    LaurentSeriesPair out = src;
    out.branch = branch;
    out.truncation = std::min(cap, zt.hi());
    out.z_min_order = ztt.lo;
    out.z_coeffs.assign(ztt.c.begin(), ztt.c.begin() + (out.truncation - ztt.lo + 1));
    out.y_coeffs.assign(src.y_coeffs.begin(),
                        src.y_coeffs.begin() + (out.truncation - src.y_min_order + 1));
    return out;
}

const double S2_TRUST = 0.45 * 0.5;
const double S3_TRUST = 0.45 * 1.0;

} // namespace

LaurentSeriesPair sigma1_series(const PviParams& p, const std::string& branch, int n) {
    if (std::abs(p.alpha3 - p.alpha4) > 1e-12)
        throw WrongParameterStratum("sigma1_series needs alpha3 == alpha4");
    if (n < 4) throw Error("sigma1_series: truncation too small");

    if (branch == "S2-1") {
        BranchSpec spec{cplx(0.5), 0, 1, {{0, 0.5}}, {}, odd_orders_upto(n),
                        odd_orders_upto(n)};
        return solve_direct(p, spec, branch, n, S2_TRUST);
    }
    if (branch == "S2-2") {
        BranchSpec spec{cplx(0.5), 0,  -1, {{0, 0.5}}, {{-1, 1.0}},
                        odd_orders_upto(n), odd_orders_upto(n)};
        return solve_direct(p, spec, branch, n, S2_TRUST);
    }
    if (branch == "S2-3") {
        if (std::abs(p.alpha1) < 1e-12 || std::abs(p.alpha2) < 1e-12)
            throw NonGenericParameters("branch S2-3 needs alpha1 != 0 and alpha2 != 0", -1);
        const PviParams q = s2_params(p);
        const LaurentSeriesPair src = sigma1_series(q, "S2-1", n + 2);
        LaurentSeriesPair out = shift_y_by_c_over_z(src, q.alpha2, branch);
        out.truncation = std::min(out.truncation, n);
        out.y_coeffs.resize(std::size_t(out.truncation - out.y_min_order + 1));
        out.z_coeffs.resize(std::size_t(out.truncation - out.z_min_order + 1));
        return out;
    }
    if (branch == "S2-4") {
        if (std::abs(p.alpha1) < 1e-12 || std::abs(p.alpha1 + p.alpha2) < 1e-12)
            throw NonGenericParameters(
                "branch S2-4 needs alpha1 != 0 and alpha1 + alpha2 != 0", -1);
        LaurentSeriesPair out = sigma1_series(s1_params(p), "S2-3", n);
        out.branch = "S2-4";
        return out;
    }
    throw Error("sigma1_series: unknown branch " + branch);
}

LaurentSeriesPair sigma2sigma1_series(const PviParams& p, const std::string& branch,
                                      int n) {
    if (std::abs(p.alpha1 - p.alpha3) > 1e-12 || std::abs(p.alpha1 - p.alpha4) > 1e-12)
        throw WrongParameterStratum("sigma2sigma1_series needs alpha1 == alpha3 == alpha4");
    if (n < 4) throw Error("sigma2sigma1_series: truncation too small");

    const cplx w = OMEGA, w2 = OMEGA * OMEGA;
    const cplx a2 = p.alpha2;
    if (branch == "S3-1") {
        BranchSpec spec{-w2, 0, 0, {{0, -w}}, {{0, -(1.0 + 2.0 * w) * a2 / 3.0}},
                        all_orders_upto(n), all_orders_upto(n)};
        return solve_direct(p, spec, branch, n, S3_TRUST);
    }
    if (branch == "S3-2") {
        BranchSpec spec{-w2, 0, 0, {{0, -w2}}, {{0, (1.0 + 2.0 * w) * a2 / 3.0}},
                        all_orders_upto(n), all_orders_upto(n)};
        return solve_direct(p, spec, branch, n, S3_TRUST);
    }
    if (branch == "S3-4") {
        BranchSpec spec{-w, 0, 0, {{0, -w2}}, {{0, -(1.0 + 2.0 * w2) * a2 / 3.0}},
                        all_orders_upto(n), all_orders_upto(n)};
        return solve_direct(p, spec, branch, n, S3_TRUST);
    }
    if (branch == "S3-5") {
        BranchSpec spec{-w, 0, 0, {{0, -w}}, {{0, (1.0 + 2.0 * w2) * a2 / 3.0}},
                        all_orders_upto(n), all_orders_upto(n)};
        return solve_direct(p, spec, branch, n, S3_TRUST);
    }
    if (branch == "S3-3" || branch == "S3-6") {
        if (std::abs(p.alpha0) < 1e-12)
            throw NonGenericParameters("branch " + branch + " needs alpha0 != 0", -1);
        const PviParams q = s0_params(p);
        const LaurentSeriesPair src =
            sigma2sigma1_series(q, branch == "S3-3" ? "S3-2" : "S3-5", n + 2);
        LaurentSeriesPair out = shift_z_by_c_over_ymt(src, p.alpha0, branch);
        out.truncation = std::min(out.truncation, n);
        out.y_coeffs.resize(std::size_t(out.truncation - out.y_min_order + 1));
        out.z_coeffs.resize(std::size_t(out.truncation - out.z_min_order + 1));
        return out;
    }
    throw Error("sigma2sigma1_series: unknown branch " + branch);
}

PhaseState evaluate(const LaurentSeriesPair& s, cplx t) {
    const cplx u = t - s.center;
    if (!(std::abs(u) > 0.0) || std::abs(u) >= s.trust_radius)
        throw OutOfTrustRadius("evaluate: |t - center| = " + std::to_string(std::abs(u)) +
                               " outside (0, " + std::to_string(s.trust_radius) + ")");
    return {seval(series_of(s.y_coeffs, s.y_min_order), u),
            seval(series_of(s.z_coeffs, s.z_min_order), u), t};
}

std::array<cplx, 3> evaluate_y_jet(const LaurentSeriesPair& s, cplx t) {
    const cplx u = t - s.center;
    if (!(std::abs(u) > 0.0) || std::abs(u) >= s.trust_radius)
        throw OutOfTrustRadius("evaluate_y_jet: outside trust radius");
    const LSeries y = series_of(s.y_coeffs, s.y_min_order);
    const LSeries y1 = sdiff(y);
    return {seval(y, u), seval(y1, u), seval(sdiff(y1), u)};
}

double symmetry_residual(const LaurentSeriesPair& s, const PviParams& p, double radius,
                         int nsamples) {
    if (radius <= 0.0 || radius >= 0.9 * s.trust_radius)
        throw OutOfTrustRadius("symmetry_residual: radius outside the trusted disc");
    const bool family2 = std::abs(s.center - cplx(0.5)) > 0.25;
    double worst = 0.0;
    for (int j = 0; j < nsamples; ++j) {
        const double th = 2.0 * M_PI * j / nsamples + 0.37;
        const cplx t = s.center + radius * std::polar(1.0, th);
        const cplx mt = family2 ? 1.0 / (1.0 - t) : 1.0 - t;
        const PhaseState a = evaluate(s, t);
        const PhaseState b = evaluate(s, mt);
        cplx ey, ez;
        if (family2) {
            ey = b.y - 1.0 / (1.0 - a.y);
            ez = b.z - (1.0 - a.y) * ((1.0 - a.y) * a.z - p.alpha2);
        } else {
            ey = b.y - (1.0 - a.y);
            ez = b.z - (-a.z);
        }
        worst = std::max(worst, std::abs(ey) + std::abs(ez));
    }
    return worst;
}

namespace {

cplx mobius_tau(cplx t) { return (-OMEGA * t - 1.0) / (t + OMEGA); }

void check_regular(cplx t) {
    if (std::abs(t) < 1e-13 || std::abs(t - 1.0) < 1e-13)
        throw SingularTime("frame map at t in {0,1}");
}

} // namespace

SymmetricFrame to_symmetric_frame(SymKind kind, const PviParams& p, const PhaseState& s) {
    if (kind == SymKind::sigma1) return {kind, s.t - 0.5, s.y - 0.5, s.z};
    check_regular(s.t);
    const cplx w = OMEGA;
    if (std::abs(s.t + w) < 1e-13 || std::abs(s.y + w) < 1e-13)
        throw IndeterminateFrame("to_symmetric_frame: t or y at -omega");
    const cplx tau = mobius_tau(s.t);
    const cplx lam = mobius_tau(s.y);
    const cplx l3 = lam * lam * lam;
    if (std::abs(l3 + 1.0) < 1e-13 || std::abs(lam - tau) < 1e-13)
        throw IndeterminateFrame("to_symmetric_frame: mu undefined (lambda^3 = -1 or "
                                 "lambda = tau)");
    const auto [dy, dz] = vector_field(p, s);
    (void)dz;
    const cplx dlam = dy * std::pow((s.t + w) / (s.y + w), 2);
    const cplx mu = ((tau * tau * tau + 1.0) * dlam -
                     3.0 * lam * lam * (lam - tau) * p.alpha1 -
                     (1.0 + l3) * (1.0 + p.alpha0)) /
                    (2.0 * (1.0 + l3) * (lam - tau));
    return {kind, tau, lam, mu};
}

PhaseState from_symmetric_frame(SymKind kind, const PviParams& p, const SymmetricFrame& f) {
    if (f.kind != kind) throw Error("from_symmetric_frame: frame kind mismatch");
    if (kind == SymKind::sigma1) return {f.lambda + 0.5, f.mu, f.tau + 0.5};
    const cplx w = OMEGA;
    if (std::abs(f.tau + w) < 1e-13 || std::abs(f.lambda + w) < 1e-13)
        throw IndeterminateFrame("from_symmetric_frame: tau or lambda at -omega");
    const cplx t = -(w * f.tau + 1.0) / (f.tau + w);
    const cplx y = -(w * f.lambda + 1.0) / (f.lambda + w);
    check_regular(t);
    const cplx t3 = f.tau * f.tau * f.tau;
    if (std::abs(t3 + 1.0) < 1e-13)
        throw IndeterminateFrame("from_symmetric_frame: tau^3 = -1");
    const cplx l3 = f.lambda * f.lambda * f.lambda;
    const cplx dlam = (2.0 * f.mu * (1.0 + l3) * (f.lambda - f.tau) +
                       3.0 * f.lambda * f.lambda * (f.lambda - f.tau) * p.alpha1 +
                       (1.0 + l3) * (1.0 + p.alpha0)) /
                      (t3 + 1.0);
    const cplx dy = dlam * std::pow((y + w) / (t + w), 2);
    if (std::abs(y) < 1e-13 || std::abs(y - 1.0) < 1e-13 || std::abs(y - t) < 1e-13)
        throw IndeterminateFrame("from_symmetric_frame: y in {0, 1, t}");
    const cplx z = (t * (t - 1.0) * dy + (p.alpha0 - 1.0) * y * (y - 1.0) +
                    p.alpha3 * y * (y - t) + p.alpha4 * (y - 1.0) * (y - t)) /
                   (2.0 * y * (y - 1.0) * (y - t));
    return {y, z, t};
}

cplx k_hamiltonian(SymKind kind, const PviParams& p, const SymmetricFrame& f) {
    const cplx lam = f.lambda, mu = f.mu, tau = f.tau;
    if (kind == SymKind::sigma1) {
        const cplx den = tau * tau - 0.25;
        if (std::abs(den) < 1e-13) throw SingularTau("k_hamiltonian: tau^2 = 1/4");
        const cplx q = lam * lam - 0.25;
        return (mu * mu * (lam - tau) * q -
                mu * (q * (p.alpha0 - 1.0) + 2.0 * lam * (lam - tau) * p.alpha3) +
                (lam - tau) * p.alpha2 * (p.alpha1 + p.alpha2)) /
               den;
    }
    const cplx den = tau * tau * tau + 1.0;
    if (std::abs(den) < 1e-13) throw SingularTau("k_hamiltonian: tau^3 = -1");
    const cplx l3 = lam * lam * lam;
    return (mu * mu * (l3 + 1.0) * (lam - tau) +
            mu * ((l3 + 1.0) * (1.0 + p.alpha0) +
                  3.0 * lam * lam * (lam - tau) * p.alpha1) +
            ((1.0 + p.alpha0 + 3.0 * p.alpha1) / 4.0) * lam *
                ((lam + tau) * (1.0 + p.alpha0) + 3.0 * (lam - tau) * p.alpha1)) /
           den;
}

cplx lambda_ode_residual(const PviParams& p, cplx tau, const std::array<cplx, 3>& jet) {
    const cplx lam = jet[0], d1 = jet[1], d2 = jet[2];
    const cplx l3 = lam * lam * lam;
    const cplx t3 = tau * tau * tau;
    if (std::abs(l3 + 1.0) < 1e-13)
        throw SingularConfiguration("lambda_ode_residual: lambda^3 = -1");
    if (std::abs(t3 + 1.0) < 1e-13)
        throw SingularConfiguration("lambda_ode_residual: tau^3 = -1");
    const cplx a = (4.0 * l3 - 3.0 * tau * lam * lam + 1.0) / (2.0 * (l3 + 1.0));
    const cplx b = (-3.0 * tau * tau * lam + 2.0 * t3 - 1.0) / (t3 + 1.0);
    const cplx lam4 = l3 * lam;
    const cplx c = ((l3 + 1.0) * (l3 + 1.0) * (t3 + 1.0) * (1.0 - p.alpha0 * p.alpha0) +
                    9.0 * (lam - tau) * (lam - tau) *
                        (lam4 - 2.0 * tau * l3 - 2.0 * lam + tau) * p.alpha1 * p.alpha1) /
                   (2.0 * (l3 + 1.0) * (t3 + 1.0) * (t3 + 1.0));
    return (lam - tau) * d2 - (a * d1 * d1 + b * d1 + c);
}

FrameSeries frame_series(const LaurentSeriesPair& s, const PviParams& p) {
    FrameSeries out;
    if (std::abs(s.center - cplx(0.5)) < 0.25) {
        out.kind = SymKind::sigma1;
        LSeries lam = series_of(s.y_coeffs, s.y_min_order);
        lam.c[std::size_t(0 - lam.lo)] -= 0.5;
        const LSeries lt = strim(lam, 1e-13);
        out.lambda_min_order = lt.lo;
        out.lambda_max_order = lt.hi();
        out.lambda_coeffs = lt.c;
        out.mu_min_order = s.z_min_order;
        out.mu_max_order = s.truncation;
        out.mu_coeffs = s.z_coeffs;
        return out;
    }
    out.kind = SymKind::sigma2sigma1;
    const int cap = s.truncation;
    // The mu chain divides by (lambda^3 + 1)(lambda - tau), whose small
    // leading coefficient amplifies rounding a few thousandfold by order 10;
    // the whole pipeline therefore runs in extended precision and rounds
    // back to double once at the end.
    using cld = std::complex<long double>;
    using Sld = detail::BasicSeries<cld>;
    const auto lift = [](const std::vector<cplx>& v, int lo) {
        Sld r;
        r.lo = lo;
        r.c.reserve(v.size());
        for (const auto& x : v) r.c.emplace_back(x.real(), x.imag());
        return r;
    };
    const auto lower = [](const Sld& a) {
        LSeries r;
        r.lo = a.lo;
        r.c.reserve(a.c.size());
        for (const auto& x : a.c) r.c.emplace_back(double(x.real()), double(x.imag()));
        return r;
    };
    // centers -omega^2 and -omega are fixed by the two mirror frames; pick
    // the one whose tau vanishes at this center
    const bool first_mirror = std::abs(s.center + OMEGA * OMEGA) < 0.25;
    const cld w = first_mirror ? cld(-0.5L, std::sqrt(3.0L) / 2.0L)
                               : cld(-0.5L, -std::sqrt(3.0L) / 2.0L);
    const cld w2 = w * w;
    const cld a0(p.alpha0.real(), p.alpha0.imag());
    const cld a1(p.alpha1.real(), p.alpha1.imag());
    const Sld y = lift(s.y_coeffs, s.y_min_order);
    const Sld num = sadd(sscale(y, -w), sconst(cld(-1), cap));
    const Sld den = sadd(y, sconst(w, cap));
    const Sld lam_t = smul(strim(num, 1e-12), sinv(den, cap), cap);

    // T(tau) = -(w - w^2) tau / (w + tau), built as an exact geometric series
    Sld t_of_tau;
    t_of_tau.lo = 1;
    t_of_tau.c.assign(std::size_t(cap), cld(0));
    {
        cld coef = -(w - w2) / w;
        for (int k = 1; k <= cap; ++k) {
            t_of_tau.c[std::size_t(k - 1)] = coef;
            coef *= cld(-1) / w;
        }
    }
    const Sld lam = scompose(lam_t, t_of_tau, cap);
    const Sld dlam = sdiff(lam);
    const Sld tau = smonomial<cld>(1, cap);
    Sld t3p1 = sconst(cld(1), cap);
    if (cap >= 3) t3p1.c[3] = cld(1);
    const Sld l3p1 = sadd(smul(smul(lam, lam, cap), lam, cap), sconst(cld(1), cap));
    const Sld lmt = ssub(lam, tau);
    Sld numer = smul(t3p1, dlam, cap);
    numer = ssub(numer, sscale(smul(smul(lam, lam, cap), lmt, cap), cld(3) * a1));
    numer = ssub(numer, sscale(l3p1, cld(1) + a0));
    const Sld denom = sscale(smul(strim(l3p1, 1e-12), strim(lmt, 1e-12), cap), cld(2));
    const Sld mu = smul(strim(numer, 1e-12), sinv(denom, cap), cap);

    const LSeries ltrim = strim(lower(lam), 1e-13);
    const LSeries mtrim = strim(lower(mu), 1e-13);
    out.lambda_min_order = ltrim.lo;
    out.lambda_max_order = ltrim.hi();
    out.lambda_coeffs = ltrim.c;
    out.mu_min_order = mtrim.lo;
    out.mu_max_order = mtrim.hi();
    out.mu_coeffs = mtrim.c;
    return out;
}

} // namespace pvi
