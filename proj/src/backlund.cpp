#include "pvi/backlund.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <tuple>

namespace pvi {

namespace {

enum class PhaseTag { identity, z_shift, y_shift, mobius1, mobius2, sig1, sig2, sig3 };

struct Row {
    const char* name;
    // alpha' = pmat . alpha, rows/cols ordered (alpha0 ... alpha4)
    int pmat[5][5];
    PhaseTag phase;
    int shift_idx;  // z_shift: which alpha enters the numerator
    int shift_pole; // z_shift: y - pole, encoded 0 -> y, 1 -> y-1, 2 -> y-t
};

// The transformation table, one row per generator. Phase maps use the old
// parameter values throughout.
constexpr std::array<Row, 10> TABLE = {{
    {"s0",
     {{-1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {1, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}},
     PhaseTag::z_shift, 0, 2},
    {"s1",
     {{1, 0, 0, 0, 0}, {0, -1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}},
     PhaseTag::identity, 0, 0},
    {"s2",
     {{1, 0, 1, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, -1, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 1, 0, 1}},
     PhaseTag::y_shift, 0, 0},
    {"s3",
     {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, -1, 0}, {0, 0, 0, 0, 1}},
     PhaseTag::z_shift, 3, 1},
    {"s4",
     {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, -1}},
     PhaseTag::z_shift, 4, 0},
    {"pi1",
     {{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}, {0, 0, 1, 0, 0}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}},
     PhaseTag::mobius1, 0, 0},
    {"pi2",
     {{0, 1, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}},
     PhaseTag::mobius2, 0, 0},
    {"sig1",
     {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}},
     PhaseTag::sig1, 0, 0},
    {"sig2",
     {{1, 0, 0, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 1, 0, 0, 0}},
     PhaseTag::sig2, 0, 0},
    {"sig3",
     {{0, 0, 0, 0, 1}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {1, 0, 0, 0, 0}},
     PhaseTag::sig3, 0, 0},
}};

void require_nonzero(cplx den, const char* gen, const char* what) {
    if (std::abs(den) < 1e-250) {
        std::ostringstream os;
        os << gen << ": denominator " << what << " vanishes";
        throw IndeterminateAction(os.str());
    }
}

cplx alpha_of(const PviParams& p, int i) {
    switch (i) {
        case 0: return p.alpha0;
        case 1: return p.alpha1;
        case 2: return p.alpha2;
        case 3: return p.alpha3;
        default: return p.alpha4;
    }
}

// time half of the action; identity except for the three sigma rows
cplx time_map(GenTag g, cplx t) {
    switch (g) {
        case GenTag::sigma1: return 1.0 - t;
        case GenTag::sigma2: return 1.0 / t;
        case GenTag::sigma3: return t / (t - 1.0);
        default: return t;
    }
}

} // namespace

Generator parse_generator(const std::string& token) {
    for (std::size_t i = 0; i < TABLE.size(); ++i)
        if (token == TABLE[i].name) return {static_cast<GenTag>(i)};
    throw Error("unknown generator token: " + token);
}

std::string generator_name(Generator g) { return TABLE[size_t(g.tag)].name; }

Word parse_word(const std::string& tokens) {
    Word w;
    std::istringstream is(tokens);
    std::string tok;
    while (is >> tok) w.letters.push_back(parse_generator(tok));
    return w;
}

std::pair<PviParams, PhaseState> apply_generator(Generator g,
                                                 const PviParams& params,
                                                 const PhaseState& s) {
    const Row& row = TABLE[size_t(g.tag)];

    PviParams out_p{};
    cplx acc[5] = {};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (row.pmat[i][j]) acc[i] += double(row.pmat[i][j]) * alpha_of(params, j);
    out_p.alpha0 = acc[0];
    out_p.alpha1 = acc[1];
    out_p.alpha2 = acc[2];
    out_p.alpha3 = acc[3];
    out_p.alpha4 = acc[4];

    const cplx y = s.y, z = s.z, t = s.t;
    PhaseState out_s = s;
    switch (row.phase) {
        case PhaseTag::identity:
            break;
        case PhaseTag::z_shift: {
            const cplx pole = row.shift_pole == 0   ? y
                              : row.shift_pole == 1 ? y - 1.0
                                                    : y - t;
            require_nonzero(pole, row.name,
                            row.shift_pole == 0   ? "y"
                            : row.shift_pole == 1 ? "y-1"
                                                  : "y-t");
            out_s.z = z - alpha_of(params, row.shift_idx) / pole;
            break;
        }
        case PhaseTag::y_shift:
            require_nonzero(z, row.name, "z");
            out_s.y = y + params.alpha2 / z;
            break;
        case PhaseTag::mobius1:
            require_nonzero(y, row.name, "y");
            require_nonzero(t, row.name, "t");
            out_s.y = t / y;
            out_s.z = -y * (y * z + params.alpha2) / t;
            break;
        case PhaseTag::mobius2:
            require_nonzero(y - t, row.name, "y-t");
            require_nonzero(t - 1.0, row.name, "t-1");
            require_nonzero(t, row.name, "t");
            out_s.y = t * (y - 1.0) / (y - t);
            out_s.z = -((y - t) * (y - t) * z + (y - t) * params.alpha2) /
                      ((t - 1.0) * t);
            break;
        case PhaseTag::sig1:
            out_s.y = 1.0 - y;
            out_s.z = -z;
            out_s.t = 1.0 - t;
            break;
        case PhaseTag::sig2:
            require_nonzero(y, row.name, "y");
            require_nonzero(t, row.name, "t");
            out_s.y = 1.0 / y;
            out_s.z = -y * (y * z + params.alpha2);
            out_s.t = 1.0 / t;
            break;
        case PhaseTag::sig3:
            require_nonzero(t - 1.0, row.name, "t-1");
            out_s.y = (t - y) / (t - 1.0);
            out_s.z = (1.0 - t) * z;
            out_s.t = t / (t - 1.0);
            break;
    }
    return {out_p, out_s};
}

std::pair<PviParams, PhaseState> apply_word(const Word& w, const PviParams& params,
                                            const PhaseState& s) {
    PviParams p = params;
    PhaseState st = s;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        try {
            std::tie(p, st) = apply_generator(w.letters[i], p, st);
        } catch (const IndeterminateAction& e) {
            std::ostringstream os;
            os << "word position " << i << " (" << generator_name(w.letters[i])
               << "): " << e.what();
            throw IndeterminateAction(os.str());
        }
    }
    return {p, st};
}

double pushforward_check(Generator g, const PviParams& params, const PhaseState& s,
                         cplx h) {
    ToleranceConfig tol;
    tol.rel_tol = 1e-12;
    tol.abs_tol = 1e-14;

    ComplexPath fwd;
    fwd.vertices = {s.t, s.t + h};
    const PhaseState moved = integrate(params, s, fwd, tol).back();
    const auto [p_after, s_after] = apply_generator(g, params, moved);

    const auto [p_img, s_img] = apply_generator(g, params, s);
    ComplexPath img_path;
    img_path.vertices = {s_img.t, time_map(g.tag, s.t + h)};
    const PhaseState img_moved = integrate(p_img, s_img, img_path, tol).back();

    return std::abs(s_after.y - img_moved.y) + std::abs(s_after.z - img_moved.z);
}

} // namespace pvi
