// Generated by tests/oracles/make_oracles.py -- do not edit by hand.
#pragma once
#include <array>
#include <complex>

namespace oracle {
using cplx = std::complex<double>;
inline const cplx OMEGA = cplx(-0.5, 0.8660254037844386);
// family parameter samples: F1 = (a0,a1,a3) with a3=a4, F2 = (a0,a1) with a1=a3=a4
inline constexpr double F1_A0 = 0.1328125, F1_A1 = 0.2109375, F1_A3 = 0.171875;
inline constexpr double F2_A0 = 0.1328125, F2_A1 = 0.1875;

// gamma samples: pairs (z, gamma(z))
inline const std::array<cplx, 20> GAMMA_SAMPLES = {{
    cplx(0.5, 1.0), cplx(0.3006946172606558, -0.4249678794331238),
    cplx(-2.5, 0.7), cplx(-0.15981871636293293, -0.1575665490815153),
    cplx(3.7, 0.0), cplx(4.170651783796604, 0.0),
    cplx(-0.45, 0.0), cplx(-3.5913872638523894, 0.0),
    cplx(6.1, -2.3), cplx(-57.018154988045154, 69.68015478546515),
    cplx(0.5, 0.0), cplx(1.772453850905516, 0.0),
    cplx(-7.3, 0.1), cplx(0.00035508994502646583, 0.00015985802889869916),
    cplx(12.5, 0.0), cplx(136843365.46556586, 0.0),
    cplx(1.0, 1e-08), cplx(0.9999999999999999, -5.772156649015328e-09),
    cplx(-0.5, -9.2), cplx(-1.419464267732713e-07, 2.4561268696136063e-08),
}};

// hyp2f1 samples: tuples (a, b, c, z, F); cut values are limits from above
inline const std::array<cplx, 60> HYP2F1_SAMPLES = {{
    cplx(0.3, 0.0), cplx(0.7, 0.0), cplx(1.1, 0.0), cplx(0.9, 0.0), cplx(1.447603009075632, 0.0),
    cplx(0.25, 0.0), cplx(-0.5, 0.0), cplx(1.3, 0.0), cplx(0.3, 0.2), cplx(0.970574497349964, -0.021028994129396357),
    cplx(1.2, 0.0), cplx(0.4, 0.0), cplx(0.9, 0.0), cplx(-0.45, 0.0), cplx(0.8228614340111764, 0.0),
    cplx(0.3, 0.0), cplx(0.7, 0.0), cplx(1.1, 0.0), cplx(0.95, 0.04), cplx(1.5340984668428366, 0.12590939176686855),
    cplx(0.3, 0.0), cplx(0.7, 0.0), cplx(1.1, 0.0), cplx(-3.5, 0.0), cplx(0.7291306812704283, 0.0),
    cplx(0.45, 0.0), cplx(0.85, 0.0), cplx(1.15, 0.0), cplx(-0.9, 0.4), cplx(0.7953940486991183, 0.0580335066831015),
    cplx(0.3, 0.0), cplx(0.7, 0.0), cplx(1.1, 0.0), cplx(4.2, 1.7), cplx(0.6849497837182023, 0.4741195046101043),
    cplx(0.42, 0.0), cplx(0.11, 0.0), cplx(0.77, 0.0), cplx(0.5, 0.866), cplx(1.0036507610580667, 0.06317915962242117),
    cplx(0.42, 0.0), cplx(0.11, 0.0), cplx(0.77, 0.0), cplx(-0.62, 0.78), cplx(0.964275494253409, 0.02853509986065807),
    cplx(0.3, 0.0), cplx(0.7, 0.0), cplx(1.1, 0.0), cplx(8.0, -3.0), cplx(0.544425100927435, -0.4327821602206524),
    cplx(0.08, 0.0), cplx(0.525, 0.0), cplx(0.5, 0.0), cplx(0.16, 0.0), cplx(1.0147717519944852, 0.0),
    cplx(1.0, 0.0), cplx(1.0, 0.0), cplx(2.0, 0.0), cplx(0.5, 0.0), cplx(1.3862943611198906, 0.0),
}};

// hyp2f1 derivative samples: tuples (a, b, c, z, dF/dz)
inline const std::array<cplx, 15> HYP2F1_DERIV_SAMPLES = {{
    cplx(0.3, 0.0), cplx(0.7, 0.0), cplx(1.1, 0.0), cplx(0.4, 0.0), cplx(0.3246467930623042, 0.0),
    cplx(0.42, 0.0), cplx(0.11, 0.0), cplx(0.77, 0.0), cplx(-1.3, 0.2), cplx(0.02797573086604313, 0.0022522046622575824),
    cplx(1.0, 0.0), cplx(1.0, 0.0), cplx(2.0, 0.0), cplx(0.5, 0.0), cplx(1.2274112777602189, 0.0),
}};

// family-1 connection data at the F1 parameter sample (row major)
inline const std::array<cplx, 4> F1_G0_ENTRIES = {{
    cplx(1.6075430029553872, -0.4026685601870976), cplx(2.2368614047541278, -2.2368614047541273),
    cplx(-0.5637944818562708, 0.3667885439945084), cplx(-0.9944648130810952, 2.037544568629985),
}};
inline const std::array<cplx, 4> F1_GH_ENTRIES = {{
    cplx(1.460351516381234, 0.0), cplx(-1.2875466642380757, 6.081893184212003),
    cplx(-0.46636236651537305, 0.0), cplx(1.1728190700595997, -5.539962555633174),
}};
inline const std::array<cplx, 4> F1_DIAGS = {{
    cplx(0.4713967368259978, 0.8819212643483549), cplx(-0.9142097557035307, -0.40524131400498986),
    cplx(0.881921264348355, 0.47139673682599764), cplx(0.40524131400498986, 0.9142097557035307),
}};
// family-2 connection data at the F2 parameter sample (row major)
inline const std::array<cplx, 4> F2_G0_ENTRIES = {{
    cplx(1.04634308310054, 0.16835802766466132), cplx(0.5992415224685874, 1.572603310908955),
    cplx(-0.015760313174796824, -0.06886491833876593), cplx(0.6924523569201926, -0.6432553296521537),
}};
inline const std::array<cplx, 4> F2_G1_ENTRIES = {{
    cplx(1.0817605047986727, 0.0), cplx(1.2020252126743318, -0.8031675693493905),
    cplx(-0.09900500158958989, 0.0), cplx(-0.4916746130860664, 0.3285264732713461),
}};
inline const std::array<cplx, 4> F2_DIAGS = {{
    cplx(-0.4999999999999998, 0.8660254037844387), cplx(0.38268343236508984, 0.9238795325112867),
    cplx(0.9495281805930367, 0.31368174039889146), cplx(-0.9004611522353635, 0.4349364474437173),
}};

// trace septuples at the parameter samples
// family 1 order: p0, p1, pt, pinf, p01, p1t, pt0
// family 2 order: p0, p1, pt, pinf, pinf1, p1t, ptinf
inline const std::array<cplx, 7> F1_EXACT_SEPTUPLE = {{
    cplx(1.7154572200005442, 4.440892098500626e-16),
    cplx(1.715457220000544, -7.771561172376096e-16),
    cplx(-1.8284195114070618, 2.220446049250313e-16),
    cplx(1.5766928552532125, 1.1102230246251565e-16),
    cplx(-0.4044113683007115, 1.7763568394002505e-15),
    cplx(-0.9320730820125342, 0.0),
    cplx(-0.9320730820125336, -1.3322676295501878e-15),
}};
inline const std::array<cplx, 7> F2_EXACT_SEPTUPLE = {{
    cplx(1.6629392246050902, 1.1102230246251565e-16),
    cplx(1.6629392246050902, 2.220446049250313e-16),
    cplx(-1.8284195114070616, 7.216449660063518e-16),
    cplx(1.6629392246050905, -1.1102230246251565e-16),
    cplx(-0.81041447289647, 0.0),
    cplx(-0.12154080480549237, 2.220446049250313e-16),
    cplx(-0.8104144728964715, 4.440892098500626e-16),
}};
// family-2 septuple transported with up-tail routing of the
// 0- and 1-loops (ring M1 M0 Minf Mt = I); its p1t entry
// realizes the all-equal closed X
inline const std::array<cplx, 7> F2_UPTAIL_SEPTUPLE = {{
    cplx(1.6629392246059356, 2.2143398226148747e-13),
    cplx(1.662939224605073, -1.7208456881689926e-13),
    cplx(-1.828419511404793, 1.4168111128753935e-12),
    cplx(1.6629392246042545, -5.921929613350585e-13),
    cplx(-0.12154080480715351, -6.752376435770202e-13),
    cplx(-0.810414472895679, 3.3071323457534163e-12),
    cplx(-0.8104144728950995, 3.716804641840099e-12),
}};
// closed-form septuples, family-1 branches S2-1..S2-4
inline const std::array<cplx, 7> F1_CLOSED_SEPTUPLE_B1 = {{
    cplx(1.7154572200005442, 0.0), cplx(1.7154572200005442, 0.0), cplx(-1.8284195114070614, 0.0), cplx(1.5766928552532127, 0.0), cplx(-0.4044113683007158, 0.0), cplx(-0.9320730820125331, 0.0), cplx(-0.9320730820125331, 0.0),
}};
inline const std::array<cplx, 7> F1_CLOSED_SEPTUPLE_B2 = {{
    cplx(1.7154572200005442, 0.0), cplx(1.7154572200005442, 0.0), cplx(-1.8284195114070614, 0.0), cplx(1.5766928552532127, 0.0), cplx(-3.0921353193915877, 0.0), cplx(-2.498841357988555, 0.0), cplx(-2.498841357988555, 0.0),
}};
inline const std::array<cplx, 7> F1_CLOSED_SEPTUPLE_B3 = {{
    cplx(1.7154572200005442, 0.0), cplx(1.7154572200005442, 0.0), cplx(-1.8284195114070614, 0.0), cplx(1.5766928552532127, 0.0), cplx(-0.06790357430586491, 0.0), cplx(0.4424303812156687, 0.0), cplx(0.4424303812156687, 0.0),
}};
inline const std::array<cplx, 7> F1_CLOSED_SEPTUPLE_B4 = {{
    cplx(1.7154572200005442, 0.0), cplx(1.7154572200005442, 0.0), cplx(-1.8284195114070614, 0.0), cplx(1.5766928552532127, 0.0), cplx(-4.435549738001834, 0.0), cplx(2.98848405878542, 0.0), cplx(2.98848405878542, 0.0),
}};
// closed-form septuples, family-2 branches S3-1..S3-3
inline const std::array<cplx, 7> F2_CLOSED_SEPTUPLE_B1 = {{
    cplx(1.6629392246050905, 0.0), cplx(1.6629392246050905, 0.0), cplx(-1.8284195114070614, 0.0), cplx(1.6629392246050905, 0.0), cplx(0.370639601475351, 0.0), cplx(0.370639601475351, 0.0), cplx(0.370639601475351, 0.0),
}};
inline const std::array<cplx, 7> F2_CLOSED_SEPTUPLE_B2 = {{
    cplx(1.6629392246050905, 0.0), cplx(1.6629392246050905, 0.0), cplx(-1.8284195114070614, 0.0), cplx(1.6629392246050905, 0.0), cplx(-0.81041447289647, 0.0), cplx(-0.81041447289647, 0.0), cplx(-0.81041447289647, 0.0),
}};
inline const std::array<cplx, 7> F2_CLOSED_SEPTUPLE_B3 = {{
    cplx(1.6629392246050905, 0.0), cplx(1.6629392246050905, 0.0), cplx(-1.8284195114070614, 0.0), cplx(1.6629392246050905, 0.0), cplx(-2.560225128578879, 0.0), cplx(-2.560225128578879, 0.0), cplx(-2.560225128578879, 0.0),
}};

struct SeriesOracle {
    cplx center;
    int y_min, z_min;
    std::array<cplx, 12> y_coeffs, z_coeffs;
};

inline const SeriesOracle SERIES_S2_1 = {
    cplx(0.5, 0.0), 0, 0,
    {{cplx(0.5, 0.0),
      cplx(0.8671875, 0.0),
      cplx(0.0, 0.0),
      cplx(0.21362622578938803, 0.0),
      cplx(0.0, 0.0),
      cplx(0.31942079806079465, 0.0),
      cplx(0.0, 0.0),
      cplx(0.6931575453407959, 0.0),
      cplx(0.0, 0.0),
      cplx(1.7763605394440358, 0.0),
      cplx(0.0, 0.0),
      cplx(5.005080638151062, 0.0)}},
    {{cplx(0.0, 0.0),
      cplx(0.2294921875, 0.0),
      cplx(0.0, 0.0),
      cplx(0.6714065869649252, 0.0),
      cplx(0.0, 0.0),
      cplx(2.2850402275798842, 0.0),
      cplx(0.0, 0.0),
      cplx(8.190813450276835, 0.0),
      cplx(0.0, 0.0),
      cplx(30.149586754318644, 0.0),
      cplx(0.0, 0.0),
      cplx(112.78558799910827, 0.0)}}
};
inline const SeriesOracle SERIES_S2_2 = {
    cplx(0.5, 0.0), 0, -1,
    {{cplx(0.5, 0.0),
      cplx(1.1328125, 0.0),
      cplx(0.0, 0.0),
      cplx(-0.3077017466227214, 0.0),
      cplx(0.0, 0.0),
      cplx(-0.3202889754747351, 0.0),
      cplx(0.0, 0.0),
      cplx(-0.603410398241681, 0.0),
      cplx(0.0, 0.0),
      cplx(-1.4105054419244412, 0.0),
      cplx(0.0, 0.0),
      cplx(-3.7077253655158833, 0.0)}},
    {{cplx(1.0, 0.0),
      cplx(0.0, 0.0),
      cplx(2.8949381510416665, 0.0),
      cplx(0.0, 0.0),
      cplx(10.081642499234942, 0.0),
      cplx(0.0, 0.0),
      cplx(37.271943584500804, 0.0),
      cplx(0.0, 0.0),
      cplx(141.35042835107927, 0.0),
      cplx(0.0, 0.0),
      cplx(543.4947759335959, 0.0),
      cplx(0.0, 0.0)}}
};
inline const SeriesOracle SERIES_S2_3 = {
    cplx(0.5, 0.0), -1, -1,
    {{cplx(1.1851851851851851, 0.0),
      cplx(0.5, 0.0),
      cplx(-2.0813078703703702, 0.0),
      cplx(0.0, 0.0),
      cplx(-1.616255936799226, 0.0),
      cplx(0.0, 0.0),
      cplx(-3.163940576279644, 0.0),
      cplx(0.0, 0.0),
      cplx(-7.8792722786708, 0.0),
      cplx(0.0, 0.0),
      cplx(-22.075081679831893, 0.0),
      cplx(0.0, 0.0)}},
    {{cplx(0.0, 0.0),
      cplx(0.0, 0.0),
      cplx(-0.1318359375, 0.0),
      cplx(0.0, 0.0),
      cplx(-0.31059980392456055, 0.0),
      cplx(0.0, 0.0),
      cplx(-0.9465190971968696, 0.0),
      cplx(0.0, 0.0),
      cplx(-3.1499883632339936, 0.0),
      cplx(0.0, 0.0),
      cplx(-10.964161006353256, 0.0),
      cplx(0.0, 0.0)}}
};
inline const SeriesOracle SERIES_S2_4 = {
    cplx(0.5, 0.0), -1, -1,
    {{cplx(-1.1851851851851851, 0.0),
      cplx(0.5, 0.0),
      cplx(2.747974537037037, 0.0),
      cplx(0.0, 0.0),
      cplx(1.6749147909658926, 0.0),
      cplx(0.0, 0.0),
      cplx(3.2952789569115906, 0.0),
      cplx(0.0, 0.0),
      cplx(8.212105130882314, 0.0),
      cplx(0.0, 0.0),
      cplx(22.983331726162543, 0.0),
      cplx(0.0, 0.0)}},
    {{cplx(0.0, 0.0),
      cplx(0.0, 0.0),
      cplx(0.309814453125, 0.0),
      cplx(0.0, 0.0),
      cplx(0.5876339077949524, 0.0),
      cplx(0.0, 0.0),
      cplx(1.5426502420508768, 0.0),
      cplx(0.0, 0.0),
      cplx(4.593109278435844, 0.0),
      cplx(0.0, 0.0),
      cplx(14.628618387978396, 0.0),
      cplx(0.0, 0.0)}}
};
inline const SeriesOracle SERIES_S3_1 = {
    cplx(0.5, 0.8660254037844386), 0, 0,
    {{cplx(0.5, -0.8660254037844386),
      cplx(-2.8698592549203304e-41, -3.156845180430948e-41),
      cplx(3.055440433764701e-41, 0.18746088223397897),
      cplx(-0.216461181640625, 3.647583920326704e-41),
      cplx(-3.864132751977168e-41, -0.20774988427385954),
      cplx(0.17816612648312002, -3.572664823571805e-41),
      cplx(2.810001762159636e-41, 0.13645238558254189),
      cplx(-0.09005576898354306, 1.7148429208538277e-41),
      cplx(-5.008193168327422e-42, -0.04563330364148098),
      cplx(0.008543852760617551, 5.881474270065186e-42),
      cplx(-1.3500539231458775e-41, -0.01771027867101528),
      cplx(0.03178785934290966, -1.66279718547245e-41)}},
    {{cplx(2.3317606446364956e-42, -0.08795570507185704),
      cplx(0.0363006591796875, -1.1139373620090177e-42),
      cplx(-1.0860003541313236e-43, 0.011438697423209193),
      cplx(0.0067496332339942455, -2.4449759345074583e-42),
      cplx(4.549305363185362e-42, 0.018579327604660544),
      cplx(-0.02355053275055141, 5.458435365036341e-42),
      cplx(-4.66168961975713e-42, -0.021997184354287685),
      cplx(0.015327497508132075, -2.221481176296659e-42),
      cplx(-1.2518908533944398e-42, 0.005785166403749384),
      cplx(0.004035650425453335, -4.767801297324394e-42),
      cplx(7.247997498811733e-42, 0.011758664254940905),
      cplx(-0.01572836640742687, 7.852193983316127e-42)}}
};
inline const SeriesOracle SERIES_S3_2 = {
    cplx(0.5, 0.8660254037844386), 0, 0,
    {{cplx(0.5, 0.8660254037844386),
      cplx(0.8671875, 5.295900711612401e-82),
      cplx(2.2450553021563975e-42, 0.06649535876225732),
      cplx(-0.005098819732666016, -9.337891867077301e-43),
      cplx(2.499325777436397e-42, 0.010466669560901122),
      cplx(-0.014172461080306675, 2.996555375662168e-42),
      cplx(-2.657718051679314e-42, -0.01296957228292321),
      cplx(0.009529345650766958, -1.7412784908783845e-42),
      cplx(5.563060976212329e-43, 0.005364807373881864),
      cplx(-0.0014748259201460296, -5.967550404316516e-43),
      cplx(1.463022787714697e-42, 0.00150759601538587),
      cplx(-0.0032739496450519124, 1.8705043155172058e-42)}},
    {{cplx(-2.3317606446364956e-42, 0.08795570507185704),
      cplx(-0.044036865234375, -3.270620231813744e-42),
      cplx(5.4218478430660114e-42, -0.011072304791913156),
      cplx(-0.01626540906727314, 7.959571158502578e-42),
      cplx(-9.577738705465695e-42, -0.034919019559601513),
      cplx(0.042479010084167615, -9.093508636317094e-42),
      cplx(5.927353439767218e-42, 0.038674375590267165),
      cplx(-0.02561136902980133, 3.9862187303027455e-43),
      cplx(6.267810426970407e-42, -0.00728571531471711),
      cplx(-0.01138981816783963, 1.2243346063838946e-41),
      cplx(-1.5628416975017699e-41, -0.025765486123858875),
      cplx(0.03254000776624416, -1.5060548745932576e-41)}}
};
inline const SeriesOracle SERIES_S3_3 = {
    cplx(0.5, 0.8660254037844386), -1, -1,
    {{cplx(0.0, 0.0),
      cplx(0.5, 0.8660254037844386),
      cplx(1.1328125, -5.313461006207383e-82),
      cplx(2.977759236690236e-45, -0.08686330649123702),
      cplx(-0.006660620371500651, 4.828095007312603e-42),
      cplx(-5.297023526984015e-42, -0.01688267462033429),
      cplx(0.017455908873267215, -4.88654734464807e-42),
      cplx(3.878658594092711e-42, 0.014617126259212212),
      cplx(-0.010463481839207143, 2.5356287452403132e-42),
      cplx(-1.081042968603958e-42, -0.006118590840284285),
      cplx(0.002295690002448122, 2.222302394746689e-43),
      cplx(-1.178382806268251e-42, -0.0005799402123341777)}},
    {{cplx(1.0, 4.000723581144383e-81),
      cplx(-4.386998392312894e-42, 0.8186646395149771),
      cplx(-0.4852803548177083, -4.4326217946018964e-41),
      cplx(1.0338427955502707e-40, -0.10822836387474878),
      cplx(-0.24162325283719432, 1.577228896993488e-40),
      cplx(-1.8131591396645692e-40, -0.49287269274003087),
      cplx(0.5958849066264755, -1.5510288770990892e-40),
      cplx(7.461093241412978e-41, 0.5365188253325804),
      cplx(-0.33972572956459474, -4.607595027079242e-41),
      cplx(1.7655079926642988e-40, -0.06290788159774331),
      cplx(-0.2189581078204323, 2.7798226771069787e-40),
      cplx(-3.147390232774521e-40, -0.4324804031245014)}}
};
inline const SeriesOracle SERIES_S3_4 = {
    cplx(0.5, -0.8660254037844386), 0, 0,
    {{cplx(0.5, 0.8660254037844386),
      cplx(-1.1479437019801224e-41, -3.156845180430948e-41),
      cplx(-1.9009412824113912e-41, -0.18746088223397897),
      cplx(-0.216461181640625, 2.0155918454700163e-41),
      cplx(2.0734496643981383e-41, 0.20774988427385954),
      cplx(0.17816612648312002, -1.9253163219336727e-41),
      cplx(-1.5619294678941134e-41, -0.13645238558254189),
      cplx(-0.09005576898354306, 1.0332110181170687e-41),
      cplx(4.287646140705707e-42, 0.04563330364148098),
      cplx(0.008543852760617551, 1.3505051247232174e-42),
      cplx(5.527040084202346e-42, 0.01771027867101528),
      cplx(0.03178785934290966, -7.544075367081579e-42)}},
    {{cplx(-4.080581128113867e-42, 0.08795570507185704),
      cplx(0.0363006591796875, -8.007126951383752e-43),
      cplx(-4.958618162682502e-43, -0.011438697423209193),
      cplx(0.0067496332339942455, -8.908280298616908e-43),
      cplx(-2.2869474934449832e-42, -0.018579327604660544),
      cplx(-0.02355053275055141, 3.0190104936923535e-42),
      cplx(2.7286009285323537e-42, 0.021997184354287685),
      cplx(0.015327497508132075, -1.429378063173249e-42),
      cplx(5.22671662937968e-43, -0.005785166403749384),
      cplx(0.004035650425453335, -2.5451868984965086e-42),
      cplx(-4.004838122376361e-42, -0.011758664254940905),
      cplx(-0.01572836640742687, 4.4086704234867e-42)}}
};
inline const SeriesOracle SERIES_S3_5 = {
    cplx(0.5, -0.8660254037844386), 0, 0,
    {{cplx(0.5, -0.8660254037844386),
      cplx(0.8671875, -1.178484773101326e-84),
      cplx(7.637076630570253e-43, -0.06649535876225732),
      cplx(-0.005098819732666016, -2.355906656739622e-42),
      cplx(-2.81354704486382e-42, -0.010466669560901122),
      cplx(-0.014172461080306675, 2.650665153582499e-42),
      cplx(2.0432259764865965e-42, 0.01296957228292321),
      cplx(0.009529345650766958, -1.1948576406136812e-42),
      cplx(-2.8879832560887975e-43, -0.005364807373881864),
      cplx(-0.0014748259201460296, -5.057058443477876e-43),
      cplx(-1.0497331572152751e-42, -0.00150759601538587),
      cplx(-0.0032739496450519124, 1.2653658357821415e-42)}},
    {{cplx(4.080581128113867e-42, -0.08795570507185704),
      cplx(-0.044036865234375, -4.8038775307194936e-42),
      cplx(-5.558300991599055e-42, 0.011072304791913156),
      cplx(-0.01626540906727314, 6.010517776090413e-42),
      cplx(5.6939063457497536e-42, 0.034919019559601513),
      cplx(0.042479010084167615, -4.259528105692354e-42),
      cplx(-1.6661600968977477e-42, -0.038674375590267165),
      cplx(-0.02561136902980133, -1.7244013340604127e-42),
      cplx(-5.186496989526569e-42, 0.00728571531471711),
      cplx(-0.01138981816783963, 7.804589364180213e-42),
      cplx(8.738237943091135e-42, 0.025765486123858875),
      cplx(0.03254000776624416, -7.49999199405017e-42)}}
};
inline const SeriesOracle SERIES_S3_6 = {
    cplx(0.5, -0.8660254037844386), -1, -1,
    {{cplx(0.0, 0.0),
      cplx(0.5, -0.8660254037844386),
      cplx(1.1328125, -2.0823350229589787e-84),
      cplx(5.875644460913958e-42, 0.08686330649123702),
      cplx(-0.006660620371500651, -1.2897834843943339e-42),
      cplx(-4.789038235829243e-43, 0.01688267462033429),
      cplx(0.017455908873267215, 8.030462234930832e-44),
      cplx(-3.4466991064329627e-44, -0.014617126259212212),
      cplx(-0.010463481839207143, -7.630481044326347e-44),
      cplx(-3.0736155648803192e-43, 0.006118590840284285),
      cplx(0.002295690002448122, 5.457657113919588e-43),
      cplx(7.022468636343172e-43, 0.0005799402123341777)}},
    {{cplx(1.0, 1.5678757819926428e-83),
      cplx(-3.6602135699688037e-41, -0.8186646395149771),
      cplx(-0.4852803548177083, 5.586156865856134e-41),
      cplx(5.294287406768643e-41, 0.10822836387474878),
      cplx(-0.24162325283719432, -2.811991365295432e-41),
      cplx(1.054104110593007e-41, 0.49287269274003087),
      cplx(0.5958849066264755, -4.927710469317139e-41),
      cplx(-7.345372567819269e-41, -0.5365188253325804),
      cplx(-0.33972572956459474, 7.27699209655481e-41),
      cplx(4.5076472484604213e-41, 0.06290788159774331),
      cplx(-0.2189581078204323, 2.4653319171394104e-42),
      cplx(5.522857778462312e-41, 0.4324804031245014)}}
};

// frame Hamiltonian spot values on branch data
// family 1: S2-1 at tau = 0.03; family 2: S3-2 at T = 0.04+0.01i,
// stored as (tau, lambda, mu, K) quadruples
inline const std::array<cplx, 4> F1_K_SPOT = {{
    cplx(0.03, 0.0), cplx(0.026021400685216117, 0.0), cplx(0.006902949309054112, 0.0), cplx(0.006906687961666814, 0.0),
}};
inline const std::array<cplx, 4> F2_K_SPOT = {{
    cplx(-0.016628483326998747, -0.016833833573344194), cplx(-0.014419995205147538, -0.014598089617754148), cplx(-29.69984422421725, 30.066106756847276), cplx(-29.69984705678258, 30.066337405648735),
}};

// Hamiltonian-flow endpoints: (t_end, y_end, z_end)
// family 1: S2-1 data from t=1/2 to 0.35; family 2: S3-2 data from -w^2 to -w^2+0.15
inline const std::array<cplx, 3> F1_FLOW_ENDPOINT = {{
    cplx(0.35, 0.0), cplx(0.36917537321392896, 0.0), cplx(-0.03687860605948462, 0.0),
}};
inline const std::array<cplx, 3> F2_FLOW_ENDPOINT = {{
    cplx(0.65, 0.8660254037844386), cplx(0.6300598564844506, 0.8675267017596897), cplx(-0.006657243960477431, 0.08768933897380504),
}};

// Riccati closed-form samples (a0 = 0): pairs (t, z)
// family 1 at (a1,a3) = (0.1875, 0.15625); family 2 at a1 = 0.1875
inline const std::array<cplx, 6> F1_RICCATI_SAMPLES = {{
    cplx(0.52, 0.0), cplx(0.00876204897144024, 0.0),
    cplx(0.61, 0.0), cplx(0.050220018032109404, 0.0),
    cplx(0.3, 0.2), cplx(-0.05890941973207837, 0.103128860433683),
}};
inline const std::array<cplx, 6> F2_RICCATI_SAMPLES = {{
    cplx(0.55, 0.8660254037844386), cplx(-0.003650173780103161, 0.1262538140796878),
    cplx(0.5, 0.9660254037844386), cplx(-1.0060108660883658e-19, 0.11919673392097511),
    cplx(0.3, 0.2), cplx(-0.031177329301855683, 0.16449861939342098),
}};

// surface-section samples at (a0,a1,a3) = (0.23,0.31,0.11) and (a0,a1) = (0.23,0.31)
inline const std::array<cplx, 12> F1_QUARTIC_SAMPLE = {{
    cplx(1.881761537908451, 0.0), cplx(-1.5002221392609194, 0.0), cplx(1.1241667557042612, 0.0), cplx(-0.6322058657761405, 0.0),
    cplx(-3.131317210040762, 0.0), cplx(0.13087293151892299, 0.0), cplx(3.632650144297979, 0.0), cplx(1.0, 0.0),
    cplx(0.0, 0.0), cplx(-11.709053260845849, 0.0), cplx(-5.661172455202637, 0.0), cplx(0.941150311056024, 0.0),
}};
inline const std::array<cplx, 9> F2_CUBIC_SAMPLE = {{
    cplx(1.1241667557042612, 0.0), cplx(-1.5002221392609192, 0.0), cplx(-0.5889734128640103, 0.0),
    cplx(0.06139079791110291, 0.0), cplx(-2.472417385047091, 0.0), cplx(1.0, 0.0),
    cplx(3.0, 0.0), cplx(1.2682468814940298, 0.0), cplx(-0.08939654969274757, 0.0),
}};

}  // namespace oracle
