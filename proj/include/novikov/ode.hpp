#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <functional>
#include <vector>

#include "novikov/errors.hpp"

namespace novikov {

// Adaptive embedded Dormand-Prince 5(4) pair for y' = f(x, y), y in R^n.
// Integrates from xa to xb (either direction). `observe`, when set, is
// called after every accepted step with (x, y).
struct Dopri5 {
    double rtol = 1e-10;
    double atol = 1e-12;
    double h_init = 1e-3;
    double h_min = 1e-14;
    std::size_t max_steps = 2'000'000;

    using Rhs = std::function<void(double, const std::vector<double>&, std::vector<double>&)>;
    using Observer = std::function<void(double, const std::vector<double>&)>;

    void integrate(const Rhs& f, double xa, double xb, std::vector<double>& y,
                   const Observer& observe = {}) const {
        static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
        static constexpr double a21 = 1.0 / 5;
        static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
        static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
        static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                                a54 = -212.0 / 729;
        static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                                a64 = 49.0 / 176, a65 = -5103.0 / 18656;
        static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                                b5 = -2187.0 / 6784, b6 = 11.0 / 84;
        // 4th order weights (b-hat)
        static constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                                e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

        const std::size_t n = y.size();
        const double dir = (xb >= xa) ? 1.0 : -1.0;
        double x = xa;
        double h = dir * std::abs(h_init);
        std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), yt(n), y5(n);

        f(x, y, k1);
        std::size_t steps = 0;
        while (dir * (xb - x) > 0.0) {
            if (++steps > max_steps) throw numerical_error("Dopri5: step limit exceeded");
            if (dir * (x + h - xb) > 0.0) h = xb - x;

            for (std::size_t i = 0; i < n; ++i) yt[i] = y[i] + h * a21 * k1[i];
            f(x + c2 * h, yt, k2);
            for (std::size_t i = 0; i < n; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
            f(x + c3 * h, yt, k3);
            for (std::size_t i = 0; i < n; ++i)
                yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
            f(x + c4 * h, yt, k4);
            for (std::size_t i = 0; i < n; ++i)
                yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
            f(x + c5 * h, yt, k5);
            for (std::size_t i = 0; i < n; ++i)
                yt[i] = y[i] +
                        h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
            f(x + h, yt, k6);
            for (std::size_t i = 0; i < n; ++i)
                y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
            f(x + h, y5, k7);

            double err = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                double y4 = y[i] + h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                        e6 * k6[i] + e7 * k7[i]);
                double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
                double d = (y5[i] - y4) / sc;
                err += d * d;
            }
            err = std::sqrt(err / static_cast<double>(n));
            if (!std::isfinite(err)) {
                h *= 0.2;
                if (std::abs(h) < h_min) throw numerical_error("Dopri5: non-finite error estimate");
                continue;
            }

            if (err <= 1.0) {
                x += h;
                y.swap(y5);
                k1.swap(k7); // FSAL
                if (observe) observe(x, y);
            }
            double fac = 0.9 * std::pow(err > 1e-300 ? err : 1e-300, -0.2);
            fac = std::min(5.0, std::max(0.2, fac));
            h *= fac;
            if (std::abs(h) < h_min) throw numerical_error("Dopri5: step size underflow");
        }
    }
};

// Eighth-order Dormand-Prince (DOP853) with the combined 5th/3rd-order error
// estimate; preferred when tight tolerances meet oscillatory right-hand
// sides. Same calling convention as Dopri5.
struct Dop853 {
    double rtol = 1e-12;
    double atol = 1e-14;
    double h_init = 1e-3;
    double h_min = 1e-14;
    std::size_t max_steps = 2'000'000;

    using Rhs = Dopri5::Rhs;
    using Observer = Dopri5::Observer;

    void integrate(const Rhs& f, double xa, double xb, std::vector<double>& y,
                   const Observer& observe = {}) const {
        static constexpr double c2 = 0.526001519587677318785587544488e-01,
                                c3 = 0.789002279381515978178381316732e-01,
                                c4 = 0.118350341907227396726757197510e+00,
                                c5 = 0.281649658092772603273242802490e+00,
                                c6 = 1.0 / 3.0, c7 = 0.25,
                                c8 = 0.307692307692307692307692307692e+00,
                                c9 = 0.651282051282051282051282051282e+00, c10 = 0.6,
                                c11 = 0.857142857142857142857142857142e+00;
        static constexpr double b1 = 5.42937341165687622380535766363e-2,
                                b6 = 4.45031289275240888144113950566e0,
                                b7 = 1.89151789931450038304281599044e0,
                                b8 = -5.8012039600105847814672114227e0,
                                b9 = 3.1116436695781989440891606237e-1,
                                b10 = -1.52160949662516078556178806805e-1,
                                b11 = 2.01365400804030348374776537501e-1,
                                b12 = 4.47106157277725905176885569043e-2;
        static constexpr double a21 = 5.26001519587677318785587544488e-2,
                                a31 = 1.97250569845378994544595329183e-2,
                                a32 = 5.91751709536136983633785987549e-2,
                                a41 = 2.95875854768068491816892993775e-2,
                                a43 = 8.87627564304205475450678981324e-2,
                                a51 = 2.41365134159266685502369798665e-1,
                                a53 = -8.84549479328286085344864962717e-1,
                                a54 = 9.24834003261792003115737966543e-1,
                                a61 = 3.7037037037037037037037037037e-2,
                                a64 = 1.70828608729473871279604482173e-1,
                                a65 = 1.25467687566822425016691814123e-1,
                                a71 = 3.7109375e-2,
                                a74 = 1.70252211019544039314978060272e-1,
                                a75 = 6.02165389804559606850219397283e-2, a76 = -1.7578125e-2,
                                a81 = 3.70920001185047927108779319836e-2,
                                a84 = 1.70383925712239993810214054705e-1,
                                a85 = 1.07262030446373284651809199168e-1,
                                a86 = -1.53194377486244017527936158236e-2,
                                a87 = 8.27378916381402288758473766002e-3,
                                a91 = 6.24110958716075717114429577812e-1,
                                a94 = -3.36089262944694129406857109825e0,
                                a95 = -8.68219346841726006818189891453e-1,
                                a96 = 2.75920996994467083049415600797e1,
                                a97 = 2.01540675504778934086186788979e1,
                                a98 = -4.34898841810699588477366255144e1,
                                a101 = 4.77662536438264365890433908527e-1,
                                a104 = -2.48811461997166764192642586468e0,
                                a105 = -5.90290826836842996371446475743e-1,
                                a106 = 2.12300514481811942347288949897e1,
                                a107 = 1.52792336328824235832596922938e1,
                                a108 = -3.32882109689848629194453265587e1,
                                a109 = -2.03312017085086261358222928593e-2,
                                a111 = -9.3714243008598732571704021658e-1,
                                a114 = 5.18637242884406370830023853209e0,
                                a115 = 1.09143734899672957818500254654e0,
                                a116 = -8.14978701074692612513997267357e0,
                                a117 = -1.85200656599969598641566180701e1,
                                a118 = 2.27394870993505042818970056734e1,
                                a119 = 2.49360555267965238987089396762e0,
                                a1110 = -3.0467644718982195003823669022e0,
                                a121 = 2.27331014751653820792359768449e0,
                                a124 = -1.05344954667372501984066689879e1,
                                a125 = -2.00087205822486249909675718444e0,
                                a126 = -1.79589318631187989172765950534e1,
                                a127 = 2.79488845294199600508499808837e1,
                                a128 = -2.85899827713502369474065508674e0,
                                a129 = -8.87285693353062954433549289258e0,
                                a1210 = 1.23605671757943030647266201528e1,
                                a1211 = 6.43392746015763530355970484046e-1;
        static constexpr double bhh1 = 0.244094488188976377952755905512e+00,
                                bhh2 = 0.733846688281611857341361741547e+00,
                                bhh3 = 0.220588235294117647058823529412e-01;
        static constexpr double er1 = 0.1312004499419488073250102996e-01,
                                er6 = -0.1225156446376204440720569753e+01,
                                er7 = -0.4957589496572501915214079952e+00,
                                er8 = 0.1664377182454986536961530415e+01,
                                er9 = -0.3503288487499736816886487290e+00,
                                er10 = 0.3341791187130174790297318841e+00,
                                er11 = 0.8192320648511571246570742613e-01,
                                er12 = -0.2235530786388629525884427845e-01;

        const std::size_t n = y.size();
        const double dir = (xb >= xa) ? 1.0 : -1.0;
        double x = xa;
        double h = dir * std::abs(h_init);
        std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), k8(n), k9(n), k10(n),
            kb(n), w(n), ynew(n);

        f(x, y, k1);
        std::size_t steps = 0;
        while (dir * (xb - x) > 0.0) {
            if (++steps > max_steps) throw numerical_error("Dop853: step limit exceeded");
            if (dir * (x + h - xb) > 0.0) h = xb - x;

            auto comb = [&](std::initializer_list<std::pair<double, const std::vector<double>*>> terms) {
                for (std::size_t i = 0; i < n; ++i) {
                    double s = 0.0;
                    for (const auto& [a, k] : terms) s += a * (*k)[i];
                    w[i] = y[i] + h * s;
                }
            };
            comb({{a21, &k1}});
            f(x + c2 * h, w, k2);
            comb({{a31, &k1}, {a32, &k2}});
            f(x + c3 * h, w, k3);
            comb({{a41, &k1}, {a43, &k3}});
            f(x + c4 * h, w, k4);
            comb({{a51, &k1}, {a53, &k3}, {a54, &k4}});
            f(x + c5 * h, w, k5);
            comb({{a61, &k1}, {a64, &k4}, {a65, &k5}});
            f(x + c6 * h, w, k6);
            comb({{a71, &k1}, {a74, &k4}, {a75, &k5}, {a76, &k6}});
            f(x + c7 * h, w, k7);
            comb({{a81, &k1}, {a84, &k4}, {a85, &k5}, {a86, &k6}, {a87, &k7}});
            f(x + c8 * h, w, k8);
            comb({{a91, &k1}, {a94, &k4}, {a95, &k5}, {a96, &k6}, {a97, &k7}, {a98, &k8}});
            f(x + c9 * h, w, k9);
            comb({{a101, &k1}, {a104, &k4}, {a105, &k5}, {a106, &k6}, {a107, &k7}, {a108, &k8},
                  {a109, &k9}});
            f(x + c10 * h, w, k10);
            comb({{a111, &k1}, {a114, &k4}, {a115, &k5}, {a116, &k6}, {a117, &k7}, {a118, &k8},
                  {a119, &k9}, {a1110, &k10}});
            f(x + c11 * h, w, k2); // reuse k2 as stage 11
            comb({{a121, &k1}, {a124, &k4}, {a125, &k5}, {a126, &k6}, {a127, &k7}, {a128, &k8},
                  {a129, &k9}, {a1210, &k10}, {a1211, &k2}});
            f(x + h, w, k3); // reuse k3 as stage 12

            for (std::size_t i = 0; i < n; ++i) {
                kb[i] = b1 * k1[i] + b6 * k6[i] + b7 * k7[i] + b8 * k8[i] + b9 * k9[i] +
                        b10 * k10[i] + b11 * k2[i] + b12 * k3[i];
                ynew[i] = y[i] + h * kb[i];
            }

            double err5 = 0.0, err3 = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                double sk = 1.0 / (atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i])));
                double e3 = (kb[i] - bhh1 * k1[i] - bhh2 * k9[i] - bhh3 * k3[i]) * sk;
                double e5 = (er1 * k1[i] + er6 * k6[i] + er7 * k7[i] + er8 * k8[i] + er9 * k9[i] +
                             er10 * k10[i] + er11 * k2[i] + er12 * k3[i]) *
                            sk;
                err3 += e3 * e3;
                err5 += e5 * e5;
            }
            double deno = err5 + 0.01 * err3;
            double err = (deno <= 0.0) ? 0.0
                                       : std::abs(h) * err5 / std::sqrt(static_cast<double>(n) * deno);
            if (!std::isfinite(err)) {
                h *= 0.2;
                if (std::abs(h) < h_min) throw numerical_error("Dop853: non-finite error estimate");
                continue;
            }

            if (err <= 1.0) {
                x += h;
                y = ynew;
                f(x, y, k1);
                if (observe) observe(x, y);
            }
            double fac = 0.9 * std::pow(err > 1e-300 ? err : 1e-300, -1.0 / 8.0);
            fac = std::min(6.0, std::max(0.2, fac));
            h *= fac;
            if (std::abs(h) < h_min) throw numerical_error("Dop853: step size underflow");
        }
    }
};

} // namespace novikov
