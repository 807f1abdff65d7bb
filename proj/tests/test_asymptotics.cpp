#include <doctest.h>

#include "sixv/asymptotics.hpp"
#include "sixv/izergin.hpp"
#include "sixv/lattice.hpp"
#include "sixv/meixner.hpp"
#include "sixv/orthopoly.hpp"
#include "test_support.hpp"

using namespace sixv;
using namespace sixv::testing;

TEST_SUITE_BEGIN("asymptotics");

TEST_CASE("closed-form constants") {
  FerroParams ref = FerroParams::ref();
  AsymptoticConstants c = constants(ref);
  check_wp_exact(c.C, ratio(3, 4), "C = 1 - e^{-2 ln 2}");
  check_wp_exact(c.G, 1 / sqrt(er("2")), "G");
  check_wp_exact(c.F, sinh(er("1.5") * ExtReal::ln2()), "F");
  AsymptoticConstants far = constants(FerroParams::create(er("6"), er("5")));
  check_wp_exact(far.C, 1 - exp(er("-20")), "C at gamma=5");
}

TEST_CASE("c_hat anchors and product route") {
  FerroParams ref = FerroParams::ref();
  check_wp_exact(c_hat(ref, 1), ratio(6, 7), "Chat_1");
  check_wp_exact(c_hat(ref, 2), er("1908") / er("2401"), "Chat_2");
  // frozen from the exact-rational oracle
  check_close(c_hat(ref, 12), er("0.69338916356806247096718389896"), 26, "Chat_12");

  // Chat_n = prod_{k<n} h_k/h_k^Q (two routes through independent code paths)
  OPSystem sys = build(ref, 11);
  ExtReal prod = er("1");
  for (int n = 1; n <= 12; ++n) {
    prod = prod * (sys.h[n - 1] / h_Q(ref.q, n - 1));
    CHECK(rel_diff(c_hat(ref, n), prod) < er("1e-40"));
  }
}

TEST_CASE("c_hat decreases; its true limit is prod_j (1 - e^{-4 gamma j})") {
  FerroParams ref = FerroParams::ref();
  ExtReal prev = c_hat(ref, 1);
  for (int n = 2; n <= 12; ++n) {
    ExtReal cur = c_hat(ref, n);
    CHECK(cur < prev);
    prev = cur;
  }
  // prod_{k<=24}(1 + eps~_k), frozen exact-rational value
  OPSystem sys = build(ref, 24);
  ExtReal prod = er("1");
  for (int k = 0; k <= 24; ++k) prod = prod * (sys.h[k] / h_Q(ref.q, k));
  check_close(prod, er("0.68871492259321614879483627876"), 26, "prod k<=24");

  // q-Pochhammer limit (e^{-4 gamma}; e^{-4 gamma})_inf = 0.688537537...
  ExtReal z = exp(ref.gamma * (-4));
  ExtReal qp = er("1");
  ExtReal zj = z;
  for (int j = 1; j <= 200; ++j) {
    qp = qp * (1 - zj);
    zj = zj * z;
  }
  check_close(qp, er("0.68853753712033971545651435729"), 26, "(z;z)_inf");
  // the k<=24 partial product sits within its tail distance of the limit
  CHECK(abs(prod - qp) < er("2.5e-4"));
  CHECK(abs(prod - qp) > er("1e-4"));  // while 3/4 is ruled out
  CHECK(abs(qp - ratio(3, 4)) > er("0.06"));
}

TEST_CASE("toda residuals: magnitudes and step-squared scaling") {
  FerroParams ref = FerroParams::ref();
  auto [r1a, r2a] = toda_residuals(ref, 2, er("1e-4"));
  CHECK(r1a < er("1e-5"));  // truncation-limited: ~4.1e-6 at this step
  CHECK(r1a > er("1e-6"));
  CHECK(r2a < er("1e-6"));
  for (int n = 3; n <= 6; ++n) {
    auto [r1, r2] = toda_residuals(ref, n, er("1e-4"));
    CHECK(r2 < er("1e-6"));
    CHECK(r1 < er("2e-3"));
  }
  // halving the step quarters both residuals within +-20%
  for (int n = 2; n <= 4; ++n) {
    auto [r1, r2] = toda_residuals(ref, n, er("1e-4"));
    auto [r1h, r2h] = toda_residuals(ref, n, er("5e-5"));
    CHECK(r1 / r1h > er("3.2"));
    CHECK(r1 / r1h < er("4.8"));
    CHECK(r2 / r2h > er("3.2"));
    CHECK(r2 / r2h < er("4.8"));
  }
  CHECK_THROWS_AS(toda_residuals(ref, 2, er("1e-45")), precision_error);
}

TEST_CASE("ground state comparison") {
  FerroParams ref = FerroParams::ref();
  GroundStateConstants g = ground_state_constants(ref);
  check_wp_exact(g.G1, ratio(7, 6), "G1 at REF");
  check_wp_exact(g.G0 * g.G1, exp(ref.gamma - ref.t), "G0 G1 = G");
  // G1 > 1 on a grid
  for (long ti = 1; ti <= 4; ++ti)
    for (long gi = 1; gi < 2 * ti; ++gi)
      CHECK(ground_state_ratio(FerroParams::create(ratio(ti, 2), ratio(gi, 4))) > 1);

  // Z_n / w(gs) increases with n toward the G1^n trend; the normalized ratio
  // Z_n/(w(gs) G1^n) = Chat_n decreases
  ABCWeights w = ferro_weights(ref);
  ExtReal prev_ratio = er("0");
  ExtReal prev_norm = er("2");
  for (int n = 1; n <= 5; ++n) {
    ExtReal wgs = config_weight(ground_state(n), w.a, w.b, w.c);
    ExtReal ratio_n = brute_force_partition(n, w.a, w.b, w.c) / wgs;
    CHECK(ratio_n > prev_ratio);
    ExtReal norm = ratio_n / pow(g.G1, n);
    CHECK(norm < prev_norm);
    CHECK(ratio_n <= pow(g.G1, n));
    prev_ratio = ratio_n;
    prev_norm = norm;
    if (n == 2) check_wp_exact(ratio_n, er("477") / er("441"), "Z_2/w(gs)");
  }
}

TEST_CASE("free energy on the line (a+b)/c = alpha") {
  check_wp_exact(F0_ferro(LineParams::create(er("2"), er("1.2"))), er("1.6"), "ferro side");
  CHECK_THROWS_AS(F0_ferro(LineParams::create(er("2"), er("0.5"))), std::domain_error);
  CHECK_THROWS_AS(F0_disordered(LineParams::create(er("2"), er("1.2"))), std::domain_error);

  // g at the inverted point for beta = 0.9 (frozen oracle value)
  auto [t, g] = invert_line_params(LineParams::create(er("2"), er("0.9")));
  check_close(g_factor(t, g), er("1.00474300339189113627740565762"), 28, "g(0.9)");
  check_close(F0_disordered(LineParams::create(er("2"), er("0.9"))),
              er("1.4568773549182421476022382035475772"), 26, "F0 disordered");

  // continuity at beta = 1: g -> 1
  ExtReal f0_near = F0_disordered(LineParams::create(er("2"), er("0.999999")));
  CHECK(abs(f0_near - er("1.5")) < er("1e-3"));
  // symmetry below zero and the piecewise evaluator
  check_wp_exact(F0_on_line(er("2"), er("-1.2")), er("1.6"), "ferro side, beta<0");
  CHECK(rel_diff(F0_on_line(er("2"), er("-0.9")), F0_on_line(er("2"), er("0.9"))) < er("1e-60"));
}

TEST_CASE("phase transition: slope 3/2 and the true amplitude") {
  // least-squares slope of ln(g-1) vs ln(1-beta) over beta in [0.99, 0.999]
  ExtReal sx = er("0"), sy = er("0"), sxx = er("0"), sxy = er("0");
  const int npts = 8;
  for (int i = 0; i < npts; ++i) {
    ExtReal lg = er("-3") + ratio(i, 7);  // log10(1-beta) from -3 to -2
    ExtReal omb = pow(er("10"), lg);
    ExtReal gm1 = F0_disordered(LineParams::create(er("2"), 1 - omb)) / ((er("3") - omb) / 2) - 1;
    ExtReal x = log(omb), y = log(gm1);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  ExtReal slope = (npts * sxy - sx * sy) / (npts * sxx - sx * sx);
  check_close(slope, er("1.5235130"), 5, "log-log slope");

  // amplitude: converges to 2^{5/2} sqrt(alpha-1) / (3 pi (alpha+1)^{3/2}),
  // not to the classical 2(alpha-1)^{3/2}/(3 pi (alpha+1)^{1/2})
  for (const char* alpha : {"2", "3"}) {
    ExtReal al = er(alpha);
    ExtReal a_true = pow(er("2"), er("2.5")) * sqrt(al - 1) / (3 * ExtReal::pi() * pow(al + 1, er("1.5")));
    ExtReal prev_err = er("1");
    for (const char* omb_s : {"1e-3", "1e-4", "1e-5"}) {
      ExtReal omb = er(omb_s);
      auto [t, g] = invert_line_params(LineParams::create(al, 1 - omb));
      ExtReal ratio_v = (g_factor(t, g) - 1) / pow(omb, er("1.5"));
      ExtReal err = abs(ratio_v / a_true - 1);
      CHECK(err < prev_err);
      prev_err = err;
    }
    CHECK(prev_err < er("0.007"));
  }
  // at alpha=2 the true amplitude is 0.11551..., 5.7% below 2/(3 pi sqrt 3)
  ExtReal classical_amp = 2 / (3 * ExtReal::pi() * sqrt(er("3")));
  ExtReal a2 = pow(er("2"), er("2.5")) / (3 * ExtReal::pi() * pow(er("3"), er("1.5")));
  check_close(a2, er("0.11551063721980386783790637782"), 27, "A(2)");
  CHECK(abs(a2 / classical_amp - 1) > er("0.05"));
}

TEST_CASE("delta expansion near beta = 1") {
  check_wp_exact(delta_expansion_check(LineParams::create(er("2"), er("1"))), er("0"), "exact at beta=1");
  for (const char* b : {"1.001", "0.999"}) {
    ExtReal qv = delta_expansion_check(LineParams::create(er("2"), er(b)));
    CHECK(qv > er("1.5"));
    CHECK(qv < er("1.6"));  // Taylor remainder coefficient 14/9 + O(s)
  }
  // two-route Delta agreement on the disordered side
  for (const char* b : {"0.3", "0.7", "0.95"}) {
    LineParams lp = LineParams::create(er("2"), er(b));
    auto [t, g] = invert_line_params(lp);
    ExtReal d_closed = (lp.alpha * lp.alpha + lp.beta * lp.beta - 2) / (lp.alpha * lp.alpha - lp.beta * lp.beta);
    CHECK(rel_diff(d_closed, delta(disordered_weights(t, g))) < er("1e-35"));
  }
}

TEST_CASE("kappa") {
  check_close(kappa(ExtReal::pi() / 4), er("0"), 70, "kappa(pi/4) = 0");
  check_close(kappa(er("1e-30")), ratio(1, 12), 25, "kappa(0+) -> 1/12");
  ExtReal prev = kappa(er("0.05"));
  for (const char* g : {"0.3", "0.6", "0.9", "1.2", "1.5"}) {
    ExtReal cur = kappa(er(g));
    CHECK(cur < prev);
    prev = cur;
  }
  CHECK_THROWS_AS(kappa(er("1.6")), std::domain_error);
}

TEST_SUITE_END();
