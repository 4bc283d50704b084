// One line per acceptance criterion; exit status is the number of failures.

#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "spe/circuits.hpp"
#include "spe/entanglement.hpp"
#include "spe/gates.hpp"
#include "spe/pulse.hpp"
#include "spe/simulator.hpp"
#include "spe/tomography.hpp"
#include "spe/weyl.hpp"

using namespace spe;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

struct Criterion {
  int id;
  std::string title;
  std::function<void(Outcome&)> run;
};

ComplexVector ket(int n, std::uint64_t idx) {
  ComplexVector v = ComplexVector::Zero(1 << n);
  v(idx) = 1.0;
  return v;
}

ComplexMatrix random_local(Rng& rng) { return kron(random_unitary(2, rng), random_unitary(2, rng)); }

std::vector<double> nine_point_grid() {
  std::vector<double> g;
  for (int k = 1; k <= 9; ++k) g.push_back(k * kPi / 10);
  return g;
}

void spe_invariants(Outcome& o) {
  double worst_g1 = 0, worst_g2 = 0;
  for (char v : {'a', 'b', 'c', 'd'})
    for (double t : nine_point_grid()) {
      auto inv = local_invariants(Unitary2Q(compile_matrix(build_spe_circuit(spe_variant_from_char(v), t))));
      worst_g1 = std::max(worst_g1, std::abs(inv.g1));
      worst_g2 = std::max(worst_g2, std::abs(inv.g2 - std::cos(t)));
    }
  o.require(worst_g1 < 1e-9, "|G1| >= 1e-9");
  o.require(worst_g2 < 1e-9, "|G2 - cos theta| >= 1e-9");
  o.detail << "max|G1|=" << worst_g1 << " max|G2-cos|=" << worst_g2;
}

void chord_identity(Outcome& o) {
  Rng rng(2024);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    CartanCoordinates c{u(rng), u(rng), u(rng)};
    worst = std::max(worst, std::abs(entangling_power(c) - mean_squared_chord(c) / 12));
  }
  double worst_spe = 0;
  std::uniform_real_distribution<double> c2(0, kPi / 2);
  for (int i = 0; i < 200; ++i) {
    CartanCoordinates c{kPi / 2, c2(rng), 0};
    // brute force over the six chords, independent of the closed form
    auto h = h_spectrum(c);
    double acc = 0;
    for (int j = 0; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) acc += 2 - 2 * std::cos(h.h[j] - h.h[k]);
    worst_spe = std::max({worst_spe, std::abs(mean_squared_chord(c) - 8.0 / 3), std::abs(acc / 6 - 8.0 / 3)});
  }
  o.require(worst < 1e-12, "e_p != msc/12");
  o.require(worst_spe < 1e-12, "SPE msc != 8/3");
  o.detail << "max|e_p-msc/12|=" << worst << " max|msc_SPE-8/3|=" << worst_spe;
}

void ep_maximum(Outcome& o) {
  Rng rng(3);
  std::uniform_real_distribution<double> c2(0, kPi / 2);
  double worst = 0;
  for (int i = 0; i < 100; ++i) worst = std::max(worst, std::abs(entangling_power({kPi / 2, c2(rng), 0}) - 2.0 / 9));
  o.require(worst < 1e-12, "closed form e_p != 2/9");
  auto mc = entangling_power_mc(named_gate("b"), 100000, 12345);
  const double z = std::abs(mc.mean - 2.0 / 9) / mc.std_error;
  o.require(z < 3.0, "MC outside 3 standard errors");
  o.detail << "max|e_p-2/9|=" << worst << " mc=" << mc.mean << "+-" << mc.std_error << " (z=" << z << ")";
}

void product_pairs(Outcome& o) {
  Rng rng(4);
  std::uniform_real_distribution<double> u(0, 1);
  int gates = 0, pairs = 0;
  double worst_prod = 0, worst_img = 0;
  while (gates < 200) {
    // canonical point with c1 + c3 = pi/2, so h1 - h3 = pi
    const double c1 = kPi / 4 + u(rng) * kPi / 4;
    const double c3 = kPi / 2 - c1;
    const double c2 = c3 + u(rng) * (c1 - c3);
    ComplexMatrix g = random_local(rng) * nonlocal_gate({c1, c2, c3}) * random_local(rng);
    auto c = cartan_coordinates(Unitary2Q(g));
    auto found = theorem1_pairs(c);
    o.require(!found.empty(), "no pair found for a gate that has one");
    ComplexMatrix ud = nonlocal_gate(c);
    for (auto& p : found) {
      for (const ComplexVector* s : {&p.plus, &p.minus}) {
        worst_prod = std::max(worst_prod, e_measure(*s));
        worst_img = std::max(worst_img, std::abs(e_measure(ud * *s) - 0.5));
      }
      ++pairs;
    }
    ++gates;
  }
  o.require(worst_prod < 1e-9, "product-pair E >= 1e-9");
  o.require(worst_img < 1e-9, "image |E| not 0.5");
  o.detail << gates << " gates, " << pairs << " pairs, max E(in)=" << worst_prod << " max||E(out)|-0.5|=" << worst_img;
}

void basis_action(Outcome& o) {
  double worst = 0;
  for (int k = 1; k <= 99; ++k) {
    const double t = k * kPi / 100;
    const cplx e = std::exp(cplx(0, -t));
    const cplx p = (1.0 + e) / 2.0, m = (1.0 - e) / 2.0;
    auto out = simulate_basis_action(t);
    std::array<ComplexVector, 4> want{ket(2, 0), p * ket(2, 1) + m * ket(2, 2), ket(2, 3), m * ket(2, 1) + p * ket(2, 2)};
    for (int i = 0; i < 4; ++i) worst = std::max(worst, (out[i] - want[i]).cwiseAbs().maxCoeff());
  }
  o.require(worst < 1e-12, "amplitude mismatch");
  o.detail << "99 angles, max amplitude error=" << worst;
}

void basis_probabilities(Outcome& o) {
  NoiseModel clean;
  double worst_exact = 0, worst_shot = 0;
  int idx = 0;
  for (double t : nine_point_grid()) {
    Circuit c = build_spe_circuit(SpeVariant::A, t);
    const double cc = std::pow(std::cos(t / 2), 2), ss = std::pow(std::sin(t / 2), 2);
    for (const char* in : {"01", "11"}) {
      const bool first = std::string(in) == "01";
      ComplexVector out = run_state(c, basis_state(in));
      auto ex = sample_counts(out, std::nullopt, clean, 0);
      worst_exact = std::max({worst_exact, std::abs(ex.probability("01") - (first ? cc : ss)),
                              std::abs(ex.probability("10") - (first ? ss : cc))});
      auto sh = sample_counts(out, 8192, clean, 7000 + idx++);
      worst_shot = std::max({worst_shot, std::abs(sh.probability("01") - (first ? cc : ss)),
                             std::abs(sh.probability("10") - (first ? ss : cc))});
    }
  }
  o.require(worst_exact < 1e-12, "exact probabilities off");
  o.require(worst_shot < 0.02, "8192-shot frequency outside 0.02");
  o.detail << "exact err=" << worst_exact << " 8192-shot max dev=" << worst_shot;
}

void tomography_sweep(Outcome& o) {
  double worst_c = 0, worst_f = 0;
  bool physical = true;
  auto check_physical = [&](const DensityMatrix& r) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(r.matrix());
    physical = physical && es.eigenvalues().minCoeff() > -1e-10 && std::abs(r.matrix().trace().real() - 1) < 1e-10;
  };
  bool monotone = true;
  int idx = 0;
  for (double t : nine_point_grid()) {
    Circuit c = build_spe_circuit(SpeVariant::A, t);
    auto input = DensityMatrix::from_pure(basis_state("11"));
    auto ideal = DensityMatrix::from_pure(run_state(c, basis_state("11")));
    auto rho = reconstruct_state(c, input, std::nullopt, {}, 0);
    check_physical(rho);
    worst_c = std::max(worst_c, std::abs(concurrence_mixed(rho) - std::sin(t)));
    worst_f = std::max(worst_f, std::abs(state_fidelity(rho, ideal) - 1));

    double prev = 2;
    for (double p : {0.0, 0.02, 0.05, 0.1}) {
      NoiseModel nm;
      nm.depol_2q = p;
      nm.depol_1q = p / 10;
      auto r = reconstruct_state(c, input, std::nullopt, nm, 0);
      check_physical(r);
      const double f = state_fidelity(r, ideal);
      monotone = monotone && f < prev;
      prev = f;
      auto shot = reconstruct_state(c, input, 2048, nm, 900 + idx++);
      check_physical(shot);
    }
  }
  o.require(worst_c < 1e-6, "concurrence != sin theta");
  o.require(physical, "MLE output not PSD / trace 1");
  o.require(worst_f < 1e-9, "noiseless fidelity != 1");
  o.require(monotone, "fidelity not strictly decreasing in p");
  o.detail << "max|C-sin|=" << worst_c << " max|F-1|=" << worst_f << " monotone=" << monotone;
}

void gate_fidelity(Outcome& o) {
  Circuit b = build_spe_circuit(SpeVariant::A, kPi / 2);
  Unitary2Q target = named_gate("b");
  auto ideal = average_gate_fidelity(process_tomography(b, std::nullopt, {}, 0).channel_on_units, target);
  NoiseModel g;
  g.depol_global = 0.1;
  auto noisy = average_gate_fidelity(process_tomography(b, std::nullopt, g, 0).channel_on_units, target);
  o.require(std::abs(ideal.value - 1) < 1e-9, "ideal F != 1");
  o.require(std::abs(noisy.value - (1 - 0.75 * 0.1)) < 1e-3, "depolarized F != 0.925");
  o.detail << "ideal=" << ideal.value << " p=0.1 -> " << noisy.value;
}

void w_and_ghz(Outcome& o) {
  ComplexVector w3 = run_state(build_w(3), ket(3, 0));
  const cplx ph = std::polar(1.0, -kPi / 4);
  const cplx i1(0, 1);
  ComplexVector w3_expected = ComplexVector::Zero(8);
  w3_expected(1) = ph / std::sqrt(2.0);
  w3_expected(2) = ph / std::sqrt(2.0) * i1 * std::polar(1.0, -kPi / 4) / std::sqrt(2.0);
  w3_expected(4) = ph / std::sqrt(2.0) * i1 * std::polar(1.0, kPi / 4) / std::sqrt(2.0);
  double err27 = (w3 - w3_expected).cwiseAbs().maxCoeff();
  o.require(err27 < 1e-12, "n=3 W state differs from printed amplitudes");

  double err_w = 0;
  bool profile = true;
  for (int n = 2; n <= 8; ++n) {
    ComplexVector phi = ComplexVector::Zero(1 << n);
    phi(1ULL << (n - 1)) = std::polar(1.0, (n - 2) * kPi / 4) / std::pow(2.0, (n - 2) / 2.0);
    for (int k = 1; k <= n - 2; ++k)
      phi(1ULL << (n - k - 1)) += std::polar(1.0, (n - k - 3) * kPi / 4) / std::pow(2.0, (n - k - 1) / 2.0);
    ComplexVector want = i1 * phi;
    want(1) += 1.0;
    want *= ph / std::sqrt(2.0);
    ComplexVector out = run_state(build_w(n), ket(n, 0));
    err_w = std::max(err_w, (out - want).cwiseAbs().maxCoeff());
    double p = 0.5;
    for (int q = 0; q < n; ++q) {
      profile = profile && std::abs(std::norm(out(1ULL << q)) - p) < 1e-12;
      if (q < n - 2) p /= 2;
    }
  }
  o.require(err_w < 1e-12, "W amplitudes differ for some n");
  o.require(profile, "W probability profile");

  double err_g = 0;
  bool blocks = true;
  for (int n = 2; n <= 4; ++n) {
    Circuit c = build_ghz(n);
    blocks = blocks && c.count(GateKind::USPE) == static_cast<std::size_t>(n - 1);
    ComplexVector want = ComplexVector::Zero(1 << n);
    want((1ULL << (n - 1)) - 1) = ph / std::sqrt(2.0);
    want(1ULL << (n - 1)) = i1 * ph / std::sqrt(2.0);
    err_g = std::max(err_g, (run_state(c, ket(n, 0)) - want).cwiseAbs().maxCoeff());
  }
  o.require(blocks, "GHZ block count");
  o.require(err_g < 1e-12, "GHZ amplitudes");
  o.detail << "W3 err=" << err27 << " W(2..8) err=" << err_w << " GHZ(2..4) err=" << err_g;
}

void utqqc(Outcome& o) {
  double worst = 0;
  int points = 0;
  for (int variant : {1, 2})
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j)
        for (int k = 0; k < 9; ++k) {
          const double c1 = i * kPi / 16;
          const double c2 = c1 * j / 8;
          double c3 = c2 * (k / 4.0 - 1);
          if (i == 8) c3 = std::abs(c3);  // the c1 = pi/2 face keeps c3 >= 0
          CartanCoordinates c{c1, c2, c3};
          auto got = local_invariants(Unitary2Q(compile_matrix(build_utqqc(variant, c))));
          auto want = invariants_from_cartan(c);
          worst = std::max({worst, std::abs(got.g1 - want.g1), std::abs(got.g2 - want.g2)});
          ++points;
        }
  o.require(worst < 1e-8, "invariants differ");
  o.detail << points << " circuits, max invariant error=" << worst;
}

void pulse_math(Outcome& o) {
  Rng rng(11);
  std::uniform_real_distribution<double> u(0, 1);
  double worst_area = 0;
  for (int i = 0; i < 200; ++i) {
    const double r = 20 + 300 * u(rng), w = 800 * u(rng);
    GaussianSquarePulse p{std::polar(0.05 + u(rng), 6 * u(rng)), 4 + 60 * u(rng), w, w + 2 * r};
    const double dt = 0.05;
    const auto n = static_cast<std::size_t>(std::floor(p.duration / dt));
    std::vector<double> f;
    for (std::size_t k = 0; k <= n; ++k)
      f.push_back(std::abs(p.amp) * oracle::gs_envelope(k * dt, p.sigma, p.width, p.duration));
    double num = oracle::trapezoid(f, dt) + 0.5 * (f.back() + std::abs(p.amp) * oracle::gs_envelope(p.duration, p.sigma, p.width, p.duration)) * (p.duration - n * dt);
    worst_area = std::max(worst_area, std::abs(num - gs_area(p)) / gs_area(p));
  }
  o.require(worst_area < 1e-6, "closed-form area vs integration");

  // a pulse whose crossover sits inside the grid
  GaussianSquarePulse q{std::polar(0.3, 0.7), 40, 100, 300};
  double worst_scale = 0;
  bool fallback_seen = false, width_seen = false;
  for (int k = 1; k <= 20; ++k) {
    const double t = k * 0.05 * kPi;
    auto s = scale_pulse(q, t);
    (s.width == 0.0 ? fallback_seen : width_seen) = true;
    worst_scale = std::max(worst_scale, std::abs(gs_area(s) - t / kPi * gs_area(q)));
  }
  o.require(worst_scale < 1e-9, "scaled area");
  o.require(fallback_seen && width_seen, "grid misses the crossover");

  ComplexMatrix x = oracle::sx(), z = oracle::sz();
  const cplx i1(0, 1);
  ComplexMatrix xz = oracle::kron(x, z), ix = oracle::kron(oracle::id2(), x);
  ComplexMatrix ecr = (i1 * kPi / 8.0 * xz).exp() * ix * (-i1 * kPi / 8.0 * xz).exp();
  ComplexMatrix rhs = ix * ecr * oracle::kron((i1 * kPi / 4.0 * x).exp(), (i1 * kPi / 4.0 * z).exp());
  const double ecr_err = (std::polar(1.0, kPi / 4) * oracle::controlled(x, 0) - rhs).cwiseAbs().maxCoeff();
  const double lib = (ecr_matrix().matrix() - ecr).cwiseAbs().maxCoeff();
  o.require(ecr_err < 1e-10 && lib < 1e-10 && cnot_identity_check(1e-10), "ECR identity");

  Calibration cal;
  cal.cr = {cplx(0.2, 0), 64, 768, 1024};
  cal.rotary = {cplx(0.05, 0), 64, 768, 1024};
  cal.x_pulse_duration = cal.sx_pulse_duration = 160;
  bool monotone = true;
  double prev = 0;
  for (int k = 0; k <= 40; ++k) {
    const double d = spe_schedule(cal, k * kPi / 40).total_duration();
    monotone = monotone && d >= prev;
    prev = d;
  }
  const double ratio_pi = duration_ratio(cal, kPi);
  o.require(monotone, "schedule duration not monotone");
  o.require(std::abs(ratio_pi - 1) < 1e-12, "theta = pi ratio != 1");
  o.detail << "area rel err=" << worst_area << " scale err=" << worst_scale << " ecr identity err=" << ecr_err
           << " ratio(pi/2)=" << duration_ratio(cal, kPi / 2);
}

void kak(Outcome& o) {
  Rng rng(12);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    ComplexMatrix u = oracle::haar(4, rng);
    worst = std::max(worst, frobenius_norm(kak_decompose(Unitary2Q(u)).reassemble() - u));
  }
  std::uniform_real_distribution<double> d(0, kPi / 2);
  double worst_rt = 0;
  int n = 0;
  while (n < 500) {
    double a = d(rng), b = d(rng), c = 2 * d(rng) - kPi / 2;
    if (!(a >= b && b >= std::abs(c))) continue;
    auto got = cartan_coordinates(Unitary2Q(oracle::ud_expm(a, b, c)));
    worst_rt = std::max({worst_rt, std::abs(got.c1 - a), std::abs(got.c2 - b), std::abs(got.c3 - c)});
    ++n;
  }
  o.require(worst < 1e-8, "reassembly");
  o.require(worst_rt < 1e-8, "round trip");
  o.detail << "max reassembly err=" << worst << " max round-trip err=" << worst_rt;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "SPE circuit invariants", spe_invariants},
      {2, "chord / entangling-power identity", chord_identity},
      {3, "entangling-power maximum", ep_maximum},
      {4, "product pairs to maximally entangled pairs", product_pairs},
      {5, "SPE action on the computational basis", basis_action},
      {6, "basis-state probabilities (simulated)", basis_probabilities},
      {7, "tomography concurrence and fidelity (simulated)", tomography_sweep},
      {8, "average gate fidelity pipeline", gate_fidelity},
      {9, "W and GHZ builders", w_and_ghz},
      {10, "universal circuit invariants", utqqc},
      {11, "pulse area, scaling, ECR identity", pulse_math},
      {12, "KAK reassembly and Cartan round trip", kak},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failures += !o.pass;
    std::printf("%s [%2d] %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
