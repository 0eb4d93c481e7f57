// Acceptance gate: one line per criterion, nonzero exit = number of failures.
// Tolerances are fixed here on purpose; loosening them is not a fix.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qeccat/channel.hpp"
#include "qeccat/codes.hpp"
#include "qeccat/level_map.hpp"
#include "qeccat/planner.hpp"
#include "qeccat/resources.hpp"
#include "support.hpp"

using namespace qeccat;

namespace {

int g_criterion_failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++g_criterion_failures;
    std::printf("       failed: %s\n", what.c_str());
  }
}

void expect_near(double got, double want, double tol, const std::string& what) {
  if (!(std::abs(got - want) <= tol)) {
    ++g_criterion_failures;
    std::printf("       failed: %s (got %.17g, want %.17g, tol %g)\n",
                what.c_str(), got, want, tol);
  }
}

double mix_diff(const PauliMixture& a, const PauliMixture& b) {
  return std::max(std::max(std::abs(a.f - b.f), std::abs(a.px - b.px)),
                  std::max(std::abs(a.py - b.py), std::abs(a.pz - b.pz)));
}

const std::vector<ProtocolId> kThree = {ProtocolId::A, ProtocolId::B,
                                        ProtocolId::C, ProtocolId::D};
const double kGateRate = std::sqrt(0.999);

void criterion_exact_totals() {
  GateTotals dep = gate_counts({ProtocolId::C, ProtocolId::B, ProtocolId::B,
                                ProtocolId::A});
  expect(dep.encode == 104 && dep.decode == 198,
         "depolarizing sequence totals 104/198");
  GateTotals ad = gate_counts({ProtocolId::D, ProtocolId::A, ProtocolId::A,
                               ProtocolId::B});
  expect(ad.encode == 136 && ad.decode == 230,
         "amplitude damping sequence totals 136/230");
  expect(qubit_count(CodeFamily::three_qubit, 4) == 81,
         "three-qubit depth-4 qubit count 81");
  GateTotals five = gate_counts(
      {ProtocolId::FIVE, ProtocolId::FIVE, ProtocolId::FIVE});
  expect(five.encode == 465 && five.decode == 682,
         "five-qubit depth-3 totals 465/682");
  expect(qubit_count(CodeFamily::five_qubit, 3) == 125,
         "five-qubit depth-3 qubit count 125");
}

void criterion_round_accuracy() {
  expect_near(accuracy_rate({ProtocolId::C, ProtocolId::B, ProtocolId::B,
                             ProtocolId::A},
                            kGateRate),
              0.985105, 1e-5, "depth-4 three-qubit round accuracy");
  expect_near(accuracy_rate({ProtocolId::D, ProtocolId::A, ProtocolId::A,
                             ProtocolId::B},
                            kGateRate),
              0.985105, 1e-5, "alternate depth-4 round accuracy");
  expect_near(accuracy_rate({ProtocolId::FIVE, ProtocolId::FIVE,
                             ProtocolId::FIVE},
                            kGateRate),
              0.945986, 1e-5, "depth-3 five-qubit round accuracy");
}

void check_adaptive_plan(const QubitChannel& ch,
                         const std::vector<int>& want_encode,
                         const std::vector<int>& want_decode, double want_f4,
                         double want_F4, const char* label) {
  ConcatPlan p = plan(ch, 4, CodeFamily::three_qubit);
  for (std::size_t i = 0; i < 4; ++i) {
    GateCounts g = gate_count_profile(p.records[i].protocol);
    expect(g.encode == want_encode[i] && g.decode == want_decode[i],
           std::string(label) + " level " + std::to_string(i + 1) +
               " protocol profile");
  }
  expect_near(p.records.back().fidelity_after, want_f4, 1e-3,
              std::string(label) + " depth-4 fidelity");
  ResourceReport rep = realized_fidelity_report(p, kGateRate);
  expect_near(rep.levels.back().realized_fidelity, want_F4, 1e-3,
              std::string(label) + " depth-4 realized fidelity");
}

void criterion_depolarizing_plan() {
  check_adaptive_plan(make_depolarizing(0.92), {2, 4, 4, 2}, {5, 5, 5, 3},
                      0.960219, 0.945917, "depolarizing");
}

void criterion_damping_plan() {
  check_adaptive_plan(amplitude_damping_for_fidelity(0.9), {4, 2, 2, 4},
                      {7, 3, 3, 5}, 0.961634, 0.94731, "amplitude damping");
}

void criterion_five_qubit_plans() {
  ConcatPlan dep = plan(make_depolarizing(0.92), 3, CodeFamily::five_qubit);
  expect_near(dep.records.back().fidelity_after, 0.993991, 1e-3,
              "five-qubit depolarizing depth-3 fidelity");
  ResourceReport dep_rep = realized_fidelity_report(dep, kGateRate);
  expect_near(dep_rep.levels.back().realized_fidelity, 0.940301, 1e-3,
              "five-qubit depolarizing depth-3 realized fidelity");

  ConcatPlan ad = plan(amplitude_damping_for_fidelity(0.9), 3,
                       CodeFamily::five_qubit);
  expect_near(ad.records.back().fidelity_after, 0.975488, 1e-3,
              "five-qubit amplitude damping depth-3 fidelity");
  ResourceReport ad_rep = realized_fidelity_report(ad, kGateRate);
  expect_near(ad_rep.levels.back().realized_fidelity, 0.922798, 1e-3,
              "five-qubit amplitude damping depth-3 realized fidelity");
}

void criterion_route_agreement() {
  auto rng = support::make_rng(601);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    PauliMixture m = support::random_mixture(rng);
    QubitChannel ch = make_general_pauli(m);
    for (ProtocolId p : kThree) {
      PauliMixture closed = pauli_level_map(p, m);
      PauliMixture brute = pauli_enumeration_oracle(p, m);
      LevelMapResult exact = effective_channel_exact(p, ch);
      worst = std::max(worst, mix_diff(closed, brute));
      worst = std::max(worst, mix_diff(closed, exact.pauli_view));
      if (!exact.lossless_pauli) {
        expect(false, "exact propagation of a Pauli mixture marked lossy");
        return;
      }
    }
  }
  expect(worst <= 1e-10,
         "three-qubit route disagreement " + std::to_string(worst));

  worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    PauliMixture m = support::random_mixture(rng);
    PauliMixture brute = pauli_enumeration_oracle(ProtocolId::FIVE, m);
    LevelMapResult exact =
        effective_channel_exact(ProtocolId::FIVE, make_general_pauli(m));
    worst = std::max(worst, mix_diff(brute, exact.pauli_view));
  }
  expect(worst <= 1e-10,
         "five-qubit route disagreement " + std::to_string(worst));
}

void criterion_invariants() {
  auto rng = support::make_rng(701);

  // similarity scores of arbitrary channels form a distribution, and the
  // canonical form preserves the channel
  for (int trial = 0; trial < 1000; ++trial) {
    QubitChannel ch = support::random_cptp_channel(rng);
    SimilarityScores s = similarity(ch);
    if (std::abs(s.sum() - 1.0) > 1e-9) {
      expect(false, "similarity scores do not sum to one");
      return;
    }
    QubitChannel canon = canonicalize_kraus(ch);
    if (support::max_abs_diff(choi(ch), choi(canon)) > 1e-9 ||
        trace_preservation_error(canon) > 1e-9) {
      expect(false, "canonical kraus form changed the channel");
      return;
    }
  }

  // exact one-level propagation always yields a valid channel
  for (int trial = 0; trial < 100; ++trial) {
    QubitChannel ch = support::random_cptp_channel(rng);
    ProtocolId p = kThree[static_cast<std::size_t>(trial % 4)];
    LevelMapResult res = effective_channel_exact(p, ch);
    if (trace_preservation_error(res.effective) > 1e-9 ||
        min_choi_eigenvalue(res.effective) < -1e-9) {
      expect(false, "effective channel is not CPTP");
      return;
    }
  }
  for (int trial = 0; trial < 10; ++trial) {
    LevelMapResult res = effective_channel_exact(
        ProtocolId::FIVE, support::random_cptp_channel(rng));
    if (trace_preservation_error(res.effective) > 1e-9 ||
        min_choi_eigenvalue(res.effective) < -1e-9) {
      expect(false, "five-qubit effective channel is not CPTP");
      return;
    }
  }

  // every advertised correctable error decodes to logical identity
  auto correctable = [](ProtocolId id,
                        const std::vector<std::string>& labels) {
    const Protocol& proto = build_protocol(id);
    for (const std::string& label : labels) {
      PauliString e = PauliString::from_label(label);
      PauliString res = proto.table.correction(syndrome_of(proto.code, e)) * e;
      if (logical_class(proto.code, res) != LogicalClass::I) return false;
    }
    return true;
  };
  const std::vector<std::string> list_a = {
      "XII", "IXI", "IIX", "ZZI", "ZIZ", "IZZ", "YZI", "YIZ", "IYZ",
      "ZYI", "ZIY", "IZY", "ZZX", "ZXZ", "XZZ"};
  const std::vector<std::string> list_b = {
      "ZII", "IZI", "IIZ", "XXI", "XIX", "IXX", "YXI", "YIX", "IYX",
      "XYI", "XIY", "IXY", "XXZ", "XZX", "ZXX"};
  auto swap_letters = [](std::vector<std::string> in, char x, char y) {
    for (std::string& s : in)
      for (char& c : s) c = c == x ? y : (c == y ? x : c);
    return in;
  };
  expect(correctable(ProtocolId::A, list_a), "protocol A correctable set");
  expect(correctable(ProtocolId::B, list_b), "protocol B correctable set");
  expect(correctable(ProtocolId::C, swap_letters(list_a, 'X', 'Y')),
         "protocol C correctable set");
  expect(correctable(ProtocolId::D, swap_letters(list_b, 'Z', 'Y')),
         "protocol D correctable set");

  // the five-qubit code resolves every weight-one error uniquely and its
  // corrections return the state to the codespace exactly
  {
    const Protocol& proto = build_protocol(ProtocolId::FIVE);
    std::vector<PauliString> group{PauliString::identity(5)};
    for (const PauliString& g : proto.code.generators) {
      std::size_t n = group.size();
      for (std::size_t i = 0; i < n; ++i) group.push_back(group[i] * g);
    }
    std::vector<bool> seen(16, false);
    seen[0] = true;
    bool ok = true;
    for (int q = 0; q < 5 && ok; ++q) {
      for (Pauli letter : {Pauli::X, Pauli::Y, Pauli::Z}) {
        PauliString e = PauliString::single(letter, q, 5);
        Syndrome s = syndrome_of(proto.code, e);
        if (s == 0 || seen[s]) {
          ok = false;
          break;
        }
        seen[s] = true;
        PauliString res = proto.table.correction(s) * e;
        bool trivial = false;
        for (const PauliString& g : group)
          trivial = trivial || res.same_letters(g);
        ok = ok && trivial;
      }
    }
    expect(ok, "five-qubit weight-one error correction");
  }

  // the chooser's four rules cover score space exactly once
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::uniform_int_distribution<int> coin(0, 3);
  for (int trial = 0; trial < 10000; ++trial) {
    double x = uni(rng), z = uni(rng), y = uni(rng);
    if (coin(rng) == 0) z = x;
    if (coin(rng) == 1) y = x;
    if (coin(rng) == 2) y = z;
    SimilarityScores s{uni(rng), x, z, y};
    bool a = s.s_y < s.s_x && s.s_x >= s.s_z;
    bool b = s.s_y < s.s_z && s.s_z > s.s_x;
    bool c = s.s_y >= s.s_z && s.s_z >= s.s_x;
    bool d = s.s_y >= s.s_x && s.s_x > s.s_z;
    if (int(a) + int(b) + int(c) + int(d) != 1) {
      expect(false, "classification rules overlap or leave a gap");
      return;
    }
    ProtocolId want = a   ? ProtocolId::A
                      : b ? ProtocolId::B
                      : c ? ProtocolId::C
                          : ProtocolId::D;
    if (classify(s) != want) {
      expect(false, "classification disagrees with its rule table");
      return;
    }
  }
}

void criterion_polarization() {
  for (int k = 1; k <= 20; ++k) {
    double p = 0.0025 * k;
    PauliMixture m = PauliMixture::make(1 - 3 * p, p, p, p);
    PauliMixture a = pauli_level_map(ProtocolId::A, m);
    expect(a.pz > std::max(a.px, a.py),
           "bit-flip output polarized toward Z at p = " + std::to_string(p));
    PauliMixture b = pauli_level_map(ProtocolId::B, m);
    expect(b.px > std::max(b.py, b.pz),
           "phase-flip output polarized toward X at p = " + std::to_string(p));
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria = {
      {"exact gate and qubit totals", criterion_exact_totals},
      {"round accuracies at the published rate", criterion_round_accuracy},
      {"adaptive depolarizing plan", criterion_depolarizing_plan},
      {"adaptive amplitude damping plan", criterion_damping_plan},
      {"five-qubit reference plans", criterion_five_qubit_plans},
      {"independent level-map routes agree", criterion_route_agreement},
      {"structural invariants", criterion_invariants},
      {"polarization of the corrected mixtures", criterion_polarization},
  };

  int failed = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    g_criterion_failures = 0;
    auto start = std::chrono::steady_clock::now();
    c.run();
    auto stop = std::chrono::steady_clock::now();
    double ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    bool pass = g_criterion_failures == 0;
    failed += pass ? 0 : 1;
    std::printf("[%s] %d/%zu %s (%.1f ms)\n", pass ? "PASS" : "FAIL", index,
                criteria.size(), c.name, ms);
  }
  std::printf("%d of %zu acceptance criteria pass\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
