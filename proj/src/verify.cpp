#include "hecke/verify.hpp"

#include <chrono>
#include <map>
#include <random>

#include "hecke/algebraic.hpp"
#include "hecke/coset.hpp"
#include "hecke/errors.hpp"
#include "hecke/geometric.hpp"

namespace hecke {

namespace {

constexpr std::size_t kMaxRecordedFailures = 100;

class SuiteTimer {
 public:
  SuiteTimer() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void record(VerificationReport& report, std::string inputs, std::string expected,
            std::string actual) {
  if (report.failures.size() < kMaxRecordedFailures)
    report.failures.push_back({std::move(inputs), std::move(expected), std::move(actual)});
}

void check_equal(VerificationReport& report, const std::string& inputs,
                 const HeckeElement& expected, const HeckeElement& actual) {
  ++report.checked;
  if (!(expected == actual))
    record(report, inputs, expected.to_string(), actual.to_string());
}

}  // namespace

std::string VerificationReport::to_string() const {
  std::string out = "suite=" + suite + " kappa=" + std::to_string(kappa) +
                    " checked=" + std::to_string(checked) +
                    " failures=" + std::to_string(failures.size()) +
                    " elapsed_ms=" + std::to_string(elapsed_ms) +
                    (passed() ? " PASS" : " FAIL");
  for (const auto& f : failures)
    out += "\n  " + f.inputs + ": expected " + f.expected + ", got " + f.actual;
  return out;
}

VerificationReport verify_coset_cover(int kappa) {
  if (kappa < 2 || kappa > 7) throw DomainError("coset cover suite needs 2 <= kappa <= 7");
  SuiteTimer timer;
  VerificationReport report;
  report.suite = "cosets";
  report.kappa = kappa;

  std::map<Permutation, std::string> seen;
  const std::vector<Permutation> subgroup =
      kappa == 2 ? std::vector<Permutation>{Permutation::identity(1)}
                 : all_permutations(kappa - 2);
  for (CosetFamily family : {CosetFamily::F1, CosetFamily::F2}) {
    for (const auto& w_pp_small : subgroup) {
      const Permutation w_pp = embed(w_pp_small, kappa);
      for (int m = 1; m <= kappa - 1; ++m) {
        for (int l = 0; l < m; ++l) {
          ++report.checked;
          const std::string label = std::string(family_name(family)) + " w''=[" +
                                    w_pp.to_string() + "] m=" + std::to_string(m) +
                                    " l=" + std::to_string(l);
          const Permutation w = double_coset_compose(family, w_pp, m, l);
          if (auto [it, inserted] = seen.emplace(w, label); !inserted) {
            record(report, label, "a fresh element of S_kappa",
                   "[" + w.to_string() + "] already produced by " + it->second);
            continue;
          }
          const DoubleCosetDecomp d = double_coset_decompose(w);
          if (d.family != family || d.w_double_prime != w_pp || d.m != m || d.l != l)
            record(report, "decompose([" + w.to_string() + "])", label,
                   std::string(family_name(d.family)) + " w''=[" +
                       d.w_double_prime.to_string() + "] m=" + std::to_string(d.m) +
                       " l=" + std::to_string(d.l));
          const int expected_len = length(w_pp) + double_coset_chain_length(family, m, l);
          if (length(w) != expected_len)
            record(report, "length([" + w.to_string() + "])", std::to_string(expected_len),
                   std::to_string(length(w)));
        }
      }
    }
  }

  std::size_t group_order = 1;
  for (int i = 2; i <= kappa; ++i) group_order *= static_cast<std::size_t>(i);
  if (seen.size() != group_order)
    record(report, "coverage of S_" + std::to_string(kappa), std::to_string(group_order),
           std::to_string(seen.size()) + " distinct reconstructions");

  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

VerificationReport verify_kappa2_table() {
  SuiteTimer timer;
  VerificationReport report;
  report.suite = "prop31";
  report.kappa = 2;

  const Permutation id = Permutation::identity(2);
  const Permutation s1 = Permutation::transposition(2, 1);
  HeckeElement t_id = HeckeElement::basis(id);
  HeckeElement t_1 = HeckeElement::basis(s1);
  HeckeElement t1_sq = t_id;
  t1_sq.add_term(s1, HbarPoly::hbar());

  const struct {
    Permutation left, right;
    HeckeElement expected;
  } cases[] = {
      {id, id, t_id},
      {id, s1, t_1},
      {s1, id, t_1},
      {s1, s1, t1_sq},
  };
  for (const auto& c : cases) {
    const std::string inputs = "T_[" + c.left.to_string() + "] * T_[" + c.right.to_string() + "]";
    check_equal(report, inputs + " (algebraic)", c.expected,
                mul(HeckeElement::basis(c.left), HeckeElement::basis(c.right)));
    check_equal(report, inputs + " (geometric)", c.expected,
                geometric_product(c.left, c.right).result);
  }

  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

VerificationReport verify_isomorphism(int kappa, std::uint64_t seed) {
  if (kappa < 1 || kappa > 6) throw DomainError("isomorphism suite needs 1 <= kappa <= 6");
  SuiteTimer timer;
  VerificationReport report;
  report.suite = "isomorphism";
  report.kappa = kappa;

  const std::vector<Permutation> all = all_permutations(kappa);
  const std::vector<Permutation> supported = supported_left_factors(kappa);
  for (const auto& w1 : supported) {
    for (const auto& w2 : all) {
      check_equal(report, "T_[" + w1.to_string() + "] * T_[" + w2.to_string() + "]",
                  mul(HeckeElement::basis(w1), HeckeElement::basis(w2)),
                  geometric_product(w1, w2).result);
    }
  }

  // Left factors outside the recursion's domain, rebuilt by folding
  // geometric generator products over a reduced word.
  std::vector<Permutation> unsupported;
  for (const auto& w : all)
    if (!is_simple_involution_product(w)) unsupported.push_back(w);
  if (!unsupported.empty()) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 200; ++trial) {
      const Permutation& w1 = unsupported[rng() % unsupported.size()];
      const Permutation& w2 = all[rng() % all.size()];
      HeckeElement folded = HeckeElement::basis(w2);
      const Word word = reduced_word(w1);
      for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
        folded = geometric_left_mul_gen(*it, folded);
      check_equal(report,
                  "fold T_[" + w1.to_string() + "] * T_[" + w2.to_string() + "]",
                  mul(HeckeElement::basis(w1), HeckeElement::basis(w2)), folded);
    }
  }

  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

VerificationReport verify_relations(int kappa) {
  if (kappa < 2 || kappa > 7) throw DomainError("relations suite needs 2 <= kappa <= 7");
  SuiteTimer timer;
  VerificationReport report;
  report.suite = "relations";
  report.kappa = kappa;

  const Permutation id = Permutation::identity(kappa);
  auto gen = [&](int i) { return HeckeElement::basis(Permutation::transposition(kappa, i)); };

  for (int backend = 0; backend < 2; ++backend) {
    const bool geometric = backend == 1;
    const std::string tag = geometric ? " (geometric)" : " (algebraic)";
    auto prod = [&](int i, const HeckeElement& x) {
      return geometric ? geometric_left_mul_gen(i, x) : left_mul_gen(i, x);
    };

    for (int i = 1; i <= kappa - 1; ++i) {
      HeckeElement expected = HeckeElement::basis(id);
      expected.add_term(Permutation::transposition(kappa, i), HbarPoly::hbar());
      check_equal(report, "T_" + std::to_string(i) + "^2" + tag, expected, prod(i, gen(i)));
    }
    for (int i = 1; i <= kappa - 1; ++i)
      for (int j = i + 2; j <= kappa - 1; ++j)
        check_equal(report,
                    "T_" + std::to_string(i) + " T_" + std::to_string(j) + " commute" + tag,
                    prod(i, gen(j)), prod(j, gen(i)));
    for (int i = 1; i <= kappa - 2; ++i)
      check_equal(report, "braid T_" + std::to_string(i) + ", T_" + std::to_string(i + 1) + tag,
                  prod(i, prod(i + 1, gen(i))), prod(i + 1, prod(i, gen(i + 1))));
  }

  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

}  // namespace hecke
