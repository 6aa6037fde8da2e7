// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. All checks are exact; time limits are wall clock.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "youngtab/lr_rule.hpp"
#include "youngtab/partition.hpp"
#include "youngtab/schensted.hpp"
#include "youngtab/sympoly.hpp"
#include "youngtab/tableau.hpp"

using namespace youngtab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Entry> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Entry>(i + 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Outcome hook_length_count() {
  Outcome o;
  o.expect(count_standard({4, 2, 1}) == 35, "count_standard((4,2,1)) != 35");
  o.expect(enumerate_syt({4, 2, 1}).size() == 35,
           "enumerate_syt((4,2,1)) does not yield 35 tableaux");
  CliResult cli = run_cli("count-syt [4,2,1]");
  o.expect(cli.status == 0 && cli.out == "35\n",
           "`count-syt [4,2,1]` printed '" + cli.out + "'");
  return o;
}

Outcome hook_factors() {
  Outcome o;
  o.expect(hook_lengths({4, 2, 1}) ==
               std::vector<std::uint64_t>{6, 4, 3, 2, 1, 1, 1},
           "hook multiset of (4,2,1) is not {6,4,3,2,1,1,1}");
  return o;
}

Outcome eight_ssyt() {
  Outcome o;
  const std::set<std::vector<std::vector<Entry>>> listed = {
      {{1, 1}, {2}}, {{1, 2}, {2}}, {{1, 3}, {2}}, {{1, 2}, {3}},
      {{1, 1}, {3}}, {{1, 3}, {3}}, {{2, 2}, {3}}, {{2, 3}, {3}},
  };
  auto all = enumerate_ssyt(SkewShape(Partition{2, 1}), 3);
  std::set<std::vector<std::vector<Entry>>> got;
  for (const Filling& t : all) got.insert(t.rows());
  o.expect(all.size() == 8 && got == listed,
           "enumerate_ssyt((2,1), 3) differs from the eight listed tableaux");

  // x1^2 x2 + x1 x2^2 + x1 x2 x3 + x1 x2 x3 + x1^2 x3 + x1 x3^2 + x2^2 x3
  // + x2 x3^2, term by term.
  SparsePolynomial expected(3);
  for (const ExponentVector& e : std::vector<ExponentVector>{
           {2, 1, 0}, {1, 2, 0}, {1, 1, 1}, {1, 1, 1},
           {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {0, 1, 2}}) {
    expected.add_term(e, 1);
  }
  SparsePolynomial s = schur_polynomial({2, 1}, 3);
  o.expect(s == expected, "s_(2,1)(x1,x2,x3) = " + s.render());
  o.expect(s.coefficient({1, 1, 1}) == 2, "coefficient of x1 x2 x3 is not 2");
  return o;
}

Outcome lr_example() {
  Outcome o;
  o.expect(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == 2,
           "C^(3,2,1)_(2,1),(2,1) != 2");
  std::set<std::vector<std::vector<Entry>>> got;
  for (const LrWitness& w : enumerate_lr_fillings({3, 2, 1}, {2, 1}, {2, 1})) {
    got.insert(w.filling.rows());
  }
  const std::set<std::vector<std::vector<Entry>>> displayed = {
      {{1}, {1}, {2}}, {{1}, {2}, {1}}};
  o.expect(got == displayed, "witness set differs from the two displayed");
  return o;
}

Outcome lr_equals_expansion() {
  Outcome o;
  std::size_t pairs = 0;
  for (Part total = 0; total <= 6; ++total) {
    for (Part a = 0; a <= total; ++a) {
      for (const Partition& lambda : partitions_of(a)) {
        for (const Partition& mu : partitions_of(total - a)) {
          ++pairs;
          SchurExpansion oracle = expand_product(lambda, mu);
          for (const Partition& nu : partitions_of(total)) {
            auto it = oracle.find(nu);
            BigInt expected = it == oracle.end() ? BigInt(0) : it->second;
            BigInt rule = lr_coefficient(lambda, mu, nu);
            o.expect(rule == expected,
                     "C^" + nu.to_string() + "_" + lambda.to_string() + "," +
                         mu.to_string() + ": rule " + rule.str() +
                         ", expansion " + expected.str());
          }
          // The expansion must not mention any shape of another size.
          for (const auto& [nu, c] : oracle) {
            o.expect(nu.size() == total, "expansion has a term of wrong degree");
          }
        }
      }
    }
  }
  o.expect(pairs > 0, "no pairs checked");
  return o;
}

Outcome rsk_trace_example() {
  Outcome o;
  auto steps = rsk_trace(Permutation::parse("21453"));
  const std::vector<RskPair> displayed = {
      {Filling(), Filling()},
      {Filling::straight({{2}}), Filling::straight({{1}})},
      {Filling::straight({{1}, {2}}), Filling::straight({{1}, {2}})},
      {Filling::straight({{1, 4}, {2}}), Filling::straight({{1, 3}, {2}})},
      {Filling::straight({{1, 4, 5}, {2}}),
       Filling::straight({{1, 3, 4}, {2}})},
      {Filling::straight({{1, 3, 5}, {2, 4}}),
       Filling::straight({{1, 3, 4}, {2, 5}})},
  };
  o.expect(steps == displayed, "trace of 21453 differs from the displayed one");
  o.expect(rsk(Permutation::parse("21453")) == displayed.back(),
           "rsk(21453) final pair differs");
  return o;
}

Outcome rsk_properties() {
  Outcome o;
  for (std::size_t n = 0; n <= 6; ++n) {
    std::set<std::pair<std::vector<std::vector<Entry>>,
                       std::vector<std::vector<Entry>>>>
        images;
    for (const Permutation& sigma : all_permutations(n)) {
      RskPair pair = rsk(sigma);
      o.expect(inverse_rsk(pair) == sigma,
               "inverse_rsk(rsk(" + sigma.to_string() + ")) != sigma");
      images.insert({pair.insertion.rows(), pair.recording.rows()});
    }
    o.expect(images.size() == all_permutations(n).size(),
             "rsk is not injective on S_" + std::to_string(n));
  }
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const Permutation& sigma : all_permutations(n)) {
      RskPair pair = rsk(sigma);
      RskPair inv = rsk(sigma.inverse());
      o.expect(inv.insertion == pair.recording && inv.recording == pair.insertion,
               "rsk(sigma^-1) != (U,T) for sigma = " + sigma.to_string());
    }
  }
  for (std::size_t n = 0; n <= 7; ++n) {
    for (const Permutation& sigma : all_permutations(n)) {
      RskPair pair = rsk(sigma);
      std::size_t first_row =
          pair.insertion.rows().empty() ? 0 : pair.insertion.rows()[0].size();
      o.expect(first_row == lis_length(sigma),
               "first row != LIS for sigma = " + sigma.to_string());
    }
  }
  BigInt factorial = 1;
  for (Part n = 0; n <= 8; ++n) {
    if (n > 0) factorial *= n;
    BigInt total = 0;
    for (const Partition& p : partitions_of(n)) {
      BigInt f = count_standard(p);
      total += f * f;
    }
    o.expect(total == factorial,
             "sum of (f^lambda)^2 != n! for n = " + std::to_string(n));
  }
  return o;
}

Outcome bender_knuth_properties() {
  Outcome o;
  for (Part n = 0; n <= 6; ++n) {
    for (const Partition& p : partitions_of(n)) {
      for (Entry bound = 1; bound <= 4; ++bound) {
        auto all = enumerate_ssyt(SkewShape(p), bound);
        for (Entry i = 1; i < bound; ++i) {
          for (const Filling& t : all) {
            Filling u = bender_knuth(t, i);
            o.expect(is_semistandard(u) && bender_knuth(u, i) == t,
                     "t_" + std::to_string(i) + " is not an involution on " +
                         p.to_string());
            auto w = weight(t, bound).counts;
            std::swap(w[i - 1], w[i]);
            o.expect(weight(u, bound).counts == w,
                     "t_" + std::to_string(i) + " does not swap weights");
          }
        }
        o.expect(is_symmetric(schur_polynomial(p, bound)),
                 "s_" + p.to_string() + " in " + std::to_string(bound) +
                     " variables is not symmetric");
      }
    }
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 = no time limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "f^(4,2,1) = 35 (formula, enumeration, CLI)", 1.0, hook_length_count},
      {2, "hook lengths of (4,2,1) are {6,4,3,2,1,1,1}", 0.0, hook_factors},
      {3, "eight SSYT of (2,1) with N=3 and s_(2,1)(x1,x2,x3)", 1.0, eight_ssyt},
      {4, "C^(3,2,1)_(2,1),(2,1) = 2 with both witnesses", 0.0, lr_example},
      {5, "LR rule equals Schur expansion for |lambda|+|mu| <= 6", 60.0,
       lr_equals_expansion},
      {6, "RSK trace of 21453", 0.0, rsk_trace_example},
      {7, "RSK bijection, inverse symmetry, LIS law, sum f^2 = n!", 60.0,
       rsk_properties},
      {8, "Bender-Knuth involution and Schur symmetry (<= 6 boxes, N <= 4)",
       0.0, bender_knuth_properties},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (o.ok && c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.ok = false;
      o.detail = "took " + std::to_string(seconds) + " s, limit " +
                 std::to_string(c.limit_seconds) + " s";
    }
    std::printf("[%s] %d. %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id,
                c.name, seconds, o.ok ? "" : ": ", o.detail.c_str());
    if (!o.ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
