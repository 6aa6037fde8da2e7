#include "doctest.h"
#include "oracles.hpp"
#include "youngtab/lr_rule.hpp"
#include "youngtab/sympoly.hpp"

using namespace youngtab;

namespace {

std::vector<unsigned> rows_of(const Partition& p) {
  return {p.parts().begin(), p.parts().end()};
}

std::vector<Partition> partitions_up_to(Part n) {
  std::vector<Partition> out;
  for (Part k = 0; k <= n; ++k) {
    for (auto& p : partitions_of(k)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

TEST_CASE("reverse reading words of the two (3,2,1)/(2,1) witnesses") {
  Filling first = Filling::parse(". . 1/. 1/2");
  Filling second = Filling::parse(". . 1/. 2/1");
  CHECK(reverse_reading_word(first).letters == std::vector<Entry>{1, 1, 2});
  CHECK(reverse_reading_word(second).letters == std::vector<Entry>{1, 2, 1});
  CHECK(reverse_reading_word(Filling()).letters.empty());
  CHECK(reverse_reading_word(Filling::straight({{1, 1, 2}, {2, 3}})).letters ==
        std::vector<Entry>{2, 1, 1, 3, 2});
}

TEST_CASE("lattice words") {
  CHECK(is_lattice(std::vector<Entry>{1, 1, 2}));
  CHECK(is_lattice(std::vector<Entry>{1, 2, 1}));
  CHECK_FALSE(is_lattice(std::vector<Entry>{2, 1, 1}));
  CHECK(is_lattice(std::vector<Entry>{}));
  CHECK(is_lattice(std::vector<Entry>{1, 2, 3, 1, 2, 1}));
  CHECK_FALSE(is_lattice(std::vector<Entry>{1, 3}));
  CHECK_FALSE(is_lattice(std::vector<Entry>{1, 2, 2}));
}

TEST_CASE("C^(3,2,1)_(2,1),(2,1) = 2 with the two witnesses") {
  auto witnesses = enumerate_lr_fillings({3, 2, 1}, {2, 1}, {2, 1});
  REQUIRE(witnesses.size() == 2);
  CHECK(witnesses[0].filling == Filling::parse(". . 1/. 1/2"));
  CHECK(witnesses[1].filling == Filling::parse(". . 1/. 2/1"));
  for (const auto& w : witnesses) {
    CHECK(w.content.counts == std::vector<std::uint32_t>{2, 1});
  }
  CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == 2);
}

TEST_CASE("degenerate LR cases") {
  for (const Partition& lambda : partitions_up_to(5)) {
    auto ws = enumerate_lr_fillings(lambda, lambda, {});
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].filling.num_boxes() == 0);
    CHECK(lr_coefficient(lambda, {}, lambda) == 1);
  }
  CHECK(enumerate_lr_fillings({2, 2}, {3}, {1}).empty());
  CHECK(lr_coefficient({3}, {1}, {2, 2}) == 0);
  CHECK(lr_coefficient({2, 1}, {1}, {2}) == 0);
  CHECK(lr_coefficient({2, 1}, {2, 1}, {4, 2}) ==
        expand_product({2, 1}, {2, 1}).at(Partition{4, 2}));
}

TEST_CASE("LR enumeration agrees with brute-force filtering") {
  for (const Partition& nu : partitions_up_to(6)) {
    for (const Partition& lambda : partitions_up_to(static_cast<Part>(nu.size()))) {
      if (!contains(lambda, nu)) continue;
      for (const Partition& mu :
           partitions_of(static_cast<Part>(nu.size() - lambda.size()))) {
        auto fast = enumerate_lr_fillings(nu, lambda, mu);
        auto slow = oracle::lr_fillings(rows_of(nu), rows_of(lambda), rows_of(mu));
        REQUIRE(fast.size() == slow.size());
        // Brute force comes out in row-reading order; compare as sets.
        std::vector<oracle::Rows> got;
        for (const auto& w : fast) {
          oracle::Rows rows;
          for (const auto& r : w.filling.rows()) rows.emplace_back(r.begin(), r.end());
          got.push_back(rows);
        }
        std::sort(got.begin(), got.end());
        std::sort(slow.begin(), slow.end());
        CHECK(got == slow);
      }
    }
  }
}

TEST_CASE("every witness re-checks its own invariants") {
  for (const Partition& nu : partitions_up_to(7)) {
    for (const Partition& lambda : partitions_up_to(static_cast<Part>(nu.size()))) {
      if (!contains(lambda, nu)) continue;
      for (const Partition& mu :
           partitions_of(static_cast<Part>(nu.size() - lambda.size()))) {
        ReadingWord previous;
        bool first = true;
        LrEnumerator gen(nu, lambda, mu);
        while (auto w = gen.next()) {
          CHECK(is_semistandard(w->filling));
          ReadingWord word = reverse_reading_word(w->filling);
          CHECK(is_lattice(word));
          CHECK(weight(w->filling, static_cast<Entry>(mu.num_rows())) ==
                w->content);
          CHECK(w->filling.shape() == skew(nu, lambda));
          if (!first) CHECK(previous.letters < word.letters);
          previous = word;
          first = false;
        }
      }
    }
  }
}

TEST_CASE("LR rule equals the Schur expansion for |lambda|+|mu| <= 6") {
  for (Part total = 0; total <= 6; ++total) {
    for (Part a = 0; a <= total; ++a) {
      for (const Partition& lambda : partitions_of(a)) {
        for (const Partition& mu : partitions_of(total - a)) {
          SchurExpansion oracle = expand_product(lambda, mu);
          for (const Partition& nu : partitions_of(total)) {
            auto it = oracle.find(nu);
            BigInt expected = it == oracle.end() ? BigInt(0) : it->second;
            CAPTURE(lambda);
            CAPTURE(mu);
            CAPTURE(nu);
            CHECK(lr_coefficient(lambda, mu, nu) == expected);
          }
        }
      }
    }
  }
}

TEST_CASE("LR coefficients are symmetric in lambda and mu") {
  for (Part total = 0; total <= 6; ++total) {
    for (Part a = 0; a <= total; ++a) {
      for (const Partition& lambda : partitions_of(a)) {
        for (const Partition& mu : partitions_of(total - a)) {
          for (const Partition& nu : partitions_of(total)) {
            CHECK(lr_coefficient(lambda, mu, nu) ==
                  lr_coefficient(mu, lambda, nu));
          }
        }
      }
    }
  }
}

TEST_CASE("LR coefficient vanishes off the right size") {
  for (const Partition& lambda : partitions_up_to(3)) {
    for (const Partition& mu : partitions_up_to(3)) {
      for (const Partition& nu : partitions_up_to(7)) {
        if (nu.size() == lambda.size() + mu.size()) continue;
        CHECK(lr_coefficient(lambda, mu, nu) == 0);
      }
    }
  }
}

TEST_CASE("a larger coefficient") {
  // C^(4,3,2)_(3,2,1),(2,1), checked against the expansion at width 9.
  CHECK(lr_coefficient({3, 2, 1}, {2, 1}, {4, 3, 2}) ==
        expand_product({3, 2, 1}, {2, 1}).at(Partition{4, 3, 2}));
  CHECK(lr_coefficient({3, 2, 1}, {2, 1}, {4, 3, 2}) == 2);
  CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == 2);
}
