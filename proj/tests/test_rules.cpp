#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <braidgs/verifier.hpp>

#include <map>
#include <set>

#include "support.hpp"

using namespace bt;

namespace {

// Instance counts per family straight from the index ranges.
std::map<Family, int> expected_counts(int n) {
  std::map<Family, int> c;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = 1; k <= n - 1; ++k) {
        if (k != i - 1 && k != i && k != j - 1 && k != j) c[Family::E1] += 2;
      }
      if (j == i + 1) c[Family::E2] += 2;
      if (i >= 2) c[Family::E3] += 2;
      if (j > i + 1) c[Family::E4] += 2, c[Family::E5] += 2;
      if (j <= n - 1) c[Family::E6] += 2;
      c[Family::Triv] += 2;
    }
  }
  int triples = n * (n - 1) * (n - 2) / 6;
  int quads = triples * (n - 3) / 4;
  for (auto f : {Family::E7, Family::E8, Family::E9, Family::E10}) c[f] = 2 * triples;
  c[Family::E11] = c[Family::E12] = 2 * quads;
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j)
        for (int l = j + 1; l <= n; ++l)
          if ((j < i && i < k && k < l) || (i < k && k < j && j < l)) c[Family::E13] += 4;
  for (int j = 1; j <= n - 1; ++j) {
    for (int k = 1; k <= n - 1; ++k) {
      if (j < k - 1) ++c[Family::E14];
      if (k < j) ++c[Family::E15];
    }
    ++c[Family::E16];
  }
  return c;
}

// Every letter pair that must start a rule: sigma then band, and band
// letters from S_k then S_l with k < l.
int reducible_pair_count(int n) {
  int band_letters = n * (n - 1);
  int total = (n - 1) * band_letters;
  for (int k = 2; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) total += 2 * (k - 1) * 2 * (l - 1);
  return total;
}

std::vector<const RewriteRule*> rules_starting(const RuleSet& rules, BandLetter a, BandLetter c) {
  std::vector<const RewriteRule*> out;
  for (auto id : rules.starting_with(a)) {
    const auto& r = rules[id];
    if (r.lhs.size() >= 2 && r.lhs[1] == c) out.push_back(&r);
  }
  return out;
}

}  // namespace

TEST_CASE("conjugate_expand") {
  auto n = StrandCount{3};
  CHECK(conjugate_expand(BandWord(n, {b(2, 3)}), BandWord(n, {b(1, 3, -1)})) ==
        band(3, "b1.3 b2.3 B1.3"));
  CHECK(conjugate_expand(band(3, "b1.2 S1"), BandWord(n)) == band(3, "b1.2 S1"));
  CHECK(conjugate_expand(band(3, "b1.2"), band(3, "b1.2")) == band(3, "b1.2"));
  CHECK_THROWS_AS(conjugate_expand(band(3, "b1.2"), band(3, "S1")), Error);
}

TEST_CASE("free_reduce on band words") {
  CHECK(free_reduce(band(3, "b1.2 b1.3 B1.3 B1.2 S1")) == band(3, "S1"));
  CHECK(free_reduce(band(3, "S1 b1.2 B1.2 S1")) == band(3, "S1 S1"));
}

TEST_CASE("n = 2 has exactly five rules") {
  auto rules = instantiate_rules(StrandCount{2});
  REQUIRE(rules.size() == 5);
  std::multiset<std::string> names;
  for (const auto& r : rules.rules()) names.insert(std::string(family_name(r.family)));
  CHECK(names.count("E2") == 2);
  CHECK(names.count("E16") == 1);
  CHECK(names.count("TRIV") == 2);
}

TEST_CASE("named instances") {
  auto rules = instantiate_rules(StrandCount{3});
  auto e16 = rules.find(band(3, "S1 S1").letters());
  REQUIRE(e16);
  CHECK(rules[*e16].rhs == band(3, "B1.2"));
  CHECK(rules[*e16].family == Family::E16);
  auto e15 = rules.find(band(3, "S2 S1 S2").letters());
  REQUIRE(e15);
  CHECK(rules[*e15].rhs == band(3, "S1 S2 S1"));
  CHECK(rules[*e15].family == Family::E15);
  auto e7 = rules.find(band(3, "B1.2 b2.3").letters());
  REQUIRE(e7);
  CHECK(rules[*e7].rhs == band(3, "b1.3 b2.3 B1.3 B1.2"));
  CHECK(rules[*e7].label() == "E7(j=1,k=2,l=3,e=+1)");
}

TEST_CASE("E15 left-hand sides") {
  auto rules = instantiate_rules(StrandCount{5});
  auto id = rules.find(band(5, "S4 S2 S3 S4").letters());
  REQUIRE(id);
  CHECK(rules[*id].rhs == band(5, "S2 S3 S4 S3"));
  CHECK(rules[*id].lhs.size() == 4);
}

TEST_CASE("E4 forms") {
  auto n = StrandCount{4};
  auto reduced = instantiate_rules(n);
  auto written = instantiate_rules(n, RhsForm::AsWritten);
  auto lhs = band(4, "S1 B1.4");
  const auto& r = reduced[*reduced.find(lhs.letters())];
  const auto& w = written[*written.find(lhs.letters())];
  CHECK(r.family == Family::E4);
  CHECK(w.rhs == band(4, "B1.2 B2.4 b1.2 S1"));
  CHECK(r.rhs == band(4, "b1.4 B2.4 B1.4 S1"));
  CHECK(normal_form(w.rhs, reduced) == r.rhs);
  CHECK(oracle_equal_band(w.rhs, r.rhs));
}

TEST_CASE("rule counts agree with an independent enumeration") {
  const std::map<int, std::size_t> totals{{2, 5}, {3, 29}, {4, 99}, {5, 253}, {6, 541}};
  for (int n = 2; n <= 7; ++n) {
    auto rules = instantiate_rules(StrandCount(n));
    std::map<Family, int> got;
    for (const auto& r : rules.rules()) ++got[r.family];
    auto want = expected_counts(n);
    for (auto& [f, c] : want) {
      INFO("n=" << n << " " << family_name(f));
      CHECK(got[f] == c);
    }
    int sum = 0;
    for (auto& [f, c] : want) sum += c;
    CHECK(rules.size() == static_cast<std::size_t>(sum));
    if (totals.count(n)) CHECK(rules.size() == totals.at(n));
  }
}

TEST_CASE("classify_pair examples") {
  CHECK(classify_pair(S(2), b(1, 3)) == Family::E5);
  CHECK(!classify_pair(b(1, 3), S(1)));
  CHECK(classify_pair(b(1, 2, -1), b(2, 3)) == Family::E7);
  CHECK(classify_pair(S(1), S(1)) == Family::E16);
  CHECK(classify_pair(S(2), S(1)) == Family::E15);
  CHECK(classify_pair(S(1), S(3)) == Family::E14);
  CHECK(!classify_pair(S(1), S(2)));
  CHECK(classify_pair(b(1, 3), b(1, 3, -1)) == Family::Triv);
  CHECK(!classify_pair(b(1, 3), b(1, 3)));
}

TEST_CASE("classify_pair agrees with the rule set") {
  for (int n = 2; n <= 6; ++n) {
    auto rules = instantiate_rules(StrandCount(n));
    auto alphabet = band_alphabet(n);
    for (auto a : alphabet) {
      for (auto c : alphabet) {
        auto found = rules_starting(rules, a, c);
        auto fam = classify_pair(a, c);
        INFO(render_letter(a) << " " << render_letter(c));
        if (fam) {
          REQUIRE(!found.empty());
          for (const auto* r : found) CHECK(r->family == *fam);
        } else {
          CHECK(found.empty());
        }
      }
    }
  }
}

TEST_CASE("reducible pairs match exactly one rule") {
  for (int n = 2; n <= 6; ++n) {
    auto rules = instantiate_rules(StrandCount(n));
    auto alphabet = band_alphabet(n);
    int covered = 0;
    for (auto a : alphabet) {
      for (auto c : alphabet) {
        bool sigma_band = a.is_sigma() && c.is_band();
        bool band_band = a.is_band() && c.is_band() && a.j() < c.j();
        auto found = rules_starting(rules, a, c);
        INFO(render_letter(a) << " " << render_letter(c));
        if (sigma_band || band_band) {
          CHECK(found.size() == 1);
          CHECK(found.front()->lhs.size() == 2);
          ++covered;
        }
        if (a.is_band() && c.is_sigma()) CHECK(found.empty());
        if (a.is_band() && c.is_band() && a.j() > c.j()) CHECK(found.empty());
      }
    }
    CHECK(covered == reducible_pair_count(n));
  }
}

TEST_CASE("every rule is sound") {
  for (int n = 2; n <= 5; ++n) {
    auto rules = instantiate_rules(StrandCount(n));
    for (const auto& r : rules.rules()) {
      INFO(r.label());
      CHECK(oracle_equal_band(r.lhs, r.rhs));
    }
  }
}

TEST_CASE("right-hand sides are freely reduced") {
  auto rules = instantiate_rules(StrandCount{6});
  for (const auto& r : rules.rules()) CHECK(free_reduce(r.rhs) == r.rhs);
}

TEST_CASE("no left-hand side contains another") {
  for (int n = 2; n <= 6; ++n) {
    auto rules = instantiate_rules(StrandCount(n));
    for (const auto& outer : rules.rules()) {
      for (std::size_t pos = 0; pos < outer.lhs.size(); ++pos) {
        for (std::size_t len = 1; pos + len <= outer.lhs.size(); ++len) {
          if (len == outer.lhs.size()) continue;
          CHECK(!rules.find(outer.lhs.letters().subspan(pos, len)));
        }
      }
    }
  }
}

TEST_CASE("rule set construction errors") {
  auto n = StrandCount{3};
  RewriteRule r{band(3, "S1 S1"), band(3, "B1.2"), Family::E16, {}};
  CHECK_THROWS_AS(RuleSet(n, {r, r}), Error);
  CHECK_THROWS_AS(RuleSet(n, {RewriteRule{BandWord(n), BandWord(n), Family::Triv, {}}}), Error);
  RewriteRule other{band(4, "S1 S1"), band(4, "B1.2"), Family::E16, {}};
  CHECK_THROWS_AS(RuleSet(n, {other}), StrandMismatch);
}

TEST_CASE("index is longest first") {
  auto rules = instantiate_rules(StrandCount{5});
  auto ids = rules.starting_with(S(4));
  for (std::size_t k = 1; k < ids.size(); ++k) {
    CHECK(rules[ids[k - 1]].lhs.size() >= rules[ids[k]].lhs.size());
  }
  CHECK(rules.max_lhs_length() == 5);
}
