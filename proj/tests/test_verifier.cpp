#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <braidgs/verifier.hpp>

#include <algorithm>

#include "support.hpp"

using namespace bt;

namespace {

// All (f, g, overlap) with a proper suffix of lhs(f) equal to a proper
// prefix of lhs(g), by direct comparison.
std::size_t brute_force_overlaps(const RuleSet& rules) {
  std::size_t count = 0;
  for (const auto& f : rules.rules()) {
    for (const auto& g : rules.rules()) {
      auto a = f.lhs.letters();
      auto c = g.lhs.letters();
      for (std::size_t ov = 1; ov < a.size() && ov < c.size(); ++ov) {
        if (std::equal(a.end() - static_cast<long>(ov), a.end(), c.begin())) ++count;
      }
    }
  }
  return count;
}

const Ambiguity* find_ambiguity(const std::vector<Ambiguity>& all, const RuleSet& rules,
                                const BandWord& word, Family left, Family right) {
  for (const auto& a : all) {
    if (a.word == word && rules[a.left_rule].family == left &&
        rules[a.right_rule].family == right) {
      return &a;
    }
  }
  return nullptr;
}

BandWord sigma_seg(int n, int i, int j) {
  BandWord w(StrandCount{n});
  for (int m = i; m < j; ++m) w.push_back(S(m));
  return w;
}

}  // namespace

TEST_CASE("ambiguity counts") {
  const std::size_t frozen[] = {0, 0, 7, 73, 418, 1645, 5082};
  for (int n = 2; n <= 6; ++n) {
    auto rules = instantiate_rules(StrandCount(n));
    auto all = enumerate_ambiguities(rules);
    CHECK(all.size() == brute_force_overlaps(rules));
    CHECK(all.size() == frozen[n]);
  }
}

TEST_CASE("ambiguities are well formed and sorted") {
  auto rules = instantiate_rules(StrandCount{4});
  auto all = enumerate_ambiguities(rules);
  for (std::size_t k = 0; k < all.size(); ++k) {
    const auto& a = all[k];
    const auto& f = rules[a.left_rule].lhs;
    const auto& g = rules[a.right_rule].lhs;
    CHECK(a.word == f * a.suffix);
    CHECK(a.word == a.prefix * g);
    CHECK(a.prefix.size() < f.size());
    CHECK(a.suffix.size() < g.size());
    CHECK(a.word.size() < f.size() + g.size());
    if (k > 0) {
      const auto& p = all[k - 1];
      CHECK(std::tie(p.left_rule, p.right_rule, p.overlap) <
            std::tie(a.left_rule, a.right_rule, a.overlap));
    }
  }
}

TEST_CASE("reducts are equal in the group") {
  for (int n = 2; n <= 4; ++n) {
    auto rules = instantiate_rules(StrandCount(n));
    for (const auto& a : enumerate_ambiguities(rules)) {
      auto [l, r] = reducts(a, rules);
      CHECK(oracle_equal_band(l, r));
      CHECK(oracle_equal_band(l, a.word));
    }
  }
}

TEST_CASE("(ij)(jk)(kl) family") {
  for (int n = 4; n <= 5; ++n) {
    auto rules = instantiate_rules(StrandCount(n));
    auto all = enumerate_ambiguities(rules);
    int seen = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l) {
            BandWord w(StrandCount(n), {b(i, j), b(j, k), b(k, l)});
            const auto* a = find_ambiguity(all, rules, w, Family::E8, Family::E8);
            REQUIRE(a);
            CHECK(resolve_ambiguity(*a, rules).trivial);
            ++seen;
          }
    CHECK(seen == (n == 4 ? 1 : 5));
  }
}

TEST_CASE("sigma_q (jk)(kl) family") {
  auto rules = instantiate_rules(StrandCount{6});
  auto all = enumerate_ambiguities(rules);
  int at_l = 0, below_l = 0;
  for (int j = 1; j <= 6; ++j)
    for (int k = j + 1; k <= 6; ++k)
      for (int l = k + 1; l <= 6; ++l)
        for (int q = 1; q <= 5; ++q) {
          if (q == j - 1 || q == j || q == k - 1 || q == k) continue;
          BandWord w(StrandCount{6}, {S(q), b(j, k), b(k, l)});
          const auto* a = find_ambiguity(all, rules, w, Family::E1, Family::E8);
          REQUIRE(a);
          CHECK(resolve_ambiguity(*a, rules).trivial);
          at_l += q == l;
          below_l += q == l - 1;
        }
  CHECK(at_l > 0);
  CHECK(below_l > 0);
}

TEST_CASE("sigma overlaps of E15 with itself") {
  int n = 6;
  auto rules = instantiate_rules(StrandCount(n));
  auto all = enumerate_ambiguities(rules);
  int adjacent = 0, far = 0;
  for (int j = 2; j <= n - 1; ++j)
    for (int k = 1; k < j; ++k)
      for (int l = 1; l < j; ++l) {
        BandWord w(StrandCount(n), {S(j)});
        w *= sigma_seg(n, k, j + 1) * sigma_seg(n, l, j + 1);
        const auto* a = find_ambiguity(all, rules, w, Family::E15, Family::E15);
        REQUIRE(a);
        CHECK(resolve_ambiguity(*a, rules).trivial);
        adjacent += l == j - 1;
        far += l < j - 1;
      }
  CHECK(adjacent > 0);
  CHECK(far > 0);
}

TEST_CASE("E16 self-overlap in B_2") {
  auto rules = instantiate_rules(StrandCount{2});
  auto all = enumerate_ambiguities(rules);
  const auto* a = find_ambiguity(all, rules, band(2, "S1 S1 S1"), Family::E16, Family::E16);
  REQUIRE(a);
  auto res = resolve_ambiguity(*a, rules);
  CHECK(res.trivial);
  CHECK(*res.left_normal_form == band(2, "B1.2 S1"));
  CHECK(*res.right_normal_form == band(2, "B1.2 S1"));
}

TEST_CASE("verify n = 2 .. 5") {
  for (int n = 2; n <= 5; ++n) {
    VerifyOptions opts;
    opts.check_soundness = true;
    auto report = verify_basis(StrandCount(n), opts);
    CHECK(report.failures.empty());
    CHECK(report.minimality_violations.empty());
    REQUIRE(report.unsound_rules);
    CHECK(report.unsound_rules->empty());
    CHECK(report.ok());
  }
}

TEST_CASE("corrupted E7 conjugator") {
  int n = 3;
  auto base = instantiate_rules(StrandCount(n));
  std::vector<RewriteRule> rules(base.rules().begin(), base.rules().end());
  auto it = std::find_if(rules.begin(), rules.end(),
                         [](const RewriteRule& r) { return r.family == Family::E7; });
  REQUIRE(it != rules.end());
  // {s_{k,l}^e, s_{j,l}} instead of {s_{k,l}^e, s_{j,l}^{-1}}
  auto last = it->rhs[it->rhs.size() - 1];
  auto lhs2 = it->lhs[1];
  auto conj = BandLetter::band(it->lhs[0].i(), lhs2.j(), +1);
  it->rhs = conjugate_expand(BandWord(StrandCount(n), {lhs2}), BandWord(StrandCount(n), {conj}));
  it->rhs.push_back(last);
  RuleSet corrupted(StrandCount(n), rules);
  VerifyOptions opts;
  opts.check_soundness = true;
  opts.reduce.step_budget = 100000;
  auto report = verify_rules(corrupted, opts);
  CHECK(!report.failures.empty());
  REQUIRE(report.unsound_rules);
  CHECK(report.unsound_rules->size() == 1);
  CHECK(!report.ok());
}

TEST_CASE("minimality") {
  CHECK(check_minimality(RuleSet(StrandCount{3}, {})).empty());
  for (int n = 2; n <= 5; ++n) CHECK(check_minimality(instantiate_rules(StrandCount(n))).empty());

  int n = 4;
  auto base = instantiate_rules(StrandCount(n));
  std::vector<RewriteRule> rules(base.rules().begin(), base.rules().end());
  auto lhs = sigma_seg(n, 2, 4) * sigma_seg(n, 1, 4);
  rules.push_back({lhs, normal_form(lhs, base), Family::E15, {}});
  RuleSet augmented(StrandCount(n), rules);
  auto v = check_minimality(augmented);
  REQUIRE(!v.empty());
  bool extra_reported = false;
  for (const auto& m : v) {
    if (m.rule == rules.size() - 1 && m.kind == MinimalityViolation::Kind::LhsReducible) {
      extra_reported = true;
    }
  }
  CHECK(extra_reported);
  CHECK_THROWS_AS(enumerate_ambiguities(augmented), InclusionAmbiguity);
}

TEST_CASE("E4 as written is not interreduced") {
  for (int n = 3; n <= 6; ++n) {
    auto written = instantiate_rules(StrandCount(n), RhsForm::AsWritten);
    auto v = check_minimality(written);
    CHECK(v.size() == static_cast<std::size_t>((n - 1) * (n - 2)));
    for (const auto& m : v) {
      CHECK(m.kind == MinimalityViolation::Kind::RhsReducible);
      CHECK(written[m.rule].family == Family::E4);
      CHECK(written[m.by_rule].family == Family::E7);
    }
    auto report = verify_rules(written);
    CHECK(report.failures.empty());
  }
}

TEST_CASE("parallel and serial kernels agree") {
  auto rules = instantiate_rules(StrandCount{5});
  auto all = enumerate_ambiguities(rules);
  auto par = resolve_all(all, rules);
  auto ser = resolve_all_serial(all, rules);
  REQUIRE(par.size() == ser.size());
  for (std::size_t k = 0; k < par.size(); ++k) {
    CHECK(par[k].trivial == ser[k].trivial);
    CHECK(par[k].left_normal_form == ser[k].left_normal_form);
    CHECK(par[k].right_normal_form == ser[k].right_normal_form);
  }
  CHECK(unsound_rules(rules) == unsound_rules_serial(rules));
  VerifyOptions serial;
  serial.parallel = false;
  auto a = verify_rules(rules);
  auto c = verify_rules(rules, serial);
  CHECK(a.ambiguity_count == c.ambiguity_count);
  CHECK(a.failures.size() == c.failures.size());
}
