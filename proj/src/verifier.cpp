#include <braidgs/verifier.hpp>

#include <braidgs/free_group.hpp>

#include <algorithm>
#include <tuple>

namespace braidgs {

namespace {

bool occurs_at(std::span<const BandLetter> text, std::size_t pos,
               std::span<const BandLetter> pattern) {
  return pos + pattern.size() <= text.size() &&
         std::equal(pattern.begin(), pattern.end(), text.begin() + static_cast<std::ptrdiff_t>(pos));
}

// Some rule other than `self` whose LHS is a factor of `text`.
std::optional<std::size_t> factor_rule(std::span<const BandLetter> text, std::size_t self,
                                       const RuleSet& rules) {
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    for (auto id : rules.starting_with(text[pos])) {
      if (id != self && occurs_at(text, pos, rules[id].lhs.letters())) return id;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Ambiguity> enumerate_ambiguities(const RuleSet& rules) {
  std::vector<Ambiguity> out;
  for (std::size_t f = 0; f < rules.size(); ++f) {
    auto lhs_f = rules[f].lhs.letters();
    if (auto inner = factor_rule(lhs_f, f, rules)) {
      throw InclusionAmbiguity(f, *inner, "LHS of " + rules[*inner].label() +
                                              " occurs inside LHS of " + rules[f].label());
    }
    for (std::size_t overlap = 1; overlap < lhs_f.size(); ++overlap) {
      auto tail = lhs_f.subspan(lhs_f.size() - overlap);
      for (auto g : rules.starting_with(tail.front())) {
        auto lhs_g = rules[g].lhs.letters();
        if (lhs_g.size() <= overlap || !occurs_at(lhs_g, 0, tail)) continue;
        Ambiguity amb{f, g, overlap, rules[f].lhs,
                      rules[f].lhs.subword(0, lhs_f.size() - overlap),
                      rules[g].lhs.subword(overlap, lhs_g.size() - overlap)};
        amb.word *= amb.suffix;
        out.push_back(std::move(amb));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Ambiguity& a, const Ambiguity& b) {
    return std::tie(a.left_rule, a.right_rule, a.overlap) <
           std::tie(b.left_rule, b.right_rule, b.overlap);
  });
  return out;
}

std::pair<BandWord, BandWord> reducts(const Ambiguity& amb, const RuleSet& rules) {
  return {rules[amb.left_rule].rhs * amb.suffix, amb.prefix * rules[amb.right_rule].rhs};
}

Resolution resolve_ambiguity(const Ambiguity& amb, const RuleSet& rules,
                             const ReduceOptions& options) {
  Resolution res;
  auto [left, right] = reducts(amb, rules);
  try {
    res.left_normal_form = normal_form(left, rules, options);
    res.right_normal_form = normal_form(right, rules, options);
  } catch (const BudgetExceeded& e) {
    res.reason = std::string("budget: ") + e.what();
    return res;
  }
  res.trivial = *res.left_normal_form == *res.right_normal_form;
  if (!res.trivial) res.reason = "distinct normal forms";
  return res;
}

std::vector<Resolution> resolve_all_serial(const std::vector<Ambiguity>& ambiguities,
                                           const RuleSet& rules, const ReduceOptions& options) {
  std::vector<Resolution> out;
  out.reserve(ambiguities.size());
  for (const auto& amb : ambiguities) out.push_back(resolve_ambiguity(amb, rules, options));
  return out;
}

std::vector<Resolution> resolve_all(const std::vector<Ambiguity>& ambiguities,
                                    const RuleSet& rules, const ReduceOptions& options) {
  std::vector<Resolution> out(ambiguities.size());
  const auto count = static_cast<std::ptrdiff_t>(ambiguities.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t idx = 0; idx < count; ++idx) {
    auto k = static_cast<std::size_t>(idx);
    out[k] = resolve_ambiguity(ambiguities[k], rules, options);
  }
  return out;
}

namespace {

bool rule_is_sound(const RewriteRule& rule) {
  return oracle_equal(band_to_artin(rule.lhs), band_to_artin(rule.rhs));
}

}  // namespace

std::vector<std::size_t> unsound_rules_serial(const RuleSet& rules) {
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < rules.size(); ++id) {
    if (!rule_is_sound(rules[id])) out.push_back(id);
  }
  return out;
}

std::vector<std::size_t> unsound_rules(const RuleSet& rules) {
  std::vector<char> sound(rules.size(), 1);
  const auto count = static_cast<std::ptrdiff_t>(rules.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t idx = 0; idx < count; ++idx) {
    auto id = static_cast<std::size_t>(idx);
    sound[id] = rule_is_sound(rules[id]) ? 1 : 0;
  }
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < rules.size(); ++id) {
    if (!sound[id]) out.push_back(id);
  }
  return out;
}

std::vector<MinimalityViolation> check_minimality(const RuleSet& rules) {
  std::vector<MinimalityViolation> out;
  for (std::size_t id = 0; id < rules.size(); ++id) {
    if (auto by = factor_rule(rules[id].lhs.letters(), id, rules)) {
      out.push_back({id, MinimalityViolation::Kind::LhsReducible, *by});
    }
    if (auto by = factor_rule(rules[id].rhs.letters(), id, rules)) {
      out.push_back({id, MinimalityViolation::Kind::RhsReducible, *by});
    }
  }
  return out;
}

VerificationReport verify_rules(const RuleSet& rules, const VerifyOptions& options) {
  VerificationReport report(rules.strands());
  report.rule_count = rules.size();
  auto ambiguities = enumerate_ambiguities(rules);
  report.ambiguity_count = ambiguities.size();
  auto resolutions = options.parallel ? resolve_all(ambiguities, rules, options.reduce)
                                      : resolve_all_serial(ambiguities, rules, options.reduce);
  for (std::size_t k = 0; k < ambiguities.size(); ++k) {
    if (resolutions[k].trivial) continue;
    const auto& amb = ambiguities[k];
    report.failures.push_back({rules[amb.left_rule].label(), rules[amb.right_rule].label(),
                               amb.word, std::move(resolutions[k])});
  }
  report.minimality_violations = check_minimality(rules);
  for (const auto& v : report.minimality_violations) {
    report.minimality_labels.emplace_back(rules[v.rule].label(), rules[v.by_rule].label());
  }
  if (options.check_soundness) {
    auto bad = options.parallel ? unsound_rules(rules) : unsound_rules_serial(rules);
    report.unsound_rules.emplace();
    for (auto id : bad) report.unsound_rules->push_back(rules[id].label());
  }
  return report;
}

VerificationReport verify_basis(StrandCount n, const VerifyOptions& options) {
  return verify_rules(instantiate_rules(n), options);
}

}  // namespace braidgs
