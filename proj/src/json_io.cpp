#include <braidgs/json_io.hpp>

namespace braidgs {

namespace {

Json tokens(const BandWord& w) {
  Json out = Json::array();
  for (auto l : w) out.push_back(render_letter(l));
  return out;
}

}  // namespace

Json decomposition_json(const NormalFormDecomposition& d) {
  Json pure = Json::object();
  Json tail = Json::object();
  for (int j = d.strands.value(); j >= 2; --j) {
    pure[std::to_string(j)] = tokens(d.pure_part(j));
    tail[std::to_string(j)] = d.tail_index(j);
  }
  return Json{{"version", kJsonSchemaVersion},
              {"strands", d.strands.value()},
              {"pure_parts", std::move(pure)},
              {"tail", std::move(tail)}};
}

Json rules_json(const RuleSet& rules) {
  Json list = Json::array();
  for (const auto& r : rules.rules()) {
    list.push_back(Json{{"lhs", render_word(r.lhs)},
                        {"rhs", render_word(r.rhs)},
                        {"family", family_name(r.family)},
                        {"label", r.label()}});
  }
  return Json{{"version", kJsonSchemaVersion},
              {"strands", rules.strands().value()},
              {"rule_count", rules.size()},
              {"rules", std::move(list)}};
}

Json report_json(const VerificationReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    Json item{{"left", f.left_label},
              {"right", f.right_label},
              {"word", render_word(f.word)},
              {"reason", f.resolution.reason}};
    if (f.resolution.left_normal_form) {
      item["left_normal_form"] = render_word(*f.resolution.left_normal_form);
    }
    if (f.resolution.right_normal_form) {
      item["right_normal_form"] = render_word(*f.resolution.right_normal_form);
    }
    failures.push_back(std::move(item));
  }
  Json minimality = Json::array();
  for (std::size_t k = 0; k < report.minimality_violations.size(); ++k) {
    const auto& v = report.minimality_violations[k];
    minimality.push_back(
        Json{{"rule", report.minimality_labels[k].first},
             {"kind", v.kind == MinimalityViolation::Kind::LhsReducible ? "lhs" : "rhs"},
             {"by_rule", report.minimality_labels[k].second}});
  }
  Json out{{"version", kJsonSchemaVersion},
           {"strands", report.strands.value()},
           {"rule_count", report.rule_count},
           {"ambiguity_count", report.ambiguity_count},
           {"failures", std::move(failures)},
           {"minimality_violations", std::move(minimality)}};
  if (report.unsound_rules) out["unsound_rules"] = *report.unsound_rules;
  out["ok"] = report.ok();
  return out;
}

}  // namespace braidgs
