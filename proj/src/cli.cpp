#include <braidgs/cli.hpp>

#include <braidgs/free_group.hpp>
#include <braidgs/json_io.hpp>
#include <braidgs/ordering.hpp>
#include <braidgs/rewriter.hpp>
#include <braidgs/rules.hpp>
#include <braidgs/symmetric.hpp>
#include <braidgs/verifier.hpp>

#include <CLI11.hpp>

#include <map>
#include <ostream>

namespace braidgs::cli {

namespace {

struct Config {
  int strands = 0;
  std::string alphabet;
  bool json = false;
  std::size_t budget = kDefaultStepBudget;
  bool decompose = false;
  bool serial = false;
  bool oracle = false;
  std::vector<std::string> words;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class Session {
 public:
  Session(const Config& config, std::ostream& out)
      : config_(config), n_(config.strands), out_(out) {}

  int nf();
  int eq();
  int oracle_eq();
  int is_pure_cmd();
  int perm();
  int convert();
  int cmp();
  int rules_cmd();
  int verify();

 private:
  bool artin_input() const { return config_.alphabet == "artin"; }

  void expect_words(std::size_t count, const char* command) const {
    if (config_.words.size() != count) {
      throw UsageError(std::string(command) + " takes " + std::to_string(count) + " word(s)");
    }
  }

  BandWord band_input(const std::string& text) const {
    return artin_input() ? artin_to_band(parse_artin_word(text, n_)) : parse_band_word(text, n_);
  }

  ArtinWord artin_input_word(const std::string& text) const {
    return artin_input() ? parse_artin_word(text, n_) : band_to_artin(parse_band_word(text, n_));
  }

  const RuleSet& rules() {
    if (!rules_) rules_.emplace(instantiate_rules(n_));
    return *rules_;
  }

  ReduceOptions reduce_options() const { return {config_.budget, Strategy::SuffixFirst}; }

  // Normal forms are memoized per input text for the lifetime of the session.
  const Reduction& reduce_cached(const std::string& text) {
    auto it = cache_.find(text);
    if (it == cache_.end()) {
      it = cache_.emplace(text, reduce(band_input(text), rules(), reduce_options())).first;
    }
    return it->second;
  }

  Json header() const { return Json{{"version", kJsonSchemaVersion}, {"strands", n_.value()}}; }

  void emit(const Json& j) { out_ << j.dump() << '\n'; }

  int yes_no(bool answer, const char* yes, const char* no, Json j) {
    if (config_.json) {
      emit(j);
    } else {
      out_ << (answer ? yes : no) << '\n';
    }
    return answer ? kYes : kNo;
  }

  const Config& config_;
  StrandCount n_;
  std::ostream& out_;
  std::optional<RuleSet> rules_;
  std::map<std::string, Reduction> cache_;
};

int Session::nf() {
  if (config_.words.empty()) throw UsageError("nf takes at least one word");
  for (const auto& text : config_.words) {
    const auto& red = reduce_cached(text);
    if (config_.decompose) {
      Json j = decomposition_json(decompose_normal_form(red.word));
      j["normal_form"] = render_word(red.word);
      emit(j);
    } else if (config_.json) {
      Json j = header();
      j["input"] = text;
      j["normal_form"] = render_word(red.word);
      j["steps"] = red.steps;
      emit(j);
    } else {
      out_ << render_word(red.word) << '\n';
    }
  }
  return kYes;
}

int Session::eq() {
  expect_words(2, "eq");
  const auto& a = reduce_cached(config_.words[0]).word;
  const auto& b = reduce_cached(config_.words[1]).word;
  Json j = header();
  j["equal"] = a == b;
  j["normal_forms"] = {render_word(a), render_word(b)};
  return yes_no(a == b, "equal", "distinct", j);
}

int Session::oracle_eq() {
  expect_words(2, "oracle-eq");
  bool equal = oracle_equal(artin_input_word(config_.words[0]), artin_input_word(config_.words[1]));
  Json j = header();
  j["equal"] = equal;
  return yes_no(equal, "equal", "distinct", j);
}

int Session::is_pure_cmd() {
  expect_words(1, "is-pure");
  bool pure = is_pure(band_input(config_.words[0]));
  Json j = header();
  j["pure"] = pure;
  return yes_no(pure, "pure", "not pure", j);
}

int Session::perm() {
  expect_words(1, "perm");
  auto p = permutation_of(band_input(config_.words[0]));
  auto snf = sym_normal_form(p);
  if (config_.json) {
    Json j = header();
    j["images"] = p.images();
    Json tuple = Json::object();
    for (int jj = n_.value(); jj >= 2; --jj) tuple[std::to_string(jj)] = snf.index(jj);
    j["tuple"] = tuple;
    emit(j);
    return kYes;
  }
  out_ << "images:";
  for (int x : p.images()) out_ << ' ' << x;
  out_ << "\ntuple:";
  for (int i : snf.tuple()) out_ << ' ' << i;
  out_ << '\n';
  return kYes;
}

int Session::convert() {
  if (config_.words.empty()) throw UsageError("convert takes at least one word");
  for (const auto& text : config_.words) {
    std::string converted = artin_input() ? render_word(artin_to_band(parse_artin_word(text, n_)))
                                          : render_word(band_to_artin(parse_band_word(text, n_)));
    if (config_.json) {
      Json j = header();
      j["from"] = artin_input() ? "artin" : "band";
      j["to"] = artin_input() ? "band" : "artin";
      j["word"] = converted;
      emit(j);
    } else {
      out_ << converted << '\n';
    }
  }
  return kYes;
}

int Session::cmp() {
  expect_words(2, "cmp");
  auto c = compare(band_input(config_.words[0]), band_input(config_.words[1]));
  const char* answer = c < 0 ? "LT" : (c > 0 ? "GT" : "EQ");
  if (config_.json) {
    Json j = header();
    j["order"] = answer;
    emit(j);
  } else {
    out_ << answer << '\n';
  }
  return kYes;
}

int Session::rules_cmd() {
  if (config_.json) {
    emit(rules_json(rules()));
    return kYes;
  }
  for (const auto& r : rules().rules()) {
    out_ << render_word(r.lhs) << " ->";
    if (!r.rhs.empty()) out_ << ' ' << render_word(r.rhs);
    out_ << " # " << r.label() << '\n';
  }
  return kYes;
}

int Session::verify() {
  VerifyOptions options;
  options.reduce = reduce_options();
  options.parallel = !config_.serial;
  options.check_soundness = config_.oracle;
  auto report = verify_rules(rules(), options);
  if (config_.json) {
    emit(report_json(report));
    return report.ok() ? kYes : kNo;
  }
  out_ << "strands: " << n_.value() << '\n'
       << "rules: " << report.rule_count << '\n'
       << "ambiguities: " << report.ambiguity_count << '\n'
       << "failures: " << report.failures.size() << '\n';
  for (const auto& f : report.failures) {
    out_ << "  " << f.left_label << " / " << f.right_label << " at " << render_word(f.word)
         << ": " << f.resolution.reason << '\n';
  }
  out_ << "minimality violations: " << report.minimality_violations.size() << '\n';
  for (std::size_t k = 0; k < report.minimality_violations.size(); ++k) {
    const auto& [rule, by] = report.minimality_labels[k];
    bool lhs = report.minimality_violations[k].kind == MinimalityViolation::Kind::LhsReducible;
    out_ << "  " << rule << (lhs ? " LHS" : " RHS") << " reducible by " << by << '\n';
  }
  if (report.unsound_rules) {
    out_ << "unsound rules: " << report.unsound_rules->size() << '\n';
    for (const auto& label : *report.unsound_rules) out_ << "  " << label << '\n';
  }
  out_ << "result: " << (report.ok() ? "PASS" : "FAIL") << '\n';
  return report.ok() ? kYes : kNo;
}

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& help,
                      Config& config, bool takes_words) {
  auto* sub = app.add_subcommand(name, help);
  sub->add_option("-n", config.strands, "number of strands")->required()->check(CLI::Range(2, StrandCount::kMax));
  sub->add_flag("--json", config.json, "machine-readable output");
  sub->add_option("--budget", config.budget, "rewrite step budget per reduction")
      ->check(CLI::PositiveNumber);
  if (takes_words) {
    sub->add_option("--in", config.alphabet, "input alphabet")
        ->check(CLI::IsMember({"artin", "band"}));
    sub->add_option("words", config.words, "words in the token grammar");
  }
  return sub;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config config;
  CLI::App app{"Braid group normal forms in Artin-Burau generators", "braid-gsnf"};
  app.require_subcommand(1);

  auto* nf = add_command(app, "nf", "normal form of each word", config, true);
  nf->add_flag("--decompose", config.decompose, "print the f_n..f_2 / tail split as JSON");
  auto* eq = add_command(app, "eq", "decide equality of two words", config, true);
  auto* is_pure = add_command(app, "is-pure", "is the word a pure braid", config, true);
  auto* perm = add_command(app, "perm", "permutation image and its segment tuple", config, true);
  auto* convert = add_command(app, "convert", "convert between Artin and band alphabets", config, true);
  auto* cmp = add_command(app, "cmp", "inverse tower order of two band words", config, true);
  auto* rules = add_command(app, "rules", "dump the instantiated rule set", config, false);
  auto* verify = add_command(app, "verify", "check every composition and minimality", config, false);
  verify->add_flag("--serial", config.serial, "use the serial reference kernel");
  verify->add_flag("--oracle", config.oracle, "also check every rule against the free-group action");
  auto* oracle_eq = add_command(app, "oracle-eq", "equality through the free-group action", config, true);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  if (config.alphabet.empty()) config.alphabet = oracle_eq->parsed() ? "artin" : "band";

  try {
    Session session(config, out);
    if (nf->parsed()) return session.nf();
    if (eq->parsed()) return session.eq();
    if (is_pure->parsed()) return session.is_pure_cmd();
    if (perm->parsed()) return session.perm();
    if (convert->parsed()) return session.convert();
    if (cmp->parsed()) return session.cmp();
    if (rules->parsed()) return session.rules_cmd();
    if (verify->parsed()) return session.verify();
    if (oracle_eq->parsed()) return session.oracle_eq();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const IndexError& e) {
    err << "index error: " << e.what() << '\n';
    return kBadIndex;
  } catch (const StrandMismatch& e) {
    err << "strand mismatch: " << e.what() << '\n';
    return kBadIndex;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace braidgs::cli
