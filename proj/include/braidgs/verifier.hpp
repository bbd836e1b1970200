#pragma once

#include <braidgs/rewriter.hpp>
#include <braidgs/rules.hpp>
#include <braidgs/word.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace braidgs {

/// An intersection ambiguity w = lhs(left) b = a lhs(right), where the two
/// left-hand sides share `overlap` letters (0 < overlap < both lengths).
struct Ambiguity {
  std::size_t left_rule = 0;
  std::size_t right_rule = 0;
  std::size_t overlap = 0;
  BandWord word;
  BandWord prefix;  // a
  BandWord suffix;  // b
};

/// One LHS occurs inside another. The instantiated basis has none.
class InclusionAmbiguity : public Error {
 public:
  InclusionAmbiguity(std::size_t outer, std::size_t inner, const std::string& what)
      : Error(what), outer_(outer), inner_(inner) {}
  std::size_t outer() const { return outer_; }
  std::size_t inner() const { return inner_; }

 private:
  std::size_t outer_;
  std::size_t inner_;
};

/// Every intersection ambiguity over ordered rule pairs (self-overlaps
/// included), sorted by (left_rule, right_rule, overlap). Throws
/// InclusionAmbiguity if some LHS is a factor of another.
std::vector<Ambiguity> enumerate_ambiguities(const RuleSet& rules);

/// Both one-step reducts of an ambiguity and their normal forms. The
/// composition is trivial iff the normal forms coincide.
struct Resolution {
  bool trivial = false;
  std::optional<BandWord> left_normal_form;   // of rhs(left) b
  std::optional<BandWord> right_normal_form;  // of a rhs(right)
  std::string reason;                         // set when not trivial
};

/// rhs(left) b and a rhs(right).
std::pair<BandWord, BandWord> reducts(const Ambiguity& amb, const RuleSet& rules);

Resolution resolve_ambiguity(const Ambiguity& amb, const RuleSet& rules,
                             const ReduceOptions& options = {});

/// Resolves every ambiguity; results are in input order. The parallel kernel
/// uses OpenMP when available; the serial one is the reference.
std::vector<Resolution> resolve_all(const std::vector<Ambiguity>& ambiguities,
                                    const RuleSet& rules, const ReduceOptions& options = {});
std::vector<Resolution> resolve_all_serial(const std::vector<Ambiguity>& ambiguities,
                                           const RuleSet& rules,
                                           const ReduceOptions& options = {});

/// Ids of rules whose two sides act differently on the free group.
std::vector<std::size_t> unsound_rules(const RuleSet& rules);
std::vector<std::size_t> unsound_rules_serial(const RuleSet& rules);

struct MinimalityViolation {
  enum class Kind { LhsReducible, RhsReducible };
  std::size_t rule = 0;
  Kind kind = Kind::LhsReducible;
  std::size_t by_rule = 0;  // a rule whose LHS occurs in the offending side
};

/// For each rule: its LHS holds no other rule's LHS, and its RHS is
/// irreducible with respect to all other rules.
std::vector<MinimalityViolation> check_minimality(const RuleSet& rules);

struct CompositionFailure {
  std::string left_label;
  std::string right_label;
  BandWord word;
  Resolution resolution;
};

struct VerificationReport {
  explicit VerificationReport(StrandCount n) : strands(n) {}

  StrandCount strands;
  std::size_t rule_count = 0;
  std::size_t ambiguity_count = 0;
  std::vector<CompositionFailure> failures;
  std::vector<MinimalityViolation> minimality_violations;
  // (rule, by_rule) labels, parallel to minimality_violations
  std::vector<std::pair<std::string, std::string>> minimality_labels;
  std::optional<std::vector<std::string>> unsound_rules;  // only when requested

  bool ok() const {
    return failures.empty() && minimality_violations.empty() &&
           (!unsound_rules || unsound_rules->empty());
  }
};

struct VerifyOptions {
  ReduceOptions reduce;
  bool parallel = true;
  bool check_soundness = false;
};

/// Resolves every composition of `rules` and checks minimality.
VerificationReport verify_rules(const RuleSet& rules, const VerifyOptions& options = {});

/// verify_rules on the instantiated Artin-Markov relations for n strands.
VerificationReport verify_basis(StrandCount n, const VerifyOptions& options = {});

}  // namespace braidgs
