#pragma once

#include <braidgs/word.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace braidgs {

/// Relation families of the Artin-Markov presentation. E1-E6 move sigma^{-1}
/// letters right past band letters, E7-E13 sort band letters of different
/// S_j, E14-E16 act on sigma^{-1} words, Triv cancels s s^{-1}.
enum class Family : std::uint8_t {
  E1, E2, E3, E4, E5, E6, E7, E8, E9, E10, E11, E12, E13, E14, E15, E16, Triv
};

std::string_view family_name(Family f);

/// One oriented semigroup relation lhs -> rhs.
struct RewriteRule {
  BandWord lhs;
  BandWord rhs;
  Family family = Family::Triv;
  // Index and sign parameters of the instance, e.g. {{'j',1},{'k',2},{'e',-1}}.
  std::vector<std::pair<char, int>> params;

  /// "E7(j=1,k=2,l=3,e=+1)"
  std::string label() const;
};

/// An immutable rule set for one strand count, indexed by first and last
/// LHS letter. Candidate lists are ordered longest LHS first.
class RuleSet {
 public:
  /// Throws Error on duplicate or empty LHS, StrandMismatch on a rule over
  /// another strand count.
  RuleSet(StrandCount n, std::vector<RewriteRule> rules);

  StrandCount strands() const { return strands_; }
  std::span<const RewriteRule> rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  const RewriteRule& operator[](std::size_t id) const { return rules_[id]; }
  std::size_t max_lhs_length() const { return max_lhs_; }

  std::span<const std::uint32_t> starting_with(BandLetter first) const;
  std::span<const std::uint32_t> ending_with(BandLetter last) const;

  /// Id of the rule whose LHS is exactly `lhs`.
  std::optional<std::size_t> find(std::span<const BandLetter> lhs) const;

 private:
  StrandCount strands_;
  std::vector<RewriteRule> rules_;
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> by_first_;
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> by_last_;
  std::size_t max_lhs_ = 0;
};

/// Cancels adjacent s_{i,j}^{e} s_{i,j}^{-e} pairs until none remain.
BandWord free_reduce(const BandWord& w);

/// {a, b} = b^{-1} a b, freely reduced. Throws Error if b has a sigma^{-1}
/// letter, which has no inverse in the band alphabet.
BandWord conjugate_expand(const BandWord& a, const BandWord& b);

/// How E4 stores its right-hand side. The conjugate by s_{i,i+1} contains
/// the E7 left-hand side s_{i,i+1}^{-1} s_{i+1,j}; Reduced stores the
/// interreduced form s_{i,j} s_{i+1,j}^d s_{i,j}^{-1} sigma_i^{-1} instead.
enum class RhsForm { Reduced, AsWritten };

/// Every instance of E1-E16 and the trivial relations for n strands.
RuleSet instantiate_rules(StrandCount n, RhsForm form = RhsForm::Reduced);

/// The family whose LHS begins with a b (for E15, whose LHS extends a b), or
/// nullopt when no LHS starts that way.
std::optional<Family> classify_pair(BandLetter a, BandLetter b);

}  // namespace braidgs
