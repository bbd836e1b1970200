#pragma once

#include <braidgs/rules.hpp>
#include <braidgs/word.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace braidgs {

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;

/// Order in which redexes are contracted. All strategies reach the same
/// normal form for a confluent rule set; they differ only in step count.
enum class Strategy {
  // Consume the word right to left, keeping an irreducible suffix. Each
  // incoming letter only has to be matched at the front of that suffix.
  SuffixFirst,
  // Mirror image: consume left to right, keeping an irreducible prefix.
  PrefixFirst,
  // Rescan from the left after every step, contracting the leftmost redex
  // with the longest LHS. Quadratic; meant for tests.
  LeftmostScan,
};

struct ReduceOptions {
  std::size_t step_budget = kDefaultStepBudget;
  Strategy strategy = Strategy::SuffixFirst;
};

/// Thrown when a reduction needs more steps than its budget allows. Carries
/// the word reached so far.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(BandWord partial, std::size_t steps);

  const BandWord& partial() const { return partial_; }
  std::size_t steps() const { return steps_; }

 private:
  BandWord partial_;
  std::size_t steps_;
};

struct Reduction {
  BandWord word;
  std::size_t steps = 0;
};

Reduction reduce(const BandWord& w, const RuleSet& rules, const ReduceOptions& options = {});

/// The unique irreducible word equal to w in B_n.
BandWord normal_form(const BandWord& w, const RuleSet& rules,
                     const ReduceOptions& options = {});

/// An occurrence of rule `rule`'s LHS starting at `position`.
struct Redex {
  std::size_t position = 0;
  std::size_t rule = 0;
};

/// Leftmost redex, longest LHS among those starting there.
std::optional<Redex> find_leftmost_redex(const BandWord& w, const RuleSet& rules);

/// w with the redex's LHS replaced by its RHS.
BandWord contract(const BandWord& w, const Redex& redex, const RuleSet& rules);

bool is_irreducible(const BandWord& w, const RuleSet& rules);

bool equal_words(const BandWord& u, const BandWord& v, const RuleSet& rules,
                 const ReduceOptions& options = {});
bool equal_words(const ArtinWord& u, const ArtinWord& v, const RuleSet& rules,
                 const ReduceOptions& options = {});

/// f_n f_{n-1} ... f_2 sigma_{i_n,n} ... sigma_{i_2,2}, where f_j is a freely
/// reduced word over S_j and sigma_{i,j} = sigma_i^{-1} ... sigma_{j-1}^{-1}
/// (empty when i = j).
struct NormalFormDecomposition {
  explicit NormalFormDecomposition(StrandCount n);

  StrandCount strands;
  std::vector<BandWord> pure_parts;  // indexed by j; entries 0 and 1 unused
  std::vector<int> tail;             // tail[j] = i_j

  const BandWord& pure_part(int j) const { return pure_parts[static_cast<std::size_t>(j)]; }
  int tail_index(int j) const { return tail[static_cast<std::size_t>(j)]; }

  /// Concatenation f_n ... f_2 followed by the sigma runs.
  BandWord reconstruct() const;
};

/// Throws ShapeError when nf does not have the f_n ... f_2 tail shape.
NormalFormDecomposition decompose_normal_form(const BandWord& nf);

}  // namespace braidgs
