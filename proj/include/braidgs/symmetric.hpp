#pragma once

#include <braidgs/rewriter.hpp>
#include <braidgs/rules.hpp>
#include <braidgs/word.hpp>

#include <vector>

namespace braidgs {

/// A bijection of {1, ..., n}; images()[x-1] is the image of x.
class Permutation {
 public:
  static Permutation identity(StrandCount n);
  /// The transposition (k, k+1).
  static Permutation adjacent_swap(StrandCount n, int k);

  /// Throws IndexError unless `images` is a bijection of {1..size}.
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// x -> second(first(x)): apply `first`, then `second`.
Permutation compose(const Permutation& first, const Permutation& second);

/// Image in Sigma_n. sigma_k^{+1/-1} acts as the transposition (k, k+1),
/// band letters trivially; letters act left to right.
Permutation permutation_of(const ArtinWord& w);
Permutation permutation_of(const BandWord& w);

/// S_{i_n,n} S_{i_{n-1},n-1} ... S_{i_2,2} with S_{i,j} = s_i s_{i+1} ... s_{j-1}
/// and S_{j,j} = 1.
class SymNormalForm {
 public:
  explicit SymNormalForm(StrandCount n);

  StrandCount strands() const { return strands_; }
  int index(int j) const { return indices_[static_cast<std::size_t>(j)]; }
  void set_index(int j, int i);

  /// (i_n, ..., i_2)
  std::vector<int> tuple() const;

  /// Product of the segments as a permutation.
  Permutation evaluate() const;

  friend bool operator==(const SymNormalForm&, const SymNormalForm&) = default;

 private:
  StrandCount strands_;
  std::vector<int> indices_;  // indexed by j; entries 0 and 1 unused
};

SymNormalForm sym_normal_form(const Permutation& p);

/// Purity through the permutation image alone.
bool is_pure(const BandWord& w);
bool is_pure(const ArtinWord& w);

/// Purity computed two ways: through the permutation image and through the
/// sigma tail of the normal form. Throws Error if they disagree.
bool is_pure_checked(const BandWord& w, const RuleSet& rules,
                     const ReduceOptions& options = {});

}  // namespace braidgs
