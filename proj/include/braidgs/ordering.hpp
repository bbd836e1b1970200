#pragma once

#include <braidgs/word.hpp>

#include <compare>
#include <vector>

namespace braidgs {

/// Inverse tower order on band words.
///
/// The alphabet is layered S_n < S_{n-1} < ... < S_2 < sigma^{-1}. At tower
/// level 0 the top letters Z are the sigma^{-1} letters; at level L >= 1 they
/// are the letters of S_{L+1}. A word splits as u_0 z_1 u_1 ... z_k u_k and is
/// ranked by the tuple (k, u_k, z_k, u_{k-1}, ..., z_1, u_0), segments
/// recursing one level deeper. Words over S_n alone are ranked deg-inlex:
/// length first, then letters from the right.
///
/// Inside S_j: s_{1,j}^{-1} < s_{1,j} < s_{2,j}^{-1} < ... < s_{j-1,j};
/// inside sigma^{-1}: sigma_1^{-1} < ... < sigma_{n-1}^{-1}.
std::strong_ordering compare(const BandWord& u, const BandWord& v);

/// Order between two letters of the same tower level.
std::strong_ordering compare_letters(BandLetter a, BandLetter b);

/// u = u_0 z_1 u_1 ... z_k u_k relative to one tower level.
struct InverseWeight {
  int level = 0;
  std::vector<BandLetter> tops;   // z_1 ... z_k
  std::vector<BandWord> segments; // u_0 ... u_k

  std::size_t k() const { return tops.size(); }
  BandWord reconstruct() const;
};

InverseWeight inverse_weight(const BandWord& w, int level);

}  // namespace braidgs
