#pragma once

#include <braidgs/word.hpp>

#include <span>
#include <string>
#include <vector>

namespace braidgs {

/// Element of the free group F_n as a freely reduced word. A letter is a
/// nonzero integer: +g for x_g, -g for x_g^{-1}.
class FreeWord {
 public:
  FreeWord() = default;
  /// Freely reduces the given letters.
  explicit FreeWord(std::span<const int> letters);
  FreeWord(std::initializer_list<int> letters);

  static FreeWord generator(int g) { return FreeWord({g}); }

  std::span<const int> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Appends with cancellation at the seam.
  FreeWord& operator*=(const FreeWord& rhs);
  friend FreeWord operator*(FreeWord lhs, const FreeWord& rhs) { return lhs *= rhs; }

  FreeWord inverse() const;

  /// "x1 X2" style, X for inverse; "1" for the identity.
  std::string to_string() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<int> letters_;
};

/// Shortest representative of the free-group element spelled by `letters`.
FreeWord free_reduce(std::span<const int> letters);

/// An endomorphism of F_n given by the images of x_1 ... x_n.
class FreeGroupEndomorphism {
 public:
  static FreeGroupEndomorphism identity(StrandCount n);

  explicit FreeGroupEndomorphism(std::vector<FreeWord> images) : images_(std::move(images)) {}

  int rank() const { return static_cast<int>(images_.size()); }
  const FreeWord& image(int g) const { return images_[static_cast<std::size_t>(g - 1)]; }
  std::span<const FreeWord> images() const { return images_; }

  /// Image of an arbitrary free word.
  FreeWord apply(const FreeWord& w) const;

  /// (this o inner)(x) = this(inner(x)).
  FreeGroupEndomorphism after(const FreeGroupEndomorphism& inner) const;

  friend bool operator==(const FreeGroupEndomorphism&, const FreeGroupEndomorphism&) = default;

 private:
  std::vector<FreeWord> images_;
};

/// Artin action of one generator:
///   sigma_i:      x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i
///   sigma_i^{-1}: x_i -> x_{i+1},              x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
FreeGroupEndomorphism generator_automorphism(ArtinLetter l, StrandCount n);

/// phi(w) = phi(l_1) o phi(l_2) o ... o phi(l_m), images freely reduced.
FreeGroupEndomorphism word_automorphism(const ArtinWord& w);

/// Equality in B_n decided through the faithful action on F_n.
bool oracle_equal(const ArtinWord& u, const ArtinWord& v);

}  // namespace braidgs
