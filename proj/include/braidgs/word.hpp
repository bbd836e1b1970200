#pragma once

#include <braidgs/errors.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidgs {

/// Number of strands n of the braid group B_n. Always at least 2.
class StrandCount {
 public:
  static constexpr int kMax = 255;

  explicit StrandCount(int n) : n_(n) {
    if (n < 2 || n > kMax) {
      throw IndexError("strand count must lie in [2, " + std::to_string(kMax) +
                       "], got " + std::to_string(n));
    }
  }

  int value() const { return n_; }

  friend bool operator==(StrandCount, StrandCount) = default;

 private:
  int n_;
};

/// One Artin-Burau generator: either sigma_k^{-1} or s_{i,j}^{+1/-1}.
///
/// The letter itself does not know the strand count; words validate their
/// letters against it.
class BandLetter {
 public:
  /// sigma_1^{-1}
  constexpr BandLetter() : BandLetter(kSigma, 1, 0, -1) {}

  static constexpr BandLetter sigma_inv(int k) { return {kSigma, k, 0, -1}; }
  static constexpr BandLetter band(int i, int j, int sign = +1) {
    return {kBand, i, j, sign < 0 ? -1 : +1};
  }

  constexpr bool is_sigma() const { return kind_ == kSigma; }
  constexpr bool is_band() const { return kind_ == kBand; }

  /// k of sigma_k^{-1}.
  constexpr int sigma_index() const { return i_; }
  constexpr int i() const { return i_; }
  constexpr int j() const { return j_; }
  constexpr int sign() const { return sign_; }

  /// Tower level: 0 for the sigma^{-1} alphabet, j-1 for letters of S_j.
  constexpr int level() const { return is_sigma() ? 0 : j_ - 1; }

  /// s_{i,j}^{e} -> s_{i,j}^{-e}. Sigma letters have no inverse in the
  /// alphabet; calling this on one is a logic error.
  constexpr BandLetter inverse() const { return {kind_, i_, j_, -sign_}; }

  constexpr bool is_inverse_of(BandLetter other) const {
    return is_band() && other.is_band() && i_ == other.i_ && j_ == other.j_ &&
           sign_ == -other.sign_;
  }

  constexpr std::uint32_t code() const {
    return (std::uint32_t{kind_} << 24) | (std::uint32_t(i_) << 16) |
           (std::uint32_t(j_) << 8) | (sign_ > 0 ? 1u : 0u);
  }

  bool valid_for(StrandCount n) const;

  friend constexpr bool operator==(BandLetter, BandLetter) = default;

 private:
  static constexpr std::uint8_t kSigma = 0;
  static constexpr std::uint8_t kBand = 1;

  constexpr BandLetter(std::uint8_t kind, int i, int j, int sign)
      : kind_(kind),
        i_(static_cast<std::uint8_t>(i)),
        j_(static_cast<std::uint8_t>(j)),
        sign_(static_cast<std::int8_t>(sign)) {}

  std::uint8_t kind_;
  std::uint8_t i_;
  std::uint8_t j_;
  std::int8_t sign_;
};

/// sigma_index^{sign} in the classical Artin alphabet.
struct ArtinLetter {
  int index = 1;
  int sign = +1;

  constexpr ArtinLetter inverse() const { return {index, -sign}; }
  bool valid_for(StrandCount n) const;

  friend constexpr bool operator==(ArtinLetter, ArtinLetter) = default;
};

/// A finite word over one alphabet for a fixed strand count. The empty word
/// is the identity. Every letter is checked against the strand count on
/// insertion.
template <class Letter>
class BasicWord {
 public:
  using value_type = Letter;
  using const_iterator = typename std::vector<Letter>::const_iterator;

  explicit BasicWord(StrandCount n) : strands_(n) {}

  BasicWord(StrandCount n, std::vector<Letter> letters)
      : strands_(n), letters_(std::move(letters)) {
    for (const auto& l : letters_) check(l);
  }

  BasicWord(StrandCount n, std::initializer_list<Letter> letters)
      : BasicWord(n, std::vector<Letter>(letters)) {}

  StrandCount strands() const { return strands_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t pos) const { return letters_[pos]; }
  const_iterator begin() const { return letters_.begin(); }
  const_iterator end() const { return letters_.end(); }

  void push_back(Letter l) {
    check(l);
    letters_.push_back(l);
  }

  BasicWord& operator*=(const BasicWord& rhs) {
    require_same_strands(rhs);
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
  }

  friend BasicWord operator*(BasicWord lhs, const BasicWord& rhs) {
    lhs *= rhs;
    return lhs;
  }

  /// Letters [pos, pos + count).
  BasicWord subword(std::size_t pos, std::size_t count) const {
    BasicWord out(strands_);
    out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                        letters_.begin() + static_cast<std::ptrdiff_t>(pos + count));
    return out;
  }

  void require_same_strands(const BasicWord& other) const {
    if (!(strands_ == other.strands_)) {
      throw StrandMismatch("words over " + std::to_string(strands_.value()) +
                           " and " + std::to_string(other.strands_.value()) +
                           " strands");
    }
  }

  friend bool operator==(const BasicWord&, const BasicWord&) = default;

 private:
  void check(const Letter& l) const {
    if (!l.valid_for(strands_)) {
      throw IndexError("letter index out of range for n=" +
                       std::to_string(strands_.value()));
    }
  }

  StrandCount strands_;
  std::vector<Letter> letters_;
};

using BandWord = BasicWord<BandLetter>;
using ArtinWord = BasicWord<ArtinLetter>;

enum class Alphabet { Artin, Band };

BandWord parse_band_word(std::string_view text, StrandCount n);
ArtinWord parse_artin_word(std::string_view text, StrandCount n);

std::string render_letter(BandLetter l);
std::string render_letter(ArtinLetter l);
std::string render_word(const BandWord& w);
std::string render_word(const ArtinWord& w);

/// Group inverse: reversed, every sign flipped.
ArtinWord invert_artin(const ArtinWord& w);

/// sigma_i^{-1} stays, sigma_i becomes s_{i,i+1} sigma_i^{-1}.
BandWord artin_to_band(const ArtinWord& w);

/// s_{i,j} expands to sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^{-1}
/// ... sigma_{j-1}^{-1}; s_{i,j}^{-1} to the formal inverse of that.
ArtinWord band_to_artin(const BandWord& w);

struct BandLetterHash {
  std::size_t operator()(BandLetter l) const noexcept {
    return std::hash<std::uint32_t>{}(l.code());
  }
};

}  // namespace braidgs
