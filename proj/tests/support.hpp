#pragma once

#include <braidgs/free_group.hpp>
#include <braidgs/rewriter.hpp>
#include <braidgs/rules.hpp>
#include <braidgs/word.hpp>

#include <random>
#include <string_view>
#include <vector>

namespace bt {

using namespace braidgs;

inline BandLetter S(int k) { return BandLetter::sigma_inv(k); }
inline BandLetter b(int i, int j, int e = +1) { return BandLetter::band(i, j, e); }

inline BandWord band(int n, std::string_view text) { return parse_band_word(text, StrandCount(n)); }
inline ArtinWord artin(int n, std::string_view text) { return parse_artin_word(text, StrandCount(n)); }

inline std::vector<BandLetter> band_alphabet(int n) {
  std::vector<BandLetter> out;
  for (int k = 1; k < n; ++k) out.push_back(S(k));
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i) {
      out.push_back(b(i, j, -1));
      out.push_back(b(i, j, +1));
    }
  }
  return out;
}

inline ArtinWord random_artin(std::mt19937_64& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  ArtinWord w(StrandCount{n});
  for (int m = len(rng); m > 0; --m) w.push_back({idx(rng), sgn(rng) ? +1 : -1});
  return w;
}

inline BandWord random_band(std::mt19937_64& rng, int n, int max_len) {
  auto alphabet = band_alphabet(n);
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  BandWord w(StrandCount{n});
  for (int m = len(rng); m > 0; --m) w.push_back(alphabet[pick(rng)]);
  return w;
}

inline bool oracle_equal_band(const BandWord& u, const BandWord& v) {
  return oracle_equal(band_to_artin(u), band_to_artin(v));
}

}  // namespace bt
