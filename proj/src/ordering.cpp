#include <braidgs/ordering.hpp>

#include <span>

namespace braidgs {

namespace {

int letter_key(BandLetter l) {
  return l.is_sigma() ? l.sigma_index() : 2 * l.i() + (l.sign() > 0 ? 1 : 0);
}

using Letters = std::span<const BandLetter>;

std::strong_ordering deg_inlex(Letters u, Letters v) {
  if (auto c = u.size() <=> v.size(); c != 0) return c;
  for (std::size_t pos = u.size(); pos-- > 0;) {
    if (auto c = letter_key(u[pos]) <=> letter_key(v[pos]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::vector<std::size_t> top_positions(Letters w, int level) {
  std::vector<std::size_t> pos;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p].level() == level) pos.push_back(p);
  }
  return pos;
}

// Segment t of w, between top letter t-1 and top letter t.
Letters segment(Letters w, const std::vector<std::size_t>& tops, std::size_t t) {
  std::size_t begin = t == 0 ? 0 : tops[t - 1] + 1;
  std::size_t end = t == tops.size() ? w.size() : tops[t];
  return w.subspan(begin, end - begin);
}

std::strong_ordering compare_at(Letters u, Letters v, int level, int innermost) {
  if (level >= innermost) return deg_inlex(u, v);
  if (u.empty() || v.empty()) {
    if (u.empty() && v.empty()) return std::strong_ordering::equal;
    return u.empty() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  auto tu = top_positions(u, level);
  auto tv = top_positions(v, level);
  if (auto c = tu.size() <=> tv.size(); c != 0) return c;
  for (std::size_t t = tu.size() + 1; t-- > 0;) {
    auto c = compare_at(segment(u, tu, t), segment(v, tv, t), level + 1, innermost);
    if (c != 0) return c;
    if (t > 0) {
      if (auto z = compare_letters(u[tu[t - 1]], v[tv[t - 1]]); z != 0) return z;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare_letters(BandLetter a, BandLetter b) {
  // lower tower level = later in the alphabet chain
  if (a.level() != b.level()) return b.level() <=> a.level();
  return letter_key(a) <=> letter_key(b);
}

std::strong_ordering compare(const BandWord& u, const BandWord& v) {
  u.require_same_strands(v);
  return compare_at(u.letters(), v.letters(), 0, u.strands().value() - 1);
}

BandWord InverseWeight::reconstruct() const {
  BandWord out = segments.front();
  for (std::size_t t = 0; t < tops.size(); ++t) {
    out.push_back(tops[t]);
    out *= segments[t + 1];
  }
  return out;
}

InverseWeight inverse_weight(const BandWord& w, int level) {
  InverseWeight iw;
  iw.level = level;
  iw.segments.emplace_back(w.strands());
  for (auto l : w) {
    if (l.level() == level) {
      iw.tops.push_back(l);
      iw.segments.emplace_back(w.strands());
    } else {
      iw.segments.back().push_back(l);
    }
  }
  return iw;
}

}  // namespace braidgs
