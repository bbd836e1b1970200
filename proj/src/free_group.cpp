#include <braidgs/free_group.hpp>

#include <cstdlib>

namespace braidgs {

FreeWord::FreeWord(std::span<const int> letters) {
  letters_.reserve(letters.size());
  for (int x : letters) {
    if (!letters_.empty() && letters_.back() == -x) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }
}

FreeWord::FreeWord(std::initializer_list<int> letters)
    : FreeWord(std::span<const int>(letters.begin(), letters.size())) {}

FreeWord& FreeWord::operator*=(const FreeWord& rhs) {
  std::size_t skip = 0;
  while (skip < rhs.letters_.size() && !letters_.empty() &&
         letters_.back() == -rhs.letters_[skip]) {
    letters_.pop_back();
    ++skip;
  }
  letters_.insert(letters_.end(), rhs.letters_.begin() + static_cast<std::ptrdiff_t>(skip),
                  rhs.letters_.end());
  return *this;
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
  return out;
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (int x : letters_) {
    if (!out.empty()) out += ' ';
    out += (x > 0 ? "x" : "X") + std::to_string(std::abs(x));
  }
  return out;
}

FreeWord free_reduce(std::span<const int> letters) { return FreeWord(letters); }

FreeGroupEndomorphism FreeGroupEndomorphism::identity(StrandCount n) {
  std::vector<FreeWord> images;
  for (int g = 1; g <= n.value(); ++g) images.push_back(FreeWord::generator(g));
  return FreeGroupEndomorphism(std::move(images));
}

FreeWord FreeGroupEndomorphism::apply(const FreeWord& w) const {
  FreeWord out;
  for (int x : w.letters()) {
    const FreeWord& img = image(std::abs(x));
    out *= x > 0 ? img : img.inverse();
  }
  return out;
}

FreeGroupEndomorphism FreeGroupEndomorphism::after(const FreeGroupEndomorphism& inner) const {
  std::vector<FreeWord> images;
  images.reserve(inner.images_.size());
  for (const auto& img : inner.images_) images.push_back(apply(img));
  return FreeGroupEndomorphism(std::move(images));
}

FreeGroupEndomorphism generator_automorphism(ArtinLetter l, StrandCount n) {
  auto phi = FreeGroupEndomorphism::identity(n);
  std::vector<FreeWord> images(phi.images().begin(), phi.images().end());
  int i = l.index;
  auto& xi = images[static_cast<std::size_t>(i - 1)];
  auto& xi1 = images[static_cast<std::size_t>(i)];
  if (l.sign > 0) {
    xi = FreeWord({i, i + 1, -i});
    xi1 = FreeWord::generator(i);
  } else {
    xi = FreeWord::generator(i + 1);
    xi1 = FreeWord({-(i + 1), i, i + 1});
  }
  return FreeGroupEndomorphism(std::move(images));
}

FreeGroupEndomorphism word_automorphism(const ArtinWord& w) {
  // Appending a letter composes on the right: images(x) <- images(gen(x)),
  // so only the two moved generators change.
  std::vector<FreeWord> images;
  for (int g = 1; g <= w.strands().value(); ++g) images.push_back(FreeWord::generator(g));
  for (auto l : w) {
    auto& xi = images[static_cast<std::size_t>(l.index - 1)];
    auto& xi1 = images[static_cast<std::size_t>(l.index)];
    FreeWord a = xi;
    FreeWord b = xi1;
    if (l.sign > 0) {
      xi = a * b * a.inverse();
      xi1 = std::move(a);
    } else {
      xi = b;
      xi1 = b.inverse() * a * b;
    }
  }
  return FreeGroupEndomorphism(std::move(images));
}

bool oracle_equal(const ArtinWord& u, const ArtinWord& v) {
  u.require_same_strands(v);
  return word_automorphism(u) == word_automorphism(v);
}

}  // namespace braidgs
