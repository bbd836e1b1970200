#include <braidgs/symmetric.hpp>

#include <numeric>
#include <utility>

namespace braidgs {

Permutation Permutation::identity(StrandCount n) {
  std::vector<int> images(static_cast<std::size_t>(n.value()));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::adjacent_swap(StrandCount n, int k) {
  if (k < 1 || k > n.value() - 1) throw IndexError("transposition index out of range");
  auto p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(k - 1)], p.images_[static_cast<std::size_t>(k)]);
  return p;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size() + 1, false);
  for (int x : images_) {
    if (x < 1 || x > degree() || hit[static_cast<std::size_t>(x)]) {
      throw IndexError("not a permutation of 1.." + std::to_string(degree()));
    }
    hit[static_cast<std::size_t>(x)] = true;
  }
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= degree(); ++x) {
    if ((*this)(x) != x) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 1; x <= degree(); ++x) inv[static_cast<std::size_t>((*this)(x) - 1)] = x;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& first, const Permutation& second) {
  std::vector<int> out(first.images().size());
  for (int x = 1; x <= first.degree(); ++x) out[static_cast<std::size_t>(x - 1)] = second(first(x));
  return Permutation(std::move(out));
}

namespace {

// Applying the transposition (k, k+1) after `images` relabels the values k, k+1.
void swap_after(std::vector<int>& images, int k) {
  for (int& v : images) {
    if (v == k) v = k + 1;
    else if (v == k + 1) v = k;
  }
}

}  // namespace

Permutation permutation_of(const ArtinWord& w) {
  std::vector<int> images = Permutation::identity(w.strands()).images();
  for (auto l : w) swap_after(images, l.index);
  return Permutation(std::move(images));
}

Permutation permutation_of(const BandWord& w) {
  std::vector<int> images = Permutation::identity(w.strands()).images();
  for (auto l : w) {
    if (l.is_sigma()) swap_after(images, l.sigma_index());
  }
  return Permutation(std::move(images));
}

SymNormalForm::SymNormalForm(StrandCount n)
    : strands_(n), indices_(static_cast<std::size_t>(n.value()) + 1) {
  std::iota(indices_.begin(), indices_.end(), 0);
}

void SymNormalForm::set_index(int j, int i) {
  if (j < 2 || j > strands_.value() || i < 1 || i > j) {
    throw IndexError("segment index i_" + std::to_string(j) + "=" + std::to_string(i) +
                     " out of range");
  }
  indices_[static_cast<std::size_t>(j)] = i;
}

std::vector<int> SymNormalForm::tuple() const {
  std::vector<int> out;
  for (int j = strands_.value(); j >= 2; --j) out.push_back(index(j));
  return out;
}

Permutation SymNormalForm::evaluate() const {
  std::vector<int> images = Permutation::identity(strands_).images();
  for (int j = strands_.value(); j >= 2; --j) {
    for (int m = index(j); m < j; ++m) swap_after(images, m);
  }
  return Permutation(std::move(images));
}

SymNormalForm sym_normal_form(const Permutation& p) {
  StrandCount n(p.degree());
  SymNormalForm nf(n);
  // S_{i_j,j} carries position i_j to j and the remaining segments fix j,
  // so i_j is the preimage of j; strip that segment and continue with j-1.
  std::vector<int> rest = p.images();
  for (int j = n.value(); j >= 2; --j) {
    int i = 1;
    while (rest[static_cast<std::size_t>(i - 1)] != j) ++i;
    nf.set_index(j, i);
    // rest <- S_{i,j}^{-1} then rest: position i..j-1 shift up, j moves to i
    int moved = rest[static_cast<std::size_t>(i - 1)];
    for (int x = i; x < j; ++x) rest[static_cast<std::size_t>(x - 1)] = rest[static_cast<std::size_t>(x)];
    rest[static_cast<std::size_t>(j - 1)] = moved;
  }
  return nf;
}

bool is_pure(const BandWord& w) { return permutation_of(w).is_identity(); }
bool is_pure(const ArtinWord& w) { return permutation_of(w).is_identity(); }

bool is_pure_checked(const BandWord& w, const RuleSet& rules, const ReduceOptions& options) {
  bool by_permutation = is_pure(w);
  auto d = decompose_normal_form(normal_form(w, rules, options));
  bool by_tail = true;
  for (int j = 2; j <= w.strands().value(); ++j) by_tail = by_tail && d.tail_index(j) == j;
  if (by_permutation != by_tail) {
    throw Error("purity mismatch for " + render_word(w) + ": permutation says " +
                (by_permutation ? "pure" : "not pure"));
  }
  return by_permutation;
}

}  // namespace braidgs
