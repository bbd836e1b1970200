#include <braidgs/rewriter.hpp>

#include <algorithm>

namespace braidgs {

BudgetExceeded::BudgetExceeded(BandWord partial, std::size_t steps)
    : Error("step budget exceeded after " + std::to_string(steps) + " steps"),
      partial_(std::move(partial)),
      steps_(steps) {}

namespace {

using Letters = std::vector<BandLetter>;

// `front` is the suffix stored reversed, `pending` the unprocessed prefix in
// order. Returns the word pending + suffix.
BandWord join_suffix_state(StrandCount n, const Letters& pending, const Letters& front) {
  Letters all(pending);
  all.insert(all.end(), front.rbegin(), front.rend());
  return BandWord(n, std::move(all));
}

Reduction reduce_suffix_first(const BandWord& w, const RuleSet& rules, std::size_t budget) {
  Letters pending(w.begin(), w.end());
  Letters front;  // irreducible suffix, reversed: front.back() is its first letter
  front.reserve(w.size());
  std::size_t steps = 0;
  while (!pending.empty()) {
    front.push_back(pending.back());
    pending.pop_back();
    for (auto id : rules.starting_with(front.back())) {
      auto lhs = rules[id].lhs.letters();
      if (lhs.size() > front.size()) continue;
      bool match = true;
      for (std::size_t t = 1; t < lhs.size() && match; ++t) {
        match = lhs[t] == front[front.size() - 1 - t];
      }
      if (!match) continue;
      front.resize(front.size() - lhs.size());
      auto rhs = rules[id].rhs.letters();
      pending.insert(pending.end(), rhs.begin(), rhs.end());
      if (++steps > budget) {
        throw BudgetExceeded(join_suffix_state(w.strands(), pending, front), steps);
      }
      break;
    }
  }
  std::reverse(front.begin(), front.end());
  return {BandWord(w.strands(), std::move(front)), steps};
}

Reduction reduce_prefix_first(const BandWord& w, const RuleSet& rules, std::size_t budget) {
  Letters pending(w.letters().rbegin(), w.letters().rend());  // back() is next letter
  Letters back;  // irreducible prefix
  back.reserve(w.size());
  std::size_t steps = 0;
  while (!pending.empty()) {
    back.push_back(pending.back());
    pending.pop_back();
    for (auto id : rules.ending_with(back.back())) {
      auto lhs = rules[id].lhs.letters();
      if (lhs.size() > back.size()) continue;
      std::size_t offset = back.size() - lhs.size();
      if (!std::equal(lhs.begin(), lhs.end(), back.begin() + static_cast<std::ptrdiff_t>(offset))) {
        continue;
      }
      back.resize(offset);
      auto rhs = rules[id].rhs.letters();
      pending.insert(pending.end(), rhs.rbegin(), rhs.rend());
      if (++steps > budget) {
        Letters all(back);
        all.insert(all.end(), pending.rbegin(), pending.rend());
        throw BudgetExceeded(BandWord(w.strands(), std::move(all)), steps);
      }
      break;
    }
  }
  return {BandWord(w.strands(), std::move(back)), steps};
}

std::optional<std::size_t> match_at(std::span<const BandLetter> w, std::size_t pos,
                                    const RuleSet& rules) {
  for (auto id : rules.starting_with(w[pos])) {
    auto lhs = rules[id].lhs.letters();
    if (pos + lhs.size() > w.size()) continue;
    if (std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) {
      return id;
    }
  }
  return std::nullopt;
}

Reduction reduce_leftmost_scan(const BandWord& w, const RuleSet& rules, std::size_t budget) {
  BandWord current = w;
  std::size_t steps = 0;
  while (auto redex = find_leftmost_redex(current, rules)) {
    current = contract(current, *redex, rules);
    if (++steps > budget) throw BudgetExceeded(current, steps);
  }
  return {std::move(current), steps};
}

}  // namespace

Reduction reduce(const BandWord& w, const RuleSet& rules, const ReduceOptions& options) {
  if (!(w.strands() == rules.strands())) {
    throw StrandMismatch("word over n=" + std::to_string(w.strands().value()) +
                         " reduced by rules for n=" + std::to_string(rules.strands().value()));
  }
  switch (options.strategy) {
    case Strategy::PrefixFirst:
      return reduce_prefix_first(w, rules, options.step_budget);
    case Strategy::LeftmostScan:
      return reduce_leftmost_scan(w, rules, options.step_budget);
    case Strategy::SuffixFirst:
      break;
  }
  return reduce_suffix_first(w, rules, options.step_budget);
}

BandWord normal_form(const BandWord& w, const RuleSet& rules, const ReduceOptions& options) {
  return reduce(w, rules, options).word;
}

std::optional<Redex> find_leftmost_redex(const BandWord& w, const RuleSet& rules) {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (auto id = match_at(w.letters(), pos, rules)) return Redex{pos, *id};
  }
  return std::nullopt;
}

BandWord contract(const BandWord& w, const Redex& redex, const RuleSet& rules) {
  const auto& rule = rules[redex.rule];
  BandWord out = w.subword(0, redex.position);
  out *= rule.rhs;
  std::size_t after = redex.position + rule.lhs.size();
  out *= w.subword(after, w.size() - after);
  return out;
}

bool is_irreducible(const BandWord& w, const RuleSet& rules) {
  return !find_leftmost_redex(w, rules).has_value();
}

bool equal_words(const BandWord& u, const BandWord& v, const RuleSet& rules,
                 const ReduceOptions& options) {
  u.require_same_strands(v);
  return normal_form(u, rules, options) == normal_form(v, rules, options);
}

bool equal_words(const ArtinWord& u, const ArtinWord& v, const RuleSet& rules,
                 const ReduceOptions& options) {
  return equal_words(artin_to_band(u), artin_to_band(v), rules, options);
}

NormalFormDecomposition::NormalFormDecomposition(StrandCount n)
    : strands(n),
      pure_parts(static_cast<std::size_t>(n.value()) + 1, BandWord(n)),
      tail(static_cast<std::size_t>(n.value()) + 1) {
  for (int j = 0; j <= n.value(); ++j) tail[static_cast<std::size_t>(j)] = j;
}

BandWord NormalFormDecomposition::reconstruct() const {
  BandWord out(strands);
  for (int j = strands.value(); j >= 2; --j) out *= pure_part(j);
  for (int j = strands.value(); j >= 2; --j) {
    for (int m = tail_index(j); m < j; ++m) out.push_back(BandLetter::sigma_inv(m));
  }
  return out;
}

NormalFormDecomposition decompose_normal_form(const BandWord& nf) {
  NormalFormDecomposition d(nf.strands());
  std::size_t pos = 0;
  int current = nf.strands().value();
  for (; pos < nf.size() && nf[pos].is_band(); ++pos) {
    auto l = nf[pos];
    if (l.j() > current) throw ShapeError("band letter of S_" + std::to_string(l.j()) +
                                          " after S_" + std::to_string(current), pos);
    current = l.j();
    auto& part = d.pure_parts[static_cast<std::size_t>(current)];
    if (!part.empty() && part[part.size() - 1].is_inverse_of(l)) {
      throw ShapeError("pure part f_" + std::to_string(current) + " is not freely reduced", pos);
    }
    part.push_back(l);
  }
  // Remaining letters are maximal runs sigma_a^{-1} sigma_{a+1}^{-1} ... sigma_{j-1}^{-1}
  // with strictly decreasing j.
  int previous_j = nf.strands().value() + 1;
  while (pos < nf.size()) {
    std::size_t start = pos;
    if (nf[pos].is_band()) throw ShapeError("band letter after a sigma letter", pos);
    int first = nf[pos].sigma_index();
    int last = first;
    ++pos;
    while (pos < nf.size() && nf[pos].is_sigma() && nf[pos].sigma_index() == last + 1) {
      ++last;
      ++pos;
    }
    int j = last + 1;
    if (j >= previous_j) {
      throw ShapeError("sigma run ending at " + std::to_string(last) + " out of order", start);
    }
    d.tail[static_cast<std::size_t>(j)] = first;
    previous_j = j;
  }
  return d;
}

}  // namespace braidgs
