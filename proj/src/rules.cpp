#include <braidgs/rules.hpp>

#include <algorithm>
#include <array>
#include <set>

namespace braidgs {

std::string_view family_name(Family f) {
  static constexpr std::array<std::string_view, 17> names = {
      "E1", "E2",  "E3",  "E4",  "E5",  "E6",  "E7",  "E8",  "E9",
      "E10", "E11", "E12", "E13", "E14", "E15", "E16", "TRIV"};
  return names[static_cast<std::size_t>(f)];
}

std::string RewriteRule::label() const {
  std::string out(family_name(family));
  out += '(';
  bool first = true;
  for (auto [name, value] : params) {
    if (!first) out += ',';
    first = false;
    out += name;
    out += '=';
    bool is_sign = name == 'd' || name == 'e';
    if (is_sign) out += value > 0 ? "+1" : "-1";
    else out += std::to_string(value);
  }
  out += ')';
  return out;
}

RuleSet::RuleSet(StrandCount n, std::vector<RewriteRule> rules)
    : strands_(n), rules_(std::move(rules)) {
  std::set<std::vector<std::uint32_t>> seen;
  for (std::uint32_t id = 0; id < rules_.size(); ++id) {
    const auto& r = rules_[id];
    if (!(r.lhs.strands() == n) || !(r.rhs.strands() == n)) {
      throw StrandMismatch("rule " + r.label() + " is not over n=" + std::to_string(n.value()));
    }
    if (r.lhs.empty()) throw Error("rule " + r.label() + " has an empty left-hand side");
    std::vector<std::uint32_t> key;
    for (auto l : r.lhs) key.push_back(l.code());
    if (!seen.insert(key).second) {
      throw Error("duplicate left-hand side " + render_word(r.lhs));
    }
    by_first_[r.lhs[0].code()].push_back(id);
    by_last_[r.lhs[r.lhs.size() - 1].code()].push_back(id);
    max_lhs_ = std::max(max_lhs_, r.lhs.size());
  }
  auto longest_first = [this](std::uint32_t a, std::uint32_t b) {
    if (rules_[a].lhs.size() != rules_[b].lhs.size()) {
      return rules_[a].lhs.size() > rules_[b].lhs.size();
    }
    return a < b;
  };
  for (auto& [code, ids] : by_first_) std::sort(ids.begin(), ids.end(), longest_first);
  for (auto& [code, ids] : by_last_) std::sort(ids.begin(), ids.end(), longest_first);
}

std::span<const std::uint32_t> RuleSet::starting_with(BandLetter first) const {
  auto it = by_first_.find(first.code());
  if (it == by_first_.end()) return {};
  return it->second;
}

std::span<const std::uint32_t> RuleSet::ending_with(BandLetter last) const {
  auto it = by_last_.find(last.code());
  if (it == by_last_.end()) return {};
  return it->second;
}

std::optional<std::size_t> RuleSet::find(std::span<const BandLetter> lhs) const {
  if (lhs.empty()) return std::nullopt;
  for (auto id : starting_with(lhs.front())) {
    auto candidate = rules_[id].lhs.letters();
    if (std::equal(candidate.begin(), candidate.end(), lhs.begin(), lhs.end())) return id;
  }
  return std::nullopt;
}

BandWord free_reduce(const BandWord& w) {
  std::vector<BandLetter> out;
  out.reserve(w.size());
  for (auto l : w) {
    if (!out.empty() && out.back().is_inverse_of(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return BandWord(w.strands(), std::move(out));
}

BandWord conjugate_expand(const BandWord& a, const BandWord& b) {
  a.require_same_strands(b);
  BandWord out(a.strands());
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    if (it->is_sigma()) {
      throw Error("conjugator " + render_word(b) + " contains a sigma^{-1} letter");
    }
    out.push_back(it->inverse());
  }
  out *= a;
  out *= b;
  return free_reduce(out);
}

namespace {

class RuleBuilder {
 public:
  explicit RuleBuilder(StrandCount n) : n_(n) {}

  BandLetter sig(int k) const { return BandLetter::sigma_inv(k); }
  BandLetter s(int i, int j, int sign = +1) const { return BandLetter::band(i, j, sign); }
  BandWord word(std::initializer_list<BandLetter> letters) const {
    return BandWord(n_, letters);
  }
  BandWord conj(BandLetter a, std::initializer_list<BandLetter> b) const {
    return conjugate_expand(word({a}), word(b));
  }

  void add(BandWord lhs, BandWord rhs, Family family,
           std::vector<std::pair<char, int>> params) {
    rules_.push_back({std::move(lhs), free_reduce(rhs), family, std::move(params)});
  }

  // conjugate followed by one trailing letter
  BandWord then(BandWord w, BandLetter last) const {
    w.push_back(last);
    return w;
  }

  std::vector<RewriteRule> take() { return std::move(rules_); }

 private:
  StrandCount n_;
  std::vector<RewriteRule> rules_;
};

// sigma_a^{-1} sigma_{a+1}^{-1} ... sigma_{b-1}^{-1}
std::vector<BandLetter> sigma_run(int a, int b) {
  std::vector<BandLetter> run;
  for (int m = a; m < b; ++m) run.push_back(BandLetter::sigma_inv(m));
  return run;
}

void add_sigma_band_rules(RuleBuilder& rb, int n, RhsForm form) {
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int d : {+1, -1}) {
        auto sij = rb.s(i, j, d);
        for (int k = 1; k <= n - 1; ++k) {
          if (k == i - 1 || k == i || k == j - 1 || k == j) continue;
          rb.add(rb.word({rb.sig(k), sij}), rb.word({sij, rb.sig(k)}), Family::E1,
                 {{'i', i}, {'j', j}, {'k', k}, {'d', d}});
        }
        if (j == i + 1) {
          rb.add(rb.word({rb.sig(i), sij}), rb.word({sij, rb.sig(i)}), Family::E2,
                 {{'i', i}, {'d', d}});
        }
        if (i >= 2) {
          rb.add(rb.word({rb.sig(i - 1), sij}), rb.word({rb.s(i - 1, j, d), rb.sig(i - 1)}),
                 Family::E3, {{'i', i}, {'j', j}, {'d', d}});
        }
        if (j > i + 1) {
          auto inner = form == RhsForm::AsWritten ? rb.conj(rb.s(i + 1, j, d), {rb.s(i, i + 1)})
                                                  : rb.conj(rb.s(i + 1, j, d), {rb.s(i, j, -1)});
          rb.add(rb.word({rb.sig(i), sij}), rb.then(inner, rb.sig(i)), Family::E4,
                 {{'i', i}, {'j', j}, {'d', d}});
          rb.add(rb.word({rb.sig(j - 1), sij}), rb.word({rb.s(i, j - 1, d), rb.sig(j - 1)}),
                 Family::E5, {{'i', i}, {'j', j}, {'d', d}});
        }
        if (j <= n - 1) {
          rb.add(rb.word({rb.sig(j), sij}),
                 rb.then(rb.conj(rb.s(i, j + 1, d), {rb.s(j, j + 1)}), rb.sig(j)),
                 Family::E6, {{'i', i}, {'j', j}, {'d', d}});
        }
      }
    }
  }
}

void add_band_band_rules(RuleBuilder& rb, int n) {
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      for (int l = k + 1; l <= n; ++l) {
        for (int e : {+1, -1}) {
          std::vector<std::pair<char, int>> p{{'j', j}, {'k', k}, {'l', l}, {'e', e}};
          rb.add(rb.word({rb.s(j, k, -1), rb.s(k, l, e)}),
                 rb.then(rb.conj(rb.s(k, l, e), {rb.s(j, l, -1)}), rb.s(j, k, -1)),
                 Family::E7, p);
          rb.add(rb.word({rb.s(j, k), rb.s(k, l, e)}),
                 rb.then(rb.conj(rb.s(k, l, e), {rb.s(j, l), rb.s(k, l)}), rb.s(j, k)),
                 Family::E8, p);
          rb.add(rb.word({rb.s(j, k, -1), rb.s(j, l, e)}),
                 rb.then(rb.conj(rb.s(j, l, e), {rb.s(k, l, -1), rb.s(j, l, -1)}),
                         rb.s(j, k, -1)),
                 Family::E9, p);
          rb.add(rb.word({rb.s(j, k), rb.s(j, l, e)}),
                 rb.then(rb.conj(rb.s(j, l, e), {rb.s(k, l)}), rb.s(j, k)),
                 Family::E10, p);
        }
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        for (int l = k + 1; l <= n; ++l) {
          for (int e : {+1, -1}) {
            std::vector<std::pair<char, int>> p{{'i', i}, {'j', j}, {'k', k}, {'l', l}, {'e', e}};
            rb.add(rb.word({rb.s(i, k, -1), rb.s(j, l, e)}),
                   rb.then(rb.conj(rb.s(j, l, e), {rb.s(k, l), rb.s(i, l), rb.s(k, l, -1),
                                                   rb.s(i, l, -1)}),
                           rb.s(i, k, -1)),
                   Family::E11, p);
            rb.add(rb.word({rb.s(i, k), rb.s(j, l, e)}),
                   rb.then(rb.conj(rb.s(j, l, e), {rb.s(i, l, -1), rb.s(k, l, -1),
                                                   rb.s(i, l), rb.s(k, l)}),
                           rb.s(i, k)),
                   Family::E12, p);
          }
        }
      }
    }
  }
  // E13: s_{i,k} and s_{j,l} commute when j<i<k<l or i<k<j<l
  for (int i = 1; i <= n; ++i) {
    for (int k = i + 1; k <= n; ++k) {
      for (int j = 1; j <= n; ++j) {
        for (int l = j + 1; l <= n; ++l) {
          if (!((j < i && k < l) || (k < j))) continue;
          for (int d : {+1, -1}) {
            for (int e : {+1, -1}) {
              rb.add(rb.word({rb.s(i, k, d), rb.s(j, l, e)}),
                     rb.word({rb.s(j, l, e), rb.s(i, k, d)}), Family::E13,
                     {{'i', i}, {'j', j}, {'k', k}, {'l', l}, {'d', d}, {'e', e}});
            }
          }
        }
      }
    }
  }
}

void add_sigma_rules(RuleBuilder& rb, StrandCount strands) {
  int n = strands.value();
  for (int j = 1; j <= n - 1; ++j) {
    for (int k = j + 2; k <= n - 1; ++k) {
      rb.add(rb.word({rb.sig(j), rb.sig(k)}), rb.word({rb.sig(k), rb.sig(j)}), Family::E14,
             {{'j', j}, {'k', k}});
    }
  }
  for (int j = 1; j <= n - 1; ++j) {
    for (int k = 1; k < j; ++k) {
      auto run = sigma_run(k, j + 1);
      std::vector<BandLetter> lhs{BandLetter::sigma_inv(j)};
      lhs.insert(lhs.end(), run.begin(), run.end());
      auto rhs = run;
      rhs.push_back(BandLetter::sigma_inv(j - 1));
      rb.add(BandWord(strands, lhs), BandWord(strands, rhs), Family::E15, {{'j', j}, {'k', k}});
    }
    rb.add(rb.word({rb.sig(j), rb.sig(j)}), rb.word({rb.s(j, j + 1, -1)}), Family::E16,
           {{'i', j}});
  }
}

void add_trivial_rules(RuleBuilder& rb, int n) {
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int d : {+1, -1}) {
        rb.add(rb.word({rb.s(i, j, d), rb.s(i, j, -d)}), rb.word({}), Family::Triv,
               {{'i', i}, {'j', j}, {'d', d}});
      }
    }
  }
}

}  // namespace

RuleSet instantiate_rules(StrandCount n, RhsForm form) {
  RuleBuilder rb(n);
  add_sigma_band_rules(rb, n.value(), form);
  add_band_band_rules(rb, n.value());
  add_sigma_rules(rb, n);
  add_trivial_rules(rb, n.value());
  return RuleSet(n, rb.take());
}

std::optional<Family> classify_pair(BandLetter a, BandLetter b) {
  if (a.is_sigma()) {
    int k = a.sigma_index();
    if (b.is_sigma()) {
      int m = b.sigma_index();
      if (k < m - 1) return Family::E14;
      if (k == m) return Family::E16;
      if (m < k) return Family::E15;
      return std::nullopt;
    }
    int i = b.i(), j = b.j();
    if (k == i - 1) return Family::E3;
    if (k == i) return j == i + 1 ? Family::E2 : Family::E4;
    if (k == j - 1) return Family::E5;
    if (k == j) return Family::E6;
    return Family::E1;
  }
  if (b.is_sigma()) return std::nullopt;
  if (a.is_inverse_of(b)) return Family::Triv;
  int p = a.i(), k = a.j(), q = b.i(), l = b.j();
  if (k >= l) return std::nullopt;
  bool inv = a.sign() < 0;
  if (q == k) return inv ? Family::E7 : Family::E8;
  if (q == p) return inv ? Family::E9 : Family::E10;
  if (p < q && q < k) return inv ? Family::E11 : Family::E12;
  return Family::E13;
}

}  // namespace braidgs
