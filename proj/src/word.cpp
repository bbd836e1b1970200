#include <braidgs/word.hpp>

#include <cctype>
#include <charconv>

namespace braidgs {

bool BandLetter::valid_for(StrandCount n) const {
  if (is_sigma()) return i_ >= 1 && i_ <= n.value() - 1;
  return i_ >= 1 && i_ < j_ && j_ <= n.value();
}

bool ArtinLetter::valid_for(StrandCount n) const {
  return index >= 1 && index <= n.value() - 1 && (sign == 1 || sign == -1);
}

namespace {

// Splits on runs of whitespace; empty input gives no tokens.
std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos > start) tokens.push_back(text.substr(start, pos - start));
  }
  return tokens;
}

int parse_index(std::string_view digits, std::string_view token) {
  if (digits.empty()) throw ParseError("missing index in token '" + std::string(token) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("malformed token '" + std::string(token) + "'");
    }
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() ||
      value > StrandCount::kMax) {
    throw IndexError("index out of range in token '" + std::string(token) + "'");
  }
  return value;
}

struct Token {
  char head;
  int first;
  int second;  // 0 for s/S tokens
};

Token parse_token(std::string_view token) {
  char head = token.front();
  std::string_view rest = token.substr(1);
  switch (head) {
    case 's':
    case 'S':
      return {head, parse_index(rest, token), 0};
    case 'b':
    case 'B': {
      auto dot = rest.find('.');
      if (dot == std::string_view::npos) {
        throw ParseError("band token '" + std::string(token) + "' needs <i>.<j>");
      }
      return {head, parse_index(rest.substr(0, dot), token),
              parse_index(rest.substr(dot + 1), token)};
    }
    default:
      throw ParseError("unknown token '" + std::string(token) + "'");
  }
}

template <class Letter>
void push_checked(BasicWord<Letter>& w, Letter l, std::string_view token) {
  if (!l.valid_for(w.strands())) {
    throw IndexError("token '" + std::string(token) + "' out of range for n=" +
                     std::to_string(w.strands().value()));
  }
  w.push_back(l);
}

}  // namespace

BandWord parse_band_word(std::string_view text, StrandCount n) {
  BandWord w(n);
  for (auto token : tokenize(text)) {
    Token t = parse_token(token);
    switch (t.head) {
      case 'S':
        push_checked(w, BandLetter::sigma_inv(t.first), token);
        break;
      case 'b':
        push_checked(w, BandLetter::band(t.first, t.second, +1), token);
        break;
      case 'B':
        push_checked(w, BandLetter::band(t.first, t.second, -1), token);
        break;
      default:
        throw ParseError("positive sigma token '" + std::string(token) +
                         "' is not a band letter");
    }
  }
  return w;
}

ArtinWord parse_artin_word(std::string_view text, StrandCount n) {
  ArtinWord w(n);
  for (auto token : tokenize(text)) {
    Token t = parse_token(token);
    if (t.head != 's' && t.head != 'S') {
      throw ParseError("band token '" + std::string(token) + "' in an Artin word");
    }
    push_checked(w, ArtinLetter{t.first, t.head == 's' ? +1 : -1}, token);
  }
  return w;
}

std::string render_letter(BandLetter l) {
  if (l.is_sigma()) return "S" + std::to_string(l.sigma_index());
  return (l.sign() > 0 ? "b" : "B") + std::to_string(l.i()) + "." + std::to_string(l.j());
}

std::string render_letter(ArtinLetter l) {
  return (l.sign > 0 ? "s" : "S") + std::to_string(l.index);
}

namespace {

template <class Word>
std::string render_any(const Word& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += render_letter(l);
  }
  return out;
}

}  // namespace

std::string render_word(const BandWord& w) { return render_any(w); }
std::string render_word(const ArtinWord& w) { return render_any(w); }

ArtinWord invert_artin(const ArtinWord& w) {
  std::vector<ArtinLetter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return ArtinWord(w.strands(), std::move(out));
}

BandWord artin_to_band(const ArtinWord& w) {
  std::vector<BandLetter> out;
  out.reserve(2 * w.size());
  for (auto l : w) {
    if (l.sign > 0) out.push_back(BandLetter::band(l.index, l.index + 1));
    out.push_back(BandLetter::sigma_inv(l.index));
  }
  return BandWord(w.strands(), std::move(out));
}

ArtinWord band_to_artin(const BandWord& w) {
  std::vector<ArtinLetter> out;
  for (auto l : w) {
    if (l.is_sigma()) {
      out.push_back({l.sigma_index(), -1});
      continue;
    }
    // s_{i,j}^{e} = c sigma_i^{2e} c^{-1} with c = sigma_{j-1} ... sigma_{i+1}
    for (int m = l.j() - 1; m > l.i(); --m) out.push_back({m, +1});
    out.push_back({l.i(), l.sign()});
    out.push_back({l.i(), l.sign()});
    for (int m = l.i() + 1; m < l.j(); ++m) out.push_back({m, -1});
  }
  return ArtinWord(w.strands(), std::move(out));
}

}  // namespace braidgs
