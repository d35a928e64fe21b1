#include "wlog/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wlog {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  for (int i = 0; i < static_cast<int>(symbols_.size()); ++i) {
    if (!index_.emplace(symbols_[i], i).second) {
      throw InvalidInput("duplicate alphabet symbol: " + symbols_[i]);
    }
  }
}

std::optional<int> Alphabet::find(std::string_view symbol) const {
  auto it = index_.find(symbol);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Alphabet::indexOf(std::string_view symbol) const {
  auto i = find(symbol);
  if (!i) throw InvalidInput("unknown symbol: " + std::string(symbol));
  return *i;
}

void Word::pushReduced(int gen, std::int64_t exp) {
  if (exp == 0) return;
  if (!letters_.empty() && letters_.back().gen == gen) {
    letters_.back().exp += exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back({gen, exp});
}

Word Word::letter(int gen, std::int64_t exp) {
  Word w;
  w.pushReduced(gen, exp);
  return w;
}

Word Word::fromLetters(const std::vector<Letter>& raw) { return reduce(raw); }

Word reduce(const std::vector<Letter>& raw) {
  Word w;
  for (const Letter& l : raw) w.pushReduced(l.gen, l.exp);
  return w;
}

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const Letter& l : letters_) n += l.exp < 0 ? -l.exp : l.exp;
  return n;
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back({it->gen, -it->exp});
  }
  return w;
}

Word Word::pow(std::int64_t k) const {
  Word base = k < 0 ? inverse() : *this;
  std::int64_t reps = k < 0 ? -k : k;
  Word out;
  for (std::int64_t i = 0; i < reps; ++i) out *= base;
  return out;
}

Word& Word::operator*=(const Word& rhs) {
  for (const Letter& l : rhs.letters_) pushReduced(l.gen, l.exp);
  return *this;
}

std::vector<std::pair<int, int>> Word::expanded() const {
  std::vector<std::pair<int, int>> out;
  for (const Letter& l : letters_) {
    int sign = l.exp < 0 ? -1 : 1;
    std::int64_t reps = l.exp < 0 ? -l.exp : l.exp;
    for (std::int64_t i = 0; i < reps; ++i) out.emplace_back(l.gen, sign);
  }
  return out;
}

Word commutator(const Word& u, const Word& v) {
  return u.inverse() * v.inverse() * u * v;
}

Word conjugate(const Word& w, const Word& g) { return g.inverse() * w * g; }

Word cyclic_reduce(const Word& w) {
  auto letters = w.expanded();
  std::size_t lo = 0, hi = letters.size();
  while (hi - lo >= 2 && letters[lo].first == letters[hi - 1].first &&
         letters[lo].second == -letters[hi - 1].second) {
    ++lo;
    --hi;
  }
  std::vector<Letter> trimmed;
  for (std::size_t i = lo; i < hi; ++i) {
    trimmed.push_back({letters[i].first, letters[i].second});
  }
  return reduce(trimmed);
}

namespace {

// Letter order for the relator normal form: by generator, positive before
// negative exponent.
bool letterLess(const std::pair<int, int>& a, const std::pair<int, int>& b) {
  if (a.first != b.first) return a.first < b.first;
  return a.second > b.second;
}

std::vector<std::pair<int, int>> leastRotation(std::vector<std::pair<int, int>> v) {
  if (v.empty()) return v;
  std::vector<std::pair<int, int>> best = v;
  for (std::size_t r = 1; r < v.size(); ++r) {
    std::rotate(v.begin(), v.begin() + 1, v.end());
    if (std::lexicographical_compare(v.begin(), v.end(), best.begin(), best.end(),
                                     letterLess)) {
      best = v;
    }
  }
  return best;
}

}  // namespace

Word cyclic_normal_form(const Word& w) {
  Word c = cyclic_reduce(w);
  auto a = leastRotation(c.expanded());
  auto b = leastRotation(c.inverse().expanded());
  const auto& pick =
      std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end(), letterLess)
          ? b
          : a;
  std::vector<Letter> letters;
  for (auto [gen, sign] : pick) letters.push_back({gen, sign});
  return reduce(letters);
}

std::vector<std::int64_t> abelianize(const Word& w, int alphabetSize) {
  std::vector<std::int64_t> vec(alphabetSize, 0);
  for (const Letter& l : w.letters()) vec.at(l.gen) += l.exp;
  return vec;
}

ExteriorImage::ExteriorImage(int alphabetSize)
    : n_(alphabetSize), coords_(static_cast<std::size_t>(alphabetSize) *
                                    (alphabetSize > 0 ? alphabetSize - 1 : 0) / 2,
                                0) {}

int ExteriorImage::flatIndex(int i, int j) const {
  // requires 0 <= i < j < n_
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

std::int64_t ExteriorImage::get(int i, int j) const {
  if (i == j) return 0;
  if (i < j) return coords_.at(flatIndex(i, j));
  return -coords_.at(flatIndex(j, i));
}

void ExteriorImage::add(int i, int j, std::int64_t delta) {
  if (i == j || delta == 0) return;
  if (i < j) {
    coords_.at(flatIndex(i, j)) += delta;
  } else {
    coords_.at(flatIndex(j, i)) -= delta;
  }
}

bool ExteriorImage::isZero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](std::int64_t c) { return c == 0; });
}

ExteriorImage exterior_image(const Word& w, int alphabetSize) {
  auto vec = abelianize(w, alphabetSize);
  if (!std::all_of(vec.begin(), vec.end(), [](std::int64_t c) { return c == 0; })) {
    throw NotApplicable("word does not lie in the commutator subgroup");
  }
  // Signed count of ordered letter-run pairs. Within a run both letters carry
  // the same generator, so only the cross-run terms matter for i != j; for a
  // zero-sum word the count is antisymmetric and coincides with the class in
  // the exterior square, with [x_i, x_j] |-> +1 at (i, j).
  ExteriorImage img(alphabetSize);
  const auto& runs = w.letters();
  for (std::size_t p = 0; p < runs.size(); ++p) {
    for (std::size_t q = p + 1; q < runs.size(); ++q) {
      if (runs[p].gen == runs[q].gen) continue;
      int i = runs[p].gen, j = runs[q].gen;
      if (i < j) {
        img.add(i, j, runs[p].exp * runs[q].exp);
      }
    }
  }
  return img;
}

namespace {

struct Tokenizer {
  std::string_view text;
  std::size_t pos = 0;

  void skipSpace() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }
  bool done() {
    skipSpace();
    return pos >= text.size();
  }
  char peek() {
    skipSpace();
    return text[pos];
  }
};

std::string parseIdent(Tokenizer& t) {
  t.skipSpace();
  std::size_t start = t.pos;
  if (t.pos < t.text.size() &&
      (std::isalpha(static_cast<unsigned char>(t.text[t.pos])) || t.text[t.pos] == '_')) {
    ++t.pos;
    while (t.pos < t.text.size() &&
           (std::isalnum(static_cast<unsigned char>(t.text[t.pos])) ||
            t.text[t.pos] == '_')) {
      ++t.pos;
    }
  }
  if (start == t.pos) throw InvalidInput("expected identifier in word");
  return std::string(t.text.substr(start, t.pos - start));
}

std::int64_t parseInt(Tokenizer& t) {
  t.skipSpace();
  std::size_t start = t.pos;
  if (t.pos < t.text.size() && t.text[t.pos] == '-') ++t.pos;
  std::size_t digits = t.pos;
  while (t.pos < t.text.size() && std::isdigit(static_cast<unsigned char>(t.text[t.pos]))) {
    ++t.pos;
  }
  if (t.pos == digits) throw InvalidInput("expected integer exponent in word");
  return std::stoll(std::string(t.text.substr(start, t.pos - start)));
}

}  // namespace

Word parse_word(const Alphabet& a, std::string_view text) {
  Tokenizer t{text};
  if (t.done()) throw InvalidInput("empty word text (the empty word is written \"1\")");
  if (t.peek() == '1') {
    ++t.pos;
    if (!t.done()) throw InvalidInput("unexpected input after \"1\"");
    return Word{};
  }
  std::vector<Letter> letters;
  while (true) {
    std::string ident = parseIdent(t);
    std::int64_t exp = 1;
    if (!t.done() && t.peek() == '^') {
      ++t.pos;
      exp = parseInt(t);
    }
    letters.push_back({a.indexOf(ident), exp});
    if (t.done()) break;
    if (t.peek() != '*') throw InvalidInput("expected '*' between word terms");
    ++t.pos;
  }
  return reduce(letters);
}

std::string format_word(const Alphabet& a, const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const Letter& l : w.letters()) {
    if (!first) out << '*';
    first = false;
    out << a.name(l.gen);
    if (l.exp != 1) out << '^' << l.exp;
  }
  return out.str();
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace wlog
