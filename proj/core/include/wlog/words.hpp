#pragma once

// Freely reduced words over a named generator alphabet, together with the
// abelianisation and the degree-2 (exterior square) image used as the
// class-2 nilpotent oracle.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wlog/errors.hpp"

namespace wlog {

/// Ordered list of distinct generator names. The order fixes coordinate
/// indices of abelian vectors and exterior images.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& name(int i) const { return symbols_.at(i); }
  const std::vector<std::string>& names() const { return symbols_; }
  std::optional<int> find(std::string_view symbol) const;
  /// Index of a known symbol; throws InvalidInput for foreign symbols.
  int indexOf(std::string_view symbol) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> symbols_;
  std::map<std::string, int, std::less<>> index_;
};

struct Letter {
  int gen = 0;
  std::int64_t exp = 0;
  bool operator==(const Letter&) const = default;
};

/// A word in canonical freely reduced form: exponents are non-zero and
/// adjacent letters carry distinct generators. The empty word is "1".
class Word {
 public:
  Word() = default;
  static Word letter(int gen, std::int64_t exp = 1);
  /// Free reduction of an arbitrary letter list; idempotent.
  static Word fromLetters(const std::vector<Letter>& raw);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  /// Total letter count, exponents counted with multiplicity.
  std::int64_t length() const;

  Word inverse() const;
  Word pow(std::int64_t k) const;
  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) {
    lhs *= rhs;
    return lhs;
  }
  bool operator==(const Word&) const = default;

  /// Expansion into unit-exponent letters (gen, +1/-1).
  std::vector<std::pair<int, int>> expanded() const;

 private:
  std::vector<Letter> letters_;

  void pushReduced(int gen, std::int64_t exp);
  friend Word reduce(const std::vector<Letter>& raw);
};

/// Free reduction to canonical form.
Word reduce(const std::vector<Letter>& raw);

/// [u, v] = u^-1 v^-1 u v, reduced.
Word commutator(const Word& u, const Word& v);

/// g^-1 w g, reduced.
Word conjugate(const Word& w, const Word& g);

/// Removes cancelling prefix/suffix pairs (the word as a cyclic word).
Word cyclic_reduce(const Word& w);

/// Canonical representative of the relator class of w: the least word, in a
/// fixed letter order, among all cyclic rotations of the cyclic reduction of
/// w and of its inverse. Two words present the same relator iff their
/// normal forms coincide.
Word cyclic_normal_form(const Word& w);

/// Exponent-sum vector of w in Z^alphabetSize.
std::vector<std::int64_t> abelianize(const Word& w, int alphabetSize);

/// Element of the free abelian group on the pairs i < j of generator
/// indices; the image of a commutator-subgroup word in gamma_2/gamma_3.
class ExteriorImage {
 public:
  explicit ExteriorImage(int alphabetSize);

  int alphabetSize() const { return n_; }
  /// Signed coordinate; get(i, j) = -get(j, i), zero on the diagonal.
  std::int64_t get(int i, int j) const;
  void add(int i, int j, std::int64_t delta);
  bool isZero() const;
  /// Flat coordinates in (i, j) order with i < j, row-major.
  const std::vector<std::int64_t>& coords() const { return coords_; }

  bool operator==(const ExteriorImage&) const = default;

 private:
  int n_;
  std::vector<std::int64_t> coords_;
  int flatIndex(int i, int j) const;
};

/// Class of w in gamma_2(F)/gamma_3(F), normalised so that a commutator of
/// generators [x_i, x_j] (i < j) maps to +1 in coordinate (i, j).
/// Throws NotApplicable when w does not abelianize to zero.
ExteriorImage exterior_image(const Word& w, int alphabetSize);

/// Grammar: word := term ("*" term)* | "1"; term := ident ("^" int)?.
Word parse_word(const Alphabet& a, std::string_view text);
std::string format_word(const Alphabet& a, const Word& w);

/// True iff s matches ident := [A-Za-z_][A-Za-z0-9_]*.
bool is_identifier(std::string_view s);

}  // namespace wlog
