#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace capitulation {

/// Largest admissible |exponent| in a word.
inline constexpr std::int64_t kMaxExponent = std::int64_t{1} << 20;
/// Largest admissible number of generators in a presentation.
inline constexpr std::size_t kMaxGenerators = 8;

struct Letter {
  int generator = 0;
  std::int64_t exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word: adjacent letters have distinct generators and
/// every exponent is nonzero.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word generator(int index, std::int64_t exponent = 1);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  /// Number of generator occurrences, counting |exponent| per letter.
  std::size_t length() const noexcept;

  Word inverse() const;
  Word pow(std::int64_t k) const;
  Word conjugate_by(const Word& by) const;  ///< by^-1 * this * by

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  void push(Letter l);
  std::vector<Letter> letters_;
};

/// [u, v] = u^-1 v^-1 u v
Word commutator(const Word& u, const Word& v);

struct CatalogTag {
  std::string name;
  std::vector<int> params;

  friend bool operator==(const CatalogTag&, const CatalogTag&) = default;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::optional<CatalogTag> tag;

  /// Throws InvalidArgument when the invariants do not hold.
  void validate() const;

  /// Equality of the group-defining data; the catalog tag is metadata.
  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.generators == b.generators && a.relators == b.relators;
  }
};

/// Parses `<gens | rels>`. Relations `u = v` become the relator u v^-1,
/// `[u,v]` expands to u^-1 v^-1 u v and `u^(w)` / `u^g` with a word
/// exponent expands to the conjugate w^-1 u w.
Presentation parse(std::string_view text);

/// Canonical text form; parse(render(p)) == p.
std::string render(const Presentation& p);
std::string render_word(const Word& w, const std::vector<std::string>& names);

/// Named families. Valid names: Gm, modular, modular_alt16, nonmeta16,
/// abelian24, g1_16.
Presentation catalog(std::string_view name, const std::vector<int>& params);

/// Human-readable instance descriptor such as "Gm(3,5)" or "nonmeta16".
std::string describe(const CatalogTag& tag);

}  // namespace capitulation
