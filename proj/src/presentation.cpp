#include "capitulation/presentation.hpp"

#include <cctype>
#include <cstdlib>
#include <set>
#include <sstream>

#include "capitulation/errors.hpp"

namespace capitulation {

Word::Word(std::vector<Letter> letters) {
  for (const Letter& l : letters) push(l);
}

Word Word::generator(int index, std::int64_t exponent) {
  Word w;
  w.push({index, exponent});
  return w;
}

std::size_t Word::length() const noexcept {
  std::size_t n = 0;
  for (const Letter& l : letters_) n += static_cast<std::size_t>(std::llabs(l.exponent));
  return n;
}

void Word::push(Letter l) {
  if (l.exponent == 0) return;
  if (!letters_.empty() && letters_.back().generator == l.generator) {
    letters_.back().exponent += l.exponent;
    if (letters_.back().exponent == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.push({it->generator, -it->exponent});
  return w;
}

Word Word::pow(std::int64_t k) const {
  Word base = k < 0 ? inverse() : *this;
  Word result;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) result *= base;
  return result;
}

Word Word::conjugate_by(const Word& by) const { return by.inverse() * *this * by; }

Word& Word::operator*=(const Word& rhs) {
  for (const Letter& l : rhs.letters_) push(l);
  return *this;
}

Word commutator(const Word& u, const Word& v) {
  return u.inverse() * v.inverse() * u * v;
}

void Presentation::validate() const {
  if (generators.empty()) throw InvalidArgument("presentation has no generators");
  if (generators.size() > kMaxGenerators)
    throw InvalidArgument("at most 8 generators are supported");
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (g.empty()) throw InvalidArgument("empty generator name");
    if (!seen.insert(g).second) throw InvalidArgument("duplicate generator '" + g + "'");
  }
  for (const Word& w : relators) {
    for (const Letter& l : w.letters()) {
      if (l.generator < 0 || static_cast<std::size_t>(l.generator) >= generators.size())
        throw InvalidArgument("relator references an undeclared generator");
      if (l.exponent == 0) throw InvalidArgument("zero exponent in relator");
    }
  }
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation run() {
    Presentation p;
    expect('<');
    do {
      std::size_t at = skip();
      std::string name = ident();
      for (const auto& g : p.generators)
        if (g == name) throw ParseError("duplicate generator '" + name + "'", at);
      p.generators.push_back(std::move(name));
    } while (accept(','));
    if (p.generators.size() > kMaxGenerators)
      throw ParseError("at most 8 generators are supported", pos_);
    gens_ = &p.generators;
    expect('|');
    do {
      Word lhs = word();
      if (accept('=')) lhs *= word().inverse();
      p.relators.push_back(std::move(lhs));
    } while (accept(','));
    expect('>');
    if (skip() != text_.size()) throw ParseError("trailing input", pos_);
    return p;
  }

 private:
  std::size_t skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      std::string found = pos_ < text_.size() ? std::string(1, text_[pos_]) : "end of input";
      throw ParseError(std::string("expected '") + c + "', found '" + found + "'", pos_);
    }
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string ident() {
    skip();
    if (pos_ >= text_.size() || !ident_start(text_[pos_]))
      throw ParseError("expected identifier", pos_);
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool factor_start() {
    skip();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return ident_start(c) || c == '[' || c == '(' || c == '1' || c == '*';
  }

  // word := factor+ ; a '*' between factors is accepted as explicit juxtaposition.
  Word word() {
    std::size_t at = skip();
    if (!factor_start() || peek('*')) throw ParseError("expected word", at);
    Word w = factor();
    while (factor_start()) {
      accept('*');
      w *= factor();
    }
    return w;
  }

  Word atom() {
    std::size_t at = skip();
    if (accept('[')) {
      Word u = word();
      expect(',');
      Word v = word();
      expect(']');
      return commutator(u, v);
    }
    if (accept('(')) {
      Word u = word();
      expect(')');
      return u;
    }
    if (peek('1')) {
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("unexpected number", at);
      return {};
    }
    std::string name = ident();
    for (std::size_t i = 0; i < gens_->size(); ++i)
      if ((*gens_)[i] == name) return Word::generator(static_cast<int>(i));
    // "ab" with generators a, b: juxtaposition without whitespace. Only the
    // first name is consumed so that an exponent binds to the last one (cd^2 = c d^2).
    if (auto parts = split(name)) {
      const auto first = static_cast<std::size_t>(parts->front());
      pos_ = at + (*gens_)[first].size();
      return Word::generator(parts->front());
    }
    throw ParseError("undeclared generator '" + name + "'", at);
  }

  // Indices of the declared names spelling `name`, if the spelling is unique.
  std::optional<std::vector<int>> split(const std::string& name) const {
    const std::size_t n = name.size();
    std::vector<int> ways(n + 1, 0), last(n + 1, -1);
    ways[0] = 1;
    for (std::size_t end = 1; end <= n; ++end)
      for (std::size_t g = 0; g < gens_->size(); ++g) {
        const std::string& s = (*gens_)[g];
        if (s.size() > end || name.compare(end - s.size(), s.size(), s) != 0) continue;
        if (!ways[end - s.size()]) continue;
        ways[end] = std::min(2, ways[end] + ways[end - s.size()]);
        last[end] = static_cast<int>(g);
      }
    if (ways[n] != 1) return std::nullopt;
    std::vector<int> seq;
    for (std::size_t end = n; end > 0; end -= (*gens_)[static_cast<std::size_t>(last[end])].size())
      seq.push_back(last[end]);
    return std::vector<int>(seq.rbegin(), seq.rend());
  }

  Word factor() {
    Word base = atom();
    if (!accept('^')) return base;
    std::size_t at = skip();
    bool negative = accept('-');
    skip();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::int64_t k = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        k = k * 10 + (text_[pos_] - '0');
        if (k > kMaxExponent) throw ParseError("exponent exceeds 2^20", at);
        ++pos_;
      }
      if (k == 0) throw ParseError("zero exponent", at);
      return base.pow(negative ? -k : k);
    }
    if (negative) throw ParseError("expected digits after '-'", pos_);
    // Word exponent: conjugation. A bare identifier or a parenthesised word.
    Word by;
    if (accept('(')) {
      by = word();
      expect(')');
    } else if (pos_ < text_.size() && ident_start(text_[pos_])) {
      by = atom();
    } else {
      throw ParseError("expected exponent", pos_);
    }
    return base.conjugate_by(by);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* gens_ = nullptr;
};

std::int64_t pow2(int k) { return std::int64_t{1} << k; }

Word gen(int i, std::int64_t e = 1) { return Word::generator(i, e); }

CatalogError out_of_range(std::string_view name, std::string_view rule) {
  return CatalogError("catalog " + std::string(name) + ": parameters out of range (" +
                      std::string(rule) + ")");
}

}  // namespace

Presentation parse(std::string_view text) {
  Presentation p = Parser(text).run();
  return p;
}

std::string render_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const Letter& l : w.letters()) {
    if (!first) out << ' ';
    first = false;
    out << names.at(static_cast<std::size_t>(l.generator));
    if (l.exponent != 1) out << '^' << l.exponent;
  }
  return out.str();
}

std::string render(const Presentation& p) {
  std::ostringstream out;
  out << '<';
  for (std::size_t i = 0; i < p.generators.size(); ++i) out << (i ? "," : "") << p.generators[i];
  out << " | ";
  if (p.relators.empty()) out << '1';
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    out << (i ? ", " : "") << render_word(p.relators[i], p.generators);
  out << '>';
  return out.str();
}

Presentation catalog(std::string_view name, const std::vector<int>& params) {
  auto arity = [&](std::size_t k) {
    if (params.size() != k)
      throw CatalogError("catalog " + std::string(name) + " expects " + std::to_string(k) +
                         " parameter(s)");
  };
  const Word a = gen(0), b = gen(1);
  Presentation p;
  p.generators = {"a", "b"};

  if (name == "Gm") {
    arity(2);
    const int m = params[0], n = params[1];
    if (m < 1 || m > 4) throw out_of_range(name, "m in 1..4");
    const int min_n = m == 1 ? 4 : (m == 4 ? 6 : 5);
    if (n < min_n || n > 20) throw out_of_range(name, "n >= " + std::to_string(min_n));
    // a^{2^{n-2}} = 1, b^4 = z1, a^b = a^{-1} z2
    Word z1 = m == 3 ? gen(0, pow2(n - 3)) : Word{};
    Word z2 = m == 2 ? gen(0, pow2(n - 3)) : (m == 4 ? gen(0, pow2(n - 4)) : Word{});
    p.relators = {gen(0, pow2(n - 2)), gen(1, 4) * z1.inverse(),
                  a.conjugate_by(b) * (gen(0, -1) * z2).inverse()};
  } else if (name == "modular") {
    arity(1);
    const int n = params[0];
    if (n < 4 || n > 20) throw out_of_range(name, "n >= 4");
    p.relators = {gen(0, pow2(n - 1)), gen(1, 2), commutator(a, b) * gen(0, -pow2(n - 2))};
  } else if (name == "modular_alt16") {
    arity(0);
    p.relators = {gen(0, 2), gen(1, 8), b.conjugate_by(a) * gen(1, -5)};
  } else if (name == "nonmeta16") {
    arity(0);
    p.generators = {"a", "b", "c"};
    const Word c = gen(2);
    p.relators = {gen(0, 2),  gen(1, 4), gen(2, 2), c.inverse() * commutator(a, b),
                  commutator(a, c), commutator(b, c)};
  } else if (name == "abelian24") {
    arity(0);
    p.relators = {gen(0, 2), gen(1, 4), commutator(a, b)};
  } else if (name == "g1_16") {
    arity(0);
    p.relators = {gen(0, 4), gen(1, 4), a.conjugate_by(b) * a};
  } else {
    throw CatalogError("unknown catalog entry '" + std::string(name) + "'");
  }
  p.tag = CatalogTag{std::string(name), params};
  return p;
}

std::string describe(const CatalogTag& tag) {
  std::string s = tag.name;
  if (!tag.params.empty()) {
    s += '(';
    for (std::size_t i = 0; i < tag.params.size(); ++i)
      s += (i ? "," : "") + std::to_string(tag.params[i]);
    s += ')';
  }
  return s;
}

}  // namespace capitulation
