#include "doctest.h"

#include "capitulation/errors.hpp"
#include "capitulation/finite_group.hpp"
#include "capitulation/presentation.hpp"

using namespace capitulation;

namespace {

Word w(std::initializer_list<Letter> ls) { return Word(std::vector<Letter>(ls)); }

const std::vector<std::pair<std::string, std::vector<int>>> kCatalog = {
    {"Gm", {1, 4}}, {"Gm", {1, 7}}, {"Gm", {2, 5}}, {"Gm", {2, 9}},  {"Gm", {3, 5}},
    {"Gm", {3, 8}}, {"Gm", {4, 6}}, {"Gm", {4, 9}}, {"modular", {4}}, {"modular", {9}},
    {"modular_alt16", {}}, {"nonmeta16", {}}, {"abelian24", {}}, {"g1_16", {}}};

}  // namespace

TEST_CASE("words normalize on construction") {
  CHECK(w({{0, 2}, {0, -2}}).empty());
  CHECK(w({{0, 1}, {1, 1}, {1, -1}, {0, 2}}) == Word::generator(0, 3));
  CHECK(Word::generator(0, 0).empty());
  const Word ab = Word::generator(0) * Word::generator(1);
  CHECK(ab.inverse() == w({{1, -1}, {0, -1}}));
  CHECK(commutator(Word::generator(0), Word::generator(1)) ==
        w({{0, -1}, {1, -1}, {0, 1}, {1, 1}}));
  CHECK(Word::generator(0).conjugate_by(Word::generator(1)) == w({{1, -1}, {0, 1}, {1, 1}}));
  CHECK(ab.length() == 2);
}

TEST_CASE("parse: relation style becomes a relator") {
  const auto p = parse("<a,b | a^8, b^2, a^b = a^5>");
  CHECK(p.generators == std::vector<std::string>{"a", "b"});
  REQUIRE(p.relators.size() == 3);
  CHECK(p.relators[0] == Word::generator(0, 8));
  CHECK(p.relators[1] == Word::generator(1, 2));
  CHECK(p.relators[2] == w({{1, -1}, {0, 1}, {1, 1}, {0, -5}}));
}

TEST_CASE("parse: cyclic group and commutator") {
  const auto p = parse("<a | a^2>");
  CHECK(p.generators.size() == 1);
  CHECK(p.relators == std::vector<Word>{Word::generator(0, 2)});
  const auto q = parse("<a,b | a^2, b^4, [a,b]>");
  CHECK(q.relators[2] == w({{0, -1}, {1, -1}, {0, 1}, {1, 1}}));
}

TEST_CASE("parse: grouping, word exponents, identity, juxtaposition") {
  const auto p = parse("<a,b | (ab)^2, a^(b a), 1 = a^-3, a*b*a>");
  CHECK(p.relators[0] == w({{0, 1}, {1, 1}, {0, 1}, {1, 1}}));
  CHECK(p.relators[1] == w({{0, -1}, {1, -1}, {0, 1}, {1, 1}, {0, 1}}));
  CHECK(p.relators[2] == Word::generator(0, 3));
  CHECK(p.relators[3] == w({{0, 1}, {1, 1}, {0, 1}}));
  // a declared multi-letter name wins over splitting
  const auto q = parse("<x, xy, y | xy>");
  CHECK(q.relators[0] == Word::generator(1));
  // an undeclared name splits into declared ones when the split is unique
  CHECK(parse("<a,b | ab>").relators[0] == w({{0, 1}, {1, 1}}));
  CHECK(parse("<c,d | cd^2>").relators[0] == w({{0, 1}, {1, 2}}));
  CHECK_THROWS_AS(parse("<x,xy,yz,z | xyz>"), ParseError);
  // whitespace is insignificant
  CHECK(parse("< a , b|a ^ 2 , b^ -4>") == parse("<a,b|a^2,b^-4>"));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse("<a,b | a^2, c>");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 12);
  }
  CHECK_THROWS_AS(parse("<a | a^0>"), ParseError);
  CHECK_THROWS_AS(parse("<a | a^1048577>"), ParseError);
  CHECK_NOTHROW(parse("<a | a^1048576>"));
  CHECK_THROWS_AS(parse("<a | a^2"), ParseError);
  CHECK_THROWS_AS(parse("<a,a | a>"), ParseError);
  CHECK_THROWS_AS(parse("<a | [a a]>"), ParseError);
  CHECK_THROWS_AS(parse("<a | a^->"), ParseError);
  CHECK_THROWS_AS(parse("<a,b,c,d,e,f,g,h,i | a>"), ParseError);
  CHECK_THROWS_AS(parse("<a | > "), ParseError);
  CHECK_THROWS_AS(parse("<a | a> trailing"), ParseError);
}

TEST_CASE("render round-trips every catalog presentation") {
  for (const auto& [name, params] : kCatalog) {
    const auto p = catalog(name, params);
    CAPTURE(name);
    CHECK(parse(render(p)) == p);
  }
  CHECK(render(parse("<a,b | a^8, b^2, a^b = a^5>")) == "<a,b | a^8, b^2, b^-1 a b a^-5>");
}

TEST_CASE("catalog presentations match the tabulated forms") {
  CHECK(catalog("Gm", {3, 5}) == parse("<a,b | a^8, b^4 a^-4, a^b = a^-1>"));
  CHECK(catalog("Gm", {1, 5}) == parse("<a,b | a^8, b^4, a^b = a^-1>"));
  CHECK(catalog("Gm", {2, 6}) == parse("<a,b | a^16, b^4, a^b = a^-1 a^8>"));
  CHECK(catalog("Gm", {4, 6}) == parse("<a,b | a^16, b^4, a^b = a^-1 a^4>"));
  CHECK(catalog("modular", {4}) == parse("<a,b | a^8, b^2, [a,b] = a^4>"));
  CHECK(catalog("modular_alt16", {}) == parse("<a,b | a^2, b^8, b^a = b^5>"));
  CHECK(catalog("nonmeta16", {}) == parse("<a,b,c | a^2, b^4, c^2, c^-1 [a,b], [a,c], [b,c]>"));
  CHECK(catalog("abelian24", {}) == parse("<a,b | a^2, b^4, [a,b]>"));
  CHECK(catalog("g1_16", {}) == parse("<a,b | a^4, b^4, a^b = a^-1>"));
  CHECK(describe(*catalog("Gm", {3, 5}).tag) == "Gm(3,5)");
  CHECK(describe(*catalog("nonmeta16", {}).tag) == "nonmeta16");
}

TEST_CASE("catalog parameter ranges") {
  CHECK_THROWS_AS(catalog("Gm", {1, 3}), CatalogError);
  CHECK_THROWS_AS(catalog("Gm", {2, 4}), CatalogError);
  CHECK_THROWS_AS(catalog("Gm", {3, 4}), CatalogError);
  CHECK_THROWS_AS(catalog("Gm", {4, 5}), CatalogError);
  CHECK_THROWS_AS(catalog("Gm", {5, 7}), CatalogError);
  CHECK_THROWS_AS(catalog("Gm", {2}), CatalogError);
  CHECK_THROWS_AS(catalog("modular", {3}), CatalogError);
  CHECK_THROWS_AS(catalog("nonmeta16", {1}), CatalogError);
  CHECK_THROWS_AS(catalog("quaternion", {}), CatalogError);
  CHECK_NOTHROW(catalog("Gm", {4, 6}));
}

TEST_CASE("desugared relators hold in the realized group") {
  // Relation style and relator style agree after enumeration.
  for (const auto& [name, params] : kCatalog) {
    const auto p = catalog(name, params);
    if (p.tag && p.tag->params.size() == 2 && p.tag->params[1] > 7) continue;
    const FiniteGroup G = enumerate(p);
    for (const auto& r : p.relators) CHECK(eval_word(G, r) == 0);
  }
  const FiniteGroup G = enumerate(catalog("nonmeta16", {}));
  const auto commuting = parse("<a,b,c | [a,b]^2>").relators[0];
  CHECK(eval_word(G, commuting) == 0);
}
