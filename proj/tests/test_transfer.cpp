#include "doctest.h"

#include "capitulation/errors.hpp"
#include "capitulation/transfer.hpp"
#include "oracles.hpp"

using namespace capitulation;

namespace {

Element at(const FiniteGroup& G, int g, std::int64_t e = 1) {
  return eval_word(G, Word::generator(g, e));
}

// V(g) as an element of H/H', from the library map.
Element image(const TransferMap& V, Element g) { return V.images[V.source.projection[g]]; }

void compare_with_oracle(const FiniteGroup& G, const Subgroup& H) {
  const TransferMap V = transfer(G, H);
  const std::vector<Element> hs(H.elements().begin(), H.elements().end());
  for (Element g = 0; g < G.order(); ++g) {
    const Element h = oracle::transfer(G, hs, g);
    REQUIRE(H.contains(h));
    REQUIRE(V.target.projection[h] == image(V, g));
  }
}

std::string name_of(const Presentation& p) { return p.tag ? describe(*p.tag) : render(p); }

}  // namespace

TEST_CASE("transfer agrees with the right-coset definition") {
  for (const auto& p : oracle::small_catalog()) {
    const FiniteGroup G = enumerate(p);
    if (G.order() > 128 || !(abelianization_type(G) == AbelianType{{2, 4}})) continue;
    CAPTURE(name_of(p));
    const TwoFourLayout L = two_four_layout(G);
    for (const auto& H : L.quadratic) compare_with_oracle(G, H);
    for (const auto& H : L.quartic) compare_with_oracle(G, H);
  }
  for (const auto& text : oracle::extra_nonmetacyclic()) {
    const FiniteGroup G = enumerate(parse(text));
    const TwoFourLayout L = two_four_layout(G);
    for (const auto& H : L.quadratic) compare_with_oracle(G, H);
    for (const auto& H : L.quartic) compare_with_oracle(G, H);
  }
  // outside the (2,4) setting
  const FiniteGroup S3 = enumerate(parse("<a,b | a^3, b^2, (ab)^2>"));
  compare_with_oracle(S3, closure(S3, {at(S3, 0)}));
  compare_with_oracle(S3, closure(S3, {at(S3, 1)}));
  compare_with_oracle(S3, trivial_subgroup(S3));
  const FiniteGroup D8 = enumerate(parse("<a,b | a^4, b^2, (ab)^2>"));
  compare_with_oracle(D8, closure(D8, {at(D8, 1)}));
}

TEST_CASE("transfer of the modular group of order 16") {
  const FiniteGroup G = enumerate(catalog("modular_alt16", {}));
  const TwoFourLayout L = two_four_layout(G);
  const Element a = at(G, 0), b2 = at(G, 1, 2), b4 = at(G, 1, 4);

  const TransferMap V1 = transfer(G, L.quadratic[0]);
  CHECK(image(V1, a) == 0);
  CHECK(image(V1, b2) == V1.target.projection[b4]);

  const TransferMap V3 = transfer(G, L.quadratic[2]);
  CHECK(image(V3, a) == V3.target.projection[G.inv(b4)]);
  CHECK(image(V3, b2) == V3.target.projection[b4]);
}

TEST_CASE("transfer of an abelian group is a power map") {
  const FiniteGroup G = enumerate(catalog("abelian24", {}));
  const TwoFourLayout L = two_four_layout(G);
  for (const auto* list : {&L.quadratic, &L.quartic})
    for (const auto& H : *list) {
      const TransferMap V = transfer(G, H);
      for (Element x = 0; x < G.order(); ++x)
        CHECK(image(V, x) == V.target.projection[G.pow(x, static_cast<std::int64_t>(H.index()))]);
    }
}

TEST_CASE("transfer is independent of the transversal") {
  for (const auto& p : {catalog("Gm", {2, 6}), catalog("nonmeta16", {}), catalog("Gm", {4, 7})}) {
    CAPTURE(name_of(p));
    const FiniteGroup G = enumerate(p);
    const TwoFourLayout L = two_four_layout(G);
    for (const auto& H : L.quartic) {
      const TransferMap base = transfer(G, H);
      for (std::uint64_t seed : {1u, 2u, 3u, 99u}) {
        std::mt19937_64 rng(seed);
        CHECK(transfer(G, H, &rng).images == base.images);
      }
    }
  }
}

TEST_CASE("kernels are subgroups of G/G'") {
  const FiniteGroup G = enumerate(catalog("Gm", {3, 6}));
  const TwoFourLayout L = two_four_layout(G);
  const TransferMap V = transfer(G, L.quadratic[1]);
  const FiniteGroup& A = V.source.group;
  for (Element x : V.kernel)
    for (Element y : V.kernel)
      CHECK(std::binary_search(V.kernel.begin(), V.kernel.end(), A.mul(x, y)));
  CHECK(std::is_sorted(V.kernel.begin(), V.kernel.end()));
  CHECK(V.kernel.front() == 0);
}

TEST_CASE("Taussky letters") {
  const FiniteGroup G = enumerate(catalog("modular_alt16", {}));
  const TwoFourLayout L = two_four_layout(G);
  CHECK(taussky(transfer(G, L.quadratic[0])) == TausskyLetter::B);
  CHECK(taussky(transfer(G, L.quadratic[2])) == TausskyLetter::A);
  CHECK_THROWS_AS(taussky(transfer(G, L.quartic[0])), IndexNotTwo);
}

TEST_CASE("monomials and kernel sets") {
  CHECK(monomial_string(0, 0) == "1");
  CHECK(monomial_string(1, 0) == "c");
  CHECK(monomial_string(0, 1) == "d");
  CHECK(monomial_string(1, 1) == "cd");
  CHECK(monomial_string(0, 3) == "d^3");
  CHECK(monomial_string(1, 2) == "cd^2");
  CHECK(kernel_string({"1", "c", "d^2", "cd^2"}) == "{1, c, d^2, cd^2}");
  CHECK(kernel_string({"1"}) == "{1}");
}

TEST_CASE("capitulation reports of the catalog") {
  struct Row {
    Presentation p;
    std::string triple;
  };
  const std::vector<Row> rows = {
      {catalog("modular_alt16", {}), "2B,2B,2A"}, {catalog("modular", {4}), "2B,2B,2A"},
      {catalog("nonmeta16", {}), "4,4,2A"},       {catalog("abelian24", {}), "4,4,4"},
      {catalog("g1_16", {}), "2A,2A,4"},          {catalog("Gm", {1, 6}), "2A,2A,4"},
      {catalog("Gm", {2, 6}), "2A,2A,2A"},        {catalog("Gm", {3, 6}), "2A,2A,2A"},
      {catalog("Gm", {4, 7}), "2A,2A,2A"}};
  for (const auto& r : rows) {
    CAPTURE(name_of(r.p));
    const CapitulationReport R = capitulation_report(enumerate(r.p));
    CHECK(R.triple_string() == r.triple);
    CHECK(R.quadratic[0].label == "H1,2");
    CHECK(R.quartic[2].label == "H3,4");
    for (const auto& s : R.quadratic) CHECK(s.letter.has_value());
    for (const auto& s : R.quartic) CHECK_FALSE(s.letter.has_value());
  }

  const auto R2 = capitulation_report(enumerate(catalog("Gm", {2, 6})));
  CHECK(R2.quadratic[2].class_number == 32);
  CHECK(R2.quadratic[2].class_group == AbelianType{{2, 16}});
  CHECK(R2.group_class == GroupClass::MetacyclicNonModular);

  const auto R3 = capitulation_report(enumerate(catalog("Gm", {3, 6})));
  CHECK(kernel_string(R3.quadratic[2].kernel_monomials) == "{1, c}");

  const auto R4 = capitulation_report(enumerate(catalog("Gm", {4, 7})));
  CHECK(kernel_string(R4.quartic[0].kernel_monomials) == "{1, d, d^2, d^3}");

  const auto RM = capitulation_report(enumerate(catalog("modular_alt16", {})));
  CHECK(kernel_string(RM.quadratic[2].kernel_monomials) == "{1, cd^2}");
  CHECK(RM.quadratic[2].class_group == AbelianType{{2, 4}});
  for (const auto& s : RM.quartic) CHECK(s.kernel.size() == 4);

  const auto RN = capitulation_report(enumerate(catalog("nonmeta16", {})));
  CHECK(kernel_string(RN.quadratic[2].kernel_monomials) == "{1, d^2}");
  CHECK(RN.quadratic[2].class_group == AbelianType{{2, 2, 2}});

  const auto RA = capitulation_report(enumerate(catalog("abelian24", {})));
  CHECK(kernel_string(RA.quadratic[2].kernel_monomials) == "{1, c, d^2, cd^2}");
  CHECK(RA.quartic[2].kernel.size() == 8);
}

TEST_CASE("reports need a (2,4) abelianization") {
  CHECK_THROWS_AS(capitulation_report(enumerate(catalog("modular", {5}))), OutsideHypothesis);
  CHECK_THROWS_AS(capitulation_report(enumerate(parse("<a | a^2>"))), OutsideHypothesis);
}
