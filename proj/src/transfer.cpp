#include "capitulation/transfer.hpp"

#include <algorithm>

#include "capitulation/errors.hpp"

namespace capitulation {

namespace {

struct LeftCosets {
  std::vector<Element> id;               // element -> coset index
  std::vector<std::vector<Element>> members;
};

LeftCosets left_cosets(const FiniteGroup& G, const Subgroup& H) {
  LeftCosets lc{std::vector<Element>(G.order(), kNone), {}};
  for (Element x = 0; x < G.order(); ++x) {
    if (lc.id[x] != kNone) continue;
    const Element k = static_cast<Element>(lc.members.size());
    lc.members.emplace_back();
    for (Element h : H.elements()) {
      const Element y = G.mul(x, h);
      lc.id[y] = k;
      lc.members.back().push_back(y);
    }
    std::sort(lc.members.back().begin(), lc.members.back().end());
  }
  return lc;
}

// V(g) as an element of H/H'.
Element transfer_of(const FiniteGroup& G, const Subgroup& H, const Quotient& HH,
                    const LeftCosets& lc, const std::vector<Element>& transversal,
                    Element g, std::mt19937_64* rng) {
  const std::size_t t = lc.members.size();
  std::vector<bool> visited(t, false);
  std::vector<Element> start(t);
  for (Element i = 0; i < t; ++i) start[i] = i;
  if (rng) std::shuffle(start.begin(), start.end(), *rng);
  const FiniteGroup& A = HH.group;
  Element product = 0;
  for (Element s : start) {
    if (visited[s]) continue;
    std::size_t f = 0;
    Element k = s;
    do {
      visited[k] = true;
      k = lc.id[G.mul(g, lc.members[k].front())];
      ++f;
    } while (k != s);
    const Element x = transversal[s];
    const Element term = G.mul(G.mul(G.inv(x), G.pow(g, static_cast<std::int64_t>(f))), x);
    if (!H.contains(term)) throw ConsistencyError("transfer term outside the target subgroup");
    product = A.mul(product, HH.projection[term]);
  }
  return product;
}

}  // namespace

TransferMap transfer(const FiniteGroup& G, const Subgroup& H, std::mt19937_64* rng) {
  if (&H.parent() != &G) throw NotSubgroup();
  const Subgroup D = derived_subgroup(G);
  Quotient source = quotient(G, D);
  Subgroup HD = commutator_subgroup(G, H, H);
  Quotient target = section(H, HD);
  const LeftCosets lc = left_cosets(G, H);

  std::vector<Element> transversal(lc.members.size());
  for (std::size_t k = 0; k < lc.members.size(); ++k) {
    const auto& m = lc.members[k];
    transversal[k] = rng ? m[std::uniform_int_distribution<std::size_t>(0, m.size() - 1)(*rng)]
                         : m.front();
  }

  // Two representatives per class of G/G': the least and the greatest id.
  const FiniteGroup& S = source.group;
  std::vector<Element> lo(S.order(), kNone), hi(S.order(), kNone);
  for (Element x = 0; x < G.order(); ++x) {
    const Element q = source.projection[x];
    if (lo[q] == kNone) lo[q] = x;
    hi[q] = x;
  }
  std::vector<Element> images(S.order());
  for (Element q = 0; q < S.order(); ++q) {
    images[q] = transfer_of(G, H, target, lc, transversal, lo[q], rng);
    if (hi[q] != lo[q] &&
        transfer_of(G, H, target, lc, transversal, hi[q], rng) != images[q])
      throw ConsistencyError("transfer is not constant on a class of G/G'");
  }
  const FiniteGroup& T = target.group;
  for (Element p = 0; p < S.order(); ++p)
    for (Element q = 0; q < S.order(); ++q)
      if (images[S.mul(p, q)] != T.mul(images[p], images[q]))
        throw ConsistencyError("transfer is not a homomorphism");

  std::vector<Element> kernel;
  for (Element q = 0; q < S.order(); ++q)
    if (images[q] == 0) kernel.push_back(q);
  return TransferMap{std::move(source), H, std::move(HD), std::move(target), std::move(images),
                     std::move(kernel)};
}

TausskyLetter taussky(const TransferMap& V) {
  if (V.target_subgroup.index() != 2) throw IndexNotTwo();
  std::vector<bool> norm(V.source.group.order(), false);
  for (Element h : V.target_subgroup.elements()) norm[V.source.projection[h]] = true;
  for (Element q : V.kernel)
    if (q != 0 && norm[q]) return TausskyLetter::A;
  return TausskyLetter::B;
}

std::string monomial_string(int epsilon, int delta) {
  std::string s;
  if (epsilon) s += 'c';
  if (delta == 1) s += 'd';
  if (delta > 1) s += "d^" + std::to_string(delta);
  return s.empty() ? "1" : s;
}

std::string kernel_string(const std::vector<std::string>& monomials) {
  std::string s = "{";
  for (std::size_t i = 0; i < monomials.size(); ++i) s += (i ? ", " : "") + monomials[i];
  return s + "}";
}

std::string CapitulationReport::triple_string() const {
  return triple[0] + "," + triple[1] + "," + triple[2];
}

namespace {

SubgroupCapitulation analyze_subgroup(const FiniteGroup& G, const TwoFourLayout& layout,
                                      const Subgroup& H, std::string label, bool quadratic) {
  const TransferMap V = transfer(G, H);
  // V.source and layout.abelianization are built identically from G, so
  // their element ids coincide; checked here rather than assumed.
  if (V.source.projection != layout.abelianization.projection)
    throw ConsistencyError("abelianization ids differ between transfer and layout");

  std::vector<std::pair<std::pair<int, int>, Element>> ordered;
  for (Element q : V.kernel) {
    const auto [e, d] = layout.monomial(q);
    ordered.push_back({{d, e}, q});
  }
  std::sort(ordered.begin(), ordered.end());

  SubgroupCapitulation out{std::move(label), H, {}, {}, std::nullopt, 0, {}, V.target_derived};
  for (const auto& [key, q] : ordered) {
    out.kernel.push_back(q);
    out.kernel_monomials.push_back(monomial_string(key.second, key.first));
  }
  if (quadratic) out.letter = taussky(V);
  out.class_number = H.order() / V.target_derived.order();
  out.class_group = abelian_type(V.target.group);
  return out;
}

}  // namespace

CapitulationReport capitulation_report(const FiniteGroup& G, std::optional<Element> c_override) {
  TwoFourLayout layout = two_four_layout(G, c_override);
  const GroupClass cls = classify(G);
  auto quad = [&](int i) {
    return analyze_subgroup(G, layout, layout.quadratic[static_cast<std::size_t>(i)],
                            "H" + std::to_string(i + 1) + ",2", true);
  };
  auto quart = [&](int i) {
    return analyze_subgroup(G, layout, layout.quartic[static_cast<std::size_t>(i)],
                            "H" + std::to_string(i + 1) + ",4", false);
  };
  std::array<SubgroupCapitulation, 3> quadratic{quad(0), quad(1), quad(2)};
  std::array<SubgroupCapitulation, 3> quartic{quart(0), quart(1), quart(2)};
  std::array<std::string, 3> triple;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t size = quadratic[i].kernel.size();
    if (size == 2)
      triple[i] = *quadratic[i].letter == TausskyLetter::A ? "2A" : "2B";
    else
      triple[i] = std::to_string(size);
  }
  return CapitulationReport{cls, std::move(layout), std::move(quadratic), std::move(quartic),
                            std::move(triple)};
}

}  // namespace capitulation
