#include "capitulation/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "capitulation/errors.hpp"

namespace capitulation {

namespace {

int log2_exact(std::size_t n) {
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

bool is_power_of_two(std::size_t n) { return n && (n & (n - 1)) == 0; }

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Grows `elems` (closed under the previous generators) to the subgroup
// generated by `gens`.
void close_under(const FiniteGroup& G, const std::vector<Element>& gens,
                 std::vector<Element>& elems, std::vector<bool>& in) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Element g : gens) {
      const Element y = G.mul(elems[i], g);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  }
}

}  // namespace

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<Element> elements)
    : parent_(&parent), elements_(std::move(elements)), member_(parent.order(), false) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty() || elements_.front() != 0) throw NotSubgroup();
  for (Element x : elements_) {
    if (x >= parent.order()) throw NotSubgroup();
    member_[x] = true;
  }
  for (Element x : elements_) {
    if (!member_[parent.inv(x)]) throw NotSubgroup();
    for (Element y : elements_)
      if (!member_[parent.mul(x, y)]) throw NotSubgroup();
  }
  if (parent.order() % elements_.size() != 0) throw NotSubgroup();
}

Subgroup::Subgroup(Trusted, const FiniteGroup& parent, std::vector<Element> elements,
                   std::vector<Element> generators)
    : parent_(&parent), elements_(std::move(elements)), member_(parent.order(), false) {
  std::sort(elements_.begin(), elements_.end());
  for (Element x : elements_) member_[x] = true;
  if (parent.order() % elements_.size() != 0)
    throw ConsistencyError("subgroup order does not divide group order");
  generators_ = std::move(generators);
}

bool Subgroup::contains(const Subgroup& other) const {
  return std::all_of(other.elements_.begin(), other.elements_.end(),
                     [&](Element x) { return member_[x]; });
}

const std::vector<Element>& Subgroup::generators() const {
  if (!generators_) generators_ = closure(*parent_, elements_).generators();
  return *generators_;
}

bool Subgroup::is_normal() const {
  if (!normal_) {
    bool normal = true;
    for (Element g : parent_->generator_ids()) {
      for (Element h : generators()) {
        if (!member_[parent_->conjugate(h, g)]) {
          normal = false;
          break;
        }
      }
      if (!normal) break;
    }
    normal_ = normal;
  }
  return *normal_;
}

Subgroup closure(const FiniteGroup& G, std::span<const Element> seed) {
  std::vector<bool> in(G.order(), false);
  std::vector<Element> elems{0};
  std::vector<Element> gens;
  in[0] = true;
  for (Element s : seed) {
    if (s >= G.order()) throw InvalidArgument("element id out of range");
    if (in[s]) continue;
    gens.push_back(s);
    close_under(G, gens, elems, in);
  }
  return Subgroup(Subgroup::Trusted{}, G, std::move(elems), std::move(gens));
}

Subgroup closure(const FiniteGroup& G, std::initializer_list<Element> seed) {
  return closure(G, std::span<const Element>(seed.begin(), seed.size()));
}

Subgroup whole_group(const FiniteGroup& G) {
  return closure(G, G.generator_ids());
}

Subgroup trivial_subgroup(const FiniteGroup& G) { return closure(G, {}); }

Subgroup intersection(const Subgroup& A, const Subgroup& B) {
  std::vector<Element> common;
  for (Element x : A.elements())
    if (B.contains(x)) common.push_back(x);
  return closure(A.parent(), common);
}

Subgroup join(const Subgroup& A, const Subgroup& B) {
  std::vector<Element> seed(A.generators());
  seed.insert(seed.end(), B.generators().begin(), B.generators().end());
  return closure(A.parent(), seed);
}

Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& A, const Subgroup& B) {
  std::vector<bool> seen(G.order(), false);
  std::vector<Element> seed;
  for (Element x : A.elements()) {
    for (Element y : B.elements()) {
      const Element c = G.commutator(x, y);
      if (!seen[c]) {
        seen[c] = true;
        seed.push_back(c);
      }
    }
  }
  return closure(G, seed);
}

Subgroup derived_subgroup(const FiniteGroup& G) {
  const Subgroup all = whole_group(G);
  return commutator_subgroup(G, all, all);
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& G) {
  const Subgroup all = whole_group(G);
  std::vector<Subgroup> series{all};
  for (;;) {
    Subgroup next = commutator_subgroup(G, series.back(), all);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  if (is_two_group(G) && !series.back().is_trivial())
    throw ConsistencyError("lower central series of a 2-group did not reach 1");
  return series;
}

const Subgroup& gamma(const std::vector<Subgroup>& series, std::size_t i) {
  return series[std::min(i, series.size()) - 1];
}

std::vector<Subgroup> index_two_subgroups(const FiniteGroup& G) {
  const std::size_t k = G.generator_count();
  std::vector<Subgroup> result;
  if (k >= 24) throw InvalidArgument("too many generators for homomorphism search");
  // Breadth-first tree over the Cayley graph, shared by every assignment.
  std::vector<Element> order{0};
  std::vector<bool> seen(G.order(), false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t g = 0; g < k; ++g) {
      const Element y = G.act(order[i], g);
      if (!seen[y]) {
        seen[y] = true;
        order.push_back(y);
      }
    }
  std::vector<int> parity(G.order());
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::fill(parity.begin(), parity.end(), -1);
    parity[0] = 0;
    bool ok = true;
    for (std::size_t i = 0; i < order.size() && ok; ++i) {
      const Element x = order[i];
      for (std::size_t g = 0; g < k; ++g) {
        const Element y = G.act(x, g);
        const int want = parity[x] ^ static_cast<int>((mask >> g) & 1u);
        if (parity[y] < 0) {
          parity[y] = want;
        } else if (parity[y] != want) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<Element> kernel;
    for (Element x = 0; x < G.order(); ++x)
      if (parity[x] == 0) kernel.push_back(x);
    result.push_back(closure(G, kernel));
  }
  return result;
}

Subgroup power_subgroup(const FiniteGroup& G, const Subgroup& S, std::int64_t k) {
  std::vector<Element> seed;
  seed.reserve(S.order());
  for (Element x : S.elements()) seed.push_back(G.pow(x, k));
  return closure(G, seed);
}

Subgroup frattini(const FiniteGroup& G) {
  if (!is_two_group(G)) throw NotTwoGroup();
  Subgroup meet = whole_group(G);
  for (const Subgroup& m : index_two_subgroups(G)) meet = intersection(meet, m);
  Subgroup squares = power_subgroup(G, whole_group(G), 2);
  if (!(meet == squares)) throw FrattiniMismatch();
  return meet;
}

Subgroup g22(const FiniteGroup& G) {
  const Subgroup phi = frattini(G);
  return join(power_subgroup(G, phi, 2), commutator_subgroup(G, whole_group(G), phi));
}

Quotient quotient(const FiniteGroup& G, const Subgroup& N) {
  if (!N.is_normal()) throw NotNormal();
  std::vector<Element> coset(G.order(), kNone);
  Element count = 0;
  for (Element x = 0; x < G.order(); ++x) {
    if (coset[x] != kNone) continue;
    for (Element n : N.elements()) coset[G.mul(x, n)] = count;
    ++count;
  }
  std::vector<Element> rep(count);
  for (Element x = G.order(); x-- > 0;) rep[coset[x]] = x;
  std::vector<std::vector<Element>> actions(G.generator_count(), std::vector<Element>(count));
  for (std::size_t g = 0; g < G.generator_count(); ++g)
    for (Element q = 0; q < count; ++q) actions[g][q] = coset[G.act(rep[q], g)];
  Quotient Q{FiniteGroup::from_regular_action(actions), std::vector<Element>(G.order())};
  for (Element x = 0; x < G.order(); ++x) Q.projection[x] = eval_word(Q.group, G.label(x));
  if (Q.group.order() * N.order() != G.order())
    throw ConsistencyError("quotient order mismatch");
  return Q;
}

EmbeddedGroup as_group(const Subgroup& H) {
  const FiniteGroup& G = H.parent();
  const std::vector<Element>& gens = H.generators();
  std::vector<Element> local(G.order(), kNone);
  const auto elems = H.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<Element>(i);
  std::vector<std::vector<Element>> actions(gens.size(), std::vector<Element>(H.order()));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < elems.size(); ++i) actions[j][i] = local[G.mul(elems[i], gens[j])];
  EmbeddedGroup E{FiniteGroup::from_regular_action(actions), {}, std::vector<Element>(G.order(), kNone)};
  E.to_parent.resize(E.group.order());
  for (Element y = 0; y < E.group.order(); ++y) {
    Element x = 0;
    for (const Letter& l : E.group.label(y).letters()) {
      const Element g = gens[static_cast<std::size_t>(l.generator)];
      x = G.mul(x, G.pow(g, l.exponent));
    }
    E.to_parent[y] = x;
    E.from_parent[x] = y;
  }
  return E;
}

Quotient section(const Subgroup& H, const Subgroup& K) {
  if (!H.contains(K)) throw InvalidArgument("section H/K requires K <= H");
  EmbeddedGroup E = as_group(H);
  std::vector<Element> k_local;
  for (Element x : K.elements()) k_local.push_back(E.from_parent[x]);
  Subgroup K_in_H = closure(E.group, k_local);
  Quotient local = quotient(E.group, K_in_H);
  Quotient Q{std::move(local.group), std::vector<Element>(H.parent().order(), kNone)};
  for (Element x : H.elements()) Q.projection[x] = local.projection[E.from_parent[x]];
  return Q;
}

Subgroup preimage(const FiniteGroup& G, const Quotient& Q, std::span<const Element> targets) {
  std::vector<bool> want(Q.group.order(), false);
  for (Element t : targets) want[t] = true;
  std::vector<Element> elems;
  for (Element x = 0; x < G.order(); ++x)
    if (Q.projection[x] != kNone && want[Q.projection[x]]) elems.push_back(x);
  return closure(G, elems);
}

bool is_abelian(const FiniteGroup& G) {
  const auto gens = G.generator_ids();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (G.mul(gens[i], gens[j]) != G.mul(gens[j], gens[i])) return false;
  return true;
}

bool is_cyclic(const FiniteGroup& G) { return exponent(G) == G.order(); }

bool is_two_group(const FiniteGroup& G) { return is_power_of_two(G.order()); }

std::size_t exponent(const FiniteGroup& G) {
  std::size_t e = 1;
  for (Element x = 0; x < G.order(); ++x) e = std::lcm(e, element_order(G, x));
  return e;
}

std::size_t relative_exponent(const Subgroup& A, const Subgroup& B) {
  const FiniteGroup& G = A.parent();
  std::size_t e = 1;
  for (Element x : A.elements()) {
    std::size_t k = 1;
    for (Element y = x; !B.contains(y); y = G.mul(y, x)) ++k;
    e = std::lcm(e, k);
  }
  return e;
}

std::uint64_t AbelianType::order() const {
  std::uint64_t n = 1;
  for (auto f : factors) n *= f;
  return n;
}

std::string AbelianType::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "," : "") << factors[i];
  out << ')';
  return out.str();
}

AbelianType abelian_type(const FiniteGroup& A) {
  if (!is_abelian(A)) throw NotAbelian();
  // Per prime p: the p-part P, then the chain P > P^p > P^{p^2} > ...; the
  // number of cyclic factors of order >= p^k is log_p |P^{p^{k-1}} : P^{p^k}|.
  std::map<std::uint64_t, std::vector<int>> exps;  // p -> exponents, descending
  const std::uint64_t n = A.order();
  for (std::uint64_t p : prime_factors(n)) {
    std::uint64_t m = n;
    while (m % p == 0) m /= p;
    std::vector<Element> part;
    for (Element x = 0; x < A.order(); ++x) part.push_back(A.pow(x, static_cast<std::int64_t>(m)));
    Subgroup level = closure(A, part);
    std::vector<int> at_least;  // at_least[k-1] = #factors of order >= p^k
    while (!level.is_trivial()) {
      Subgroup next = power_subgroup(A, level, static_cast<std::int64_t>(p));
      std::size_t ratio = level.order() / next.order();
      int c = 0;
      while (ratio > 1) {
        ratio /= p;
        ++c;
      }
      at_least.push_back(c);
      level = std::move(next);
    }
    std::vector<int>& e = exps[p];
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      const int exactly = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
      for (int i = 0; i < exactly; ++i) e.push_back(static_cast<int>(k + 1));
    }
    std::sort(e.rbegin(), e.rend());
  }
  std::size_t count = 0;
  for (const auto& [p, e] : exps) count = std::max(count, e.size());
  AbelianType t;
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t f = 1;
    for (const auto& [p, e] : exps)
      if (i < e.size())
        for (int j = 0; j < e[i]; ++j) f *= p;
    t.factors.push_back(f);
  }
  std::reverse(t.factors.begin(), t.factors.end());
  if (t.order() != n) throw ConsistencyError("abelian invariants do not multiply to the order");
  return t;
}

AbelianType abelianization_type(const FiniteGroup& G) {
  return abelian_type(quotient(G, derived_subgroup(G)).group);
}

int rank(const FiniteGroup& G) {
  if (G.order() == 1) return 0;
  return log2_exact(frattini(G).index());
}

bool is_metacyclic_bruteforce(const FiniteGroup& G) {
  if (G.order() > kFullTableLimit) throw OrderTooLarge(G.order());
  const std::size_t n = G.order();
  std::vector<bool> done(n, false);  // x already seen as a generator of a tested <x>
  for (Element x = 0; x < n; ++x) {
    if (done[x]) continue;
    Subgroup N = closure(G, {x});
    for (Element y : N.elements())
      if (element_order(G, y) == N.order()) done[y] = true;
    if (!N.is_normal()) continue;
    const std::size_t target = n / N.order();
    for (Element g = 0; g < n; ++g) {
      std::size_t k = 1;
      for (Element y = g; !N.contains(y) && k <= target; y = G.mul(y, g)) ++k;
      if (k == target) return true;
    }
  }
  return false;
}

bool is_metacyclic_blackburn(const FiniteGroup& G) {
  if (!is_two_group(G)) throw NotTwoGroup();
  const Subgroup D = derived_subgroup(G);
  const EmbeddedGroup DG = as_group(D);
  const Subgroup phi_local = frattini(DG.group);
  std::vector<Element> phi;
  for (Element y : phi_local.elements()) phi.push_back(DG.to_parent[y]);
  const std::vector<Subgroup> lcs = lower_central_series(G);
  const Subgroup N = join(closure(G, phi), gamma(lcs, 3));
  return is_metacyclic_bruteforce(quotient(G, N).group);
}

bool is_modular(const FiniteGroup& G) {
  const std::size_t n = G.order();
  if (!is_power_of_two(n) || n < 16 || is_abelian(G)) return false;
  if (derived_subgroup(G).order() != 2) return false;
  for (Element x = 0; x < n; ++x)
    if (element_order(G, x) == n / 2) return true;
  return false;
}

bool is_metabelian(const FiniteGroup& G) {
  const Subgroup D = derived_subgroup(G);
  const auto& gens = D.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (G.mul(gens[i], gens[j]) != G.mul(gens[j], gens[i])) return false;
  return true;
}

std::string to_string(GroupClass c) {
  switch (c) {
    case GroupClass::Abelian: return "Abelian";
    case GroupClass::Modular: return "Modular";
    case GroupClass::MetacyclicNonModular: return "MetacyclicNonModular";
    case GroupClass::NonMetacyclic: return "NonMetacyclic";
    case GroupClass::OutsideHypothesis: return "OutsideHypothesis";
  }
  return "?";
}

GroupClass classify(const FiniteGroup& G) {
  if (!is_two_group(G)) return GroupClass::OutsideHypothesis;
  if (!(abelianization_type(G) == AbelianType{{2, 4}})) return GroupClass::OutsideHypothesis;
  const bool brute = is_metacyclic_bruteforce(G);
  const bool blackburn = is_metacyclic_blackburn(G);
  if (brute != blackburn)
    throw ConsistencyError("metacyclicity tests disagree (brute force vs Blackburn quotient)");
  if (is_abelian(G)) return GroupClass::Abelian;
  if (is_modular(G)) return GroupClass::Modular;
  return brute ? GroupClass::MetacyclicNonModular : GroupClass::NonMetacyclic;
}

std::pair<int, int> TwoFourLayout::monomial(Element q) const {
  for (int e = 0; e < 2; ++e)
    for (int dl = 0; dl < 4; ++dl)
      if (element(e, dl) == q) return {e, dl};
  throw ConsistencyError("class element is not a monomial in c and d");
}

Element TwoFourLayout::element(int epsilon, int delta) const {
  const FiniteGroup& Q = abelianization.group;
  return Q.mul(Q.pow(c, epsilon), Q.pow(d, delta));
}

TwoFourLayout two_four_layout(const FiniteGroup& G, std::optional<Element> c_override) {
  if (!is_two_group(G)) throw OutsideHypothesis();
  Subgroup D = derived_subgroup(G);
  Quotient Q = quotient(G, D);
  if (!(abelian_type(Q.group) == AbelianType{{2, 4}})) throw OutsideHypothesis();
  const FiniteGroup& A = Q.group;

  std::vector<Element> min_elem(A.order(), kNone);
  for (Element x = G.order(); x-- > 0;) min_elem[Q.projection[x]] = x;
  auto pick = [&](auto&& accept) {
    Element best = kNone;
    for (Element q = 0; q < A.order(); ++q)
      if (accept(q) && (best == kNone || min_elem[q] < min_elem[best])) best = q;
    return best;
  };
  const Element d = pick([&](Element q) { return element_order(A, q) == 4; });
  const Element d2 = A.mul(d, d);
  const auto outside_d = [&](Element q) {
    return element_order(A, q) == 2 && q != d2;
  };
  Element c = pick(outside_d);
  if (c_override) {
    if (*c_override >= A.order() || !outside_d(*c_override))
      throw InvalidArgument("class generator c must have order 2 outside <d>");
    c = *c_override;
  }
  const Element cd = A.mul(c, d);
  const Element cd2 = A.mul(c, d2);
  auto pre = [&](std::initializer_list<Element> gens) {
    const Subgroup in_a = closure(A, gens);
    return preimage(G, Q, in_a.elements());
  };
  std::array<Subgroup, 3> quadratic{pre({d}), pre({cd}), pre({c, d2})};
  std::array<Subgroup, 3> quartic{pre({c}), pre({cd2}), pre({d2})};
  return TwoFourLayout{std::move(D), std::move(Q), c, d, std::move(quadratic), std::move(quartic)};
}

}  // namespace capitulation
