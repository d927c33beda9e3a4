#include "capitulation/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>

#include "capitulation/errors.hpp"
#include "capitulation/finite_group.hpp"
#include "capitulation/structure.hpp"
#include "capitulation/transfer.hpp"

namespace capitulation::verify {

namespace {

const std::vector<std::string> kFamilies{"Gm", "abelian24", "g1_16", "modular", "modular_alt16",
                                         "nonmeta16"};

// Least n for Gm(m, n), indexed by m.
constexpr int kGmMinN[] = {0, 4, 5, 5, 6};

bool is_type(const AbelianType& t, std::initializer_list<std::uint64_t> f) {
  return t.factors == std::vector<std::uint64_t>(f);
}

// (2, 2^m) with m >= lo
bool is_two_by(const AbelianType& t, std::uint64_t lo) {
  return t.factors.size() == 2 && t.factors[0] == 2 && t.factors[1] >= (std::uint64_t{1} << lo);
}

bool is_cyclic_type(const AbelianType& t) { return t.factors.size() <= 1; }

std::string yn(bool b) { return b ? "yes" : "no"; }

class Checker {
 public:
  explicit Checker(std::string instance) : instance_(std::move(instance)) {}

  void expect(const std::string& theorem, const std::function<std::string()>& body) {
    Outcome o{theorem, instance_, false, {}};
    try {
      o.detail = body();
      o.pass = o.detail.empty();
    } catch (const std::exception& e) {
      o.detail = std::string("exception: ") + e.what();
    }
    out_.push_back(std::move(o));
  }

  std::vector<Outcome> take() { return std::move(out_); }

 private:
  std::string instance_;
  std::vector<Outcome> out_;
};

// Which Gm(m, .) a Gm-like instance is; g1_16 is literally Gm(1,4).
std::optional<std::pair<int, int>> gm_params(const CatalogTag& tag) {
  if (tag.name == "Gm") return std::pair{tag.params[0], tag.params[1]};
  if (tag.name == "g1_16") return std::pair{1, 4};
  return std::nullopt;
}

struct Transfers {
  std::array<TransferMap, 6> maps;  // H1,2 H2,2 H3,2 H1,4 H2,4 H3,4
};

const Subgroup& layout_subgroup(const TwoFourLayout& L, std::size_t k) {
  return k < 3 ? L.quadratic[k] : L.quartic[k - 3];
}

std::string label_of(std::size_t k) {
  return "H" + std::to_string(k % 3 + 1) + (k < 3 ? ",2" : ",4");
}

}  // namespace

std::vector<Instance> instances(int max_n, const std::vector<std::string>& families) {
  if (max_n < kMinMaxN || max_n > kMaxMaxN)
    throw InvalidArgument("--max-n must lie in [4, 9], got " + std::to_string(max_n));
  for (const auto& f : families)
    if (std::find(kFamilies.begin(), kFamilies.end(), f) == kFamilies.end())
      throw InvalidArgument("unknown family '" + f + "'");
  auto wanted = [&](const std::string& f) {
    return families.empty() || std::find(families.begin(), families.end(), f) != families.end();
  };
  std::vector<Instance> out;
  auto add = [&](const std::string& name, std::vector<int> params, std::size_t order) {
    if (wanted(name) && order <= (std::size_t{1} << max_n))
      out.push_back(Instance{catalog(name, params), order});
  };
  for (int m = 1; m <= 4; ++m)
    for (int n = kGmMinN[m]; n <= max_n; ++n) add("Gm", {m, n}, std::size_t{1} << n);
  add("abelian24", {}, 8);
  add("g1_16", {}, 16);
  for (int n = 4; n <= max_n; ++n) add("modular", {n}, std::size_t{1} << n);
  add("modular_alt16", {}, 16);
  add("nonmeta16", {}, 16);
  std::stable_sort(out.begin(), out.end(), [](const Instance& a, const Instance& b) {
    const auto& x = *a.presentation.tag;
    const auto& y = *b.presentation.tag;
    return std::tie(x.name, x.params) < std::tie(y.name, y.params);
  });
  return out;
}

std::vector<Outcome> check(const Instance& inst) {
  const std::string name =
      inst.presentation.tag ? describe(*inst.presentation.tag) : render(inst.presentation);
  Checker ck(name);

  std::unique_ptr<FiniteGroup> Gp;
  ck.expect("Orders", [&]() -> std::string {
    Gp = std::make_unique<FiniteGroup>(enumerate(inst.presentation));
    if (Gp->order() != inst.expected_order)
      return "order " + std::to_string(Gp->order()) + ", expected " +
             std::to_string(inst.expected_order);
    return {};
  });
  if (!Gp) return ck.take();
  const FiniteGroup& G = *Gp;
  const std::size_t N = G.order();

  const auto lcs = lower_central_series(G);
  const Subgroup D = derived_subgroup(G);

  ck.expect("Group axioms", [&]() -> std::string {
    for (Element x = 0; x < N; ++x) {
      if (G.mul(0, x) != x || G.mul(x, 0) != x) return "identity fails at " + std::to_string(x);
      if (G.mul(x, G.inv(x)) != 0 || G.mul(G.inv(x), x) != 0)
        return "inverse fails at " + std::to_string(x);
    }
    // Associativity reduces to (xy)g = x(yg) over generators g.
    for (std::size_t g = 0; g < G.generator_count(); ++g) {
      const Element gid = G.generator_ids()[g];
      for (Element x = 0; x < N; ++x)
        for (Element y = 0; y < N; ++y)
          if (G.mul(G.mul(x, y), gid) != G.mul(x, G.act(y, g)))
            return "associativity fails at (" + std::to_string(x) + "," + std::to_string(y) + ")";
    }
    for (const auto& S : lcs)
      if (N % S.order() != 0) return "Lagrange fails for a series term";
    return {};
  });

  ck.expect("Factorization", [&]() -> std::string {
    if (!lcs.back().is_trivial()) return "lower central series does not reach 1";
    std::size_t prod = N / D.order();
    for (std::size_t i = 1; i + 1 < lcs.size(); ++i) prod *= lcs[i].order() / lcs[i + 1].order();
    if (prod != N) return "product " + std::to_string(prod);
    return {};
  });

  if (!is_two_group(G)) return ck.take();

  const AbelianType ab = abelianization_type(G);
  const bool two_four = is_type(ab, {2, 4});
  const bool metacyclic = is_metacyclic_bruteforce(G);
  const bool abelian = is_abelian(G);
  const bool metabelian = is_metabelian(G);
  const std::string family = inst.presentation.tag ? inst.presentation.tag->name : "";

  ck.expect("Modular", [&]() -> std::string {
    const bool expect = family == "modular" || family == "modular_alt16";
    if (is_modular(G) != expect) return "is_modular = " + yn(!expect);
    return {};
  });

  ck.expect("Thm 017", [&]() -> std::string {
    const bool bb = is_metacyclic_blackburn(G);
    if (bb != metacyclic) return "Blackburn " + yn(bb) + ", brute force " + yn(metacyclic);
    return {};
  });

  if (ab.factors.size() == 2) {
    ck.expect("Thm 2:005", [&]() -> std::string {
      const Subgroup& g2 = gamma(lcs, 2);
      const Subgroup& g3 = gamma(lcs, 3);
      const Quotient q = section(g2, g3);
      if (!is_cyclic(q.group)) return "gamma2/gamma3 not cyclic";
      if (q.group.order() > ab.factors[0]) return "|gamma2/gamma3| = " + std::to_string(q.group.order());
      for (std::size_t i = 1; i + 2 <= lcs.size(); ++i) {
        const std::size_t e0 = relative_exponent(gamma(lcs, i), gamma(lcs, i + 1));
        const std::size_t e1 = relative_exponent(gamma(lcs, i + 1), gamma(lcs, i + 2));
        if (e0 % e1 != 0) return "exponent chain breaks at i=" + std::to_string(i);
      }
      return {};
    });
  }

  if (!two_four) return ck.take();

  const Subgroup& g3 = gamma(lcs, 3);
  const TwoFourLayout L = two_four_layout(G);
  const Subgroup& M = L.m();
  const EmbeddedGroup Mg = as_group(M);
  const AbelianType mm = abelianization_type(Mg.group);
  const int dM = rank(Mg.group);
  const GroupClass cls = classify(G);
  const FiniteGroup& A = L.abelianization.group;

  ck.expect("Cor JNT3", [&]() -> std::string {
    const EmbeddedGroup Dg = as_group(D);
    const Subgroup phi = frattini(Dg.group);
    std::vector<Element> lifted;
    for (Element x : phi.elements()) lifted.push_back(Dg.to_parent[x]);
    const Subgroup prod = join(closure(G, lifted), g3);
    if (!(prod == g3)) return "Phi(G') gamma3 != gamma3";
    const Quotient q = quotient(G, g3);
    if (is_metacyclic_bruteforce(q.group) != metacyclic) return "G/gamma3 metacyclicity differs";
    if (!metacyclic) {
      std::vector<Element> rep(A.order(), kNone);
      for (Element x = N; x-- > 0;) rep[L.abelianization.projection[x]] = x;
      const Element a = rep[L.c], b = rep[L.d];
      const Element c = G.commutator(a, b);
      for (Element x : {G.pow(a, 2), G.pow(b, 4), G.pow(c, 2), G.commutator(a, c), G.commutator(b, c)})
        if (!g3.contains(x)) return "item 4 relation outside gamma3";
    }
    return {};
  });

  ck.expect("Remark JNT2", [&]() -> std::string {
    if (!(g22(G) == g3)) return "G^(2,2) has order " + std::to_string(g22(G).order()) +
                                ", gamma3 " + std::to_string(g3.order());
    return {};
  });

  if (!metacyclic && metabelian) {
    ck.expect("Lemma 2:022", [&]() -> std::string {
      const Subgroup Md = commutator_subgroup(G, M, M);
      if (!(Md == g3)) return "|M'| = " + std::to_string(Md.order()) + ", |gamma3| = " +
                              std::to_string(g3.order());
      return {};
    });
  }

  ck.expect("Thm A", [&]() -> std::string {
    const bool met_side = dM == 2 && is_two_by(mm, 1);
    const bool non_side = dM == 3 && is_type(mm, {2, 2, 2});
    if (metacyclic != met_side || !metacyclic != non_side)
      return "metacyclic " + yn(metacyclic) + ", d(M) " + std::to_string(dM) + ", M/M' " +
             mm.to_string();
    return {};
  });

  if (metabelian) {
    ck.expect("Thm 2:015", [&]() -> std::string {
      const bool a2 = is_type(mm, {2, 2, 2}), a3 = dM == 3;
      if (!metacyclic != a2 || a2 != a3)
        return "non-metacyclic " + yn(!metacyclic) + ", M/M' " + mm.to_string() + ", d(M) " +
               std::to_string(dM);
      return {};
    });
  }
  if (!abelian) {
    ck.expect("Thm 2:014", [&]() -> std::string {
      const bool a2 = is_two_by(mm, 2), a3 = dM == 2;
      if (metacyclic != a2 || a2 != a3)
        return "metacyclic " + yn(metacyclic) + ", M/M' " + mm.to_string() + ", d(M) " +
               std::to_string(dM);
      return {};
    });
  }

  ck.expect("Schreier", [&]() -> std::string {
    if (dM - 1 > 2 * (rank(G) - 1)) return "d(M) = " + std::to_string(dM);
    return {};
  });

  ck.expect("Thm 2:020", [&]() -> std::string {
    const bool m22 = is_type(mm, {2, 2});
    auto cyc4 = [](const Subgroup& H) { return H.order() == 4 && is_cyclic(as_group(H).group); };
    const bool h = cyc4(L.quadratic[0]), k = cyc4(L.quadratic[1]);
    if (abelian != m22 || m22 != h || h != k)
      return "abelian " + yn(abelian) + ", M/M' " + mm.to_string() + ", H cyclic4 " + yn(h) +
             ", K cyclic4 " + yn(k);
    return {};
  });

  if (is_type(mm, {2, 4})) {
    ck.expect("Cor 2:019", [&]() -> std::string {
      if (cls == GroupClass::Modular) return {};
      if (N == 16 && cls == GroupClass::MetacyclicNonModular) return {};
      return "M/M' = (2,4) but class " + to_string(cls);
    });
  }
  if (mm.order() > 8) {
    ck.expect("Cor 2:017", [&]() -> std::string {
      if (cls != GroupClass::MetacyclicNonModular) return "class " + to_string(cls);
      return {};
    });
  }

  // Transfer-level checks.
  std::optional<Transfers> T;
  ck.expect("Transfer homomorphism", [&]() -> std::string {
    Transfers t{{transfer(G, L.quadratic[0]), transfer(G, L.quadratic[1]),
                 transfer(G, L.quadratic[2]), transfer(G, L.quartic[0]),
                 transfer(G, L.quartic[1]), transfer(G, L.quartic[2])}};
    for (std::size_t k = 0; k < 6; ++k) {
      const auto& V = t.maps[k];
      const FiniteGroup& S = V.source.group;
      for (Element p = 0; p < S.order(); ++p)
        for (Element q = 0; q < S.order(); ++q)
          if (V.images[S.mul(p, q)] != V.target.group.mul(V.images[p], V.images[q]))
            return label_of(k) + " not a homomorphism";
    }
    T = std::move(t);
    return {};
  });
  if (!T) return ck.take();

  ck.expect("Transversal independence", [&]() -> std::string {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      std::mt19937_64 rng(seed);
      for (std::size_t k = 0; k < 6; ++k) {
        const TransferMap V = transfer(G, layout_subgroup(L, k), &rng);
        if (V.images != T->maps[k].images)
          return label_of(k) + " differs under seed " + std::to_string(seed);
      }
    }
    return {};
  });

  if (abelian) {
    ck.expect("Abelian power map", [&]() -> std::string {
      std::vector<Element> rep(A.order(), kNone);
      for (Element x = 0; x < N; ++x)
        if (rep[L.abelianization.projection[x]] == kNone) rep[L.abelianization.projection[x]] = x;
      for (std::size_t k = 0; k < 6; ++k) {
        const auto& V = T->maps[k];
        const auto idx = static_cast<std::int64_t>(layout_subgroup(L, k).index());
        for (Element q = 0; q < A.order(); ++q)
          if (V.images[q] != V.target.projection[G.pow(rep[q], idx)])
            return label_of(k) + ": V(x) != x^" + std::to_string(idx);
      }
      return {};
    });
  }

  const CapitulationReport R = capitulation_report(G);
  auto kq = [&](int i) { return kernel_string(R.quadratic[static_cast<std::size_t>(i)].kernel_monomials); };
  auto k4 = [&](int i) { return kernel_string(R.quartic[static_cast<std::size_t>(i)].kernel_monomials); };
  const std::string all8 = "{1, c, d, cd, d^2, cd^2, d^3, cd^3}";
  const std::string v4 = "{1, c, d^2, cd^2}";
  const auto& h32 = R.quadratic[2];

  ck.expect("Kernel sizes", [&]() -> std::string {
    for (std::size_t k = 0; k < 6; ++k) {
      const auto& ker = T->maps[k].kernel;
      if (ker.size() != 2 && ker.size() != 4 && ker.size() != 8)
        return label_of(k) + " kernel of size " + std::to_string(ker.size());
      const Subgroup S = closure(A, std::span<const Element>(ker));
      if (!std::equal(S.elements().begin(), S.elements().end(), ker.begin(), ker.end()))
        return label_of(k) + " kernel not a subgroup";
    }
    return {};
  });

  ck.expect("Canonicalization", [&]() -> std::string {
    const CapitulationReport R2 = capitulation_report(G, A.mul(L.c, A.mul(L.d, L.d)));
    auto kernels = [](const CapitulationReport& r) {
      std::multiset<std::vector<Element>> s;
      auto add = [&](std::vector<Element> k) {
        std::sort(k.begin(), k.end());
        s.insert(std::move(k));
      };
      for (const auto& x : r.quadratic) add(x.kernel);
      for (const auto& x : r.quartic) add(x.kernel);
      return s;
    };
    if (kernels(R) != kernels(R2)) return "kernel multiset changed under c -> cd^2";
    if (R.triple[2] != R2.triple[2]) return "X3 changed";
    if (std::multiset<std::string>{R.triple[0], R.triple[1]} !=
        std::multiset<std::string>{R2.triple[0], R2.triple[1]})
      return "{X1, X2} changed";
    return {};
  });

  ck.expect("Thm 003", [&]() -> std::string {
    const bool modular = cls == GroupClass::Modular;
    const bool rhs = is_type(h32.class_group, {2, 4}) && h32.kernel.size() == 2;
    if (modular != rhs) return "modular " + yn(modular) + ", H3,2/H3,2' " + h32.class_group.to_string();
    if (!modular) return {};
    for (int i = 0; i < 2; ++i)
      if (kq(i) != "{1, c}") return "ker j" + std::to_string(i + 1) + ",2 = " + kq(i);
    if (kq(2) != "{1, cd^2}") return "ker j3,2 = " + kq(2);
    for (int i = 0; i < 3; ++i)
      if (k4(i) != v4) return "ker j" + std::to_string(i + 1) + ",4 = " + k4(i);
    if (R.triple_string() != "2B,2B,2A") return "triple " + R.triple_string();
    return {};
  });

  if (N > 16) {
    ck.expect("Thm 002", [&]() -> std::string {
      const bool t2 = is_two_by(h32.class_group, 3);
      const bool t3 = h32.class_number > 8;
      const auto& h14 = R.quartic[0].class_group;
      const bool t4 = is_cyclic_type(h14) && h14.order() > 2;
      if (metacyclic != t2 || t2 != t3 || t3 != t4)
        return "metacyclic " + yn(metacyclic) + ", H3,2/H3,2' " + h32.class_group.to_string() +
               ", H1,4/H1,4' " + h14.to_string();
      return {};
    });
  }

  ck.expect("Thm 005", [&]() -> std::string {
    const bool t2 = is_type(h32.class_group, {2, 2, 2});
    const bool t3 = h32.class_group.factors.size() == 3;
    if (!metacyclic != t2 || t2 != t3)
      return "non-metacyclic " + yn(!metacyclic) + ", H3,2/H3,2' " + h32.class_group.to_string();
    return {};
  });

  ck.expect("Thm 007", [&]() -> std::string {
    const std::vector<bool> v{
        abelian,
        is_type(h32.class_group, {2, 2}),
        h32.class_number == 4,
        is_type(R.quadratic[0].class_group, {4}),
        is_type(R.quadratic[1].class_group, {4}),
        R.quadratic[0].class_number == 4,
        R.quadratic[1].class_number == 4,
        R.triple_string() == "4,4,4"};
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] != v[0]) return "condition " + std::to_string(i + 1) + " disagrees with abelian = " + yn(abelian);
    return {};
  });

  if (!metacyclic) {
    ck.expect("Cor 006", [&]() -> std::string {
      if (kq(2) != "{1, d^2}") return "ker j3,2 = " + kq(2);
      if (R.triple[2] != "2A") return "X3 = " + R.triple[2];
      return {};
    });
  }

  if (abelian) {
    ck.expect("Cor 008", [&]() -> std::string {
      for (int i = 0; i < 3; ++i) {
        if (kq(i) != v4) return "ker j" + std::to_string(i + 1) + ",2 = " + kq(i);
        if (k4(i) != all8) return "ker j" + std::to_string(i + 1) + ",4 = " + k4(i);
      }
      return {};
    });
  }

  if (cls == GroupClass::MetacyclicNonModular) {
    ck.expect("Thm 004.1", [&]() -> std::string {
      for (int i = 0; i < 2; ++i)
        if (kq(i) != "{1, d^2}") return "ker j" + std::to_string(i + 1) + ",2 = " + kq(i);
      return {};
    });
    const auto gm = inst.presentation.tag ? gm_params(*inst.presentation.tag) : std::nullopt;
    if (gm) {
      const int m = gm->first, n = gm->second;
      ck.expect("Thm 004.2", [&]() -> std::string {
        const std::string want = m == 1 ? v4 : m == 3 ? "{1, c}" : "{1, d^2}";
        if (kq(2) != want) return "ker j3,2 = " + kq(2) + ", table " + want;
        return {};
      });
      ck.expect("Thm 004.3", [&]() -> std::string {
        const std::string want = m <= 2 ? all8 : m == 3 ? v4 : "{1, d, d^2, d^3}";
        for (int i = 0; i < 2; ++i)
          if (k4(i) != want) return "ker j" + std::to_string(i + 1) + ",4 = " + k4(i) + ", table " + want;
        return {};
      });
      ck.expect("Thm 004.4", [&]() -> std::string {
        const std::string want = m <= 2 ? all8 : v4;
        if (k4(2) != want) return "ker j3,4 = " + k4(2) + ", table " + want;
        return {};
      });

      // Transfer values at a, b^2 and b from the lemma preceding Thm 004.
      ck.expect("Lemma 013", [&]() -> std::string {
        const Element a = G.generator_ids()[0], b = G.generator_ids()[1];
        const auto& P = L.abelianization.projection;
        auto apow = [&](std::int64_t k) { return G.pow(a, k); };
        const std::int64_t e3 = std::int64_t{1} << (n - 3);
        const std::int64_t e4 = n >= 4 ? std::int64_t{1} << (n - 4) : 0;
        auto value = [&](std::size_t k, Element x) { return T->maps[k].images[P[x]]; };
        auto target = [&](std::size_t k, Element h) { return T->maps[k].target.projection[h]; };
        const Element b2 = G.pow(b, 2);
        for (std::size_t k = 0; k < 2; ++k) {
          if (value(k, a) != target(k, apow(2))) return "item 1: V(a) != a^2 in " + label_of(k);
          if (value(k, b2) != 0) return "item 1: V(b^2) != 1 in " + label_of(k);
        }
        {
          const Element va = m == 2 ? apow(e3) : m == 4 ? apow(e4) : 0;
          const Element vb2 = m == 3 ? apow(e3) : 0;
          if (value(2, a) != target(2, va)) return "item 2: V(a) in H3,2";
          if (value(2, b2) != target(2, vb2)) return "item 2: V(b^2) in H3,2";
        }
        for (std::size_t k = 3; k < 6; ++k) {
          const Element va = m == 4 ? apow(e3) : 0;
          if (value(k, a) != target(k, va)) return "item 3: V(a) in " + label_of(k);
          Element vb = m == 3 ? apow(e3) : 0;
          if (k == 5 && m == 4) vb = apow(e3 * (-1 + (std::int64_t{1} << (n - 5))));
          if (value(k, b) != target(k, vb)) return "item 3: V(b) in " + label_of(k);
        }
        return {};
      });

      ck.expect("Cor 012", [&]() -> std::string {
        const Element a = G.generator_ids()[0];
        auto cyc = [&](std::int64_t k) { return closure(G, {G.pow(a, k)}); };
        if (!(D == cyc(2))) return "(i) G' != <a^2>";
        for (int i = 0; i < 2; ++i)
          if (!(R.quadratic[static_cast<std::size_t>(i)].derived == cyc(4)))
            return "(ii) H'" + std::to_string(i + 1) + ",2 != <a^4>";
        const Subgroup want32 = m == 4 ? cyc(std::int64_t{1} << (n - 3)) : trivial_subgroup(G);
        if (!(h32.derived == want32)) return "(ii) H'3,2 has order " + std::to_string(h32.derived.order());
        for (int i = 0; i < 3; ++i)
          if (!R.quartic[static_cast<std::size_t>(i)].derived.is_trivial())
            return "(iii) H'" + std::to_string(i + 1) + ",4 != 1";
        return {};
      });

      if (kq(2) == "{1, d^2}") {
        ck.expect("Cor 016", [&]() -> std::string {
          bool identity = true;
          for (const auto& q : R.quartic) identity = identity && 2 * q.class_number == h32.class_number;
          if (identity != (m == 2))
            return "G2 " + yn(m == 2) + ", h(K_i,4) = h(K3,2)/2 " + yn(identity);
          return {};
        });
      }
    }

    ck.expect("Thm 004.5", [&]() -> std::string {
      const std::string t = R.triple_string();
      if (t != "2A,2A,2A" && t != "2A,2A,4") return "triple " + t;
      return {};
    });
  }

  return ck.take();
}

std::vector<Outcome> run(int max_n, const std::vector<std::string>& families) {
  std::vector<Outcome> out;
  for (const auto& inst : instances(max_n, families)) {
    auto part = check(inst);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::string format(const Outcome& o) {
  std::string s = o.theorem + " / " + o.instance + ": " + (o.pass ? "pass" : "FAIL");
  if (!o.pass && !o.detail.empty()) s += " (" + o.detail + ")";
  return s;
}

}  // namespace capitulation::verify
