#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "capitulation/finite_group.hpp"

namespace capitulation {

/// A subgroup of a FiniteGroup, held as a sorted element set.
///
/// Keeps a non-owning pointer to its parent: the parent group must outlive
/// every Subgroup taken from it.
class Subgroup {
 public:
  /// Validates closure and Lagrange; throws NotSubgroup otherwise.
  Subgroup(const FiniteGroup& parent, std::vector<Element> elements);

  const FiniteGroup& parent() const noexcept { return *parent_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t index() const noexcept { return parent_->order() / elements_.size(); }
  std::span<const Element> elements() const noexcept { return elements_; }
  bool contains(Element x) const { return member_[x]; }
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_whole() const noexcept { return elements_.size() == parent_->order(); }
  bool contains(const Subgroup& other) const;

  /// A generating set, chosen greedily by ascending element id.
  const std::vector<Element>& generators() const;
  bool is_normal() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  friend Subgroup closure(const FiniteGroup&, std::span<const Element>);
  struct Trusted {};
  Subgroup(Trusted, const FiniteGroup& parent, std::vector<Element> elements,
           std::vector<Element> generators);

  const FiniteGroup* parent_;
  std::vector<Element> elements_;
  std::vector<bool> member_;
  mutable std::optional<std::vector<Element>> generators_;
  mutable std::optional<bool> normal_;
};

/// Invariant factors, each dividing the next.
struct AbelianType {
  std::vector<std::uint64_t> factors;

  std::uint64_t order() const;
  std::string to_string() const;  ///< "(2,4)", "()" for the trivial group
  friend bool operator==(const AbelianType&, const AbelianType&) = default;
};

enum class GroupClass { Abelian, Modular, MetacyclicNonModular, NonMetacyclic, OutsideHypothesis };

std::string to_string(GroupClass c);

/// A group built from a quotient or a subgroup, with maps to and from the
/// parent's element ids.
struct Quotient {
  FiniteGroup group;
  /// Parent element id -> element of `group`; kNone outside the domain.
  std::vector<Element> projection;
};

struct EmbeddedGroup {
  FiniteGroup group;
  std::vector<Element> to_parent;    ///< group element -> parent id
  std::vector<Element> from_parent;  ///< parent id -> group element, kNone outside
};

inline constexpr Element kNone = ~Element{0};

Subgroup closure(const FiniteGroup& G, std::span<const Element> seed);
Subgroup closure(const FiniteGroup& G, std::initializer_list<Element> seed);
Subgroup whole_group(const FiniteGroup& G);
Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup intersection(const Subgroup& A, const Subgroup& B);
/// Subgroup generated by A and B.
Subgroup join(const Subgroup& A, const Subgroup& B);

Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& A, const Subgroup& B);
Subgroup derived_subgroup(const FiniteGroup& G);
/// gamma_1 = G, gamma_{i+1} = [gamma_i, G], truncated once a term repeats.
std::vector<Subgroup> lower_central_series(const FiniteGroup& G);
/// gamma_i (1-based) of a computed series; terms past the end repeat the last.
const Subgroup& gamma(const std::vector<Subgroup>& series, std::size_t i);
/// Index-2 subgroups, as kernels of the nontrivial homomorphisms G -> Z/2.
std::vector<Subgroup> index_two_subgroups(const FiniteGroup& G);
/// Intersection of maximal subgroups, checked against the subgroup
/// generated by squares. Requires a 2-group.
Subgroup frattini(const FiniteGroup& G);
Subgroup power_subgroup(const FiniteGroup& G, const Subgroup& S, std::int64_t k);
/// Phi(G)^2 [G, Phi(G)]
Subgroup g22(const FiniteGroup& G);

Quotient quotient(const FiniteGroup& G, const Subgroup& N);
EmbeddedGroup as_group(const Subgroup& H);
/// H / K for K normal in H, projection defined on the parent ids in H.
Quotient section(const Subgroup& H, const Subgroup& K);
/// Subgroup of G mapped to `preimage` of a set of quotient elements.
Subgroup preimage(const FiniteGroup& G, const Quotient& Q, std::span<const Element> targets);

bool is_abelian(const FiniteGroup& G);
bool is_cyclic(const FiniteGroup& G);
bool is_two_group(const FiniteGroup& G);
std::size_t exponent(const FiniteGroup& G);
/// Exponent of A/B for B normal in G, B <= A: largest order of x B, x in A.
std::size_t relative_exponent(const Subgroup& A, const Subgroup& B);
AbelianType abelian_type(const FiniteGroup& A);
AbelianType abelianization_type(const FiniteGroup& G);
/// Minimal number of generators of a 2-group: log2 [G : Phi(G)].
int rank(const FiniteGroup& G);

bool is_metacyclic_bruteforce(const FiniteGroup& G);
/// Tests the small quotient G / Phi(G') gamma_3(G).
bool is_metacyclic_blackburn(const FiniteGroup& G);
bool is_modular(const FiniteGroup& G);
bool is_metabelian(const FiniteGroup& G);
GroupClass classify(const FiniteGroup& G);

/// The subgroup layout of a group with abelianization of type (2,4):
/// the class generators c (order 2) and d (order 4) of G/G', the three
/// index-2 subgroups H_{1,2} = <d,G'>, H_{2,2} = <cd,G'>, H_{3,2} = <c,d^2,G'>
/// and the three index-4 subgroups H_{1,4} = <c,G'>, H_{2,4} = <cd^2,G'>,
/// H_{3,4} = <d^2,G'>.
struct TwoFourLayout {
  Subgroup derived;
  Quotient abelianization;
  Element c = 0;
  Element d = 0;
  std::array<Subgroup, 3> quadratic;
  std::array<Subgroup, 3> quartic;

  /// (epsilon, delta) with q = c^epsilon d^delta.
  std::pair<int, int> monomial(Element q) const;
  /// Class element c^epsilon d^delta.
  Element element(int epsilon, int delta) const;
  /// Maximal subgroup M with M/G' of type (2,2).
  const Subgroup& m() const { return quadratic[2]; }
};

/// Throws OutsideHypothesis unless G/G' is of type (2,4). `c_override`
/// substitutes a different order-2 class generator outside <d>.
TwoFourLayout two_four_layout(const FiniteGroup& G, std::optional<Element> c_override = {});

}  // namespace capitulation
