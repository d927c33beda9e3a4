#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "capitulation/structure.hpp"

namespace capitulation {

/// The transfer V_{G->H}: G/G' -> H/H'.
///
/// Holds its own copies of the two abelian quotients; `kernel` and `images`
/// index into `source.group` and `target.group`.
struct TransferMap {
  Quotient source;                ///< G/G', projection defined on all of G
  Subgroup target_subgroup;       ///< H
  Subgroup target_derived;        ///< H'
  Quotient target;                ///< H/H', projection defined on H
  std::vector<Element> images;    ///< source element -> target element
  std::vector<Element> kernel;    ///< sorted source elements mapping to 1
};

/// Transfer into H via V(gG') = prod x_i^-1 g^{f_i} x_i H', where the x_i
/// represent the orbits of <g> on the left cosets of H and f_i is the orbit
/// length. Every class is evaluated at two distinct representatives and the
/// map is checked to be a homomorphism. With `rng`, transversals and orbit
/// representatives are drawn at random instead of by least element id.
TransferMap transfer(const FiniteGroup& G, const Subgroup& H, std::mt19937_64* rng = nullptr);

enum class TausskyLetter { A, B };

/// A iff ker V meets the image of H in G/G' nontrivially. Requires [G:H] = 2.
TausskyLetter taussky(const TransferMap& V);

struct SubgroupCapitulation {
  std::string label;               ///< "H1,2", ..., "H3,4"
  Subgroup subgroup;
  std::vector<Element> kernel;     ///< elements of G/G' (layout's abelianization ids)
  std::vector<std::string> kernel_monomials;  ///< "1", "c", "d^2", "cd^2", ...
  std::optional<TausskyLetter> letter;        ///< quadratic subgroups only
  std::uint64_t class_number = 0;  ///< [H : H']
  AbelianType class_group;         ///< type of H/H'
  Subgroup derived;                ///< H'
};

struct CapitulationReport {
  GroupClass group_class = GroupClass::OutsideHypothesis;
  TwoFourLayout layout;
  std::array<SubgroupCapitulation, 3> quadratic;
  std::array<SubgroupCapitulation, 3> quartic;
  std::array<std::string, 3> triple;  ///< X_i in {4, 2A, 2B}

  std::string triple_string() const;  ///< "2B,2B,2A"
};

/// Renders c^epsilon d^delta as "1", "c", "d", "cd^2", ...
std::string monomial_string(int epsilon, int delta);
/// Set notation for monomials already ordered by (delta, epsilon): "{1, c, d^2, cd^2}".
std::string kernel_string(const std::vector<std::string>& monomials);

/// Throws OutsideHypothesis unless G/G' is of type (2,4).
CapitulationReport capitulation_report(const FiniteGroup& G,
                                       std::optional<Element> c_override = {});

}  // namespace capitulation
