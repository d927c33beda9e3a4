#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "capitulation/presentation.hpp"

namespace capitulation {

using Element = std::uint32_t;

/// Largest order for which the full multiplication table is materialized.
inline constexpr std::size_t kFullTableLimit = 4096;
inline constexpr std::size_t kDefaultMaxCosets = std::size_t{1} << 16;

/// A fully enumerated finite group in its regular representation.
///
/// Elements are numbered 0..N-1 in breadth-first order from the identity
/// (id 0), exploring generators and then their inverses in declaration
/// order: g1, g1^-1, g2, g2^-1, ... Labels are the corresponding shortest
/// words. Immutable after construction.
class FiniteGroup {
 public:
  /// Builds a group from the right-regular action of its generators:
  /// `actions[g][x]` is the point reached from x by generator g. The
  /// action must be regular (transitive, and the point stabilizer
  /// trivial); any point may serve as the identity, 0 is used.
  static FiniteGroup from_regular_action(const std::vector<std::vector<Element>>& actions);

  std::size_t order() const noexcept { return order_; }
  std::size_t generator_count() const noexcept { return generator_ids_.size(); }
  std::span<const Element> generator_ids() const noexcept { return generator_ids_; }
  bool has_table() const noexcept { return !mul_.empty(); }

  Element mul(Element x, Element y) const;
  Element inv(Element x) const { return inv_[x]; }
  /// x * generator g, or x * g^-1 when `inverse` is set. Never needs the full table.
  Element act(Element x, std::size_t g, bool inverse = false) const {
    return (inverse ? inverse_actions_ : actions_)[g][x];
  }
  Element pow(Element x, std::int64_t k) const;
  Element commutator(Element x, Element y) const;  ///< x^-1 y^-1 x y
  Element conjugate(Element x, Element by) const;  ///< by^-1 x by

  /// Shortest word (over generators and their inverses) for x.
  const Word& label(Element x) const { return labels_[x]; }
  const std::vector<std::uint32_t>& table() const noexcept { return mul_; }
  const std::vector<std::vector<Element>>& actions() const noexcept { return actions_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.actions_ == b.actions_ && a.mul_ == b.mul_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<std::vector<Element>> actions_;
  std::vector<std::vector<Element>> inverse_actions_;
  std::vector<Element> generator_ids_;
  std::vector<std::uint32_t> mul_;  // row-major N x N, empty above kFullTableLimit
  std::vector<Element> inv_;
  std::vector<Word> labels_;
};

/// Todd–Coxeter (HLT with deduction processing) over the trivial subgroup.
/// Throws CosetLimitExceeded when more than `max_cosets` live cosets are needed.
FiniteGroup enumerate(const Presentation& pres, std::size_t max_cosets = kDefaultMaxCosets);

/// Product of generator images along w; the empty word maps to 0.
Element eval_word(const FiniteGroup& g, const Word& w);

/// Least k >= 1 with x^k = identity.
std::size_t element_order(const FiniteGroup& g, Element x);

}  // namespace capitulation
