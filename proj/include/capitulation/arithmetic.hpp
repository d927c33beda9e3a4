#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "capitulation/presentation.hpp"
#include "capitulation/structure.hpp"

namespace capitulation::arith {

/// Deterministic Miller–Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// (a/p) by Euler's criterion. p must be an odd prime.
int legendre(std::int64_t a, std::uint64_t p);

/// (a/q)_4 = a^{(q-1)/4} mod q as +-1. Requires q prime, q = 1 mod 4 and
/// (a/q) = +1; throws UndefinedSymbol otherwise.
int quartic(std::int64_t a, std::uint64_t q);

/// (p/2)_4 = (-1)^{(p-1)/8} for p = 1 mod 8.
int quartic_two(std::uint64_t p);

/// (a / q1 q2 ... )_4 read multiplicatively over the prime factors of the
/// denominator.
int quartic_composite(std::int64_t a, const std::vector<std::uint64_t>& denominator);

/// 2-rank of the 2-class group of Q(sqrt p, sqrt(qr)) from the residue
/// symbols: p, q, r distinct primes = 1 mod 4 with (p/q) = 1.
int rank_l(std::uint64_t p, std::uint64_t q, std::uint64_t r);

enum class Consistency { Consistent, Inconsistent };

struct FieldPrediction {
  std::vector<std::string> assumptions;
  Consistency consistency = Consistency::Inconsistent;
  std::optional<GroupClass> predicted_class;
  std::optional<Presentation> predicted_presentation;
  std::optional<std::string> presentation_text;
  std::optional<int> rank_l;
  /// 1-based index i of the distinguished prime, when one exists.
  std::optional<int> distinguished;
  std::vector<std::string> notes;
};

std::string to_string(Consistency c);

/// k = Q(sqrt(p1 p2 p3)) with 2-class group assumed of type (2,4).
FieldPrediction predict_real(std::uint64_t p1, std::uint64_t p2, std::uint64_t p3);

/// k = Q(sqrt(2p), i), with 2^n the 2-class number of Q(sqrt(-p)).
FieldPrediction predict_biquadratic(std::uint64_t p, int n);

}  // namespace capitulation::arith
