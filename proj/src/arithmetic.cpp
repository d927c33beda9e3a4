#include "capitulation/arithmetic.hpp"

#include <algorithm>
#include <array>

#include "capitulation/errors.hpp"

namespace capitulation::arith {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t reduce(std::int64_t a, std::uint64_t m) {
  const std::int64_t sm = static_cast<std::int64_t>(m);
  std::int64_t r = a % sm;
  if (r < 0) r += sm;
  return static_cast<std::uint64_t>(r);
}

void require_odd_prime(std::uint64_t p) {
  if (p == 2 || !is_prime(p)) throw PreconditionError(std::to_string(p) + " is not an odd prime");
}

std::string sym(std::uint64_t a, std::uint64_t b, bool fourth) {
  return "(" + std::to_string(a) + "/" + std::to_string(b) + ")" + (fourth ? "_4" : "");
}

}  // namespace

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int legendre(std::int64_t a, std::uint64_t p) {
  require_odd_prime(p);
  const std::uint64_t r = powmod(reduce(a, p), (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

int quartic(std::int64_t a, std::uint64_t q) {
  if (q % 4 != 1 || !is_prime(q))
    throw UndefinedSymbol("quartic symbol needs a prime q = 1 mod 4, got " + std::to_string(q));
  if (legendre(a, q) != 1)
    throw UndefinedSymbol("quartic symbol (" + std::to_string(a) + "/" + std::to_string(q) +
                          ")_4 needs a quadratic residue");
  const std::uint64_t r = powmod(reduce(a, q), (q - 1) / 4, q);
  if (r == 1) return 1;
  if (r == q - 1) return -1;
  throw ConsistencyError("Euler criterion for the quartic symbol is not +-1");
}

int quartic_two(std::uint64_t p) {
  if (p % 8 != 1 || !is_prime(p))
    throw PreconditionError("(p/2)_4 needs a prime p = 1 mod 8, got " + std::to_string(p));
  return ((p - 1) / 8) % 2 == 0 ? 1 : -1;
}

int quartic_composite(std::int64_t a, const std::vector<std::uint64_t>& denominator) {
  int s = 1;
  for (std::uint64_t q : denominator) s *= quartic(a, q);
  return s;
}

int rank_l(std::uint64_t p, std::uint64_t q, std::uint64_t r) {
  for (std::uint64_t x : {p, q, r})
    if (x % 4 != 1 || !is_prime(x))
      throw PreconditionError("rank_l needs primes = 1 mod 4, got " + std::to_string(x));
  if (p == q || q == r || p == r) throw PreconditionError("rank_l needs distinct primes");
  if (legendre(static_cast<std::int64_t>(p), q) != 1)
    throw PreconditionError("rank_l needs (p/q) = 1");
  const bool sym_q = quartic(static_cast<std::int64_t>(p), q) == quartic(static_cast<std::int64_t>(q), p);
  if (legendre(static_cast<std::int64_t>(p), r) == 1) {
    const bool sym_r =
        quartic(static_cast<std::int64_t>(p), r) == quartic(static_cast<std::int64_t>(r), p);
    return sym_q && sym_r ? 3 : 2;
  }
  return sym_q ? 2 : 1;
}

std::string to_string(Consistency c) {
  return c == Consistency::Consistent ? "consistent" : "inconsistent-with-(2,4)-assumption";
}

FieldPrediction predict_real(std::uint64_t p1, std::uint64_t p2, std::uint64_t p3) {
  const std::array<std::uint64_t, 3> p{p1, p2, p3};
  for (std::uint64_t x : p)
    if (x % 4 != 1 || !is_prime(x))
      throw PreconditionError("predict_real needs primes = 1 mod 4, got " + std::to_string(x));
  if (p1 == p2 || p2 == p3 || p1 == p3) throw PreconditionError("predict_real needs distinct primes");

  FieldPrediction out;
  out.assumptions = {
      "2-class group of Q(sqrt(" + std::to_string(p1) + "*" + std::to_string(p2) + "*" +
          std::to_string(p3) + ")) assumed of type (2,4); not verified",
      "composite quartic symbol (p_i/p_j p_k)_4 read multiplicatively"};

  auto s = [](std::uint64_t a) { return static_cast<std::int64_t>(a); };
  for (int i = 0; i < 3; ++i) {
    const std::uint64_t pi = p[static_cast<std::size_t>(i)];
    const std::uint64_t pj = p[static_cast<std::size_t>((i + 1) % 3)];
    const std::uint64_t pk = p[static_cast<std::size_t>((i + 2) % 3)];
    const std::uint64_t lo = std::min(pj, pk), hi = std::max(pj, pk);
    if (legendre(s(pi), lo) != 1 || legendre(s(pi), hi) != 1) continue;
    const int lhs = quartic_composite(s(pi), {lo, hi});
    const int rhs = quartic(s(mulmod(lo % pi, hi % pi, pi)), pi);
    if (lhs != rhs) {
      out.notes.push_back("i=" + std::to_string(i + 1) + ": (" +
                          std::to_string(pi) + "/" + std::to_string(lo) + "*" + std::to_string(hi) +
                          ")_4 = " + std::to_string(lhs) + " but (" + std::to_string(lo) + "*" +
                          std::to_string(hi) + "/" + std::to_string(pi) + ")_4 = " +
                          std::to_string(rhs));
      continue;
    }
    out.distinguished = i + 1;
    out.consistency = Consistency::Consistent;
    const bool sym_lo = quartic(s(pi), lo) == quartic(s(lo), pi);
    const bool sym_hi = quartic(s(pi), hi) == quartic(s(hi), pi);
    out.rank_l = rank_l(pi, lo, hi);
    if (sym_lo && sym_hi) {
      out.predicted_class = GroupClass::NonMetacyclic;
      out.notes.push_back("both quartic symbols symmetric: " + sym(pi, lo, true) + "=" +
                          sym(lo, pi, true) + ", " + sym(pi, hi, true) + "=" + sym(hi, pi, true));
    } else {
      const int jk = legendre(s(lo), hi);
      out.predicted_class = jk == -1 ? GroupClass::Abelian : GroupClass::MetacyclicNonModular;
      out.notes.push_back("quartic symbols antisymmetric; " + sym(lo, hi, false) + " = " +
                          std::to_string(jk));
    }
    return out;
  }
  if (out.notes.empty())
    out.notes.push_back("no prime p_i with (p_i/p_j) = (p_i/p_k) = 1");
  return out;
}

FieldPrediction predict_biquadratic(std::uint64_t p, int n) {
  if (p % 8 != 1 || !is_prime(p))
    throw PreconditionError("predict_biquadratic needs a prime p = 1 mod 8, got " + std::to_string(p));
  if (n < 3 || n > 20) throw PreconditionError("predict_biquadratic needs 3 <= n <= 20");
  FieldPrediction out;
  out.assumptions = {"2-class number of Q(sqrt(-" + std::to_string(p) + ")) is 2^" +
                     std::to_string(n) + " (supplied, not computed)"};
  const int two_p = quartic(2, p);
  const int p_two = quartic_two(p);
  out.notes.push_back("(2/" + std::to_string(p) + ")_4 = " + std::to_string(two_p) + ", (" +
                      std::to_string(p) + "/2)_4 = " + std::to_string(p_two));
  if (two_p != -1 || p_two != -1) {
    out.consistency = Consistency::Inconsistent;
    return out;
  }
  out.consistency = Consistency::Consistent;
  const std::int64_t order_a = std::int64_t{1} << n;
  const std::int64_t r = -1 + (std::int64_t{1} << (n - 1));
  Presentation pres;
  pres.generators = {"a", "b"};
  const Word a = Word::generator(0), b = Word::generator(1);
  pres.relators = {Word::generator(0, order_a), Word::generator(1, 4),
                   a.conjugate_by(b) * Word::generator(0, -r)};
  out.predicted_presentation = pres;
  out.presentation_text = "<a,b| a^" + std::to_string(order_a) + ", b^4, a^b = a^" + std::to_string(r) + ">";
  out.predicted_class = GroupClass::MetacyclicNonModular;
  return out;
}

}  // namespace capitulation::arith
