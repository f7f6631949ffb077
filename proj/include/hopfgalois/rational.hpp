// Exact scalar arithmetic over the rationals, backed by GMP.
// Every scalar is kept canonical: lowest terms, positive denominator.

#ifndef HOPFGALOIS_RATIONAL_HPP_
#define HOPFGALOIS_RATIONAL_HPP_

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfgalois {

using Int = mpz_class;
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent fixture data.
struct FixtureError : Error {
  explicit FixtureError(const std::string& msg) : Error(msg) {}
};

// Input exceeds the enforced desk-scale budget.
struct BudgetError : Error {
  explicit BudgetError(const std::string& msg) : Error(msg) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0)
    fail("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

// Parses "p" or "p/q". Used by every JSON reader.
Rat rat_from_string(const std::string& s);

// Emits "p" for integers, "p/q" otherwise.
std::string rat_to_string(const Rat& q);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Floor division, used by Hermite normal form reduction steps.
inline Int fdiv(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace hopfgalois

#endif
