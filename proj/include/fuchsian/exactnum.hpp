#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuchsian {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

struct ValuationOfZero : std::domain_error {
  ValuationOfZero() : std::domain_error("valuation of zero") {}
};

struct FactorizationOutOfRange : std::domain_error {
  explicit FactorizationOutOfRange(const std::string& what)
      : std::domain_error(what) {}
};

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// p-adic valuation of a nonzero rational.
Int vp(const Rational& x, const Int& p);

/// Element of (1/2)Z together with +infinity, stored as twice the value.
struct HalfInt {
  bool infinite = false;
  Int twice;

  static HalfInt infinity() { return HalfInt{true, 0}; }
  static HalfInt of_int(const Int& k) { return HalfInt{false, 2 * k}; }
  static HalfInt halves(const Int& t) { return HalfInt{false, t}; }

  bool is_integer() const { return !infinite && twice % 2 == 0; }

  friend bool operator==(const HalfInt& a, const HalfInt& b) {
    if (a.infinite || b.infinite) return a.infinite && b.infinite;
    return a.twice == b.twice;
  }
  friend bool operator<(const HalfInt& a, const HalfInt& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.twice < b.twice;
  }
  friend bool operator>=(const HalfInt& a, const HalfInt& b) { return !(a < b); }

  std::string str() const;
};

/// v_p(b) for b = sqrt(b_sq), as an exact half-integer.
HalfInt vp_of_sqrt(const Rational& b_sq, const Int& p);

/// Valuation that maps 0 to +infinity instead of throwing.
HalfInt vp_or_infinity(const Rational& x, const Int& p);

/// Trial-division cap for is_square_free / square_class_of, overridable via
/// the FUCHSIAN_TRIAL_DIVISION_CAP environment variable.
Int trial_division_cap();

bool is_square_free(const Int& n);

bool is_prime(const Int& n);

/// Smallest prime p > m with p = 3 mod 4.
Int next_prime_3mod4(const Int& m);

/// Square-free label of the square class of a nonzero rational.
///
/// Small primes are stripped by trial division; any large leftover cofactor
/// is kept whole after removing its perfect-square part, so the result is
/// always in the same square class as x even when x is not fully factored.
Int square_class_of(const Rational& x);

/// Combine two square-class labels: ab / gcd(a,b)^2.
Int square_class_combine(const Int& a, const Int& b);

/// Pairwise-coprime basis of a list of positive integers (factor refinement),
/// with perfect powers replaced by their roots. Entries 1 are dropped.
std::vector<Int> coprime_basis(std::vector<Int> xs);

/// Exponent parities of x over a pairwise-coprime basis.
std::vector<bool> parity_vector(Int x, const std::vector<Int>& basis);

}  // namespace fuchsian
