#include "fuchsian/exactnum.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <boost/random/mersenne_twister.hpp>
#include <cstdlib>

namespace fuchsian {

Int vp(const Rational& x, const Int& p) {
  if (x == 0) throw ValuationOfZero();
  Int k = 0;
  Int n = abs(numerator(x));
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (k == 0) {
    Int d = denominator(x);
    while (d % p == 0) {
      d /= p;
      --k;
    }
  }
  return k;
}

std::string HalfInt::str() const {
  if (infinite) return "inf";
  if (twice % 2 == 0) return Int(twice / 2).str();
  return twice.str() + "/2";
}

HalfInt vp_of_sqrt(const Rational& b_sq, const Int& p) {
  if (b_sq <= 0) throw std::domain_error("vp_of_sqrt requires a positive argument");
  return HalfInt::halves(vp(b_sq, p));
}

HalfInt vp_or_infinity(const Rational& x, const Int& p) {
  if (x == 0) return HalfInt::infinity();
  return HalfInt::of_int(vp(x, p));
}

Int trial_division_cap() {
  if (const char* env = std::getenv("FUCHSIAN_TRIAL_DIVISION_CAP")) {
    return Int(env);
  }
  return Int(10000000);
}

bool is_square_free(const Int& n) {
  if (n < 1) throw std::domain_error("is_square_free requires n >= 1");
  if (n > trial_division_cap())
    throw FactorizationOutOfRange("factorization out of range: " + n.str());
  Int m = n;
  for (Int d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      m /= d;
      if (m % d == 0) return false;
    }
  }
  return true;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (int d : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  boost::mt19937 gen(0xfca51u);
  return boost::multiprecision::miller_rabin_test(n, 32, gen);
}

Int next_prime_3mod4(const Int& m) {
  Int c = m < 2 ? Int(3) : m + 1;
  while (c % 4 != 3) ++c;
  while (!is_prime(c)) c += 4;
  return c;
}

namespace {

// Primes below this bound are stripped exactly in square_class_of.
constexpr unsigned kSmallPrimeBound = 10000;

bool is_perfect_square(const Int& n, Int* root) {
  if (n < 0) return false;
  Int r = sqrt(n);
  if (r * r == n) {
    if (root) *root = r;
    return true;
  }
  return false;
}

}  // namespace

Int square_class_of(const Rational& x) {
  if (x == 0) throw std::domain_error("square class of zero");
  Int n = abs(numerator(x)) * denominator(x);
  Int label = 1;
  for (unsigned d = 2; d < kSmallPrimeBound && n > 1; d == 2 ? d += 1 : d += 2) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      if (e % 2) label *= d;
    }
  }
  if (n > 1) {
    // a leftover that is a visible square contributes nothing; otherwise it
    // is kept whole, which stays in the right class even when unfactored
    if (!is_perfect_square(n, nullptr)) label *= n;
  }
  return label;
}

Int square_class_combine(const Int& a, const Int& b) {
  Int g = gcd(a, b);
  return (a / g) * (b / g);
}

std::vector<Int> coprime_basis(std::vector<Int> xs) {
  std::vector<Int> base;
  for (Int& x : xs) {
    if (x < 0) x = -x;
    std::vector<Int> pending{x};
    while (!pending.empty()) {
      Int c = pending.back();
      pending.pop_back();
      if (c <= 1) continue;
      bool split = false;
      for (size_t i = 0; i < base.size(); ++i) {
        Int g = gcd(c, base[i]);
        if (g > 1 && g < base[i]) {
          // refine an existing basis element
          Int rest = base[i] / g;
          base[i] = g;
          pending.push_back(rest);
          pending.push_back(c);
          split = true;
          break;
        }
        if (g > 1) {
          // base[i] divides c; peel it off
          while (c % base[i] == 0) c /= base[i];
          pending.push_back(c);
          split = true;
          break;
        }
      }
      if (!split) base.push_back(c);
    }
  }
  // replace perfect squares by their roots (only parity matters downstream)
  for (Int& b : base) {
    Int root;
    while (is_perfect_square(b, &root)) b = root;
  }
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  std::erase_if(base, [](const Int& b) { return b <= 1; });
  return base;
}

std::vector<bool> parity_vector(Int x, const std::vector<Int>& basis) {
  if (x < 0) x = -x;
  std::vector<bool> out(basis.size(), false);
  for (size_t i = 0; i < basis.size(); ++i) {
    unsigned e = 0;
    while (x % basis[i] == 0) {
      x /= basis[i];
      ++e;
    }
    out[i] = e % 2;
  }
  return out;
}

}  // namespace fuchsian
