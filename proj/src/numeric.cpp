#include "updown/numeric.hpp"

namespace updown {

Int binomial(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Int r = 1;
  /* r stays integral after each division: r is C(a-b+i, i) at step i. */
  for (long long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

Int falling_factorial(long long n, int r) {
  if (r < 0) throw std::invalid_argument("falling_factorial: negative length");
  Int p = 1;
  for (int i = 0; i < r; ++i) p *= n - i;
  return p;
}

Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int p = 1;
  for (int i = 2; i <= n; ++i) p *= i;
  return p;
}

}  // namespace updown
