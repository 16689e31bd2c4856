#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace updown {

/* Every verification path in this library runs on exact integers or exact
 * rationals.  Floating point is never used to decide an identity. */
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/* Thrown when a request would start an enumeration beyond the guarded cap
 * and the caller did not pass force. */
class resource_limit_error : public std::runtime_error {
public:
  explicit resource_limit_error(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

/* C(a, b), with the convention C(a, b) = 0 whenever b < 0 or b > a. */
Int binomial(long long a, long long b);

/* n (n-1) ... (n-r+1) for r >= 0. */
Int falling_factorial(long long n, int r);

Int factorial(int n);

}  // namespace updown
