#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crossunion {

/* All counting is exact; values can exceed 64 bits well inside the supported
   parameter ranges, so everything returns arbitrary-precision integers. */
using BoundValue = boost::multiprecision::cpp_int;

/* Thrown when an inequality is queried outside its stated hypothesis.
   Distinct from holds == false: the check never ran. */
struct hypothesis_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

BoundValue binom(int n, int k);  // 0 for k outside [0, n]; n must be >= 0

/* g(n, r) = C(n, r) - C(n, r-1), defined for 1 <= r <= n/2. */
BoundValue g(int n, int r);

/* Largest size of a single s-union family on [n], 0 < s < n:
   even s = 2r:   sum_{i<=r} C(n, i)
   odd  s = 2r+1: 2 * sum_{i<=r} C(n-1, i) */
BoundValue katona_f(int n, int s);

/* max over 0 <= i <= s/2 of C(n,i) + C(n,s-i), with every maximizing i
   reported. Requires 0 < s < n. */
struct MaximalPairs {
  std::vector<std::pair<int, int>> pairs;  // (i, s-i), ascending in i
  BoundValue value;
};
MaximalPairs maximal_pairs(int n, int s);

/* 1 + sum_{i=0}^{s} C(n, i), 0 < s < n. */
BoundValue sum_bound_thm_1_6(int n, int s);

/* Named inequality registry. Each entry has a fixed hypothesis; querying
   outside it raises hypothesis_error, an unknown id raises invalid_argument.
   Fractional comparisons are cleared of denominators, so lhs/rhs are always
   integers. */
struct InequalityParams {
  std::optional<int> n, s, i;
};
struct InequalityCheck {
  bool holds = false;
  BoundValue lhs, rhs;
};
InequalityCheck check_inequality(const std::string& id,
                                 const InequalityParams& params);
std::vector<std::string> inequality_ids();

}  // namespace crossunion
