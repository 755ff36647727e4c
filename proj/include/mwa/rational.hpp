#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mwa {

using Q = mpq_class;
using Vec = std::vector<Q>;
using Mat = std::vector<Vec>;

// p/q in lowest terms; mpq_class(p, q) alone does not reduce.
Q frac(long p, long q);

// Reduced "p/q" with the sign on the numerator; integers print bare.
std::string to_string(const Q& x);

// Accepts "n", "-n", "p/q". Throws std::invalid_argument otherwise.
Q parse_rational(const std::string& s);

bool is_integer(const Q& x);
bool is_positive_integer(const Q& x);

// Generalized binomial coefficient x(x-1)...(x-j+1)/j!.
Q binomial(const Q& x, long j);

Q det(Mat a);
// Solves a x = b for square nonsingular a. Throws std::domain_error when singular.
Vec solve(Mat a, Vec b);
Mat inverse(const Mat& a);

}  // namespace mwa
