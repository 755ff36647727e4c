#include "mwa/rational.hpp"

#include <stdexcept>

namespace mwa {

Q frac(long p, long q) {
  Q r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Q& x) {
  Q y = x;
  y.canonicalize();
  if (y.get_den() == 1) return y.get_num().get_str();
  return y.get_num().get_str() + "/" + y.get_den().get_str();
}

Q parse_rational(const std::string& s) {
  auto ok_int = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!ok_int(num, true) || !ok_int(den, false))
    throw std::invalid_argument("malformed rational: '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  Q r(mpz_class(num), d);
  r.canonicalize();
  return r;
}

bool is_integer(const Q& x) { return x.get_den() == 1; }

bool is_positive_integer(const Q& x) { return is_integer(x) && x > 0; }

Q binomial(const Q& x, long j) {
  if (j < 0) return 0;
  Q r = 1;
  for (long i = 0; i < j; ++i) r = r * (x - i) / (i + 1);
  return r;
}

namespace {

// Gaussian elimination on an augmented system; returns the determinant.
Q eliminate(Mat& a, Mat& rhs) {
  size_t n = a.size();
  Q d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      std::swap(rhs[p], rhs[c]);
      d = -d;
    }
    d *= a[c][c];
    Q inv = 1 / a[c][c];
    for (auto& v : a[c]) v *= inv;
    for (auto& v : rhs[c]) v *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Q f = a[r][c];
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      for (size_t k = 0; k < rhs[r].size(); ++k) rhs[r][k] -= f * rhs[c][k];
    }
  }
  return d;
}

}  // namespace

Q det(Mat a) {
  Mat rhs(a.size());
  return eliminate(a, rhs);
}

Vec solve(Mat a, Vec b) {
  Mat rhs(b.size());
  for (size_t i = 0; i < b.size(); ++i) rhs[i] = {b[i]};
  if (eliminate(a, rhs) == 0) throw std::domain_error("singular system");
  Vec x(b.size());
  for (size_t i = 0; i < b.size(); ++i) x[i] = rhs[i][0];
  return x;
}

Mat inverse(const Mat& a) {
  size_t n = a.size();
  Mat m = a, rhs(n, Vec(n, 0));
  for (size_t i = 0; i < n; ++i) rhs[i][i] = 1;
  if (eliminate(m, rhs) == 0) throw std::domain_error("singular matrix");
  return rhs;
}

}  // namespace mwa
