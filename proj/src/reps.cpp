#include "mwa/reps.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mwa {

LieTables::LieTables(const AlgebraData& alg) {
  if (!alg.is_lie()) throw std::invalid_argument(alg.name + ": representation data needs a Lie algebra");
  r_ = alg.rank();
  cartan_.assign(r_, Labels(r_));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) cartan_[i][j] = alg.cartan[i][j].get_num().get_si();
  for (const auto& a : alg.pos_even) pos_.push_back(to_labels(alg, a));
  Mat g(r_, Vec(r_));
  mpz_class l = 1;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) {
      g[i][j] = inner(alg, alg.fundamental[i], alg.fundamental[j]);
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), g[i][j].get_den_mpz_t());
    }
  scale_ = l.get_si();
  gram_.assign(r_, std::vector<long>(r_));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) gram_[i][j] = Q(g[i][j] * scale_).get_num().get_si();
  Mat c(r_, Vec(r_));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) c[i][j] = cartan_[i][j];
  Q d = det(c);
  det_ = d.get_num().get_si();
  Mat inv = inverse(c);
  height_row_.assign(r_, 0);
  for (int i = 0; i < r_; ++i) {
    Q s = 0;
    for (int j = 0; j < r_; ++j) s += inv[i][j];
    height_row_[i] = Q(s * d).get_num().get_si();
  }
}

long LieTables::form(const Labels& x, const Labels& y) const {
  long s = 0;
  for (int i = 0; i < r_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < r_; ++j) s += x[i] * gram_[i][j] * y[j];
  }
  return s;
}

long LieTables::height(const Labels& x) const {
  long s = 0;
  for (int i = 0; i < r_; ++i) s += x[i] * height_row_[i];
  return s;
}

int LieTables::to_dominant(Labels& x) const {
  int sign = 1;
  for (;;) {
    int i = 0;
    while (i < r_ && x[i] >= 0) ++i;
    if (i == r_) return sign;
    long k = x[i];
    for (int j = 0; j < r_; ++j) x[j] -= k * cartan_[i][j];
    sign = -sign;
  }
}

std::vector<Labels> LieTables::orbit(const Labels& dominant) const {
  std::set<Labels> seen{dominant};
  std::vector<Labels> frontier{dominant};
  while (!frontier.empty()) {
    std::vector<Labels> next;
    for (const auto& x : frontier)
      for (int i = 0; i < r_; ++i) {
        if (x[i] <= 0) continue;
        Labels y = x;
        for (int j = 0; j < r_; ++j) y[j] -= x[i] * cartan_[i][j];
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

Labels to_labels(const AlgebraData& alg, const Weight& w) {
  Vec v = dynkin_labels(alg, w);
  Labels l;
  for (const auto& x : v) {
    if (!is_integer(x)) throw std::invalid_argument("weight is not integral: " + format_weight(alg, w));
    l.push_back(x.get_num().get_si());
  }
  return l;
}

bool is_dominant(const Labels& l) {
  return std::all_of(l.begin(), l.end(), [](long x) { return x >= 0; });
}

mpz_class weyl_dim(const LieTables& t, const Labels& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("weyl_dim needs a dominant weight");
  Labels lr = lambda, rho(t.rank(), 1);
  for (auto& x : lr) x += 1;
  Q d = 1;
  for (const auto& a : t.positive_roots()) {
    Q f(t.form(lr, a), t.form(rho, a));
    f.canonicalize();
    d *= f;
  }
  return d.get_num();
}

mpz_class weyl_dim(const AlgebraData& alg, const Weight& lambda) {
  return weyl_dim(LieTables(alg), to_labels(alg, lambda));
}

DominantCharacter dominant_character(const LieTables& t, const Labels& lambda, size_t cap) {
  if (!is_dominant(lambda)) throw std::invalid_argument("highest weight must be dominant");
  int r = t.rank();
  std::set<Labels> dom{lambda};
  std::vector<Labels> frontier{lambda};
  while (!frontier.empty()) {
    std::vector<Labels> next;
    for (const auto& x : frontier)
      for (const auto& a : t.positive_roots()) {
        Labels y(r);
        for (int j = 0; j < r; ++j) y[j] = x[j] - a[j];
        if (is_dominant(y) && dom.insert(y).second) {
          if (dom.size() > cap) throw CapExceeded("dominant weight cap exceeded");
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  std::vector<Labels> order(dom.begin(), dom.end());
  std::stable_sort(order.begin(), order.end(),
                   [&](const Labels& a, const Labels& b) { return t.height(a) > t.height(b); });
  Labels lr = lambda;
  for (auto& x : lr) x += 1;
  long top = t.form(lr, lr);
  DominantCharacter ch;
  ch.highest = lambda;
  auto mult_of = [&](Labels x) -> long {
    t.to_dominant(x);
    auto it = ch.mult.find(x);
    return it == ch.mult.end() ? 0 : it->second;
  };
  for (const auto& mu : order) {
    if (mu == lambda) {
      ch.mult[mu] = 1;
      continue;
    }
    long num = 0;
    for (const auto& a : t.positive_roots()) {
      Labels y = mu;
      for (long k = 1;; ++k) {
        for (int j = 0; j < r; ++j) y[j] += a[j];
        long m = mult_of(y);
        if (m == 0) break;
        num += 2 * m * t.form(y, a);
      }
    }
    Labels mr = mu;
    for (auto& x : mr) x += 1;
    long den = top - t.form(mr, mr);
    if (num % den != 0) throw std::logic_error("Freudenthal recursion produced a fraction");
    long m = num / den;
    if (m > 0) ch.mult[mu] = m;
  }
  return ch;
}

DominantCharacter dominant_character(const AlgebraData& alg, const Weight& lambda, size_t cap) {
  return dominant_character(LieTables(alg), to_labels(alg, lambda), cap);
}

std::map<Labels, long> full_character(const LieTables& t, const DominantCharacter& ch) {
  std::map<Labels, long> out;
  for (const auto& [mu, m] : ch.mult)
    for (const auto& w : t.orbit(mu)) out[w] += m;
  return out;
}

namespace {

Decomposition sorted(const LieTables& t, const std::map<Labels, long>& acc) {
  Decomposition d;
  for (const auto& [w, m] : acc) {
    if (m < 0) throw std::logic_error("negative multiplicity in decomposition");
    if (m > 0) d.push_back({w, m});
  }
  std::sort(d.begin(), d.end(), [&](const auto& a, const auto& b) {
    long ha = t.height(a.first), hb = t.height(b.first);
    if (ha != hb) return ha > hb;
    return a.first > b.first;
  });
  return d;
}

}  // namespace

Decomposition tensor_decompose(const LieTables& t, const Labels& lambda, const Labels& mu, size_t cap) {
  if (!is_dominant(lambda) || !is_dominant(mu)) throw std::invalid_argument("weights must be dominant");
  // Expand the smaller factor.
  const Labels* big = &lambda;
  const Labels* small = &mu;
  if (weyl_dim(t, mu) > weyl_dim(t, lambda)) std::swap(big, small);
  auto chars = full_character(t, dominant_character(t, *small, cap));
  int r = t.rank();
  std::map<Labels, long> acc;
  for (const auto& [nu, m] : chars) {
    Labels x(r);
    for (int j = 0; j < r; ++j) x[j] = (*big)[j] + nu[j] + 1;
    int sign = t.to_dominant(x);
    if (std::find(x.begin(), x.end(), 0) != x.end()) continue;
    for (auto& v : x) v -= 1;
    acc[x] += sign * m;
  }
  return sorted(t, acc);
}

Decomposition tensor_decompose(const AlgebraData& alg, const Weight& lambda, const Weight& mu, size_t cap) {
  return tensor_decompose(LieTables(alg), to_labels(alg, lambda), to_labels(alg, mu), cap);
}

Decomposition tensor_decompose_brute(const LieTables& t, const Labels& lambda, const Labels& mu) {
  auto a = full_character(t, dominant_character(t, lambda));
  auto b = full_character(t, dominant_character(t, mu));
  int r = t.rank();
  std::map<Labels, long> prod;
  for (const auto& [x, mx] : a)
    for (const auto& [y, my] : b) {
      Labels z(r);
      for (int j = 0; j < r; ++j) z[j] = x[j] + y[j];
      prod[z] += mx * my;
    }
  std::map<Labels, long> acc;
  for (;;) {
    const Labels* top = nullptr;
    for (const auto& [w, m] : prod) {
      if (m == 0) continue;
      if (!top || t.height(w) > t.height(*top)) top = &w;
    }
    if (!top) break;
    Labels hw = *top;
    long m = prod[hw];
    if (m < 0 || !is_dominant(hw)) throw std::logic_error("peeling reached an invalid weight");
    acc[hw] += m;
    for (const auto& [w, k] : full_character(t, dominant_character(t, hw))) prod[w] -= m * k;
  }
  return sorted(t, acc);
}

}  // namespace mwa
