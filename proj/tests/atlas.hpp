#pragma once

// Closed-form h_mu values from the finite-decomposition proofs, instantiated
// on the smallest legal members of every family. Shared by the unit tests and
// the acceptance runner.

#include <functional>
#include <string>
#include <vector>

#include "mwa/embed.hpp"

namespace atlas {

using mwa::frac;
using mwa::Q;

struct Item {
  std::string family;
  std::string case_id;
  Q k;
  std::vector<std::string> mu;  // one entry per component; "" or "0" is the zero weight
  Q expected;
};

inline std::string I(int v) { return std::to_string(v); }

// Wedge square of the vector module: D3 = A3 and B1, B2 have non-standard labels.
inline std::string wedge_d(int r) { return r == 3 ? "w2+w3" : "w2"; }
inline std::string wedge_b(int r) { return r == 1 ? "2w1" : (r == 2 ? "2w2" : "w2"); }
inline std::string sym_b(int r) { return r == 1 ? "4w1" : "2w1"; }

// First `count` pairs (a, b) ordered by a + b, then a, accepted by `legal`.
inline std::vector<std::pair<int, int>> pairs(int a0, int astep, int b0, int bstep, int count,
                                              const std::function<bool(int, int)>& legal) {
  std::vector<std::pair<int, int>> out;
  for (int s = a0 + b0; static_cast<int>(out.size()) < count; ++s)
    for (int a = a0; a <= s - b0 && static_cast<int>(out.size()) < count; a += astep) {
      const int b = s - a;
      if ((b - b0) % bstep != 0) continue;
      if (legal(a, b)) out.push_back({a, b});
    }
  return out;
}

inline std::vector<Item> items(int per_family = 6) {
  std::vector<Item> out;
  auto add = [&](const std::string& fam, const std::string& id, const Q& k, std::vector<std::string> mu,
                 const Q& e) { out.push_back({fam, id, k, std::move(mu), e}); };

  // sl(n) at -(n-1)/2 and -2n/3: h = (n-2)/(n+k-1) on mu = w1 + w_{n-3}.
  auto sl_mu = [](int n) { return n == 4 ? std::string("2w1") : "w1+w" + I(n - 3); };
  for (int n = 4; n < 4 + per_family; ++n) {
    Q k = frac(-(n - 1), 2);
    add("sl(n), k=-(h-1)/2", "sl" + I(n), k, {"", sl_mu(n)}, Q(n - 2) / (n + k - 1));
  }
  for (int n = 5, c = 0; c < per_family; ++n) {
    if (n == 6) continue;
    Q k = frac(-2 * n, 3);
    add("sl(n), k=-2h/3", "sl" + I(n), k, {"", sl_mu(n)}, Q(n - 2) / (n + k - 1));
    ++c;
  }
  // sl(2|n): h = n/(n-k-1) on w1 + w_{n-1}. The sl(n) block carries the negative
  // of the trace form, so k_1 + h_{0,1} = k + 1 - n in that normalization; this is
  // the form whose integrality reproduces the bounds n >= 4 and n >= 3.
  for (int n = 4; n < 4 + per_family; ++n) {
    Q k = frac(n - 1, 2);
    add("sl(2|n), k=-(h-1)/2", "sl(2|" + I(n) + ")", k, {"", "w1+w" + I(n - 1)}, Q(n) / (n - k - 1));
  }
  for (int n = 3; n < 3 + per_family; ++n) {
    Q k = frac(2 * (n - 2), 3);
    add("sl(2|n), k=-2h/3", "sl(2|" + I(n) + ")", k, {"", "w1+w" + I(n - 1)}, Q(n) / (n - k - 1));
  }
  // sl(m|n), m > 2: mu = d1 - e_{m-1}.
  for (auto [m, n] : pairs(3, 1, 1, 1, per_family, [](int m, int n) {
         return m != n + 3 && m != n + 2 && m != n && m != n - 1 && m != n + 1;
       }))
    add("sl(m|n), k=-(h-1)/2", "sl(" + I(m) + "|" + I(n) + ")", frac(n - m + 1, 2), {"", "d1-e" + I(m - 1)},
        2 * (1 - frac(1, m - n - 1)));
  for (auto [m, n] : pairs(3, 1, 1, 1, per_family, [](int m, int n) {
         return m != n + 6 && m != n + 4 && m != n + 2 && m != n && m != n + 3;
       }))
    add("sl(m|n), k=-2h/3", "sl(" + I(m) + "|" + I(n) + ")", frac(2 * (n - m), 3), {"", "d1-e" + I(m - 1)},
        3 * (1 + frac(1, m - n - 3)));

  // D_n, n >= 5: components (D_{n-2}, A1).
  for (int n = 5; n < 5 + per_family; ++n) {
    const std::string id = "so" + I(2 * n);
    const Q k = frac(3 - 2 * n, 2), a = frac(4 * n - 12, 2 * n - 5), b = frac(4 * n - 8, 2 * n - 5);
    const std::string w2 = wedge_d(n - 2);
    add("D_n", id, k, {"0", "2w1"}, frac(4, 3));
    add("D_n", id, k, {w2, "0"}, a);
    add("D_n", id, k, {"2w1", "0"}, b);
    add("D_n", id, k, {w2, "2w1"}, frac(4, 3) + a);
    add("D_n", id, k, {"2w1", "2w1"}, frac(4, 3) + b);
  }
  // B_n, n >= 4, n != 5: components (B_{n-2}, A1).
  for (int n = 4, c = 0; c < per_family; ++n) {
    if (n == 5) continue;
    const std::string id = "so" + I(2 * n + 1);
    const Q k(1 - n), a = frac(2 * n - 5, n - 2), b = frac(2 * n - 3, n - 2);
    const std::string w2 = wedge_b(n - 2);
    add("B_n", id, k, {"0", "2w1"}, frac(4, 3));
    add("B_n", id, k, {w2, "0"}, a);
    add("B_n", id, k, {"2w1", "0"}, b);
    add("B_n", id, k, {w2, "2w1"}, frac(4, 3) + a);
    add("B_n", id, k, {"2w1", "2w1"}, frac(4, 3) + b);
    ++c;
  }
  for (int i = 1; i <= 3; ++i) add("G2", "G2", frac(-3, 2), {I(2 * i) + "w1"}, frac(2 * i * (i + 1), 5));
  add("F4", "F4", Q(-4), {"2w1"}, frac(8, 5));
  add("F4", "F4", Q(-4), {"2w3"}, frac(18, 5));
  add("E6", "E6", frac(-11, 2), {"w1+w5"}, frac(12, 7));
  add("E6", "E6", frac(-11, 2), {"w2+w4"}, frac(20, 7));
  add("E6", "E6", frac(-11, 2), {"2w3"}, frac(24, 7));
  add("E7", "E7", frac(-17, 2), {"2w6"}, frac(36, 11));
  add("E7", "E7", frac(-17, 2), {"w4"}, frac(32, 11));
  add("E7", "E7", frac(-17, 2), {"w2"}, frac(20, 11));
  add("E8", "E8", frac(-29, 2), {"2w7"}, frac(60, 19));
  add("E8", "E8", frac(-29, 2), {"w6"}, frac(56, 19));
  add("E8", "E8", frac(-29, 2), {"w1"}, frac(36, 19));
  add("F(4)", "F(4)", frac(3, 2), {"2w3"}, frac(24, 7));
  add("F(4)", "F(4)", frac(3, 2), {"w2"}, frac(20, 7));
  add("F(4)", "F(4)", frac(3, 2), {"w1"}, frac(12, 7));

  // osp(4|2n), n >= 2: components (C_n, A1).
  for (int n = 2; n < 2 + per_family; ++n) {
    const std::string id = "osp(4|" + I(2 * n) + ")";
    const Q k = frac(2 * n - 1, 2), a = frac(4 * n, 2 * n + 1), b = frac(4 * n + 4, 2 * n + 1);
    add("osp(4|2n)", id, k, {"0", "2w1"}, frac(4, 3));
    add("osp(4|2n)", id, k, {"w2", "0"}, a);
    add("osp(4|2n)", id, k, {"2w1", "0"}, b);
    add("osp(4|2n)", id, k, {"w2", "2w1"}, frac(4, 3) + a);
    add("osp(4|2n)", id, k, {"2w1", "2w1"}, frac(4, 3) + b);
  }
  // C_{n+1} = sp(2n+2), n >= 2.
  for (int n = 2; n < 2 + per_family; ++n) {
    const std::string id = "sp" + I(2 * n + 2);
    const Q k = frac(-2 * (n + 2), 3);
    add("C_{n+1}", id, k, {"2w1"}, frac(6 * (n + 1), 2 * n + 1));
    add("C_{n+1}", id, k, {"w2"}, frac(6 * n, 2 * n + 1));
  }
  // spo(2|2n), n >= 3: D_n.
  for (int n = 3; n < 3 + per_family; ++n) {
    const std::string id = "spo(2|" + I(2 * n) + ")";
    const Q k = frac(2 * (n - 2), 3);
    add("spo(2|2n)", id, k, {"2w1"}, 3 + frac(3, 2 * n - 1));
    add("spo(2|2n)", id, k, {wedge_d(n)}, 3 - frac(3, 2 * n - 1));
  }
  // spo(2|2n+1), n >= 1: B_n.
  for (int n = 1; n < 1 + per_family; ++n) {
    const std::string id = "spo(2|" + I(2 * n + 1) + ")";
    const Q k = frac(2 * n - 3, 3);
    add("spo(2|2n+1)", id, k, {sym_b(n)}, 3 + frac(3, 2 * n));
    add("spo(2|2n+1)", id, k, {wedge_b(n)}, 3 - frac(3, 2 * n));
  }
  // spo(n|m), n >= 4 even: mu = 2d2 and (n >= 6) d2 + d3.
  for (auto [n, m] : pairs(4, 2, 1, 1, per_family, [](int n, int m) {
         return m != n + 2 && m != n && m != n - 2 && m != n - 4 && m != n - 1;
       })) {
    const std::string id = "spo(" + I(n) + "|" + I(m) + ")";
    const Q k = frac(m - n - 2, 3);
    add("spo(n|m)", id, k, {"2d2"}, 3 * (1 + frac(1, n - m - 1)));
    if (n >= 6) add("spo(n|m)", id, k, {"d2+d3"}, 3 * (1 - frac(1, n - m - 1)));
  }
  // osp(m|n), m >= 5: components (osp(m-4|n), A1). m = n + 1 and m = n + 5 have
  // no conformal level at -(h-1)/2; m = n + 5 is also the pole of the formula.
  for (auto [m, n] : pairs(5, 1, 2, 2, per_family, [](int m, int n) {
         const int r = m - n;
         return r != -1 && r != 2 && r != 3 && r != 4 && r != 6 && r != 7 && r != 8 && r != 11 && r != 5 && r != 1;
       })) {
    const std::string id = "osp(" + I(m) + "|" + I(n) + ")";
    const Q k = frac(n - m + 3, 2), t = frac(2, m - n - 5);
    add("osp(m|n)", id, k, {"0", "e1-e2"}, frac(4, 3));
    if (m >= 6) {
      add("osp(m|n)", id, k, {"2e3", "e1-e2"}, frac(10, 3) + t);
      add("osp(m|n)", id, k, {"2e3", "0"}, 2 + t);
    }
    if (m >= 8) {
      add("osp(m|n)", id, k, {"e3+e4", "e1-e2"}, frac(10, 3) - t);
      add("osp(m|n)", id, k, {"e3+e4", "0"}, 2 - t);
    }
  }
  return out;
}

inline std::vector<mwa::Weight> weights(const mwa::EmbeddingCase& c, const std::vector<std::string>& mu) {
  std::vector<mwa::Weight> out;
  for (size_t i = 0; i < mu.size(); ++i)
    out.push_back(mu[i].empty() || mu[i] == "0" ? mwa::Weight() : mwa::component_weight(c, i, mu[i]));
  return out;
}

inline Q evaluate(const Item& it) {
  const auto c = mwa::make_case(it.case_id);
  return mwa::h_mu(c, it.k, weights(c, it.mu));
}

}  // namespace atlas
