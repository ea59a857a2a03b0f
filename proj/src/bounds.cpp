#include "crossunion/bounds.hpp"

namespace crossunion {

namespace {

void check_nonneg(int n) {
  if (n < 0)
    throw std::invalid_argument("n must be nonnegative, got " +
                                std::to_string(n));
}

void check_window(int n, int s) {
  check_nonneg(n);
  if (s <= 0 || s >= n)
    throw std::invalid_argument("need 0 < s < n, got n=" + std::to_string(n) +
                                " s=" + std::to_string(s));
}

int need(const std::optional<int>& v, const char* name) {
  if (!v)
    throw std::invalid_argument(std::string("parameter ") + name +
                                " is required for this inequality");
  return *v;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw hypothesis_error("hypothesis violated: " + what);
}

}  // namespace

BoundValue binom(int n, int k) {
  check_nonneg(n);
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // row cache for the small-n hot path; exact fallback above it
  constexpr int cached = 64;
  if (n <= cached) {
    static const auto table = [] {
      std::vector<std::vector<BoundValue>> t(cached + 1);
      for (int i = 0; i <= cached; ++i) {
        t[i].resize(i + 1);
        t[i][0] = 1;
        for (int j = 1; j <= i; ++j)
          t[i][j] = t[i - 1][j - 1] + (j < i ? t[i - 1][j] : 0);
      }
      return t;
    }();
    return table[n][k];
  }
  BoundValue r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: the partial product is C(n-k+i, i) * i!
  }
  return r;
}

BoundValue g(int n, int r) {
  check_nonneg(n);
  if (r < 1 || 2 * r > n)
    throw std::invalid_argument("g(n,r) needs 1 <= r <= n/2, got n=" +
                                std::to_string(n) + " r=" + std::to_string(r));
  return binom(n, r) - binom(n, r - 1);
}

BoundValue katona_f(int n, int s) {
  check_window(n, s);
  int r = s / 2;
  BoundValue total = 0;
  if (s % 2 == 0) {
    for (int i = 0; i <= r; ++i) total += binom(n, i);
  } else {
    for (int i = 0; i <= r; ++i) total += binom(n - 1, i);
    total *= 2;
  }
  return total;
}

MaximalPairs maximal_pairs(int n, int s) {
  check_window(n, s);
  MaximalPairs out;
  for (int i = 0; 2 * i <= s; ++i) {
    BoundValue v = binom(n, i) + binom(n, s - i);
    if (out.pairs.empty() || v > out.value) {
      out.pairs.assign(1, {i, s - i});
      out.value = v;
    } else if (v == out.value) {
      out.pairs.emplace_back(i, s - i);
    }
  }
  return out;
}

BoundValue sum_bound_thm_1_6(int n, int s) {
  check_window(n, s);
  BoundValue total = 1;
  for (int i = 0; i <= s; ++i) total += binom(n, i);
  return total;
}

InequalityCheck check_inequality(const std::string& id,
                                 const InequalityParams& p) {
  InequalityCheck out;
  auto lt = [&](BoundValue l, BoundValue r) {
    out.lhs = std::move(l);
    out.rhs = std::move(r);
    out.holds = out.lhs < out.rhs;
    return out;
  };
  auto gt = [&](BoundValue l, BoundValue r) {
    out.lhs = std::move(l);
    out.rhs = std::move(r);
    out.holds = out.lhs > out.rhs;
    return out;
  };

  if (id == "lemma3.2i") {
    int n = need(p.n, "n");
    require(n >= 12, "n >= 12");
    // C(n,3) > n^2/2, cleared of the denominator: 2*C(n,3) > n^2
    return gt(2 * binom(n, 3), BoundValue(n) * n);
  }
  if (id == "lemma3.2ii") {
    int n = need(p.n, "n");
    require(n >= 12, "n >= 12");
    // C(n,5) > n^3/3, cleared: 3*C(n,5) > n^3
    return gt(3 * binom(n, 5), BoundValue(n) * n * n);
  }
  if (id == "lemma3.3") {
    int s = need(p.s, "s");
    require(s >= 4, "s >= 4");
    return lt(binom(2 * s - 1, 1) + binom(2 * s - 1, s - 2),
              binom(2 * s - 1, s - 1));
  }
  if (id == "lemma3.5") {
    int n = need(p.n, "n"), s = need(p.s, "s"), i = need(p.i, "i");
    require(n >= 2 * s, "n >= 2s");
    require(i > 1 && 2 * i <= s, "1 < i <= s/2");
    return lt(binom(n, i) + binom(n, s - i), binom(n, 1) + binom(n, s - 1));
  }
  if (id == "eq3.11") {
    int n = need(p.n, "n"), s = need(p.s, "s");
    require(n >= 12, "n >= 12");
    require(s >= 2 && 2 * s <= n, "2 <= s <= n/2");
    return lt(binom(n, 1) + binom(n, s - 1), binom(n, 0) + binom(n, s));
  }
  if (id == "lemma4.1i") {
    int n = need(p.n, "n"), s = need(p.s, "s");
    require(s >= 1 && n >= 2 * s, "n >= 2s >= 2");
    return lt(3 * binom(s, s / 2), 2 + binom(n, s));
  }
  if (id == "lemma4.1ii") {
    int n = need(p.n, "n"), s = need(p.s, "s");
    require(s >= 1 && n >= 2 * s, "n >= 2s >= 2");
    return lt(1 + binom(s, s / 2) + binom(n, s - 1), 2 + binom(n, s));
  }
  if (id == "lemma4.1iii") {
    int n = need(p.n, "n"), s = need(p.s, "s");
    require(s >= 3 && n >= 2 * s, "n >= 2s, s >= 3");
    return lt(binom(n, 1) + binom(n, s - 2) + binom(n, (s - 1) / 2),
              2 + binom(n, s));
  }
  if (id == "eq4.1") {
    int s = need(p.s, "s");
    require(s >= 0 && s <= 20, "0 <= s <= 20");
    BoundValue sum = 0;
    for (int i = 0; i <= s; ++i) sum += binom(s, i) * binom(s, s - i);
    out.lhs = std::move(sum);
    out.rhs = binom(2 * s, s);
    out.holds = out.lhs == out.rhs;
    return out;
  }
  throw std::invalid_argument("unknown inequality id: " + id);
}

std::vector<std::string> inequality_ids() {
  return {"lemma3.2i",  "lemma3.2ii", "lemma3.3",   "lemma3.5",  "eq3.11",
          "lemma4.1i",  "lemma4.1ii", "lemma4.1iii", "eq4.1"};
}

}  // namespace crossunion
