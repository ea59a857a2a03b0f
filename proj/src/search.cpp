#include "crossunion/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <json.hpp>
#include <thread>
#include <unordered_map>

#include "crossunion/json_io.hpp"

namespace crossunion {

int resolve_threads(int requested) {
  if (requested < 0)
    throw std::invalid_argument("thread count must be >= 0");
  if (requested == 0) {
    if (const char* env = std::getenv("CROSSUNION_THREADS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end && *end == '\0' && v >= 1 && v <= 64) return int(v);
      throw std::invalid_argument("CROSSUNION_THREADS must be in [1,64]");
    }
    return 1;
  }
  return std::min(requested, 64);
}

namespace {

/* Exhaustive engines run on n <= 6: subsets of [n] are the values 0..2^n-1
   and a family is a 64-bit characteristic mask over them. Containment does
   not depend on n, so the per-value tables below are reusable verbatim. */

struct Universe {
  int n = 0, s = 0, count = 0;
  std::uint64_t all = 0;       // every subset value
  std::uint64_t size_ok = 0;   // values with popcount <= s (includes 0)
  std::uint64_t cand = 0;      // size_ok minus the empty set
  std::array<std::uint64_t, 64> sup{};      // strict supersets
  std::array<std::uint64_t, 64> sub{};      // strict subsets
  std::array<std::uint64_t, 64> incomp{};   // incomparable values
  std::array<std::uint64_t, 64> union_ok{}; // w with |v OR w| <= s
  std::array<std::uint64_t, 64> down{};     // sub | self
  std::array<std::uint64_t, 64> after{};    // values later in canonical order
  std::array<std::int8_t, 64> canon{};      // canon[rank] = value
};

Universe make_universe(int n, int s) {
  Universe u;
  u.n = n;
  u.s = s;
  u.count = 1 << n;
  u.all = (u.count == 64) ? ~0ull : ((1ull << u.count) - 1);
  for (int v = 0; v < u.count; ++v) {
    for (int w = 0; w < u.count; ++w) {
      if (v != w && (v & ~w) == 0) u.sup[v] |= 1ull << w;
      if (v != w && (w & ~v) == 0) u.sub[v] |= 1ull << w;
      if (std::popcount(unsigned(v | w)) <= s) u.union_ok[v] |= 1ull << w;
    }
    u.incomp[v] = u.all & ~(u.sup[v] | u.sub[v] | (1ull << v));
    u.down[v] = u.sub[v] | (1ull << v);
    if (std::popcount(unsigned(v)) <= s) u.size_ok |= 1ull << v;
  }
  u.cand = u.size_ok & ~1ull;
  std::vector<int> order(u.count);
  for (int v = 0; v < u.count; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [](int a, int b) {
    return canonical_less(Mask(a), Mask(b));
  });
  std::uint64_t seen = 0;
  for (int r = u.count - 1; r >= 0; --r) {
    u.after[order[r]] = seen;
    seen |= 1ull << order[r];
  }
  for (int r = 0; r < u.count; ++r) u.canon[r] = std::int8_t(order[r]);
  return u;
}

/* Antichain width of a characteristic mask: |verts| minus a maximum matching
   of the containment bipartite graph (Dilworth via Fulkerson's reduction).
   Tiny graphs, so a plain augmenting-path matcher is enough. Memoized per
   thread; keys are pure subset masks, valid across searches. */

struct MaskMatcher {
  const std::array<std::uint64_t, 64>* sup;
  std::uint64_t allowed = 0, visited = 0;
  std::array<std::int8_t, 64> match_r{};

  bool augment(int u) {
    std::uint64_t nb = (*sup)[u] & allowed & ~visited;
    while (nb) {
      int v = std::countr_zero(nb);
      nb &= nb - 1;
      visited |= 1ull << v;
      if (match_r[v] < 0 || augment(match_r[v])) {
        match_r[v] = std::int8_t(u);
        return true;
      }
    }
    return false;
  }
};

int width_mask(const Universe& u, std::uint64_t allowed) {
  if (!allowed) return 0;
  thread_local std::unordered_map<std::uint64_t, int> memo;
  auto it = memo.find(allowed);
  if (it != memo.end()) return it->second;
  MaskMatcher m;
  m.sup = &u.sup;
  m.allowed = allowed;
  m.match_r.fill(-1);
  int matched = 0;
  for (std::uint64_t rest = allowed; rest;) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    m.visited = 0;
    if (m.augment(v)) ++matched;
  }
  int w = std::popcount(allowed) - matched;
  if (memo.size() > (1u << 22)) memo.clear();
  memo.emplace(allowed, w);
  return w;
}

SetFamily family_from_values(int n, const std::vector<int>& values) {
  std::vector<Mask> sets(values.begin(), values.end());
  return make_family(n, std::move(sets));
}

SetFamily family_from_mask(int n, std::uint64_t mask) {
  std::vector<Mask> sets;
  while (mask) {
    sets.push_back(Mask(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return make_family(n, std::move(sets));
}

/* All antichains of exactly `target` values inside `pool`, canonical member
   order, pruned by the width of what remains. */
template <class Sink>
void enum_antichains_of_size(const Universe& u, std::uint64_t pool, int target,
                             int from_rank, std::vector<int>& cur, Sink&& sink) {
  if (int(cur.size()) == target) {
    sink(cur);
    return;
  }
  if (int(cur.size()) + width_mask(u, pool) < target) return;
  for (int r = from_rank; r < u.count; ++r) {
    int v = u.canon[r];
    if (!(pool >> v & 1)) continue;
    cur.push_back(v);
    enum_antichains_of_size(u, pool & u.incomp[v], target, r + 1, cur, sink);
    cur.pop_back();
  }
}

void run_workers(int threads, int nroots, const std::function<void(int)>& fn) {
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int r; (r = next.fetch_add(1)) < nroots;) fn(r);
  };
  if (threads <= 1 || nroots <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

void bump_max(std::atomic<long long>& best, long long v) {
  long long cur = best.load(std::memory_order_relaxed);
  while (cur < v &&
         !best.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
  }
}

void check_window_cap(int n, int s, int cap) {
  check_ground(n);
  if (s <= 0 || s >= n)
    throw std::invalid_argument("need 0 < s < n, got n=" + std::to_string(n) +
                                " s=" + std::to_string(s));
  if (n > cap)
    throw scale_error("search supports n <= " + std::to_string(cap) +
                      ", got n=" + std::to_string(n));
}

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void sort_pair(FamilyPair& p) {
  if (family_less(p.second, p.first)) std::swap(p.first, p.second);
}

void sort_triple(FamilyTriple& t) {
  std::array<SetFamily*, 3> f{&t.first, &t.second, &t.third};
  std::sort(f.begin(), f.end(),
            [](const SetFamily* a, const SetFamily* b) {
              return family_less(*a, *b);
            });
  FamilyTriple out{*f[0], *f[1], *f[2]};
  t = std::move(out);
}

bool pair_order(const FamilyPair& a, const FamilyPair& b) {
  if (a.first != b.first) return family_less(a.first, b.first);
  return family_less(a.second, b.second);
}

bool triple_order(const FamilyTriple& a, const FamilyTriple& b) {
  if (a.first != b.first) return family_less(a.first, b.first);
  if (a.second != b.second) return family_less(a.second, b.second);
  return family_less(a.third, b.third);
}

/* ------------------------------------------------------------------ */
/* pair search over antichains (also serves min_pair and wong_tay)     */

struct PairSearch {
  Universe u;
  bool forbid = false;
  bool minimize_side = false;  // min(|A|,|B|) objective instead of the sum
  long long target = -1;       // witness pass only
  std::atomic<long long> best{0};
  std::atomic<std::uint64_t> nodes{0};

  long long node_value(int size_b, int w) const {
    return minimize_side ? std::min<long long>(size_b, w) : size_b + w;
  }
  long long node_bound(int size_b, int avail, int w) const {
    return minimize_side ? std::min<long long>(size_b + avail, w)
                         : size_b + avail + w;
  }

  void emit_witnesses(std::vector<int>& b_members, std::uint64_t allowed,
                      int need, std::vector<FamilyPair>& out) {
    SetFamily fb = family_from_values(u.n, b_members);
    std::vector<int> cur;
    enum_antichains_of_size(u, allowed, need, 0, cur, [&](const std::vector<int>& a) {
      if (forbid && a.size() == 1 && a[0] == 0) return;
      FamilyPair p{family_from_values(u.n, a), fb};
      sort_pair(p);
      out.push_back(std::move(p));
    });
  }

  void dfs(std::uint64_t avail, std::uint64_t allowed, std::vector<int>& cur,
           std::uint64_t& local_nodes, std::vector<FamilyPair>* out) {
    ++local_nodes;
    if (forbid && allowed == 1) return;  // no partner family remains possible
    int w = width_mask(u, allowed);
    int size_b = int(cur.size());
    if (out == nullptr) {
      bump_max(best, node_value(size_b, w));
      if (node_bound(size_b, std::popcount(avail), w) <=
          best.load(std::memory_order_relaxed))
        return;
    } else {
      if (node_value(size_b, w) == target)
        emit_witnesses(cur, allowed, w, *out);
      if (node_bound(size_b, std::popcount(avail), w) < target) return;
    }
    for (int r = 0; r < u.count; ++r) {
      int v = u.canon[r];
      if (!(avail >> v & 1)) continue;
      cur.push_back(v);
      dfs(avail & u.incomp[v] & u.after[v], allowed & u.union_ok[v], cur,
          local_nodes, out);
      cur.pop_back();
    }
  }

  // roots: the {emptyset} family (unless forbidden), then one per candidate
  void run_pass(int threads, std::vector<std::vector<FamilyPair>>* collect) {
    std::vector<int> roots;
    if (!forbid) roots.push_back(-1);
    for (int r = 0; r < u.count; ++r)
      if (u.cand >> u.canon[r] & 1) roots.push_back(int(u.canon[r]));
    if (collect) collect->assign(roots.size(), {});

    run_workers(threads, int(roots.size()), [&](int ri) {
      std::uint64_t local_nodes = 0;
      std::vector<int> cur;
      std::vector<FamilyPair>* out = collect ? &(*collect)[ri] : nullptr;
      if (roots[ri] < 0) {
        cur.push_back(0);
        // {emptyset} cannot be extended; evaluate it directly
        ++local_nodes;
        int w = width_mask(u, u.size_ok);
        if (out == nullptr) {
          bump_max(best, node_value(1, w));
        } else if (node_value(1, w) == target) {
          emit_witnesses(cur, u.size_ok, w, *out);
        }
      } else {
        int v = roots[ri];
        cur.push_back(v);
        dfs(u.cand & u.incomp[v] & u.after[v], u.union_ok[v], cur, local_nodes,
            out);
      }
      nodes.fetch_add(local_nodes, std::memory_order_relaxed);
    });
  }
};

SearchResult run_pair_search(int n, int s, bool forbid, bool minimize_side,
                             const SearchOptions& opt, int cap) {
  check_window_cap(n, s, cap);
  int threads = resolve_threads(opt.threads);
  Stopwatch clock;
  PairSearch ps;
  ps.u = make_universe(n, s);
  ps.forbid = forbid;
  ps.minimize_side = minimize_side;

  ps.run_pass(threads, nullptr);
  SearchResult res;
  res.max_value = ps.best.load();

  if (!minimize_side) {
    ps.target = res.max_value;
    std::vector<std::vector<FamilyPair>> collect;
    ps.run_pass(threads, &collect);
    for (auto& chunk : collect)
      for (auto& p : chunk) res.pair_witnesses.push_back(std::move(p));
    std::sort(res.pair_witnesses.begin(), res.pair_witnesses.end(), pair_order);
    res.pair_witnesses.erase(
        std::unique(res.pair_witnesses.begin(), res.pair_witnesses.end()),
        res.pair_witnesses.end());
  }
  res.nodes = ps.nodes.load();
  res.millis = clock.ms();
  return res;
}

/* ------------------------------------------------------------------ */
/* triple search                                                       */

struct TripleSearch {
  Universe u;
  long long target = -1;
  std::atomic<long long> best{0};
  std::atomic<std::uint64_t> nodes{0};
  // pair_ok[v]: values w with |v OR w| <= s, i.e. union_ok restricted later
  // (identical table; kept under the engine's usual name via u.union_ok)

  std::uint64_t third_row(const std::vector<int>& b_members, int c) const {
    std::uint64_t row = ~0ull;
    for (int b : b_members) row &= u.union_ok[b | c];
    return row;
  }

  void emit(const std::vector<int>& b_members, const std::vector<int>& c_members,
            std::uint64_t allowed, int need, std::vector<FamilyTriple>& out) {
    SetFamily fb = family_from_values(u.n, b_members);
    SetFamily fc = family_from_values(u.n, c_members);
    std::vector<int> cur;
    enum_antichains_of_size(u, allowed, need, 0, cur, [&](const std::vector<int>& a) {
      FamilyTriple t{family_from_values(u.n, a), fb, fc};
      sort_triple(t);
      out.push_back(std::move(t));
    });
  }

  void dfs_c(const std::vector<int>& b_members, std::uint64_t avail_c,
             std::uint64_t allowed, std::vector<int>& cur_c,
             std::uint64_t& local_nodes, std::vector<FamilyTriple>* out) {
    ++local_nodes;
    int w = width_mask(u, allowed);
    int size = int(b_members.size() + cur_c.size());
    if (out == nullptr) {
      bump_max(best, size + w);
      if (size + std::popcount(avail_c) + w <=
          best.load(std::memory_order_relaxed))
        return;
    } else {
      if (size + w == target) emit(b_members, cur_c, allowed, w, *out);
      if (size + std::popcount(avail_c) + w < target) return;
    }
    for (int r = 0; r < u.count; ++r) {
      int v = u.canon[r];
      if (!(avail_c >> v & 1)) continue;
      cur_c.push_back(v);
      // members of C are not union-constrained against each other
      dfs_c(b_members, avail_c & u.incomp[v] & u.after[v],
            allowed & third_row(b_members, v), cur_c, local_nodes, out);
      cur_c.pop_back();
    }
  }

  // enumerate the middle family C for a fixed complete B
  void explore_b_node(const std::vector<int>& b_members, std::uint64_t avail_c0,
                      std::uint64_t allowed_b, std::uint64_t& local_nodes,
                      std::vector<FamilyTriple>* out) {
    std::vector<int> cur_c{0};  // C = {emptyset}; no extensions from it
    ++local_nodes;
    int w = width_mask(u, allowed_b);
    int size = int(b_members.size()) + 1;
    if (out == nullptr) {
      bump_max(best, size + w);
    } else if (size + w == target) {
      emit(b_members, cur_c, allowed_b, w, *out);
    }
    cur_c.clear();
    for (int r = 0; r < u.count; ++r) {
      int v = u.canon[r];
      if (!(avail_c0 >> v & 1)) continue;
      cur_c.push_back(v);
      dfs_c(b_members, avail_c0 & u.incomp[v] & u.after[v],
            allowed_b & third_row(b_members, v), cur_c, local_nodes, out);
      cur_c.pop_back();
    }
  }

  void dfs_b(std::uint64_t avail_b, std::uint64_t avail_c0,
             std::uint64_t allowed_b, std::vector<int>& cur_b,
             std::uint64_t& local_nodes, std::vector<FamilyTriple>* out) {
    /* everything below this node is capped before any work is done:
       B grows by at most |avail_b|, C never exceeds max(1,|avail_c0|) and
       A fits inside the current allowed set */
    long long c_cap = std::max(1, std::popcount(avail_c0));
    long long bound = (long long)cur_b.size() + std::popcount(avail_b) + c_cap +
                      width_mask(u, allowed_b);
    if (out == nullptr) {
      if (bound <= best.load(std::memory_order_relaxed)) return;
    } else {
      if (bound < target) return;
    }
    explore_b_node(cur_b, avail_c0, allowed_b, local_nodes, out);
    for (int r = 0; r < u.count; ++r) {
      int v = u.canon[r];
      if (!(avail_b >> v & 1)) continue;
      cur_b.push_back(v);
      dfs_b(avail_b & u.incomp[v] & u.after[v], avail_c0 & u.union_ok[v],
            allowed_b & u.union_ok[v], cur_b, local_nodes, out);
      cur_b.pop_back();
    }
  }

  void run_pass(int threads, std::vector<std::vector<FamilyTriple>>* collect) {
    std::vector<int> roots;
    roots.push_back(-1);  // B = {emptyset}
    for (int r = 0; r < u.count; ++r)
      if (u.cand >> u.canon[r] & 1) roots.push_back(int(u.canon[r]));
    if (collect) collect->assign(roots.size(), {});

    run_workers(threads, int(roots.size()), [&](int ri) {
      std::uint64_t local_nodes = 0;
      std::vector<int> cur_b;
      std::vector<FamilyTriple>* out = collect ? &(*collect)[ri] : nullptr;
      if (roots[ri] < 0) {
        cur_b.push_back(0);
        explore_b_node(cur_b, u.cand & u.union_ok[0], u.union_ok[0],
                       local_nodes, out);
      } else {
        int v = roots[ri];
        cur_b.push_back(v);
        dfs_b(u.cand & u.incomp[v] & u.after[v], u.cand & u.union_ok[v],
              u.union_ok[v], cur_b, local_nodes, out);
      }
      nodes.fetch_add(local_nodes, std::memory_order_relaxed);
    });
  }
};

/* ------------------------------------------------------------------ */
/* general pair search (down-closed families) and single-family twins  */

struct DownsetSearch {
  Universe u;
  bool general_pair = false;  // else: single-family s-union maximum
  long long target = -1;
  std::atomic<long long> best{0};
  std::atomic<std::uint64_t> nodes{0};

  long long value(std::uint64_t dmask, std::uint64_t allowed) const {
    return general_pair ? std::popcount(dmask) + std::popcount(allowed)
                        : std::popcount(dmask);
  }

  void emit(std::uint64_t dmask, std::uint64_t allowed,
            std::vector<FamilyPair>* pairs, std::vector<SetFamily>* fams) {
    if (general_pair) {
      FamilyPair p{family_from_mask(u.n, allowed), family_from_mask(u.n, dmask)};
      sort_pair(p);
      pairs->push_back(std::move(p));
    } else {
      fams->push_back(family_from_mask(u.n, dmask));
    }
  }

  // maximal elements form an antichain; members of a single s-union family
  // must also be pairwise union-bounded, which down-closure preserves
  void dfs(std::uint64_t avail, std::uint64_t dmask, std::uint64_t allowed,
           std::uint64_t& local_nodes, std::vector<FamilyPair>* pairs,
           std::vector<SetFamily>* fams) {
    ++local_nodes;
    if (target >= 0 && value(dmask, allowed) == target)
      emit(dmask, allowed, pairs, fams);
    else if (target < 0)
      bump_max(best, value(dmask, allowed));
    for (int r = 0; r < u.count; ++r) {
      int v = u.canon[r];
      if (!(avail >> v & 1)) continue;
      std::uint64_t next_avail = avail & u.incomp[v] & u.after[v];
      if (!general_pair) next_avail &= u.union_ok[v];
      dfs(next_avail, dmask | u.down[v], allowed & u.union_ok[v], local_nodes,
          pairs, fams);
    }
  }

  void run_pass(int threads, std::vector<std::vector<FamilyPair>>* cpairs,
                std::vector<std::vector<SetFamily>>* cfams) {
    std::vector<int> roots;
    roots.push_back(-1);  // maximal antichain {emptyset}: the family {emptyset}
    for (int r = 0; r < u.count; ++r)
      if (u.cand >> u.canon[r] & 1) roots.push_back(int(u.canon[r]));
    if (cpairs) cpairs->assign(roots.size(), {});
    if (cfams) cfams->assign(roots.size(), {});

    run_workers(threads, int(roots.size()), [&](int ri) {
      std::uint64_t local_nodes = 0;
      std::vector<FamilyPair>* pairs = cpairs ? &(*cpairs)[ri] : nullptr;
      std::vector<SetFamily>* fams = cfams ? &(*cfams)[ri] : nullptr;
      if (roots[ri] < 0) {
        ++local_nodes;
        if (target >= 0 && value(1, u.size_ok) == target)
          emit(1, u.size_ok, pairs, fams);
        else if (target < 0)
          bump_max(best, value(1, u.size_ok));
      } else {
        int v = roots[ri];
        std::uint64_t avail = u.cand & u.incomp[v] & u.after[v];
        if (!general_pair) avail &= u.union_ok[v];
        dfs(avail, u.down[v], u.union_ok[v], local_nodes, pairs, fams);
      }
      nodes.fetch_add(local_nodes, std::memory_order_relaxed);
    });
  }
};

/* ------------------------------------------------------------------ */
/* plain antichain maximum (single family, pairwise union-bounded)     */

struct MilnerSearch {
  Universe u;
  long long target = -1;
  std::atomic<long long> best{0};
  std::atomic<std::uint64_t> nodes{0};

  void dfs(std::uint64_t avail, std::vector<int>& cur,
           std::uint64_t& local_nodes, std::vector<SetFamily>* out) {
    ++local_nodes;
    int size = int(cur.size());
    if (out == nullptr) {
      bump_max(best, size);
      if (size + std::popcount(avail) <= best.load(std::memory_order_relaxed))
        return;
    } else {
      if (size == target) out->push_back(family_from_values(u.n, cur));
      if (size + std::popcount(avail) < target) return;
    }
    for (int r = 0; r < u.count; ++r) {
      int v = u.canon[r];
      if (!(avail >> v & 1)) continue;
      cur.push_back(v);
      dfs(avail & u.incomp[v] & u.after[v] & u.union_ok[v], cur, local_nodes,
          out);
      cur.pop_back();
    }
  }

  void run_pass(int threads, std::vector<std::vector<SetFamily>>* collect) {
    std::vector<int> roots;
    roots.push_back(-1);  // the family {emptyset}
    for (int r = 0; r < u.count; ++r)
      if (u.cand >> u.canon[r] & 1) roots.push_back(int(u.canon[r]));
    if (collect) collect->assign(roots.size(), {});

    run_workers(threads, int(roots.size()), [&](int ri) {
      std::uint64_t local_nodes = 0;
      std::vector<int> cur;
      std::vector<SetFamily>* out = collect ? &(*collect)[ri] : nullptr;
      if (roots[ri] < 0) {
        ++local_nodes;
        if (out == nullptr)
          bump_max(best, 1);
        else if (target == 1)
          out->push_back(family_from_values(u.n, {0}));
      } else {
        int v = roots[ri];
        cur.push_back(v);
        dfs(u.cand & u.incomp[v] & u.after[v] & u.union_ok[v], cur,
            local_nodes, out);
      }
      nodes.fetch_add(local_nodes, std::memory_order_relaxed);
    });
  }
};

}  // namespace

std::pair<long long, SetFamily> max_antichain_in_downset(
    const SetFamily& allowed) {
  constexpr std::size_t member_cap = 4096;
  if (allowed.size() > member_cap)
    throw scale_error("max_antichain_in_downset supports at most " +
                      std::to_string(member_cap) + " members");
  for (Mask m : allowed.sets)
    for (Mask rest = m; rest;) {
      Mask low = rest & (~rest + 1);
      if (!allowed.contains(m ^ low))
        throw std::invalid_argument("family is not down-closed: " +
                                    set_to_string(m ^ low) + " missing under " +
                                    set_to_string(m));
      rest ^= low;
    }
  if (allowed.empty()) return {0, empty_family(allowed.n)};

  int m = int(allowed.size());
  std::vector<std::vector<int>> adj(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && subset_of(allowed.sets[i], allowed.sets[j]))
        adj[i].push_back(j);

  // Hopcroft--Karp over the containment graph
  constexpr int inf = 1 << 30;
  std::vector<int> match_l(m, -1), match_r(m, -1), dist(m);
  std::vector<int> queue(m);
  auto bfs = [&] {
    int head = 0, tail = 0;
    bool found = false;
    for (int i = 0; i < m; ++i) {
      if (match_l[i] < 0) {
        dist[i] = 0;
        queue[tail++] = i;
      } else {
        dist[i] = inf;
      }
    }
    while (head < tail) {
      int i = queue[head++];
      for (int j : adj[i]) {
        int k = match_r[j];
        if (k < 0)
          found = true;
        else if (dist[k] == inf) {
          dist[k] = dist[i] + 1;
          queue[tail++] = k;
        }
      }
    }
    return found;
  };
  std::function<bool(int)> try_match = [&](int i) {
    for (int j : adj[i]) {
      int k = match_r[j];
      if (k < 0 || (dist[k] == dist[i] + 1 && try_match(k))) {
        match_l[i] = j;
        match_r[j] = i;
        return true;
      }
    }
    dist[i] = inf;
    return false;
  };
  int matched = 0;
  while (bfs())
    for (int i = 0; i < m; ++i)
      if (match_l[i] < 0 && try_match(i)) ++matched;

  /* Koenig, run from the chain heads: alternating reachability over the
     transposed edges, uncovered vertices on both sides pick the antichain.
     Starting at heads instead of tails makes level ties land on the
     canonically smaller sets. */
  std::vector<std::vector<int>> radj(m);
  for (int i = 0; i < m; ++i)
    for (int j : adj[i]) radj[j].push_back(i);
  std::vector<char> y_l(m, 0), y_r(m, 0);
  int head = 0, tail = 0;
  for (int j = 0; j < m; ++j)
    if (match_r[j] < 0) {
      y_r[j] = 1;
      queue[tail++] = j;
    }
  while (head < tail) {
    int j = queue[head++];
    for (int i : radj[j]) {
      if (y_l[i] || match_r[j] == i) continue;
      y_l[i] = 1;
      int k = match_l[i];
      if (k >= 0 && !y_r[k]) {
        y_r[k] = 1;
        queue[tail++] = k;
      }
    }
  }
  std::vector<Mask> witness;
  for (int i = 0; i < m; ++i)
    if (y_r[i] && !y_l[i]) witness.push_back(allowed.sets[i]);
  long long width = m - matched;
  if (static_cast<long long>(witness.size()) != width)
    throw std::logic_error("vertex cover did not certify the matching");
  SetFamily wf = make_family(allowed.n, std::move(witness));
  if (!is_antichain(wf))
    throw std::logic_error("extracted witness is not an antichain");
  return {width, std::move(wf)};
}

SearchResult search_max_pair_antichain(int n, int s, bool forbid_empty_singleton,
                                       const SearchOptions& opt) {
  return run_pair_search(n, s, forbid_empty_singleton, false, opt, 6);
}

SearchResult search_min_pair(int n, int s, const SearchOptions& opt) {
  return run_pair_search(n, s, false, true, opt, 6);
}

SearchResult search_wong_tay(int n, const SearchOptions& opt) {
  check_ground(n);
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (n > 5) throw scale_error("search_wong_tay supports n <= 5");
  return run_pair_search(n, n - 1, false, false, opt, 5);
}

SearchResult search_max_triple_antichain(int n, int s,
                                         const SearchOptions& opt) {
  check_window_cap(n, s, 6);
  int threads = resolve_threads(opt.threads);
  Stopwatch clock;
  TripleSearch ts;
  ts.u = make_universe(n, s);

  ts.run_pass(threads, nullptr);
  SearchResult res;
  res.max_value = ts.best.load();

  ts.target = res.max_value;
  std::vector<std::vector<FamilyTriple>> collect;
  ts.run_pass(threads, &collect);
  for (auto& chunk : collect)
    for (auto& t : chunk) res.triple_witnesses.push_back(std::move(t));
  std::sort(res.triple_witnesses.begin(), res.triple_witnesses.end(),
            triple_order);
  res.triple_witnesses.erase(
      std::unique(res.triple_witnesses.begin(), res.triple_witnesses.end()),
      res.triple_witnesses.end());
  res.nodes = ts.nodes.load();
  res.millis = clock.ms();
  return res;
}

namespace {

SearchResult run_downset_search(int n, int s, bool general_pair,
                                const SearchOptions& opt) {
  check_window_cap(n, s, 5);
  int threads = resolve_threads(opt.threads);
  Stopwatch clock;
  DownsetSearch ds;
  ds.u = make_universe(n, s);
  ds.general_pair = general_pair;

  ds.run_pass(threads, nullptr, nullptr);
  SearchResult res;
  res.max_value = ds.best.load();

  ds.target = res.max_value;
  if (general_pair) {
    std::vector<std::vector<FamilyPair>> collect;
    ds.run_pass(threads, &collect, nullptr);
    for (auto& chunk : collect)
      for (auto& p : chunk) res.pair_witnesses.push_back(std::move(p));
    std::sort(res.pair_witnesses.begin(), res.pair_witnesses.end(), pair_order);
    res.pair_witnesses.erase(
        std::unique(res.pair_witnesses.begin(), res.pair_witnesses.end()),
        res.pair_witnesses.end());
  } else {
    std::vector<std::vector<SetFamily>> collect;
    ds.run_pass(threads, nullptr, &collect);
    for (auto& chunk : collect)
      for (auto& f : chunk) res.family_witnesses.push_back(std::move(f));
    std::sort(res.family_witnesses.begin(), res.family_witnesses.end(),
              family_less);
    res.family_witnesses.erase(
        std::unique(res.family_witnesses.begin(), res.family_witnesses.end()),
        res.family_witnesses.end());
  }
  res.nodes = ds.nodes.load();
  res.millis = clock.ms();
  return res;
}

}  // namespace

SearchResult search_max_pair_general(int n, int s, const SearchOptions& opt) {
  return run_downset_search(n, s, true, opt);
}

SearchResult search_katona(int n, int s, const SearchOptions& opt) {
  return run_downset_search(n, s, false, opt);
}

SearchResult search_milner(int n, int s, const SearchOptions& opt) {
  check_window_cap(n, s, 6);
  int threads = resolve_threads(opt.threads);
  Stopwatch clock;
  MilnerSearch ms;
  ms.u = make_universe(n, s);

  ms.run_pass(threads, nullptr);
  SearchResult res;
  res.max_value = ms.best.load();

  ms.target = res.max_value;
  std::vector<std::vector<SetFamily>> collect;
  ms.run_pass(threads, &collect);
  for (auto& chunk : collect)
    for (auto& f : chunk) res.family_witnesses.push_back(std::move(f));
  std::sort(res.family_witnesses.begin(), res.family_witnesses.end(),
            family_less);
  res.family_witnesses.erase(
      std::unique(res.family_witnesses.begin(), res.family_witnesses.end()),
      res.family_witnesses.end());
  res.nodes = ms.nodes.load();
  res.millis = clock.ms();
  return res;
}

std::string serialize_search_result(const SearchResult& r, bool pretty) {
  nlohmann::json witnesses = nlohmann::json::array();
  auto fam = [](const SetFamily& f) {
    return nlohmann::json::parse(serialize_family(f));
  };
  for (const auto& p : r.pair_witnesses)
    witnesses.push_back({fam(p.first), fam(p.second)});
  for (const auto& t : r.triple_witnesses)
    witnesses.push_back({fam(t.first), fam(t.second), fam(t.third)});
  for (const auto& f : r.family_witnesses)
    witnesses.push_back(nlohmann::json::array({fam(f)}));
  nlohmann::json j{{"max", r.max_value},
                   {"witnesses", std::move(witnesses)},
                   {"nodes", r.nodes},
                   {"ms", r.millis}};
  return pretty ? j.dump(2) : j.dump();
}

}  // namespace crossunion
