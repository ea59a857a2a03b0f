#include "crossunion/family.hpp"

#include <algorithm>
#include <bit>

namespace crossunion {

int check_ground(int n) {
  if (n < 1)
    throw std::invalid_argument("ground set size must be positive, got " +
                                std::to_string(n));
  if (n > max_ground)
    throw scale_error("ground set size capped at " +
                      std::to_string(max_ground) + ", got " +
                      std::to_string(n));
  return n;
}

Mask full_set(int n) { return (Mask{1} << check_ground(n)) - 1; }

int set_size(Mask m) { return std::popcount(m); }

bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

bool comparable(Mask a, Mask b) { return subset_of(a, b) || subset_of(b, a); }

bool canonical_less(Mask a, Mask b) {
  int ca = set_size(a), cb = set_size(b);
  if (ca != cb) return ca < cb;
  return a < b;
}

std::string set_to_string(Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i = 1; i <= max_ground; ++i) {
    if (m & (Mask{1} << (i - 1))) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
  }
  return out + "}";
}

bool SetFamily::contains(Mask m) const {
  return std::binary_search(sets.begin(), sets.end(), m, canonical_less);
}

SetFamily make_family(int n, std::vector<Mask> sets) {
  check_ground(n);
  Mask full = full_set(n);
  for (Mask m : sets)
    if (m & ~full)
      throw std::invalid_argument("set " + set_to_string(m) +
                                  " has elements outside [1," +
                                  std::to_string(n) + "]");
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return SetFamily{n, std::move(sets)};
}

SetFamily make_family_elems(int n, const std::vector<std::vector<int>>& elems) {
  check_ground(n);
  std::vector<Mask> sets;
  sets.reserve(elems.size());
  for (const auto& e : elems) {
    Mask m = 0;
    for (int x : e) {
      if (x < 1 || x > n)
        throw std::invalid_argument("element " + std::to_string(x) +
                                    " outside [1," + std::to_string(n) + "]");
      m |= Mask{1} << (x - 1);
    }
    sets.push_back(m);
  }
  return make_family(n, std::move(sets));
}

SetFamily empty_family(int n) {
  check_ground(n);
  return SetFamily{n, {}};
}

SetFamily singleton_family(int n, Mask m) { return make_family(n, {m}); }

SetFamily full_level(int n, int k) {
  check_ground(n);
  if (k < 0 || k > n)
    throw std::invalid_argument("level " + std::to_string(k) +
                                " outside [0," + std::to_string(n) + "]");
  std::vector<Mask> sets;
  for (Mask m = 0, end = full_set(n); m <= end; ++m)
    if (set_size(m) == k) sets.push_back(m);
  return SetFamily{n, std::move(sets)};
}

bool family_less(const SetFamily& a, const SetFamily& b) {
  return std::lexicographical_compare(a.sets.begin(), a.sets.end(),
                                      b.sets.begin(), b.sets.end(),
                                      canonical_less);
}

std::string family_to_string(const SetFamily& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.sets.size(); ++i) {
    if (i) out += ", ";
    out += set_to_string(f.sets[i]);
  }
  return out + "}";
}

namespace {
void check_same_ground(const SetFamily& a, const SetFamily& b) {
  if (a.n != b.n)
    throw std::invalid_argument("families live on different ground sets (" +
                                std::to_string(a.n) + " vs " +
                                std::to_string(b.n) + ")");
}
void check_param(int v, int n, const char* name) {
  if (v < 0 || v > n)
    throw std::invalid_argument(std::string(name) + "=" + std::to_string(v) +
                                " outside [0," + std::to_string(n) + "]");
}
}  // namespace

FamilyPair make_family_pair(SetFamily a, SetFamily b) {
  check_same_ground(a, b);
  return FamilyPair{std::move(a), std::move(b)};
}

FamilyTriple make_family_triple(SetFamily a, SetFamily b, SetFamily c) {
  check_same_ground(a, b);
  check_same_ground(a, c);
  return FamilyTriple{std::move(a), std::move(b), std::move(c)};
}

bool is_antichain(const SetFamily& f) {
  // members are sorted by cardinality, so containment can only point forward
  for (std::size_t i = 0; i < f.sets.size(); ++i)
    for (std::size_t j = i + 1; j < f.sets.size(); ++j)
      if (subset_of(f.sets[i], f.sets[j])) return false;
  return true;
}

bool is_s_union(const SetFamily& f, int s) {
  check_param(s, f.n, "s");
  for (std::size_t i = 0; i < f.sets.size(); ++i)
    for (std::size_t j = i; j < f.sets.size(); ++j)
      if (set_size(f.sets[i] | f.sets[j]) > s) return false;
  return true;
}

bool is_cross_s_union(const FamilyPair& p, int s) {
  check_same_ground(p.first, p.second);
  check_param(s, p.first.n, "s");
  for (Mask a : p.first.sets)
    for (Mask b : p.second.sets)
      if (set_size(a | b) > s) return false;
  return true;
}

bool is_cross_s_union(const FamilyTriple& t, int s) {
  check_same_ground(t.first, t.second);
  check_same_ground(t.first, t.third);
  check_param(s, t.first.n, "s");
  for (Mask a : t.first.sets)
    for (Mask b : t.second.sets)
      for (Mask c : t.third.sets)
        if (set_size(a | b | c) > s) return false;
  return true;
}

bool is_cross_t_intersecting(const FamilyPair& p, int t) {
  check_same_ground(p.first, p.second);
  check_param(t, p.first.n, "t");
  for (Mask a : p.first.sets)
    for (Mask b : p.second.sets)
      if (set_size(a & b) < t) return false;
  return true;
}

SetFamily dual(const SetFamily& f) {
  Mask full = full_set(f.n);
  std::vector<Mask> sets;
  sets.reserve(f.sets.size());
  for (Mask m : f.sets) sets.push_back(full & ~m);
  return make_family(f.n, std::move(sets));
}

int top(const SetFamily& f) {
  if (f.empty()) throw std::invalid_argument("top of empty family");
  return set_size(f.sets.back());
}

int bottom(const SetFamily& f) {
  if (f.empty()) throw std::invalid_argument("bottom of empty family");
  return set_size(f.sets.front());
}

SetFamily slice(const SetFamily& f, int k) {
  check_param(k, f.n, "k");
  std::vector<Mask> sets;
  for (Mask m : f.sets)
    if (set_size(m) == k) sets.push_back(m);
  return SetFamily{f.n, std::move(sets)};
}

}  // namespace crossunion
