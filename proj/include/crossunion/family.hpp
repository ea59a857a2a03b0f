#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossunion {

/* Ground sets are [n] = {1,...,n} with 1 <= n <= 20. A subset is a bitmask
   with element i stored at bit i-1. Families keep their members sorted by
   (cardinality, numeric value) and duplicate-free; every operation returns
   families in that canonical form. */

constexpr int max_ground = 20;

using Mask = std::uint32_t;

/* Thrown when an input exceeds a documented size cap (as opposed to being
   malformed). Callers that sweep parameter ranges can treat it separately. */
struct scale_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int check_ground(int n);  // returns n, throws unless 1 <= n <= max_ground
Mask full_set(int n);
int set_size(Mask m);
bool subset_of(Mask a, Mask b);        // a is a subset of b (possibly equal)
bool comparable(Mask a, Mask b);       // one contains the other
bool canonical_less(Mask a, Mask b);   // (cardinality, numeric value)
std::string set_to_string(Mask m);     // "{1,3,4}"; "{}" for the empty set

struct SetFamily {
  int n = 1;
  std::vector<Mask> sets;

  std::size_t size() const { return sets.size(); }
  bool empty() const { return sets.empty(); }
  bool contains(Mask m) const;

  bool operator==(const SetFamily&) const = default;
};

/* Normalizing factory: validates the ground set, masks the members into
   range checks, sorts canonically, drops duplicates. */
SetFamily make_family(int n, std::vector<Mask> sets);
SetFamily make_family_elems(int n, const std::vector<std::vector<int>>& elems);
SetFamily empty_family(int n);
SetFamily singleton_family(int n, Mask m);
SetFamily full_level(int n, int k);  // all k-subsets of [n]

bool family_less(const SetFamily& a, const SetFamily& b);
std::string family_to_string(const SetFamily& f);

struct FamilyPair {
  SetFamily first, second;
  bool operator==(const FamilyPair&) const = default;
};
struct FamilyTriple {
  SetFamily first, second, third;
  bool operator==(const FamilyTriple&) const = default;
};
FamilyPair make_family_pair(SetFamily a, SetFamily b);  // grounds must agree
FamilyTriple make_family_triple(SetFamily a, SetFamily b, SetFamily c);

/* Predicates. The empty family satisfies all of them vacuously. s and t are
   validated against [0, n]. */
bool is_antichain(const SetFamily& f);
bool is_s_union(const SetFamily& f, int s);
bool is_cross_s_union(const FamilyPair& p, int s);
bool is_cross_s_union(const FamilyTriple& t, int s);
bool is_cross_t_intersecting(const FamilyPair& p, int t);

SetFamily dual(const SetFamily& f);  // complement every member within [n]
int top(const SetFamily& f);         // largest member size; empty family is an error
int bottom(const SetFamily& f);      // smallest member size; empty family is an error
SetFamily slice(const SetFamily& f, int k);  // members of size exactly k

}  // namespace crossunion
