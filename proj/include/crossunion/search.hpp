#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "crossunion/family.hpp"

namespace crossunion {

/* Worker count for the exhaustive searches. 0 defers to the
   CROSSUNION_THREADS environment variable, then to 1. Results are identical
   for every worker count; only nodes/millis may differ. */
struct SearchOptions {
  int threads = 1;
};
int resolve_threads(int requested);

struct SearchResult {
  long long max_value = 0;
  std::vector<FamilyPair> pair_witnesses;      // deduped up to swapping
  std::vector<FamilyTriple> triple_witnesses;  // deduped up to permutation
  std::vector<SetFamily> family_witnesses;     // single-family searches
  std::uint64_t nodes = 0;                     // informational only
  std::int64_t millis = 0;
};
std::string serialize_search_result(const SearchResult& r, bool pretty = false);

/* Size and one witness of a maximum antichain inside a down-closed family,
   via minimum chain cover (maximum bipartite matching over the containment
   relation, witness extracted from the minimum vertex cover). Capped at
   4096 members. */
std::pair<long long, SetFamily> max_antichain_in_downset(
    const SetFamily& allowed);

/* Maximum of |A|+|B| over nonempty cross s-union antichain pairs on [n];
   all witnesses up to swap. With forbid_empty_singleton, pairs with either
   component equal to {emptyset} are excluded. n <= 6. */
SearchResult search_max_pair_antichain(int n, int s, bool forbid_empty_singleton,
                                       const SearchOptions& opt = {});

/* Maximum of |A|+|B|+|C| over nonempty antichain triples whose cross unions
   (one member from each) stay within s; witnesses up to permutation. n <= 6. */
SearchResult search_max_triple_antichain(int n, int s,
                                         const SearchOptions& opt = {});

/* Maximum of |A|+|B| over nonempty cross s-union pairs with no antichain
   requirement. Both sides may be taken down-closed: replacing a family by
   its down-closure only shrinks unions, so the predicate survives and sizes
   never drop. Witnesses are the closure-maximal pairs. n <= 5. */
SearchResult search_max_pair_general(int n, int s, const SearchOptions& opt = {});

/* Maximum size of a single s-union antichain (self-unions included). n <= 6. */
SearchResult search_milner(int n, int s, const SearchOptions& opt = {});

/* Maximum of min(|A|,|B|) over nonempty cross s-union antichain pairs.
   Value only, no witnesses. n <= 6. */
SearchResult search_min_pair(int n, int s, const SearchOptions& opt = {});

/* Pair-antichain search at s = n-1. n <= 5. */
SearchResult search_wong_tay(int n, const SearchOptions& opt = {});

/* Maximum size of a single s-union family (arbitrary, not antichain);
   searched over down-closed families, which is no loss of generality. n <= 5. */
SearchResult search_katona(int n, int s, const SearchOptions& opt = {});

}  // namespace crossunion
