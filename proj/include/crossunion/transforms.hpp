#pragma once

#include <array>
#include <string>
#include <vector>

#include "crossunion/family.hpp"

namespace crossunion {

SetFamily shadow(const SetFamily& f);  // pre: f nonempty uniform of size k >= 1
SetFamily shade(const SetFamily& f);   // pre: f nonempty uniform of size k <= n-1

/* Replace the top slice by its shadow / the bottom slice by its shade.
   Antichain inputs stay antichains; top drops by exactly 1 under the first,
   bottom rises by exactly 1 under the second. */
SetFamily lower_compress(const SetFamily& f);  // pre: f nonempty, f != {emptyset}
SetFamily upper_compress(const SetFamily& f);  // pre: f nonempty, f != {X}

enum class StepKind { lower_A, lower_B, upper_A, lower_both, fill_to_full_level };
const char* step_kind_name(StepKind k);

struct TraceStep {
  StepKind kind;
  std::array<int, 2> sizes_before{};
  std::array<int, 2> sizes_after{};
  std::array<int, 2> tops_after{};
};
struct CompressionTrace {
  std::vector<TraceStep> steps;
};
std::string serialize_trace(const CompressionTrace& t, bool pretty = false);

/* Repeatedly replaces the pair by compressed variants until the tops satisfy
   t(A) + t(B) <= s, recording one trace step per replacement. Sizes never
   decrease componentwise along the way. Deterministic: when both sides could
   be lower-compressed without losing size, the one with the larger top is
   compressed, ties going to the second family; the size-preserving stalemate
   at t(A)+t(B) = s+1 upper-compresses (or fills to a full level) whichever
   family has the smaller top, ties going to the first. */
FamilyPair compress_pair(const FamilyPair& p, int s,
                         CompressionTrace* trace = nullptr);

/* S_ij: replace j by i in each member containing j but not i, unless the
   replacement is already present. Always |result| = |f|. */
SetFamily shift_ij(const SetFamily& f, int i, int j);  // pre: 1 <= i < j <= n

SetFamily make_shifted(const SetFamily& f);

/* Applies the same S_ij to both families simultaneously (lexicographic (i,j)
   sweeps) until a joint fixed point. Preserves both cardinalities and the
   cross union bound of the pair. */
FamilyPair make_shifted_pair(const FamilyPair& p);

bool is_shifted(const SetFamily& f);

/* ({F in f : n not in F}, {F - {n} : n in F}), both over ground set n-1. */
FamilyPair link_and_delete(const SetFamily& f);  // pre: n >= 2

/* Compares |lower_compress(F)| against |F| on both sides and reports which
   grew. Growth of the first family wins over growth of the second;
   both_equal_r1 means only that neither grew, measured, not assumed. */
enum class Cor23Outcome { first_grows, second_grows, both_equal_r1 };
const char* cor23_outcome_name(Cor23Outcome o);
Cor23Outcome check_cor_2_3(const FamilyPair& p, int r);

}  // namespace crossunion
