#pragma once

#include <string>

#include "crossunion/family.hpp"

namespace crossunion {

/* Wire format for one family:
     {"n": 4, "sets": [[1,2], [3], []]}
   Elements are 1-based and each set must be strictly ascending. The parser
   is strict: repeated elements, repeated sets, elements outside [1,n] and
   n outside [1,20] are all rejected with invalid_argument.

   A pair is {"families": [<family>, <family>]} with matching "n" fields;
   a triple is the same with three entries. */

SetFamily parse_family(const std::string& text);
FamilyPair parse_family_pair(const std::string& text);
FamilyTriple parse_family_triple(const std::string& text);

std::string serialize_family(const SetFamily& f, bool pretty = false);
std::string serialize_family_pair(const FamilyPair& p, bool pretty = false);
std::string serialize_family_triple(const FamilyTriple& t, bool pretty = false);

}  // namespace crossunion
