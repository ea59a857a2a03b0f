#include "crossunion/json_io.hpp"

#include <json.hpp>

namespace crossunion {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
  return j;
}

SetFamily family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("sets"))
    throw std::invalid_argument("family must be {\"n\": ..., \"sets\": [...]}");
  if (!j["n"].is_number_integer())
    throw std::invalid_argument("\"n\" must be an integer");
  int n = j["n"].get<int>();
  check_ground(n);
  if (!j["sets"].is_array())
    throw std::invalid_argument("\"sets\" must be an array");

  std::vector<Mask> sets;
  sets.reserve(j["sets"].size());
  for (const auto& js : j["sets"]) {
    if (!js.is_array()) throw std::invalid_argument("each set must be an array");
    Mask m = 0;
    int prev = 0;
    for (const auto& je : js) {
      if (!je.is_number_integer())
        throw std::invalid_argument("set elements must be integers");
      int x = je.get<int>();
      if (x < 1 || x > n)
        throw std::invalid_argument("element " + std::to_string(x) +
                                    " outside [1," + std::to_string(n) + "]");
      if (x <= prev)
        throw std::invalid_argument("set elements must be strictly ascending");
      prev = x;
      m |= Mask{1} << (x - 1);
    }
    sets.push_back(m);
  }
  SetFamily f = make_family(n, sets);
  if (f.size() != sets.size())
    throw std::invalid_argument("duplicate sets in family");
  return f;
}

json family_to_json(const SetFamily& f) {
  json sets = json::array();
  for (Mask m : f.sets) {
    json one = json::array();
    for (int i = 1; i <= f.n; ++i)
      if (m & (Mask{1} << (i - 1))) one.push_back(i);
    sets.push_back(std::move(one));
  }
  return json{{"n", f.n}, {"sets", std::move(sets)}};
}

std::vector<SetFamily> families_from_json(const std::string& text,
                                          std::size_t count) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("families") || !j["families"].is_array())
    throw std::invalid_argument("expected {\"families\": [...]}");
  if (j["families"].size() != count)
    throw std::invalid_argument("expected exactly " + std::to_string(count) +
                                " families, got " +
                                std::to_string(j["families"].size()));
  std::vector<SetFamily> out;
  for (const auto& jf : j["families"]) out.push_back(family_from_json(jf));
  for (const auto& f : out)
    if (f.n != out.front().n)
      throw std::invalid_argument("families live on different ground sets");
  return out;
}

std::string dump(const json& j, bool pretty) {
  return pretty ? j.dump(2) : j.dump();
}

}  // namespace

SetFamily parse_family(const std::string& text) {
  return family_from_json(parse_text(text));
}

FamilyPair parse_family_pair(const std::string& text) {
  auto fams = families_from_json(text, 2);
  return FamilyPair{std::move(fams[0]), std::move(fams[1])};
}

FamilyTriple parse_family_triple(const std::string& text) {
  auto fams = families_from_json(text, 3);
  return FamilyTriple{std::move(fams[0]), std::move(fams[1]),
                      std::move(fams[2])};
}

std::string serialize_family(const SetFamily& f, bool pretty) {
  return dump(family_to_json(f), pretty);
}

std::string serialize_family_pair(const FamilyPair& p, bool pretty) {
  json j{{"families", {family_to_json(p.first), family_to_json(p.second)}}};
  return dump(j, pretty);
}

std::string serialize_family_triple(const FamilyTriple& t, bool pretty) {
  json j{{"families",
          {family_to_json(t.first), family_to_json(t.second),
           family_to_json(t.third)}}};
  return dump(j, pretty);
}

}  // namespace crossunion
