#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "crossunion/family.hpp"
#include "crossunion/transforms.hpp"
#include "oracles.hpp"

using namespace crossunion;

namespace {

SetFamily fam(int n, std::vector<std::vector<int>> elems) {
  return make_family_elems(n, elems);
}

std::vector<Mask> level_masks(int n, int k) {
  std::vector<Mask> out;
  for (Mask m = 0, end = full_set(n); m <= end; ++m)
    if (set_size(m) == int(k)) out.push_back(m);
  return out;
}

// full Thm 1.2 style contract for one compress_pair call; empty string = pass
std::string compress_contract(const FamilyPair& in, int s) {
  auto describe = [&](const char* what) {
    std::ostringstream os;
    os << what << " for A=" << family_to_string(in.first)
       << " B=" << family_to_string(in.second) << " s=" << s;
    return os.str();
  };
  int ta = top(in.first), tb = top(in.second);
  bool engaged = ta + tb > s;
  CompressionTrace tr;
  FamilyPair out = compress_pair(in, s, &tr);

  if (out.first.size() < in.first.size() || out.second.size() < in.second.size())
    return describe("a side shrank");
  if (top(out.first) > ta || top(out.second) > tb) return describe("a top rose");
  if (top(out.first) + top(out.second) > s) return describe("final tops exceed s");
  if (!is_antichain(out.first) || !is_antichain(out.second))
    return describe("output not antichains");
  if (!is_cross_s_union(out, s)) return describe("output not cross s-union");

  if (engaged) {
    if (out.first.size() + out.second.size() <= in.first.size() + in.second.size())
      return describe("engaged pair did not strictly grow");
    if (tr.steps.empty()) return describe("engaged pair left no trace");
  } else {
    if (!(out.first == in.first && out.second == in.second))
      return describe("settled pair was modified");
    if (!tr.steps.empty()) return describe("settled pair left a trace");
  }

  std::array<int, 2> prev{int(in.first.size()), int(in.second.size())};
  for (const TraceStep& st : tr.steps) {
    if (st.sizes_before != prev) return describe("trace sizes do not chain");
    if (st.sizes_after[0] < st.sizes_before[0] ||
        st.sizes_after[1] < st.sizes_before[1])
      return describe("trace step shrank a side");
    prev = st.sizes_after;
  }
  if (!tr.steps.empty()) {
    const TraceStep& last = tr.steps.back();
    if (last.sizes_after[0] != int(out.first.size()) ||
        last.sizes_after[1] != int(out.second.size()))
      return describe("trace tail disagrees with the result");
    if (last.tops_after[0] + last.tops_after[1] > s)
      return describe("trace tail tops exceed s");
  }
  return {};
}

}  // namespace

TEST_CASE("shadow: frozen examples and preconditions") {
  CHECK(shadow(fam(3, {{1, 2}})) == fam(3, {{1}, {2}}));
  CHECK(shadow(full_level(4, 2)) == full_level(4, 1));
  CHECK(shadow(fam(4, {{1, 2}, {3, 4}})) == full_level(4, 1));

  CHECK_THROWS_AS(shadow(fam(3, {{1}, {2, 3}})), std::invalid_argument);
  CHECK_THROWS_AS(shadow(fam(3, {{}})), std::invalid_argument);
  CHECK_THROWS_AS(shadow(empty_family(3)), std::invalid_argument);
}

TEST_CASE("shade: frozen examples and preconditions") {
  CHECK(shade(fam(3, {{1}})) == fam(3, {{1, 2}, {1, 3}}));
  CHECK(shade(fam(4, {{}})) == full_level(4, 1));
  CHECK(shade(full_level(4, 1)) == full_level(4, 2));

  CHECK_THROWS_AS(shade(fam(3, {{1, 2, 3}})), std::invalid_argument);
  CHECK_THROWS_AS(shade(fam(3, {{1}, {2, 3}})), std::invalid_argument);
  CHECK_THROWS_AS(shade(empty_family(3)), std::invalid_argument);
}

TEST_CASE("lower_compress: frozen examples and preconditions") {
  CHECK(lower_compress(full_level(4, 2)) == full_level(4, 1));
  CHECK(lower_compress(fam(5, {{1, 2, 3}, {4, 5}})) ==
        fam(5, {{4, 5}, {1, 2}, {1, 3}, {2, 3}}));
  CHECK(lower_compress(fam(3, {{1}, {2, 3}})) == full_level(3, 1));

  CHECK_THROWS_AS(lower_compress(fam(3, {{}})), std::invalid_argument);
  CHECK_THROWS_AS(lower_compress(empty_family(3)), std::invalid_argument);
}

TEST_CASE("upper_compress: frozen examples and preconditions") {
  CHECK(upper_compress(fam(3, {{}})) == full_level(3, 1));
  CHECK(upper_compress(fam(3, {{1}, {2, 3}})) ==
        fam(3, {{2, 3}, {1, 2}, {1, 3}}));
  CHECK(upper_compress(full_level(4, 1)) == full_level(4, 2));

  CHECK_THROWS_AS(upper_compress(fam(3, {{1, 2, 3}})), std::invalid_argument);
  CHECK_THROWS_AS(upper_compress(empty_family(3)), std::invalid_argument);
}

TEST_CASE("local LYM ratios hold with equality exactly at full levels") {
  long long bad = 0, checked = 0;
  std::string first;
  auto probe = [&](int n, int k, const std::vector<Mask>& sets) {
    SetFamily f = make_family(n, std::vector<Mask>(sets));
    long long sz = (long long)f.size();
    bool full = sz == (long long)level_masks(n, k).size();
    if (k >= 1) {
      long long sh = (long long)shadow(f).size();
      ++checked;
      bool okIneq = sh * (n - k + 1) >= sz * k;
      bool okEq = (sh * (n - k + 1) == sz * k) == full;
      if (!okIneq || !okEq) {
        if (!bad++) first = "shadow ratio at n=" + std::to_string(n) +
                            " f=" + family_to_string(f);
      }
    }
    if (k < n) {
      long long sd = (long long)shade(f).size();
      ++checked;
      bool okIneq = sd * (k + 1) >= sz * (n - k);
      bool okEq = (sd * (k + 1) == sz * (n - k)) == full;
      if (!okIneq || !okEq) {
        if (!bad++) first = "shade ratio at n=" + std::to_string(n) +
                            " f=" + family_to_string(f);
      }
    }
  };

  // every nonempty uniform subfamily of every level, n <= 5
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      std::vector<Mask> lv = level_masks(n, k);
      for (std::uint32_t pick = 1; pick < (1u << lv.size()); ++pick) {
        std::vector<Mask> sets;
        for (size_t b = 0; b < lv.size(); ++b)
          if (pick >> b & 1) sets.push_back(lv[b]);
        probe(n, k, sets);
      }
    }

  // random uniform subfamilies on larger ground sets
  std::mt19937_64 rng(7);
  for (int n = 6; n <= 8; ++n)
    for (int it = 0; it < 300; ++it) {
      int k = int(rng() % (n + 1));
      std::vector<Mask> lv = level_masks(n, k);
      std::vector<Mask> sets;
      for (Mask m : lv)
        if (rng() % 3 == 0) sets.push_back(m);
      if (sets.empty()) sets.push_back(lv[rng() % lv.size()]);
      probe(n, k, sets);
    }

  INFO(first);
  CHECK(bad == 0);
  CHECK(checked > 4000);
}

TEST_CASE("compressions keep antichains and move exactly one level") {
  long long bad = 0, seen = 0;
  std::string first;
  for (int n = 2; n <= 5; ++n) {
    Mask whole = full_set(n);
    for (auto& ac : oracle::all_antichains(n)) {
      if (ac.empty()) continue;
      SetFamily f = make_family(n, std::vector<Mask>(ac));
      ++seen;
      if (!(f.size() == 1 && f.sets[0] == 0)) {
        SetFamily lo = lower_compress(f);
        if (!is_antichain(lo) || top(lo) != top(f) - 1) {
          if (!bad++) first = "lower_compress broke " + family_to_string(f);
        }
      }
      if (!(f.size() == 1 && f.sets[0] == whole)) {
        SetFamily hi = upper_compress(f);
        if (!is_antichain(hi) || bottom(hi) != bottom(f) + 1) {
          if (!bad++) first = "upper_compress broke " + family_to_string(f);
        }
      }
    }
  }
  INFO(first);
  CHECK(bad == 0);
  CHECK(seen == 5 + 19 + 167 + 7580);  // nonempty antichains of B_2..B_5
}

TEST_CASE("compress_pair leaves settled pairs alone") {
  CompressionTrace tr;
  FamilyPair p{full_level(6, 1), full_level(6, 2)};
  FamilyPair out = compress_pair(p, 3, &tr);
  CHECK(out.first == p.first);
  CHECK(out.second == p.second);
  CHECK(tr.steps.empty());

  // one-sided trivial family: top sum equals the partner's top
  for (int s = 2; s <= 3; ++s) {
    FamilyPair q{fam(4, {{}}), fam(4, {{1, 2}, {3, 4}})};
    CompressionTrace tq;
    FamilyPair oq = compress_pair(q, s, &tq);
    CHECK(oq.first == q.first);
    CHECK(oq.second == q.second);
    CHECK(tq.steps.empty());
  }
  FamilyPair r{fam(5, {{}}), full_level(5, 3)};
  CHECK(compress_pair(r, 3).second == full_level(5, 3));
}

TEST_CASE("compress_pair replays the recorded trace") {
  // both sides start at the 3-set {1,2,3} over n=4 with s=3
  FamilyPair p{fam(4, {{1, 2, 3}}), fam(4, {{1, 2, 3}})};
  CompressionTrace tr;
  FamilyPair out = compress_pair(p, 3, &tr);

  REQUIRE(tr.steps.size() == 3);
  CHECK(tr.steps[0].kind == StepKind::lower_B);
  CHECK(tr.steps[0].sizes_before == std::array<int, 2>{1, 1});
  CHECK(tr.steps[0].sizes_after == std::array<int, 2>{1, 3});
  CHECK(tr.steps[0].tops_after == std::array<int, 2>{3, 2});
  CHECK(tr.steps[1].kind == StepKind::lower_A);
  CHECK(tr.steps[1].sizes_after == std::array<int, 2>{3, 3});
  CHECK(tr.steps[1].tops_after == std::array<int, 2>{2, 2});
  CHECK(tr.steps[2].kind == StepKind::fill_to_full_level);
  CHECK(tr.steps[2].sizes_after == std::array<int, 2>{6, 3});
  CHECK(tr.steps[2].tops_after == std::array<int, 2>{2, 1});

  CHECK(out.first == full_level(4, 2));
  CHECK(out.second == fam(4, {{1}, {2}, {3}}));
}

TEST_CASE("compress_pair rejects bad input") {
  FamilyPair ok{fam(4, {{1}}), fam(4, {{2}})};
  CHECK_THROWS_AS(compress_pair(ok, 0), std::invalid_argument);
  CHECK_THROWS_AS(compress_pair(ok, 4), std::invalid_argument);
  CHECK_THROWS_AS(compress_pair(FamilyPair{empty_family(4), fam(4, {{1}})}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      compress_pair(FamilyPair{fam(4, {{1}, {1, 2}}), fam(4, {{2}})}, 2),
      std::invalid_argument);
  // 2-sets of [4] pair up to 4-element unions, so s=2 fails validation
  CHECK_THROWS_AS(compress_pair(FamilyPair{full_level(4, 2), full_level(4, 2)}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(compress_pair(FamilyPair{fam(3, {{1}}), fam(4, {{2}})}, 2),
                  std::invalid_argument);
}

TEST_CASE("compress_pair postconditions, exhaustive small ground sets") {
  long long bad = 0, pairs = 0, engaged = 0;
  std::string first;
  for (int n = 2; n <= 5; ++n)
    for (int s = 1; s < n; ++s) {
      oracle::AntichainTable t(n, s);
      size_t N = t.chains.size();
      std::vector<SetFamily> fams(N);
      std::vector<int> tops(N);
      for (size_t i = 0; i < N; ++i) {
        fams[i] = make_family(n, std::vector<Mask>(t.chains[i]));
        tops[i] = top(fams[i]);
      }
      for (size_t i = 0; i < N; ++i) {
        if (tops[i] > s) continue;  // no partner can absorb such a top
        for (size_t j = 0; j < N; ++j) {
          if (t.members[j] & ~t.allowed[i]) continue;
          ++pairs;
          if (tops[i] + tops[j] > s) ++engaged;
          std::string err = compress_contract(FamilyPair{fams[i], fams[j]}, s);
          if (!err.empty() && !bad++) first = err;
        }
      }
    }
  INFO(first);
  CHECK(bad == 0);
  CHECK(pairs > 8'000'000);   // dominated by (5,4)
  CHECK(engaged > 5'000'000);
}

TEST_CASE("compress_pair postconditions, random larger ground sets") {
  std::mt19937_64 rng(20260818);
  long long bad = 0, engaged = 0;
  std::string first;
  for (int it = 0; it < 10'000; ++it) {
    int n = 2 + int(rng() % 7);  // 2..8
    int s = 1 + int(rng() % (n - 1));
    FamilyPair p = oracle::random_cross_pair(rng, n, s);
    if (top(p.first) + top(p.second) > s) ++engaged;
    std::string err = compress_contract(p, s);
    if (!err.empty() && !bad++) first = err;
  }
  INFO(first);
  CHECK(bad == 0);
  CHECK(engaged > 500);  // the generator must actually exercise the loop
}

TEST_CASE("shift_ij: frozen examples and preconditions") {
  CHECK(shift_ij(fam(3, {{2}}), 1, 2) == fam(3, {{1}}));
  CHECK(shift_ij(fam(3, {{1}, {2}}), 1, 2) == fam(3, {{1}, {2}}));
  CHECK(shift_ij(full_level(4, 2), 1, 3) == full_level(4, 2));
  CHECK(shift_ij(full_level(4, 2), 3, 4) == full_level(4, 2));

  CHECK_THROWS_AS(shift_ij(fam(3, {{1}}), 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(shift_ij(fam(3, {{1}}), 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(shift_ij(fam(3, {{1}}), 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(shift_ij(fam(3, {{1}}), 1, 4), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int it = 0; it < 500; ++it) {
    int n = 2 + int(rng() % 5);
    SetFamily f = oracle::random_family(rng, n, 0.25);
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j)
        CHECK(shift_ij(f, i, j).size() == f.size());
  }
}

TEST_CASE("is_shifted matches the precedence oracle") {
  CHECK(is_shifted(fam(3, {{1}, {2}})));
  CHECK(!is_shifted(fam(3, {{2}})));
  CHECK(is_shifted(empty_family(3)));
  CHECK(is_shifted(full_level(5, 2)));

  long long bad = 0;
  std::string first;
  for (int n = 2; n <= 4; ++n) {
    int vals = 1 << n;
    for (std::uint64_t pick = 0; pick < (1ull << vals); ++pick) {
      std::vector<Mask> sets;
      for (int v = 0; v < vals; ++v)
        if (pick >> v & 1) sets.push_back(Mask(v));
      SetFamily f = make_family(n, std::move(sets));
      if (is_shifted(f) != oracle::brute_is_shifted(f)) {
        if (!bad++) first = "disagree on " + family_to_string(f);
      }
    }
  }
  std::mt19937_64 rng(13);
  for (int it = 0; it < 2000; ++it) {
    SetFamily f = oracle::random_family(rng, 5, 0.15);
    if (is_shifted(f) != oracle::brute_is_shifted(f)) {
      if (!bad++) first = "disagree on " + family_to_string(f);
    }
  }
  INFO(first);
  CHECK(bad == 0);
}

TEST_CASE("make_shifted reaches a fixed point of the same size") {
  CHECK(make_shifted(full_level(4, 2)) == full_level(4, 2));
  CHECK(make_shifted(fam(3, {{2}})) == fam(3, {{1}}));

  std::mt19937_64 rng(17);
  for (int it = 0; it < 1000; ++it) {
    int n = 2 + int(rng() % 5);
    SetFamily f = oracle::random_family(rng, n, 0.3);
    SetFamily g = make_shifted(f);
    CHECK(g.size() == f.size());
    CHECK(is_shifted(g));
    CHECK(make_shifted(g) == g);
  }
}

TEST_CASE("joint shifting preserves cross union bounds and sizes") {
  std::mt19937_64 rng(19);
  long long bad = 0;
  std::string first;
  for (int it = 0; it < 2000; ++it) {
    int n = 2 + int(rng() % 6);  // 2..7
    int s = 1 + int(rng() % (n - 1));
    FamilyPair p = it % 2 ? oracle::random_cross_pair(rng, n, s)
                          : oracle::random_cross_pair_general(rng, n, s);
    FamilyPair q = make_shifted_pair(p);
    bool ok = q.first.size() == p.first.size() &&
              q.second.size() == p.second.size() && is_shifted(q.first) &&
              is_shifted(q.second) && is_cross_s_union(q, s);
    if (!ok && !bad++)
      first = "pair A=" + family_to_string(p.first) +
              " B=" + family_to_string(p.second) + " s=" + std::to_string(s);
  }
  INFO(first);
  CHECK(bad == 0);
}

TEST_CASE("link and delete split by the last element") {
  FamilyPair ld = link_and_delete(fam(3, {{1}, {1, 3}}));
  CHECK(ld.first == fam(2, {{1}}));
  CHECK(ld.second == fam(2, {{1}}));

  ld = link_and_delete(fam(3, {{}}));
  CHECK(ld.first == fam(2, {{}}));
  CHECK(ld.second == empty_family(2));

  ld = link_and_delete(full_level(3, 1));
  CHECK(ld.first == full_level(2, 1));
  CHECK(ld.second == fam(2, {{}}));

  CHECK_THROWS_AS(link_and_delete(make_family(1, {0})), std::invalid_argument);

  std::mt19937_64 rng(23);
  for (int it = 0; it < 500; ++it) {
    int n = 2 + int(rng() % 7);
    SetFamily f = oracle::random_family(rng, n, 0.3);
    FamilyPair parts = link_and_delete(f);
    CHECK(parts.first.n == n - 1);
    CHECK(parts.second.n == n - 1);
    CHECK(parts.first.size() + parts.second.size() == f.size());
    // reassemble
    std::vector<Mask> back(parts.first.sets);
    for (Mask m : parts.second.sets) back.push_back(m | Mask(1u << (n - 1)));
    CHECK(make_family(n, std::move(back)) == f);
  }
}

TEST_CASE("check_cor_2_3: frozen examples") {
  CHECK(check_cor_2_3(FamilyPair{fam(4, {{1, 2, 3}}), fam(4, {{1, 2, 3}})}, 3) ==
        Cor23Outcome::first_grows);
  // both sides shrink under lower compression; the op reports by measurement
  CHECK(check_cor_2_3(FamilyPair{full_level(4, 2), full_level(4, 2)}, 1) ==
        Cor23Outcome::both_equal_r1);
  CHECK(check_cor_2_3(FamilyPair{fam(3, {{1, 2}}), fam(3, {{1, 2}})}, 2) ==
        Cor23Outcome::first_grows);

  CHECK_THROWS_AS(check_cor_2_3(FamilyPair{fam(3, {{1}}), fam(3, {{2}})}, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_cor_2_3(FamilyPair{fam(3, {{1}}), fam(3, {{2}})}, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      check_cor_2_3(FamilyPair{fam(3, {{1}, {1, 2}}), fam(3, {{2}})}, 1),
      std::invalid_argument);

  CHECK(std::string(cor23_outcome_name(Cor23Outcome::first_grows)) ==
        "first_grows");
  CHECK(std::string(cor23_outcome_name(Cor23Outcome::second_grows)) ==
        "second_grows");
  CHECK(std::string(cor23_outcome_name(Cor23Outcome::both_equal_r1)) ==
        "both_equal_r1");
}

TEST_CASE("measured growth disjunction for intersecting top slices") {
  // when the top slices really are cross r-intersecting, growth may only
  // stall at r=1 and then both compressions must preserve size exactly
  long long bad = 0, hit2 = 0;
  std::string first;
  auto probe = [&](const SetFamily& A, const SetFamily& B) {
    if ((A.size() == 1 && A.sets[0] == 0) || (B.size() == 1 && B.sets[0] == 0))
      return;  // top slice {emptyset} never intersects
    int rmin = INT_MAX;
    SetFamily sa = slice(A, top(A)), sb = slice(B, top(B));
    for (Mask a : sa.sets)
      for (Mask b : sb.sets) rmin = std::min(rmin, set_size(a & b));
    if (rmin < 1) return;
    Cor23Outcome o = check_cor_2_3(FamilyPair{A, B}, rmin);
    if (rmin >= 2) {
      ++hit2;
      if (o == Cor23Outcome::both_equal_r1 && !bad++)
        first = "stall at r>=2: A=" + family_to_string(A) +
                " B=" + family_to_string(B);
    } else if (o == Cor23Outcome::both_equal_r1) {
      if ((lower_compress(A).size() != A.size() ||
           lower_compress(B).size() != B.size()) &&
          !bad++)
        first = "unequal stall at r=1: A=" + family_to_string(A) +
                " B=" + family_to_string(B);
    }
  };

  for (int n = 2; n <= 4; ++n) {
    std::vector<SetFamily> fams;
    for (auto& ac : oracle::all_antichains(n))
      if (!ac.empty()) fams.push_back(make_family(n, std::vector<Mask>(ac)));
    for (const SetFamily& A : fams)
      for (const SetFamily& B : fams) probe(A, B);
  }
  {
    std::vector<SetFamily> fams;
    for (auto& ac : oracle::all_antichains(5))
      if (!ac.empty()) fams.push_back(make_family(5, std::vector<Mask>(ac)));
    size_t N = fams.size(), step = 0;
    for (size_t i = 0; i < N; ++i)
      for (size_t j = 0; j < N; ++j)
        if (step++ % 197 == 0) probe(fams[i], fams[j]);
  }
  INFO(first);
  CHECK(bad == 0);
  CHECK(hit2 > 1000);
}

TEST_CASE("shadow and shade are adjoint on single sets") {
  for (int n = 2; n <= 5; ++n) {
    Mask end = full_set(n);
    for (Mask F = 0; F <= end; ++F) {
      if (set_size(F) < 1) continue;
      SetFamily sh = shadow(make_family(n, {F}));
      for (Mask G = 0; G <= end; ++G) {
        if (set_size(G) != set_size(F) - 1) continue;
        bool inShadow = sh.contains(G);
        bool inShade = shade(make_family(n, {G})).contains(F);
        CHECK(inShadow == inShade);
      }
    }
  }
}

TEST_CASE("trace serialization shape") {
  CompressionTrace tr;
  CHECK(serialize_trace(tr) == "[]");

  FamilyPair p{fam(4, {{1, 2, 3}}), fam(4, {{1, 2, 3}})};
  compress_pair(p, 3, &tr);
  nlohmann::json j = nlohmann::json::parse(serialize_trace(tr));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  for (const auto& st : j) {
    CHECK(st.size() == 4);
    CHECK(st.at("kind").is_string());
    CHECK(st.at("sizes_before").size() == 2);
    CHECK(st.at("sizes_after").size() == 2);
    CHECK(st.at("tops_after").size() == 2);
  }
  CHECK(j[0]["kind"] == "lower_B");
  CHECK(j[2]["kind"] == "fill_to_full_level");
  CHECK(j[2]["sizes_after"] == nlohmann::json({6, 3}));

  // pretty form parses to the same document
  CHECK(nlohmann::json::parse(serialize_trace(tr, true)) == j);

  CHECK(std::string(step_kind_name(StepKind::lower_both)) == "lower_both");
  CHECK(std::string(step_kind_name(StepKind::upper_A)) == "upper_A");
}
