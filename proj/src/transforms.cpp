#include "crossunion/transforms.hpp"

#include <json.hpp>

namespace crossunion {

namespace {

int uniform_size(const SetFamily& f, const char* op) {
  if (f.empty())
    throw std::invalid_argument(std::string(op) + " of empty family");
  int k = set_size(f.sets.front());
  if (set_size(f.sets.back()) != k)
    throw std::invalid_argument(std::string(op) +
                                " requires a uniform family");
  return k;
}

}  // namespace

SetFamily shadow(const SetFamily& f) {
  int k = uniform_size(f, "shadow");
  if (k < 1) throw std::invalid_argument("shadow of the empty-set family");
  std::vector<Mask> out;
  for (Mask m : f.sets)
    for (Mask rest = m; rest;) {
      Mask low = rest & (~rest + 1);
      out.push_back(m ^ low);
      rest ^= low;
    }
  return make_family(f.n, std::move(out));
}

SetFamily shade(const SetFamily& f) {
  int k = uniform_size(f, "shade");
  if (k >= f.n)
    throw std::invalid_argument("shade of the full-set family");
  Mask full = full_set(f.n);
  std::vector<Mask> out;
  for (Mask m : f.sets)
    for (Mask rest = full & ~m; rest;) {
      Mask low = rest & (~rest + 1);
      out.push_back(m | low);
      rest ^= low;
    }
  return make_family(f.n, std::move(out));
}

SetFamily lower_compress(const SetFamily& f) {
  if (f.empty()) throw std::invalid_argument("lower_compress of empty family");
  int t = top(f);
  if (t == 0)
    throw std::invalid_argument("lower_compress of {emptyset}");
  SetFamily keep = empty_family(f.n);
  for (Mask m : f.sets)
    if (set_size(m) < t) keep.sets.push_back(m);
  SetFamily shifted = shadow(slice(f, t));
  keep.sets.insert(keep.sets.end(), shifted.sets.begin(), shifted.sets.end());
  return make_family(f.n, std::move(keep.sets));
}

SetFamily upper_compress(const SetFamily& f) {
  if (f.empty()) throw std::invalid_argument("upper_compress of empty family");
  int b = bottom(f);
  if (b == f.n)
    throw std::invalid_argument("upper_compress of {X}");
  SetFamily keep = empty_family(f.n);
  for (Mask m : f.sets)
    if (set_size(m) > b) keep.sets.push_back(m);
  SetFamily shifted = shade(slice(f, b));
  keep.sets.insert(keep.sets.end(), shifted.sets.begin(), shifted.sets.end());
  return make_family(f.n, std::move(keep.sets));
}

const char* step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::lower_A: return "lower_A";
    case StepKind::lower_B: return "lower_B";
    case StepKind::upper_A: return "upper_A";
    case StepKind::lower_both: return "lower_both";
    case StepKind::fill_to_full_level: return "fill_to_full_level";
  }
  return "?";
}

std::string serialize_trace(const CompressionTrace& t, bool pretty) {
  nlohmann::json steps = nlohmann::json::array();
  for (const TraceStep& st : t.steps)
    steps.push_back({{"kind", step_kind_name(st.kind)},
                     {"sizes_before", st.sizes_before},
                     {"sizes_after", st.sizes_after},
                     {"tops_after", st.tops_after}});
  return pretty ? steps.dump(2) : steps.dump();
}

FamilyPair compress_pair(const FamilyPair& p, int s, CompressionTrace* trace) {
  int n = p.first.n;
  if (p.second.n != n)
    throw std::invalid_argument("families live on different ground sets");
  if (s <= 0 || s >= n)
    throw std::invalid_argument("need 0 < s < n");
  if (p.first.empty() || p.second.empty())
    throw std::invalid_argument("compress_pair needs nonempty families");
  if (!is_antichain(p.first) || !is_antichain(p.second))
    throw std::invalid_argument("compress_pair needs antichains");
  if (!is_cross_s_union(p, s))
    throw std::invalid_argument("pair is not cross " + std::to_string(s) +
                                "-union");

  SetFamily A = p.first, B = p.second;
  while (true) {
    int tA = top(A), tB = top(B);
    if (tA + tB <= s) break;

    std::array<int, 2> before{int(A.size()), int(B.size())};
    StepKind kind;
    /* inside the loop both tops are >= 1: tA + tB >= s+1 >= 2 and neither
       family can pair a 0 top with a partner top above s */
    SetFamily lowA = lower_compress(A);
    SetFamily lowB = lower_compress(B);
    long long dA = (long long)lowA.size() - (long long)A.size();
    long long dB = (long long)lowB.size() - (long long)B.size();

    if (tA + tB >= s + 2) {
      bool okA = dA >= 0, okB = dB >= 0;
      if (!okA && !okB)
        throw std::logic_error("lower compression lost size on both sides");
      bool pickA = okA && (!okB || tA > tB);  // ties compress the second
      if (pickA) {
        A = std::move(lowA);
        kind = StepKind::lower_A;
      } else {
        B = std::move(lowB);
        kind = StepKind::lower_B;
      }
    } else {  // tA + tB == s + 1, the last round
      bool growA = dA > 0, growB = dB > 0;
      if (growA || growB) {
        bool pickA = growA && (!growB || tA > tB);
        if (pickA) {
          A = std::move(lowA);
          kind = StepKind::lower_A;
        } else {
          B = std::move(lowB);
          kind = StepKind::lower_B;
        }
      } else {
        /* Neither side gains from a plain compression. Trade levels: the
           smaller-top family is pushed up (its bottom slice is shallow, so
           the shade strictly grows) or, when already uniform, swapped for
           its entire level; the other side is lower-compressed. */
        bool subjectA = tA <= tB;  // ties act on the first
        SetFamily& F = subjectA ? A : B;
        SetFamily& other = subjectA ? B : A;
        SetFamily& otherLow = subjectA ? lowB : lowA;
        if (bottom(F) < top(F)) {
          F = upper_compress(F);
          kind = StepKind::upper_A;
        } else {
          F = full_level(n, top(F));
          kind = StepKind::fill_to_full_level;
        }
        other = std::move(otherLow);
      }
    }

    if (trace)
      trace->steps.push_back(TraceStep{kind,
                                       before,
                                       {int(A.size()), int(B.size())},
                                       {top(A), top(B)}});
  }
  return FamilyPair{std::move(A), std::move(B)};
}

SetFamily shift_ij(const SetFamily& f, int i, int j) {
  check_ground(f.n);
  if (i < 1 || i >= j || j > f.n)
    throw std::invalid_argument("shift needs 1 <= i < j <= n");
  Mask bi = Mask{1} << (i - 1), bj = Mask{1} << (j - 1);
  std::vector<Mask> out;
  out.reserve(f.sets.size());
  for (Mask m : f.sets) {
    if ((m & bj) && !(m & bi)) {
      Mask moved = (m & ~bj) | bi;
      if (!f.contains(moved)) {
        out.push_back(moved);
        continue;
      }
    }
    out.push_back(m);
  }
  return make_family(f.n, std::move(out));
}

SetFamily make_shifted(const SetFamily& f) {
  SetFamily cur = f;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i < cur.n; ++i)
      for (int j = i + 1; j <= cur.n; ++j) {
        SetFamily nxt = shift_ij(cur, i, j);
        if (nxt != cur) {
          cur = std::move(nxt);
          changed = true;
        }
      }
  }
  return cur;
}

FamilyPair make_shifted_pair(const FamilyPair& p) {
  if (p.first.n != p.second.n)
    throw std::invalid_argument("families live on different ground sets");
  FamilyPair cur = p;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i < cur.first.n; ++i)
      for (int j = i + 1; j <= cur.first.n; ++j) {
        SetFamily a = shift_ij(cur.first, i, j);
        SetFamily b = shift_ij(cur.second, i, j);
        if (a != cur.first || b != cur.second) {
          cur.first = std::move(a);
          cur.second = std::move(b);
          changed = true;
        }
      }
  }
  return cur;
}

bool is_shifted(const SetFamily& f) {
  /* single-swap closure: for F containing j but not i < j, the swapped set
     must be present; equivalent to closure under the coordinatewise order */
  for (Mask m : f.sets)
    for (int j = 2; j <= f.n; ++j) {
      Mask bj = Mask{1} << (j - 1);
      if (!(m & bj)) continue;
      for (int i = 1; i < j; ++i) {
        Mask bi = Mask{1} << (i - 1);
        if (m & bi) continue;
        if (!f.contains((m & ~bj) | bi)) return false;
      }
    }
  return true;
}

FamilyPair link_and_delete(const SetFamily& f) {
  if (f.n < 2)
    throw std::invalid_argument("link_and_delete needs n >= 2");
  Mask bn = Mask{1} << (f.n - 1);
  std::vector<Mask> without, with;
  for (Mask m : f.sets) {
    if (m & bn)
      with.push_back(m & ~bn);
    else
      without.push_back(m);
  }
  return FamilyPair{make_family(f.n - 1, std::move(without)),
                    make_family(f.n - 1, std::move(with))};
}

const char* cor23_outcome_name(Cor23Outcome o) {
  switch (o) {
    case Cor23Outcome::first_grows: return "first_grows";
    case Cor23Outcome::second_grows: return "second_grows";
    case Cor23Outcome::both_equal_r1: return "both_equal_r1";
  }
  return "?";
}

Cor23Outcome check_cor_2_3(const FamilyPair& p, int r) {
  if (p.first.n != p.second.n)
    throw std::invalid_argument("families live on different ground sets");
  if (r < 1 || r > p.first.n)
    throw std::invalid_argument("need 1 <= r <= n");
  if (!is_antichain(p.first) || !is_antichain(p.second))
    throw std::invalid_argument("check_cor_2_3 needs antichains");
  if (lower_compress(p.first).size() > p.first.size())
    return Cor23Outcome::first_grows;
  if (lower_compress(p.second).size() > p.second.size())
    return Cor23Outcome::second_grows;
  return Cor23Outcome::both_equal_r1;
}

}  // namespace crossunion
