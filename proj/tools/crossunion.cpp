// crossunion: one binary tying the kernels to files and reports.
// Exit codes: 0 ok (confirmed / skipped), 1 a checked claim failed,
// 2 usage, parse, or precondition errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "crossunion/bounds.hpp"
#include "crossunion/json_io.hpp"
#include "crossunion/search.hpp"
#include "crossunion/transforms.hpp"
#include "crossunion/verify.hpp"

namespace {

using namespace crossunion;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream oss;
    oss << std::cin.rdbuf();
    return oss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream oss;
  oss << in.rdbuf();
  return oss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-" || path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text << "\n";
}

std::string join_ids(const std::vector<std::string>& ids) {
  std::string s;
  for (const auto& id : ids) {
    if (!s.empty()) s += ", ";
    s += id;
  }
  return s;
}

int cmd_verify(const std::string& id, bool all, int n, int s, int n_max,
               const VerifyOptions& opt, bool json_out) {
  std::vector<VerificationReport> reports;
  if (all)
    reports = run_verify_all(n_max, opt);
  else if (!id.empty())
    reports.push_back(run_verify(id, n, s, opt));
  else
    throw std::invalid_argument("give a statement id or --all");

  int mismatches = 0, skips = 0;
  for (const auto& r : reports) {
    if (r.status == VerifyStatus::mismatch) ++mismatches;
    if (r.status == VerifyStatus::skipped_scale) ++skips;
  }
  if (json_out) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports)
      arr.push_back(nlohmann::json::parse(serialize_report(r)));
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& r : reports) std::cout << format_report_line(r) << "\n";
    if (reports.size() > 1)
      std::cout << reports.size() << " checks: "
                << (reports.size() - mismatches - skips) << " confirmed, "
                << skips << " skipped, " << mismatches << " mismatched\n";
  }
  return mismatches ? 1 : 0;
}

int cmd_search(const std::string& kind, int n, int s, bool forbid, int threads,
               bool pretty) {
  if (n < 1) throw std::invalid_argument("--n is required");
  SearchOptions opt{threads};
  SearchResult res;
  if (kind == "wongtay") {
    if (s >= 0 && s != n - 1)
      throw std::invalid_argument("wongtay search runs at s = n-1");
    res = search_wong_tay(n, opt);
  } else {
    if (s < 0) throw std::invalid_argument("--s is required");
    if (forbid && kind != "pair")
      throw std::invalid_argument(
          "--forbid-empty-singleton only applies to the pair search");
    if (kind == "pair")
      res = search_max_pair_antichain(n, s, forbid, opt);
    else if (kind == "triple")
      res = search_max_triple_antichain(n, s, opt);
    else if (kind == "general")
      res = search_max_pair_general(n, s, opt);
    else if (kind == "milner")
      res = search_milner(n, s, opt);
    else if (kind == "minpair")
      res = search_min_pair(n, s, opt);
    else if (kind == "katona")
      res = search_katona(n, s, opt);
    else
      throw std::invalid_argument("unknown search kind: " + kind);
  }
  std::cout << serialize_search_result(res, pretty) << "\n";
  return 0;
}

int cmd_compress(const std::string& input, int s, const std::string& output,
                 const std::string& trace_path, bool pretty) {
  FamilyPair p = parse_family_pair(read_input(input));
  CompressionTrace trace;
  FamilyPair q = compress_pair(p, s, &trace);
  write_output(output, serialize_family_pair(q, pretty));
  if (!trace_path.empty())
    write_output(trace_path, serialize_trace(trace, pretty));
  return 0;
}

int cmd_shift(const std::string& input, int i, int j, bool check, bool pretty) {
  SetFamily f = parse_family(read_input(input));
  if (check) {
    std::cout << (is_shifted(f) ? "true" : "false") << "\n";
    return 0;
  }
  if ((i > 0) != (j > 0))
    throw std::invalid_argument("--i and --j must be given together");
  SetFamily out = (i > 0) ? shift_ij(f, i, j) : make_shifted(f);
  std::cout << serialize_family(out, pretty) << "\n";
  return 0;
}

int cmd_bounds_table(int n_max) {
  if (n_max < 2 || n_max > 40)
    throw std::invalid_argument("--n-max must be in [2,40]");
  std::cout << "n,s,maximal_pairs,value,katona_f,thm16_bound\n";
  for (int n = 2; n <= n_max; ++n)
    for (int s = 1; 2 * s <= n; ++s) {
      MaximalPairs mp = maximal_pairs(n, s);
      std::string field;
      for (auto [i, j] : mp.pairs) {
        if (!field.empty()) field += ";";
        field += std::to_string(i) + "," + std::to_string(j);
      }
      std::cout << n << "," << s << ",\"" << field << "\"," << mp.value.str()
                << "," << katona_f(n, s).str() << ","
                << sum_bound_thm_1_6(n, s).str() << "\n";
    }
  return 0;
}

int cmd_bounds_check(const std::string& id, const InequalityParams& params,
                     bool json_out) {
  InequalityCheck c = check_inequality(id, params);
  if (json_out) {
    nlohmann::json j{{"id", id},
                     {"holds", c.holds},
                     {"lhs", c.lhs.str()},
                     {"rhs", c.rhs.str()}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << id << " holds=" << (c.holds ? "true" : "false")
              << " lhs=" << c.lhs.str() << " rhs=" << c.rhs.str() << "\n";
  }
  return c.holds ? 0 : 1;
}

int cmd_bounds_maxpairs(int n, int s) {
  MaximalPairs mp = maximal_pairs(n, s);
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [i, j] : mp.pairs) pairs.push_back({i, j});
  nlohmann::json j{
      {"n", n}, {"s", s}, {"pairs", std::move(pairs)}, {"value", mp.value.str()}};
  std::cout << j.dump() << "\n";
  return 0;
}

int cmd_oracle_antichain(const std::string& input, bool pretty) {
  SetFamily f = parse_family(read_input(input));
  auto [size, witness] = max_antichain_in_downset(f);
  nlohmann::json j{{"size", size},
                   {"witness", nlohmann::json::parse(serialize_family(witness))}};
  std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cross s-union family toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  // verify
  auto* v = app.add_subcommand(
      "verify", "recheck a statement against the search oracles");
  std::string v_id;
  bool v_all = false, v_json = false;
  int v_n = -1, v_s = -1, v_nmax = 5, v_threads = 0, v_cases = 500;
  std::uint64_t v_seed = 12345;
  v->add_option("id", v_id, "statement id: " + join_ids(theorem_ids()));
  v->add_flag("--all", v_all, "run the whole battery (ignores --n/--s)");
  v->add_option("--n", v_n, "ground set size");
  v->add_option("--s", v_s, "union bound (wongtay ignores it)");
  v->add_option("--n-max", v_nmax, "largest n for --all")->check(CLI::Range(2, 8));
  v->add_option("--seed", v_seed, "seed for randomized checks");
  v->add_option("--cases", v_cases, "randomized cases per check")
      ->check(CLI::PositiveNumber);
  v->add_option("--threads", v_threads,
                "search workers (0: CROSSUNION_THREADS, then 1)");
  v->add_flag("--json", v_json, "emit a JSON report array");
  v->callback([&] {
    rc = cmd_verify(v_id, v_all, v_n, v_s, v_nmax,
                    VerifyOptions{v_threads, v_seed, v_cases}, v_json);
  });

  // search
  auto* se = app.add_subcommand("search", "run one exhaustive search");
  std::string se_kind;
  int se_n = -1, se_s = -1, se_threads = 0;
  bool se_forbid = false, se_pretty = false;
  se->add_option("kind", se_kind, "pair|triple|general|milner|minpair|wongtay|katona")
      ->required()
      ->check(CLI::IsMember(
          {"pair", "triple", "general", "milner", "minpair", "wongtay", "katona"}));
  se->add_option("--n", se_n, "ground set size")->required();
  se->add_option("--s", se_s, "union bound (wongtay fixes s = n-1)");
  se->add_flag("--forbid-empty-singleton", se_forbid,
               "pair search: exclude the empty set and all singletons");
  se->add_option("--threads", se_threads,
                 "search workers (0: CROSSUNION_THREADS, then 1)");
  se->add_flag("--pretty", se_pretty, "indent the JSON result");
  se->callback([&] {
    rc = cmd_search(se_kind, se_n, se_s, se_forbid, se_threads, se_pretty);
  });

  // compress
  auto* co = app.add_subcommand(
      "compress", "compress a cross s-union antichain pair to top-sum <= s");
  std::string co_in = "-", co_out = "-", co_trace;
  int co_s = -1;
  bool co_pretty = false;
  co->add_option("--input", co_in, "pair JSON file, - for stdin");
  co->add_option("--s", co_s, "union bound")->required();
  co->add_option("--output", co_out, "result file, - for stdout");
  co->add_option("--trace", co_trace, "also write the step trace here");
  co->add_flag("--pretty", co_pretty, "indent emitted JSON");
  co->callback([&] { rc = cmd_compress(co_in, co_s, co_out, co_trace, co_pretty); });

  // shift
  auto* sh = app.add_subcommand(
      "shift", "apply shifting to a family (default: to a fixed point)");
  std::string sh_in = "-";
  int sh_i = 0, sh_j = 0;
  bool sh_check = false, sh_pretty = false;
  sh->add_option("--input", sh_in, "family JSON file, - for stdin");
  sh->add_option("--i", sh_i, "single shift: replace --j by --i")
      ->check(CLI::PositiveNumber);
  sh->add_option("--j", sh_j, "single shift: element to replace")
      ->check(CLI::PositiveNumber);
  sh->add_flag("--check", sh_check, "print whether the family is shifted");
  sh->add_flag("--pretty", sh_pretty, "indent emitted JSON");
  sh->callback([&] { rc = cmd_shift(sh_in, sh_i, sh_j, sh_check, sh_pretty); });

  // bounds
  auto* bo = app.add_subcommand("bounds", "closed-form tables and inequalities");
  bo->require_subcommand(1);
  auto* bt = bo->add_subcommand("table", "CSV of level-pair maxima per (n,s)");
  int bt_nmax = 40;
  bt->add_option("--n-max", bt_nmax, "largest ground set size (<= 40)");
  bt->callback([&] { rc = cmd_bounds_table(bt_nmax); });

  auto* bc = bo->add_subcommand("check", "evaluate one registered inequality");
  std::string bc_id;
  int bc_n = 0, bc_s = 0, bc_i = 0;
  bool bc_json = false;
  bc->add_option("id", bc_id, "inequality id: " + join_ids(inequality_ids()))
      ->required();
  auto* bc_on = bc->add_option("--n", bc_n, "ground set size");
  auto* bc_os = bc->add_option("--s", bc_s, "union bound");
  auto* bc_oi = bc->add_option("--i", bc_i, "level index");
  bc->add_flag("--json", bc_json, "emit JSON instead of text");
  bc->callback([&] {
    InequalityParams params;
    if (bc_on->count()) params.n = bc_n;
    if (bc_os->count()) params.s = bc_s;
    if (bc_oi->count()) params.i = bc_i;
    rc = cmd_bounds_check(bc_id, params, bc_json);
  });

  auto* bm = bo->add_subcommand("maxpairs", "argmax level pairs for (n,s)");
  int bm_n = 0, bm_s = 0;
  bm->add_option("--n", bm_n, "ground set size")->required();
  bm->add_option("--s", bm_s, "union bound")->required();
  bm->callback([&] { rc = cmd_bounds_maxpairs(bm_n, bm_s); });

  // oracle
  auto* ora = app.add_subcommand("oracle", "independent combinatorial oracles");
  ora->require_subcommand(1);
  auto* oa = ora->add_subcommand(
      "antichain", "largest antichain inside a down-closed family");
  std::string oa_in = "-";
  bool oa_pretty = false;
  oa->add_option("--input", oa_in, "family JSON file, - for stdin");
  oa->add_flag("--pretty", oa_pretty, "indent emitted JSON");
  oa->callback([&] { rc = cmd_oracle_antichain(oa_in, oa_pretty); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
