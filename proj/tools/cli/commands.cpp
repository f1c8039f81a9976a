#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "frankl/error.hpp"
#include "frankl/oracle.hpp"
#include "frankl/symmetry.hpp"

namespace frankl::cli {

namespace {

using json = nlohmann::json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DomainTooLarge:
    case ErrorKind::TooLarge:
      return kResourceGuard;
    default:
      return kInvalidInput;
  }
}

std::vector<std::vector<ElementId>> family_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("family must be an array of arrays");
  std::vector<std::vector<ElementId>> family;
  for (const json& set : j) {
    if (!set.is_array()) throw ParseError("family member must be an array");
    std::vector<ElementId> members;
    for (const json& e : set) {
      if (!e.is_number_unsigned()) throw ParseError("set elements must be natural numbers");
      members.push_back(e.get<ElementId>());
    }
    if (!std::is_sorted(members.begin(), members.end()) ||
        std::adjacent_find(members.begin(), members.end()) != members.end()) {
      throw ParseError("family member sets must be sorted and distinct");
    }
    family.push_back(std::move(members));
  }
  return family;
}

std::vector<Weight> weights_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("weights must be an array");
  std::vector<Weight> weights;
  for (const json& v : j) {
    if (!v.is_number_unsigned()) throw ParseError("weights must be natural numbers");
    weights.push_back(v.get<Weight>());
  }
  return weights;
}

void check_coverage_impl(const CandidateRecord& r) {
  ElementId top = 0;
  bool any = false;
  for (const auto& set : r.family) {
    for (ElementId e : set) {
      top = std::max(top, e);
      any = true;
    }
  }
  if (any && r.weights.size() < std::size_t{top} + 1) {
    throw ParseError("weights must cover every element mentioned in the family");
  }
}

json family_json(const Family& f) {
  json out = json::array();
  for (SetCode a : f) out.push_back(decode(a));
  return out;
}

std::string describe(const Family& fc, const WeightFn& w) {
  std::ostringstream os;
  os << "family=" << fc << " weights=" << json(w.values()).dump();
  return os.str();
}

void record_discrepancy(DiffReport& report, const std::string& what) {
  if (report.discrepancies++ == 0) report.first_counterexample = what;
}

}  // namespace

void validate_record(const CandidateRecord& record) { check_coverage_impl(record); }

CandidateRecord parse_record(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("record must be a JSON object");
  if (!j.contains("family") || !j.contains("weights")) {
    throw ParseError("record needs 'family' and 'weights' fields");
  }
  CandidateRecord r;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw ParseError("label must be a string");
    r.label = j["label"].get<std::string>();
  }
  r.family = family_from_json(j["family"]);
  r.weights = weights_from_json(j["weights"]);
  validate_record(r);
  return r;
}

std::vector<CandidateRecord> parse_records(std::istream& in) {
  std::vector<CandidateRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_record(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (out.back().label.empty()) out.back().label = "row" + std::to_string(out.size());
  }
  return out;
}

std::vector<CandidateRecord> load_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_records(in);
}

std::vector<std::vector<ElementId>> parse_family_arg(std::string_view text) {
  try {
    return family_from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid family: ") + e.what());
  }
}

std::vector<Weight> parse_weights_arg(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string_view::npos && text[first] == '[') {
    try {
      return weights_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid weights: ") + e.what());
    }
  }
  std::vector<Weight> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty weight entry");
    item = item.substr(b, e - b + 1);
    if (!std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError("weight '" + item + "' is not a natural number");
    }
    try {
      out.push_back(static_cast<Weight>(std::stoul(item)));
    } catch (const std::out_of_range&) {
      throw ParseError("weight '" + item + "' out of range");
    }
  }
  if (out.empty()) throw ParseError("no weights given");
  return out;
}

Family family_of(const CandidateRecord& record) {
  std::vector<SetCode> codes;
  codes.reserve(record.family.size());
  for (const auto& set : record.family) codes.push_back(encode(set));
  return Family(std::move(codes));
}

const char* to_string(Outcome outcome) noexcept {
  switch (outcome) {
    case Outcome::Certified: return "certified";
    case Outcome::NotCertified: return "not-certified";
    case Outcome::Error: return "error";
  }
  return "error";
}

RunReport run_record(const CandidateRecord& record) {
  RunReport report;
  report.label = record.label;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Family fc = family_of(record);
    const WeightFn w(record.weights);
    Verdict v = verify_fc_candidate(fc, w);
    report.verdict = v.all_nonnegative ? Outcome::Certified : Outcome::NotCertified;
    report.witness = std::move(v.witness);
    report.stats = v.stats;
  } catch (const Error& e) {
    report.verdict = Outcome::Error;
    report.error = e.what();
    report.error_exit = exit_code_for(e.kind());
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string format_report(const RunReport& r, bool with_timing) {
  std::ostringstream os;
  os << "label=" << json(r.label).dump() << " verdict=" << to_string(r.verdict);
  if (with_timing) {
    os << " elapsed_ms=" << std::fixed;
    os.precision(3);
    os << r.elapsed_ms;
  }
  os << " nodes=" << r.stats.nodes << " prunes_bound=" << r.stats.prunes_bound
     << " prunes_member=" << r.stats.prunes_member;
  if (r.witness) os << " witness=" << family_json(*r.witness).dump();
  if (r.verdict == Outcome::Error) os << " error=" << json(r.error).dump();
  return os.str();
}

int cmd_verify(const CandidateRecord& record, std::ostream& out, std::ostream& err,
               const OutputOptions& options) {
  CandidateRecord labelled = record;
  if (labelled.label.empty()) labelled.label = "cli";
  const RunReport report = run_record(labelled);
  out << format_report(report, options.timing) << '\n';
  switch (report.verdict) {
    case Outcome::Certified:
      err << labelled.label << ": certified (FC-family for these weights)\n";
      return kOk;
    case Outcome::NotCertified:
      err << labelled.label << ": not certified; extension with negative share: "
          << *report.witness << '\n';
      return kVerificationFailed;
    case Outcome::Error:
      err << labelled.label << ": " << report.error << '\n';
      return report.error_exit;
  }
  return kVerificationFailed;
}

int cmd_table(const std::vector<CandidateRecord>& records, unsigned threads, std::ostream& out,
              std::ostream& err, const OutputOptions& options) {
  if (records.empty()) {
    err << "warning: no records to verify\n";
    return kOk;
  }
  std::vector<RunReport> reports(records.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) reports[i] = run_record(records[i]);
  };
  const unsigned pool = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(records.size()));
  std::vector<std::thread> workers;
  for (unsigned t = 1; t < pool; ++t) workers.emplace_back(worker);
  worker();
  for (auto& t : workers) t.join();

  std::size_t certified = 0;
  int code = kOk;
  std::vector<std::string> failing;
  for (const RunReport& r : reports) {
    out << format_report(r, options.timing) << '\n';
    if (r.verdict == Outcome::Certified) {
      ++certified;
    } else {
      failing.push_back(r.label);
      code = std::max(code, r.verdict == Outcome::Error ? r.error_exit
                                                        : static_cast<int>(kVerificationFailed));
    }
    err << r.label << ": " << to_string(r.verdict) << " (" << r.stats.nodes << " nodes, "
        << static_cast<long long>(r.elapsed_ms) << " ms)\n";
  }
  err << certified << "/" << reports.size() << " certified\n";
  if (!failing.empty()) {
    err << "failing rows:";
    for (const auto& l : failing) err << ' ' << l;
    err << '\n';
  }
  return code;
}

int cmd_table_file(const std::string& path, unsigned threads, std::ostream& out,
                   std::ostream& err, const OutputOptions& options) {
  std::vector<CandidateRecord> records;
  try {
    records = load_records(path);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  }
  return cmd_table(records, threads, out, err, options);
}

void parse_nef_filters(std::string_view text, NefRequest& request) {
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    if (item == "not533") {
      request.not533 = true;
    } else if (item == "not634") {
      request.not634 = true;
    } else if (!item.empty()) {
      throw ParseError("unknown filter '" + item + "' (expected not533, not634)");
    }
  }
}

int cmd_nef(const NefRequest& req, std::ostream& out, std::ostream& err) {
  if (req.n > 7 && !req.allow_large) {
    err << "n=" << req.n << " exceeds the default guard of 7; pass --allow-large\n";
    return kResourceGuard;
  }
  if (req.k > req.n) {
    err << "k must not exceed n\n";
    return kInvalidInput;
  }
  try {
    std::vector<NkmList> candidates = gen_families(req.n, req.k, req.m);
    const std::size_t generated = candidates.size();
    if (req.not533 || req.not634) {
      std::erase_if(candidates, [&](const NkmList& f) {
        return (req.not533 && check_533(f)) || (req.not634 && check_634(f));
      });
    }
    const auto perms = all_permutations(req.n);
    const auto reps = nef(std::move(candidates), perms);
    for (const NkmList& f : reps) out << json(f).dump() << '\n';
    out << "count=" << reps.size() << '\n';
    err << generated << " families generated, " << reps.size() << " non-equivalent\n";
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kOk;
}

DiffReport uce_vs_ssn(unsigned n, unsigned max_sets, Weight max_weight) {
  DiffReport report;
  const std::vector<SetCode> pool = submasks(range_code(n));
  std::vector<WeightFn> weights;
  {
    std::vector<Weight> v(n, 0);
    while (true) {
      weights.emplace_back(v);
      std::size_t i = 0;
      while (i < n && v[i] == max_weight) v[i++] = 0;
      if (i == n) break;
      ++v[i];
    }
  }

  for (unsigned size = 1; size <= max_sets && size <= pool.size(); ++size) {
    for (const auto& pick : combine(pool, size)) {
      const Family fc(pick);
      const SetCode x = big_union(fc);
      const std::vector<Family> extensions = oracle::enumerate_uce(fc);
      std::set<std::vector<SetCode>> extension_set;
      for (const Family& f : extensions) extension_set.insert(f.sorted());

      for (const WeightFn& w : weights) {
        if (!is_weight_function_on(w, x)) continue;
        ++report.cases;
        std::map<SetCode, Share> share_of;
        for (SetCode a : submasks(x)) share_of[a] = set_share(w, a, x);
        Share min_share = 0;
        for (const Family& f : extensions) {
          Share s = 0;
          for (SetCode a : f) s += share_of[a];
          min_share = std::min(min_share, s);
        }
        const bool oracle_negative = min_share < 0;
        if (oracle_negative) ++report.negative_cases;
        const bool abstract_negative = ssn_abstract(fc, w);
        const Verdict refined = ssn_refined(fc, w);
        std::ostringstream why;
        if (abstract_negative != oracle_negative) {
          why << describe(fc, w) << " abstract=" << abstract_negative
              << " oracle_min_share=" << min_share;
          record_discrepancy(report, why.str());
          continue;
        }
        if (refined.all_nonnegative == abstract_negative) {
          why << describe(fc, w) << " abstract=" << abstract_negative
              << " refined_all_nonnegative=" << refined.all_nonnegative;
          record_discrepancy(report, why.str());
          continue;
        }
        if (!refined.all_nonnegative) {
          const Family& witness = *refined.witness;
          if (!extension_set.contains(witness.sorted()) || family_share(w, witness, x) >= 0) {
            why << describe(fc, w) << " bad witness " << witness;
            record_discrepancy(report, why.str());
          }
        }
      }
    }
  }
  return report;
}

namespace {

struct Instance {
  Family fc;
  WeightFn w;
};

void compare_refinements(const Instance& inst, std::mt19937_64& rng, DiffReport& report) {
  ++report.cases;
  const bool abstract_negative = ssn_abstract(inst.fc, inst.w);
  const bool expected = !abstract_negative;

  const SetCode x = big_union(inst.fc);
  const ShareTable table(inst.w, x);
  const Family closed = closure(inst.fc);
  NegativeList shuffled = negative_share_list(table);
  std::shuffle(shuffled.entries.begin(), shuffled.entries.end(), rng);

  const struct {
    const char* name;
    bool result;
  } runs[] = {
      {"refined", ssn_refined(inst.fc, inst.w).all_nonnegative},
      {"no-bound-prune", ssn_refined(inst.fc, inst.w, {.bound_prune = false}).all_nonnegative},
      {"no-member-prune", ssn_refined(inst.fc, inst.w, {.member_prune = false}).all_nonnegative},
      {"shuffled-order", run_search(closed, table, shuffled).all_nonnegative},
  };
  for (const auto& run : runs) {
    if (run.result != expected) {
      record_discrepancy(report, describe(inst.fc, inst.w) + " " + run.name +
                                     " disagrees with the abstract search");
      return;
    }
  }
}

}  // namespace

DiffReport refine_exhaustive(unsigned n, Weight max_weight, std::uint64_t seed) {
  DiffReport report;
  std::mt19937_64 rng(seed);
  const std::vector<SetCode> pool = submasks(range_code(n));
  std::vector<Weight> v(n, 0);
  std::vector<WeightFn> weights;
  while (true) {
    weights.emplace_back(v);
    std::size_t i = 0;
    while (i < n && v[i] == max_weight) v[i++] = 0;
    if (i == n) break;
    ++v[i];
  }
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << pool.size()); ++pick) {
    std::vector<SetCode> members;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if ((pick >> i) & 1u) members.push_back(pool[i]);
    }
    const Family fc(members);
    for (const WeightFn& w : weights) {
      if (!is_weight_function_on(w, big_union(fc))) continue;
      compare_refinements({fc, w}, rng, report);
    }
  }
  return report;
}

DiffReport refine_random(unsigned max_n, std::uint64_t trials, std::uint64_t seed) {
  DiffReport report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> pick_n(1, max_n);
  std::uniform_int_distribution<unsigned> pick_size(1, 4);
  std::uniform_int_distribution<Weight> pick_weight(0, 3);
  while (report.cases < trials) {
    const unsigned n = pick_n(rng);
    std::uniform_int_distribution<SetCode> pick_set(0, range_code(n));
    std::vector<SetCode> members;
    const unsigned size = pick_size(rng);
    for (unsigned i = 0; i < size; ++i) members.push_back(pick_set(rng));
    std::vector<Weight> values(n);
    for (Weight& v : values) v = pick_weight(rng);
    Instance inst{Family(members), WeightFn(values)};
    if (!is_weight_function_on(inst.w, big_union(inst.fc))) continue;
    compare_refinements(inst, rng, report);
  }
  return report;
}

DiffReport closure_random(unsigned n, unsigned max_size, std::uint64_t trials,
                          std::uint64_t seed) {
  DiffReport report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<SetCode> pick_set(0, range_code(n));
  std::uniform_int_distribution<unsigned> pick_size(0, max_size);
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::vector<SetCode> members;
    const unsigned size = pick_size(rng);
    for (unsigned i = 0; i < size; ++i) members.push_back(pick_set(rng));
    const Family f(members);
    ++report.cases;
    if (!(closure(f) == oracle::closure_oracle(f))) {
      std::ostringstream os;
      os << "family=" << f << " closure=" << closure(f)
         << " oracle=" << oracle::closure_oracle(f);
      record_discrepancy(report, os.str());
    }
  }
  return report;
}

DiffReport worked_examples(std::ostream& out) {
  DiffReport report;
  auto check = [&](const std::string& name, bool ok) {
    ++report.cases;
    out << (ok ? "PASS " : "FAIL ") << name << '\n';
    if (!ok) record_discrepancy(report, name);
  };

  // Shares: w(a0) = 1, w(a1) = 2, zero elsewhere, elements a0..a2 -> 0..2.
  {
    const WeightFn w{1, 2, 0};
    const SetCode x = encode(std::vector<ElementId>{0, 1, 2});
    const Family f = Family::of({{0, 1}, {1, 2}, {1}});
    check("share: sw(w, {a0,a1,a2}) = 3", set_weight(w, x) == 3);
    check("share: fw(w, {{a0,a1},{a1,a2},{a1}}) = 7", family_weight(w, f) == 7);
    check("share: ss({a1,a2}) = 1", set_share(w, Family::of({{1, 2}}).members()[0], x) == 1);
    check("share: fs({{a0,a1},{a1,a2},{a1}}) = 5", family_share(w, f, x) == 5);
  }

  // Hypercubes: k0 -> 0, k1 -> 1, s0 -> 2, s1 -> 3.
  const SetCode k0 = 1u << 0, k1 = 1u << 1, s0 = 1u << 2, s1 = 1u << 3;
  const SetCode spread = s0 | s1;
  {
    check("hypercube: cube({}, S)",
          oracle::hypercube(0, spread) == Family{0, s0, s1, s0 | s1});
    check("hypercube: cube({k0}, S)",
          oracle::hypercube(k0, spread) == Family{k0, k0 | s0, k0 | s1, k0 | s0 | s1});
    check("hypercube: cube({k1}, S)",
          oracle::hypercube(k1, spread) == Family{k1, k1 | s0, k1 | s1, k1 | s0 | s1});
    const SetCode kk = k0 | k1;
    check("hypercube: cube({k0,k1}, S)",
          oracle::hypercube(kk, spread) == Family{kk, kk | s0, kk | s1, kk | s0 | s1});
  }

  // Hyper-shares and projections over X = K u S with unit weights.
  {
    const SetCode x = k0 | k1 | s0 | s1;
    const Family f{s0, s1, k0 | s0, k0 | k1 | s0 | s1};
    const WeightFn w{1, 1, 1, 1};
    check("hypershare: hs({}) = -4", oracle::hyper_share(0, spread, f, w, x) == -4);
    check("hypershare: hs({k0}) = 0", oracle::hyper_share(k0, spread, f, w, x) == 0);
    check("hypershare: hs({k1}) = 0", oracle::hyper_share(k1, spread, f, w, x) == 0);
    check("hypershare: hs({k0,k1}) = 4", oracle::hyper_share(k0 | k1, spread, f, w, x) == 4);

    check("hcprj: prj({}) = {{s0},{s1}}", oracle::project(0, spread, f) == Family{s0, s1});
    check("hcprj: prj({k0}) = {{s0}}", oracle::project(k0, spread, f) == Family{s0});
    check("hcprj: prj({k1}) = {}", oracle::project(k1, spread, f) == Family{});
    check("hcprj: prj({k0,k1}) = {{s0,s1}}",
          oracle::project(k0 | k1, spread, f) == Family{s0 | s1});
  }
  return report;
}

int cmd_oracle(const OracleRequest& req, std::ostream& out, std::ostream& err) {
  DiffReport report;
  try {
    if (req.subcommand == "examples") {
      report = worked_examples(out);
    } else if (req.subcommand == "uce-vs-ssn") {
      if (req.n > 4) {
        err << "exhaustive extension enumeration is limited to n <= 4\n";
        return kResourceGuard;
      }
      report = uce_vs_ssn(req.n, req.max_sets, req.max_weight);
    } else if (req.subcommand == "refine") {
      if (req.n > 5 && !req.allow_large) {
        err << "n=" << req.n << " exceeds the default guard of 5; pass --allow-large\n";
        return kResourceGuard;
      }
      report = refine_random(req.n, req.trials, req.seed);
    } else if (req.subcommand == "refine-exhaustive") {
      if (req.n > 3 && !req.allow_large) {
        err << "n=" << req.n << " exceeds the default guard of 3; pass --allow-large\n";
        return kResourceGuard;
      }
      report = refine_exhaustive(req.n, req.max_weight, req.seed);
    } else if (req.subcommand == "closure") {
      report = closure_random(req.n, req.max_size, req.trials, req.seed);
    } else {
      err << "unknown oracle subcommand '" << req.subcommand << "'\n";
      return kParseError;
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  out << "cases=" << report.cases << " discrepancies=" << report.discrepancies;
  if (req.subcommand == "uce-vs-ssn") out << " negative_cases=" << report.negative_cases;
  out << '\n';
  if (report.discrepancies != 0) {
    out << "counterexample: " << report.first_counterexample << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace frankl::cli
