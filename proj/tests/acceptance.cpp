// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli/commands.hpp"
#include "frankl/family.hpp"
#include "frankl/oracle.hpp"
#include "frankl/search.hpp"
#include "frankl/symmetry.hpp"
#include "frankl/weights.hpp"

namespace {

using namespace frankl;
using Clock = std::chrono::steady_clock;

struct Result {
  bool ok = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<cli::CandidateRecord> table_rows() {
  return cli::load_records(std::string(FRANKL_DATA_DIR) + "/table1.jsonl");
}

Result table_reproduction() {
  const auto rows = table_rows();
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::ostringstream out, err;
  const auto start = Clock::now();
  const int code = cli::cmd_table(rows, threads, out, err, {false});
  const double secs = seconds_since(start);

  std::istringstream lines(out.str());
  std::string line;
  std::size_t certified = 0, total = 0;
  while (std::getline(lines, line)) {
    ++total;
    if (line.find("verdict=certified") != std::string::npos) ++certified;
  }
  Result r;
  r.ok = code == 0 && rows.size() == 15 && total == 15 && certified == 15 && secs <= 600.0;
  std::ostringstream d;
  d << certified << "/" << total << " rows certified, exit=" << code << ", " << secs << "s";
  r.detail = d.str();
  return r;
}

std::vector<NkmList> filtered(unsigned n, bool not533, bool not634) {
  std::vector<NkmList> out;
  for (NkmList& f : gen_families(n, 3, 4)) {
    if (not533 && check_533(f)) continue;
    if (not634 && check_634(f)) continue;
    out.push_back(std::move(f));
  }
  return out;
}

bool equivalent(const NkmList& a, const NkmList& b, const std::vector<Permutation>& perms) {
  const Family target = to_family(b);
  for (const Permutation& p : perms) {
    if (to_family(perm_family(a, p)) == target) return true;
  }
  return false;
}

Result representative_counts() {
  const auto start = Clock::now();
  const auto p5 = all_permutations(5);
  const auto p6 = all_permutations(6);
  const auto p7 = all_permutations(7);
  const auto r5 = nef(gen_families(5, 3, 3), p5);
  const auto r6 = nef(filtered(6, true, false), p6);
  const auto r7 = nef(filtered(7, true, true), p7);

  Result r;
  r.ok = r5.size() == 4 && r6.size() == 2 && r7.size() == 8;

  // Every bundled family of a block matches exactly one representative.
  std::size_t matched = 0, exact = 0;
  for (const auto& row : table_rows()) {
    const std::string& label = row.label;
    const std::vector<NkmList>* reps = nullptr;
    const std::vector<Permutation>* perms = nullptr;
    if (label.rfind("533", 0) == 0) {
      reps = &r5;
      perms = &p5;
    } else if (label.rfind("634", 0) == 0) {
      reps = &r6;
      perms = &p6;
    } else if (label.rfind("734", 0) == 0) {
      reps = &r7;
      perms = &p7;
    } else {
      continue;
    }
    std::size_t hits = 0;
    for (const NkmList& rep : *reps) {
      if (equivalent(row.family, rep, *perms)) ++hits;
      if (to_family(rep) == to_family(row.family)) ++exact;
    }
    if (hits != 1) r.ok = false;
    ++matched;
  }
  const double secs = seconds_since(start);
  r.ok = r.ok && matched == 14 && secs <= 300.0;
  std::ostringstream d;
  d << "nef sizes " << r5.size() << "/" << r6.size() << "/" << r7.size() << ", " << matched
    << " table families matched, " << exact << " identical to a representative, " << secs << "s";
  r.detail = d.str();
  return r;
}

Result candidate_space_counts() {
  const std::size_t a = gen_families(5, 3, 3).size();
  const std::size_t b = gen_families(6, 3, 4).size();
  const std::size_t c = gen_families(7, 3, 4).size();
  Result r;
  r.ok = a == 120 && b == 4845 && c == 52360;
  r.detail = std::to_string(a) + "/" + std::to_string(b) + "/" + std::to_string(c);
  return r;
}

Result describe(const cli::DiffReport& report, std::uint64_t min_cases) {
  Result r;
  r.ok = report.discrepancies == 0 && report.cases >= min_cases;
  r.detail = std::to_string(report.cases) + " cases, " + std::to_string(report.discrepancies) +
             " discrepancies";
  if (!report.first_counterexample.empty()) r.detail += ", first: " + report.first_counterexample;
  return r;
}

Result oracle_equivalence() {
  const auto report = cli::uce_vs_ssn(4, 3, 2);
  Result r = describe(report, 1);
  r.ok = r.ok && report.negative_cases > 0;
  r.detail += ", " + std::to_string(report.negative_cases) + " with a negative extension";
  return r;
}

Result refinement_equivalence() {
  const auto exhaustive = cli::refine_exhaustive(3, 2, 7);
  const auto random = cli::refine_random(5, 2000, 11);
  Result a = describe(exhaustive, 1);
  Result b = describe(random, 1000);
  return Result{a.ok && b.ok, "exhaustive n<=3: " + a.detail + "; random n<=5: " + b.detail};
}

Result worked_examples() {
  std::ostringstream lines;
  const auto report = cli::worked_examples(lines);
  Result r = describe(report, 16);
  return r;
}

// Random family over {0..n-1} and weights with entries in [0, 8].
struct Sample {
  Family f;
  WeightFn w;
};

Sample sample(std::mt19937_64& rng, unsigned n) {
  std::uniform_int_distribution<SetCode> pick_set(0, range_code(n));
  std::uniform_int_distribution<unsigned> pick_size(0, 10);
  std::uniform_int_distribution<Weight> pick_weight(0, 8);
  std::vector<SetCode> members(pick_size(rng));
  for (SetCode& a : members) a = pick_set(rng);
  std::vector<Weight> values(n);
  for (Weight& v : values) v = pick_weight(rng);
  return {Family(members), WeightFn(values)};
}

Result algebraic_identities() {
  constexpr int kTrials = 10000;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<unsigned> pick_n(1, 6);
  int fails_fs = 0, fails_hyper = 0, fails_prj = 0;

  for (int t = 0; t < kTrials; ++t) {
    const unsigned n = pick_n(rng);
    const Sample s = sample(rng, n);
    const SetCode x = range_code(n);
    const Share lhs = family_share(s.w, s.f, x);
    const Share rhs = 2 * static_cast<Share>(family_weight(s.w, s.f)) -
                      static_cast<Share>(set_weight(s.w, x)) * static_cast<Share>(s.f.size());
    if (lhs != rhs) ++fails_fs;
  }

  for (int t = 0; t < kTrials; ++t) {
    const unsigned n = pick_n(rng);
    const Sample s = sample(rng, n);
    const SetCode u = big_union(s.f);
    std::uniform_int_distribution<SetCode> pick(0, range_code(n));
    const SetCode spread = pick(rng) & u;
    const SetCode base = u & ~spread;
    Share sum = 0;
    for (SetCode k : submasks(base)) sum += oracle::hyper_share(k, spread, s.f, s.w, u);
    if (sum != family_share(s.w, s.f, u)) ++fails_hyper;
  }

  for (int t = 0; t < kTrials; ++t) {
    const unsigned n = pick_n(rng);
    Sample s = sample(rng, n);
    const SetCode x = range_code(n);
    std::uniform_int_distribution<SetCode> pick(0, x);
    const SetCode spread = pick(rng);
    const SetCode base = pick(rng) & ~spread;
    std::vector<Weight> values = s.w.values();
    for (ElementId e : decode(base)) values[e] = 0;
    const WeightFn w(values);
    const Share hs = oracle::hyper_share(base, spread, s.f, w, x);
    if (hs != family_share(w, oracle::project(base, spread, s.f), x)) ++fails_prj;
  }

  Result r;
  r.ok = fails_fs == 0 && fails_hyper == 0 && fails_prj == 0;
  std::ostringstream d;
  d << kTrials << " trials each; mismatches share=" << fails_fs << " hyper=" << fails_hyper
    << " projection=" << fails_prj;
  r.detail = d.str();
  return r;
}

Result permutation_invariance() {
  constexpr int kTrials = 10000;
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<unsigned> pick_n(1, 7);
  std::vector<std::vector<Permutation>> perms(8);
  for (unsigned n = 1; n <= 7; ++n) perms[n] = all_permutations(n);
  int fails = 0;

  for (int t = 0; t < kTrials; ++t) {
    const unsigned n = pick_n(rng);
    std::uniform_int_distribution<SetCode> pick_set(0, range_code(n));
    std::uniform_int_distribution<unsigned> pick_size(0, 8);
    std::set<SetCode> codes;
    const unsigned size = pick_size(rng);
    for (unsigned i = 0; i < size; ++i) codes.insert(pick_set(rng));
    NkmList f;
    for (SetCode c : codes) f.push_back(decode(c));
    std::uniform_int_distribution<std::size_t> pick_p(0, perms[n].size() - 1);
    const Permutation& p = perms[n][pick_p(rng)];
    const NkmList g = perm_family(f, p);
    const Family ff = to_family(f);
    const Family gf = to_family(g);

    bool ok = ff.size() == gf.size() && f.size() == g.size();
    for (ElementId a : decode(big_union(ff))) {
      ok = ok && oracle::cnt(a, ff) == oracle::cnt(p[a], gf);
    }
    std::multiset<std::size_t> sizes_f, sizes_g;
    for (const Block& a : f) {
      ok = ok && perm_set(a, p).size() == a.size();
      sizes_f.insert(a.size());
    }
    for (const Block& a : g) sizes_g.insert(a.size());
    ok = ok && sizes_f == sizes_g;
    ok = ok && is_union_closed(ff) == is_union_closed(gf);
    ok = ok && oracle::is_frankl(ff) == oracle::is_frankl(gf);
    // Closed families exercise the union-closed branch too.
    const Family cf = closure(ff);
    NkmList cl;
    for (SetCode c : cf) cl.push_back(decode(c));
    const Family cg = to_family(perm_family(cl, p));
    ok = ok && is_union_closed(cg) && oracle::is_frankl(cf) == oracle::is_frankl(cg);
    if (!ok) ++fails;
  }
  Result r;
  r.ok = fails == 0;
  r.detail = std::to_string(kTrials) + " trials, " + std::to_string(fails) + " violations";
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Result (*run)();
  };
  const Criterion criteria[] = {
      {"table reproduction", table_reproduction},
      {"representative counts", representative_counts},
      {"candidate-space counts", candidate_space_counts},
      {"oracle equivalence", oracle_equivalence},
      {"refinement equivalence", refinement_equivalence},
      {"worked examples", worked_examples},
      {"algebraic identities", algebraic_identities},
      {"permutation invariance", permutation_invariance},
  };

  int failed = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = Result{false, std::string("exception: ") + e.what()};
    }
    std::cout << (r.ok ? "PASS" : "FAIL") << " [" << index << "] " << c.name << ": " << r.detail
              << std::endl;
    if (!r.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
