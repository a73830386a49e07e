// Runs acceptance criteria 1-8 and prints one PASS/FAIL line for each.
// Exits nonzero when any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "agreement_fixture.hpp"
#include "fixtures.hpp"
#include "fudg/agreement.hpp"
#include "fudg/corpus.hpp"
#include "fudg/enumeration.hpp"
#include "fudg/gfl.hpp"
#include "fudg/kirchhoff.hpp"
#include "fudg/toolkit/cli.hpp"
#include "fudg/validate.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace fudg;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt(double v, int precision = 3) {
  std::ostringstream ss;
  ss.precision(precision);
  ss << std::fixed << v;
  return ss.str();
}

// Shared by criteria 3 and 4.
std::vector<AnnotationGraph> random_suite() {
  std::mt19937_64 rng(2013);
  testing::GenOptions o;
  o.max_words = 6;
  std::vector<AnnotationGraph> out;
  for (int i = 0; i < 600; ++i) out.push_back(testing::random_annotation(rng, o));
  return out;
}

Outcome two_fudge_example() {
  const auto start = Clock::now();
  const auto g = parse_annotation("a b c d e f", "((a b)* c d) < e\nb < f");
  const auto r = promiscuity_exact(g);
  const double ms = ms_since(start);
  Outcome o;
  o.pass = r.prom == 6 && r.com && std::abs(*r.com - 0.816) <= 0.0005 && ms < 10.0;
  o.detail = "prom=" + to_string(r.prom) + " com=" + (r.com ? fmt(*r.com, 4) : "undefined") + " " + fmt(ms) + " ms";
  return o;
}

Outcome parse_suite() {
  std::size_t ok = 0;
  std::size_t total = 0;
  std::string failures;
  for (const auto& doc : read_corpus(testing::read_fixture("snippet_corpus.txt"))) {
    ++total;
    try {
      const auto g = parse_annotation(doc.tokens, doc.gfl);
      if (validate(g).empty()) {
        ++ok;
      } else {
        failures += " " + doc.id;
      }
    } catch (const Error&) {
      failures += " " + doc.id;
    }
  }
  bool rejected = false;
  try {
    parse_annotation("the jet black cat likes fish", "black < jet > likes");
  } catch (const GflError& e) {
    rejected = e.code() == ErrorCode::TwoHeads;
  }
  Outcome o;
  o.pass = ok == total && total > 0 && rejected;
  o.detail = std::to_string(ok) + "/" + std::to_string(total) + " snippets valid, TwoHeads " +
             (rejected ? "rejected" : "NOT rejected") + (failures.empty() ? "" : "; failed:" + failures);
  return o;
}

Outcome oracle_equivalence(const std::vector<AnnotationGraph>& suite) {
  const auto start = Clock::now();
  std::size_t prom_mismatch = 0;
  std::size_t parent_mismatch = 0;
  std::size_t consistent = 0;
  for (const auto& g : suite) {
    const auto expected = testing::oracle(g);
    if (promiscuity_exact(g).prom != expected.prom) ++prom_mismatch;
    if (expected.prom == 0) continue;
    ++consistent;
    const auto map = supported_parents(g);
    for (const auto& [node, parents] : expected.parents) {
      const auto it = map.parents.find(node);
      if (it == map.parents.end() || std::set<NodeId>(it->second.begin(), it->second.end()) != parents) {
        ++parent_mismatch;
        break;
      }
    }
  }
  const double s = ms_since(start) / 1000.0;
  Outcome o;
  o.pass = suite.size() >= 500 && prom_mismatch == 0 && parent_mismatch == 0 && s < 60.0;
  o.detail = std::to_string(suite.size()) + " annotations (" + std::to_string(consistent) +
             " consistent), prom mismatches " + std::to_string(prom_mismatch) + ", parent mismatches " +
             std::to_string(parent_mismatch) + ", " + fmt(s, 2) + " s";
  return o;
}

Outcome kirchhoff_bound(const std::vector<AnnotationGraph>& suite) {
  std::size_t below = 0;
  std::size_t unequal = 0;
  std::size_t fudge_free = 0;
  for (const auto& g : suite) {
    const auto exact = promiscuity_exact(g).prom;
    const auto bound = promiscuity_kirchhoff(g).prom;
    if (bound < exact) ++below;
    if (g.fudge_nodes().empty()) {
      ++fudge_free;
      if (bound != exact) ++unequal;
    }
  }
  Outcome o;
  o.pass = below == 0 && unequal == 0;
  o.detail = std::to_string(below) + " below exact, " + std::to_string(unequal) + "/" + std::to_string(fudge_free) +
             " fudge-free instances unequal";
  return o;
}

Outcome commitment_endpoints() {
  std::mt19937_64 rng(5);
  std::size_t trees_bad = 0;
  std::size_t empty_bad = 0;
  constexpr std::size_t kTrees = 300;
  for (std::size_t i = 0; i < kTrees; ++i) {
    const auto g = testing::random_tree_annotation(rng, 1 + i % 12);
    const auto r = promiscuity(g, PromMode::Auto);
    if (!r.com || *r.com != 1.0) ++trees_bad;
  }
  std::size_t empties = 0;
  for (std::size_t words = 2; words <= 40; ++words) {
    ++empties;
    const auto g = parse_annotation(testing::sentence(words), "");
    const auto r = promiscuity(g, PromMode::Auto);
    if (!r.com || *r.com != 0.0) ++empty_bad;
  }
  Outcome o;
  o.pass = trees_bad == 0 && empty_bad == 0;
  o.detail = std::to_string(kTrees - trees_bad) + "/" + std::to_string(kTrees) + " trees at com=1, " +
             std::to_string(empties - empty_bad) + "/" + std::to_string(empties) + " empty annotations at com=0";
  return o;
}

Outcome agreement_identities() {
  std::mt19937_64 rng(6);
  testing::GenOptions opts;
  std::size_t checked = 0;
  std::size_t bad = 0;
  double worst = 0;
  while (checked < 100) {
    const auto g = testing::random_annotation(rng, opts);
    const auto r = promiscuity_exact(g);
    if (!r.com) continue;
    ++checked;
    const double soft = soft_com_prec(g, g, CountMode::Exact);
    const double hard = com_prec(g, g);
    const double err = std::max(std::abs(soft - *r.com), std::abs(hard - *r.com));
    worst = std::max(worst, err);
    if (err > 1e-9) ++bad;
  }
  Outcome o;
  o.pass = bad == 0;
  std::ostringstream ss;
  ss << checked << " annotations, " << bad << " violations, max error " << worst;
  o.detail = ss.str();
  return o;
}

bool same(const std::optional<double>& a, const std::optional<double>& b) { return a == b; }

Outcome agreement_fixture() {
  const auto pairs = testing::fixture_pairs();
  std::string mismatches;
  for (const auto mode : {CountMode::Exact, CountMode::Kirchhoff}) {
    const auto got = corpus_agreement(pairs, mode);
    const auto want = testing::hand_report(mode);
    const bool ok = got.total == want.total && got.n == want.n && got.n_intersect == want.n_intersect &&
                    got.excluded == want.excluded && got.dropped == want.dropped &&
                    same(got.mean_com1, want.mean_com1) && same(got.mean_com2, want.mean_com2) &&
                    same(got.mean_com_prec12, want.mean_com_prec12) &&
                    same(got.mean_com_prec21, want.mean_com_prec21) &&
                    same(got.mean_soft_com_prec12, want.mean_soft_com_prec12) &&
                    same(got.mean_soft_com_prec21, want.mean_soft_com_prec21) && same(got.mean_f1, want.mean_f1);
    if (!ok) mismatches += std::string(" ") + std::string(to_string(mode));
  }

  std::ostringstream out, err;
  const int code = toolkit::run_cli(
      {"agree", testing::fixture_path("agreement_a1.txt"), testing::fixture_path("agreement_a2.txt"), "--label", "fixture"},
      out, err);
  std::vector<std::string> lines;
  std::istringstream in(out.str());
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  bool layout = code == 0 && lines.size() == 3 && lines[0].find("Exact") != std::string::npos &&
                lines[0].find("Kirchhoff") != std::string::npos && lines[2].rfind("fixture", 0) == 0;
  if (layout) {
    std::istringstream header(lines[1]);
    std::vector<std::string> cols;
    for (std::string c; header >> c;) cols.push_back(c);
    const std::vector<std::string> group{"N", "com1", "com2", "N_int>0", "1|2", "2|1", "F1"};
    std::vector<std::string> both = group;
    both.insert(both.end(), group.begin(), group.end());
    std::istringstream row(lines[2]);
    std::vector<std::string> cells;
    for (std::string c; row >> c;) cells.push_back(c);
    layout = cols == both && cells.size() == 15;
  }
  Outcome o;
  o.pass = mismatches.empty() && layout;
  o.detail = std::string(mismatches.empty() ? "reports match hand values" : "mismatch in" + mismatches) +
             ", table layout " + (layout ? "ok" : "wrong");
  return o;
}

Outcome kirchhoff_speed() {
  const auto g = parse_annotation(testing::sentence(40), "");
  const auto start = Clock::now();
  const auto r = promiscuity_kirchhoff(g);
  const double ms = ms_since(start);
  const bool match = r.prom == pow_bigint(41, 39);
  Outcome o;
  o.pass = match && ms < 50.0;
  o.detail = std::string(match ? "count = 41^39" : "count = " + to_string(r.prom)) + ", " + fmt(ms) + " ms";
  return o;
}

}  // namespace

int main() {
  const auto suite = random_suite();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 two-fudge example promiscuity", two_fudge_example},
      {"AC2 snippet corpus parse suite", parse_suite},
      {"AC3 oracle equivalence", [&] { return oracle_equivalence(suite); }},
      {"AC4 Kirchhoff upper bound", [&] { return kirchhoff_bound(suite); }},
      {"AC5 commitment endpoints", commitment_endpoints},
      {"AC6 agreement identities", agreement_identities},
      {"AC7 agreement fixture report", agreement_fixture},
      {"AC8 Kirchhoff performance", kirchhoff_speed},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << "\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
