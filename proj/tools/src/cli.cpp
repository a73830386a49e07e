#include "fudg/toolkit/cli.hpp"

#include <cstdio>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "fudg/agreement.hpp"
#include "fudg/dot.hpp"
#include "fudg/gfl.hpp"
#include "fudg/stats.hpp"
#include "fudg/toolkit/service.hpp"

namespace fudg::toolkit {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Loaded {
  CorpusDocument doc;
  std::optional<AnnotationGraph> graph;
  std::optional<Json> error;
  std::vector<Violation> violations;

  bool ok() const { return graph && violations.empty(); }
};

// Applies `f` to every index, a few documents at a time. Results keep input
// order.
template <typename F>
auto parallel_map(std::size_t count, F&& f) {
  using R = decltype(f(std::size_t{0}));
  std::vector<R> out;
  out.reserve(count);
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < count; start += width) {
    std::vector<std::future<R>> batch;
    for (std::size_t i = start; i < std::min(count, start + width); ++i) {
      batch.push_back(std::async(width == 1 ? std::launch::deferred : std::launch::async, f, i));
    }
    for (auto& fut : batch) out.push_back(fut.get());
  }
  return out;
}

std::vector<Loaded> load(const std::string& path) {
  auto docs = read_corpus(read_input(path));
  return parallel_map(docs.size(), [&](std::size_t i) {
    Loaded l{docs[i], std::nullopt, std::nullopt, {}};
    try {
      l.graph = parse_annotation(l.doc.tokens, l.doc.gfl);
      l.violations = validate(*l.graph);
    } catch (const Error& e) {
      l.error = error_to_json(e);
    }
    return l;
  });
}

std::string describe_error(const Json& e) {
  std::string out;
  if (e.contains("line") && e["line"].get<std::size_t>() > 0) {
    out += "line " + std::to_string(e["line"].get<std::size_t>()) + ": ";
  }
  out += e["code"].get<std::string>() + ": " + e["message"].get<std::string>();
  return out;
}

// Reports documents that did not parse or validate; returns how many.
std::size_t report_invalid(const std::vector<Loaded>& docs, std::ostream& err) {
  std::size_t bad = 0;
  for (const auto& l : docs) {
    if (l.ok()) continue;
    ++bad;
    if (l.error) {
      err << l.doc.id << ": " << describe_error(*l.error) << "\n";
    } else {
      for (const auto& v : l.violations) err << l.doc.id << ": " << to_string(v.code) << ": " << v.message << "\n";
    }
  }
  return bad;
}

Json invalid_json(const Loaded& l) {
  Json j;
  if (l.error) {
    j["error"] = *l.error;
  } else {
    Json e;
    e["code"] = to_string(ErrorCode::ValidationFailed);
    e["message"] = "annotation violates well-formedness rules";
    e["violations"] = violations_to_json(*l.graph, l.violations);
    j["error"] = e;
  }
  return j;
}

std::string two_decimals(const std::optional<double>& v) {
  if (!v) return "-";
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(2) << *v;
  auto s = ss.str();
  if (s.rfind("0.", 0) == 0) s.erase(0, 1);
  return s;
}

void print_agreement_table(std::ostream& out, const std::string& label,
                           const std::vector<const AgreementReport*>& groups) {
  static constexpr const char* kColumns[] = {"N", "com1", "com2", "N_int>0", "1|2", "2|1", "F1"};
  static constexpr int kWidths[] = {8, 6, 6, 8, 6, 6, 6};
  const int label_width = std::max<int>(8, static_cast<int>(label.size()) + 2);
  const int group_width = 46;
  out << std::left << std::setw(label_width) << "";
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto* r = groups[g];
    const std::string title = r->mode == CountMode::Exact ? "Exact (exponential counting)" : "Kirchhoff (O(n^3) counting)";
    if (g + 1 < groups.size()) {
      out << std::setw(group_width + 2) << title;
    } else {
      out << title;
    }
  }
  out << "\n" << std::setw(label_width) << "";
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (g > 0) out << "  ";
    for (std::size_t c = 0; c < 7; ++c) out << std::right << std::setw(kWidths[c]) << kColumns[c];
  }
  out << "\n" << std::left << std::setw(label_width) << label;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto* r = groups[g];
    if (g > 0) out << "  ";
    const std::string values[] = {
        std::to_string(r->n) + "/" + std::to_string(r->total),
        two_decimals(r->mean_com1),
        two_decimals(r->mean_com2),
        std::to_string(r->n_intersect),
        two_decimals(r->mean_soft_com_prec12),
        two_decimals(r->mean_soft_com_prec21),
        two_decimals(r->mean_f1),
    };
    for (std::size_t c = 0; c < 7; ++c) out << std::right << std::setw(kWidths[c]) << values[c];
  }
  out << "\n";
}

void print_stats_table(std::ostream& out, const StatsReport& r) {
  static constexpr const char* kColumns[] = {"1Ws", "MWs", "Omitted", "Coord", "Anaph", "Utterances", "Fudge",
                                             "=1", ">1", ">=10", ">=10^2", ">=10^3", ">=10^4", "MeanCom"};
  const std::string values[] = {
      std::to_string(r.single_word_nodes),
      std::to_string(r.multiword_nodes),
      std::to_string(r.omitted_tokens),
      std::to_string(r.coordination_nodes),
      std::to_string(r.anaph_links),
      "[" + std::to_string(r.utterances_lo) + "," + std::to_string(r.utterances_hi) + "]",
      std::to_string(r.fudge_nodes),
      std::to_string(r.prom_histogram[0]),
      std::to_string(r.prom_histogram[1]),
      std::to_string(r.prom_histogram[2]),
      std::to_string(r.prom_histogram[3]),
      std::to_string(r.prom_histogram[4]),
      std::to_string(r.prom_histogram[5]),
      two_decimals(r.mean_com),
  };
  for (std::size_t c = 0; c < 14; ++c) {
    const auto w = std::max<std::size_t>(std::string_view(kColumns[c]).size(), values[c].size()) + 2;
    out << std::right << std::setw(static_cast<int>(w)) << kColumns[c];
  }
  out << "\n";
  for (std::size_t c = 0; c < 14; ++c) {
    const auto w = std::max<std::size_t>(std::string_view(kColumns[c]).size(), values[c].size()) + 2;
    out << std::right << std::setw(static_cast<int>(w)) << values[c];
  }
  out << "\n";
  out << r.documents << " documents, " << r.inconsistent << " inconsistent, " << r.over_cap << " over cap\n";
}

std::vector<AnnotationGraph> graphs_of(const std::vector<Loaded>& docs) {
  std::vector<AnnotationGraph> out;
  for (const auto& l : docs) out.push_back(*l.graph);
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Validate, visualize and measure FUDG annotations written in GFL."};
  app.name("fudg");
  app.require_subcommand(1);

  const std::map<std::string, std::string> mode_names{{"exact", "exact"}, {"kirchhoff", "kirchhoff"}, {"auto", "auto"}};
  std::uint64_t cap = default_cap();
  std::string mode = "auto";
  std::string format;

  auto* validate_cmd = app.add_subcommand("validate", "Check every document and report violations");
  std::string validate_path;
  validate_cmd->add_option("file", validate_path, "Corpus file (JSON lines or blocks); - for stdin")->required();
  validate_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* viz_cmd = app.add_subcommand("viz", "Render each document as Graphviz DOT or graph JSON");
  std::string viz_path;
  bool show_root = false;
  viz_cmd->add_option("file", viz_path, "Corpus file; - for stdin")->required();
  viz_cmd->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  viz_cmd->add_flag("--show-root", show_root, "Draw the root and the arcs into it");

  auto* stats_cmd = app.add_subcommand("stats", "Corpus statistics");
  std::string stats_path;
  stats_cmd->add_option("file", stats_path, "Corpus file; - for stdin")->required();
  stats_cmd->add_option("--mode", mode, "exact, kirchhoff or auto")->check(CLI::IsMember(mode_names));
  stats_cmd->add_option("--cap", cap, "Largest supported edge graph counted exactly");
  stats_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* prom_cmd = app.add_subcommand("prom", "Promiscuity and commitment per document, as JSON lines");
  std::string prom_path;
  bool explain = false;
  std::size_t samples = 0;
  prom_cmd->add_option("file", prom_path, "Corpus file; - for stdin")->required();
  prom_cmd->add_option("--mode", mode, "exact, kirchhoff or auto")->check(CLI::IsMember(mode_names));
  prom_cmd->add_option("--cap", cap, "Largest supported edge graph counted exactly");
  prom_cmd->add_flag("--explain", explain, "Include supported parents and tops");
  prom_cmd->add_option("--samples", samples, "With --explain, list up to this many analyses")
      ->check(CLI::Range(std::size_t{0}, kMaxSamples));

  auto* agree_cmd = app.add_subcommand("agree", "Agreement between two annotations of the same sentences");
  std::string agree_path1;
  std::string agree_path2;
  std::string label = "1~2";
  bool pairs = false;
  agree_cmd->add_option("first", agree_path1, "Annotations of annotator 1")->required();
  agree_cmd->add_option("second", agree_path2, "Annotations of annotator 2, in the same order")->required();
  agree_cmd->add_option("--mode", mode, "exact, kirchhoff or auto (both)")->check(CLI::IsMember(mode_names));
  agree_cmd->add_option("--cap", cap, "Largest supported edge graph counted exactly");
  agree_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  agree_cmd->add_option("--label", label, "Row label of the text report");
  agree_cmd->add_flag("--pairs", pairs, "Print one JSON line per sentence pair instead of the report");

  auto* serve_cmd = app.add_subcommand("serve", "Serve the JSON API under /v1");
  ServeOptions serve_options;
  serve_cmd->add_option("--host", serve_options.host, "Address to bind");
  serve_cmd->add_option("--port", serve_options.port, "Port to bind");
  serve_cmd->add_option("--max-payload", serve_options.max_payload, "Largest accepted request body in bytes");
  serve_cmd->add_option("--cap", cap, "Default cap for exact counting");

  std::vector<std::string> argv_storage{"fudg"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << "Run with --help for usage" << (sub == &app ? "" : " of " + sub->get_name()) << ".\n";
    return kExitUsage;
  }

  try {
    const PromMode prom_mode = parse_mode(mode);

    if (validate_cmd->parsed()) {
      const auto docs = load(validate_path);
      std::size_t bad = 0;
      for (const auto& l : docs) {
        if (!l.ok()) ++bad;
        if (format == "json") {
          Json j;
          j["id"] = l.doc.id;
          j["ok"] = l.ok();
          if (!l.ok()) j["error"] = invalid_json(l)["error"];
          out << j.dump() << "\n";
        } else if (l.ok()) {
          out << l.doc.id << ": ok\n";
        }
      }
      if (format != "json") report_invalid(docs, out);
      return bad == 0 ? kExitOk : kExitInvalid;
    }

    if (viz_cmd->parsed()) {
      const auto docs = load(viz_path);
      for (const auto& l : docs) {
        if (!l.graph) continue;
        if (format == "json") {
          out << parse_json(*l.graph).dump() << "\n";
        } else {
          out << "// " << l.doc.id << "\n" << to_dot(*l.graph, DotOptions{show_root});
        }
      }
      return report_invalid(docs, err) == 0 ? kExitOk : kExitInvalid;
    }

    if (stats_cmd->parsed()) {
      const auto docs = load(stats_path);
      if (report_invalid(docs, err) > 0) return kExitInvalid;
      const auto graphs = graphs_of(docs);
      const auto report = annotation_stats(graphs, prom_mode, cap);
      if (format == "json") {
        out << stats_to_json(report).dump() << "\n";
      } else {
        print_stats_table(out, report);
      }
      return kExitOk;
    }

    if (prom_cmd->parsed()) {
      const auto docs = load(prom_path);
      const auto lines = parallel_map(docs.size(), [&](std::size_t i) {
        const auto& l = docs[i];
        if (!l.ok()) return invalid_json(l).dump();
        if (explain) return analyze_json(*l.graph, prom_mode, cap, samples).dump();
        return promiscuity_to_json(promiscuity(*l.graph, prom_mode, cap)).dump();
      });
      for (const auto& line : lines) out << line << "\n";
      return report_invalid(docs, err) == 0 ? kExitOk : kExitInvalid;
    }

    if (agree_cmd->parsed()) {
      const auto docs1 = load(agree_path1);
      const auto docs2 = load(agree_path2);
      if (docs1.size() != docs2.size()) {
        err << "the files hold " << docs1.size() << " and " << docs2.size() << " documents\n";
        return kExitInvalid;
      }
      if (report_invalid(docs1, err) + report_invalid(docs2, err) > 0) return kExitInvalid;
      std::vector<PromMode> modes;
      if (prom_mode == PromMode::Auto && !pairs) {
        modes = {PromMode::Exact, PromMode::Kirchhoff};
      } else {
        modes = {prom_mode};
      }
      std::vector<AgreementReport> reports;
      for (const auto pm : modes) {
        const auto results = parallel_map(docs1.size(), [&](std::size_t i) {
          return pair_agreement(*docs1[i].graph, *docs2[i].graph, pm, cap);
        });
        if (pairs) {
          for (const auto& r : results) out << pair_to_json(r).dump() << "\n";
          return kExitOk;
        }
        const auto cm = pm == PromMode::Exact ? CountMode::Exact : CountMode::Kirchhoff;
        reports.push_back(summarize_agreement(results, cm));
      }
      if (format == "json") {
        Json j;
        for (const auto& r : reports) j[std::string(to_string(r.mode))] = report_to_json(r);
        out << j.dump() << "\n";
      } else {
        std::vector<const AgreementReport*> groups;
        for (const auto& r : reports) groups.push_back(&r);
        print_agreement_table(out, label, groups);
      }
      return kExitOk;
    }

    if (serve_cmd->parsed()) {
      serve_options.cap = cap;
      return serve(serve_options, err) ? kExitOk : kExitIo;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::BadInput || e.code() == ErrorCode::NoTokens ? kExitIo : kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace fudg::toolkit
