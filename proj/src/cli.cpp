#include "dcstab/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "dcstab/canon.hpp"
#include "dcstab/census.hpp"
#include "dcstab/criteria.hpp"
#include "dcstab/double_cover.hpp"
#include "dcstab/errors.hpp"
#include "dcstab/families.hpp"
#include "dcstab/graph6.hpp"
#include "dcstab/stability.hpp"

namespace dcstab::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "-" reads the first non-blank line of stdin.
Graph read_graph_argument(const std::string& arg, std::istream& in) {
  if (arg != "-") return parse_graph6(arg);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return parse_graph6(line);
  }
  throw ParseError("graph6: no record on standard input", 0);
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw UsageError("not a vertex index: '" + item + "'");
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

void print_census(std::ostream& out, const CensusRow& row, bool csv) {
  if (csv) {
    out << "n,cnbtf,ntu,xab\n" << row.n << ',' << row.cnbtf << ',' << row.ntu << ',' << row.xab << '\n';
    return;
  }
  out << std::setw(4) << "n" << std::setw(10) << "cnbtf" << std::setw(10) << "ntu" << std::setw(10) << "xab" << '\n'
      << std::setw(4) << row.n << std::setw(10) << row.cnbtf << std::setw(10) << row.ntu << std::setw(10) << row.xab
      << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stability of graphs via canonical double covers", "dcstab"};
  app.require_subcommand(1);

  std::string g6, g6_other;
  bool with_criteria = false, as_text = false, layer_partition = false, canonical = false;

  auto* analyze = app.add_subcommand("analyze", "Stability report for a graph6 record");
  analyze->add_option("graph", g6, "graph6 record, or - for stdin")->required();
  analyze->add_flag("--criteria", with_criteria, "Also evaluate every sufficient stability criterion");
  analyze->add_flag("--text", as_text, "Human-readable output instead of JSON");
  analyze->add_flag("--layer-partition", layer_partition, "Colour the cover by layers during the search");

  auto* criteria = app.add_subcommand("criteria", "Criterion verdicts as a JSON array");
  criteria->add_option("graph", g6, "graph6 record, or - for stdin")->required();

  auto* cover = app.add_subcommand("cover", "Canonical double cover as graph6");
  cover->add_option("graph", g6, "graph6 record, or - for stdin")->required();
  cover->add_flag("--canonical", canonical, "Print the canonically relabelled cover");

  auto* iso = app.add_subcommand("iso", "Isomorphism test");
  iso->add_option("first", g6, "graph6 record")->required();
  iso->add_option("second", g6_other, "graph6 record")->required();

  auto* family = app.add_subcommand("family", "Generate a named graph family member as graph6");
  family->require_subcommand(1);
  std::size_t fam_n = 0, fam_k = 0, fam_m = 0;
  std::string fam_h, fam_base, fam_a, fam_b;
  auto* fam_johnson = family->add_subcommand("johnson", "Johnson graph J(n,k)");
  fam_johnson->add_option("--n", fam_n)->required();
  fam_johnson->add_option("--k", fam_k)->required();
  auto* fam_lexcycle = family->add_subcommand("lexcycle", "Lexicographic product C_m wr H");
  fam_lexcycle->set_help_flag("--help");
  fam_lexcycle->add_option("--m", fam_m)->required();
  fam_lexcycle->add_option("--h", fam_h, "graph6 of H")->required();
  auto* fam_lms = family->add_subcommand("lms", "C_m wr H with the counterexample hypotheses checked");
  fam_lms->set_help_flag("--help");
  fam_lms->add_option("--m", fam_m)->required();
  fam_lms->add_option("--h", fam_h, "graph6 of H")->required();
  auto* fam_xab = family->add_subcommand("xab", "Construction X(A,B)");
  fam_xab->add_option("--base", fam_base, "graph6 of X")->required();
  fam_xab->add_option("--a", fam_a, "comma-separated vertices of A");
  fam_xab->add_option("--b", fam_b, "comma-separated vertices of B");
  auto* fam_complete = family->add_subcommand("complete", "Complete graph K_n");
  fam_complete->add_option("--n", fam_n)->required();
  auto* fam_cycle = family->add_subcommand("cycle", "Cycle C_n");
  fam_cycle->add_option("--n", fam_n)->required();
  auto* fam_petersen = family->add_subcommand("petersen", "Petersen graph");

  auto* census = app.add_subcommand("census", "Counts of non-trivially unstable graphs of one order");
  std::size_t census_n = 0, threads = 1;
  std::string stream_path, emit_path, reading = "labeled";
  bool csv = false, big = false;
  census->add_option("--n", census_n, "graph order")->required();
  census->add_option("--stream", stream_path, "graph6 file with all graphs of order n (- for stdin)");
  census->add_flag("--csv", csv, "CSV output");
  census->add_option("--emit-ntu", emit_path, "write non-trivially unstable graphs as graph6");
  census->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  census->add_flag("--big", big, "allow built-in generation of orders 9 and 10");
  census->add_option("--reading", reading, "X(A,B) realizability reading")
      ->check(CLI::IsMember({"labeled", "strict"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "dcstab: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (analyze->parsed()) {
      Graph g = read_graph_argument(g6, in);
      StabilityOptions opts;
      opts.layer_partition = layer_partition;
      if (with_criteria) {
        auto summary = criteria_summary(g);
        if (as_text) {
          out << to_text(summary.report);
          for (const auto& v : summary.verdicts)
            out << std::left << std::setw(28) << v.id << (v.applies ? "applies" : "does not apply") << '\n';
        } else {
          auto j = to_json(summary.report);
          j["criteria"] = to_json(summary.verdicts);
          out << j.dump() << '\n';
        }
      } else {
        auto report = stability_report(g, opts);
        out << (as_text ? to_text(report) : to_json(report).dump() + "\n");
      }
    } else if (criteria->parsed()) {
      out << to_json(criteria_summary(read_graph_argument(g6, in)).verdicts).dump() << '\n';
    } else if (cover->parsed()) {
      Graph bx = double_cover(read_graph_argument(g6, in)).cover;
      out << (canonical ? canonical_form(bx).canonical_graph6 : write_graph6(bx)) << '\n';
    } else if (iso->parsed()) {
      Graph g = read_graph_argument(g6, in);
      Graph h = g6_other == "-" && g6 == "-" ? read_graph_argument("-", in) : read_graph_argument(g6_other, in);
      out << (are_isomorphic(g, h) ? "true" : "false") << '\n';
    } else if (family->parsed()) {
      Graph g;
      if (fam_johnson->parsed()) {
        g = johnson(fam_n, fam_k);
      } else if (fam_lexcycle->parsed()) {
        g = lex_product(cycle(fam_m), parse_graph6(fam_h));
      } else if (fam_lms->parsed()) {
        g = lms_counterexample(fam_m, parse_graph6(fam_h));
      } else if (fam_xab->parsed()) {
        g = extend_xab(parse_graph6(fam_base), parse_vertex_list(fam_a), parse_vertex_list(fam_b)).result;
      } else if (fam_complete->parsed()) {
        g = complete_graph(fam_n);
      } else if (fam_cycle->parsed()) {
        g = cycle(fam_n);
      } else if (fam_petersen->parsed()) {
        g = petersen();
      }
      out << write_graph6(g) << '\n';
    } else if (census->parsed()) {
      CensusOptions opts;
      opts.threads = threads;
      opts.collect_ntu = !emit_path.empty();
      opts.reading = reading == "strict" ? XabReading::strict_base : XabReading::labeled;
      CensusResult result;
      if (stream_path.empty()) {
        result = run_census_builtin(census_n, opts, big);
      } else if (stream_path == "-") {
        result = run_census_stream(census_n, in, opts);
      } else {
        std::ifstream file(stream_path);
        if (!file) throw UsageError("cannot open " + stream_path);
        result = run_census_stream(census_n, file, opts);
      }
      if (!emit_path.empty()) {
        std::ofstream emit(emit_path);
        if (!emit) throw UsageError("cannot write " + emit_path);
        for (const auto& g : result.ntu) emit << write_graph6(g) << '\n';
      }
      print_census(out, result.row, csv);
    }
  } catch (const ParseError& e) {
    err << "dcstab: " << e.what() << '\n';
    return kInputError;
  } catch (const SoundnessError& e) {
    err << "dcstab: soundness violation: " << e.what() << '\n';
    return kSoundnessError;
  } catch (const std::exception& e) {
    err << "dcstab: " << e.what() << '\n';
    return kUsageError;
  }
  return kSuccess;
}

}  // namespace dcstab::cli
