#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "mukai/corpus.hpp"
#include "mukai/error.hpp"
#include "mukai/io.hpp"
#include "mukai/nefindex.hpp"
#include "mukai/optimize.hpp"
#include "mukai/report.hpp"

using namespace mukai;
namespace fs = std::filesystem;

namespace {

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse:
      return 1;
    case ErrorKind::Inconsistency:
      return 3;
    default:
      return 2;
  }
}

// Mirrors stdout into $MUKAI_OUTPUT_DIR/<stem><suffix> when the variable is set.
void emit(const std::string& text, const std::string& input, const std::string& suffix) {
  std::cout << text;
  const char* dir = std::getenv("MUKAI_OUTPUT_DIR");
  if (!dir || !*dir) return;
  fs::create_directories(dir);
  std::ofstream out(fs::path(dir) / (fs::path(input).stem().string() + suffix), std::ios::binary);
  out << text;
}

std::string render(const MukaiReport& r, const std::string& format) {
  return format == "text" ? to_text(r) : dump(to_json(r));
}

std::optional<Rational> parse_pseudo_index(const std::string& s) {
  if (s.empty()) return std::nullopt;
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::Parse, "--pseudo-index: '" + s + "' is not a rational number");
  }
}

std::string corpus_report(const CorpusEntry& e) {
  if (e.kind == "fan") return dump(to_json(report_fan(fan_from_json(e.document).realize())));
  if (e.kind == "spherical") return dump(to_json(report_spherical(spherical_from_json(e.document))));
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polyhedral invariants for Mukai-type inequalities"};
  app.require_subcommand(1);

  std::string file, format = "json", pseudo_index_text, corpus_name;
  std::optional<std::size_t> picard;
  bool partitions = false;

  auto* fan_cmd = app.add_subcommand("analyze-fan", "Report on a fan file");
  fan_cmd->add_option("file", file, "fan JSON")->required();
  fan_cmd->add_option("--report", format, "output format")->check(CLI::IsMember({"json", "text"}));

  auto* sph_cmd = app.add_subcommand("analyze-spherical", "Report on a spherical record file");
  sph_cmd->add_option("file", file, "record JSON")->required();
  sph_cmd->add_option("--report", format, "output format")->check(CLI::IsMember({"json", "text"}));
  sph_cmd->add_option("--picard-rank", picard, "Picard rank, if known");
  sph_cmd->add_option("--pseudo-index", pseudo_index_text, "pseudo-index as p/q, if known");

  auto* tau_cmd = app.add_subcommand("total-index", "Integral and rational total index of a Fano fan");
  tau_cmd->add_option("file", file, "fan JSON")->required();
  tau_cmd->add_flag("--partitions", partitions, "count integral nef partitions by number of parts");

  auto* hb_cmd = app.add_subcommand("hilbert-basis", "Hilbert basis of a pointed cone");
  hb_cmd->add_option("file", file, "cone JSON")->required();

  auto* lp_cmd = app.add_subcommand("equality-lp", "max sum x subject to sum x_i g_i = target, x >= 0");
  lp_cmd->add_option("file", file, "program JSON")->required();

  auto* corpus_cmd = app.add_subcommand("corpus", "Bundled examples");
  corpus_cmd->require_subcommand(1);
  auto* list_cmd = corpus_cmd->add_subcommand("list", "List entries");
  auto* show_cmd = corpus_cmd->add_subcommand("show", "Print an entry as JSON");
  show_cmd->add_option("name", corpus_name, "entry name")->required();
  auto* report_cmd = corpus_cmd->add_subcommand("report", "Reports for every fan and record entry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (fan_cmd->parsed()) {
      const Fan f = fan_from_json(read_json_file(file)).realize();
      emit(render(report_fan(f), format), file, format == "text" ? ".report.txt" : ".report.json");
    } else if (sph_cmd->parsed()) {
      const SphericalRecord rec = spherical_from_json(read_json_file(file));
      const MukaiReport r = report_spherical(rec, picard, parse_pseudo_index(pseudo_index_text));
      emit(render(r, format), file, format == "text" ? ".report.txt" : ".report.json");
    } else if (tau_cmd->parsed()) {
      const Fan f = fan_from_json(read_json_file(file)).realize();
      const ClassPolytopeData data = class_polytope(f);
      const IntegerTotalIndex tz = tau_z(data);
      const RationalTotalIndex tq = tau_q(data);
      std::string out = "tau_Z = " + to_string(tz.value) + ", tau_Q = " + to_string(tq.value) + "\n";
      out += "picard_basis: " + data.picard_basis + "\n";
      out += "p_x_size: " + std::to_string(data.p_x.size()) + "\n";
      out += "anticanonical_class: " + to_json(data.anticanonical_class).dump() + "\n";
      for (std::size_t i = 0; i < tq.witness.classes.size(); ++i)
        out += "tau_Q part: " + to_string(tq.witness.coefficients[i]) + " * " + to_json(tq.witness.classes[i]).dump() + "\n";
      if (partitions) {
        std::map<std::size_t, std::size_t> by_parts;
        for (const auto& p : integer_nef_partitions(data)) ++by_parts[p.size()];
        for (const auto& [k, n] : by_parts) out += "integral partitions with " + std::to_string(k) + " parts: " + std::to_string(n) + "\n";
      }
      emit(out, file, ".total_index.txt");
    } else if (hb_cmd->parsed()) {
      const Cone c = cone_from_json(read_json_file(file)).realize();
      Json j;
      j["ambient_dim"] = c.ambient_dim();
      Json hb = Json::array();
      for (const auto& v : hilbert_basis(c)) hb.push_back(to_json(v));
      j["hilbert_basis"] = std::move(hb);
      emit(dump(j), file, ".hilbert_basis.json");
    } else if (lp_cmd->parsed()) {
      const EqualityProgram p = equality_program_from_json(read_json_file(file));
      const LpSolution sol = solve_equality_form(p.generators, p.target);
      Json j;
      j["value"] = rational_to_json(sol.value);
      j["argmax"] = to_json(sol.argmax);
      emit(dump(j), file, ".lp.json");
    } else if (list_cmd->parsed()) {
      for (const auto& e : corpus()) std::cout << e.name << "\t" << e.kind << "\t" << e.description << "\n";
    } else if (show_cmd->parsed()) {
      const CorpusEntry* e = find_corpus_entry(corpus_name);
      if (!e) throw Error(ErrorKind::Validation, "no corpus entry named '" + corpus_name + "'");
      std::cout << dump(e->document);
    } else if (report_cmd->parsed()) {
      // Analyses run concurrently; output follows corpus order.
      std::vector<std::future<std::string>> jobs;
      for (const auto& e : corpus()) jobs.push_back(std::async(std::launch::async, corpus_report, std::cref(e)));
      for (std::size_t i = 0; i < jobs.size(); ++i) {
        std::string text = jobs[i].get();
        if (!text.empty()) std::cout << "== " << corpus()[i].name << "\n" << text;
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
