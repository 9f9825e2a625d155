#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "shr/catalog.hpp"
#include "shr/classify.hpp"
#include "shr/conformance.hpp"
#include "shr/constructors.hpp"
#include "shr/corpus.hpp"
#include "shr/ideals.hpp"
#include "shr/report.hpp"
#include "shr/spectrum.hpp"
#include "shr/textio.hpp"

namespace shr {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;  // a check failed or the input is invalid
inline constexpr int usage = 2;    // bad arguments or malformed input text
}  // namespace exit_code

/// Bad command-line argument values that CLI11 itself cannot detect.
class usage_error : public error {
 public:
  using error::error;
};

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return read_file(path);
}

inline void write_output(const std::string& path, const std::string& text,
                         std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw error("cannot write " + path);
  f << text;
}

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

/// "{a,b}" -> the subset of those labels.
inline Subset parse_label_set(const Semihyperring& s, std::string_view text) {
  const std::string t = trim(text);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw usage_error("expected a set such as {a,b}, got '" + t + "'");
  Subset out;
  std::stringstream items(t.substr(1, t.size() - 2));
  std::string item;
  while (std::getline(items, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    bool found = false;
    for (Element e = 0; e < s.order() && !found; ++e)
      if (s.label(e) == item) {
        out.insert(e);
        found = true;
      }
    if (!found) throw usage_error("unknown element '" + item + "'");
  }
  return out;
}

/// "{},{1},{1,2}" -> open sets over 1-based points.
inline std::vector<Subset> parse_open_sets(std::string_view text, std::size_t points) {
  std::vector<Subset> out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  while (true) {
    skip_space();
    if (i >= text.size() || text[i] != '{')
      throw usage_error("open sets must look like {},{1},{1,2}");
    ++i;
    Subset set;
    while (true) {
      skip_space();
      if (i < text.size() && text[i] == '}') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw usage_error("expected a point number in open sets");
      const unsigned long p = std::stoul(std::string(text.substr(i, j - i)));
      if (p < 1 || p > points)
        throw usage_error("point " + std::to_string(p) + " outside 1.." +
                          std::to_string(points));
      set.insert(static_cast<Element>(p - 1));
      i = j;
      skip_space();
      if (i < text.size() && text[i] == ',') ++i;
    }
    out.push_back(set);
    skip_space();
    if (i >= text.size()) break;
    if (text[i] != ',') throw usage_error("open sets must be separated by commas");
    ++i;
  }
  return out;
}

}  // namespace detail

/// Runs the `shr` command line. Streams are parameters so the CLI can be
/// exercised in-process.
inline int cli_main(int argc, const char* const* argv, std::ostream& out,
                    std::ostream& err, std::istream& in) {
  CLI::App app{"Finite semihyperrings: axioms, hyperideals, spectra, conformance."};
  app.name("shr");
  app.require_subcommand(1);

  std::string file, file2, output;
  bool classify_flag = false, json = false, timing = false, builtin = false;
  bool commutative = false, with_unity = false;
  std::size_t cap = default_ideal_cap;
  std::string ideal_text, corpus_dir, opens_text, name;
  std::size_t points = 0, order = 0;
  unsigned modulus = 0;
  std::vector<unsigned> subgroup;
  ConformanceOptions options;

  auto* verify = app.add_subcommand("verify", "Check the semihyperring axioms");
  verify->add_option("file", file, "structure file, - for stdin")->required();

  auto* ideals = app.add_subcommand("ideals", "List the hyperideals");
  ideals->add_option("file", file, "structure file, - for stdin")->required();
  ideals->add_flag("--classify", classify_flag, "show prime/irreducible/... flags");
  ideals->add_option("--cap", cap, "largest order to enumerate")->capture_default_str();

  auto* classify = app.add_subcommand("classify", "Classify one hyperideal");
  classify->add_option("file", file, "structure file, - for stdin")->required();
  classify->add_option("--ideal", ideal_text, "the ideal, e.g. {O,V}")->required();
  classify->add_option("--cap", cap, "largest order to enumerate")->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "Irreducible spectrum and its topology");
  spectrum->add_option("file", file, "structure file, - for stdin")->required();
  spectrum->add_flag("--json", json, "JSON output");
  spectrum->add_option("--cap", cap, "largest order to enumerate")->capture_default_str();

  auto* conformance = app.add_subcommand("conformance", "Run every theorem check");
  auto* conf_file = conformance->add_option("file", file, "structure file, - for stdin");
  auto* conf_dir = conformance->add_option("--corpus", corpus_dir, "directory of .shr files");
  auto* conf_builtin = conformance->add_flag("--builtin", builtin, "the built-in corpus");
  conf_file->excludes(conf_dir)->excludes(conf_builtin);
  conf_dir->excludes(conf_builtin);
  conformance->add_flag("--json", json, "JSON output");
  conformance->add_flag("--timing", timing, "per-check timings");
  conformance->add_option("--cap", options.ideal_cap, "largest order to enumerate")
      ->capture_default_str();
  conformance->add_option("--subset-cap", options.subset_cap,
                          "largest order for exhaustive subset checks")
      ->capture_default_str();
  conformance->add_option("--samples", options.samples, "subsets sampled above the cap")
      ->capture_default_str();
  conformance->add_option("--seed", options.seed, "sampling seed")->capture_default_str();

  auto* gen = app.add_subcommand("gen", "Construct a structure");
  gen->require_subcommand(1);
  auto* gen_topology = gen->add_subcommand("topology", "Open sets of a finite topology");
  gen_topology->add_option("--points", points, "number of points")->required();
  gen_topology->add_option("--opens", opens_text, "e.g. {},{1},{1,2}")->required();
  gen_topology->add_option("--name", name, "structure name");
  gen_topology->add_option("-o,--output", output, "output file");
  auto* gen_quotient = gen->add_subcommand("quotient", "Z_n modulo a unit subgroup");
  gen_quotient->add_option("--mod", modulus, "modulus n")->required();
  gen_quotient->add_option("--subgroup", subgroup, "residues, e.g. 1,4")
      ->required()
      ->delimiter(',');
  gen_quotient->add_option("--name", name, "structure name");
  gen_quotient->add_option("-o,--output", output, "output file");
  auto* gen_product = gen->add_subcommand("product", "Direct product of two structures");
  gen_product->add_option("first", file, "first factor")->required();
  gen_product->add_option("second", file2, "second factor")->required();
  gen_product->add_option("--name", name, "structure name");
  gen_product->add_option("-o,--output", output, "output file");

  auto* cat = app.add_subcommand("catalog", "All structures of a small order");
  cat->add_option("--order", order, "order, 1 to 4")->required();
  cat->add_flag("--commutative", commutative, "commutative multiplication only");
  cat->add_flag("--with-unity", with_unity, "structures with a unity only");
  cat->add_option("-o,--output", output, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  try {
    if (verify->parsed()) {
      const Semihyperring s = build_structure(parse_document(detail::read_input(file, in)));
      out << render_axioms(s, verify_axioms(s));
      return s.valid() ? exit_code::ok : exit_code::failure;
    }
    if (ideals->parsed()) {
      const Semihyperring s = parse_structure(detail::read_input(file, in));
      out << render_ideals(s, enumerate_hyperideals(s, cap), classify_flag);
      return exit_code::ok;
    }
    if (classify->parsed()) {
      const Semihyperring s = parse_structure(detail::read_input(file, in));
      const Subset i = detail::parse_label_set(s, ideal_text);
      const IdealLattice l = enumerate_hyperideals(s, cap);
      if (i.empty() || !l.contains(i))
        throw precondition_error(format_subset(s, i) + " is not a hyperideal of " + s.name());
      const std::string flags = render_flags(classify_ideal(s, l, i));
      out << format_subset(s, i) << ": " << (flags.empty() ? "none" : flags) << "\n";
      return exit_code::ok;
    }
    if (spectrum->parsed()) {
      const Semihyperring s = parse_structure(detail::read_input(file, in));
      const IdealLattice l = enumerate_hyperideals(s, cap);
      const SpectrumTopology t = spectrum_topology(s, l);
      const TopologyReport topo = verify_topology(s, l, t);
      const LatticeMapReport map = lattice_map_check(l, t);
      if (json) {
        Json j = spectrum_json(s, t);
        j["structure"] = s.name();
        j["topology"] = topo.pass() ? "PASS" : "FAIL";
        j["lattice_map"] = map.pass() ? "PASS" : "FAIL";
        out << j.dump(2) << "\n";
      } else {
        out << render_spectrum(s, l, t, topo, map);
      }
      return topo.pass() && map.pass() ? exit_code::ok : exit_code::failure;
    }
    if (conformance->parsed()) {
      if (!file.empty()) {
        const Semihyperring s = parse_structure(detail::read_input(file, in));
        const ConformanceReport r = run_suite(s, options);
        if (json) {
          Json j = conformance_json(r, timing);
          const IdealLattice l = enumerate_hyperideals(s, options.ideal_cap);
          j["spectrum"] = spectrum_json(s, spectrum_topology(s, l));
          out << j.dump(2) << "\n";
        } else {
          out << render_conformance(r, timing);
        }
        return r.any_fail() ? exit_code::failure : exit_code::ok;
      }
      if (corpus_dir.empty() && !builtin)
        throw usage_error("conformance needs FILE, --corpus DIR or --builtin");
      const auto corpus = builtin ? builtin_corpus() : load_corpus_dir(corpus_dir);
      const CorpusReport r = run_corpus(corpus, options);
      if (json)
        out << corpus_json(r, timing).dump(2) << "\n";
      else
        out << render_corpus(r, timing);
      return r.any_fail() ? exit_code::failure : exit_code::ok;
    }
    if (gen_topology->parsed()) {
      const FiniteTopology t{points, detail::parse_open_sets(opens_text, points)};
      const Semihyperring s = from_topology(t, name.empty() ? "topology" : name);
      detail::write_output(output, serialize_structure(s), out);
      return exit_code::ok;
    }
    if (gen_quotient->parsed()) {
      Semihyperring s = quotient_hyperring({modulus, subgroup}, name);
      detail::write_output(output, serialize_structure(s), out);
      return exit_code::ok;
    }
    if (gen_product->parsed()) {
      const Semihyperring a = parse_structure(detail::read_input(file, in));
      const Semihyperring b = parse_structure(detail::read_input(file2, in));
      Semihyperring s = direct_product(a, b);
      if (!name.empty()) s = s.with_name(name);
      detail::write_output(output, serialize_structure(s), out);
      return exit_code::ok;
    }
    if (cat->parsed()) {
      std::string text;
      for (const auto& s : catalog(order, {commutative, with_unity})) {
        if (!text.empty()) text += "\n";
        text += serialize_structure(s);
      }
      detail::write_output(output, text, out);
      return exit_code::ok;
    }
  } catch (const parse_error& e) {
    err << "shr: " << (file.empty() ? "" : file + ":") << e.what() << "\n";
    return exit_code::usage;
  } catch (const usage_error& e) {
    err << "shr: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const error& e) {
    err << "shr: " << e.what() << "\n";
    return exit_code::failure;
  }
  return exit_code::usage;
}

}  // namespace shr
