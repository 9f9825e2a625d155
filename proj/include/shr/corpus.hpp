#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "shr/catalog.hpp"
#include "shr/constructors.hpp"
#include "shr/textio.hpp"

namespace shr {

/// Every topology structure on 1 to `max_points` points, named T<points>_<k>.
inline std::vector<Semihyperring> topology_corpus(std::size_t max_points = 3) {
  std::vector<Semihyperring> out;
  for (std::size_t p = 1; p <= max_points; ++p) {
    std::size_t k = 0;
    for (const auto& t : all_topologies(p))
      out.push_back(from_topology(t, "T" + std::to_string(p) + "_" + std::to_string(++k)));
  }
  return out;
}

/// Z_n / N for every modulus in [2, max_modulus] and every unit subgroup N.
inline std::vector<Semihyperring> quotient_corpus(unsigned max_modulus = 12) {
  std::vector<Semihyperring> out;
  for (unsigned n = 2; n <= max_modulus; ++n)
    for (const auto& sub : unit_subgroups(n)) out.push_back(quotient_hyperring({n, sub}));
  return out;
}

/// The constructor outputs every acceptance sweep starts from: topologies on
/// at most three points, the quotients Z_n / N for n ≤ 12, and ZERO1.
inline std::vector<Semihyperring> constructor_corpus() {
  auto out = topology_corpus(3);
  auto quotients = quotient_corpus(12);
  out.insert(out.end(), quotients.begin(), quotients.end());
  out.push_back(fixtures::zero1());
  return out;
}

/// The constructor corpus followed by the full catalog of orders 1 to 3.
inline std::vector<Semihyperring> builtin_corpus() {
  auto out = constructor_corpus();
  for (std::size_t k = 1; k <= 3; ++k) {
    auto more = catalog(k);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Parses every `.shr` file in `dir`, in file-name order.
inline std::vector<Semihyperring> load_corpus_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw error("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".shr")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<Semihyperring> out;
  for (const auto& f : files) out.push_back(parse_structure(read_file(f)));
  return out;
}

}  // namespace shr
