#pragma once

#include <initializer_list>
#include <random>
#include <vector>
#include <string>

#include "shr/corpus.hpp"
#include "shr/report.hpp"
#include "shr/shr.hpp"

#include "oracle.hpp"

namespace testing_support {

inline std::string fixture_path(const std::string& name) {
  return std::string(SHR_FIXTURES) + "/" + name;
}

inline shr::Semihyperring load(const std::string& name) {
  return shr::parse_structure(shr::read_file(fixture_path(name)));
}

/// The subset with the given labels.
inline shr::Subset sub(const shr::Semihyperring& s,
                       std::initializer_list<const char*> labels) {
  shr::Subset out;
  for (const char* l : labels)
    for (shr::Element e = 0; e < s.order(); ++e)
      if (s.label(e) == l) out.insert(e);
  return out;
}

inline shr::Element el(const shr::Semihyperring& s, const char* label) {
  for (shr::Element e = 0; e < s.order(); ++e)
    if (s.label(e) == label) return e;
  throw shr::error(std::string("no element ") + label);
}

/// `count` single-cell mutations of `base` that the oracle rejects. A
/// mutation may land on another valid table; those are drawn again.
inline std::vector<shr::Semihyperring> invalid_mutations(const shr::Semihyperring& base,
                                                         std::size_t count,
                                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto n = base.order();
  std::uniform_int_distribution<shr::Element> element(0, static_cast<shr::Element>(n - 1));
  std::uniform_int_distribution<std::uint64_t> cell(1, (std::uint64_t{1} << n) - 1);
  std::vector<shr::Semihyperring> out;
  while (out.size() < count) {
    const shr::Element x = element(rng), y = element(rng);
    shr::Semihyperring m = base;
    if (rng() & 1) {
      const auto c = shr::Subset::from_mask(cell(rng));
      if (c == base.add(x, y)) continue;
      m = base.with_add_cell(x, y, c);
    } else {
      const shr::Element v = element(rng);
      if (v == base.mul(x, y)) continue;
      m = base.with_mul_cell(x, y, v);
    }
    if (oracle::axioms_hold(oracle::table_of(m))) continue;
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace testing_support
