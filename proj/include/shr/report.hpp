#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"

#include "shr/classify.hpp"
#include "shr/conformance.hpp"
#include "shr/spectrum.hpp"
#include "shr/textio.hpp"

namespace shr {

using Json = nlohmann::json;

namespace detail {

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

inline std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

inline std::string point_set(const Semihyperring& s,
                             const std::vector<Subset>& points, const PointSet& p) {
  std::string out = "{";
  bool first = true;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (!p.test(k)) continue;
    if (!first) out += ", ";
    out += format_subset(s, points[k]);
    first = false;
  }
  return out + "}";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Axioms

inline std::string render_axioms(const Semihyperring& s, const AxiomReport& r) {
  std::string out = "structure " + s.name() + " (order " +
                    std::to_string(s.order()) + ")\n";
  for (const auto& v : r.verdicts) {
    out += detail::pad(std::string(axiom_name(v.axiom)), 22);
    if (!v.applicable) {
      out += "n/a\n";
      continue;
    }
    out += v.pass ? "PASS" : "FAIL";
    if (!v.pass) {
      out += " at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i)
        out += (i ? ", " : "") + s.label(v.witness[i]);
      out += ")";
    }
    out += "\n";
  }
  out += r.valid() ? "valid\n" : "invalid\n";
  return out;
}

// ---------------------------------------------------------------------------
// Ideals

inline std::string render_flags(const IdealClassification& c) {
  std::string out;
  auto flag = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += " ";
    out += name;
  };
  flag(c.prime, "prime");
  flag(c.semiprime, "semiprime");
  flag(c.irreducible, "irreducible");
  flag(c.strongly_irreducible, "strongly-irreducible");
  flag(c.maximal, "maximal");
  flag(c.idempotent, "idempotent");
  if (!c.proper) out = out.empty() ? "whole" : "whole " + out;
  return out;
}

inline std::string render_ideals(const Semihyperring& s, const IdealLattice& l,
                                 bool classify) {
  std::string out = std::to_string(l.size()) + " hyperideals of " + s.name() + "\n";
  for (Subset i : l) {
    out += "  " + format_subset(s, i);
    if (classify) {
      const std::string flags = render_flags(classify_ideal(s, l, i));
      if (!flags.empty()) out += "  " + flags;
    }
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spectrum

inline std::string render_spectrum(const Semihyperring& s, const IdealLattice& l,
                                   const SpectrumTopology& t,
                                   const TopologyReport& topo,
                                   const LatticeMapReport& map) {
  std::string out = "spectrum of " + s.name() + ": " +
                    std::to_string(t.points.size()) + " points\n";
  for (Subset p : t.points) out += "  " + format_subset(s, p) + "\n";
  out += std::to_string(t.opens.size()) + " open sets\n";
  for (const auto& o : t.opens)
    out += "  Θ" + format_subset(s, o.generator) + " = " +
           detail::point_set(s, t.points, o.points) + "\n";
  out += std::string("topology: ") + (topo.pass() ? "PASS" : "FAIL");
  if (topo.intersection_identity_fails)
    out += " (intersection at " + format_subset(s, topo.intersection_identity_fails->first) +
           ", " + format_subset(s, topo.intersection_identity_fails->second) + ")";
  if (topo.intersection_not_open)
    out += " (Θ" + format_subset(s, t.opens[topo.intersection_not_open->first].generator) +
           " ∩ Θ" + format_subset(s, t.opens[topo.intersection_not_open->second].generator) +
           " is not open)";
  if (topo.union_identity_fails) {
    out += " (union over";
    for (Subset i : *topo.union_identity_fails) out += " " + format_subset(s, i);
    out += ")";
  }
  out += "\n";
  out += std::string("lattice map: ") + (map.pass() ? "PASS" : "FAIL");
  if (map.witness)
    out += " (at " + format_subset(s, map.witness->first) + ", " +
           format_subset(s, map.witness->second) + ")";
  out += "\n";
  (void)l;
  return out;
}

inline Json spectrum_json(const Semihyperring& s, const SpectrumTopology& t) {
  Json points = Json::array();
  for (Subset p : t.points) points.push_back(format_subset(s, p));
  Json opens = Json::array();
  for (const auto& o : t.opens) {
    Json members = Json::array();
    for (std::size_t k = 0; k < t.points.size(); ++k)
      if (o.points.test(k)) members.push_back(format_subset(s, t.points[k]));
    opens.push_back({{"generator", format_subset(s, o.generator)}, {"points", members}});
  }
  return {{"points", points}, {"opens", opens}};
}

// ---------------------------------------------------------------------------
// Conformance

inline std::string render_conformance(const ConformanceReport& r, bool timing = false) {
  std::string out = "conformance " + r.structure + "\n";
  std::size_t pass = 0, fail = 0, skip = 0;
  for (const auto& c : r.checks) {
    out += "  " + detail::pad(c.id, 7) + detail::pad(std::string(verdict_name(c.verdict)), 6);
    if (timing) out += detail::pad(detail::seconds(c.seconds), 10);
    if (c.sampled) out += "SAMPLED ";
    out += c.detail;
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += "\n";
    (c.verdict == Verdict::pass ? pass : c.verdict == Verdict::fail ? fail : skip)++;
  }
  out += std::to_string(pass) + " pass, " + std::to_string(fail) + " fail, " +
         std::to_string(skip) + " skip\n";
  return out;
}

inline Json conformance_json(const ConformanceReport& r, bool timing = false) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"id", c.id}, {"verdict", std::string(verdict_name(c.verdict))}};
    if (c.verdict == Verdict::fail) j["witness"] = c.detail;
    if (c.verdict == Verdict::skip) j["reason"] = c.detail;
    if (c.sampled) j["sampled"] = true;
    if (timing) j["seconds"] = c.seconds;
    checks.push_back(std::move(j));
  }
  return {{"structure", r.structure}, {"checks", checks}};
}

inline std::string render_corpus(const CorpusReport& r, bool timing = false) {
  std::string out;
  for (const auto& rep : r.reports) {
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto& c : rep.checks)
      (c.verdict == Verdict::pass ? pass : c.verdict == Verdict::fail ? fail : skip)++;
    out += detail::pad(rep.structure, 19) + " " + std::to_string(pass) + " pass, " +
           std::to_string(fail) + " fail, " + std::to_string(skip) + " skip\n";
    for (const auto& c : rep.checks) {
      if (c.verdict != Verdict::fail) continue;
      out += "  " + c.id + " FAIL " + c.detail;
      if (timing) out += " (" + detail::seconds(c.seconds) + ")";
      out += "\n";
    }
  }
  for (const auto& [name, why] : r.refused) out += name + ": refused: " + why + "\n";
  out += "summary over " + std::to_string(r.reports.size()) + " structures\n";
  for (const Check& check : check_registry()) {
    const std::string id(check.id);
    const VerdictCounts& n = r.summary.at(id);
    out += "  " + detail::pad(id, 7) + "pass " + detail::pad(std::to_string(n.pass), 6) +
           "fail " + detail::pad(std::to_string(n.fail), 6) + "skip " +
           std::to_string(n.skip) + "\n";
  }
  return out;
}

inline Json corpus_json(const CorpusReport& r, bool timing = false) {
  Json reports = Json::array();
  for (const auto& rep : r.reports) reports.push_back(conformance_json(rep, timing));
  Json summary = Json::object();
  for (const auto& [id, n] : r.summary)
    summary[id] = {{"pass", n.pass}, {"fail", n.fail}, {"skip", n.skip}};
  Json refused = Json::array();
  for (const auto& [name, why] : r.refused)
    refused.push_back({{"structure", name}, {"reason", why}});
  return {{"reports", reports}, {"summary", summary}, {"refused", refused}};
}

}  // namespace shr
