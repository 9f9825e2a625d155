#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "shr/semihyperring.hpp"

namespace shr {

// The .shr format, one directive per line:
//
//   semihyperring NAME
//   elements: l0 l1 ... lk
//   zero: l0
//   unity: lj                    (optional)
//   add: (a,b) = {x,y,...}       mirror (b,a) and zero-row cells default
//   mul: (a,b) = c               zero row and column default to zero
//
// Blank lines and lines starting with '#' are ignored. Labels consist of
// letters, digits and underscores.

enum class ParseErrorKind {
  syntax,
  missing_header,
  duplicate_label,
  undeclared_label,
  bad_zero,
  bad_unity,
  empty_set,
  conflicting_cell,
  missing_cell,
};

constexpr std::string_view parse_error_kind_name(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::syntax: return "syntax";
    case ParseErrorKind::missing_header: return "missing-header";
    case ParseErrorKind::duplicate_label: return "duplicate-label";
    case ParseErrorKind::undeclared_label: return "undeclared-label";
    case ParseErrorKind::bad_zero: return "bad-zero";
    case ParseErrorKind::bad_unity: return "bad-unity";
    case ParseErrorKind::empty_set: return "empty-set";
    case ParseErrorKind::conflicting_cell: return "conflicting-cell";
    case ParseErrorKind::missing_cell: return "missing-cell";
  }
  return "?";
}

class parse_error : public error {
 public:
  parse_error(ParseErrorKind kind, std::size_t line, std::size_t column,
              const std::string& message)
      : error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              std::string(parse_error_kind_name(kind)) + ": " + message),
        kind_(kind),
        line_(line),
        column_(column) {}

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

/// A structure file as written, before defaults are applied.
struct StructureDocument {
  struct Position {
    std::size_t line = 0;
    std::size_t column = 0;
  };
  std::string name;
  std::vector<std::string> labels;
  Position elements_at;
  std::optional<Element> zero;
  std::optional<Element> unity;
  std::map<std::pair<Element, Element>, Subset> add;
  std::map<std::pair<Element, Element>, Element> mul;
};

namespace detail {

inline bool label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line)
      : text_(text), line_(line) {}

  std::size_t column() const { return pos_ + 1; }
  std::size_t line() const { return line_; }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])) != 0)
      ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(ParseErrorKind::syntax, std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && label_char(text_[pos_])) ++pos_;
    if (start == pos_) fail(ParseErrorKind::syntax, "expected a label");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::string rest() {
    skip_space();
    std::string r(text_.substr(pos_));
    pos_ = text_.size();
    while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back())) != 0)
      r.pop_back();
    return r;
  }
  void expect_end() {
    if (!at_end()) fail(ParseErrorKind::syntax, "unexpected trailing text");
  }
  [[noreturn]] void fail(ParseErrorKind kind, const std::string& msg) const {
    throw parse_error(kind, line_, pos_ + 1, msg);
  }
  [[noreturn]] void fail_at(std::size_t column, ParseErrorKind kind,
                            const std::string& msg) const {
    throw parse_error(kind, line_, column, msg);
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the text of a structure file without applying defaults.
inline StructureDocument parse_document(std::string_view text) {
  StructureDocument doc;
  std::unordered_map<std::string, Element> index;
  bool header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;

  auto resolve = [&](detail::LineCursor& cur) -> Element {
    cur.skip_space();
    const std::size_t column = cur.column();
    const std::string label = cur.word();
    auto it = index.find(label);
    if (it == index.end())
      cur.fail_at(column, ParseErrorKind::undeclared_label,
                  "label '" + label + "' is not declared");
    return it->second;
  };

  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    start = end + 1;

    detail::LineCursor cur(line, line_no);
    if (cur.at_end() || cur.peek('#')) {
      if (end == text.size()) break;
      continue;
    }
    const std::string keyword = cur.word();
    if (!header) {
      if (keyword != "semihyperring")
        cur.fail_at(1, ParseErrorKind::missing_header,
                    "file must start with 'semihyperring NAME'");
      doc.name = cur.rest();
      if (doc.name.empty() || doc.name.find_first_of(" \t") != std::string::npos)
        cur.fail(ParseErrorKind::syntax, "structure name must be one word");
      header = true;
    } else if (keyword == "semihyperring") {
      cur.fail_at(1, ParseErrorKind::syntax, "repeated header");
    } else if (keyword == "elements") {
      cur.expect(':');
      if (!doc.labels.empty())
        cur.fail_at(1, ParseErrorKind::syntax, "repeated elements line");
      doc.elements_at = {line_no, 1};
      while (!cur.at_end()) {
        const std::size_t column = cur.column();
        std::string label = cur.word();
        if (index.count(label) != 0)
          cur.fail_at(column, ParseErrorKind::duplicate_label,
                      "label '" + label + "' declared twice");
        if (doc.labels.size() == max_order)
          cur.fail_at(column, ParseErrorKind::syntax, "more than 64 elements");
        index.emplace(label, static_cast<Element>(doc.labels.size()));
        doc.labels.push_back(std::move(label));
      }
      if (doc.labels.empty())
        cur.fail(ParseErrorKind::syntax, "elements line declares nothing");
    } else if (keyword == "zero" || keyword == "unity") {
      cur.expect(':');
      const bool is_zero = keyword == "zero";
      const auto kind = is_zero ? ParseErrorKind::bad_zero : ParseErrorKind::bad_unity;
      cur.skip_space();
      const std::size_t column = cur.column();
      const std::string label = cur.word();
      cur.expect_end();
      auto it = index.find(label);
      if (it == index.end())
        cur.fail_at(column, kind, "'" + label + "' is not a declared element");
      auto& slot = is_zero ? doc.zero : doc.unity;
      if (slot) cur.fail_at(1, kind, keyword + " declared twice");
      slot = it->second;
    } else if (keyword == "add" || keyword == "mul") {
      cur.expect(':');
      const std::size_t cell_column = cur.column();
      cur.expect('(');
      const Element a = resolve(cur);
      cur.expect(',');
      const Element b = resolve(cur);
      cur.expect(')');
      cur.expect('=');
      if (keyword == "add") {
        cur.expect('{');
        Subset value;
        if (cur.peek('}')) cur.fail(ParseErrorKind::empty_set, "hyperaddition cell is empty");
        while (true) {
          value.insert(resolve(cur));
          if (cur.peek('}')) break;
          cur.expect(',');
        }
        cur.expect('}');
        cur.expect_end();
        for (auto cell : {std::pair{a, b}, std::pair{b, a}}) {
          auto [it, fresh] = doc.add.emplace(cell, value);
          if (!fresh && it->second != value)
            cur.fail_at(cell_column, ParseErrorKind::conflicting_cell,
                        "(" + doc.labels[a] + "," + doc.labels[b] +
                            ") conflicts with an earlier or mirrored entry");
        }
      } else {
        const Element c = resolve(cur);
        cur.expect_end();
        auto [it, fresh] = doc.mul.emplace(std::pair{a, b}, c);
        if (!fresh && it->second != c)
          cur.fail_at(cell_column, ParseErrorKind::conflicting_cell,
                      "(" + doc.labels[a] + "," + doc.labels[b] +
                          ") given two different products");
      }
    } else {
      cur.fail_at(1, ParseErrorKind::syntax, "unknown directive '" + keyword + "'");
    }
    if (end == text.size()) break;
  }
  if (!header)
    throw parse_error(ParseErrorKind::missing_header, 1, 1,
                      "file must start with 'semihyperring NAME'");
  if (doc.labels.empty())
    throw parse_error(ParseErrorKind::syntax, line_no, 1, "no elements line");
  if (!doc.zero)
    throw parse_error(ParseErrorKind::bad_zero, line_no, 1, "no zero declared");
  return doc;
}

/// Applies the defaulting rules and builds the tables. Axioms are evaluated
/// but not enforced.
inline Semihyperring build_structure(const StructureDocument& doc) {
  const std::size_t n = doc.labels.size();
  const Element zero = *doc.zero;
  std::vector<Subset> add(n * n);
  std::vector<Element> mul(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      auto ai = doc.add.find({a, b});
      if (ai != doc.add.end()) {
        add[a * n + b] = ai->second;
      } else if (a == zero || b == zero) {
        add[a * n + b] = Subset::singleton(a == zero ? b : a);
      } else {
        throw parse_error(ParseErrorKind::missing_cell, doc.elements_at.line,
                          doc.elements_at.column,
                          "no add entry for (" + doc.labels[a] + "," +
                              doc.labels[b] + ")");
      }
      auto mi = doc.mul.find({a, b});
      if (mi != doc.mul.end()) {
        mul[a * n + b] = mi->second;
      } else if (a == zero || b == zero) {
        mul[a * n + b] = zero;
      } else {
        throw parse_error(ParseErrorKind::missing_cell, doc.elements_at.line,
                          doc.elements_at.column,
                          "no mul entry for (" + doc.labels[a] + "," +
                              doc.labels[b] + ")");
      }
    }
  return {n, std::move(add), std::move(mul), zero, doc.unity, doc.name, doc.labels};
}

/// Parses and validates a structure; axiom failures raise `axiom_error`.
inline Semihyperring parse_structure(std::string_view text) {
  Semihyperring s = build_structure(parse_document(text));
  require_valid(s);
  return s;
}

/// Renders a subset as {l1,l2,...} with labels in index order.
inline std::string format_subset(const Semihyperring& s, Subset set) {
  std::string out = "{";
  bool first = true;
  for (Element e : set) {
    if (!first) out += ",";
    out += s.label(e);
    first = false;
  }
  return out + "}";
}

/// Canonical text: elements in index order, upper-triangle add entries,
/// defaulted cells omitted.
inline std::string serialize_structure(const Semihyperring& s) {
  std::ostringstream out;
  std::string name = s.name().empty() ? "unnamed" : s.name();
  for (char& c : name)
    if (std::isspace(static_cast<unsigned char>(c)) != 0) c = '_';
  out << "semihyperring " << name << "\n";
  out << "elements:";
  for (const auto& l : s.labels()) out << " " << l;
  out << "\n";
  out << "zero: " << s.label(s.zero()) << "\n";
  if (s.unity()) out << "unity: " << s.label(*s.unity()) << "\n";
  const auto n = static_cast<Element>(s.order());
  const Element z = s.zero();
  for (Element a = 0; a < n; ++a)
    for (Element b = a; b < n; ++b) {
      if ((a == z || b == z) &&
          s.add(a, b) == Subset::singleton(a == z ? b : a))
        continue;
      out << "add: (" << s.label(a) << "," << s.label(b)
          << ") = " << format_subset(s, s.add(a, b)) << "\n";
    }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if ((a == z || b == z) && s.mul(a, b) == z) continue;
      out << "mul: (" << s.label(a) << "," << s.label(b)
          << ") = " << s.label(s.mul(a, b)) << "\n";
    }
  return out.str();
}

}  // namespace shr
