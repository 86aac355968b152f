#include "fusionring/io.hpp"

#include "fusionring/errors.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace fusionring {

namespace {

class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'" + found());
    }
    ++pos_;
  }

  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_' || text_[pos_] == '-' ||
                                   text_[pos_] == '.' || text_[pos_] == '+')) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected a name" + found());
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t number() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (pos_ - start >= 9) {
        fail_at(start, "number too large");
      }
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (start == pos_) {
      fail("expected a nonnegative integer" + found());
    }
    return value;
  }

  void expect_end() {
    if (!at_end()) {
      fail("unexpected trailing input" + found());
    }
  }

  // 1-based column of the next token
  std::size_t column() {
    skip_ws();
    return pos_ + 1;
  }
  std::size_t line() const { return line_; }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(line_, pos + 1, message);
  }

 private:
  std::string found() const {
    if (pos_ >= text_.size()) {
      return ", found end of line";
    }
    return std::string(", found '") + text_[pos_] + "'";
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

FusionRing parse_ring_unvalidated(std::string_view text) {
  std::optional<std::size_t> rank;
  std::optional<std::vector<Index>> dual;
  std::string name;
  bool seen_name = false;
  bool seen_format = false;
  bool seen_unit = false;
  bool seen_declaration = false;
  std::map<std::pair<Index, Index>, std::map<Index, Coeff>> products;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    LineCursor cur(line, line_no);
    if (cur.at_end()) {
      if (end == text.size()) {
        break;
      }
      continue;
    }

    if (cur.peek('N')) {
      cur.expect('N');
      if (!rank) {
        cur.fail("N entries require a preceding 'rank' declaration");
      }
      cur.expect('[');
      const std::size_t icol = cur.column();
      const Index i = cur.number();
      cur.expect(',');
      const std::size_t jcol = cur.column();
      const Index j = cur.number();
      cur.expect(']');
      if (i >= *rank) {
        cur.fail_at(icol - 1, "index " + std::to_string(i) + " out of range for rank " +
                                  std::to_string(*rank));
      }
      if (j >= *rank) {
        cur.fail_at(jcol - 1, "index " + std::to_string(j) + " out of range for rank " +
                                  std::to_string(*rank));
      }
      if (products.count({i, j})) {
        cur.fail("duplicate entry N[" + std::to_string(i) + "," + std::to_string(j) + "]");
      }
      cur.expect('=');
      cur.expect('{');
      std::map<Index, Coeff> terms;
      if (!cur.peek('}')) {
        while (true) {
          const std::size_t mcol = cur.column();
          const Index m = cur.number();
          if (m >= *rank) {
            cur.fail_at(mcol - 1, "index " + std::to_string(m) + " out of range for rank " +
                                      std::to_string(*rank));
          }
          cur.expect(':');
          const auto c = static_cast<Coeff>(cur.number());
          if (terms.count(m)) {
            cur.fail_at(mcol - 1, "duplicate term " + std::to_string(m) + " in N[" +
                                      std::to_string(i) + "," + std::to_string(j) + "]");
          }
          terms[m] = c;
          if (cur.peek(',')) {
            cur.expect(',');
            continue;
          }
          break;
        }
      }
      cur.expect('}');
      cur.expect_end();
      products[{i, j}] = std::move(terms);
      seen_declaration = true;
      continue;
    }

    const std::size_t key_col = cur.column();
    const std::string key = cur.word();
    if (key == "ring") {
      if (seen_name) {
        cur.fail_at(key_col - 1, "duplicate 'ring' declaration");
      }
      name = cur.word();
      cur.expect_end();
      seen_name = true;
      seen_declaration = true;
    } else if (key == "format") {
      if (seen_format || seen_declaration) {
        cur.fail_at(key_col - 1, "'format' must be the first declaration and appear once");
      }
      cur.expect('=');
      const std::size_t vcol = cur.column();
      const std::size_t version = cur.number();
      cur.expect_end();
      if (version != static_cast<std::size_t>(kRingFormatVersion)) {
        cur.fail_at(vcol - 1, "unsupported format version " + std::to_string(version));
      }
      seen_format = true;
    } else if (key == "rank") {
      if (rank) {
        cur.fail_at(key_col - 1, "duplicate 'rank' declaration");
      }
      cur.expect('=');
      const std::size_t vcol = cur.column();
      const std::size_t r = cur.number();
      cur.expect_end();
      if (r == 0 || r > kMaxParsedRank) {
        cur.fail_at(vcol - 1, "rank must be between 1 and " + std::to_string(kMaxParsedRank));
      }
      rank = r;
      seen_declaration = true;
    } else if (key == "unit") {
      if (seen_unit) {
        cur.fail_at(key_col - 1, "duplicate 'unit' declaration");
      }
      cur.expect('=');
      const std::size_t vcol = cur.column();
      const std::size_t u = cur.number();
      cur.expect_end();
      if (u != 0) {
        cur.fail_at(vcol - 1, "unit must be basis index 0");
      }
      seen_unit = true;
      seen_declaration = true;
    } else if (key == "dual") {
      if (!rank) {
        cur.fail_at(key_col - 1, "'dual' requires a preceding 'rank' declaration");
      }
      if (dual) {
        cur.fail_at(key_col - 1, "duplicate 'dual' declaration");
      }
      cur.expect('=');
      cur.expect('[');
      std::vector<Index> d;
      if (!cur.peek(']')) {
        while (true) {
          const std::size_t pcol = cur.column();
          const Index p = cur.number();
          if (p >= *rank) {
            cur.fail_at(pcol - 1, "index " + std::to_string(p) + " out of range for rank " +
                                      std::to_string(*rank));
          }
          d.push_back(p);
          if (cur.peek(',')) {
            cur.expect(',');
            continue;
          }
          break;
        }
      }
      cur.expect(']');
      cur.expect_end();
      if (d.size() != *rank) {
        cur.fail_at(key_col - 1, "dual list has " + std::to_string(d.size()) +
                                     " entries, expected " + std::to_string(*rank));
      }
      dual = std::move(d);
      seen_declaration = true;
    } else {
      cur.fail_at(key_col - 1, "unknown declaration '" + key + "'");
    }
  }

  if (!rank) {
    throw ParseError(line_no, 1, "missing 'rank' declaration");
  }
  if (!dual) {
    throw ParseError(line_no, 1, "missing 'dual' declaration");
  }

  const std::size_t r = *rank;
  std::vector<Coeff> tensor(r * r * r, 0);
  for (Index j = 0; j < r; ++j) {
    if (!products.count({0, j})) {
      tensor[(0 * r + j) * r + j] = 1;
    }
    if (!products.count({j, 0})) {
      tensor[(j * r + 0) * r + j] = 1;
    }
  }
  for (const auto& [ij, terms] : products) {
    for (const auto& [m, c] : terms) {
      tensor[(ij.first * r + ij.second) * r + m] = c;
    }
  }
  return FusionRing(r, std::move(*dual), std::move(tensor), name);
}

FusionRing parse_ring(std::string_view text) {
  FusionRing ring = parse_ring_unvalidated(text);
  require_valid(ring);
  return ring;
}

std::string serialize_ring(const FusionRing& ring) {
  const std::size_t r = ring.rank();
  std::ostringstream os;
  os << "format = " << kRingFormatVersion << '\n';
  os << "ring " << (ring.name().empty() ? "unnamed" : ring.name()) << '\n';
  os << "rank = " << r << '\n';
  os << "unit = 0\n";
  os << "dual = [";
  for (Index i = 0; i < r; ++i) {
    os << (i ? ", " : "") << ring.dual(i);
  }
  os << "]\n";
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < r; ++j) {
      bool unit_row = true;
      for (Index m = 0; m < r && (i == 0 || j == 0); ++m) {
        const Coeff expected = m == (i == 0 ? j : i) ? 1 : 0;
        unit_row = unit_row && ring.N(i, j, m) == expected;
      }
      if ((i == 0 || j == 0) && unit_row) {
        continue;
      }
      os << "N[" << i << "," << j << "] = {";
      bool first = true;
      for (Index m = 0; m < r; ++m) {
        if (ring.N(i, j, m) != 0) {
          os << (first ? "" : ", ") << m << ":" << ring.N(i, j, m);
          first = false;
        }
      }
      os << "}\n";
    }
  }
  return os.str();
}

namespace {

nlohmann::ordered_json witness_json(const Witness& w) {
  nlohmann::ordered_json j;
  j["indices"] = w.indices;
  j["value"] = w.value;
  j["margin"] = w.margin;
  if (!w.detail.empty()) {
    j["detail"] = w.detail;
  }
  return j;
}

nlohmann::ordered_json to_json(const CriterionReport& report) {
  nlohmann::ordered_json j;
  j["ring"] = report.ring;
  j["criterion"] = report.criterion;
  j["verdict"] = to_string(report.verdict);
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : report.witnesses) {
    j["witnesses"].push_back(witness_json(w));
  }
  j["unresolved"] = nlohmann::ordered_json::array();
  for (const auto& w : report.unresolved) {
    j["unresolved"].push_back(witness_json(w));
  }
  j["precision_bits"] = report.precision_bits;
  j["tolerance"] = report.tolerance;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.parameters) {
    params[k] = v;
  }
  j["parameters"] = params;
  j["notes"] = report.notes;
  return j;
}

}  // namespace

std::string report_json(const std::vector<CriterionReport>& reports) {
  nlohmann::ordered_json doc;
  doc["format"] = kReportFormatVersion;
  doc["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    doc["reports"].push_back(to_json(r));
  }
  return doc.dump(2) + "\n";
}

std::string report_json(const CriterionReport& report) {
  return report_json(std::vector<CriterionReport>{report});
}

}  // namespace fusionring
