#include "curvecount/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "curvecount/errors.hpp"

namespace curvecount {

namespace {

using json = nlohmann::ordered_json;

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_cell(cells[i]);
  return out + "\n";
}

std::string aligned(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    out << s << "\n";
  };
  line(header);
  for (const auto& row : rows) line(row);
  return out.str();
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw InputError("unknown format '" + name + "'");
}

std::string render(const CountResult& r, const std::string& query, Format fmt) {
  const std::string unordered = r.unordered_value ? to_decimal(*r.unordered_value) : "";
  switch (fmt) {
    case Format::Json: {
      json j;
      j["query"] = query;
      j["d"] = r.space.d;
      j["space"] = {{"m", r.space.m}, {"n", r.space.n}, {"dim", r.space.dim()}};
      j["ordered_value"] = to_decimal(r.ordered_value);
      j["symmetry_factor"] = to_decimal(r.symmetry_factor);
      j["unordered_value"] = r.unordered_value ? json(unordered) : json(nullptr);
      j["warnings"] = r.warnings;
      return j.dump(2) + "\n";
    }
    case Format::Csv:
      return csv_line({"query", "d", "m", "n", "dim", "ordered_value", "symmetry_factor", "unordered_value", "warnings"}) +
             csv_line({query, std::to_string(r.space.d), std::to_string(r.space.m), std::to_string(r.space.n),
                       std::to_string(r.space.dim()), to_decimal(r.ordered_value), to_decimal(r.symmetry_factor),
                       unordered, [&] {
                         std::string w;
                         for (const auto& s : r.warnings) w += (w.empty() ? "" : "; ") + s;
                         return w;
                       }()});
    case Format::Text: {
      std::ostringstream out;
      out << query << "  (d=" << r.space.d << ", m=" << r.space.m << ", n=" << r.space.n << ", dim=" << r.space.dim()
          << ")\n";
      out << "  ordered    " << to_decimal(r.ordered_value) << "\n";
      out << "  symmetry   " << to_decimal(r.symmetry_factor) << "\n";
      out << "  unordered  " << (r.unordered_value ? unordered : "(not an integer)") << "\n";
      for (const auto& w : r.warnings) out << "  warning: " << w << "\n";
      return out.str();
    }
  }
  return {};
}

std::string render(const VerifyReport& report, Format fmt, bool failures_only) {
  std::vector<const VerifyRow*> shown;
  for (const VerifyRow& row : report.rows)
    if (!failures_only || !row.pass()) shown.push_back(&row);
  switch (fmt) {
    case Format::Json: {
      json j;
      j["passed"] = report.passed();
      j["rows"] = json::array();
      for (const VerifyRow* row : shown)
        j["rows"].push_back({{"table", row->table},
                             {"query", row->query},
                             {"expected", to_decimal(row->expected)},
                             {"computed", to_decimal(row->computed)},
                             {"pass", row->pass()}});
      return j.dump(2) + "\n";
    }
    case Format::Csv: {
      std::string out = csv_line({"table", "query", "expected", "computed", "pass"});
      for (const VerifyRow* row : shown)
        out += csv_line({row->table, row->query, to_decimal(row->expected), to_decimal(row->computed),
                         row->pass() ? "1" : "0"});
      return out;
    }
    case Format::Text: {
      std::vector<std::vector<std::string>> rows;
      for (const VerifyRow* row : shown)
        rows.push_back({row->table, row->query, to_decimal(row->expected), to_decimal(row->computed),
                        row->pass() ? "ok" : "FAIL"});
      std::string out = aligned({"table", "query", "expected", "computed", ""}, rows);
      out += std::to_string(report.rows.size() - report.failures()) + "/" + std::to_string(report.rows.size()) +
             " rows pass\n";
      return out;
    }
  }
  return {};
}

std::string render(const Table& t, Format fmt) {
  switch (fmt) {
    case Format::Json: {
      json j = json::array();
      for (const auto& row : t.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < t.header.size() && i < row.size(); ++i) obj[t.header[i]] = row[i];
        j.push_back(obj);
      }
      return j.dump(2) + "\n";
    }
    case Format::Csv: {
      std::string out = csv_line(t.header);
      for (const auto& row : t.rows) out += csv_line(row);
      return out;
    }
    case Format::Text:
      return aligned(t.header, t.rows);
  }
  return {};
}

}  // namespace curvecount
