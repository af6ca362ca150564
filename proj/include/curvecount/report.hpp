#pragma once

// Text, JSON and CSV rendering. Integers always travel as decimal strings.

#include <string>
#include <vector>

#include "curvecount/count_result.hpp"
#include "curvecount/verify.hpp"

namespace curvecount {

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& name);

std::string render(const CountResult& r, const std::string& query, Format fmt);
std::string render(const VerifyReport& report, Format fmt, bool failures_only = false);

/// Plain rows of cells; the JSON form is an array of objects keyed by header.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string render(const Table& t, Format fmt);

}  // namespace curvecount
