#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "darkstate/units.hpp"

namespace darkstate {

// Shortest round-trippable-enough decimal form; identical across runs.
std::string format_double(double x);

std::uint64_t fnv1a(const std::string& s);

// Stable hash of the full parameter set, printed in CSV metadata so output
// files are traceable to the inputs that produced them.
std::string params_hash(const PhysicalParams& p);

// CSV with '#'-prefixed metadata lines, then a header row, then data rows.
// Bodies (header + rows) are byte-deterministic; metadata may carry
// timestamps and runtimes, which comparisons should skip.
class CsvTable {
 public:
  void add_meta(const std::string& key, const std::string& value);
  void set_columns(std::vector<std::string> names);
  void add_row(const std::vector<double>& values);

  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t row_count() const { return rows_.size(); }
  const std::vector<double>& row(std::size_t i) const { return rows_[i]; }

  std::string body() const;           // header + data rows only
  std::string full_text() const;      // metadata + body
  void write(const std::string& path) const;

 private:
  std::vector<std::pair<std::string, std::string>> meta_;
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
};

}  // namespace darkstate
