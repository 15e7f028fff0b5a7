#include "darkstate/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "darkstate/config.hpp"

namespace darkstate {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string params_hash(const PhysicalParams& p) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(emit_config(p))));
  return buf;
}

void CsvTable::add_meta(const std::string& key, const std::string& value) {
  meta_.emplace_back(key, value);
}

void CsvTable::set_columns(std::vector<std::string> names) {
  columns_ = std::move(names);
}

void CsvTable::add_row(const std::vector<double>& values) {
  if (values.size() != columns_.size())
    throw std::logic_error("csv row width does not match column count");
  rows_.push_back(values);
}

std::string CsvTable::body() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < columns_.size(); ++i)
    out << (i ? "," : "") << columns_[i];
  out << "\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << format_double(row[i]);
    out << "\n";
  }
  return out.str();
}

std::string CsvTable::full_text() const {
  std::ostringstream out;
  for (const auto& [k, v] : meta_) out << "# " << k << ": " << v << "\n";
  out << body();
  return out.str();
}

void CsvTable::write(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write output file: " + path);
  f << full_text();
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace darkstate
