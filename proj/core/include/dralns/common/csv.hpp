#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace dralns {

// Shortest representation that round-trips; used for every real written to
// CSV so that identical runs produce identical bytes.
std::string format_real(double value);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(const std::vector<std::string>& columns);

  CsvWriter& field(std::string_view text);
  CsvWriter& field(double value);
  CsvWriter& field(long long value);
  CsvWriter& field(unsigned long long value);
  CsvWriter& field(int value) { return field(static_cast<long long>(value)); }
  CsvWriter& field(std::size_t value) { return field(static_cast<unsigned long long>(value)); }
  CsvWriter& field(bool value) { return field(static_cast<long long>(value ? 1 : 0)); }
  void end_row();

 private:
  void separator();

  std::ostream& out_;
  bool first_in_row_ = true;
};

// Minimal reader for the CSV files this project writes (no quoting).
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(std::string_view name) const;
};

CsvTable read_csv(const std::string& path);

}  // namespace dralns
