#pragma once

#include <string>
#include <vector>

namespace worm3 {

/// 17 significant digits, '.' separator; round-trips every double.
std::string format_double(double x);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);
  CsvTable& row();
  CsvTable& add(double x);
  CsvTable& add(long long x);
  CsvTable& add(const std::string& s);
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Writes the whole file at once; throws std::runtime_error on failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace worm3
