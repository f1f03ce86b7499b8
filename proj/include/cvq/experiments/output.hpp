#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace cvq {

namespace csv {
// RFC 4180 quoting when the field holds a comma, quote or newline.
std::string escape(std::string_view field);
std::string line(const std::vector<std::string>& fields);
}  // namespace csv

// Output directory; remembers the files it wrote, in order.
class OutputDir {
 public:
  explicit OutputDir(std::filesystem::path root);
  void write(const std::string& name, std::string_view content);
  const std::filesystem::path& root() const noexcept { return root_; }
  const std::vector<std::string>& files() const noexcept { return files_; }

 private:
  std::filesystem::path root_;
  std::vector<std::string> files_;
};

// UTC, ISO 8601 with seconds.
std::string utc_timestamp();

}  // namespace cvq
