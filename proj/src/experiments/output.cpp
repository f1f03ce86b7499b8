#include "cvq/experiments/output.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include "cvq/error.hpp"

namespace cvq {

std::string csv::escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv::line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += escape(fields[i]);
  }
  out += '\n';
  return out;
}

OutputDir::OutputDir(std::filesystem::path root) : root_(std::move(root)) {
  std::error_code ec;
  std::filesystem::create_directories(root_, ec);
  if (ec) throw ConfigError("cannot create output directory " + root_.string() + ": " + ec.message());
}

void OutputDir::write(const std::string& name, std::string_view content) {
  std::ofstream f(root_ / name, std::ios::binary | std::ios::trunc);
  if (!f) throw ConfigError("cannot write " + (root_ / name).string());
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  files_.push_back(name);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace cvq
