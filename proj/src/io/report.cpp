#include <chrono>
#include <ctime>

#include "ores/io/scenario.hpp"

namespace ores {

void Report::add(json record, bool pass) {
  record["pass"] = pass;
  records_.push_back(std::move(record));
  ++(pass ? passed_ : failed_);
}

void Report::note(json record) { records_.push_back(std::move(record)); }

std::string Report::jsonl(const std::string& timestamp) const {
  std::string out = json{{"generated", timestamp}}.dump() + "\n";
  for (const auto& r : records_) out += r.dump() + "\n";
  out += json{{"scenario", name_}, {"passed", passed_}, {"failed", failed_}, {"pass", pass()}}.dump() +
         "\n";
  return out;
}

std::string timestamp_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace ores
