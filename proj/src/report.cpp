#include "braidloc/report.hpp"

#include <algorithm>
#include <cstdio>

namespace braidloc {

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Bounded: return "bounded";
  }
  return "fail";
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void Report::add(std::string name, CheckStatus status, ojson details) {
  checks_.push_back({std::move(name), status, std::move(details)});
}

bool Report::passed() const {
  return std::none_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

std::string Report::digest() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(command_ + "\n" + inputs_.dump())));
  return buf;
}

ojson Report::to_json() const {
  ojson j;
  j["schema"] = 1;
  j["command"] = command_;
  j["arguments"] = inputs_.contains("arguments") ? inputs_["arguments"] : ojson::object();
  j["inputs_digest"] = digest();
  j["backend"] = backend_;
  j["passed"] = passed();
  ojson checks = ojson::array();
  for (const auto& c : checks_) checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}});
  j["checks"] = std::move(checks);
  for (const auto& [key, value] : fields_.items()) j[key] = value;
  j["wall_time"] = wall_time_ ? ojson(*wall_time_) : ojson(nullptr);
  return j;
}

}  // namespace braidloc
