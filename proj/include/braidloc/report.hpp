#pragma once

// Machine-readable command reports (schema 1).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace braidloc {

using ojson = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, Bounded };
const char* to_string(CheckStatus s) noexcept;

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  ojson details = ojson::object();
};

std::uint64_t fnv1a64(std::string_view data);

class Report {
 public:
  Report(std::string command, std::string backend) : command_(std::move(command)), backend_(std::move(backend)) {}

  /// Inputs that determine the result; hashed into inputs_digest.
  ojson& inputs() { return inputs_; }
  /// Command-specific fields, emitted after the common ones.
  ojson& fields() { return fields_; }

  void add(std::string name, CheckStatus status, ojson details = ojson::object());
  void add(std::string name, bool ok, ojson details = ojson::object()) {
    add(std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(details));
  }
  const std::vector<Check>& checks() const { return checks_; }

  void set_wall_time(double seconds) { wall_time_ = seconds; }

  /// No check has status fail (bounded counts as pass).
  bool passed() const;
  std::string digest() const;
  ojson to_json() const;

 private:
  std::string command_;
  std::string backend_;
  ojson inputs_ = ojson::object();
  ojson fields_ = ojson::object();
  std::vector<Check> checks_;
  std::optional<double> wall_time_;
};

}  // namespace braidloc
