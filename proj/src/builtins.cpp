#include "braidloc/builtins.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "braidloc/error.hpp"

namespace braidloc {

// Generated at configure time from data/builtin/*.json.
const std::map<std::string, std::string>& builtin_sources();

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : builtin_sources()) out.push_back(name);
  return out;
}

const std::string& builtin_json(std::string_view name) {
  const auto& sources = builtin_sources();
  auto it = sources.find(std::string(name));
  if (it == sources.end()) fail(ErrorCode::InvalidArgument, "unknown builtin matrix '" + std::string(name) + "'");
  return it->second;
}

SqMatrix uqsl2_matrix(const CycNum& q) {
  const CycNum zero, one(1);
  std::vector<CycNum> e = {q,    zero, zero, zero, zero, zero,  one,  zero,
                           zero, q,    q - one, zero, zero, zero, zero, q};
  return ExactMatrix::from_entries(4, e);
}

SqMatrix builtin_matrix(std::string_view name, Backend backend) {
  const auto query = name.find('?');
  if (query != std::string_view::npos) {
    const std::string_view base = name.substr(0, query), param = name.substr(query + 1);
    if (base != "uqsl2_m" || param.substr(0, 2) != "q=")
      fail(ErrorCode::InvalidArgument, "unknown builtin parameterization '" + std::string(name) + "'");
    return uqsl2_matrix(CycNum::parse(param.substr(2))).to_backend(backend);
  }
  return matrix_from_json(nlohmann::json::parse(builtin_json(name)), backend);
}

SqMatrix load_matrix(const std::string& source, Backend backend) {
  constexpr std::string_view prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) return builtin_matrix(std::string_view(source).substr(prefix.size()), backend);
  std::ifstream in(source);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open matrix file '" + source + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, "invalid JSON in '" + source + "': " + e.what());
  }
  return matrix_from_json(j, backend);
}

}  // namespace braidloc
