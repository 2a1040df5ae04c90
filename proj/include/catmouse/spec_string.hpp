#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catmouse {

// "kind:key=value,key=value" or "kind:positional". Whitespace is trimmed.
struct SpecString {
  std::string kind;
  std::map<std::string, std::string> params;
  std::vector<std::string> positional;

  bool has(const std::string& key) const { return params.count(key) != 0; }
  // Throw InputError naming the spec when the value is missing or malformed.
  long long get_int(const std::string& key) const;
  long long get_int(const std::string& key, long long fallback) const;
  std::uint64_t get_seed(const std::string& key, std::uint64_t fallback) const;
  double get_double(const std::string& key) const;
  std::string text;
};

SpecString parse_spec_string(std::string_view text);

}  // namespace catmouse
