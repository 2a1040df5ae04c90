#include "catmouse/spec_string.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "catmouse/errors.hpp"

namespace catmouse {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

SpecString parse_spec_string(std::string_view text) {
  SpecString out;
  out.text = trim(text);
  std::string_view body = out.text;
  auto colon = body.find(':');
  out.kind = trim(body.substr(0, colon));
  if (out.kind.empty()) throw InputError("empty spec '" + out.text + "'");
  if (colon == std::string_view::npos) return out;
  std::string_view rest = body.substr(colon + 1);
  // file:<path> keeps the whole remainder verbatim
  if (out.kind == "file") {
    out.positional.push_back(trim(rest));
    return out;
  }
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    auto comma = rest.find(',', pos);
    if (comma == std::string_view::npos) comma = rest.size();
    std::string item = trim(rest.substr(pos, comma - pos));
    pos = comma + 1;
    if (!item.empty()) {
      auto eq = item.find('=');
      if (eq == std::string::npos) {
        out.positional.push_back(item);
      } else {
        std::string key = trim(std::string_view(item).substr(0, eq));
        std::string value = trim(std::string_view(item).substr(eq + 1));
        if (key.empty() || value.empty()) throw InputError("malformed parameter '" + item + "' in spec '" + out.text + "'");
        out.params[key] = value;
      }
    }
    if (comma == rest.size()) break;
  }
  return out;
}

long long SpecString::get_int(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw InputError("spec '" + text + "' is missing '" + key + "'");
  long long v = 0;
  const auto& s = it->second;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InputError("spec '" + text + "': '" + key + "' is not an integer");
  }
  return v;
}

long long SpecString::get_int(const std::string& key, long long fallback) const {
  return has(key) ? get_int(key) : fallback;
}

std::uint64_t SpecString::get_seed(const std::string& key, std::uint64_t fallback) const {
  if (!has(key)) return fallback;
  long long v = get_int(key);
  if (v < 0) throw InputError("spec '" + text + "': seed must be non-negative");
  return static_cast<std::uint64_t>(v);
}

double SpecString::get_double(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw InputError("spec '" + text + "' is missing '" + key + "'");
  char* end = nullptr;
  double v = std::strtod(it->second.c_str(), &end);
  if (end == it->second.c_str() || *end != '\0') {
    throw InputError("spec '" + text + "': '" + key + "' is not a number");
  }
  return v;
}

}  // namespace catmouse
