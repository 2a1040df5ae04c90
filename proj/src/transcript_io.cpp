#include <json.hpp>

#include "catmouse/errors.hpp"
#include "catmouse/game.hpp"

namespace catmouse {

namespace {

using nlohmann::json;

constexpr const char* kFormatVersion = "catmouse-transcript/1";

template <typename T>
json padded(const std::vector<T>& values, std::size_t sentinels) {
  json arr = json::array();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i < sentinels) {
      arr.push_back(nullptr);
    } else {
      arr.push_back(static_cast<long long>(values[i]));
    }
  }
  return arr;
}

template <typename T>
std::vector<T> unpadded(const json& arr, T sentinel) {
  std::vector<T> out;
  for (const auto& v : arr) out.push_back(v.is_null() ? sentinel : static_cast<T>(v.get<long long>()));
  return out;
}

}  // namespace

std::string transcript_to_json(const Transcript& tr) {
  json j;
  j["graph_spec"] = tr.graph_spec;
  j["horizon"] = tr.horizon;
  j["c"] = padded(tr.c, 1);
  j["m"] = padded(tr.m, 1);
  j["b"] = padded(tr.b, 2);
  j["belief_radius"] = tr.beliefs_tracked ? padded(tr.belief_radius, 1) : json::array();
  j["belief_center"] = tr.beliefs_tracked ? padded(tr.belief_center, 1) : json::array();
  json meta = json::object();
  for (const auto& [k, v] : tr.meta) meta[k] = v;
  meta["format"] = kFormatVersion;
  j["meta"] = meta;
  return j.dump();
}

Transcript transcript_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("transcript is not valid JSON: ") + e.what());
  }
  try {
    Transcript tr;
    tr.graph_spec = j.at("graph_spec").get<std::string>();
    tr.horizon = j.at("horizon").get<int>();
    tr.c = unpadded<Vertex>(j.at("c"), kNoVertex);
    tr.m = unpadded<Vertex>(j.at("m"), kNoVertex);
    tr.b = unpadded<std::int8_t>(j.at("b"), -1);
    tr.belief_radius = unpadded<int>(j.at("belief_radius"), -1);
    tr.belief_center = unpadded<Vertex>(j.at("belief_center"), kNoVertex);
    tr.beliefs_tracked = !tr.belief_radius.empty();
    for (const auto& [k, v] : j.at("meta").items()) {
      if (k != "format") tr.meta[k] = v.get<std::string>();
    }
    return tr;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed transcript: ") + e.what());
  }
}

}  // namespace catmouse
