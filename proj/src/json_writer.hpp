#pragma once

#include <json.hpp>

#include <string>

namespace colfan::io {

// Canonical layout: objects and arrays holding objects are expanded one
// entry per line with two-space indentation; anything else (scalars,
// vectors, matrices, objects with only such values) goes on one line.
inline bool is_inline(const nlohmann::ordered_json& v) {
  if (v.is_array()) {
    for (const auto& e : v)
      if (e.is_object() || (e.is_array() && !is_inline(e))) return false;
    return true;
  }
  if (v.is_object()) {
    for (const auto& [k, e] : v.items())
      if (e.is_object() || !is_inline(e)) return false;
    return true;
  }
  return true;
}

inline void write_inline(const nlohmann::ordered_json& v, std::string& out) {
  if (v.is_array()) {
    out += '[';
    bool first = true;
    for (const auto& e : v) {
      if (!first) out += ", ";
      first = false;
      write_inline(e, out);
    }
    out += ']';
  } else if (v.is_object()) {
    out += '{';
    bool first = true;
    for (const auto& [k, e] : v.items()) {
      if (!first) out += ", ";
      first = false;
      out += nlohmann::ordered_json(k).dump() + ": ";
      write_inline(e, out);
    }
    out += '}';
  } else {
    out += v.dump();
  }
}

inline void write_block(const nlohmann::ordered_json& v, std::string& out, int indent) {
  if (is_inline(v) && !(v.is_object() && indent == 0 && !v.empty())) {
    write_inline(v, out);
    return;
  }
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  const bool obj = v.is_object();
  out += obj ? "{\n" : "[\n";
  bool first = true;
  for (const auto& [k, e] : v.items()) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (obj) out += nlohmann::ordered_json(k).dump() + ": ";
    write_block(e, out, indent + 2);
  }
  out += '\n' + std::string(static_cast<std::size_t>(indent), ' ') + (obj ? "}" : "]");
}

inline std::string write_json(const nlohmann::ordered_json& v) {
  std::string out;
  write_block(v, out, 0);
  out += '\n';
  return out;
}

}  // namespace colfan::io
