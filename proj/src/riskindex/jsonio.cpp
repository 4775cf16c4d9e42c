/*
 * Copyright 2026 the riskindex authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "riskindex/jsonio.hpp"

#include <cmath>
#include <cstdio>

#include "riskindex/errors.hpp"

namespace riskindex {

std::string format_double(double v) {
  if (!std::isfinite(v)) fail(ErrorKind::NonFiniteValue, "cannot format a non-finite number");
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::string(buf);
}

namespace {

void append_escaped(const std::string& s, std::string& out) {
  out.push_back('"');
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
}

void dump_value(const nlohmann::json& j, std::string& out) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      out += "null";
      break;
    case nlohmann::json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    case nlohmann::json::value_t::number_integer:
      out += std::to_string(j.get<std::int64_t>());
      break;
    case nlohmann::json::value_t::number_unsigned:
      out += std::to_string(j.get<std::uint64_t>());
      break;
    case nlohmann::json::value_t::number_float:
      out += format_double(j.get<double>());
      break;
    case nlohmann::json::value_t::string:
      append_escaped(j.get<std::string>(), out);
      break;
    case nlohmann::json::value_t::array: {
      out.push_back('[');
      bool first = true;
      for (const auto& item : j) {
        if (!first) out.push_back(',');
        first = false;
        dump_value(item, out);
      }
      out.push_back(']');
      break;
    }
    case nlohmann::json::value_t::object: {
      out.push_back('{');
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out.push_back(',');
        first = false;
        append_escaped(it.key(), out);
        out.push_back(':');
        dump_value(it.value(), out);
      }
      out.push_back('}');
      break;
    }
    default:
      fail(ErrorKind::Internal, "unsupported JSON value type");
  }
}

}  // namespace

std::string canonical_dump(const nlohmann::json& j) {
  std::string out;
  dump_value(j, out);
  return out;
}

nlohmann::json extended_real_to_json(const ExtendedReal& v) {
  if (v.is_plus_infinity()) return "+inf";
  if (v.is_minus_infinity()) return "-inf";
  return v.finite_value();
}

ExtendedReal extended_real_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "+inf") return ExtendedReal::plus_infinity();
    if (s == "-inf") return ExtendedReal::minus_infinity();
    fail(ErrorKind::ParseError, "expected \"+inf\", \"-inf\" or a number, got \"" + s + "\"");
  }
  if (!j.is_number()) fail(ErrorKind::ParseError, "expected an extended real");
  return ExtendedReal::finite(j.get<double>());
}

}  // namespace riskindex
