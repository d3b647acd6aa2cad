#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

// Suite reports. The JSON writer is hand-rolled so the field order and the
// 17-significant-digit float format are pinned: identical inputs serialize
// to identical bytes, which is what the golden files and the determinism
// checks compare.

namespace sta {

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_abs_error = 0.0;
  std::string counterexample; // empty -> null
  std::string note;           // empty -> omitted
};

struct SuiteReport {
  std::string suite;
  std::string algebra;
  std::uint64_t seed = 0;
  long trials = 0;
  std::vector<CheckResult> checks;
  bool passed = false;

  void finalize() {
    passed = true;
    for (const auto& c : checks)
      passed = passed && c.passed;
  }
};

namespace detail {

inline std::string format_double17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
    case '"': out += "\\\""; break;
    case '\\': out += "\\\\"; break;
    case '\n': out += "\\n"; break;
    case '\t': out += "\\t"; break;
    default:
      if (static_cast<unsigned char>(c) < 0x20) {
        char buf[8];
        std::snprintf(buf, sizeof(buf), "\\u%04x", c);
        out += buf;
      } else {
        out += c;
      }
    }
  }
  return out;
}

} // namespace detail

inline std::string to_json(const SuiteReport& r) {
  using detail::format_double17;
  using detail::json_escape;
  std::string out;
  out += "{\n";
  out += "  \"suite\": \"" + json_escape(r.suite) + "\",\n";
  out += "  \"algebra\": \"" + json_escape(r.algebra) + "\",\n";
  out += "  \"seed\": " + std::to_string(r.seed) + ",\n";
  out += "  \"trials\": " + std::to_string(r.trials) + ",\n";
  out += "  \"checks\": [\n";
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    const CheckResult& c = r.checks[i];
    out += "    {\"name\": \"" + json_escape(c.name) + "\", ";
    out += std::string("\"passed\": ") + (c.passed ? "true" : "false") + ", ";
    out += "\"max_abs_error\": " + format_double17(c.max_abs_error) + ", ";
    out += "\"counterexample\": ";
    out += c.counterexample.empty() ? "null" : "\"" + json_escape(c.counterexample) + "\"";
    if (!c.note.empty())
      out += ", \"note\": \"" + json_escape(c.note) + "\"";
    out += "}";
    if (i + 1 < r.checks.size())
      out += ",";
    out += "\n";
  }
  out += "  ],\n";
  out += std::string("  \"passed\": ") + (r.passed ? "true" : "false") + "\n";
  out += "}\n";
  return out;
}

inline std::string to_text(const SuiteReport& r) {
  std::string out;
  for (const CheckResult& c : r.checks) {
    out += c.passed ? "PASS " : "FAIL ";
    out += c.name;
    out += " max_err=" + detail::format_double17(c.max_abs_error);
    if (!c.counterexample.empty())
      out += " counterexample=" + c.counterexample;
    out += "\n";
    if (!c.note.empty())
      out += "  note: " + c.note + "\n";
  }
  out += "suite=" + r.suite + " algebra=" + r.algebra + " seed=" + std::to_string(r.seed) +
         " trials=" + std::to_string(r.trials) +
         " passed=" + (r.passed ? "true" : "false") + "\n";
  return out;
}

} // namespace sta
