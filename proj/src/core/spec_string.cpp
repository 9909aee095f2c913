// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "goowe/core/spec_string.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "goowe/core/types.hpp"

namespace goowe {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

SpecString SpecString::parse(std::string_view text) {
  SpecString out;
  const auto colon = text.find(':');
  out.name = trim(text.substr(0, colon));
  if (out.name.empty()) throw ParseError("empty descriptor name in '" + std::string(text) + "'");
  if (colon == std::string_view::npos) return out;
  std::string_view rest = text.substr(colon + 1);
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    const std::string item = trim(rest.substr(start, end - start));
    if (item.empty()) return;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ParseError("expected key=value, got '" + item + "' in '" + std::string(text) + "'");
    out.params.emplace_back(trim(std::string_view(item).substr(0, eq)),
                            trim(std::string_view(item).substr(eq + 1)));
  };
  for (std::size_t i = 0; i < rest.size(); ++i) {
    const char c = rest[i];
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) throw ParseError("unbalanced ')' in '" + std::string(text) + "'");
    if (c == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced '(' in '" + std::string(text) + "'");
  flush(rest.size());
  return out;
}

bool SpecString::has(std::string_view key) const {
  return std::any_of(params.begin(), params.end(), [&](const auto& kv) { return kv.first == key; });
}

std::string SpecString::get(std::string_view key, std::string_view fallback) const {
  for (auto it = params.rbegin(); it != params.rend(); ++it)
    if (it->first == key) return it->second;
  return std::string(fallback);
}

double SpecString::get_double(std::string_view key, double fallback) const {
  if (!has(key)) return fallback;
  const std::string v = get(key, "");
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw ParseError("parameter " + std::string(key) + " expects a number, got '" + v + "'");
  return out;
}

std::uint64_t SpecString::get_uint(std::string_view key, std::uint64_t fallback) const {
  if (!has(key)) return fallback;
  const std::string v = get(key, "");
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw ParseError("parameter " + std::string(key) + " expects a non-negative integer, got '" + v + "'");
  return out;
}

std::size_t SpecString::get_bytes(std::string_view key, std::size_t fallback) const {
  if (!has(key)) return fallback;
  std::string v = get(key, "");
  std::size_t scale = 1;
  if (!v.empty()) {
    const char s = static_cast<char>(std::tolower(static_cast<unsigned char>(v.back())));
    if (s == 'k') scale = 1u << 10;
    if (s == 'm') scale = 1u << 20;
    if (s == 'g') scale = 1u << 30;
    if (scale != 1) v.pop_back();
  }
  std::uint64_t n = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
    throw ParseError("parameter " + std::string(key) + " expects a byte count, got '" + get(key, "") + "'");
  return static_cast<std::size_t>(n) * scale;
}

void SpecString::require_known(std::initializer_list<std::string_view> allowed) const {
  for (const auto& [k, v] : params) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
      std::string names;
      for (auto a : allowed) names += (names.empty() ? "" : ", ") + std::string(a);
      throw ParseError("unknown parameter '" + k + "' for " + name + " (valid: " + names + ")");
    }
  }
}

std::string SpecString::str() const {
  std::string s = name;
  for (std::size_t i = 0; i < params.size(); ++i)
    s += (i == 0 ? ":" : ",") + params[i].first + "=" + params[i].second;
  return s;
}

}  // namespace goowe
