// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace goowe {

/// `name:key=value,key=value`. Commas inside parentheses belong to the value,
/// so `vote=dwm(0.5,0.01)` is one parameter.
struct SpecString {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;

  static SpecString parse(std::string_view text);

  bool has(std::string_view key) const;
  std::string get(std::string_view key, std::string_view fallback) const;
  double get_double(std::string_view key, double fallback) const;
  std::uint64_t get_uint(std::string_view key, std::uint64_t fallback) const;
  std::size_t get_bytes(std::string_view key, std::size_t fallback) const;  // accepts k/m/g suffixes

  /// Throws ParseError naming the first key not in `allowed`.
  void require_known(std::initializer_list<std::string_view> allowed) const;

  std::string str() const;
};

}  // namespace goowe
