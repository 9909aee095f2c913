// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <string>

#include "goowe/simd/kernels.hpp"

namespace goowe::simd {

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

const KernelTable* kernels_for(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar: return &detail::scalar_table();
    case Isa::kAvx2: return detail::avx2_table();
    case Isa::kNeon: return detail::neon_table();
  }
  return nullptr;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::kScalar};
  if (detail::avx2_table()) out.push_back(Isa::kAvx2);
  if (detail::neon_table()) out.push_back(Isa::kNeon);
  return out;
}

namespace {

const KernelTable& select() noexcept {
  if (const char* env = std::getenv("GOOWE_SIMD")) {
    const std::string want(env);
    if (want == "scalar") return detail::scalar_table();
    if (want == "avx2") {
      if (auto* t = detail::avx2_table()) return *t;
      return detail::scalar_table();
    }
    if (want == "neon") {
      if (auto* t = detail::neon_table()) return *t;
      return detail::scalar_table();
    }
  }
  if (auto* t = detail::avx2_table()) return *t;
  if (auto* t = detail::neon_table()) return *t;
  return detail::scalar_table();
}

}  // namespace

const KernelTable& kernels() noexcept {
  static const KernelTable& table = select();
  return table;
}

}  // namespace goowe::simd
