// Copyright 2026 The cpfkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cpf/config.hpp"

#include <cstdlib>
#include <string>

namespace cpf {

namespace {

constexpr std::size_t kDefaultDimensionCap = 4096;

std::size_t initial_cap() {
  if (const char* env = std::getenv("CPF_MAX_DIM")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v >= 2) {
      return static_cast<std::size_t>(v);
    }
  }
  return kDefaultDimensionCap;
}

std::size_t& cap_storage() {
  static std::size_t cap = initial_cap();
  return cap;
}

}  // namespace

const Tolerances& tolerances() {
  static const Tolerances tol{};
  return tol;
}

std::size_t dimension_cap() { return cap_storage(); }

void set_dimension_cap(std::size_t cap) { cap_storage() = cap; }

}  // namespace cpf
