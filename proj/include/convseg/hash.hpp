// Copyright 2026 The convseg Authors.
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

#ifndef CONVSEG_HASH_HPP_
#define CONVSEG_HASH_HPP_

#include <bit>
#include <cstdint>
#include <string_view>

namespace convseg {

// 64-bit FNV-1a.
constexpr std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// MurmurHash3 64-bit finalizer.
constexpr std::uint64_t fmix64(std::uint64_t k) {
  k ^= k >> 33;
  k *= 0xff51afd7ed558ccdULL;
  k ^= k >> 33;
  k *= 0xc4ceb9fe1a85ec53ULL;
  k ^= k >> 33;
  return k;
}

constexpr std::uint64_t feature_hash(std::string_view bytes) {
  return fmix64(fnv1a64(bytes));
}

inline int hamming(std::uint64_t a, std::uint64_t b) {
  return std::popcount(a ^ b);
}

// Per-key stream seed derived from a base seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::string_view key) {
  return fmix64(seed ^ fmix64(fnv1a64(key) + 0x9e3779b97f4a7c15ULL));
}

}  // namespace convseg

#endif  // CONVSEG_HASH_HPP_
