/*
 * Copyright 2026 The argneg Authors
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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace argneg::text {

std::string to_lower(std::string_view s);

// Lowercased alphanumeric word tokens; everything else separates.
std::vector<std::string> tokenize(std::string_view s);

std::map<std::string, int> word_bag(std::string_view s);

// Stable 64-bit FNV-1a, optionally seeded.
std::uint64_t fnv1a(std::string_view s, std::uint64_t seed = 0);

std::string hex64(std::uint64_t v);

// "a1,b2 , c" -> {"a1","b2","c"}; empty items dropped.
std::vector<std::string> split_list(std::string_view s, char sep = ',');

// ISO-8601 UTC timestamp of the current time.
std::string utc_timestamp();

}  // namespace argneg::text
