// Copyright 2026 The vaslab Authors.
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

#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vas::forecast {

// Prior-performance level of a student; the feature the forecaster buckets
// on.
enum class Bucket { Low, High };

const char* to_string(Bucket b);
std::optional<Bucket> bucket_from_string(std::string_view s);

// One historical (school, student-features) -> outcome record.
struct Observation {
  std::string school_id;
  Bucket bucket = Bucket::Low;
  double outcome = 0;  // in [0, 1]
  int round = 0;       // >= 0
};

// CSV with header `round,school_id,bucket,outcome`; bucket is low|high.
std::string observations_to_csv(std::span<const Observation> obs);
std::vector<Observation> parse_observations_csv(const std::string& text,
                                                const std::string& origin);
std::vector<Observation> load_observations_file(
    const std::filesystem::path& path);
void save_observations_file(std::span<const Observation> obs,
                            const std::filesystem::path& path);

}  // namespace vas::forecast
