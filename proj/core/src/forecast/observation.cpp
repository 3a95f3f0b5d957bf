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

#include "vas/forecast/observation.hpp"

#include <charconv>
#include <sstream>

#include "vas/common/errors.hpp"
#include "vas/common/format.hpp"
#include "vas/common/fs.hpp"

namespace vas::forecast {

const char* to_string(Bucket b) { return b == Bucket::Low ? "low" : "high"; }

std::optional<Bucket> bucket_from_string(std::string_view s) {
  if (s == "low") return Bucket::Low;
  if (s == "high") return Bucket::High;
  return std::nullopt;
}

std::string observations_to_csv(std::span<const Observation> obs) {
  std::string out = "round,school_id,bucket,outcome\n";
  for (const auto& o : obs) {
    out += std::to_string(o.round);
    out += ',';
    out += o.school_id;
    out += ',';
    out += to_string(o.bucket);
    out += ',';
    out += format_double(o.outcome);
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

std::vector<Observation> parse_observations_csv(const std::string& text,
                                                const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<Observation> obs;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string ctx = origin + ":" + std::to_string(lineno);
    if (lineno == 1) {
      if (line != "round,school_id,bucket,outcome") {
        throw ParseError(ctx + ": expected header round,school_id,bucket,outcome");
      }
      continue;
    }
    const auto fields = split_line(line);
    if (fields.size() != 4) {
      throw ParseError(ctx + ": expected 4 fields, got " +
                       std::to_string(fields.size()));
    }
    Observation o;
    try {
      o.round = std::stoi(fields[0]);
      o.outcome = std::stod(fields[3]);
    } catch (const std::exception&) {
      throw ParseError(ctx + ": malformed number");
    }
    o.school_id = fields[1];
    const auto b = bucket_from_string(fields[2]);
    if (!b) {
      throw ParseError(ctx + ": bucket must be low or high");
    }
    o.bucket = *b;
    if (o.round < 0) {
      throw ParseError(ctx + ": round must be >= 0");
    }
    if (!(o.outcome >= 0.0 && o.outcome <= 1.0)) {
      throw ParseError(ctx + ": outcome must lie in [0, 1]");
    }
    obs.push_back(std::move(o));
  }
  return obs;
}

std::vector<Observation> load_observations_file(
    const std::filesystem::path& path) {
  return parse_observations_csv(read_text_file(path), path.string());
}

void save_observations_file(std::span<const Observation> obs,
                            const std::filesystem::path& path) {
  write_text_file(path, observations_to_csv(obs));
}

}  // namespace vas::forecast
