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

#include <string>

#include "vas/dfd/diagram.hpp"

namespace vas::dfd {

// Graphviz DOT rendering. Processes are circles, datastores open-ended
// rectangles (shape=tab), external entities boxes; participation edges are
// dashed and components outside the system are colored. Nodes and edges are
// emitted in sorted order, so identical diagrams produce identical bytes.
// Throws ConfigError when d is invalid.
std::string export_dot(const Diagram& d);

}  // namespace vas::dfd
