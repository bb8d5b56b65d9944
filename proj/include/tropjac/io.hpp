// Copyright 2026 The tropjac Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON documents for graphs and divisors, and the textual point / vector
// grammar used by command-line flags.
//
//   graph:   {"vertices": ["v1", ...],
//             "edges": [{"id": "A", "ends": ["v1", "v2"], "length": "3/2"}]}
//   divisor: {"entries": [{"vertex": "v1", "coeff": 2},
//                         {"edge": "A", "offset": "1/2", "coeff": -1}]}
//
// Rationals are strings ("p/q", integers, or finite decimals); integer JSON
// numbers are accepted for convenience, other JSON numbers are rejected.

#ifndef TROPJAC_IO_HPP
#define TROPJAC_IO_HPP

#include <string>
#include <string_view>

#include "tropjac/graph.hpp"

namespace tropjac {

/// Throws cli.Schema, cli.OneValentVertex and the graph.* construction
/// errors.
MetricGraph parse_graph(std::string_view text);
/// Canonical form: identifiers sorted, lengths as reduced "p/q".
std::string serialize_graph(const MetricGraph& graph);

/// Throws cli.Schema (unknown identifiers, offsets not strictly inside the
/// edge, zero coefficients).
Divisor parse_divisor(std::string_view text, const MetricGraph& graph);
std::string serialize_divisor(const Divisor& d, const MetricGraph& graph);

/// "v1" or "A@1/2". Throws cli.BadPoint.
GraphPoint parse_point(std::string_view text, const MetricGraph& graph);
/// "1/2,1" or "(1/2,1)"; the empty string is the empty vector. Throws
/// cli.BadVector.
Vector parse_vector(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace tropjac

#endif  // TROPJAC_IO_HPP
