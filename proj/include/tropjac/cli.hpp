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

// Command-line driver. Subcommands: genus, canonical, period, aj, theta,
// reduce, rank, rr-check, kappa, inversion, riemann-check, moderators,
// break, dot.

#ifndef TROPJAC_CLI_HPP
#define TROPJAC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "tropjac/graph.hpp"

namespace tropjac {

/// Runs one command; `args` excludes the program name. Returns 0 on
/// success, 1 on domain errors (reported as "error: <module>.<Kind>: ..."),
/// 2 on usage errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Graphviz text for the refinement at supp D, chips as labeled marks.
std::string render_dot(const MetricGraph& graph, const Divisor& d);
/// Static SVG drawing of the same picture on a circular layout.
std::string render_svg(const MetricGraph& graph, const Divisor& d);

}  // namespace tropjac

#endif  // TROPJAC_CLI_HPP
