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

#include "samples.hpp"

namespace tropjac::samples {

MetricGraph circle(const Rational& a, const Rational& b) {
  return MetricGraph({"v1", "v2"}, {{"A", "v1", "v2", a}, {"B", "v2", "v1", b}});
}

MetricGraph loop(const Rational& l) { return MetricGraph({"v"}, {{"L", "v", "v", l}}); }

MetricGraph theta(const Rational& a, const Rational& b, const Rational& c) {
  return MetricGraph({"v1", "v2"}, {{"A", "v1", "v2", a}, {"B", "v1", "v2", b}, {"C", "v1", "v2", c}});
}

MetricGraph dumbbell(const Rational& l1, const Rational& l2, const Rational& bridge) {
  return MetricGraph({"v1", "v2"}, {{"L1", "v1", "v1", l1}, {"L2", "v2", "v2", l2}, {"M", "v1", "v2", bridge}});
}

MetricGraph k4() {
  return MetricGraph({"v1", "v2", "v3", "v4"}, {{"a", "v1", "v2", 1},
                                                 {"b", "v1", "v3", 1},
                                                 {"c", "v1", "v4", 1},
                                                 {"d", "v2", "v3", 1},
                                                 {"e", "v2", "v4", 1},
                                                 {"f", "v3", "v4", 1}});
}

MetricGraph triangle() {
  return MetricGraph({"v1", "v2", "v3"}, {{"a", "v1", "v2", 1}, {"b", "v2", "v3", 1}, {"c", "v3", "v1", 1}});
}

std::vector<Named> all() {
  auto make = [](std::string name, MetricGraph g) { return Named{std::move(name), std::make_shared<MetricGraph>(std::move(g))}; };
  std::vector<Named> out;
  out.push_back(make("circle1", loop(1)));
  out.push_back(make("circle2", circle(1, 1)));
  out.push_back(make("theta111", theta(1, 1, 1)));
  out.push_back(make("theta_mixed", theta(Rational(2, 3), 1, Rational(5, 2))));
  out.push_back(make("dumbbell_b1", dumbbell(1, 2, 1)));
  out.push_back(make("dumbbell_b2", dumbbell(1, 2, 2)));
  out.push_back(make("k4", k4()));
  return out;
}

}  // namespace tropjac::samples
