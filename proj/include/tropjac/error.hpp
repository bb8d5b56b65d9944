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

#ifndef TROPJAC_ERROR_HPP
#define TROPJAC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tropjac {

/// Domain error raised by the library. `name()` is "<module>.<Kind>", for
/// example "graph.DisconnectedGraph"; the CLI prints it verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string module, std::string kind, const std::string& message)
      : std::runtime_error(message), module_(std::move(module)), kind_(std::move(kind)) {}

  const std::string& module() const { return module_; }
  const std::string& kind() const { return kind_; }
  std::string name() const { return module_ + "." + kind_; }

 private:
  std::string module_;
  std::string kind_;
};

}  // namespace tropjac

#endif  // TROPJAC_ERROR_HPP
