// Copyright 2026 The hypcap authors
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

#include <random>
#include <stdexcept>
#include <string>

namespace hypcap {

// Error taxonomy. Callers inspect the type, not the message.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};
// Requested construction needs geometry finer than the space provides.
struct resolution_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// A cover is too coarse for the curve sampling mesh.
struct margin_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// A construction needs more levels than the filling carries.
struct depth_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct empty_anchor_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Malformed run configuration or report file.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Rng = std::mt19937_64;

// Slack for closed-ball membership and intersection tests on computed radii.
inline constexpr double kBallSlack = 1e-12;

}  // namespace hypcap
