// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace barter {

// Rejected input: malformed parameters, out-of-range model constants,
// unparsable or inconsistent scenario files. Maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A size or capability guard tripped (e.g. exhaustive enumeration beyond the
// supported population size, rendering an unsupported dimension). The request
// was well-formed but deliberately refused. Maps to CLI exit code 2.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace barter
