// Copyright 2026 The Topomap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TOPOMAP_ERRORS_H
#define TOPOMAP_ERRORS_H

#include <stdexcept>
#include <string>

namespace topomap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two labeled spaces that must agree do not (operator/vector basis mismatch,
/// duplicate labels, unknown label).
class BasisError : public Error {
 public:
  using Error::Error;
};

/// A construction precondition does not hold, e.g. asking for a surjection
/// kernel of a function that misses part of its codomain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A simulation would exceed a configured resource cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace topomap

#endif  // TOPOMAP_ERRORS_H
