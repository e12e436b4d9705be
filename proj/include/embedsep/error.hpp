// include/embedsep/error.hpp

// Copyright 2026  The embedsep authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EMBEDSEP_ERROR_HPP_
#define EMBEDSEP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace embedsep {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller handed us data that violates a precondition.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Input is structurally valid but degenerate for the requested operation
// (e.g. all bins silent, a speaker with zero labeled bins).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnsupportedRateError : public Error {
 public:
  using Error::Error;
};

class UnsupportedChannelsError : public Error {
 public:
  using Error::Error;
};

class CheckpointError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class TrainingError : public Error {
 public:
  using Error::Error;
};

}  // namespace embedsep

#endif  // EMBEDSEP_ERROR_HPP_
