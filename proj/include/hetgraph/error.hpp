// Copyright 2026 The hetgraph Authors.
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

#ifndef HETGRAPH_ERROR_HPP_
#define HETGRAPH_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace hetgraph {

enum class ErrorKind {
  kInput,      // malformed or out-of-range input
  kUndefined,  // metric or statistic undefined for the given input
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorKind::kInput, what) {}
};

// Raised when a metric or statistic has no value (isolated node, singleton
// class, constant series, ...). Callers usually report it as a missing value.
class UndefinedError : public Error {
 public:
  explicit UndefinedError(const std::string& what)
      : Error(ErrorKind::kUndefined, what) {}
};

}  // namespace hetgraph

#endif  // HETGRAPH_ERROR_HPP_
