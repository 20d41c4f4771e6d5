/* Copyright 2026 The adjcalc Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef ADJCALC_ERROR_HPP_
#define ADJCALC_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace adjcalc {

/// Position of a subterm: child indices from the root. For a composition
/// f . g the child 0 is f and 1 is g; L and neg have the single child 0.
using Path = std::vector<unsigned>;

std::string path_to_string(const Path& path);

/// Half-open byte range [start, end) into some input text.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}

  virtual const char* kind() const noexcept { return "error"; }

  const std::optional<SourceSpan>& span() const noexcept { return span_; }
  void set_span(SourceSpan span) { span_ = span; }

  const std::optional<Path>& path() const noexcept { return path_; }
  void set_path(Path path) { path_ = std::move(path); }

 private:
  std::optional<SourceSpan> span_;
  std::optional<Path> path_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, SourceSpan span) : Error(what) {
    set_span(span);
  }
  const char* kind() const noexcept override { return "syntax error"; }
};

class SignatureViolation : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "signature violation"; }
};

/// Base of typing failures raised by type_of.
class TypeError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "type error"; }
};

class CompositionMismatch : public TypeError {
 public:
  using TypeError::TypeError;
  const char* kind() const noexcept override { return "composition mismatch"; }
};

/// An equality query between arrows of different types.
class TypeMismatch : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "type mismatch"; }
};

class BoundaryMismatch : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "boundary mismatch"; }
};

}  // namespace adjcalc

#endif  // ADJCALC_ERROR_HPP_
