// Copyright 2026 The supertropical Authors
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

#ifndef SUPERTROPICAL_ERRORS_HPP
#define SUPERTROPICAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace supertropical {

/// Base of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& what = "shape mismatch") : Error(what) {}
};

class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(const std::string& what = "singular matrix") : Error(what) {}
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NoChangeOfBase : public Error {
 public:
  explicit NoChangeOfBase(const std::string& what = "no change of base") : Error(what) {}
};

class NotInVB : public Error {
 public:
  explicit NotInVB(const std::string& what = "vector not in the base space") : Error(what) {}
};

class DegenerateSpace : public Error {
 public:
  explicit DegenerateSpace(const std::string& what = "degenerate space") : Error(what) {}
};

class SizeLimitExceeded : public Error {
 public:
  explicit SizeLimitExceeded(const std::string& what = "size limit exceeded") : Error(what) {}
};

}  // namespace supertropical

#endif  // SUPERTROPICAL_ERRORS_HPP
