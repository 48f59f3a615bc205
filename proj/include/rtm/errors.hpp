// Copyright 2026 The rtmdigit Authors.
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

#include <stdexcept>
#include <string>

namespace rtm {

// Base of every error raised by the library. Callers that only need to
// report failures can catch this; the subclasses exist so tests and the
// pipeline can tell the failure modes apart.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateCrop : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public ParseError {
 public:
  explicit UnknownLabel(const std::string& label)
      : ParseError("unknown component class label '" + label + "'"),
        label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class DetectorUnavailable : public Error {
 public:
  using Error::Error;
};

class OcrFailure : public Error {
 public:
  OcrFailure(const std::string& engine_id, const std::string& what)
      : Error("ocr engine '" + engine_id + "': " + what), engine_id_(engine_id) {}
  const std::string& engine_id() const { return engine_id_; }

 private:
  std::string engine_id_;
};

class UnsatisfiableLayout : public Error {
 public:
  using Error::Error;
};

}  // namespace rtm
