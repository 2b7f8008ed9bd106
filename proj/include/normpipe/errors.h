// Copyright 2026 The Normpipe Authors.
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

#ifndef NORMPIPE_ERRORS_H_
#define NORMPIPE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace normpipe {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A data file could not be opened or read.
class LoadError : public Error {
 public:
  explicit LoadError(const std::string& path, const std::string& what = "")
      : Error("cannot read '" + path + "'" + (what.empty() ? "" : ": " + what)),
        path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// A data file was readable but malformed. `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& path, std::size_t line,
             const std::string& what)
      : Error(path + ":" + std::to_string(line) + ": " + what),
        path_(path),
        line_(line) {}
  const std::string& path() const { return path_; }
  std::size_t line() const { return line_; }

 private:
  std::string path_;
  std::size_t line_;
};

// A word had no letters to encode phonetically.
class EncodingError : public Error {
 public:
  using Error::Error;
};

// The remote context model or NER service could not be reached, or answered
// with an error status.
class TransportError : public Error {
 public:
  TransportError(const std::string& what, int status, int attempts,
                 bool retryable)
      : Error(what),
        status_(status),
        attempts_(attempts),
        retryable_(retryable) {}
  // HTTP status, or 0 when no response was received.
  int status() const { return status_; }
  int attempts() const { return attempts_; }
  bool retryable() const { return retryable_; }

 private:
  int status_;
  int attempts_;
  bool retryable_;
};

class TrainingError : public Error {
 public:
  using Error::Error;
};

class EvaluationError : public Error {
 public:
  using Error::Error;
};

}  // namespace normpipe

#endif  // NORMPIPE_ERRORS_H_
