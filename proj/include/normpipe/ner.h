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

#ifndef NORMPIPE_NER_H_
#define NORMPIPE_NER_H_

#include <chrono>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "normpipe/lexicon.h"

namespace normpipe {

struct RemoteNerOptions {
  // Base URL of a service implementing POST /v1/ner, e.g.
  // "http://localhost:8080".
  std::string url;
  std::chrono::milliseconds timeout{5000};
};

// Gazetteer lookup, optionally unioned with a remote model. The lexicon must
// outlive the recognizer.
class EntityRecognizer {
 public:
  explicit EntityRecognizer(const Lexicon& lexicon,
                            std::optional<RemoteNerOptions> remote = {});

  // Indices of tokens recognized as named entities. Gazetteer matching is
  // case-insensitive. A failing remote degrades to gazetteer-only results
  // and appends a message to `warnings` when non-null.
  std::set<std::size_t> Recognize(const std::vector<std::string>& tokens,
                                  std::vector<std::string>* warnings) const;

  bool has_remote() const { return remote_.has_value(); }

 private:
  std::set<std::size_t> QueryRemote(
      const std::vector<std::string>& tokens) const;

  const Lexicon* lexicon_;
  std::optional<RemoteNerOptions> remote_;
};

}  // namespace normpipe

#endif  // NORMPIPE_NER_H_
