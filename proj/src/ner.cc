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

#include "normpipe/ner.h"

#include <utility>

#include "httplib.h"
#include "json.hpp"
#include "normpipe/errors.h"

namespace normpipe {

using json = nlohmann::json;

EntityRecognizer::EntityRecognizer(const Lexicon& lexicon,
                                   std::optional<RemoteNerOptions> remote)
    : lexicon_(&lexicon), remote_(std::move(remote)) {}

std::set<std::size_t> EntityRecognizer::Recognize(
    const std::vector<std::string>& tokens,
    std::vector<std::string>* warnings) const {
  std::set<std::size_t> hits;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!tokens[i].empty() && lexicon_->IsEntity(tokens[i])) hits.insert(i);
  }
  if (remote_ && !tokens.empty()) {
    try {
      for (std::size_t i : QueryRemote(tokens)) hits.insert(i);
    } catch (const std::exception& e) {
      if (warnings != nullptr) {
        warnings->push_back(std::string("ner: remote unavailable, using "
                                        "gazetteer only: ") +
                            e.what());
      }
    }
  }
  return hits;
}

std::set<std::size_t> EntityRecognizer::QueryRemote(
    const std::vector<std::string>& tokens) const {
  httplib::Client client(remote_->url);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(
      remote_->timeout);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(
      remote_->timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());

  const json body = {{"tokens", tokens}};
  auto res = client.Post("/v1/ner", body.dump(), "application/json");
  if (!res) {
    throw TransportError("ner request failed: " + httplib::to_string(res.error()),
                         0, 1, true);
  }
  if (res->status != 200) {
    throw TransportError("ner service returned HTTP " +
                             std::to_string(res->status),
                         res->status, 1, res->status >= 500);
  }
  std::set<std::size_t> hits;
  const json reply = json::parse(res->body);
  for (const auto& idx : reply.at("entity_indices")) {
    const auto i = idx.get<long long>();
    if (i >= 0 && static_cast<std::size_t>(i) < tokens.size()) {
      hits.insert(static_cast<std::size_t>(i));
    }
  }
  return hits;
}

}  // namespace normpipe
