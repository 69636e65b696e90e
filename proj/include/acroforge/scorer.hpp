// Copyright 2026 The Acroforge Authors.
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

#ifndef ACROFORGE_SCORER_HPP_
#define ACROFORGE_SCORER_HPP_

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acroforge/benchgen.hpp"
#include "acroforge/rank.hpp"

namespace acroforge {

// Wire protocol: one JSON object per line, UTF-8.
//   request  {"id": int, "context": str, "acronym": str, "span": [int, int],
//             "candidates": [str, ...]}
//   response {"id": int, "scores": [float, ...]}   higher is better
struct ScoreRequest {
  std::int64_t id = 0;
  std::string context;
  std::string acronym;
  Span span;
  std::vector<std::string> candidates;

  friend bool operator==(const ScoreRequest &, const ScoreRequest &) = default;
};

struct ScoreResponse {
  std::int64_t id = 0;
  std::vector<double> scores;

  friend bool operator==(const ScoreResponse &, const ScoreResponse &) = default;
};

std::string encode_request(const ScoreRequest &req);
std::string encode_response(const ScoreResponse &resp);
// Both throw Error(kParse) on malformed lines.
ScoreRequest decode_request(std::string_view line);
ScoreResponse decode_response(std::string_view line);

ScoreRequest make_request(std::int64_t id, const AdSample &sample, const CandidateSet &cset);

// A bidirectional newline-framed byte stream.
class LineChannel {
 public:
  virtual ~LineChannel() = default;
  // Throws Error(kScorerUnavailable) when the peer is gone.
  virtual void write_line(std::string_view line) = 0;
  // nullopt on timeout; throws Error(kScorerUnavailable) on EOF.
  virtual std::optional<std::string> read_line(std::chrono::milliseconds timeout) = 0;
};

// Channel over a pair of file descriptors it owns.
class FdChannel : public LineChannel {
 public:
  FdChannel(int read_fd, int write_fd);
  ~FdChannel() override;
  FdChannel(const FdChannel &) = delete;
  FdChannel &operator=(const FdChannel &) = delete;

  void write_line(std::string_view line) override;
  std::optional<std::string> read_line(std::chrono::milliseconds timeout) override;

 private:
  int read_fd_;
  int write_fd_;
  std::string buffer_;
};

std::unique_ptr<LineChannel> connect_tcp(const std::string &host, std::uint16_t port);

// Runs `command` through /bin/sh with its stdin/stdout attached.
std::unique_ptr<LineChannel> spawn_stdio(const std::string &command);

// "tcp:host:port" or "stdio:command".
std::unique_ptr<LineChannel> open_scorer(std::string_view endpoint);

struct RemoteScorerOptions {
  std::chrono::milliseconds timeout{10000};
  std::size_t max_in_flight = 8;
};

struct ScoringItem {
  const AdSample *sample = nullptr;
  CandidateSet candidates;
};

// Client side of the wire protocol. Any timeout, malformed line, unknown id
// or score/candidate length mismatch raises Error(kScorerUnavailable).
class RemoteScorer {
 public:
  explicit RemoteScorer(std::unique_ptr<LineChannel> channel, RemoteScorerOptions options = {});

  Prediction score(const AdSample &sample, const CandidateSet &cset);

  // Keeps up to max_in_flight requests outstanding; replies may arrive in
  // any order. Output is aligned with `items`.
  std::vector<Prediction> score_all(std::span<const ScoringItem> items);

 private:
  ScoreResponse receive();

  std::unique_ptr<LineChannel> channel_;
  RemoteScorerOptions options_;
  std::int64_t next_id_ = 0;
};

}  // namespace acroforge

#endif  // ACROFORGE_SCORER_HPP_
