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

#include "acroforge/scorer.hpp"

#include <fcntl.h>
#include <netdb.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <map>
#include <mutex>
#include <thread>

#include "acroforge/error.hpp"
#include "json.hpp"

extern char **environ;

namespace acroforge {
namespace {

using nlohmann::json;

void ignore_sigpipe() {
  static std::once_flag once;
  std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

[[noreturn]] void unavailable(const std::string &what) {
  throw Error(ErrorCode::kScorerUnavailable, what);
}

class ProcessChannel : public LineChannel {
 public:
  ProcessChannel(pid_t pid, int read_fd, int write_fd)
      : pid_(pid), fds_(std::make_unique<FdChannel>(read_fd, write_fd)) {}

  ~ProcessChannel() override {
    fds_.reset();
    for (int i = 0; i < 100; ++i) {
      if (::waitpid(pid_, nullptr, WNOHANG) != 0) return;
      std::this_thread::sleep_for(std::chrono::milliseconds(10));
    }
    ::kill(pid_, SIGKILL);
    ::waitpid(pid_, nullptr, 0);
  }

  void write_line(std::string_view line) override { fds_->write_line(line); }
  std::optional<std::string> read_line(std::chrono::milliseconds timeout) override {
    return fds_->read_line(timeout);
  }

 private:
  pid_t pid_;
  std::unique_ptr<FdChannel> fds_;
};

}  // namespace

std::string encode_request(const ScoreRequest &req) {
  json j = {{"id", req.id},
            {"context", req.context},
            {"acronym", req.acronym},
            {"span", {req.span.begin, req.span.end}},
            {"candidates", req.candidates}};
  return j.dump();
}

std::string encode_response(const ScoreResponse &resp) {
  json j = {{"id", resp.id}, {"scores", resp.scores}};
  return j.dump();
}

ScoreRequest decode_request(std::string_view line) {
  try {
    json j = json::parse(line);
    ScoreRequest req;
    req.id = j.at("id").get<std::int64_t>();
    req.context = j.at("context").get<std::string>();
    req.acronym = j.at("acronym").get<std::string>();
    const json &span = j.at("span");
    if (!span.is_array() || span.size() != 2) throw Error(ErrorCode::kParse, "span must be [begin, end]");
    req.span = {span[0].get<std::size_t>(), span[1].get<std::size_t>()};
    req.candidates = j.at("candidates").get<std::vector<std::string>>();
    return req;
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kParse, std::string("bad request line: ") + e.what());
  }
}

ScoreResponse decode_response(std::string_view line) {
  try {
    json j = json::parse(line);
    ScoreResponse resp;
    const json &id = j.at("id");
    if (!id.is_number_integer()) throw Error(ErrorCode::kParse, "id must be an integer");
    resp.id = id.get<std::int64_t>();
    const json &scores = j.at("scores");
    if (!scores.is_array()) throw Error(ErrorCode::kParse, "scores must be an array");
    for (const json &s : scores) {
      if (!s.is_number()) throw Error(ErrorCode::kParse, "non-numeric score");
      resp.scores.push_back(s.get<double>());
    }
    return resp;
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kParse, std::string("bad response line: ") + e.what());
  }
}

ScoreRequest make_request(std::int64_t id, const AdSample &sample, const CandidateSet &cset) {
  ScoreRequest req;
  req.id = id;
  req.context = sample.context;
  req.acronym = sample.acronym;
  req.span = sample.acronym_span;
  req.candidates.reserve(cset.candidates.size());
  for (const Candidate &c : cset.candidates) req.candidates.push_back(c.canonical);
  return req;
}

FdChannel::FdChannel(int read_fd, int write_fd) : read_fd_(read_fd), write_fd_(write_fd) {
  ignore_sigpipe();
}

FdChannel::~FdChannel() {
  if (write_fd_ >= 0) ::close(write_fd_);
  if (read_fd_ >= 0 && read_fd_ != write_fd_) ::close(read_fd_);
}

void FdChannel::write_line(std::string_view line) {
  std::string framed(line);
  framed.push_back('\n');
  std::size_t off = 0;
  while (off < framed.size()) {
    ssize_t n = ::write(write_fd_, framed.data() + off, framed.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      unavailable(std::string("write failed: ") + std::strerror(errno));
    }
    off += static_cast<std::size_t>(n);
  }
}

std::optional<std::string> FdChannel::read_line(std::chrono::milliseconds timeout) {
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  while (true) {
    std::size_t nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) return std::nullopt;
    pollfd pfd{read_fd_, POLLIN, 0};
    int ready = ::poll(&pfd, 1, static_cast<int>(left.count()));
    if (ready < 0) {
      if (errno == EINTR) continue;
      unavailable(std::string("poll failed: ") + std::strerror(errno));
    }
    if (ready == 0) return std::nullopt;
    char chunk[4096];
    ssize_t n = ::read(read_fd_, chunk, sizeof(chunk));
    if (n < 0) {
      if (errno == EINTR) continue;
      unavailable(std::string("read failed: ") + std::strerror(errno));
    }
    if (n == 0) unavailable("scorer closed the connection");
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

std::unique_ptr<LineChannel> connect_tcp(const std::string &host, std::uint16_t port) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo *res = nullptr;
  std::string service = std::to_string(port);
  if (int rc = ::getaddrinfo(host.c_str(), service.c_str(), &hints, &res); rc != 0) {
    unavailable("cannot resolve " + host + ": " + ::gai_strerror(rc));
  }
  int fd = -1;
  for (addrinfo *ai = res; ai != nullptr; ai = ai->ai_next) {
    fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) continue;
    if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) break;
    ::close(fd);
    fd = -1;
  }
  ::freeaddrinfo(res);
  if (fd < 0) unavailable("cannot connect to " + host + ":" + service);
  int write_fd = ::dup(fd);
  if (write_fd < 0) {
    ::close(fd);
    unavailable("dup failed");
  }
  return std::make_unique<FdChannel>(fd, write_fd);
}

std::unique_ptr<LineChannel> spawn_stdio(const std::string &command) {
  ignore_sigpipe();
  int to_child[2];
  int from_child[2];
  if (::pipe2(to_child, O_CLOEXEC) != 0) unavailable("pipe failed");
  if (::pipe2(from_child, O_CLOEXEC) != 0) {
    ::close(to_child[0]);
    ::close(to_child[1]);
    unavailable("pipe failed");
  }
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, to_child[0], STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, from_child[1], STDOUT_FILENO);

  const char *argv[] = {"/bin/sh", "-c", command.c_str(), nullptr};
  pid_t pid = 0;
  int rc = ::posix_spawn(&pid, "/bin/sh", &actions, nullptr, const_cast<char *const *>(argv),
                         environ);
  posix_spawn_file_actions_destroy(&actions);
  ::close(to_child[0]);
  ::close(from_child[1]);
  if (rc != 0) {
    ::close(to_child[1]);
    ::close(from_child[0]);
    unavailable("cannot spawn '" + command + "': " + std::strerror(rc));
  }
  return std::make_unique<ProcessChannel>(pid, from_child[0], to_child[1]);
}

std::unique_ptr<LineChannel> open_scorer(std::string_view endpoint) {
  if (endpoint.starts_with("stdio:")) {
    std::string command(endpoint.substr(6));
    if (command.empty()) throw Error(ErrorCode::kConfig, "empty stdio scorer command");
    return spawn_stdio(command);
  }
  if (endpoint.starts_with("tcp:")) {
    std::string_view rest = endpoint.substr(4);
    std::size_t colon = rest.rfind(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::kConfig, "expected tcp:host:port, got '" + std::string(endpoint) + "'");
    }
    std::string host(rest.substr(0, colon));
    std::string port_text(rest.substr(colon + 1));
    int port = 0;
    try {
      port = std::stoi(port_text);
    } catch (const std::exception &) {
      port = -1;
    }
    if (host.empty() || port <= 0 || port > 65535) {
      throw Error(ErrorCode::kConfig, "bad tcp endpoint '" + std::string(endpoint) + "'");
    }
    return connect_tcp(host, static_cast<std::uint16_t>(port));
  }
  throw Error(ErrorCode::kConfig, "unknown scorer endpoint '" + std::string(endpoint) + "'");
}

RemoteScorer::RemoteScorer(std::unique_ptr<LineChannel> channel, RemoteScorerOptions options)
    : channel_(std::move(channel)), options_(options) {
  if (options_.max_in_flight == 0) options_.max_in_flight = 1;
}

ScoreResponse RemoteScorer::receive() {
  std::optional<std::string> line = channel_->read_line(options_.timeout);
  if (!line) unavailable("timed out waiting for scorer reply");
  try {
    return decode_response(*line);
  } catch (const Error &e) {
    unavailable(std::string("malformed reply: ") + e.what());
  }
}

Prediction RemoteScorer::score(const AdSample &sample, const CandidateSet &cset) {
  ScoringItem item{&sample, cset};
  return score_all(std::span<const ScoringItem>(&item, 1)).front();
}

std::vector<Prediction> RemoteScorer::score_all(std::span<const ScoringItem> items) {
  std::vector<std::optional<Prediction>> results(items.size());
  std::map<std::int64_t, std::size_t> pending;
  std::size_t next = 0;

  while (next < items.size() || !pending.empty()) {
    while (next < items.size() && pending.size() < options_.max_in_flight) {
      const ScoringItem &item = items[next];
      if (item.candidates.candidates.empty()) {
        results[next] = no_prediction(item.sample->id);
        ++next;
        continue;
      }
      std::int64_t id = next_id_++;
      channel_->write_line(encode_request(make_request(id, *item.sample, item.candidates)));
      pending.emplace(id, next);
      ++next;
    }
    if (pending.empty()) continue;

    ScoreResponse resp = receive();
    auto it = pending.find(resp.id);
    if (it == pending.end()) unavailable("reply for unknown id " + std::to_string(resp.id));
    const ScoringItem &item = items[it->second];
    if (resp.scores.size() != item.candidates.candidates.size()) {
      unavailable("expected " + std::to_string(item.candidates.candidates.size()) +
                  " scores, got " + std::to_string(resp.scores.size()));
    }
    results[it->second] = make_prediction(item.sample->id, item.candidates, resp.scores);
    pending.erase(it);
  }

  std::vector<Prediction> out;
  out.reserve(results.size());
  for (auto &r : results) out.push_back(std::move(*r));
  return out;
}

}  // namespace acroforge
