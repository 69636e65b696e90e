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

// Stand-in scorer speaking the NDJSON wire protocol on stdin/stdout or on a
// TCP port. Each candidate's score is its index, so the last candidate wins.
// Other modes produce broken replies for exercising client error paths.

#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "acroforge/scorer.hpp"

namespace {

// Returns the reply line, or nullopt to stay silent.
std::optional<std::string> reply(const std::string &mode, const std::string &line) {
  acroforge::ScoreRequest req = acroforge::decode_request(line);
  acroforge::ScoreResponse resp;
  resp.id = req.id;
  for (std::size_t i = 0; i < req.candidates.size(); ++i) {
    resp.scores.push_back(static_cast<double>(i));
  }
  if (mode == "short") {
    if (!resp.scores.empty()) resp.scores.pop_back();
  } else if (mode == "garbage") {
    return std::string("this is not json");
  } else if (mode == "wrong-id") {
    resp.id += 1000000;
  } else if (mode == "null-score") {
    return "{\"id\":" + std::to_string(req.id) + ",\"scores\":[null]}";
  } else if (mode == "silent") {
    return std::nullopt;
  }
  return acroforge::encode_response(resp);
}

void serve_fd(const std::string &mode, int in_fd, int out_fd) {
  std::string buffer;
  char chunk[4096];
  while (true) {
    ssize_t n = ::read(in_fd, chunk, sizeof(chunk));
    if (n <= 0) return;
    buffer.append(chunk, static_cast<std::size_t>(n));
    std::size_t nl;
    while ((nl = buffer.find('\n')) != std::string::npos) {
      std::string line = buffer.substr(0, nl);
      buffer.erase(0, nl + 1);
      if (line.empty()) continue;
      std::optional<std::string> out;
      try {
        out = reply(mode, line);
      } catch (const std::exception &e) {
        std::cerr << "echo-scorer: " << e.what() << "\n";
        continue;
      }
      if (!out) continue;
      out->push_back('\n');
      if (::write(out_fd, out->data(), out->size()) < 0) return;
    }
  }
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"echo scorer stub"};
  std::string mode = "echo";
  int port = 0;
  app.add_option("--mode", mode)
      ->check(CLI::IsMember({"echo", "short", "garbage", "wrong-id", "null-score", "silent"}));
  app.add_option("--listen", port, "serve on this TCP port instead of stdio");
  CLI11_PARSE(app, argc, argv);

  if (port == 0) {
    serve_fd(mode, STDIN_FILENO, STDOUT_FILENO);
    return 0;
  }
  int server = ::socket(AF_INET, SOCK_STREAM, 0);
  int one = 1;
  ::setsockopt(server, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = htons(static_cast<std::uint16_t>(port));
  if (::bind(server, reinterpret_cast<sockaddr *>(&addr), sizeof(addr)) != 0 ||
      ::listen(server, 8) != 0) {
    std::perror("echo-scorer");
    return 1;
  }
  while (true) {
    int client = ::accept(server, nullptr, nullptr);
    if (client < 0) continue;
    serve_fd(mode, client, client);
    ::close(client);
  }
}
