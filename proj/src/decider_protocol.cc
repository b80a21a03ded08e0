// Copyright 2026 The Authors.
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

#include "matkit/decider_protocol.h"

#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "matkit/errors.h"

namespace matkit {

std::string EncodeQuestion(const DeciderQuestion& q, std::uint64_t seed) {
  nlohmann::json j = {{"n", q.n},           {"k", q.k},
                      {"alpha", q.alpha},   {"cost", q.cost},
                      {"target", q.target}, {"seed", seed}};
  return j.dump();
}

namespace {

// Owns the child process and both pipe ends.
class Child {
 public:
  explicit Child(const std::vector<std::string>& argv) {
    if (argv.empty()) throw InvalidArgument("empty decider command");
    int to_child[2];
    int from_child[2];
    if (pipe(to_child) != 0) throw Error(std::strerror(errno));
    if (pipe(from_child) != 0) {
      close(to_child[0]);
      close(to_child[1]);
      throw Error(std::strerror(errno));
    }
    pid_ = fork();
    if (pid_ < 0) throw Error(std::strerror(errno));
    if (pid_ == 0) {
      dup2(to_child[0], STDIN_FILENO);
      dup2(from_child[1], STDOUT_FILENO);
      close(to_child[0]);
      close(to_child[1]);
      close(from_child[0]);
      close(from_child[1]);
      std::vector<char*> args;
      for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
      args.push_back(nullptr);
      execvp(args[0], args.data());
      _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);
    in_ = fdopen(to_child[1], "w");
    out_ = fdopen(from_child[0], "r");
  }

  ~Child() {
    if (in_) fclose(in_);
    if (out_) fclose(out_);
    if (pid_ > 0) {
      int status = 0;
      if (waitpid(pid_, &status, WNOHANG) == 0) {
        kill(pid_, SIGKILL);
        waitpid(pid_, &status, 0);
      }
    }
  }

  Child(const Child&) = delete;
  Child& operator=(const Child&) = delete;

  void Send(const std::string& line) {
    if (std::fputs(line.c_str(), in_) == EOF || std::fputc('\n', in_) == EOF ||
        std::fflush(in_) != 0) {
      throw ProtocolError("decider closed its input");
    }
  }

  // False at end of stream.
  bool Receive(std::string& line) {
    line.clear();
    int ch;
    while ((ch = std::fgetc(out_)) != EOF) {
      if (ch == '\n') return true;
      line.push_back(static_cast<char>(ch));
    }
    return !line.empty();
  }

  void CloseInput() {
    if (in_) fclose(in_);
    in_ = nullptr;
  }

  // Waits for exit; the verdict is already known, so the status is only
  // reported, not enforced.
  void Wait() {
    int status = 0;
    waitpid(pid_, &status, 0);
    pid_ = -1;
  }

 private:
  pid_t pid_ = -1;
  FILE* in_ = nullptr;
  FILE* out_ = nullptr;
};

ElementSet ParseQuery(const std::string& line, int n) {
  std::istringstream in(line.substr(1));
  ElementSet s;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || e < 1 || e > n) {
      throw ProtocolError("bad element '" + token + "' in query: " + line);
    }
    s.Insert(e);
  }
  return s;
}

}  // namespace

Decider ExternalDecider(std::vector<std::string> argv) {
  if (argv.empty()) throw InvalidArgument("empty decider command");
  return [argv = std::move(argv)](const DeciderQuestion& q,
                                  const MatroidOracle& oracle,
                                  std::uint64_t seed) {
    // A decider that exits early must not kill the harness.
    signal(SIGPIPE, SIG_IGN);
    Child child(argv);
    child.Send(EncodeQuestion(q, seed));
    std::string line;
    while (child.Receive(line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line == "V yes" || line == "V no") {
        child.CloseInput();
        child.Wait();
        return line == "V yes";
      }
      if (!line.empty() && line[0] == 'Q' &&
          (line.size() == 1 || line[1] == ' ')) {
        const ElementSet s = ParseQuery(line, q.n);
        child.Send(oracle.IsIndependent(s) ? "1" : "0");
        continue;
      }
      throw ProtocolError("unexpected line from decider: '" + line + "'");
    }
    throw ProtocolError("decider ended without a verdict");
  };
}

}  // namespace matkit
