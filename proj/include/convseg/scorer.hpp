// Copyright 2026 The convseg Authors.
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

#ifndef CONVSEG_SCORER_HPP_
#define CONVSEG_SCORER_HPP_

#include <cerrno>
#include <cmath>
#include <csignal>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <functional>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <nlohmann/json.hpp>

#include "httplib.h"

#include "convseg/corpus.hpp"
#include "convseg/error.hpp"
#include "convseg/segmenters.hpp"

namespace convseg {

// Wire protocol, one JSON object per message:
//   request:  {"doc_id": str, "text": str, "candidates": [int]}
//   response: {"doc_id": str, "probabilities": [float]}
// or {"error": str} when the scorer rejects a request.

struct ScoreRequest {
  std::string doc_id;
  std::string text;
  std::vector<std::size_t> candidates;

  static ScoreRequest from_document(const Document& doc) {
    return {doc.id, doc.text, doc.candidates};
  }
};

inline std::string encode_request(const ScoreRequest& r) {
  return nlohmann::json{{"doc_id", r.doc_id}, {"text", r.text}, {"candidates", r.candidates}}
      .dump();
}

// Server side. Throws ErrorKind::kFormat on a malformed request.
inline ScoreRequest decode_request(std::string_view body) {
  ScoreRequest r;
  try {
    nlohmann::json j = nlohmann::json::parse(body);
    r.doc_id = j.at("doc_id").get<std::string>();
    r.text = j.at("text").get<std::string>();
    r.candidates = j.at("candidates").get<std::vector<std::size_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kFormat, std::string("malformed score request: ") + e.what());
  }
  return r;
}

inline std::string encode_response(const std::string& doc_id,
                                   const std::vector<double>& probabilities) {
  return nlohmann::json{{"doc_id", doc_id}, {"probabilities", probabilities}}.dump();
}

inline std::string encode_error(const std::string& message) {
  return nlohmann::json{{"error", message}}.dump();
}

// Client side. Each failure class maps to its own ErrorKind.
inline std::vector<double> decode_response(std::string_view body, const ScoreRequest& request) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kMalformedResponse, std::string("scorer response is not JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::kMalformedResponse, "scorer response is not an object");
  if (auto err = j.find("error"); err != j.end()) {
    throw Error(ErrorKind::kScorerRejected,
                "scorer rejected " + request.doc_id + ": " +
                    (err->is_string() ? err->get<std::string>() : err->dump()));
  }
  auto id = j.find("doc_id");
  if (id == j.end() || !id->is_string() || id->get<std::string>() != request.doc_id) {
    throw Error(ErrorKind::kMalformedResponse,
                "scorer response doc_id does not match request " + request.doc_id);
  }
  auto probs = j.find("probabilities");
  if (probs == j.end() || !probs->is_array()) {
    throw Error(ErrorKind::kMalformedResponse, "scorer response lacks a probabilities array");
  }
  std::vector<double> out;
  out.reserve(probs->size());
  for (const auto& p : *probs) {
    if (!p.is_number()) throw Error(ErrorKind::kMalformedResponse, "non-numeric probability");
    out.push_back(p.get<double>());
  }
  if (out.size() != request.candidates.size()) {
    throw Error(ErrorKind::kCountMismatch,
                "scorer returned " + std::to_string(out.size()) + " probabilities for " +
                    std::to_string(request.candidates.size()) + " candidates");
  }
  for (double p : out) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorKind::kProbabilityRange,
                  "scorer probability " + std::to_string(p) + " outside [0, 1]");
    }
  }
  return out;
}

// Carries one encoded request to a scorer and returns the raw response.
class ScorerTransport {
 public:
  virtual ~ScorerTransport() = default;
  virtual std::string exchange(const std::string& request) = 0;
};

// In-process scorer, mostly for tests.
class FunctionTransport final : public ScorerTransport {
 public:
  explicit FunctionTransport(std::function<std::string(const std::string&)> fn)
      : fn_(std::move(fn)) {}

  std::string exchange(const std::string& request) override { return fn_(request); }

 private:
  std::function<std::string(const std::string&)> fn_;
};

// Newline-delimited JSON over a stream pair.
class StreamTransport final : public ScorerTransport {
 public:
  StreamTransport(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::string exchange(const std::string& request) override {
    out_ << request << '\n' << std::flush;
    if (!out_) throw Error(ErrorKind::kTransport, "scorer stream closed on write");
    std::string line;
    if (!std::getline(in_, line)) throw Error(ErrorKind::kTransport, "scorer stream closed");
    return line;
  }

 private:
  std::istream& in_;
  std::ostream& out_;
};

// POST <path> on an HTTP scorer.
class HttpTransport final : public ScorerTransport {
 public:
  HttpTransport(std::string host, int port, std::string path = "/score")
      : client_(std::move(host), port), path_(std::move(path)) {
    client_.set_connection_timeout(5);
    client_.set_read_timeout(60);
  }

  std::string exchange(const std::string& request) override {
    auto res = client_.Post(path_, request, "application/json");
    if (!res) {
      throw Error(ErrorKind::kTransport, "scorer HTTP request failed: " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
      // Protocol errors still carry a JSON body worth surfacing.
      if (res->body.find("\"error\"") != std::string::npos) return res->body;
      throw Error(ErrorKind::kTransport, "scorer returned HTTP " + std::to_string(res->status));
    }
    return res->body;
  }

 private:
  httplib::Client client_;
  std::string path_;
};

// Runs a scorer as a child process speaking NDJSON on stdin/stdout. SIGPIPE
// is ignored process-wide so a dead child surfaces as a transport error.
class ProcessTransport final : public ScorerTransport {
 public:
  explicit ProcessTransport(std::vector<std::string> argv) {
    if (argv.empty()) throw Error(ErrorKind::kInvalidArgument, "scorer command is empty");
    std::signal(SIGPIPE, SIG_IGN);
    int to_child[2], from_child[2];
    if (pipe(to_child) != 0) throw Error(ErrorKind::kTransport, "pipe failed");
    if (pipe(from_child) != 0) {
      close(to_child[0]);
      close(to_child[1]);
      throw Error(ErrorKind::kTransport, "pipe failed");
    }
    pid_ = fork();
    if (pid_ < 0) throw Error(ErrorKind::kTransport, "fork failed");
    if (pid_ == 0) {
      dup2(to_child[0], STDIN_FILENO);
      dup2(from_child[1], STDOUT_FILENO);
      close(to_child[0]);
      close(to_child[1]);
      close(from_child[0]);
      close(from_child[1]);
      std::vector<char*> args;
      for (std::string& a : argv) args.push_back(a.data());
      args.push_back(nullptr);
      execvp(args[0], args.data());
      _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);
    write_ = fdopen(to_child[1], "w");
    read_ = fdopen(from_child[0], "r");
  }

  ProcessTransport(const ProcessTransport&) = delete;
  ProcessTransport& operator=(const ProcessTransport&) = delete;

  ~ProcessTransport() override {
    if (write_) std::fclose(write_);
    if (read_) std::fclose(read_);
    if (pid_ > 0) {
      int status = 0;
      waitpid(pid_, &status, 0);
    }
  }

  std::string exchange(const std::string& request) override {
    if (std::fputs(request.c_str(), write_) < 0 || std::fputc('\n', write_) == EOF ||
        std::fflush(write_) != 0) {
      throw Error(ErrorKind::kTransport, std::string("scorer process write failed: ") +
                                             std::strerror(errno));
    }
    std::string line;
    int c;
    while ((c = std::fgetc(read_)) != EOF && c != '\n') line.push_back(static_cast<char>(c));
    if (c == EOF && line.empty()) throw Error(ErrorKind::kTransport, "scorer process closed its output");
    return line;
  }

 private:
  pid_t pid_ = -1;
  FILE* write_ = nullptr;
  FILE* read_ = nullptr;
};

// "http://host:port[/path]" or "exec:command arg...".
inline std::unique_ptr<ScorerTransport> make_transport(const std::string& endpoint) {
  if (endpoint.rfind("http://", 0) == 0) {
    std::string rest = endpoint.substr(7);
    std::string path = "/score";
    if (auto slash = rest.find('/'); slash != std::string::npos) {
      path = rest.substr(slash);
      rest = rest.substr(0, slash);
    }
    auto colon = rest.rfind(':');
    if (colon == std::string::npos) {
      throw Error(ErrorKind::kInvalidArgument, "scorer endpoint needs a port: " + endpoint);
    }
    int port = 0;
    try {
      port = std::stoi(rest.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::kInvalidArgument, "bad scorer port in " + endpoint);
    }
    return std::make_unique<HttpTransport>(rest.substr(0, colon), port, path);
  }
  if (endpoint.rfind("exec:", 0) == 0) {
    std::istringstream in(endpoint.substr(5));
    std::vector<std::string> argv;
    std::string arg;
    while (in >> arg) argv.push_back(arg);
    return std::make_unique<ProcessTransport>(std::move(argv));
  }
  throw Error(ErrorKind::kInvalidArgument, "unsupported scorer endpoint: " + endpoint);
}

// Asks an external scorer for one break probability per candidate and breaks
// where the probability exceeds the threshold.
class ExternalSegmenter final : public Segmenter {
 public:
  explicit ExternalSegmenter(std::shared_ptr<ScorerTransport> transport, double threshold = 0.5)
      : transport_(std::move(transport)), threshold_(threshold) {
    if (!transport_) throw Error(ErrorKind::kInvalidArgument, "external: no transport");
  }

  std::string name() const override { return "External"; }

  std::vector<double> score(const Document& doc) const {
    const ScoreRequest request = ScoreRequest::from_document(doc);
    return decode_response(transport_->exchange(encode_request(request)), request);
  }

 protected:
  std::vector<std::size_t> choose_breaks(const Document& doc, std::uint64_t) const override {
    const std::vector<double> probs = score(doc);
    std::vector<std::size_t> breaks;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      if (probs[i] > threshold_) breaks.push_back(doc.candidates[i]);
    }
    return breaks;
  }

 private:
  std::shared_ptr<ScorerTransport> transport_;
  double threshold_;
};

inline Segmentation external_segment(const Document& doc,
                                     std::shared_ptr<ScorerTransport> transport,
                                     double threshold = 0.5) {
  return ExternalSegmenter(std::move(transport), threshold).segment(doc);
}

}  // namespace convseg

#endif  // CONVSEG_SCORER_HPP_
