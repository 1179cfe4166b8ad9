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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "suptrop/cli.hpp"

namespace {

struct Case {
  std::string name;
  int exit_code = 0;
  std::vector<std::string> args;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<Case> load_cases() {
  std::ifstream in(std::string(GOLDEN_DIR) + "/cases.txt");
  std::vector<Case> cases;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    const auto p1 = line.find('|'), p2 = line.find('|', p1 + 1);
    Case c{trim(line.substr(0, p1)), std::stoi(trim(line.substr(p1 + 1, p2 - p1 - 1))), {}};
    std::istringstream words(line.substr(p2 + 1));
    for (std::string w; words >> w;) c.args.push_back(w);
    cases.push_back(std::move(c));
  }
  return cases;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Result {
  int code;
  std::string out, err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = suptrop::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("golden files") {
  const bool update = std::getenv("SUPTROP_UPDATE_GOLDEN") != nullptr;
  std::filesystem::current_path(GOLDEN_DIR);
  const auto cases = load_cases();
  REQUIRE(cases.size() >= 10);
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const auto r = invoke(c.args);
    const std::string base = std::string(GOLDEN_DIR) + "/" + c.name;
    if (update) {
      std::ofstream(base + ".out") << r.out;
      std::ofstream(base + ".err") << r.err;
    }
    CHECK(r.code == c.exit_code);
    CHECK(r.out == read_file(base + ".out"));
    CHECK(r.err == read_file(base + ".err"));
  }
}

TEST_CASE("output is identical across runs") {
  std::filesystem::current_path(GOLDEN_DIR);
  for (const auto& c : load_cases()) {
    CAPTURE(c.name);
    const auto a = invoke(c.args), b = invoke(c.args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}

TEST_CASE("help exits cleanly") {
  const auto r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("saturate") != std::string::npos);
}
