// Copyright 2026 The TYPIC Toolkit Authors.
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

#include <sstream>

#include "typic/error.h"
#include "typic/service.h"

namespace typic {

EventLog::EventLog(std::filesystem::path path) : path_(std::move(path)) {
  if (path_.empty()) return;
  if (path_.has_parent_path()) {
    std::filesystem::create_directories(path_.parent_path());
  }
  out_.open(path_, std::ios::binary | std::ios::app);
  if (!out_) {
    throw Error(ErrorCode::kIoError, "cannot open event log " + path_.string());
  }
}

std::vector<nlohmann::json> EventLog::ReadAll() const {
  if (path_.empty()) return memory_;
  std::vector<nlohmann::json> out;
  std::istringstream in(ReadFile(path_));
  std::string line;
  size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    try {
      out.push_back(nlohmann::json::parse(line));
    } catch (const nlohmann::json::exception &e) {
      throw Error(ErrorCode::kSchemaError, path_.string() + ":" +
                                               std::to_string(number) + ": " +
                                               e.what());
    }
  }
  return out;
}

void EventLog::Append(const nlohmann::json &event) {
  if (path_.empty()) {
    memory_.push_back(event);
    return;
  }
  out_ << event.dump() << "\n";
  out_.flush();
  if (!out_) {
    throw Error(ErrorCode::kIoError, "cannot append to " + path_.string());
  }
}

}  // namespace typic
