// Copyright 2026 The qgavg developers
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

#pragma once

#include <stdexcept>
#include <string>

namespace qgavg {

enum class Errc {
  SingularGram,
  NoSolution,
  NonUnique,
  NotPositive,
  NotKac,
  NotCovariant,
  NotClassical,
  NotAGroup,
  NotAnAction,
  ParseError,
  Inconsistent,
  InvariantViolation,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::SingularGram: return "SingularGram";
    case Errc::NoSolution: return "NoSolution";
    case Errc::NonUnique: return "NonUnique";
    case Errc::NotPositive: return "NotPositive";
    case Errc::NotKac: return "NotKac";
    case Errc::NotCovariant: return "NotCovariant";
    case Errc::NotClassical: return "NotClassical";
    case Errc::NotAGroup: return "NotAGroup";
    case Errc::NotAnAction: return "NotAnAction";
    case Errc::ParseError: return "ParseError";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Errc code;
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

inline void require(bool cond, Errc c, const std::string& msg) {
  if (!cond) throw Error(c, msg);
}

}  // namespace qgavg
