// Copyright 2026 The routegame Authors.
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

#ifndef ROUTEGAME_ERROR_HPP_
#define ROUTEGAME_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace routegame {

enum class ErrorKind {
  kParse,          // malformed input text or document
  kDomain,         // value outside the operation's domain (infeasible, out of range)
  kShape,          // profile lengths disagree with the network
  kInvalidSubset,  // edge index out of range
  kSize,           // an enumeration or table cap was exceeded
  kInternal,       // broken invariant; indicates a bug
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace routegame

#endif  // ROUTEGAME_ERROR_HPP_
