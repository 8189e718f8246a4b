// Copyright 2026 The bcpaths Authors
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

#ifndef BCP__ERROR_HPP_
#define BCP__ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace bcp
{

enum class ErrorCode
{
  InvalidParameter,
  InsufficientData,
  InvalidInput,
  ClassUnreachableAtCap,
  CorruptedLift,
  SingularProjection,
  CurvatureViolation,
  FragmentInvalid,
  InvalidAxis,
  PushInfeasible,
  SkewInfeasible,
  OracleUnreachable,
};

std::string_view to_string(ErrorCode code);

/// Usage errors (bad parameters, malformed input) versus domain outcomes
/// (infeasible construction, unreachable class) are distinguished by the CLI.
bool is_domain_error(ErrorCode code);

class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, const std::string & what)
  : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept {return code_;}

private:
  ErrorCode code_;
};

}  // namespace bcp

#endif  // BCP__ERROR_HPP_
