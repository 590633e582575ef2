// Copyright 2026 The conflictfair Authors
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

#ifndef CONFLICTFAIR_VALUE_H_
#define CONFLICTFAIR_VALUE_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace conflictfair {

// Exact rational value of a bundle. Always kept in canonical reduced form by
// the backend, so equality and ordering are exact.
using Value = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Raised for any malformed input: bad indices, malformed models, violated
// preconditions of a public operation.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parses "p/q", "p" or "-p/q" (decimal integers). Throws InvalidInput.
Value parse_value(std::string_view text);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string format_value(const Value& value);

// Smallest integer >= value.
Integer ceil_value(const Value& value);

}  // namespace conflictfair

#endif  // CONFLICTFAIR_VALUE_H_
