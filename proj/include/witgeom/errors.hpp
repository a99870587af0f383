// Copyright 2026 The witgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace witgeom {

/// Caller supplied parameters outside an operation's domain.
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Two routes to the same object disagreed. Indicates a bug, not bad input.
class ConsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// A constructed matrix failed the positivity requirement of a density.
class NotPsdError : public InputError {
   public:
    using InputError::InputError;
};

}  // namespace witgeom
