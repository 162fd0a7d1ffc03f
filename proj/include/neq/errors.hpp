// Copyright 2026 The neq authors
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

#ifndef NEQ_ERRORS_HPP
#define NEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace neq {

// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

struct InvalidDimensions : Error {
    explicit InvalidDimensions(const std::string &msg) : Error(msg) {}
};

struct NotHermitian : Error {
    explicit NotHermitian(const std::string &msg) : Error(msg) {}
};

struct NotPsd : Error {
    explicit NotPsd(const std::string &msg) : Error(msg) {}
};

struct SupportError : Error {
    explicit SupportError(const std::string &msg) : Error(msg) {}
};

struct InvalidProjector : Error {
    explicit InvalidProjector(const std::string &msg) : Error(msg) {}
};

struct InvalidChannel : Error {
    explicit InvalidChannel(const std::string &msg) : Error(msg) {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string &msg) : Error(msg) {}
};

struct SolverFailure : Error {
    explicit SolverFailure(const std::string &msg) : Error(msg) {}
};

struct InvalidFunction : Error {
    explicit InvalidFunction(const std::string &msg) : Error(msg) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string &msg) : Error(msg) {}
};

struct ConstructionFailed : Error {
    explicit ConstructionFailed(const std::string &msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string &msg) : Error(msg) {}
};

}  // namespace neq

#endif
