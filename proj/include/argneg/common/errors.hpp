/*
 * Copyright 2026 The argneg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace argneg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unknown ids, id collisions, malformed arguments to an operation.
class InputError : public Error {
public:
    using Error::Error;
};

// Document could not be read as a structured tree; `where` is a byte offset or a JSON pointer.
class ParseError : public Error {
public:
    ParseError(const std::string& where, const std::string& what)
        : Error(where + ": " + what), location_(where) {}
    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

// Document parsed but violates a schema invariant (dangling reference, duplicate index, ...).
class ValidationError : public Error {
public:
    ValidationError(const std::string& where, const std::string& what)
        : Error(where + ": " + what), location_(where) {}
    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

// Operation called outside its domain (e.g. defense chain of a rejected argument).
class DomainError : public Error {
public:
    using Error::Error;
};

// A pluggable provider (classifier, agent, embedder, ...) failed.
class ProviderError : public Error {
public:
    using Error::Error;
};

}  // namespace argneg
