// Copyright 2026 The Sylla Authors.
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

#ifndef SYLLA_ERROR_HPP
#define SYLLA_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sylla {

enum class ErrorKind {
  contract_violation,
  numeral_unsupported,
  unknown_symbol,
  configuration,
  parse,
  io,
  undefined_metric,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::contract_violation: return "contract-violation";
    case ErrorKind::numeral_unsupported: return "numeral-unsupported";
    case ErrorKind::unknown_symbol: return "unknown-symbol";
    case ErrorKind::configuration: return "configuration";
    case ErrorKind::parse: return "parse";
    case ErrorKind::io: return "io";
    case ErrorKind::undefined_metric: return "undefined-metric";
  }
  return "unknown";
}

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class UnknownSymbolError : public Error {
 public:
  explicit UnknownSymbolError(std::string symbol)
      : Error(ErrorKind::unknown_symbol, "unknown symbol '" + symbol + "'"),
        symbol_(std::move(symbol)) {}

  const std::string& symbol() const noexcept { return symbol_; }

 private:
  std::string symbol_;
};

/// Raised by strict-mode loaders; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::string path, std::size_t line, const std::string& detail)
      : Error(ErrorKind::parse,
              path + ":" + std::to_string(line) + ": " + detail),
        path_(std::move(path)), line_(line) {}

  const std::string& path() const noexcept { return path_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string path_;
  std::size_t line_;
};

}  // namespace sylla

#endif  // SYLLA_ERROR_HPP
