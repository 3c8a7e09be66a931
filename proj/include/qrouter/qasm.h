// Copyright 2026 The qrouter Authors
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

// Reader and writer for the OpenQASM 2.0 subset used by the router circuits:
//
//   OPENQASM 2.0;
//   include "qelib1.inc";          accepted and ignored
//   qreg q[n];  creg c[n];         at most one of each
//   h|x|s|sdg|t|tdg q[i];
//   cx q[i],q[j];
//   measure q[i] -> c[j];
//   barrier q;  barrier q[i],q[j],...;
//   // line comments

#ifndef QROUTER_QASM_H
#define QROUTER_QASM_H

#include <stdexcept>
#include <string>
#include <string_view>

#include "qrouter/gates.h"

namespace qrouter::qasm {

enum class ErrorKind { UnknownGate, IndexOutOfRange, SyntaxError, DuplicateRegister, MissingHeader };

std::string_view error_kind_name(ErrorKind kind);

class ParseError : public std::runtime_error {
public:
    ParseError(ErrorKind kind, int line, int column, const std::string& message);

    ErrorKind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    ErrorKind kind_;
    int line_;
    int column_;
};

/// Largest register accepted by the parser.
inline constexpr int kMaxRegisterSize = 64;

/// Throws ParseError with a 1-based line/column on any malformed input.
Circuit parse(std::string_view source, std::string name = {});

/// Canonical text: one statement per line, ", " between operands.
/// parse(serialize(c)) == c for every circuit.
std::string serialize(const Circuit& c);

}  // namespace qrouter::qasm

#endif  // QROUTER_QASM_H
