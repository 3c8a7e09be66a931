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

#include "qrouter/qasm.h"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace qrouter::qasm {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::UnknownGate: return "UnknownGate";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::DuplicateRegister: return "DuplicateRegister";
        case ErrorKind::MissingHeader: return "MissingHeader";
    }
    return "SyntaxError";
}

ParseError::ParseError(ErrorKind kind, int line, int column, const std::string& message)
    : std::runtime_error(std::string(error_kind_name(kind)) + " at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Ident, Number, String, Semi, Comma, LBracket, RBracket, Arrow, End };

struct Token {
    Tok type;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_space_and_comments();
        const int line = line_;
        const int col = col_;
        if (pos_ >= src_.size()) {
            return {Tok::End, "", line, col};
        }
        const char ch = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string text;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                text += advance();
            }
            return {Tok::Ident, text, line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string text;
            while (pos_ < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) {
                text += advance();
            }
            return {Tok::Number, text, line, col};
        }
        if (ch == '"') {
            advance();
            std::string text;
            while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
                text += advance();
            }
            if (pos_ >= src_.size() || src_[pos_] != '"') {
                throw ParseError(ErrorKind::SyntaxError, line, col, "unterminated string");
            }
            advance();
            return {Tok::String, text, line, col};
        }
        if (ch == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            advance();
            advance();
            return {Tok::Arrow, "->", line, col};
        }
        advance();
        switch (ch) {
            case ';': return {Tok::Semi, ";", line, col};
            case ',': return {Tok::Comma, ",", line, col};
            case '[': return {Tok::LBracket, "[", line, col};
            case ']': return {Tok::RBracket, "]", line, col};
            default: break;
        }
        std::string shown(1, ch);
        if (!std::isprint(static_cast<unsigned char>(ch))) {
            shown = "\\x" + std::to_string(static_cast<unsigned char>(ch));
        }
        throw ParseError(ErrorKind::SyntaxError, line, col, "unexpected character '" + shown + "'");
    }

private:
    char advance() {
        const char ch = src_[pos_++];
        if (ch == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return ch;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            const char ch = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(ch))) {
                advance();
            } else if (ch == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance();
                }
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

struct Register {
    std::string name;
    int size = 0;
};

struct Operand {
    int index = -1;  // -1 for a whole-register reference
    Token at;
};

struct PendingInstruction {
    Instruction inst;
    Token at;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { current_ = lexer_.next(); }

    Circuit run(std::string name) {
        header();
        while (current_.type != Tok::End) {
            statement();
        }
        if (!qreg_) {
            throw ParseError(ErrorKind::SyntaxError, current_.line, current_.column,
                             "program declares no qreg");
        }
        Circuit circuit(qreg_->size, creg_ ? creg_->size : 0, std::move(name));
        for (const auto& p : pending_) {
            try {
                circuit.append(p.inst);
            } catch (const std::invalid_argument& e) {
                throw ParseError(ErrorKind::SyntaxError, p.at.line, p.at.column, e.what());
            }
        }
        return circuit;
    }

private:
    Token take() {
        Token t = current_;
        current_ = lexer_.next();
        return t;
    }

    [[noreturn]] void fail(ErrorKind kind, const Token& at, const std::string& message) {
        throw ParseError(kind, at.line, at.column, message);
    }

    Token expect(Tok type, const char* what) {
        if (current_.type != type) {
            fail(ErrorKind::SyntaxError, current_,
                 std::string("expected ") + what + ", found '" + current_.text + "'");
        }
        return take();
    }

    void header() {
        if (current_.type != Tok::Ident || current_.text != "OPENQASM") {
            fail(ErrorKind::MissingHeader, current_, "program must start with 'OPENQASM 2.0;'");
        }
        take();
        const Token version = expect(Tok::Number, "version number");
        if (version.text != "2.0" && version.text != "2") {
            fail(ErrorKind::SyntaxError, version, "unsupported OPENQASM version " + version.text);
        }
        expect(Tok::Semi, "';'");
    }

    int integer(const Token& t) {
        if (t.text.find('.') != std::string::npos) {
            fail(ErrorKind::SyntaxError, t, "expected an integer, found '" + t.text + "'");
        }
        if (t.text.size() > 9) {
            fail(ErrorKind::IndexOutOfRange, t, "integer '" + t.text + "' too large");
        }
        return std::stoi(t.text);
    }

    void statement() {
        const Token head = expect(Tok::Ident, "statement");
        if (head.text == "include") {
            expect(Tok::String, "file name");
            expect(Tok::Semi, "';'");
        } else if (head.text == "qreg" || head.text == "creg") {
            declaration(head);
        } else if (head.text == "measure") {
            measure(head);
        } else if (head.text == "barrier") {
            barrier(head);
        } else if (head.text == "OPENQASM") {
            fail(ErrorKind::SyntaxError, head, "repeated OPENQASM header");
        } else if (auto kind = gate_from_name(head.text)) {
            gate(head, *kind);
        } else {
            fail(ErrorKind::UnknownGate, head, "unknown gate '" + head.text + "'");
        }
    }

    void declaration(const Token& head) {
        const bool quantum = head.text == "qreg";
        std::optional<Register>& slot = quantum ? qreg_ : creg_;
        const Token name = expect(Tok::Ident, "register name");
        expect(Tok::LBracket, "'['");
        const Token size_tok = expect(Tok::Number, "register size");
        const int size = integer(size_tok);
        expect(Tok::RBracket, "']'");
        expect(Tok::Semi, "';'");
        if (slot) {
            fail(ErrorKind::DuplicateRegister, head, "only one " + head.text + " is supported");
        }
        const auto& other = quantum ? creg_ : qreg_;
        if (other && other->name == name.text) {
            fail(ErrorKind::DuplicateRegister, name, "register name '" + name.text + "' already used");
        }
        if (size < 1 || size > kMaxRegisterSize) {
            fail(ErrorKind::IndexOutOfRange, size_tok,
                 "register size must be in [1, " + std::to_string(kMaxRegisterSize) + "]");
        }
        slot = Register{name.text, size};
    }

    Operand operand(const std::optional<Register>& reg, const char* kind, bool allow_whole) {
        const Token name = expect(Tok::Ident, kind);
        if (!reg || reg->name != name.text) {
            fail(ErrorKind::SyntaxError, name, std::string("undeclared ") + kind + " '" + name.text + "'");
        }
        if (current_.type != Tok::LBracket) {
            if (!allow_whole) {
                expect(Tok::LBracket, "'['");
            }
            return {-1, name};
        }
        take();
        const Token idx_tok = expect(Tok::Number, "index");
        const int idx = integer(idx_tok);
        expect(Tok::RBracket, "']'");
        if (idx >= reg->size) {
            fail(ErrorKind::IndexOutOfRange, idx_tok,
                 "index " + std::to_string(idx) + " out of range for " + name.text + "[" +
                     std::to_string(reg->size) + "]");
        }
        return {idx, name};
    }

    void check_distinct(const std::vector<Operand>& ops) {
        for (std::size_t i = 0; i < ops.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (ops[i].index == ops[j].index) {
                    fail(ErrorKind::IndexOutOfRange, ops[i].at,
                         "qubit " + std::to_string(ops[i].index) + " repeated as operand");
                }
            }
        }
    }

    void gate(const Token& head, GateKind kind) {
        std::vector<Operand> ops{operand(qreg_, "qreg", false)};
        while (current_.type == Tok::Comma) {
            take();
            ops.push_back(operand(qreg_, "qreg", false));
        }
        expect(Tok::Semi, "';'");
        if (static_cast<int>(ops.size()) != gate_arity(kind)) {
            fail(ErrorKind::SyntaxError, head,
                 head.text + " takes " + std::to_string(gate_arity(kind)) + " operand(s)");
        }
        check_distinct(ops);
        Instruction inst{InstructionKind::Gate, kind, {}, -1};
        for (const auto& op : ops) {
            inst.qubits.push_back(op.index);
        }
        pending_.push_back({std::move(inst), head});
    }

    void measure(const Token& head) {
        const Operand q = operand(qreg_, "qreg", false);
        expect(Tok::Arrow, "'->'");
        const Operand c = operand(creg_, "creg", false);
        expect(Tok::Semi, "';'");
        pending_.push_back({Instruction{InstructionKind::Measure, GateKind::H, {q.index}, c.index}, head});
    }

    void barrier(const Token& head) {
        std::vector<Operand> ops{operand(qreg_, "qreg", true)};
        while (current_.type == Tok::Comma) {
            take();
            ops.push_back(operand(qreg_, "qreg", true));
        }
        expect(Tok::Semi, "';'");
        Instruction inst{InstructionKind::Barrier, GateKind::H, {}, -1};
        for (const auto& op : ops) {
            if (op.index < 0) {
                if (ops.size() != 1) {
                    fail(ErrorKind::SyntaxError, op.at, "whole-register barrier cannot be mixed with indices");
                }
                for (int q = 0; q < qreg_->size; ++q) {
                    inst.qubits.push_back(q);
                }
                pending_.push_back({std::move(inst), head});
                return;
            }
        }
        check_distinct(ops);
        for (const auto& op : ops) {
            inst.qubits.push_back(op.index);
        }
        pending_.push_back({std::move(inst), head});
    }

    Lexer lexer_;
    Token current_;
    std::optional<Register> qreg_;
    std::optional<Register> creg_;
    std::vector<PendingInstruction> pending_;
};

}  // namespace

Circuit parse(std::string_view source, std::string name) { return Parser(source).run(std::move(name)); }

std::string serialize(const Circuit& c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << c.n_qubits() << "];\n";
    if (c.n_clbits() > 0) {
        out << "creg c[" << c.n_clbits() << "];\n";
    }
    for (const auto& inst : c.instructions()) {
        switch (inst.kind) {
            case InstructionKind::Gate:
                out << gate_name(inst.gate) << ' ';
                break;
            case InstructionKind::Measure:
                out << "measure q[" << inst.qubits[0] << "] -> c[" << inst.clbit << "];\n";
                continue;
            case InstructionKind::Barrier:
                out << "barrier ";
                break;
        }
        for (std::size_t i = 0; i < inst.qubits.size(); ++i) {
            out << (i ? ", " : "") << "q[" << inst.qubits[i] << "]";
        }
        out << ";\n";
    }
    return out.str();
}

}  // namespace qrouter::qasm
