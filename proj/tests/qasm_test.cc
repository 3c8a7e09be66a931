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

#include <gtest/gtest.h>

#include <random>

#include "qrouter/router.h"
#include "test_util.h"

using namespace qrouter;
using namespace qrouter::testing;

namespace {

constexpr std::string_view kHeader = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";

qasm::ParseError parse_error(std::string_view src) {
    try {
        qasm::parse(src);
    } catch (const qasm::ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "no error for: " << src;
    return qasm::ParseError(qasm::ErrorKind::SyntaxError, 0, 0, "none");
}

}  // namespace

TEST(Parse, SmallestProgram) {
    const Circuit c = qasm::parse("OPENQASM 2.0;\nqreg q[1];\nh q[0];\n");
    Circuit expected(1);
    expected.h(0);
    EXPECT_EQ(c, expected);
}

TEST(Parse, AllStatements) {
    const std::string src = std::string(kHeader) +
                            "// leading comment\n"
                            "qreg q[3];\ncreg c[3];\n"
                            "h q[0]; x q[1]; s q[2];\n"
                            "sdg q[0];\ntdg q[1];\nt q[2]; // trailing\n"
                            "cx q[0],q[2];\n"
                            "barrier q;\n"
                            "barrier q[0], q[1];\n"
                            "measure q[0] -> c[2];\n";
    const Circuit c = qasm::parse(src);
    Circuit e(3, 3);
    e.h(0).x(1).s(2).sdg(0).tdg(1).t(2).cx(0, 2).barrier({0, 1, 2}).barrier({0, 1}).measure(0, 2);
    EXPECT_EQ(c, e);
}

TEST(Serialize, Goldens) {
    EXPECT_EQ(qasm::serialize(Circuit(1)), std::string(kHeader) + "qreg q[1];\n");
    Circuit c(2);
    c.h(0).cx(0, 1);
    EXPECT_EQ(qasm::serialize(c), std::string(kHeader) + "qreg q[2];\nh q[0];\ncx q[0], q[1];\n");
    Circuit m(2, 1);
    m.barrier({0, 1}).measure(1, 0);
    EXPECT_EQ(qasm::serialize(m),
              std::string(kHeader) + "qreg q[2];\ncreg c[1];\nbarrier q[0], q[1];\nmeasure q[1] -> c[0];\n");
}

TEST(Serialize, RouterCircuitsRoundTrip) {
    for (auto name : {kRouterSuperposition, kRouterControl0, kRouterControl1}) {
        const auto c = named_router_circuit(name);
        ASSERT_TRUE(c.has_value());
        const std::string text = qasm::serialize(*c);
        EXPECT_EQ(qasm::parse(text), *c) << name;
        EXPECT_EQ(qasm::serialize(qasm::parse(text)), text);
    }
}

TEST(ParseErrors, KindsAndPositions) {
    auto e = parse_error("OPENQASM 2.0;\nqreg q[2];\ncx q[0],q[0];\n");
    EXPECT_EQ(e.kind(), qasm::ErrorKind::IndexOutOfRange);
    EXPECT_EQ(e.line(), 3);

    e = parse_error("OPENQASM 2.0;\nqreg q[2];\nh q[2];\n");
    EXPECT_EQ(e.kind(), qasm::ErrorKind::IndexOutOfRange);
    EXPECT_EQ(e.line(), 3);
    EXPECT_GT(e.column(), 1);

    e = parse_error("OPENQASM 2.0;\nqreg q[2];\n  rz q[0];\n");
    EXPECT_EQ(e.kind(), qasm::ErrorKind::UnknownGate);
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 3);

    e = parse_error("qreg q[1];\n");
    EXPECT_EQ(e.kind(), qasm::ErrorKind::MissingHeader);
    EXPECT_EQ(e.line(), 1);

    e = parse_error("OPENQASM 2.0;\nqreg q[1];\nqreg r[1];\n");
    EXPECT_EQ(e.kind(), qasm::ErrorKind::DuplicateRegister);
    EXPECT_EQ(e.line(), 3);

    e = parse_error("OPENQASM 2.0;\nqreg q[1];\nh q[0]\n");
    EXPECT_EQ(e.kind(), qasm::ErrorKind::SyntaxError);

    e = parse_error("OPENQASM 2.0;\nh q[0];\n");
    EXPECT_EQ(e.kind(), qasm::ErrorKind::SyntaxError);

    e = parse_error("OPENQASM 2.0;\nqreg q[1];\ncreg c[1];\nmeasure q[0] -> c[4];\n");
    EXPECT_EQ(e.kind(), qasm::ErrorKind::IndexOutOfRange);

    e = parse_error("OPENQASM 2.0;\nqreg q[1];\nh q[99999999999999999999];\n");
    EXPECT_EQ(e.kind(), qasm::ErrorKind::IndexOutOfRange);
}

TEST(ParseErrors, MessageCarriesPosition) {
    const auto e = parse_error("OPENQASM 2.0;\nqreg q[1];\nfoo q[0];\n");
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos);
}

TEST(QasmProperties, RandomCircuitsRoundTrip) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 5;
        const Circuit c = random_circuit(n, trial % 40, rng);
        EXPECT_EQ(qasm::parse(qasm::serialize(c)), c);
    }
}

TEST(QasmProperties, FuzzNeverCrashes) {
    // Mutated valid programs plus random byte soup; every input must yield a
    // circuit or a positioned ParseError.
    std::mt19937_64 rng(42);
    const std::string base = qasm::serialize(*named_router_circuit(kRouterSuperposition));
    const std::string alphabet = "OPENQASMqregcxhstdb[];,->0123456789 \n/\"\t.";
    std::uniform_int_distribution<int> byte(0, 255);
    for (int trial = 0; trial < 2000; ++trial) {
        std::string src;
        if (trial % 2 == 0) {
            src = base;
            const int edits = 1 + trial % 8;
            for (int k = 0; k < edits && !src.empty(); ++k) {
                std::uniform_int_distribution<std::size_t> pos(0, src.size() - 1);
                src[pos(rng)] = alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
            }
        } else {
            const int len = std::uniform_int_distribution<int>(0, 4096)(rng);
            for (int k = 0; k < len; ++k) src.push_back(static_cast<char>(byte(rng)));
        }
        try {
            qasm::parse(src);
        } catch (const qasm::ParseError& e) {
            EXPECT_GE(e.line(), 1);
            EXPECT_GE(e.column(), 1);
        }
    }
}
