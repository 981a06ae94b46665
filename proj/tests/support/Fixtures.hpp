#pragma once

namespace zxtest {

/// 3-qubit GHZ preparation.
inline const char* ghzQasm = "OPENQASM 2.0;\n"
                             "include \"qelib1.inc\";\n"
                             "qreg q[3];\n"
                             "h q[0];\n"
                             "cx q[0],q[1];\n"
                             "cx q[0],q[2];\n";

/// GHZ compiled to a linear architecture: the cx q[0],q[2] needs a swap,
/// emitted as a CX triple; logical q1/q2 end up exchanged.
inline const char* ghzMappedQasm = "// i 0 1 2\n"
                                   "// o 0 2 1\n"
                                   "OPENQASM 2.0;\n"
                                   "include \"qelib1.inc\";\n"
                                   "qreg q[3];\n"
                                   "h q[0];\n"
                                   "cx q[0],q[1];\n"
                                   "cx q[1],q[2];\n"
                                   "cx q[2],q[1];\n"
                                   "cx q[1],q[2];\n"
                                   "cx q[0],q[1];\n";

inline const char* ccxQasm = "OPENQASM 2.0;\n"
                             "include \"qelib1.inc\";\n"
                             "qreg q[3];\n"
                             "ccx q[2],q[1],q[0];\n";

/// Clifford+T expansion of the Toffoli gate (controls q2, q1, target q0).
inline const char* ccxDecomposedQasm = "OPENQASM 2.0;\n"
                                       "include \"qelib1.inc\";\n"
                                       "qreg q[3];\n"
                                       "h q[0];\n"
                                       "cx q[1],q[0];\n"
                                       "tdg q[0];\n"
                                       "cx q[2],q[0];\n"
                                       "t q[0];\n"
                                       "cx q[1],q[0];\n"
                                       "tdg q[0];\n"
                                       "cx q[2],q[0];\n"
                                       "t q[1];\n"
                                       "t q[0];\n"
                                       "cx q[2],q[1];\n"
                                       "h q[0];\n"
                                       "t q[2];\n"
                                       "tdg q[1];\n"
                                       "cx q[2],q[1];\n";

/// Multi-controlled Toffoli on 4 qubits (controls q1,q2,q3, target q0),
/// ancilla-free: the controlled-Z phase polynomial over parity subsets,
/// conjugated by Hadamards on the target. 31 gates, 14 CX.
inline const char* mcxNoAncillaQasm =
        "OPENQASM 2.0;\n"
        "include \"qelib1.inc\";\n"
        "qreg q[4];\n"
        "rz(pi/8) q[3];\n"
        "rz(pi/8) q[2];\n"
        "rz(pi/8) q[1];\n"
        "h q[0];\n"
        "rz(pi/8) q[0];\n"
        "cx q[3],q[2];\n"
        "rz(-pi/8) q[2];\n"
        "cx q[3],q[2];\n"
        "cx q[2],q[1];\n"
        "rz(-pi/8) q[1];\n"
        "cx q[3],q[1];\n"
        "rz(pi/8) q[1];\n"
        "cx q[2],q[1];\n"
        "rz(-pi/8) q[1];\n"
        "cx q[3],q[1];\n"
        "cx q[1],q[0];\n"
        "rz(-pi/8) q[0];\n"
        "cx q[2],q[0];\n"
        "rz(pi/8) q[0];\n"
        "cx q[1],q[0];\n"
        "rz(-pi/8) q[0];\n"
        "cx q[3],q[0];\n"
        "rz(pi/8) q[0];\n"
        "cx q[1],q[0];\n"
        "rz(-pi/8) q[0];\n"
        "cx q[2],q[0];\n"
        "rz(pi/8) q[0];\n"
        "cx q[1],q[0];\n"
        "rz(-pi/8) q[0];\n"
        "cx q[3],q[0];\n"
        "h q[0];\n";

/// The same multi-controlled Toffoli with one ancilla: a relative-phase
/// Toffoli computes AND(q3,q2) into a0, a full Toffoli targets q0, and the
/// self-inverse compute block uncomputes a0. 33 gates, 12 CX.
inline const char* mcxAncillaQasm = "OPENQASM 2.0;\n"
                                    "include \"qelib1.inc\";\n"
                                    "qreg q[4];\n"
                                    "qreg a[1];\n"
                                    "h q[0];\n"
                                    "h a[0];\n"
                                    "t a[0];\n"
                                    "cx q[2],a[0];\n"
                                    "tdg a[0];\n"
                                    "cx q[3],a[0];\n"
                                    "t a[0];\n"
                                    "cx q[2],a[0];\n"
                                    "tdg a[0];\n"
                                    "h a[0];\n"
                                    "cx a[0],q[0];\n"
                                    "tdg q[0];\n"
                                    "cx q[1],q[0];\n"
                                    "t q[0];\n"
                                    "cx a[0],q[0];\n"
                                    "tdg q[0];\n"
                                    "cx q[1],q[0];\n"
                                    "t a[0];\n"
                                    "t q[0];\n"
                                    "h q[0];\n"
                                    "cx q[1],a[0];\n"
                                    "tdg a[0];\n"
                                    "t q[1];\n"
                                    "cx q[1],a[0];\n"
                                    "h a[0];\n"
                                    "t a[0];\n"
                                    "cx q[2],a[0];\n"
                                    "tdg a[0];\n"
                                    "cx q[3],a[0];\n"
                                    "t a[0];\n"
                                    "cx q[2],a[0];\n"
                                    "tdg a[0];\n"
                                    "h a[0];\n";

} // namespace zxtest
