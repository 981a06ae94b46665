#include "zxec/QasmParser.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

namespace zx {

namespace {

// --- parameter expressions ----------------------------------------------
//
// Values are a + b*pi with rational coefficients while exactness survives;
// a product of two pi-terms (or an overflow) degrades to a plain double.

struct ParamValue {
    bool     exact = true;
    Rational constant;   // a
    Rational piCoeff;    // b
    double   approx = 0; // always maintained

    [[nodiscard]] Phase toPhase() const {
        if (exact) {
            return {piCoeff, constant.toDouble()};
        }
        return Phase::fromRadians(approx);
    }
};

ParamValue makeExact(Rational c, Rational pi) {
    ParamValue v;
    v.constant = std::move(c);
    v.piCoeff  = std::move(pi);
    v.approx   = v.constant.toDouble() + v.piCoeff.toDouble() * std::numbers::pi;
    return v;
}

ParamValue makeApprox(double x) {
    ParamValue v;
    v.exact  = false;
    v.approx = x;
    return v;
}

ParamValue add(const ParamValue& a, const ParamValue& b, int sign) {
    if (a.exact && b.exact) {
        try {
            return makeExact(a.constant + Rational(sign) * b.constant,
                             a.piCoeff + Rational(sign) * b.piCoeff);
        } catch (const std::overflow_error&) {
        }
    }
    return makeApprox(a.approx + sign * b.approx);
}

ParamValue mul(const ParamValue& a, const ParamValue& b) {
    if (a.exact && b.exact && (a.piCoeff.isZero() || b.piCoeff.isZero())) {
        try {
            if (b.piCoeff.isZero()) {
                return makeExact(a.constant * b.constant, a.piCoeff * b.constant);
            }
            return makeExact(a.constant * b.constant, b.piCoeff * a.constant);
        } catch (const std::overflow_error&) {
        }
    }
    return makeApprox(a.approx * b.approx);
}

ParamValue div(const ParamValue& a, const ParamValue& b, std::size_t line, std::size_t col) {
    if (b.approx == 0.0 && b.exact && b.constant.isZero() && b.piCoeff.isZero()) {
        throw ParseError("division by zero in gate parameter", line, col);
    }
    if (a.exact && b.exact && b.piCoeff.isZero()) {
        try {
            return makeExact(a.constant / b.constant, a.piCoeff / b.constant);
        } catch (const std::overflow_error&) {
        } catch (const std::domain_error&) {
            throw ParseError("division by zero in gate parameter", line, col);
        }
    }
    return makeApprox(a.approx / b.approx);
}

// --- tokenizer ------------------------------------------------------------

enum class Tok { Ident, Number, Punct, End };

struct Token {
    Tok         type = Tok::End;
    std::string text;
    double      number = 0;
    bool        numberIsInt = false;
    std::size_t line = 0, col = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text, std::ostream* warnings)
        : text_(text), warnings_(warnings) {}

    Token next() {
        skipSpaceAndComments();
        Token t;
        t.line = line_;
        t.col  = col_;
        if (pos_ >= text_.size()) {
            return t;
        }
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
            t.type = Tok::Ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 ||
                    text_[pos_] == '_')) {
                t.text += advance();
            }
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '.') {
            t.type        = Tok::Number;
            t.numberIsInt = true;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0 ||
                    text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E' ||
                    ((text_[pos_] == '+' || text_[pos_] == '-') && !t.text.empty() &&
                     (t.text.back() == 'e' || t.text.back() == 'E')))) {
                if (std::isdigit(static_cast<unsigned char>(text_[pos_])) == 0) {
                    t.numberIsInt = false;
                }
                t.text += advance();
            }
            try {
                t.number = std::stod(t.text);
            } catch (const std::exception&) {
                throw ParseError("malformed number '" + t.text + "'", t.line, t.col);
            }
            return t;
        }
        if (c == '"') {
            t.type = Tok::Ident; // strings only appear in include directives
            t.text += advance();
            while (pos_ < text_.size() && text_[pos_] != '"') {
                t.text += advance();
            }
            if (pos_ >= text_.size()) {
                throw ParseError("unterminated string", t.line, t.col);
            }
            t.text += advance();
            return t;
        }
        t.type = Tok::Punct;
        t.text = advance();
        // two-character arrow
        if (t.text == "-" && pos_ < text_.size() && text_[pos_] == '>') {
            t.text += advance();
        }
        return t;
    }

    /// Layout comments seen so far ("// i ..." / "// o ...").
    [[nodiscard]] const std::map<char, std::vector<std::size_t>>& layoutComments() const {
        return layouts_;
    }

private:
    const std::string& text_;
    std::ostream*      warnings_;
    std::size_t        pos_ = 0, line_ = 1, col_ = 1;
    std::map<char, std::vector<std::size_t>> layouts_;

    char advance() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skipSpaceAndComments() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c)) != 0) {
                advance();
                continue;
            }
            if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                std::string comment;
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    comment += advance();
                }
                parseLayoutComment(comment);
                continue;
            }
            if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
                while (pos_ + 1 < text_.size() && !(text_[pos_] == '*' && text_[pos_ + 1] == '/')) {
                    advance();
                }
                if (pos_ + 1 >= text_.size()) {
                    throw ParseError("unterminated block comment", line_, col_);
                }
                advance();
                advance();
                continue;
            }
            break;
        }
    }

    void parseLayoutComment(const std::string& comment) {
        // "// i 1 0 2" or "// o 0 2 1"
        std::istringstream is(comment);
        std::string        slashes, tag;
        is >> slashes >> tag;
        if (slashes != "//" || (tag != "i" && tag != "o")) {
            return;
        }
        std::vector<std::size_t> perm;
        std::size_t              v = 0;
        while (is >> v) {
            perm.push_back(v);
        }
        if (!perm.empty() && layouts_.count(tag[0]) == 0) {
            layouts_[tag[0]] = std::move(perm);
        } else if (!perm.empty() && warnings_ != nullptr) {
            *warnings_ << "warning: duplicate '// " << tag << "' layout comment ignored\n";
        }
    }
};

// --- parser ------------------------------------------------------------

class Parser {
public:
    Parser(const std::string& text, std::ostream* warnings)
        : lexer_(text, warnings), warnings_(warnings) {
        bump();
    }

    Circuit run() {
        expectIdent("OPENQASM");
        const auto version = expect(Tok::Number);
        if (version.text != "2.0") {
            throw ParseError("unsupported OpenQASM version '" + version.text + "'",
                             version.line, version.col);
        }
        expectPunct(";");
        Circuit circuit;
        bool    sawMeasure = false;
        while (cur_.type != Tok::End) {
            if (cur_.type != Tok::Ident) {
                throw ParseError("expected statement", cur_.line, cur_.col);
            }
            const auto word = cur_;
            if (word.text == "include") {
                bump();
                expect(Tok::Ident); // the quoted filename
                expectPunct(";");
                continue;
            }
            if (word.text == "qreg") {
                bump();
                const auto name = expect(Tok::Ident);
                expectPunct("[");
                const auto size = expect(Tok::Number);
                expectPunct("]");
                expectPunct(";");
                if (!size.numberIsInt || size.number < 1) {
                    throw ParseError("register size must be a positive integer", size.line,
                                     size.col);
                }
                const auto offset = circuit.numQubits;
                circuit.registers.push_back(
                        Register{name.text, offset, static_cast<std::size_t>(size.number)});
                circuit.resize(offset + static_cast<std::size_t>(size.number));
                continue;
            }
            if (word.text == "creg") {
                bump();
                expect(Tok::Ident);
                expectPunct("[");
                expect(Tok::Number);
                expectPunct("]");
                expectPunct(";");
                continue;
            }
            if (word.text == "measure") {
                while (cur_.type != Tok::End && !(cur_.type == Tok::Punct && cur_.text == ";")) {
                    bump();
                }
                expectPunct(";");
                sawMeasure = true;
                continue;
            }
            if (word.text == "if") {
                throw ParseError("classical control is not supported", word.line, word.col);
            }
            if (word.text == "reset") {
                throw ParseError("reset is not supported", word.line, word.col);
            }
            if (word.text == "opaque" || word.text == "gate") {
                throw ParseError("gate definitions are not supported", word.line, word.col);
            }
            // a gate application
            if (sawMeasure) {
                throw ParseError("mid-circuit measurement is not supported", word.line, word.col);
            }
            parseGate(circuit, word);
        }
        if (sawMeasure && warnings_ != nullptr) {
            *warnings_ << "warning: trailing measurements dropped (equivalence is checked on "
                          "the unitary part)\n";
        }
        applyLayouts(circuit);
        return circuit;
    }

private:
    Lexer         lexer_;
    std::ostream* warnings_;
    Token         cur_;

    void bump() { cur_ = lexer_.next(); }

    Token expect(Tok type) {
        if (cur_.type != type) {
            throw ParseError("unexpected token '" + cur_.text + "'", cur_.line, cur_.col);
        }
        const auto t = cur_;
        bump();
        return t;
    }
    void expectIdent(const std::string& word) {
        if (cur_.type != Tok::Ident || cur_.text != word) {
            throw ParseError("expected '" + word + "'", cur_.line, cur_.col);
        }
        bump();
    }
    void expectPunct(const std::string& p) {
        if (cur_.type != Tok::Punct || cur_.text != p) {
            throw ParseError("expected '" + p + "'", cur_.line, cur_.col);
        }
        bump();
    }

    static std::optional<GateKind> lookupGate(const std::string& name) {
        static const std::map<std::string, GateKind> table = {
                {"x", GateKind::X},     {"y", GateKind::Y},     {"z", GateKind::Z},
                {"h", GateKind::H},     {"s", GateKind::S},     {"sdg", GateKind::Sdg},
                {"t", GateKind::T},     {"tdg", GateKind::Tdg}, {"rx", GateKind::RX},
                {"ry", GateKind::RY},   {"rz", GateKind::RZ},   {"u1", GateKind::U1},
                {"p", GateKind::U1},    {"u2", GateKind::U2},   {"u3", GateKind::U3},
                {"u", GateKind::U3},    {"cx", GateKind::CX},   {"CX", GateKind::CX},
                {"cz", GateKind::CZ},   {"swap", GateKind::SWAP},
                {"ccx", GateKind::CCX}, {"barrier", GateKind::Barrier}};
        const auto it = table.find(name);
        if (it == table.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    std::size_t parseQubitOperand(const Circuit& circuit, const Token& context) {
        const auto reg = expect(Tok::Ident);
        std::size_t offset = SIZE_MAX;
        std::size_t size   = 0;
        for (const auto& r : circuit.registers) {
            if (r.name == reg.text) {
                offset = r.offset;
                size   = r.size;
                break;
            }
        }
        if (offset == SIZE_MAX) {
            throw ParseError("unknown register '" + reg.text + "'", reg.line, reg.col);
        }
        expectPunct("[");
        const auto idx = expect(Tok::Number);
        expectPunct("]");
        if (!idx.numberIsInt || idx.number >= static_cast<double>(size)) {
            throw ParseError("qubit index out of range for register '" + reg.text + "'",
                             idx.line, idx.col);
        }
        (void)context;
        return offset + static_cast<std::size_t>(idx.number);
    }

    void parseGate(Circuit& circuit, const Token& nameTok) {
        const auto kind = lookupGate(nameTok.text);
        if (!kind.has_value()) {
            throw ParseError("unsupported gate '" + nameTok.text + "'", nameTok.line,
                             nameTok.col);
        }
        bump();
        std::vector<Phase> params;
        if (cur_.type == Tok::Punct && cur_.text == "(") {
            bump();
            if (!(cur_.type == Tok::Punct && cur_.text == ")")) {
                params.push_back(parseExpr().toPhase());
                while (cur_.type == Tok::Punct && cur_.text == ",") {
                    bump();
                    params.push_back(parseExpr().toPhase());
                }
            }
            expectPunct(")");
        }
        if (*kind == GateKind::Barrier) {
            // allow bare register operands, expanding to all qubits
            std::vector<std::size_t> qubits;
            const auto parseBarrierOperand = [&] {
                const auto reg = cur_;
                if (reg.type != Tok::Ident) {
                    throw ParseError("expected register operand", reg.line, reg.col);
                }
                bump();
                if (cur_.type == Tok::Punct && cur_.text == "[") {
                    bump();
                    const auto idx = expect(Tok::Number);
                    expectPunct("]");
                    for (const auto& r : circuit.registers) {
                        if (r.name == reg.text) {
                            qubits.push_back(r.offset + static_cast<std::size_t>(idx.number));
                            return;
                        }
                    }
                    throw ParseError("unknown register '" + reg.text + "'", reg.line, reg.col);
                }
                for (const auto& r : circuit.registers) {
                    if (r.name == reg.text) {
                        for (std::size_t i = 0; i < r.size; ++i) {
                            qubits.push_back(r.offset + i);
                        }
                        return;
                    }
                }
                throw ParseError("unknown register '" + reg.text + "'", reg.line, reg.col);
            };
            parseBarrierOperand();
            while (cur_.type == Tok::Punct && cur_.text == ",") {
                bump();
                parseBarrierOperand();
            }
            expectPunct(";");
            circuit.gates.push_back(Gate{GateKind::Barrier, std::move(qubits), {}});
            return;
        }
        std::vector<std::size_t> qubits;
        qubits.push_back(parseQubitOperand(circuit, nameTok));
        while (cur_.type == Tok::Punct && cur_.text == ",") {
            bump();
            qubits.push_back(parseQubitOperand(circuit, nameTok));
        }
        expectPunct(";");
        try {
            circuit.add(*kind, std::move(qubits), std::move(params));
        } catch (const CircuitError& e) {
            throw ParseError(e.what(), nameTok.line, nameTok.col);
        }
    }

    // expr := term (('+'|'-') term)*
    // term := factor (('*'|'/') factor)*
    // factor := ('-'|'+') factor | number | 'pi' | '(' expr ')'
    ParamValue parseExpr() {
        auto v = parseTerm();
        while (cur_.type == Tok::Punct && (cur_.text == "+" || cur_.text == "-")) {
            const int sign = cur_.text == "+" ? 1 : -1;
            bump();
            v = add(v, parseTerm(), sign);
        }
        return v;
    }
    ParamValue parseTerm() {
        auto v = parseFactor();
        while (cur_.type == Tok::Punct && (cur_.text == "*" || cur_.text == "/")) {
            const bool isMul = cur_.text == "*";
            const auto where = cur_;
            bump();
            const auto rhs = parseFactor();
            v = isMul ? mul(v, rhs) : div(v, rhs, where.line, where.col);
        }
        return v;
    }
    ParamValue parseFactor() {
        if (cur_.type == Tok::Punct && (cur_.text == "-" || cur_.text == "+")) {
            const int sign = cur_.text == "-" ? -1 : 1;
            bump();
            return add(makeExact(Rational(0), Rational(0)), parseFactor(), sign);
        }
        if (cur_.type == Tok::Punct && cur_.text == "(") {
            bump();
            auto v = parseExpr();
            expectPunct(")");
            return v;
        }
        if (cur_.type == Tok::Ident && cur_.text == "pi") {
            bump();
            return makeExact(Rational(0), Rational(1));
        }
        if (cur_.type == Tok::Number) {
            const auto t = cur_;
            bump();
            if (t.numberIsInt && t.number < 1e15) {
                return makeExact(Rational(static_cast<std::int64_t>(t.number)), Rational(0));
            }
            return makeApprox(t.number);
        }
        throw ParseError("expected expression", cur_.line, cur_.col);
    }

    void applyLayouts(Circuit& circuit) {
        const auto& layouts = lexer_.layoutComments();
        const auto  check   = [&](const std::vector<std::size_t>& perm, const char* what) {
            if (perm.size() != circuit.numQubits) {
                throw ParseError(std::string(what) + " layout comment has wrong length", 1, 1);
            }
            std::vector<bool> seen(perm.size(), false);
            for (const auto v : perm) {
                if (v >= perm.size() || seen[v]) {
                    throw ParseError(std::string(what) + " layout comment is not a permutation",
                                     1, 1);
                }
                seen[v] = true;
            }
        };
        if (const auto it = layouts.find('i'); it != layouts.end()) {
            check(it->second, "initial");
            circuit.initialLayout = it->second;
        }
        if (const auto it = layouts.find('o'); it != layouts.end()) {
            check(it->second, "output");
            circuit.declareOutputPermutation(it->second);
        }
    }
};

} // namespace

Circuit parseQasm(const std::string& text, std::ostream* warnings) {
    Parser parser(text, warnings);
    return parser.run();
}

Circuit parseQasmFile(const std::string& path, std::ostream* warnings) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open file '" + path + "'", 0, 0);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseQasm(buf.str(), warnings);
}

} // namespace zx
