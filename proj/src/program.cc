// Copyright 2026 The Cliffred Authors
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

#include "cliffred/program.h"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace cliffred {

ProgramParseError::ProgramParseError(size_t line, const std::string &message)
    : std::runtime_error(line ? fmt::format("line {}: {}", line, message) : message), line_(line) {}

namespace {

struct Token {
    enum Kind { Word, Open, Close, End } kind;
    std::string text;
    size_t line;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    size_t line = 1;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') {
                i++;
            }
        } else if (c == '\n' || c == ';') {
            out.push_back({Token::End, std::string(1, c), line});
            if (c == '\n') {
                line++;
            }
            i++;
        } else if (c == '{') {
            out.push_back({Token::Open, "{", line});
            i++;
        } else if (c == '}') {
            out.push_back({Token::Close, "}", line});
            i++;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            i++;
        } else {
            size_t j = i;
            while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '{' &&
                   text[j] != '}' && text[j] != ';' && text[j] != '#') {
                j++;
            }
            out.push_back({Token::Word, std::string(text.substr(i, j - i)), line});
            i = j;
        }
    }
    out.push_back({Token::End, "", line});
    return out;
}

size_t parse_index(const Token &t, const char *what) {
    size_t v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
        throw ProgramParseError(t.line, fmt::format("expected {} but found '{}'", what, t.text));
    }
    return v;
}

double parse_weight(const Token &t) {
    try {
        size_t used = 0;
        double w = std::stod(t.text, &used);
        if (used == t.text.size()) {
            return w;
        }
    } catch (const std::exception &) {
    }
    throw ProgramParseError(t.line, fmt::format("expected a choice weight but found '{}'", t.text));
}

class Parser {
   public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    ReductionProgram program() {
        ReductionProgram prog;
        bool have_qubits = false;
        skip_ends();
        while (peek().kind == Token::Word && (peek().text == "qubits:" || peek().text == "output:")) {
            Token key = take();
            if (key.text == "qubits:") {
                prog.n_resource = parse_index(take_word("resource qubit count"), "resource qubit count");
                prog.n_ancilla = parse_index(take_word("ancilla qubit count"), "ancilla qubit count");
                have_qubits = true;
            } else {
                prog.output_qubit = parse_index(take_word("output qubit"), "output qubit");
            }
            end_statement();
            skip_ends();
        }
        if (!have_qubits) {
            throw ProgramParseError(peek().line, "missing 'qubits: <n> <m>' header");
        }
        n_ = prog.num_qubits();
        prog.instructions = sequence(false);
        if (peek().kind != Token::End || !peek().text.empty()) {
            throw ProgramParseError(peek().line, fmt::format("unexpected '{}'", peek().text));
        }
        return prog;
    }

   private:
    const Token &peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool at_eof() const { return peek().kind == Token::End && peek().text.empty(); }

    Token take_word(const char *what) {
        if (peek().kind != Token::Word) {
            throw ProgramParseError(peek().line, fmt::format("expected {}", what));
        }
        return take();
    }
    void expect_word(const char *word) {
        Token t = take_word(word);
        if (t.text != word) {
            throw ProgramParseError(t.line, fmt::format("expected '{}' but found '{}'", word, t.text));
        }
    }
    void skip_ends() {
        while (peek().kind == Token::End && !peek().text.empty()) {
            pos_++;
        }
    }
    void end_statement() {
        if (peek().kind == Token::End || peek().kind == Token::Close) {
            return;
        }
        throw ProgramParseError(peek().line, fmt::format("unexpected '{}'", peek().text));
    }
    static bool is_arm(const Token &t) { return t.kind == Token::Word && (t.text == "+1:" || t.text == "-1:"); }

    Sequence sequence(bool in_block) {
        Sequence seq;
        while (true) {
            skip_ends();
            if (at_eof() || peek().kind == Token::Close || (in_block && is_arm(peek()))) {
                return seq;
            }
            seq.push_back(statement());
            end_statement();
        }
    }

    Sequence block() {
        if (peek().kind != Token::Open) {
            throw ProgramParseError(peek().line, "expected '{'");
        }
        take();
        Sequence seq = sequence(true);
        if (peek().kind != Token::Close) {
            throw ProgramParseError(peek().line, "expected '}'");
        }
        take();
        return seq;
    }

    Instruction statement() {
        Token kw = take_word("an instruction");
        Instruction ins;
        ins.line = kw.line;
        if (kw.text == "unitary") {
            UnitaryOp u;
            u.gate = take_word("a gate name").text;
            while (peek().kind == Token::Word) {
                u.targets.push_back(parse_index(take(), "a qubit index"));
            }
            try {
                u.tableau = named_gate(u.gate, u.targets, n_);
            } catch (const std::invalid_argument &e) {
                throw ProgramParseError(kw.line, e.what());
            }
            ins.op = std::move(u);
        } else if (kw.text == "measure") {
            MeasureOp m;
            Token p = take_word("a Pauli string");
            try {
                m.pauli = PauliOperator::from_str(p.text);
            } catch (const std::invalid_argument &e) {
                throw ProgramParseError(p.line, e.what());
            }
            expect_word("keep");
            Token k = take_word("+1, -1 or both");
            if (k.text == "+1") {
                m.keep = Keep::Plus;
            } else if (k.text == "-1") {
                m.keep = Keep::Minus;
            } else if (k.text == "both") {
                m.keep = Keep::Both;
            } else {
                throw ProgramParseError(k.line, fmt::format("expected +1, -1 or both but found '{}'", k.text));
            }
            expect_word("as");
            m.label = take_word("a label").text;
            ins.op = std::move(m);
        } else if (kw.text == "choice") {
            ChoiceOp c;
            while (peek().kind == Token::Word) {
                c.weights.push_back(parse_weight(take()));
                c.options.push_back(block());
            }
            if (c.options.empty()) {
                throw ProgramParseError(kw.line, "choice needs at least one '<weight>{...}' option");
            }
            ins.op = std::move(c);
        } else if (kw.text == "case") {
            CaseOp c;
            c.label = take_word("a label").text;
            if (peek().kind != Token::Open) {
                throw ProgramParseError(peek().line, "expected '{'");
            }
            take();
            skip_ends();
            bool seen_plus = false;
            bool seen_minus = false;
            while (is_arm(peek())) {
                Token arm = take();
                bool plus = arm.text == "+1:";
                if ((plus && seen_plus) || (!plus && seen_minus)) {
                    throw ProgramParseError(arm.line, fmt::format("duplicate arm '{}'", arm.text));
                }
                (plus ? seen_plus : seen_minus) = true;
                (plus ? c.on_plus : c.on_minus) = sequence(true);
            }
            if (peek().kind != Token::Close) {
                throw ProgramParseError(peek().line, fmt::format("expected '+1:', '-1:' or '}}' but found '{}'",
                                                                 peek().text));
            }
            take();
            ins.op = std::move(c);
        } else {
            throw ProgramParseError(kw.line, fmt::format("unknown instruction '{}'", kw.text));
        }
        return ins;
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
    size_t n_ = 0;
};

void validate_sequence(const Sequence &seq, size_t n, std::set<std::string> &labels) {
    for (const auto &ins : seq) {
        if (auto *u = std::get_if<UnitaryOp>(&ins.op)) {
            if (u->tableau.num_qubits() != n) {
                throw ProgramParseError(ins.line, "unitary acts on the wrong number of qubits");
            }
        } else if (auto *m = std::get_if<MeasureOp>(&ins.op)) {
            if (m->pauli.num_qubits() != n) {
                throw ProgramParseError(ins.line, fmt::format("measured Pauli {} has {} qubits, program has {}",
                                                              m->pauli.str(), m->pauli.num_qubits(), n));
            }
            if (!m->pauli.is_hermitian()) {
                throw ProgramParseError(ins.line, fmt::format("measured Pauli {} is not Hermitian", m->pauli.str()));
            }
            if (m->pauli.is_identity_up_to_phase()) {
                throw ProgramParseError(ins.line, "measuring the identity is not a Pauli measurement");
            }
            if (!labels.insert(m->label).second) {
                throw ProgramParseError(ins.line, fmt::format("label '{}' is already used", m->label));
            }
        } else if (auto *c = std::get_if<ChoiceOp>(&ins.op)) {
            double total = 0;
            for (double w : c->weights) {
                if (!(w > 0)) {
                    throw ProgramParseError(ins.line, "choice weights must be positive");
                }
                total += w;
            }
            if (std::abs(total - 1) > 1e-9) {
                throw ProgramParseError(ins.line, fmt::format("choice weights sum to {:.17g}, not 1", total));
            }
            for (const auto &opt : c->options) {
                validate_sequence(opt, n, labels);
            }
        } else if (auto *k = std::get_if<CaseOp>(&ins.op)) {
            if (!labels.count(k->label)) {
                throw ProgramParseError(ins.line,
                                        fmt::format("case refers to '{}' before any measurement records it", k->label));
            }
            validate_sequence(k->on_plus, n, labels);
            validate_sequence(k->on_minus, n, labels);
        }
    }
}

void write_sequence(std::ostringstream &out, const Sequence &seq, const std::string &sep);

void write_instruction(std::ostringstream &out, const Instruction &ins) {
    if (auto *u = std::get_if<UnitaryOp>(&ins.op)) {
        out << "unitary " << u->gate;
        for (size_t t : u->targets) {
            out << ' ' << t;
        }
    } else if (auto *m = std::get_if<MeasureOp>(&ins.op)) {
        static const char *keep[] = {"+1", "-1", "both"};
        out << "measure " << m->pauli.str() << " keep " << keep[static_cast<int>(m->keep)] << " as " << m->label;
    } else if (auto *c = std::get_if<ChoiceOp>(&ins.op)) {
        out << "choice";
        for (size_t i = 0; i < c->options.size(); i++) {
            out << ' ' << fmt::format("{:.17g}", c->weights[i]) << '{';
            write_sequence(out, c->options[i], "; ");
            out << '}';
        }
    } else if (auto *k = std::get_if<CaseOp>(&ins.op)) {
        out << "case " << k->label << " {+1: ";
        write_sequence(out, k->on_plus, "; ");
        out << "; -1: ";
        write_sequence(out, k->on_minus, "; ");
        out << '}';
    }
}

void write_sequence(std::ostringstream &out, const Sequence &seq, const std::string &sep) {
    for (size_t i = 0; i < seq.size(); i++) {
        if (i) {
            out << sep;
        }
        write_instruction(out, seq[i]);
    }
}

}  // namespace

ReductionProgram parse_program(std::string_view text) {
    ReductionProgram prog = Parser(tokenize(text)).program();
    validate_program(prog);
    return prog;
}

ReductionProgram load_program(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open program file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_program(buf.str());
}

void validate_program(const ReductionProgram &program) {
    if (program.n_resource == 0) {
        throw ProgramParseError(0, "a program needs at least one resource qubit");
    }
    if (program.output_qubit >= program.n_resource) {
        throw ProgramParseError(0, fmt::format("output qubit {} is not a resource qubit", program.output_qubit));
    }
    std::set<std::string> labels;
    validate_sequence(program.instructions, program.num_qubits(), labels);
}

std::string program_text(const ReductionProgram &program) {
    std::ostringstream out;
    out << "qubits: " << program.n_resource << ' ' << program.n_ancilla << '\n';
    if (program.output_qubit != 0) {
        out << "output: " << program.output_qubit << '\n';
    }
    for (const auto &ins : program.instructions) {
        write_instruction(out, ins);
        out << '\n';
    }
    return out.str();
}

}  // namespace cliffred
