#include "dnacodes/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dnacodes {

namespace {

std::string trimmed(const std::string& line) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = line.find_last_not_of(" \t\r");
    return line.substr(first, last - first + 1);
}

struct RawWord {
    std::vector<Letter> letters;
    std::size_t line = 0;
};

std::vector<Letter> decode(std::string_view text, std::size_t line, bool& saw_acgt) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            letters.push_back(static_cast<Letter>(c - '0'));
            continue;
        }
        const int a = acgt_to_letter(c);
        if (a < 0) {
            std::string msg = "invalid symbol '" + std::string(1, c) +
                              "' (expected digits or ACGT)";
            if (line != 0) msg = "line " + std::to_string(line) + ": " + msg;
            throw std::invalid_argument(msg);
        }
        saw_acgt = true;
        letters.push_back(static_cast<Letter>(a));
    }
    return letters;
}

ParsedSequences assemble(std::vector<RawWord> raw, bool saw_acgt, std::optional<int> q_opt) {
    int q;
    if (q_opt) {
        q = *q_opt;
    } else {
        int max_letter = -1;
        for (const RawWord& w : raw)
            for (Letter a : w.letters)
                max_letter = std::max(max_letter, int(a));
        if (max_letter < 0)
            throw std::invalid_argument("no sequences found and no alphabet size given");
        q = max_letter + 1;
        if (saw_acgt) q = std::max(q, 4);
        q = std::max(q, 2);
        if (q % 2 != 0) ++q;
    }

    ParsedSequences out;
    out.q = q;
    out.sequences.reserve(raw.size());
    for (RawWord& w : raw) {
        if (w.letters.empty())
            throw std::invalid_argument("line " + std::to_string(w.line) + ": empty word");
        for (Letter a : w.letters)
            if (a >= q)
                throw std::invalid_argument("line " + std::to_string(w.line) + ": letter " +
                                            std::to_string(int(a)) +
                                            " out of range for alphabet size " +
                                            std::to_string(q));
        out.sequences.emplace_back(q, std::move(w.letters));
    }
    return out;
}

}  // namespace

ParsedSequences parse_sequences(std::istream& in, std::optional<int> q) {
    std::vector<RawWord> raw;
    bool saw_acgt = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = trimmed(line);
        if (body.empty() || body.front() == '#') continue;
        raw.push_back(RawWord{decode(body, lineno, saw_acgt), lineno});
    }
    return assemble(std::move(raw), saw_acgt, q);
}

ParsedSequences parse_sequence_file(const std::string& path, std::optional<int> q) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open sequence file '" + path + "'");
    return parse_sequences(in, q);
}

QarySequence parse_word(int q, std::string_view text) {
    bool saw_acgt = false;
    std::vector<Letter> letters = decode(text, 0, saw_acgt);
    if (letters.empty())
        throw std::invalid_argument("empty word");
    return QarySequence(q, std::move(letters));
}

void write_sequences(std::ostream& out, std::span<const QarySequence> seqs, bool acgt) {
    for (const QarySequence& s : seqs)
        out << to_string(s, acgt) << '\n';
}

std::string format_sequences(std::span<const QarySequence> seqs, bool acgt) {
    std::ostringstream out;
    write_sequences(out, seqs, acgt);
    return out.str();
}

}  // namespace dnacodes
