#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dnacodes/sequence.hpp"

namespace dnacodes {

/// Sequence text format: one word per line, written either as digits (q <= 10)
/// or as ACGT letters (q = 4).  Blank lines and lines starting with '#' are
/// ignored.  Parse errors carry the 1-based line number.
struct ParsedSequences {
    int q = 0;
    std::vector<QarySequence> sequences;
};

/// When q is not given it is inferred: the smallest even alphabet that covers
/// every letter seen, and at least 4 if any ACGT letters occur.
ParsedSequences parse_sequences(std::istream& in, std::optional<int> q = std::nullopt);
ParsedSequences parse_sequence_file(const std::string& path, std::optional<int> q = std::nullopt);

/// One word, same letter conventions as the file format, no comments.
QarySequence parse_word(int q, std::string_view text);

void write_sequences(std::ostream& out, std::span<const QarySequence> seqs, bool acgt = false);
std::string format_sequences(std::span<const QarySequence> seqs, bool acgt = false);

}  // namespace dnacodes
