#pragma once

#include <string>
#include <vector>

#include "dnacodes/io.hpp"
#include "dnacodes/sequence.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& name) {
    return std::string(DNACODES_FIXTURE_DIR) + "/" + name;
}

inline dnacodes::QarySequence seq(int q, std::string_view text) {
    return dnacodes::parse_word(q, text);
}

inline std::vector<dnacodes::QarySequence> load_fixture(const std::string& name) {
    return dnacodes::parse_sequence_file(fixture_path(name)).sequences;
}

// every word of length n over {0..q-1}, materialized
inline std::vector<dnacodes::QarySequence> all_words(int q, int n) {
    std::vector<dnacodes::QarySequence> out;
    dnacodes::for_each_sequence(q, n, [&](std::span<const dnacodes::Letter> buf) {
        out.emplace_back(q, std::vector<dnacodes::Letter>(buf.begin(), buf.end()));
    });
    return out;
}

}  // namespace testutil
