// Command line front end: every library module behind one binary with
// stable text/JSON/CSV output.
//
// Exit codes: 0 success, 1 a validation ran and the answer was "invalid",
// 2 usage or parameter errors, 3 refused work (enumeration cap, exhausted
// search budget).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dnacodes/bounds.hpp"
#include "dnacodes/code.hpp"
#include "dnacodes/constructions.hpp"
#include "dnacodes/errors.hpp"
#include "dnacodes/io.hpp"
#include "dnacodes/search.hpp"
#include "dnacodes/sequence.hpp"
#include "dnacodes/similarity.hpp"

using namespace dnacodes;
using nlohmann::json;  // keys are kept sorted, which makes output reproducible

namespace {

constexpr int kSchemaVersion = 1;

// Round doubles through a fixed decimal rendering so that repeated runs emit
// byte-identical JSON and CSV.
double quantize(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string render(const QarySequence& x, bool digits) {
    return to_string(x, x.q() == 4 && !digits);
}

ParsedSequences load_words(const std::string& path, std::optional<int> q) {
    if (path == "-") return parse_sequences(std::cin, q);
    return parse_sequence_file(path, q);
}

json params_to_json(const BoundReport& r) {
    json obj = json::object();
    for (const auto& [key, value] : r.params) obj[key] = value;
    return obj;
}

json report_to_json(const BoundReport& r) {
    json obj;
    obj["schema_version"] = kSchemaVersion;
    obj["name"] = r.name;
    obj["mode"] = std::string(to_string(r.mode));
    obj["value"] = quantize(r.value);
    obj["vacuous"] = r.vacuous;
    obj["params"] = params_to_json(r);
    if (r.exact) obj["exact"] = r.exact->str();
    return obj;
}

void print_report_text(const BoundReport& r) {
    std::cout << r.name << " (" << to_string(r.mode) << ")"
              << (r.vacuous ? ", vacuous" : "") << " = ";
    if (r.exact)
        std::cout << r.exact->str();
    else
        std::cout << format_double(r.value);
    std::cout << "\n";
}

const char* violation_name(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::duplicate: return "duplicate";
        case ViolationKind::self_reverse_complement: return "self-reverse-complement";
        case ViolationKind::missing_partner: return "missing-partner";
        case ViolationKind::distance: return "distance";
    }
    return "?";
}

int run_similarity(const std::string& file, std::optional<int> q,
                   const std::string& kind_name, const std::string& format, bool digits) {
    const SimilarityKind kind = similarity_kind_from_string(kind_name);
    const ParsedSequences parsed = load_words(file, q);
    const auto& words = parsed.sequences;

    std::vector<std::vector<int>> matrix(words.size(), std::vector<int>(words.size(), 0));
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i; j < words.size(); ++j)
            matrix[i][j] = matrix[j][i] = similarity(kind, words[i], words[j]);

    if (format == "json") {
        json obj;
        obj["schema_version"] = kSchemaVersion;
        obj["kind"] = kind_name;
        obj["q"] = parsed.q;
        json list = json::array();
        for (const QarySequence& w : words) list.push_back(render(w, digits));
        obj["words"] = list;
        obj["matrix"] = matrix;
        std::cout << obj.dump(2) << "\n";
        return 0;
    }
    const char sep = format == "csv" ? ',' : ' ';
    if (format == "text")
        std::cout << "# pairwise " << kind_name << " similarity, q=" << parsed.q
                  << ", words=" << words.size() << "\n";
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (j) std::cout << sep;
            std::cout << matrix[i][j];
        }
        std::cout << "\n";
    }
    return 0;
}

int run_revcomp(const std::string& file, std::optional<int> q, const std::string& format,
                bool digits) {
    const ParsedSequences parsed = load_words(file, q);
    std::vector<QarySequence> out;
    out.reserve(parsed.sequences.size());
    for (const QarySequence& w : parsed.sequences) out.push_back(reverse_complement(w));

    if (format == "json") {
        json obj;
        obj["schema_version"] = kSchemaVersion;
        obj["q"] = parsed.q;
        json list = json::array();
        for (const QarySequence& w : out) list.push_back(render(w, digits));
        obj["code"] = list;
        std::cout << obj.dump(2) << "\n";
        return 0;
    }
    for (const QarySequence& w : out) std::cout << render(w, digits) << "\n";
    return 0;
}

int run_validate(const std::string& file, std::optional<int> q, const std::string& kind_name,
                 int distance, bool distance_only, bool fail_fast, const std::string& format,
                 bool digits) {
    const SimilarityKind kind = similarity_kind_from_string(kind_name);
    const ParsedSequences parsed = load_words(file, q);
    const ValidateOptions options{fail_fast};
    const ValidationReport report =
        distance_only ? validate_distance_only(parsed.sequences, kind, distance, options)
                      : validate_dna_code(parsed.sequences, kind, distance, options);

    if (format == "json") {
        json obj;
        obj["schema_version"] = kSchemaVersion;
        obj["q"] = parsed.q;
        obj["n"] = parsed.sequences.empty() ? 0 : parsed.sequences.front().length();
        obj["kind"] = kind_name;
        obj["distance"] = distance;
        obj["mode"] = distance_only ? "distance-only" : "dna";
        obj["valid"] = report.valid;
        obj["max_observed_similarity"] = report.max_observed_similarity;
        json list = json::array();
        for (const Violation& v : report.violations) {
            json item;
            item["kind"] = violation_name(v.kind);
            item["word"] = render(v.a, digits);
            if (v.b) item["partner"] = render(*v.b, digits);
            if (v.kind == ViolationKind::distance) item["similarity"] = v.similarity;
            list.push_back(std::move(item));
        }
        obj["violations"] = list;
        std::cout << obj.dump(2) << "\n";
    } else {
        std::cout << "valid: " << (report.valid ? "yes" : "no") << "\n";
        std::cout << "codewords: " << parsed.sequences.size() << "\n";
        std::cout << "max observed similarity: " << report.max_observed_similarity << "\n";
        for (const Violation& v : report.violations) {
            std::cout << violation_name(v.kind) << " " << render(v.a, digits);
            if (v.b) std::cout << " " << render(*v.b, digits);
            if (v.kind == ViolationKind::distance) std::cout << " similarity " << v.similarity;
            std::cout << "\n";
        }
    }
    return report.valid ? 0 : 1;
}

json construction_header(const ConstructionReport& report, int q, int n,
                         std::optional<int> gamma) {
    json obj;
    obj["schema_version"] = kSchemaVersion;
    obj["q"] = q;
    obj["n"] = n;
    obj["case_used"] = std::string(to_string(report.case_used));
    obj["claimed_size"] = report.claimed_size.str();
    obj["achieved_size"] = report.achieved_size;
    obj["validated"] = report.validated;
    obj["notes"] = report.notes;
    if (gamma) obj["gamma"] = *gamma;
    return obj;
}

int emit_code_with_header(const json& header, const std::vector<QarySequence>& code,
                          const std::string& format, bool digits, bool ok) {
    if (format == "json") {
        json obj = header;
        json list = json::array();
        for (const QarySequence& w : code) list.push_back(render(w, digits));
        obj["code"] = list;
        std::cout << obj.dump(2) << "\n";
    } else {
        std::cout << "# " << header.dump() << "\n";
        for (const QarySequence& w : code) std::cout << render(w, digits) << "\n";
    }
    return ok ? 0 : 1;
}

int run_construct(int theorem, int q, int n, std::uint64_t cap, const std::string& format,
                  bool digits) {
    if (theorem == 31) {
        const ConstructionReport report = construct_orbit_code(q, n, cap);
        return emit_code_with_header(construction_header(report, q, n, std::nullopt),
                                     report.code.codewords, format, digits, report.validated);
    }
    const TenengoltsBest best = best_tenengolts_class(q, n, cap);
    const ConstructionReport report = symmetrize_to_dna_code(best.code);
    return emit_code_with_header(construction_header(report, q, n, best.gamma),
                                 report.code.codewords, format, digits, report.validated);
}

int run_tenengolts(int q, int n, std::optional<int> beta, std::optional<int> gamma, bool best,
                   std::uint64_t cap, const std::string& format, bool digits) {
    int use_beta, use_gamma;
    std::vector<QarySequence> code;
    if (best) {
        const TenengoltsBest found = best_tenengolts_class(q, n, cap);
        use_beta = 0;
        use_gamma = found.gamma;
        code = found.code;
    } else {
        if (!beta || !gamma)
            throw std::invalid_argument("pass either --best or both --beta and --gamma");
        use_beta = *beta;
        use_gamma = *gamma;
        code = tenengolts_code(q, n, use_beta, use_gamma, cap);
    }

    json header;
    header["schema_version"] = kSchemaVersion;
    header["q"] = q;
    header["n"] = n;
    header["beta"] = use_beta;
    header["gamma"] = use_gamma;
    header["size"] = code.size();
    return emit_code_with_header(header, code, format, digits, true);
}

int run_search(int q, int n, int distance, const std::string& kind_name,
               const std::string& mode_name, double budget_seconds, std::uint64_t cap,
               const std::string& format, bool digits) {
    const SimilarityKind kind = similarity_kind_from_string(kind_name);
    const SearchMode mode = search_mode_from_string(mode_name);
    const SearchResult result =
        max_code(q, n, distance, kind, mode,
                 std::chrono::duration<double>(budget_seconds), cap);

    json header;
    header["schema_version"] = kSchemaVersion;
    header["q"] = q;
    header["n"] = n;
    header["distance"] = distance;
    header["kind"] = kind_name;
    header["mode"] = mode_name;
    header["size"] = result.size;
    header["optimal"] = result.optimal;
    emit_code_with_header(header, result.code, format, digits, true);
    if (!result.optimal) {
        std::cerr << "search: budget exhausted, size " << result.size
                  << " is only a lower bound\n";
        return 3;
    }
    return 0;
}

int run_enumerate(int q, int n, const std::string& kind_name, std::uint64_t cap,
                  const std::string& format) {
    const SimilarityKind kind = similarity_kind_from_string(kind_name);
    const DistributionTable table = enumerate_distribution(q, n, kind, cap);

    if (format == "json") {
        json obj;
        obj["schema_version"] = kSchemaVersion;
        obj["q"] = q;
        obj["n"] = n;
        obj["kind"] = kind_name;
        obj["pair_counts"] = table.pair_counts;
        obj["selfrc_counts"] = table.selfrc_counts;
        std::cout << obj.dump(2) << "\n";
        return 0;
    }
    std::cout << "s,pair_count,selfrc_count\n";
    for (std::size_t s = 0; s < table.pair_counts.size(); ++s)
        std::cout << s << "," << table.pair_counts[s] << "," << table.selfrc_counts[s]
                  << "\n";
    return 0;
}

int run_bounds_critical(int q, const std::string& kind_name, const std::string& format) {
    const CriticalPoint point = critical_fraction(q, similarity_kind_from_string(kind_name));
    if (format == "json") {
        json obj;
        obj["schema_version"] = kSchemaVersion;
        obj["q"] = point.q;
        obj["kind"] = kind_name;
        obj["d_star"] = quantize(point.d_star);
        obj["residual"] = quantize(point.residual);
        obj["boundary"] = point.boundary;
        std::cout << obj.dump(2) << "\n";
    } else {
        std::cout << "q: " << point.q << "\n"
                  << "kind: " << kind_name << "\n"
                  << "d_star: " << format_double(point.d_star) << "\n"
                  << "residual: " << format_double(point.residual) << "\n"
                  << "boundary: " << (point.boundary ? "yes" : "no") << "\n";
    }
    return 0;
}

int run_bounds_rate(int q, double d, const std::string& kind_name,
                    const std::string& format) {
    const BoundReport report = rate_lower(q, d, similarity_kind_from_string(kind_name));
    if (format == "json")
        std::cout << report_to_json(report).dump(2) << "\n";
    else
        print_report_text(report);
    return 0;
}

int run_bounds_size(int q, int n, int distance, const std::string& kind_name,
                    const std::string& mode_name, std::uint64_t cap,
                    const std::string& format) {
    const SimilarityKind kind = similarity_kind_from_string(kind_name);
    std::vector<BoundReport> reports;

    if (kind == SimilarityKind::additive) {
        BoundReport hamming;
        hamming.name = "hamming-size-upper";
        hamming.mode = BoundMode::exact;
        hamming.exact = BigRat(hamming_upper_bound(q, n, distance));
        hamming.value = to_double(*hamming.exact);
        hamming.params = {{"q", std::to_string(q)},
                          {"n", std::to_string(n)},
                          {"distance", std::to_string(distance)}};
        reports.push_back(std::move(hamming));
    } else {
        const BoundMode mode = mode_name == "exact" ? BoundMode::exact
                                                    : BoundMode::analytic_bound;
        reports.push_back(random_coding_size_bound(q, n, distance, kind, mode, cap));
        reports.push_back(asymptotic_size_lower(q, n, distance, kind));
        if (kind == SimilarityKind::block && distance == 1) {
            BoundReport ceiling;
            ceiling.name = "block-size-upper";
            ceiling.mode = BoundMode::exact;
            ceiling.exact = BigRat(block_dna_size_upper_bound(q, n));
            ceiling.value = to_double(*ceiling.exact);
            ceiling.params = {{"q", std::to_string(q)}, {"n", std::to_string(n)}};
            reports.push_back(std::move(ceiling));
        }
        if (kind == SimilarityKind::deletion) {
            BoundReport upper;
            upper.name = "asymptotic-size-upper";
            upper.mode = BoundMode::asymptotic;
            upper.value = asymptotic_deletion_upper(q, n, distance);
            upper.params = {{"q", std::to_string(q)},
                            {"n", std::to_string(n)},
                            {"distance", std::to_string(distance)}};
            reports.push_back(std::move(upper));
        }
    }

    if (format == "json") {
        json obj;
        obj["schema_version"] = kSchemaVersion;
        json list = json::array();
        for (const BoundReport& r : reports) {
            json item = report_to_json(r);
            item.erase("schema_version");
            list.push_back(std::move(item));
        }
        obj["reports"] = list;
        std::cout << obj.dump(2) << "\n";
    } else {
        for (const BoundReport& r : reports) print_report_text(r);
    }
    return 0;
}

int run_bounds_curve(int q, const std::string& kind_name, std::optional<double> from,
                     std::optional<double> to, int points, const std::string& format) {
    const SimilarityKind kind = similarity_kind_from_string(kind_name);
    const double domain_hi =
        kind == SimilarityKind::block ? 0.495 : double(q - 1) / double(q);
    const double lo = from.value_or(0.005);
    const double hi = to.value_or(domain_hi);
    if (points < 2) throw std::invalid_argument("the grid needs at least 2 points");
    if (!(lo < hi)) throw std::invalid_argument("the grid needs --from below --to");

    std::vector<double> ds, rates;
    for (int i = 0; i < points; ++i) {
        const double d = lo + (hi - lo) * i / (points - 1);
        ds.push_back(quantize(d));
        rates.push_back(quantize(rate_lower(q, d, kind).value));
    }

    if (format == "json") {
        json obj;
        obj["schema_version"] = kSchemaVersion;
        obj["q"] = q;
        obj["kind"] = kind_name;
        obj["d"] = ds;
        obj["rate"] = rates;
        std::cout << obj.dump(2) << "\n";
        return 0;
    }
    std::cout << "d,rate\n";
    for (int i = 0; i < points; ++i)
        std::cout << format_double(ds[static_cast<std::size_t>(i)]) << ","
                  << format_double(rates[static_cast<std::size_t>(i)]) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DNA code toolkit: similarity, constructions, search, and bounds "
                 "for codes over even alphabets"};
    app.require_subcommand(1);

    std::uint64_t cap = kDefaultEnumerationCap;
    app.add_option("--cap", cap,
                   "largest exhaustive-enumeration state count accepted before refusing")
        ->envname("DNACODES_ENUM_CAP")
        ->check(CLI::PositiveNumber);
    long long seed = 0;
    app.add_option("--seed", seed,
                   "accepted for interface stability; every algorithm here is deterministic");

    const std::vector<std::string> kinds{"additive", "deletion", "block"};
    const std::vector<std::string> pair_kinds{"deletion", "block"};

    // similarity
    std::string sim_file, sim_kind = "deletion", sim_format = "text";
    int sim_q = 0;
    bool sim_digits = false;
    auto* sim = app.add_subcommand("similarity", "pairwise similarity matrix of a file");
    sim->add_option("file", sim_file, "sequence file, or - for stdin")->required();
    sim->add_option("--kind", sim_kind)->check(CLI::IsMember(kinds));
    sim->add_option("--q", sim_q, "alphabet size (default: inferred)")
        ->check(CLI::Range(2, 256));
    sim->add_option("--format", sim_format)->check(CLI::IsMember({"text", "json", "csv"}));
    sim->add_flag("--digits", sim_digits, "print digits even when q=4");

    // revcomp
    std::string rc_file, rc_format = "text";
    int rc_q = 0;
    bool rc_digits = false;
    auto* rc = app.add_subcommand("revcomp", "reverse complement of every sequence");
    rc->add_option("file", rc_file, "sequence file, or - for stdin")->required();
    rc->add_option("--q", rc_q)->check(CLI::Range(2, 256));
    rc->add_option("--format", rc_format)->check(CLI::IsMember({"text", "json"}));
    rc->add_flag("--digits", rc_digits);

    // validate
    std::string val_file, val_kind = "deletion", val_format = "text";
    int val_q = 0, val_distance = 1;
    bool val_distance_only = false, val_dna = false, val_fail_fast = false,
         val_digits = false;
    auto* val = app.add_subcommand("validate", "check a file against the DNA code rules");
    val->add_option("file", val_file, "sequence file, or - for stdin")->required();
    val->add_option("--kind", val_kind)->check(CLI::IsMember(kinds));
    val->add_option("--distance", val_distance, "claimed distance D")->required();
    val->add_flag("--dna", val_dna, "require the pairing rules too (default)");
    val->add_flag("--distance-only", val_distance_only, "check pairwise similarity only");
    val->add_flag("--fail-fast", val_fail_fast, "stop at the first violation");
    val->add_option("--q", val_q)->check(CLI::Range(2, 256));
    val->add_option("--format", val_format)->check(CLI::IsMember({"text", "json"}));
    val->add_flag("--digits", val_digits);

    // construct
    int con_theorem = 31, con_q = 0, con_n = 0;
    std::string con_format = "text";
    bool con_digits = false;
    auto* con = app.add_subcommand("construct", "build a DNA code from the library recipes");
    con->add_option("--theorem", con_theorem, "31: orbit construction, 32: symmetrized "
                                              "best single-deletion class")
        ->check(CLI::IsMember({31, 32}));
    con->add_option("--q", con_q)->required()->check(CLI::Range(2, 256));
    con->add_option("--n", con_n)->required()->check(CLI::PositiveNumber);
    con->add_option("--format", con_format)->check(CLI::IsMember({"text", "json"}));
    con->add_flag("--digits", con_digits);

    // tenengolts
    int ten_q = 0, ten_n = 0;
    std::optional<int> ten_beta, ten_gamma;
    bool ten_best = false, ten_digits = false;
    std::string ten_format = "text";
    auto* ten = app.add_subcommand("tenengolts", "single-deletion classes T(beta, gamma)");
    ten->add_option("--q", ten_q)->required()->check(CLI::Range(2, 256));
    ten->add_option("--n", ten_n)->required()->check(CLI::PositiveNumber);
    ten->add_option("--beta", ten_beta);
    ten->add_option("--gamma", ten_gamma);
    ten->add_flag("--best", ten_best, "largest class with beta=0");
    ten->add_option("--format", ten_format)->check(CLI::IsMember({"text", "json"}));
    ten->add_flag("--digits", ten_digits);

    // search
    int sea_q = 0, sea_n = 0, sea_distance = 1;
    std::string sea_kind = "deletion", sea_mode = "dna", sea_format = "json";
    double sea_budget = 600.0;
    bool sea_digits = false;
    auto* sea = app.add_subcommand("search", "exhaustive maximum-code search");
    sea->add_option("--q", sea_q)->required()->check(CLI::Range(2, 256));
    sea->add_option("--n", sea_n)->required()->check(CLI::PositiveNumber);
    sea->add_option("--distance", sea_distance)->required()->check(CLI::PositiveNumber);
    sea->add_option("--kind", sea_kind)->check(CLI::IsMember(kinds));
    sea->add_option("--mode", sea_mode)->check(CLI::IsMember({"dna", "distance-only"}));
    sea->add_option("--budget", sea_budget, "seconds before settling for a lower bound")
        ->check(CLI::PositiveNumber);
    sea->add_option("--format", sea_format)->check(CLI::IsMember({"text", "json"}));
    sea->add_flag("--digits", sea_digits);

    // enumerate
    int enu_q = 0, enu_n = 0;
    std::string enu_kind = "deletion", enu_format = "csv";
    auto* enu = app.add_subcommand("enumerate", "exact similarity distribution tables");
    enu->add_option("--q", enu_q)->required()->check(CLI::Range(2, 256));
    enu->add_option("--n", enu_n)->required()->check(CLI::PositiveNumber);
    enu->add_option("--kind", enu_kind)->check(CLI::IsMember(kinds));
    enu->add_option("--format", enu_format)->check(CLI::IsMember({"csv", "json"}));

    // bounds
    auto* bounds = app.add_subcommand("bounds", "analytic bounds and critical fractions");
    bounds->require_subcommand(1);

    int cri_q = 0;
    std::string cri_kind = "deletion", cri_format = "json";
    auto* cri = bounds->add_subcommand("critical", "largest d with a positive rate bound");
    cri->add_option("--q", cri_q)->required()->check(CLI::Range(2, 256));
    cri->add_option("--kind", cri_kind)->check(CLI::IsMember(pair_kinds));
    cri->add_option("--format", cri_format)->check(CLI::IsMember({"text", "json"}));

    int rat_q = 0;
    double rat_d = 0.0;
    std::string rat_kind = "deletion", rat_format = "json";
    auto* rat = bounds->add_subcommand("rate", "rate lower bound at one distance fraction");
    rat->add_option("--q", rat_q)->required()->check(CLI::Range(2, 256));
    rat->add_option("--d", rat_d, "relative distance D/n")->required();
    rat->add_option("--kind", rat_kind)->check(CLI::IsMember(kinds));
    rat->add_option("--format", rat_format)->check(CLI::IsMember({"text", "json"}));

    int siz_q = 0, siz_n = 0, siz_distance = 1;
    std::string siz_kind = "deletion", siz_mode = "exact", siz_format = "json";
    auto* siz = bounds->add_subcommand("size", "size bounds at finite parameters");
    siz->add_option("--q", siz_q)->required()->check(CLI::Range(2, 256));
    siz->add_option("--n", siz_n)->required()->check(CLI::PositiveNumber);
    siz->add_option("--distance", siz_distance)->required()->check(CLI::PositiveNumber);
    siz->add_option("--kind", siz_kind)->check(CLI::IsMember(kinds));
    siz->add_option("--mode", siz_mode, "how to get the random-coding tail probabilities")
        ->check(CLI::IsMember({"exact", "analytic"}));
    siz->add_option("--format", siz_format)->check(CLI::IsMember({"text", "json"}));

    int cur_q = 0, cur_points = 99;
    std::optional<double> cur_from, cur_to;
    std::string cur_kind = "deletion", cur_format = "csv";
    auto* cur = bounds->add_subcommand("curve", "rate bound sampled over a d-grid");
    cur->add_option("--q", cur_q)->required()->check(CLI::Range(2, 256));
    cur->add_option("--kind", cur_kind)->check(CLI::IsMember(kinds));
    cur->add_option("--from", cur_from);
    cur->add_option("--to", cur_to);
    cur->add_option("--points", cur_points)->check(CLI::PositiveNumber);
    cur->add_option("--format", cur_format)->check(CLI::IsMember({"csv", "json"}));

    // let --cap and --seed appear after the subcommand name too
    const auto all = [](const CLI::App*) { return true; };
    for (CLI::App* s : app.get_subcommands(all)) {
        s->fallthrough();
        for (CLI::App* t : s->get_subcommands(all)) t->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help is fine, anything else is a usage error
    }

    try {
        const auto opt_q = [](int v) {
            return v == 0 ? std::nullopt : std::optional<int>(v);
        };
        if (sim->parsed())
            return run_similarity(sim_file, opt_q(sim_q), sim_kind, sim_format, sim_digits);
        if (rc->parsed())
            return run_revcomp(rc_file, opt_q(rc_q), rc_format, rc_digits);
        if (val->parsed()) {
            if (val_dna && val_distance_only)
                throw std::invalid_argument("--dna and --distance-only conflict");
            return run_validate(val_file, opt_q(val_q), val_kind, val_distance,
                                val_distance_only, val_fail_fast, val_format, val_digits);
        }
        if (con->parsed())
            return run_construct(con_theorem, con_q, con_n, cap, con_format, con_digits);
        if (ten->parsed())
            return run_tenengolts(ten_q, ten_n, ten_beta, ten_gamma, ten_best, cap,
                                  ten_format, ten_digits);
        if (sea->parsed())
            return run_search(sea_q, sea_n, sea_distance, sea_kind, sea_mode, sea_budget,
                              cap, sea_format, sea_digits);
        if (enu->parsed())
            return run_enumerate(enu_q, enu_n, enu_kind, cap, enu_format);
        if (bounds->parsed()) {
            if (cri->parsed()) return run_bounds_critical(cri_q, cri_kind, cri_format);
            if (rat->parsed()) return run_bounds_rate(rat_q, rat_d, rat_kind, rat_format);
            if (siz->parsed())
                return run_bounds_size(siz_q, siz_n, siz_distance, siz_kind, siz_mode, cap,
                                       siz_format);
            if (cur->parsed())
                return run_bounds_curve(cur_q, cur_kind, cur_from, cur_to, cur_points,
                                        cur_format);
        }
    } catch (const enumeration_refused& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;  // unreachable with require_subcommand, kept as a backstop
}
