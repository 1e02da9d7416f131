#include "dnacodes/code.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dnacodes {

namespace {

void check_code_shape(std::span<const QarySequence> codewords, int distance) {
    if (codewords.empty())
        throw std::invalid_argument("a code needs at least one codeword");
    const int q = codewords.front().q();
    const int n = codewords.front().length();
    for (const QarySequence& w : codewords)
        if (w.q() != q || w.length() != n)
            throw std::invalid_argument("codewords must share one alphabet and one length");
    if (distance < 1 || distance > n - 1)
        throw std::invalid_argument("distance must lie in [1, n-1], got " +
                                    std::to_string(distance) + " for n=" + std::to_string(n));
}

bool violation_less(const Violation& u, const Violation& v) {
    if (u.kind != v.kind) return u.kind < v.kind;
    if (u.a != v.a) return u.a < v.a;
    if (u.b.has_value() != v.b.has_value()) return !u.b.has_value();
    if (u.b && v.b && *u.b != *v.b) return *u.b < *v.b;
    return u.similarity < v.similarity;
}

ValidationReport validate_impl(std::span<const QarySequence> codewords, SimilarityKind kind,
                               int distance, ValidateOptions options, bool pairing) {
    check_code_shape(codewords, distance);
    const int n = codewords.front().length();
    const int threshold = n - distance - 1;

    ValidationReport report;
    auto done = [&] { return options.fail_fast && !report.violations.empty(); };

    std::vector<QarySequence> sorted(codewords.begin(), codewords.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<QarySequence> unique;
    unique.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (!unique.empty() && sorted[i] == unique.back()) {
            // one duplicate violation per repeated value, however often it repeats
            const bool already_reported = !report.violations.empty() &&
                                          report.violations.back().kind == ViolationKind::duplicate &&
                                          report.violations.back().a == sorted[i];
            if (!already_reported)
                report.violations.push_back(
                    Violation{ViolationKind::duplicate, sorted[i], std::nullopt, -1});
        } else {
            unique.push_back(sorted[i]);
        }
        if (done()) break;
    }

    if (pairing && !done()) {
        for (const QarySequence& w : unique) {
            if (is_self_reverse_complementary(w)) {
                report.violations.push_back(
                    Violation{ViolationKind::self_reverse_complement, w, std::nullopt, -1});
            } else {
                QarySequence partner = reverse_complement(w);
                if (!std::binary_search(unique.begin(), unique.end(), partner))
                    report.violations.push_back(Violation{ViolationKind::missing_partner, w,
                                                          std::move(partner), -1});
            }
            if (done()) break;
        }
    }

    if (!done()) {
        for (std::size_t i = 0; i < unique.size() && !done(); ++i) {
            for (std::size_t j = i + 1; j < unique.size(); ++j) {
                const int s = similarity_raw(kind, unique[i].span(), unique[j].span());
                report.max_observed_similarity = std::max(report.max_observed_similarity, s);
                if (s > threshold)
                    report.violations.push_back(
                        Violation{ViolationKind::distance, unique[i], unique[j], s});
                if (done()) break;
            }
        }
    }

    std::sort(report.violations.begin(), report.violations.end(), violation_less);
    report.valid = report.violations.empty();
    return report;
}

}  // namespace

ValidationReport validate_dna_code(std::span<const QarySequence> codewords, SimilarityKind kind,
                                   int distance, ValidateOptions options) {
    return validate_impl(codewords, kind, distance, options, true);
}

ValidationReport validate_distance_only(std::span<const QarySequence> codewords,
                                        SimilarityKind kind, int distance,
                                        ValidateOptions options) {
    return validate_impl(codewords, kind, distance, options, false);
}

BigInt block_dna_size_upper_bound(int q, int n) {
    if (q < 2 || q % 2 != 0) throw std::invalid_argument("alphabet size must be even");
    if (n < 2) throw std::invalid_argument("length must be at least 2");
    return (ipow(q, static_cast<unsigned>(n - 1)) + q) / 2;
}

BigInt hamming_upper_bound(int q, int n, int distance) {
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (distance < 1 || distance > n - 1)
        throw std::invalid_argument("distance must lie in [1, n-1]");
    if (distance == 1) return ipow(q, static_cast<unsigned>(n - 1));
    BigInt ball = 0;
    for (int i = 0; i <= distance / 2; ++i)
        ball += binomial(static_cast<unsigned>(n), static_cast<unsigned>(i)) *
                ipow(q - 1, static_cast<unsigned>(i));
    return ipow(q, static_cast<unsigned>(n)) / ball;
}

double asymptotic_deletion_upper(int q, int n, int distance) {
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (distance < 1 || distance > n - 1)
        throw std::invalid_argument("distance must lie in [1, n-1]");
    double factorial = 1.0;
    for (int i = 2; i <= distance; ++i) factorial *= i;
    return factorial / std::pow(double(q - 1), distance) * std::pow(double(q), n) /
           std::pow(double(n), distance);
}

}  // namespace dnacodes
