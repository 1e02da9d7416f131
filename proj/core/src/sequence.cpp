#include "dnacodes/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dnacodes {

namespace {

void check_alphabet(int q) {
    if (q < 2 || q > 256 || q % 2 != 0)
        throw std::invalid_argument("alphabet size must be even and in [2, 256], got " +
                                    std::to_string(q));
}

}  // namespace

QarySequence::QarySequence(int q, std::vector<Letter> symbols)
    : q_(q), symbols_(std::move(symbols)) {
    check_alphabet(q);
    if (symbols_.empty())
        throw std::invalid_argument("sequence must have length >= 1");
    for (Letter a : symbols_)
        if (a >= q)
            throw std::invalid_argument("letter " + std::to_string(int(a)) +
                                        " out of range for alphabet size " + std::to_string(q));
}

QarySequence::QarySequence(int q, std::initializer_list<int> symbols)
    : QarySequence(q, [&] {
          std::vector<Letter> v;
          v.reserve(symbols.size());
          for (int a : symbols) {
              if (a < 0 || a > 255)
                  throw std::invalid_argument("letter out of range");
              v.push_back(static_cast<Letter>(a));
          }
          return v;
      }()) {}

Letter complement_letter(int q, Letter a) {
    check_alphabet(q);
    if (a >= q)
        throw std::invalid_argument("letter " + std::to_string(int(a)) +
                                    " out of range for alphabet size " + std::to_string(q));
    return static_cast<Letter>(q - 1 - a);
}

QarySequence reverse_complement(const QarySequence& x) {
    std::vector<Letter> out;
    reverse_complement_into(x.q(), x.span(), out);
    return QarySequence(x.q(), std::move(out));
}

void reverse_complement_into(int q, std::span<const Letter> x, std::vector<Letter>& out) {
    const std::size_t n = x.size();
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = static_cast<Letter>(q - 1 - x[n - 1 - i]);
}

bool is_self_reverse_complementary(int q, std::span<const Letter> x) {
    const std::size_t n = x.size();
    if (n % 2 != 0) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (x[i] != q - 1 - x[n - 1 - i]) return false;
    return true;
}

bool is_self_reverse_complementary(const QarySequence& x) {
    return is_self_reverse_complementary(x.q(), x.span());
}

QarySequence cyclic_shift(const QarySequence& x, long k) {
    const long n = x.length();
    const std::size_t shift = static_cast<std::size_t>(((k % n) + n) % n);
    const auto& s = x.symbols();
    std::vector<Letter> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        out[i] = s[(i + shift) % s.size()];
    return QarySequence(x.q(), std::move(out));
}

Composition::Composition(std::vector<int> counts) : counts_(std::move(counts)) {
    if (counts_.empty())
        throw std::invalid_argument("composition needs at least one letter count");
    for (int c : counts_)
        if (c < 0) throw std::invalid_argument("letter counts must be non-negative");
}

int Composition::total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), 0);
}

Composition Composition::reversed() const {
    std::vector<int> rev(counts_.rbegin(), counts_.rend());
    return Composition(std::move(rev));
}

Composition composition(const QarySequence& x) {
    std::vector<int> counts(static_cast<std::size_t>(x.q()), 0);
    for (Letter a : x.symbols()) ++counts[a];
    return Composition(std::move(counts));
}

bool composition_admissible(const Composition& c) {
    const int q = c.q();
    long long weighted = 0;
    for (int a = 0; a < q; ++a)
        weighted += static_cast<long long>(a) * c.counts()[static_cast<std::size_t>(a)];
    return weighted % q == 0;
}

int parity_class(const QarySequence& x) {
    long long sum = 0;
    for (Letter a : x.symbols()) sum += a;
    return static_cast<int>(sum % x.q());
}

TenengoltsClass tenengolts_class(const QarySequence& x) {
    const int n = x.length();
    long long gamma = 0;
    for (int i = 1; i < n; ++i)
        if (x[i] >= x[i - 1]) gamma += i;
    return TenengoltsClass{parity_class(x), static_cast<int>(gamma % n)};
}

char letter_to_acgt(Letter a) {
    static constexpr char kMap[] = {'A', 'C', 'G', 'T'};
    if (a > 3) throw std::invalid_argument("ACGT rendering needs letters in {0,1,2,3}");
    return kMap[a];
}

int acgt_to_letter(char c) {
    switch (c) {
        case 'A': case 'a': return 0;
        case 'C': case 'c': return 1;
        case 'G': case 'g': return 2;
        case 'T': case 't': return 3;
        default: return -1;
    }
}

std::string to_string(const QarySequence& x, bool acgt) {
    std::string out;
    out.reserve(static_cast<std::size_t>(x.length()));
    if (acgt) {
        if (x.q() != 4)
            throw std::invalid_argument("ACGT rendering is defined for q = 4 only");
        for (Letter a : x.symbols()) out.push_back(letter_to_acgt(a));
    } else {
        if (x.q() > 10)
            throw std::invalid_argument("digit rendering supports q <= 10 only");
        for (Letter a : x.symbols()) out.push_back(static_cast<char>('0' + a));
    }
    return out;
}

}  // namespace dnacodes
