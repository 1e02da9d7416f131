#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dnacodes {

using Letter = std::uint8_t;

/// A word of fixed length over the alphabet {0, 1, ..., q-1}.
///
/// The alphabet size q must be even (and at most 256): evenness is what makes
/// the letter complement a -> q-1-a fixed-point free, which the whole library
/// leans on.  For q = 4 the letters carry the DNA reading A=0, C=1, G=2, T=3,
/// chosen so that 3-a is the Watson-Crick complement.
class QarySequence {
public:
    QarySequence(int q, std::vector<Letter> symbols);
    QarySequence(int q, std::initializer_list<int> symbols);

    int q() const noexcept { return q_; }
    int length() const noexcept { return static_cast<int>(symbols_.size()); }
    const std::vector<Letter>& symbols() const noexcept { return symbols_; }
    std::span<const Letter> span() const noexcept { return symbols_; }
    Letter operator[](int i) const noexcept { return symbols_[static_cast<std::size_t>(i)]; }

    // Ordering compares q first, then the symbols lexicographically.
    friend auto operator<=>(const QarySequence&, const QarySequence&) = default;

private:
    int q_;
    std::vector<Letter> symbols_;
};

/// q-1-a.  Throws std::invalid_argument for odd q or a >= q.
Letter complement_letter(int q, Letter a);

/// Reverse the word, then complement every letter.  An involution.
QarySequence reverse_complement(const QarySequence& x);

/// True when x equals its own reverse complement.  Never true for odd length:
/// the middle letter would have to be its own complement.
bool is_self_reverse_complementary(const QarySequence& x);

/// Rotate left by k positions: result[i] = x[(i + k) mod n].  Any integer k
/// is accepted; k mod n is what matters.
QarySequence cyclic_shift(const QarySequence& x, long k);

/// Letter multiplicities of a word: counts()[a] is the number of occurrences
/// of letter a.  The alphabet size is counts().size().
class Composition {
public:
    explicit Composition(std::vector<int> counts);

    const std::vector<int>& counts() const noexcept { return counts_; }
    int q() const noexcept { return static_cast<int>(counts_.size()); }
    int total() const noexcept;  // length of any word with this composition

    /// The composition of the reverse complement of any word with this
    /// composition: counts()[q-1-a] swapped into position a.
    Composition reversed() const;

    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> counts_;
};

Composition composition(const QarySequence& x);

/// Whether sum_a a * counts[a] is divisible by q, i.e. whether words with this
/// composition land in the zero parity class.
bool composition_admissible(const Composition& c);

/// sum_i x_i mod q.  The words with parity_class == 0 form the parity-check
/// code of size q^(n-1).
int parity_class(const QarySequence& x);

/// Index (beta, gamma) of the Tenengolts partition: beta is the letter sum mod
/// q and gamma = sum_{i=2..n} (i-1)*[x_i >= x_{i-1}] mod n.  The q*n classes
/// partition the full space and each one corrects a single deletion.
struct TenengoltsClass {
    int beta = 0;
    int gamma = 0;
    friend auto operator<=>(const TenengoltsClass&, const TenengoltsClass&) = default;
};

TenengoltsClass tenengolts_class(const QarySequence& x);

// Unchecked buffer-level variants used by enumeration loops.
void reverse_complement_into(int q, std::span<const Letter> x, std::vector<Letter>& out);
bool is_self_reverse_complementary(int q, std::span<const Letter> x);

// q = 4 text aliases.
char letter_to_acgt(Letter a);
int acgt_to_letter(char c);  // -1 when c is not one of ACGT (case-insensitive)

/// Render with one character per letter: digits for q <= 10, or ACGT when
/// acgt is set (q = 4 only).
std::string to_string(const QarySequence& x, bool acgt = false);

/// Visit every word of length n over {0..q-1} in lexicographic order.  The
/// span passed to f points into a reused buffer.
template <typename F>
void for_each_sequence(int q, int n, F&& f) {
    std::vector<Letter> buf(static_cast<std::size_t>(n), 0);
    for (;;) {
        f(std::span<const Letter>(buf));
        int i = n - 1;
        while (i >= 0 && buf[static_cast<std::size_t>(i)] == q - 1) {
            buf[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) return;
        ++buf[static_cast<std::size_t>(i)];
    }
}

}  // namespace dnacodes
