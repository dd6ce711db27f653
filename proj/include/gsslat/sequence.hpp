#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gsslat {

enum class PartKind : std::uint8_t { Singular, Regular };

// One block of the cyclic self-intersection word: s_k expands to
// (k+2, 2, ..., 2) of length k, r_m to (2, ..., 2) of length m.
struct SequencePart {
    PartKind kind;
    int length;  // >= 1

    friend bool operator==(const SequencePart&, const SequencePart&) = default;
};

// Ordering used for canonical rotations: Singular < Regular, then by length.
bool part_less(const SequencePart& a, const SequencePart& b);

enum class SurfaceClassTag : std::uint8_t {
    Enoki,
    OddInoueHirzebruch,
    EvenInoueHirzebruch,
    Intermediate,
};

const char* to_string(SurfaceClassTag tag);

struct SurfaceClass {
    SurfaceClassTag tag;
    int cycles;
    int branches;
};

// A cyclic word of singular/regular blocks.  Invariants enforced at
// construction: every length >= 1, no two regular blocks cyclically
// adjacent, and a word without singular blocks is a single regular block.
class SigmaWord {
public:
    explicit SigmaWord(std::vector<SequencePart> parts);

    // Parses the block DSL, e.g. "s3 r2 s1" (separators: whitespace or ',').
    static SigmaWord parse(std::string_view text);

    const std::vector<SequencePart>& parts() const { return parts_; }
    int part_count() const { return static_cast<int>(parts_.size()); }

    int total_length() const;    // n  = sum of block lengths
    int singular_count() const;  // N
    int regular_count() const;   // rho

    // Lengths k_0..k_{N-1} (resp. m_0..m_{rho-1}) in word order.
    std::vector<int> singular_lengths() const;
    std::vector<int> regular_lengths() const;

    SigmaWord rotated(int offset) const;  // block-wise left rotation
    SigmaWord canonical() const;          // lexicographically least rotation

    std::string str() const;  // round-trips through parse()

    friend bool operator==(const SigmaWord& a, const SigmaWord& b) {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<SequencePart> parts_;
};

bool word_less(const SigmaWord& a, const SigmaWord& b);

// The expanded cyclic integer word (a_i), every entry >= 2.
using AWord = std::vector<int>;

AWord expand(const SigmaWord& w);

// Recovers the unique block partition of an expanded word (any rotation of
// a valid expansion is accepted).  Throws std::invalid_argument if the word
// is inadmissible, e.g. an entry k+2 > 2 not followed by k-1 twos.
SigmaWord factor_aword(std::span<const int> aword);

// Blocks of w1 followed by blocks of w2; both seams are checked.
SigmaWord concat(const SigmaWord& w1, const SigmaWord& w2);

// Rotates so the word ends with a regular block, then cuts after every
// regular block; each factor has the shape s_{k_0}..s_{k_{p-1}} r_m.
// Requires rho >= 1.
std::vector<SigmaWord> split_simple(const SigmaWord& w);

SurfaceClass classify(const SigmaWord& w);

// Sum of the a_i over one period; equals 2n + sum of singular lengths.
long long sigma_n(const SigmaWord& w);

}  // namespace gsslat
