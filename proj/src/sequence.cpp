#include "gsslat/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace gsslat {

bool part_less(const SequencePart& a, const SequencePart& b) {
    if (a.kind != b.kind) return a.kind == PartKind::Singular;
    return a.length < b.length;
}

const char* to_string(SurfaceClassTag tag) {
    switch (tag) {
        case SurfaceClassTag::Enoki: return "Enoki";
        case SurfaceClassTag::OddInoueHirzebruch: return "OddInoueHirzebruch";
        case SurfaceClassTag::EvenInoueHirzebruch: return "EvenInoueHirzebruch";
        case SurfaceClassTag::Intermediate: return "Intermediate";
    }
    return "?";
}

SigmaWord::SigmaWord(std::vector<SequencePart> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw std::invalid_argument("sigma word must contain at least one block");
    for (const auto& p : parts_)
        if (p.length < 1)
            throw std::invalid_argument("block length must be >= 1");

    const int count = static_cast<int>(parts_.size());
    int singulars = 0;
    for (const auto& p : parts_)
        if (p.kind == PartKind::Singular) ++singulars;

    if (singulars == 0 && count != 1)
        throw std::invalid_argument("adjacent regular blocks");
    if (count >= 2) {
        for (int i = 0; i < count; ++i) {
            const auto& cur = parts_[i];
            const auto& next = parts_[(i + 1) % count];
            if (cur.kind == PartKind::Regular && next.kind == PartKind::Regular)
                throw std::invalid_argument("adjacent regular blocks");
        }
    }
    // Follows from the adjacency rule, but keep the contract explicit.
    if (singulars >= 1 && count - singulars > singulars)
        throw std::invalid_argument("more regular than singular blocks");
}

SigmaWord SigmaWord::parse(std::string_view text) {
    std::vector<SequencePart> parts;
    std::size_t i = 0;
    const std::size_t len = text.size();
    auto skip_sep = [&] {
        while (i < len && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    skip_sep();
    while (i < len) {
        const char c = text[i];
        PartKind kind;
        if (c == 's' || c == 'S')
            kind = PartKind::Singular;
        else if (c == 'r' || c == 'R')
            kind = PartKind::Regular;
        else
            throw std::invalid_argument("sigma parse error at position " + std::to_string(i) +
                                        ": expected 's' or 'r'");
        ++i;
        if (i >= len || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("sigma parse error at position " + std::to_string(i) +
                                        ": expected block length");
        if (text[i] == '0' && i + 1 < len && std::isdigit(static_cast<unsigned char>(text[i + 1])))
            throw std::invalid_argument("sigma parse error at position " + std::to_string(i) +
                                        ": leading zero in block length");
        long long value = 0;
        while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            if (value > 1000000)
                throw std::invalid_argument("sigma parse error at position " + std::to_string(i) +
                                            ": block length too large");
            ++i;
        }
        parts.push_back({kind, static_cast<int>(value)});
        skip_sep();
    }
    return SigmaWord(std::move(parts));
}

int SigmaWord::total_length() const {
    int n = 0;
    for (const auto& p : parts_) n += p.length;
    return n;
}

int SigmaWord::singular_count() const {
    int n = 0;
    for (const auto& p : parts_)
        if (p.kind == PartKind::Singular) ++n;
    return n;
}

int SigmaWord::regular_count() const {
    return static_cast<int>(parts_.size()) - singular_count();
}

std::vector<int> SigmaWord::singular_lengths() const {
    std::vector<int> out;
    for (const auto& p : parts_)
        if (p.kind == PartKind::Singular) out.push_back(p.length);
    return out;
}

std::vector<int> SigmaWord::regular_lengths() const {
    std::vector<int> out;
    for (const auto& p : parts_)
        if (p.kind == PartKind::Regular) out.push_back(p.length);
    return out;
}

SigmaWord SigmaWord::rotated(int offset) const {
    const int count = static_cast<int>(parts_.size());
    offset = ((offset % count) + count) % count;
    std::vector<SequencePart> parts(parts_.begin() + offset, parts_.end());
    parts.insert(parts.end(), parts_.begin(), parts_.begin() + offset);
    return SigmaWord(std::move(parts));
}

static bool parts_less(const std::vector<SequencePart>& a, const std::vector<SequencePart>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), part_less);
}

SigmaWord SigmaWord::canonical() const {
    const int count = static_cast<int>(parts_.size());
    int best = 0;
    for (int r = 1; r < count; ++r) {
        std::vector<SequencePart> cand = rotated(r).parts_;
        if (parts_less(cand, rotated(best).parts_)) best = r;
    }
    return rotated(best);
}

std::string SigmaWord::str() const {
    std::string out;
    for (const auto& p : parts_) {
        if (!out.empty()) out += ' ';
        out += (p.kind == PartKind::Singular) ? 's' : 'r';
        out += std::to_string(p.length);
    }
    return out;
}

bool word_less(const SigmaWord& a, const SigmaWord& b) {
    return parts_less(a.parts(), b.parts());
}

AWord expand(const SigmaWord& w) {
    AWord out;
    out.reserve(w.total_length());
    for (const auto& p : w.parts()) {
        if (p.kind == PartKind::Singular) {
            out.push_back(p.length + 2);
            out.insert(out.end(), p.length - 1, 2);
        } else {
            out.insert(out.end(), p.length, 2);
        }
    }
    return out;
}

SigmaWord factor_aword(std::span<const int> aword) {
    const int n = static_cast<int>(aword.size());
    if (n == 0) throw std::invalid_argument("empty a-word");
    int start = -1;
    for (int i = 0; i < n; ++i) {
        if (aword[i] < 2) throw std::invalid_argument("a-word entries must be >= 2");
        if (aword[i] > 2 && start < 0) start = i;
    }
    if (start < 0) return SigmaWord({{PartKind::Regular, n}});

    std::vector<SequencePart> parts;
    int consumed = 0;
    int i = start;
    while (consumed < n) {
        if (aword[i] > 2) {
            const int k = aword[i] - 2;
            if (consumed + k > n)
                throw std::invalid_argument("inadmissible a-word: singular block of length " +
                                            std::to_string(k) + " overruns the period");
            for (int j = 1; j < k; ++j)
                if (aword[(i + j) % n] != 2)
                    throw std::invalid_argument(
                        "inadmissible a-word: entry " + std::to_string(aword[i]) +
                        " not followed by " + std::to_string(k - 1) + " twos");
            parts.push_back({PartKind::Singular, k});
            i = (i + k) % n;
            consumed += k;
        } else {
            int m = 0;
            while (consumed + m < n && aword[(i + m) % n] == 2) ++m;
            parts.push_back({PartKind::Regular, m});
            i = (i + m) % n;
            consumed += m;
        }
    }
    return SigmaWord(std::move(parts));
}

SigmaWord concat(const SigmaWord& w1, const SigmaWord& w2) {
    std::vector<SequencePart> parts = w1.parts();
    parts.insert(parts.end(), w2.parts().begin(), w2.parts().end());
    try {
        return SigmaWord(std::move(parts));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("invalid concatenation: adjacent regular blocks at a seam");
    }
}

std::vector<SigmaWord> split_simple(const SigmaWord& w) {
    if (w.regular_count() == 0)
        throw std::invalid_argument("word without regular blocks has no simple factorization");
    const auto& parts = w.parts();
    int first_regular = 0;
    while (parts[first_regular].kind != PartKind::Regular) ++first_regular;
    const SigmaWord rot = w.rotated(first_regular + 1);  // ends with that regular block

    std::vector<SigmaWord> factors;
    std::vector<SequencePart> cur;
    for (const auto& p : rot.parts()) {
        cur.push_back(p);
        if (p.kind == PartKind::Regular) {
            factors.emplace_back(std::move(cur));
            cur.clear();
        }
    }
    return factors;
}

SurfaceClass classify(const SigmaWord& w) {
    const int singulars = w.singular_count();
    const int rho = w.regular_count();
    SurfaceClass out{};
    out.branches = (singulars == 0) ? 0 : rho;  // the r_n graph is a bare cycle
    if (singulars == 0) {
        out.tag = SurfaceClassTag::Enoki;
        out.cycles = 1;
    } else if (rho == 0) {
        out.tag = (singulars % 2 == 0) ? SurfaceClassTag::EvenInoueHirzebruch
                                       : SurfaceClassTag::OddInoueHirzebruch;
        out.cycles = (singulars % 2 == 0) ? 2 : 1;
    } else {
        out.tag = SurfaceClassTag::Intermediate;
        out.cycles = 1;
    }
    return out;
}

long long sigma_n(const SigmaWord& w) {
    long long total = 2LL * w.total_length();
    for (const auto& p : w.parts())
        if (p.kind == PartKind::Singular) total += p.length;
    return total;
}

}  // namespace gsslat
