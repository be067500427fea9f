#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rtwalk {

// What a right-multiplication by a transposition does to the cycle
// structure: merge two cycles or split one.
enum class StepKind { coagulation, fragmentation };

// Normalized pair 1 <= i < j.
struct Transposition {
    int i = 1, j = 2;

    Transposition() = default;
    Transposition(int a, int b);

    bool touches(int x) const { return x == i || x == j; }
    bool overlaps(const Transposition& o) const {
        return touches(o.i) || touches(o.j);
    }
    bool operator==(const Transposition&) const = default;
};

// Permutation of {1, ..., n}, stored as its image table.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n);  // identity on {1..n}

    // Validates that `image` is a bijection of {1..image.size()}.
    static Permutation from_image(std::vector<int> image);

    int size() const { return (int)image_.size(); }
    int operator()(int x) const { return image_[(size_t)x - 1]; }
    const std::vector<int>& image() const { return image_; }

    // In-place right multiplication by t: only two image entries move.
    // Single-owner use (the walk); everything else treats Permutation
    // as an immutable value.
    void apply_right(const Transposition& t) {
        std::swap(image_[(size_t)t.i - 1], image_[(size_t)t.j - 1]);
    }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> image_;
};

// Multiset of cycle lengths: counts[k] = number of cycles of size k.
struct CycleStructure {
    std::map<int, int64_t> counts;

    int64_t n() const;
    int64_t cycle_count() const;
    int64_t distance() const { return n() - cycle_count(); }

    static CycleStructure from_sizes(const std::vector<int>& sizes);
    bool operator==(const CycleStructure&) const = default;
};

// Minimal factorization of a permutation into d(pi) transpositions,
// cycles listed in least-element order, each cycle contributing the
// pairs (x, successor-of-x) along its run.
struct MinimalDecomposition {
    std::vector<Transposition> transpositions;
    std::vector<int> terminal;  // elements appearing at most once, sorted
};

Permutation identity(int n);

// (f*g)(x) = f(g(x)); the convention every distance identity below uses.
Permutation compose(const Permutation& f, const Permutation& g);
Permutation inverse(const Permutation& s);

// True iff i and j lie in the same cycle of s.
bool same_cycle(const Permutation& s, int i, int j);

// Right product s*t plus the event kind (fragmentation iff i, j shared
// a cycle of s). Cycle count moves by +1 on fragmentation, -1 on
// coagulation; distance by the opposite sign.
std::pair<Permutation, StepKind> apply_transposition(const Permutation& s, const Transposition& t);

int64_t cycle_count(const Permutation& s);
CycleStructure cycle_structure(const Permutation& s);

// Cycles in least-element order, each cycle starting from its least
// element.
std::vector<std::vector<int>> cycles_of(const Permutation& s);

int64_t cayley_distance(const Permutation& s);  // distance to the identity
int64_t cayley_distance(const Permutation& x, const Permutation& y);

MinimalDecomposition canonical_decomposition(const Permutation& p);

// Text round-trip: "(1 4 3 7)(2)(5 8)"; fixed points optional on input,
// printed in least-element order.
std::string to_cycle_string(const Permutation& s);
Permutation parse_cycles(std::string_view text, int n);

}  // namespace rtwalk
