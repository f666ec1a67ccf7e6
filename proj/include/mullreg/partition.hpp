#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mullreg/errors.hpp"

namespace mullreg {

/// One cell of a Young diagram. 1-based, English convention: rows grow
/// south, columns grow east, so (1,1) is the northwest corner.
struct Box {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Box&, const Box&) = default;
};

/// A partition: finite non-increasing sequence of positive parts. The empty
/// partition is a valid value and is accepted by every operation. Trailing
/// zeros are never stored; equality is equality of the stored sequences.
class Partition {
public:
    Partition() = default;

    /// Validates non-increasing and positive; throws NotAPartition otherwise.
    explicit Partition(std::vector<int> parts);

    /// Parses comma- or whitespace-separated decimal parts. "" and "0" both
    /// denote the empty partition. Throws NotNonIncreasing when the
    /// sequence increases or mixes zeros with positive parts, ParseError on
    /// anything that is not an integer list.
    static Partition parse(std::string_view text);

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 1-based row length; 0 beyond the last row (i >= 1).
    int part(int i) const;

    const std::vector<int>& parts() const { return parts_; }

    bool contains(Box b) const;

    Partition transposed() const;

    /// Rows i..j, 1-based inclusive; j is clamped to the length and an empty
    /// range gives the empty partition.
    Partition sub(int i, int j) const;

    /// Canonical comma form, e.g. "5,5,3,2,1"; the empty partition prints "0".
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& x, const Partition& y) {
        return x.parts_ <=> y.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Arm, leg and hook data of one box, with its hand and foot.
struct HookStats {
    Box corner;
    int arm = 0;
    int leg = 0;
    int hook = 0; // always arm + leg + 1
    Box hand;
    Box foot;
};

/// Hook classification against parameters a < b. All tests use exact
/// cross-multiplied integer arithmetic.
struct HookClass {
    bool shallow = false;  // (b-a)*leg < a*(arm+1)
    bool steep = false;    // (b-a)*arm < a*(leg+1)
    bool critical = false; // hook = t*b and leg = t*a for some t >= 1
};

/// (col - row) mod b, normalized into [0, b). Requires b >= 2.
int residue(Box box, int b);

/// Throws BoxNotInPartition when the box lies outside the diagram.
HookStats hook_stats(const Partition& p, Box box);

/// Requires 1 <= a < b.
HookClass classify_hook(const HookStats& h, int a, int b);

/// True iff no b consecutive equal positive parts. Requires b >= 2.
bool is_b_regular(const Partition& p, int b);

/// Prefix-sum order: true iff every prefix sum of lo is <= the matching
/// prefix sum of hi (missing parts count as zero).
bool dominance_leq(const Partition& lo, const Partition& hi);

/// Concatenation; throws NotAPartition unless tail fits under head.
Partition concat(const Partition& head, const Partition& tail);

/// Number of (a,b)-steep hooks of p whose length is divisible by b.
int count_steep_divisible(const Partition& p, int a, int b);

/// First box (row-major) whose hook is divisible by b and fails the named
/// condition; nullopt when every divisible hook satisfies it.
std::optional<Box> first_divisible_not_shallow(const Partition& p, int a, int b);
std::optional<Box> first_divisible_not_shallow_or_steep(const Partition& p, int a, int b);

/// First box carrying a critical hook (hook = t*b, leg = t*a), if any.
std::optional<Box> first_critical_hook(const Partition& p, int a, int b);

/// Streams the partitions of n in reverse-lexicographic order, (n) first and
/// (1,...,1) last. Single-consumer; independent streams are independent.
class PartitionStream {
public:
    explicit PartitionStream(int n);
    std::optional<Partition> next();

private:
    int n_;
    bool done_ = false;
    bool started_ = false;
    std::vector<int> cur_;
};

std::vector<Partition> all_partitions(int n);

namespace detail {
void require_ab(int a, int b);   // throws BadParameters unless 1 <= a < b
void require_modulus(int b);     // throws BadParameters unless b >= 2
int mod_floor(int v, int m);
int div_floor(int num, int den); // den > 0
int div_ceil(int num, int den);  // den > 0
} // namespace detail

/// Calls fn(Box, arm, leg) for every box of p, row-major.
template <class Fn>
void for_each_hook(const Partition& p, Fn&& fn) {
    const Partition tr = p.transposed();
    for (int i = 1; i <= p.length(); ++i) {
        for (int j = 1; j <= p.part(i); ++j) {
            fn(Box{i, j}, p.part(i) - j, tr.part(j) - i);
        }
    }
}

} // namespace mullreg
