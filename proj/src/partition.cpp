#include "mullreg/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace mullreg {

namespace detail {

void require_ab(int a, int b) {
    if (a < 1 || a >= b)
        throw BadParameters("parameters must satisfy 1 <= a < b");
}

void require_modulus(int b) {
    if (b < 2)
        throw BadParameters("modulus b must be at least 2");
}

int mod_floor(int v, int m) {
    int r = v % m;
    return r < 0 ? r + m : r;
}

int div_floor(int num, int den) {
    int q = num / den;
    if (num % den != 0 && (num < 0))
        --q;
    return q;
}

int div_ceil(int num, int den) {
    return -div_floor(-num, den);
}

} // namespace detail

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw NotAPartition("parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw NotAPartition("parts must be non-increasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::vector<long long> values;
    std::string token;
    auto flush = [&] {
        if (token.empty())
            return;
        std::size_t used = 0;
        try {
            values.push_back(std::stoll(token, &used));
        } catch (const std::exception&) {
            throw ParseError("not an integer: '" + token + "'");
        }
        if (used != token.size())
            throw ParseError("not an integer: '" + token + "'");
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
            token.push_back(c);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'");
        }
    }
    flush();

    if (values.empty())
        return Partition{};
    if (values.size() == 1 && values[0] == 0)
        return Partition{};

    std::vector<int> parts;
    parts.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        long long v = values[i];
        if (v <= 0)
            throw NotNonIncreasing("parts must be positive (zeros only as the lone \"0\")");
        if (v > 1000000)
            throw ParseError("part too large");
        if (i > 0 && v > values[i - 1])
            throw NotNonIncreasing("parts must be non-increasing");
        parts.push_back(static_cast<int>(v));
    }
    return Partition(std::move(parts));
}

int Partition::part(int i) const {
    if (i < 1)
        throw BadParameters("row index must be >= 1");
    return i <= length() ? parts_[i - 1] : 0;
}

bool Partition::contains(Box b) const {
    return b.row >= 1 && b.col >= 1 && b.row <= length() && b.col <= parts_[b.row - 1];
}

Partition Partition::transposed() const {
    if (empty())
        return {};
    std::vector<int> cols(parts_[0], 0);
    for (int len : parts_)
        for (int j = 0; j < len; ++j)
            ++cols[j];
    return Partition(std::move(cols));
}

Partition Partition::sub(int i, int j) const {
    if (i < 1)
        throw BadParameters("subpartition start must be >= 1");
    j = std::min(j, length());
    if (i > j)
        return {};
    return Partition(std::vector<int>(parts_.begin() + (i - 1), parts_.begin() + j));
}

std::string Partition::str() const {
    if (empty())
        return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out << ',';
        out << parts_[i];
    }
    return out.str();
}

int residue(Box box, int b) {
    detail::require_modulus(b);
    return detail::mod_floor(box.col - box.row, b);
}

HookStats hook_stats(const Partition& p, Box box) {
    if (!p.contains(box))
        throw BoxNotInPartition("box (" + std::to_string(box.row) + "," +
                                std::to_string(box.col) + ") is not in the partition");
    HookStats h;
    h.corner = box;
    h.arm = p.part(box.row) - box.col;
    h.leg = p.transposed().part(box.col) - box.row;
    h.hook = h.arm + h.leg + 1;
    h.hand = Box{box.row, box.col + h.arm};
    h.foot = Box{box.row + h.leg, box.col};
    return h;
}

HookClass classify_hook(const HookStats& h, int a, int b) {
    detail::require_ab(a, b);
    HookClass c;
    c.shallow = (b - a) * h.leg < a * (h.arm + 1);
    c.steep = (b - a) * h.arm < a * (h.leg + 1);
    c.critical = (h.hook % b == 0) && (h.leg == a * (h.hook / b));
    return c;
}

bool is_b_regular(const Partition& p, int b) {
    detail::require_modulus(b);
    int run = 1;
    for (int i = 2; i <= p.length(); ++i) {
        run = (p.part(i) == p.part(i - 1)) ? run + 1 : 1;
        if (run >= b)
            return false;
    }
    return true;
}

bool dominance_leq(const Partition& lo, const Partition& hi) {
    int rows = std::max(lo.length(), hi.length());
    long long slo = 0, shi = 0;
    for (int i = 1; i <= rows; ++i) {
        slo += lo.part(i);
        shi += hi.part(i);
        if (slo > shi)
            return false;
    }
    return true;
}

Partition concat(const Partition& head, const Partition& tail) {
    if (head.empty())
        return tail;
    if (tail.empty())
        return head;
    if (tail.part(1) > head.part(head.length()))
        throw NotAPartition("concatenation is not non-increasing");
    std::vector<int> parts = head.parts();
    parts.insert(parts.end(), tail.parts().begin(), tail.parts().end());
    return Partition(std::move(parts));
}

int count_steep_divisible(const Partition& p, int a, int b) {
    detail::require_ab(a, b);
    int count = 0;
    for_each_hook(p, [&](Box, int arm, int leg) {
        if ((arm + leg + 1) % b == 0 && (b - a) * arm < a * (leg + 1))
            ++count;
    });
    return count;
}

namespace {

template <class Pred>
std::optional<Box> first_hook_matching(const Partition& p, int a, int b, Pred&& pred) {
    detail::require_ab(a, b);
    std::optional<Box> found;
    for_each_hook(p, [&](Box box, int arm, int leg) {
        if (!found && pred(arm, leg))
            found = box;
    });
    return found;
}

} // namespace

std::optional<Box> first_divisible_not_shallow(const Partition& p, int a, int b) {
    return first_hook_matching(p, a, b, [&](int arm, int leg) {
        return (arm + leg + 1) % b == 0 && !((b - a) * leg < a * (arm + 1));
    });
}

std::optional<Box> first_divisible_not_shallow_or_steep(const Partition& p, int a, int b) {
    return first_hook_matching(p, a, b, [&](int arm, int leg) {
        bool shallow = (b - a) * leg < a * (arm + 1);
        bool steep = (b - a) * arm < a * (leg + 1);
        return (arm + leg + 1) % b == 0 && !shallow && !steep;
    });
}

std::optional<Box> first_critical_hook(const Partition& p, int a, int b) {
    return first_hook_matching(p, a, b, [&](int arm, int leg) {
        int hook = arm + leg + 1;
        return hook % b == 0 && leg == a * (hook / b);
    });
}

PartitionStream::PartitionStream(int n) : n_(n) {
    if (n < 0)
        throw BadParameters("partition size must be >= 0");
}

std::optional<Partition> PartitionStream::next() {
    if (done_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        if (n_ == 0) {
            done_ = true;
            return Partition{};
        }
        cur_ = {n_};
        return Partition(cur_);
    }
    // Find the last part >= 2; everything after it is a run of 1s.
    int i = static_cast<int>(cur_.size()) - 1;
    while (i >= 0 && cur_[i] == 1)
        --i;
    if (i < 0) {
        done_ = true;
        return std::nullopt;
    }
    int tail = cur_[i] + static_cast<int>(cur_.size()) - 1 - i;
    int m = cur_[i] - 1;
    cur_.resize(i);
    while (tail > 0) {
        int take = std::min(m, tail);
        cur_.push_back(take);
        tail -= take;
    }
    return Partition(cur_);
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    PartitionStream stream(n);
    while (auto p = stream.next())
        out.push_back(std::move(*p));
    return out;
}

} // namespace mullreg
