#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace schurpp {

/// Integer partition: weakly decreasing positive parts, possibly empty.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1])) {
                throw Error("not a partition: " + format(parts_));
            }
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return int(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Part lambda_i for 1-based i; zero beyond the length.
    int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// lambda is contained in the n x m box {m^n}.
    bool fits_in_box(int m, int n) const { return length() <= n && largest() <= m; }

    std::string to_string() const { return format(parts_); }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    static std::string format(const std::vector<int>& parts)
    {
        if (parts.empty()) {
            return "∅";
        }
        std::string out = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            out += (i ? "," : "") + std::to_string(parts[i]);
        }
        return out + ")";
    }

    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    return os << p.to_string();
}

/// Parses "(3,1,1)", "3,1,1", "()" or "∅".
inline Partition parse_partition(std::string_view text)
{
    std::string s;
    for (char c : text) {
        if (c != ' ') {
            s += c;
        }
    }
    if (s == "∅" || s == "()" || s.empty()) {
        return {};
    }
    if (s.front() == '(') {
        if (s.back() != ')') {
            throw ParseError("unbalanced parenthesis in partition: " + std::string(text));
        }
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            int value = std::stoi(item, &used);
            if (used != item.size()) {
                throw ParseError("bad partition part: " + item);
            }
            parts.push_back(value);
        } catch (const std::logic_error&) {
            throw ParseError("bad partition part: " + item);
        }
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

/// lambda'_j = #{i : lambda_i >= j}.
inline Partition conjugate(const Partition& lambda)
{
    std::vector<int> parts(lambda.largest(), 0);
    for (int p : lambda.parts()) {
        for (int j = 0; j < p; ++j) {
            ++parts[j];
        }
    }
    return Partition(std::move(parts));
}

/// a_j = number of columns of length j, i.e. the multiplicity of j in lambda'.
class ColumnCounts {
public:
    explicit ColumnCounts(const Partition& lambda)
    {
        const Partition columns = conjugate(lambda);
        for (int len : columns.parts()) {
            ++counts_[len];
        }
    }

    int operator[](int j) const
    {
        auto it = counts_.find(j);
        return it == counts_.end() ? 0 : it->second;
    }

    /// Column lengths with a positive count, ascending.
    const std::map<int, int>& nonzero() const { return counts_; }

    int weighted_total() const
    {
        int total = 0;
        for (auto [j, a] : counts_) {
            total += j * a;
        }
        return total;
    }

private:
    std::map<int, int> counts_;
};

inline ColumnCounts column_counts(const Partition& lambda)
{
    return ColumnCounts(lambda);
}

enum class PartitionFilter { All, EvenParts, EvenConjugate };

inline bool accepts(PartitionFilter filter, const Partition& lambda)
{
    auto all_even = [](const std::vector<int>& parts) {
        return std::all_of(parts.begin(), parts.end(), [](int p) { return p % 2 == 0; });
    };
    switch (filter) {
    case PartitionFilter::All:
        return true;
    case PartitionFilter::EvenParts:
        return all_even(lambda.parts());
    case PartitionFilter::EvenConjugate:
        return all_even(conjugate(lambda).parts());
    }
    return false;
}

inline std::string to_string(PartitionFilter filter)
{
    switch (filter) {
    case PartitionFilter::All:
        return "all";
    case PartitionFilter::EvenParts:
        return "even-parts";
    case PartitionFilter::EvenConjugate:
        return "even-conjugate";
    }
    return "?";
}

/// Colexicographic order on the zero-padded part sequences: the last part is
/// compared first.
inline bool colex_less(const Partition& a, const Partition& b)
{
    const int len = std::max(a.length(), b.length());
    for (int i = len; i >= 1; --i) {
        if (a.part(i) != b.part(i)) {
            return a.part(i) < b.part(i);
        }
    }
    return false;
}

namespace detail {

template <typename Fn>
void grow_partitions(std::vector<int>& parts, int max_part, int slots, Fn& fn)
{
    fn(parts);
    if (slots == 0) {
        return;
    }
    for (int p = 1; p <= max_part; ++p) {
        parts.push_back(p);
        grow_partitions(parts, p, slots - 1, fn);
        parts.pop_back();
    }
}

} // namespace detail

/// Every partition with at most n parts, each at most m, that passes the filter,
/// in colexicographic order. Always includes the empty partition.
inline std::vector<Partition> partitions_in_box(int m, int n, PartitionFilter filter = PartitionFilter::All)
{
    if (m < 0 || n < 0) {
        throw Error("partitions_in_box: negative box dimension");
    }
    std::vector<Partition> out;
    std::vector<int> parts;
    auto collect = [&](const std::vector<int>& current) {
        Partition lambda(current);
        if (accepts(filter, lambda)) {
            out.push_back(std::move(lambda));
        }
    };
    detail::grow_partitions(parts, m, n, collect);
    std::sort(out.begin(), out.end(), colex_less);
    return out;
}

/// Partitions with at most n parts and size at most `max_size`, colexicographic.
inline std::vector<Partition> partitions_up_to_size(int max_size, int n, PartitionFilter filter = PartitionFilter::All)
{
    std::vector<Partition> out;
    for (auto& lambda : partitions_in_box(max_size, n, filter)) {
        if (lambda.size() <= max_size) {
            out.push_back(std::move(lambda));
        }
    }
    return out;
}

} // namespace schurpp
