#pragma once

// Subsets of the ground set [n] = {1, ..., n}, stability predicates on the
// n-cycle, stable-subset enumeration and the associated counting formulas.

#include <stabsets/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stabsets {

using BigInt = boost::multiprecision::cpp_int;

/// An immutable subset of [n], stored as a strictly increasing element list.
/// For n <= 64 a bitmask mirror gives O(1) intersection tests.
class ElementSet {
public:
    static constexpr int mask_limit = 64;

    ElementSet() = default;

    /// Elements may be given in any order; they are sorted. Duplicates and
    /// out-of-range values are rejected.
    ElementSet(int n, std::vector<int> elements) :
        n_(n),
        elements_(std::move(elements))
    {
        require(n_ >= 0, ErrorKind::invalid_input, "ground set size must be non-negative");
        std::sort(elements_.begin(), elements_.end());
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            int e = elements_[i];
            require(e >= 1 && e <= n_, ErrorKind::invalid_input,
                "element " + std::to_string(e) + " outside [1, " + std::to_string(n_) + "]");
            require(i == 0 || elements_[i - 1] != e, ErrorKind::invalid_input,
                "duplicate element " + std::to_string(e));
            if (n_ <= mask_limit)
                mask_ |= std::uint64_t{1} << (e - 1);
        }
    }

    ElementSet(int n, std::initializer_list<int> elements) :
        ElementSet(n, std::vector<int>(elements))
    {
    }

    /// Parses the canonical comma-separated form, e.g. "1,3,5". The empty
    /// string denotes the empty set.
    static ElementSet parse(int n, std::string_view text)
    {
        std::vector<int> elements;
        std::size_t pos = 0;
        while (pos < text.size()) {
            auto comma = text.find(',', pos);
            auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            while (! token.empty() && token.front() == ' ')
                token.remove_prefix(1);
            while (! token.empty() && token.back() == ' ')
                token.remove_suffix(1);
            int value = 0;
            auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            require(ec == std::errc{} && end == token.data() + token.size() && ! token.empty(),
                ErrorKind::invalid_input, "malformed element list '" + std::string(text) + "'");
            elements.push_back(value);
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
            require(pos < text.size(), ErrorKind::invalid_input, "trailing comma in '" + std::string(text) + "'");
        }
        return ElementSet(n, std::move(elements));
    }

    int ground_size() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(elements_.size()); }
    bool empty() const noexcept { return elements_.empty(); }
    std::span<const int> elements() const noexcept { return elements_; }
    int front() const { return elements_.front(); }
    int back() const { return elements_.back(); }
    bool has_mask() const noexcept { return n_ <= mask_limit; }
    std::uint64_t mask() const noexcept { return mask_; }

    bool contains(int e) const
    {
        if (has_mask())
            return e >= 1 && e <= n_ && (mask_ >> (e - 1) & 1U);
        return std::binary_search(elements_.begin(), elements_.end(), e);
    }

    int intersection_size(const ElementSet & other) const
    {
        if (has_mask() && other.has_mask())
            return std::popcount(mask_ & other.mask_);
        int count = 0;
        auto a = elements_.begin(), b = other.elements_.begin();
        while (a != elements_.end() && b != other.elements_.end()) {
            if (*a < *b)
                ++a;
            else if (*b < *a)
                ++b;
            else {
                ++count;
                ++a;
                ++b;
            }
        }
        return count;
    }

    bool is_disjoint(const ElementSet & other) const
    {
        if (has_mask() && other.has_mask())
            return (mask_ & other.mask_) == 0;
        return intersection_size(other) == 0;
    }

    bool is_subset_of(const ElementSet & other) const
    {
        return intersection_size(other) == size();
    }

    std::string to_string() const
    {
        std::string out;
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (i > 0)
                out += ',';
            out += std::to_string(elements_[i]);
        }
        return out;
    }

    friend bool operator==(const ElementSet & a, const ElementSet & b)
    {
        return a.n_ == b.n_ && a.elements_ == b.elements_;
    }

    // Lexicographic on element lists, then on ground set size.
    friend std::strong_ordering operator<=>(const ElementSet & a, const ElementSet & b)
    {
        if (auto c = std::lexicographical_compare_three_way(a.elements_.begin(), a.elements_.end(),
                b.elements_.begin(), b.elements_.end());
            c != 0)
            return c;
        return a.n_ <=> b.n_;
    }

private:
    int n_ = 0;
    std::vector<int> elements_;
    std::uint64_t mask_ = 0;
};

/// Successor of element j on the n-cycle (n is followed by 1).
constexpr int cyclic_successor(int j, int n) noexcept { return j == n ? 1 : j + 1; }

/// True iff no two elements differ by one and, with wraparound, 1 and n are
/// not both present.
inline bool is_stable(const ElementSet & s, bool wraparound)
{
    auto e = s.elements();
    for (std::size_t i = 1; i < e.size(); ++i)
        if (e[i] - e[i - 1] == 1)
            return false;
    if (wraparound && s.size() >= 2 && e.front() == 1 && e.back() == s.ground_size())
        return false;
    return true;
}

/// C(a, b), zero outside 0 <= b <= a.
inline BigInt binomial(long long a, long long b)
{
    if (b < 0 || a < 0 || b > a)
        return 0;
    b = std::min(b, a - b);
    BigInt result = 1;
    for (long long i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;
    }
    return result;
}

inline void require_stable_parameters(int n, int k)
{
    require(k >= 1 && n >= 2 * k, ErrorKind::invalid_input,
        "need n >= 2k >= 2, got n=" + std::to_string(n) + " k=" + std::to_string(k));
}

/// Number of stable k-subsets of [n]: (n/k) C(n-k-1, k-1).
inline BigInt count_stable(int n, int k)
{
    require_stable_parameters(n, k);
    BigInt scaled = binomial(n - k - 1, k - 1) * n;
    return scaled / k;
}

/// Number of stable k-subsets of [n] containing a fixed element i.
inline BigInt count_stable_containing(int n, int k, int i)
{
    require_stable_parameters(n, k);
    require(i >= 1 && i <= n, ErrorKind::invalid_input, "element " + std::to_string(i) + " outside [1, n]");
    return binomial(n - k - 1, k - 1);
}

/// Streams the stable k-subsets of [n] in lexicographic order.
///
/// Position j (1-based) of a stable list a_1 < ... < a_k has upper bound
/// n - 2(k - j), lowered by one when wrapping around and a_1 = 1.
class StableSubsets {
public:
    StableSubsets(int n, int k, bool wraparound) :
        n_(n),
        k_(k),
        wraparound_(wraparound)
    {
        require_stable_parameters(n, k);
        current_.resize(k_);
        for (int j = 0; j < k_; ++j)
            current_[j] = 2 * j + 1;
    }

    std::optional<ElementSet> next()
    {
        if (done_)
            return std::nullopt;
        ElementSet out(n_, current_);
        advance();
        return out;
    }

private:
    int upper_bound(int j) const
    {
        // j is 0-based here
        int bound = n_ - 2 * (k_ - 1 - j);
        if (wraparound_ && j > 0 && current_[0] == 1)
            --bound;
        return bound;
    }

    void advance()
    {
        for (int j = k_ - 1; j >= 0; --j) {
            if (current_[j] + 1 <= upper_bound(j)) {
                ++current_[j];
                for (int i = j + 1; i < k_; ++i)
                    current_[i] = current_[i - 1] + 2;
                return;
            }
        }
        done_ = true;
    }

    int n_, k_;
    bool wraparound_;
    std::vector<int> current_;
    bool done_ = false;
};

inline std::vector<ElementSet> enumerate_stable(int n, int k, bool wraparound)
{
    std::vector<ElementSet> out;
    StableSubsets gen(n, k, wraparound);
    while (auto s = gen.next())
        out.push_back(std::move(*s));
    return out;
}

/// Calls f on every k-subset of [n] in lexicographic order. Stops early if f
/// returns false (when f returns bool).
template <typename F>
void for_each_k_subset(int n, int k, F && f)
{
    if (k < 0 || k > n)
        return;
    std::vector<int> current(k);
    for (int j = 0; j < k; ++j)
        current[j] = j + 1;
    while (true) {
        if constexpr (std::is_same_v<std::invoke_result_t<F &, ElementSet>, bool>) {
            if (! f(ElementSet(n, current)))
                return;
        }
        else
            f(ElementSet(n, current));
        int j = k - 1;
        while (j >= 0 && current[j] == n - k + 1 + j)
            --j;
        if (j < 0)
            return;
        ++current[j];
        for (int i = j + 1; i < k; ++i)
            current[i] = current[i - 1] + 1;
    }
}

} // namespace stabsets

template <>
struct std::hash<stabsets::ElementSet> {
    std::size_t operator()(const stabsets::ElementSet & s) const noexcept
    {
        std::uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<std::uint64_t>(s.ground_size());
        for (int e : s.elements()) {
            h ^= static_cast<std::uint64_t>(e);
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};
