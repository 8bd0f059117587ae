#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace morin {

/// An integer partition stored in the French convention: parts weakly
/// increasing from left to right, e.g. (1,1,2) is written "112".
///
/// Zero parts are dropped and the remaining parts are sorted on
/// construction, so a partition built from (r - j_k, ..., r + |J|) tuples
/// is always canonical.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int weight() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }

    // Largest part, 0 for the empty partition.
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

    // Part counted from the largest one: from_top(0) is the largest part;
    // returns 0 past the length.
    int from_top(std::size_t k) const noexcept;

    /// Parts left-padded with zeros to `len` entries (len >= length()).
    std::vector<int> padded(std::size_t len) const;

    // Digit string when all parts are <= 9 ("123"), "(1,10)" otherwise.
    std::string to_string() const;

    // Accepts the to_string forms and a bare comma list "1,10". Throws ParseError.
    static Partition parse(const std::string& text);

    bool operator==(const Partition&) const = default;
    // Plain lexicographic order on the stored parts; used as a map key only.
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// (cols^rows): `rows` parts each equal to `cols`.
Partition rectangle(int rows, int cols);

Partition conjugate(const Partition& p);

/// True iff the Young diagram of `inner` fits inside that of `outer`.
bool contains(const Partition& outer, const Partition& inner);

/// Membership in the (m,n)-hook: length <= m, or the (length-m)-th part
/// (1-based, French order) is at most n.
bool in_hook(const Partition& p, int m, int n);

/// Every partition with at most `rows` parts and parts <= `cols`, ordered by
/// weight and then lexicographically on the zero-padded parts.
std::vector<Partition> partitions_in_rectangle(int rows, int cols);

// All partitions of `weight`, in the same order convention.
std::vector<Partition> partitions_of(int weight);

/// The h-part a partition belongs to for parameter r: the largest h with
/// ((r+h-1)^h) contained in p. Empty when p does not contain the row (r).
std::optional<int> classify_h(const Partition& p, int r);

/// Display order for Schur expansions: weight ascending, then more parts
/// first, then the French parts lexicographically descending.
struct DisplayOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

} // namespace morin
