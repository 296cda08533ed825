#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsym {

/// Weakly decreasing list of positive integers. Zero parts are dropped on
/// construction; a negative part or an increase throws ErrorCode::parse.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int weight() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }
    /// i-th part (0-based); 0 beyond the length.
    int operator[](int i) const noexcept { return i < length() ? parts_[i] : 0; }

    /// Text form "3,2,1"; the empty partition is "[]".
    std::string to_string() const;
    /// Accepts "3,2,1", "[3,2,1]", "(3,2,1)", "[]" and "".
    static Partition parse(std::string_view text);

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Order used for canonical output: lexicographically descending parts.
struct ReverseLex {
    bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// Rectangle (width^height).
Partition rectangle(int height, int width);

Partition conjugate(const Partition& lam);
bool contains(const Partition& outer, const Partition& inner);
bool is_vertical_strip(const Partition& outer, const Partition& inner);
bool is_horizontal_strip(const Partition& outer, const Partition& inner);

/// ((p+1)^l, p^(r-l), k): r rows, p columns, l extra boxes down the
/// (p+1)-th column and a tail row of k boxes. Requires 0 <= l <= r,
/// 0 <= k <= p.
Partition hook_partition(int r, int p, int l, int k);

/// Rectangle (n^m) with `lam` glued to the right of its rows and `mu` glued
/// below: (n+lam_1, ..., n+lam_m, mu_1, mu_2, ...). Requires
/// length(lam) <= m and mu_1 <= n.
Partition frame_partition(int m, int n, const Partition& mu, const Partition& lam);

/// All partitions of `weight`, lexicographically descending.
std::vector<Partition> partitions_of(int weight);

/// All ways of adding a vertical (horizontal) strip of `size` boxes to
/// `inner`.
std::vector<Partition> add_vertical_strip(const Partition& inner, int size);
std::vector<Partition> add_horizontal_strip(const Partition& inner, int size);

/// Littlewood-Richardson coefficient c^nu_{lam,mu}, counted by enumerating
/// LR tableaux of shape nu/lam and content mu.
std::int64_t lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

/// Full expansion s_lam * s_mu = sum_nu c^nu_{lam,mu} s_nu by the same
/// tableau enumeration without a target shape.
std::map<Partition, std::int64_t> lr_expand(const Partition& lam, const Partition& mu);

}  // namespace qsym
