#include "qsym/partitions.hpp"

#include "qsym/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace qsym {

Partition::Partition(std::vector<int> parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw Error(ErrorCode::parse, "malformed partition: negative part");
        if (i > 0 && parts[i] > parts[i - 1]) throw Error(ErrorCode::parse, "malformed partition: parts must be weakly decreasing");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    parts_ = std::move(parts);
}

int Partition::weight() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const
{
    if (parts_.empty()) return "[]";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition Partition::parse(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (!s.empty() && (s.front() == '[' || s.front() == '(')) {
        const char close = s.front() == '[' ? ']' : ')';
        if (s.size() < 2 || s.back() != close) throw Error(ErrorCode::parse, "malformed partition '" + std::string(text) + "'");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> parts;
    if (s.empty()) return Partition();
    std::size_t pos = 0;
    while (true) {
        const auto comma = s.find(',', pos);
        const std::string token = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
            token.size() > 6)
            throw Error(ErrorCode::parse, "malformed partition '" + std::string(text) + "'");
        parts.push_back(std::stoi(token));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const Error&) {
        throw Error(ErrorCode::parse, "malformed partition '" + std::string(text) + "': parts must be weakly decreasing");
    }
}

Partition rectangle(int height, int width)
{
    if (height < 0 || width < 0) throw_out_of_range("rectangle dimensions must be nonnegative");
    if (width == 0) return Partition();
    return Partition(std::vector<int>(height, width));
}

Partition conjugate(const Partition& lam)
{
    std::vector<int> out(lam.empty() ? 0 : lam[0], 0);
    for (int part : lam.parts())
        for (int j = 0; j < part; ++j) ++out[j];
    return Partition(std::move(out));
}

bool contains(const Partition& outer, const Partition& inner)
{
    if (inner.length() > outer.length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

bool is_vertical_strip(const Partition& outer, const Partition& inner)
{
    if (!contains(outer, inner)) return false;
    for (int i = 0; i < outer.length(); ++i)
        if (outer[i] - inner[i] > 1) return false;
    return true;
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner)
{
    if (!contains(outer, inner)) return false;
    for (int i = 1; i < outer.length(); ++i)
        if (outer[i] > inner[i - 1]) return false;
    return true;
}

Partition hook_partition(int r, int p, int l, int k)
{
    if (r < 0 || p < 0) throw_out_of_range("hook_partition needs r, p >= 0");
    if (l < 0 || l > r) throw_out_of_range("hook_partition needs 0 <= l <= r");
    if (k < 0 || k > p) throw_out_of_range("hook_partition needs 0 <= k <= p");
    std::vector<int> parts;
    parts.reserve(r + 1);
    for (int i = 0; i < l; ++i) parts.push_back(p + 1);
    for (int i = l; i < r; ++i) parts.push_back(p);
    parts.push_back(k);
    return Partition(std::move(parts));
}

Partition frame_partition(int m, int n, const Partition& mu, const Partition& lam)
{
    if (m < 0 || n < 0 || lam.length() > m || mu[0] > n)
        throw Error(ErrorCode::out_of_range, "diagram does not fit frame");
    std::vector<int> parts;
    for (int i = 0; i < m; ++i) parts.push_back(n + lam[i]);
    for (int part : mu.parts()) parts.push_back(part);
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int weight)
{
    std::vector<Partition> out;
    if (weight < 0) return out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    recurse(recurse, weight, weight);
    return out;
}

std::vector<Partition> add_vertical_strip(const Partition& inner, int size)
{
    std::vector<Partition> out;
    if (size < 0) return out;
    const int rows = inner.length() + size;
    std::vector<int> shape(rows, 0);
    auto recurse = [&](auto&& self, int row, int remaining) -> void {
        if (row == rows) {
            if (remaining == 0) out.emplace_back(shape);
            return;
        }
        if (rows - row < remaining) return;
        for (int add = std::min(1, remaining); add >= 0; --add) {
            const int len = inner[row] + add;
            if (row > 0 && len > shape[row - 1]) continue;
            shape[row] = len;
            self(self, row + 1, remaining - add);
        }
    };
    recurse(recurse, 0, size);
    return out;
}

std::vector<Partition> add_horizontal_strip(const Partition& inner, int size)
{
    std::vector<Partition> out;
    if (size < 0) return out;
    const int rows = inner.length() + 1;
    std::vector<int> shape(rows, 0);
    auto recurse = [&](auto&& self, int row, int remaining) -> void {
        if (row == rows) {
            if (remaining == 0) out.emplace_back(shape);
            return;
        }
        const int cap = row == 0 ? remaining : std::min(remaining, inner[row - 1] - inner[row]);
        for (int add = cap; add >= 0; --add) {
            shape[row] = inner[row] + add;
            self(self, row + 1, remaining - add);
        }
    };
    recurse(recurse, 0, size);
    return out;
}

namespace {

// Adds the content of `mu` value by value, each value as a horizontal strip,
// keeping the reverse reading word a lattice word. For value v the strip
// may place at most (#(v-1) in rows above) boxes in rows up to the current
// one, which is exactly the lattice condition for row-wise right-to-left
// reading.
class LrSearch {
public:
    LrSearch(const Partition& lam, const Partition& mu, const Partition* target)
        : content_(mu.parts()), target_(target)
    {
        rows_ = lam.length() + mu.length();
        shape_.assign(rows_, 0);
        for (int i = 0; i < lam.length(); ++i) shape_[i] = lam[i];
        counts_.assign(content_.size(), std::vector<int>(rows_, 0));
        old_.reserve(content_.size() + 1);  // place_row holds references into old_
    }

    template <typename Sink>
    void run(Sink&& sink)
    {
        place_value(0, sink);
    }

private:
    template <typename Sink>
    void place_value(std::size_t v, Sink& sink)
    {
        if (v == content_.size()) {
            sink(shape_);
            return;
        }
        // Row lengths before this strip: the horizontal-strip bound.
        old_.push_back(shape_);
        place_row(v, 0, content_[v], 0, 0, sink);
        old_.pop_back();
    }

    template <typename Sink>
    void place_row(std::size_t v, int row, int remaining, int placed_so_far, int prev_above, Sink& sink)
    {
        if (remaining == 0) {
            place_value(v + 1, sink);
            return;
        }
        if (row == rows_) return;
        const std::vector<int>& old = old_.back();
        int cap = remaining;
        if (row > 0) cap = std::min(cap, old[row - 1] - old[row]);
        if (target_ != nullptr) cap = std::min(cap, (*target_)[row] - old[row]);
        if (v > 0) cap = std::min(cap, prev_above - placed_so_far);
        if (cap < 0) return;
        if (row > 0 && old[row - 1] == 0) return;  // nothing can go below an empty row
        const int prev_here = v > 0 ? counts_[v - 1][row] : 0;
        for (int add = cap; add >= 0; --add) {
            shape_[row] = old[row] + add;
            counts_[v][row] = add;
            place_row(v, row + 1, remaining - add, placed_so_far + add, prev_above + prev_here, sink);
        }
        shape_[row] = old[row];
        counts_[v][row] = 0;
    }

    std::vector<int> content_;
    const Partition* target_;
    int rows_ = 0;
    std::vector<int> shape_;
    std::vector<std::vector<int>> counts_;
    std::vector<std::vector<int>> old_;
};

}  // namespace

std::int64_t lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu)
{
    if (nu.weight() != lam.weight() + mu.weight() || !contains(nu, lam)) return 0;
    std::int64_t total = 0;
    LrSearch search(lam, mu, &nu);
    search.run([&](const std::vector<int>& shape) {
        if (Partition(shape) == nu) ++total;
    });
    return total;
}

std::map<Partition, std::int64_t> lr_expand(const Partition& lam, const Partition& mu)
{
    std::map<Partition, std::int64_t> out;
    LrSearch search(lam, mu, nullptr);
    search.run([&](const std::vector<int>& shape) { ++out[Partition(shape)]; });
    return out;
}

}  // namespace qsym
