#include "qsym/symfunc.hpp"

#include "qsym/error.hpp"

#include <algorithm>
#include <bit>
#include <shared_mutex>
#include <unordered_map>

namespace qsym {

SchurVector SchurVector::basis(const Partition& lam, const LaurentQ& coeff)
{
    SchurVector r;
    r.add_term(lam, coeff);
    return r;
}

LaurentQ SchurVector::coefficient(const Partition& lam) const
{
    auto it = terms_.find(lam);
    return it == terms_.end() ? LaurentQ() : it->second;
}

int SchurVector::max_weight() const
{
    int w = 0;
    for (const auto& [lam, c] : terms_) w = std::max(w, lam.weight());
    return w;
}

void SchurVector::add_term(const Partition& lam, const LaurentQ& coeff)
{
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(lam, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SchurVector& SchurVector::operator+=(const SchurVector& rhs)
{
    for (const auto& [lam, c] : rhs.terms_) add_term(lam, c);
    return *this;
}

SchurVector& SchurVector::operator-=(const SchurVector& rhs)
{
    for (const auto& [lam, c] : rhs.terms_) add_term(lam, -c);
    return *this;
}

SchurVector& SchurVector::operator*=(const LaurentQ& scalar)
{
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [lam, c] : terms_) c *= scalar;
    return *this;
}

SchurVector SchurVector::operator-() const
{
    SchurVector r = *this;
    for (auto& [lam, c] : r.terms_) c = -c;
    return r;
}

std::string SchurVector::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [lam, c] : terms_) {
        const std::string base = lam.empty() ? "" : "s(" + lam.to_string() + ")";
        bool negative = false;
        std::string coeff;
        if (c.is_monomial()) {
            LaurentQ mag = c;
            if (c.terms().begin()->second < 0) {
                negative = true;
                mag = -c;
            }
            if (mag == LaurentQ(1))
                coeff = base.empty() ? "1" : "";
            else
                coeff = mag.to_string();
        } else {
            coeff = "(" + c.to_string() + ")";
        }
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        out += coeff;
        if (!coeff.empty() && !base.empty()) out += "*";
        out += base;
    }
    return out;
}

SchurVector elementary(int k)
{
    if (k < 0) return SchurVector();
    return SchurVector::basis(Partition(std::vector<int>(k, 1)));
}

SchurVector complete(int k)
{
    if (k < 0) return SchurVector();
    return SchurVector::basis(Partition({k}));
}

namespace {

using LrTable = std::map<Partition, std::int64_t>;

class LrCache {
public:
    const LrTable& product(const Partition& a, const Partition& b)
    {
        // The smaller diagram is used as the LR content.
        const bool swap = b.weight() > a.weight() || (b.weight() == a.weight() && b < a);
        const Partition& outer = swap ? b : a;
        const Partition& content = swap ? a : b;
        auto key = std::make_pair(outer, content);
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        LrTable value = lr_expand(outer, content);
        std::unique_lock lock(mutex_);
        return table_.try_emplace(std::move(key), std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<std::pair<Partition, Partition>, LrTable> table_;
};

LrCache& lr_cache()
{
    static LrCache cache;
    return cache;
}

}  // namespace

SchurVector schur_multiply(const SchurVector& f, const SchurVector& g)
{
    SchurVector out;
    for (const auto& [lam, a] : f.terms()) {
        for (const auto& [mu, b] : g.terms()) {
            const LaurentQ ab = a * b;
            if (lam.empty()) {
                out.add_term(mu, ab);
                continue;
            }
            if (mu.empty()) {
                out.add_term(lam, ab);
                continue;
            }
            for (const auto& [nu, c] : lr_cache().product(lam, mu)) {
                LaurentQ term = ab;
                term *= Rational(static_cast<long>(c));
                out.add_term(nu, term);
            }
        }
    }
    return out;
}

SchurVector pieri_column(const SchurVector& f, int k)
{
    if (k < 0) throw_out_of_range("pieri_column needs k >= 0");
    SchurVector out;
    for (const auto& [lam, c] : f.terms())
        for (const auto& nu : add_vertical_strip(lam, k)) out.add_term(nu, c);
    return out;
}

SchurVector pieri_row(const SchurVector& f, int k)
{
    if (k < 0) throw_out_of_range("pieri_row needs k >= 0");
    SchurVector out;
    for (const auto& [lam, c] : f.terms())
        for (const auto& nu : add_horizontal_strip(lam, k)) out.add_term(nu, c);
    return out;
}

namespace {

using IntHExpansion = std::map<HMonomial, std::int64_t>;

HMonomial with_factor(const HMonomial& base, int a)
{
    HMonomial r = base;
    r.insert(std::upper_bound(r.begin(), r.end(), a, std::greater<>()), a);
    return r;
}

IntHExpansion jacobi_trudi_int(const Partition& lam)
{
    const int len = lam.length();
    if (len > 30) throw Error(ErrorCode::invalid_argument, "Jacobi-Trudi expansion limited to 30 rows");
    const std::uint32_t full = len == 0 ? 0u : ((1u << len) - 1u);
    std::unordered_map<std::uint32_t, IntHExpansion> memo;
    // minor over rows popcount(used).., columns not in `used`
    auto minor = [&](auto&& self, std::uint32_t used) -> const IntHExpansion& {
        if (auto it = memo.find(used); it != memo.end()) return it->second;
        IntHExpansion result;
        if (used == full) {
            result.emplace(HMonomial{}, 1);
            return memo.emplace(used, std::move(result)).first->second;
        }
        const int row = std::popcount(used);
        int position = 0;
        for (int col = 0; col < len; ++col) {
            if (used & (1u << col)) continue;
            const int index = lam[row] - row + col;
            const int sign = (position % 2 == 0) ? 1 : -1;
            ++position;
            if (index < 0) continue;
            const IntHExpansion& sub = self(self, used | (1u << col));
            for (const auto& [mono, c] : sub) {
                HMonomial key = index == 0 ? mono : with_factor(mono, index);
                std::int64_t& slot = result[key];
                if (__builtin_add_overflow(slot, sign * c, &slot))
                    throw Error(ErrorCode::invalid_argument, "Jacobi-Trudi coefficient overflow");
            }
        }
        std::erase_if(result, [](const auto& kv) { return kv.second == 0; });
        return memo.emplace(used, std::move(result)).first->second;
    };
    return minor(minor, 0u);
}

class JtCache {
public:
    HExpansion get(const Partition& lam)
    {
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(lam);
            if (it != table_.end()) return it->second;
        }
        HExpansion value;
        for (const auto& [mono, c] : jacobi_trudi_int(lam)) value.emplace(mono, LaurentQ(static_cast<long>(c)));
        std::unique_lock lock(mutex_);
        return table_.try_emplace(lam, std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<Partition, HExpansion> table_;
};

}  // namespace

HExpansion jacobi_trudi_h(const Partition& lam)
{
    static JtCache cache;
    return cache.get(lam);
}

SchurVector from_h_monomial(std::span<const int> exponents)
{
    SchurVector out = SchurVector::unit();
    for (int a : exponents) {
        if (a < 0) throw_out_of_range("h-monomial exponents must be nonnegative");
        if (a > 0) out = pieri_row(out, a);
    }
    return out;
}

SchurVector wronski_residual(int k)
{
    if (k < 0) throw_out_of_range("wronski_residual needs k >= 0");
    SchurVector sum;
    for (int r = 0; r <= k; ++r) {
        SchurVector term = schur_multiply(elementary(r), complete(k - r));
        if (r % 2) term = -term;
        sum += term;
    }
    if (k == 0) sum -= SchurVector::unit();
    return sum;
}

namespace {

// Enumerates semistandard fillings of `shape` with entries 1..nvars, row
// by row. `limits`, when non-empty, caps how often each value may occur.
class TableauWalker {
public:
    TableauWalker(const Partition& shape, int nvars, std::vector<int> limits)
        : shape_(shape), conj_(conjugate(shape)), nvars_(nvars), limits_(std::move(limits)), content_(nvars, 0)
    {
        for (int i = 0; i < shape.length(); ++i) cells_.emplace_back(shape[i], 0);
    }

    template <typename Sink>
    void run(Sink&& sink)
    {
        if (shape_.length() > nvars_) return;
        fill(0, 0, sink);
    }

private:
    template <typename Sink>
    void fill(int row, int col, Sink& sink)
    {
        if (row == shape_.length()) {
            sink(content_);
            return;
        }
        if (col == shape_[row]) {
            fill(row + 1, 0, sink);
            return;
        }
        int lo = 1;
        if (col > 0) lo = std::max(lo, cells_[row][col - 1]);
        if (row > 0) lo = std::max(lo, cells_[row - 1][col] + 1);
        const int below = conj_[col] - 1 - row;
        const int hi = nvars_ - below;
        for (int v = lo; v <= hi; ++v) {
            if (!limits_.empty() && content_[v - 1] >= limits_[v - 1]) continue;
            cells_[row][col] = v;
            ++content_[v - 1];
            fill(row, col + 1, sink);
            --content_[v - 1];
        }
        cells_[row][col] = 0;
    }

    const Partition& shape_;
    Partition conj_;
    int nvars_;
    std::vector<int> limits_;
    std::vector<int> content_;
    std::vector<std::vector<int>> cells_;
};

}  // namespace

MonomialExpansion monomial_expand(const SchurVector& f, int nvars)
{
    if (nvars < 1) throw_out_of_range("monomial_expand needs nvars >= 1");
    MonomialExpansion out;
    for (const auto& [lam, c] : f.terms()) {
        std::map<Exponents, std::int64_t> counts;
        TableauWalker walker(lam, nvars, {});
        walker.run([&](const std::vector<int>& content) { ++counts[content]; });
        for (const auto& [exps, n] : counts) {
            LaurentQ term = c;
            term *= Rational(static_cast<long>(n));
            auto [it, inserted] = out.try_emplace(exps, term);
            if (!inserted) {
                it->second += term;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

MonomialExpansion multiply(const MonomialExpansion& a, const MonomialExpansion& b)
{
    MonomialExpansion out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            const LaurentQ term = ca * cb;
            auto [it, inserted] = out.try_emplace(std::move(e), term);
            if (!inserted) {
                it->second += term;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

std::int64_t MonomialOracle::tableau_count(const Partition& shape, std::span<const int> content)
{
    // Tableau counts do not depend on the order of the content.
    std::vector<int> key(content.begin(), content.end());
    std::sort(key.begin(), key.end(), std::greater<>());
    while (!key.empty() && key.back() == 0) key.pop_back();
    int total = 0;
    for (int c : key) total += c;
    if (total != shape.weight() || shape.length() > static_cast<int>(key.size())) return 0;
    {
        std::lock_guard lock(mutex_);
        auto it = memo_.find({shape, key});
        if (it != memo_.end()) return it->second;
    }
    std::int64_t count = 0;
    TableauWalker walker(shape, static_cast<int>(key.size()), key);
    walker.run([&](const std::vector<int>& filled) {
        if (filled == key) ++count;
    });
    std::lock_guard lock(mutex_);
    memo_.emplace(std::make_pair(shape, std::move(key)), count);
    return count;
}

LaurentQ MonomialOracle::coefficient(const SchurVector& f, std::span<const int> exponents)
{
    int degree = 0;
    for (int e : exponents) degree += e;
    LaurentQ out;
    for (const auto& [lam, c] : f.terms()) {
        if (lam.weight() != degree || lam.length() > static_cast<int>(exponents.size())) continue;
        const std::int64_t n = tableau_count(lam, exponents);
        if (n == 0) continue;
        LaurentQ term = c;
        term *= Rational(static_cast<long>(n));
        out += term;
    }
    return out;
}

}  // namespace qsym
