#include "puiseux/numerical_semigroup.hpp"

#include <algorithm>
#include <queue>

#include "puiseux/errors.hpp"

namespace puiseux {

NumericalSemigroup::NumericalSemigroup(std::vector<BigInt> generators) : generators_(std::move(generators)) {
    for (const auto& g : generators_)
        if (g <= 0) throw DomainError("numerical semigroup generators must be positive");
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
    if (generators_.empty()) return;

    for (const auto& g : generators_) mpz_gcd(gcd_.get_mpz_t(), gcd_.get_mpz_t(), g.get_mpz_t());
    std::vector<BigInt> scaled;
    for (const auto& g : generators_) scaled.emplace_back(g / gcd_);

    if (scaled.front() > BigInt(static_cast<unsigned long>(kMaxModulus)))
        throw CapExceededError("smallest generator " + scaled.front().get_str() + " too large for an Apery table");
    apery_modulus_ = scaled.front().get_ui();
    apery_.assign(apery_modulus_, BigInt(-1));

    using Entry = std::pair<BigInt, unsigned long>;
    auto later = [](const Entry& a, const Entry& b) { return a.first > b.first; };
    std::priority_queue<Entry, std::vector<Entry>, decltype(later)> queue(later);
    apery_[0] = 0;
    queue.emplace(BigInt(0), 0UL);
    while (!queue.empty()) {
        auto [dist, r] = queue.top();
        queue.pop();
        if (dist != apery_[r]) continue;
        for (std::size_t i = 1; i < scaled.size(); ++i) {
            BigInt next = dist + scaled[i];
            const unsigned long nr = mpz_fdiv_ui(next.get_mpz_t(), apery_modulus_);
            if (apery_[nr] < 0 || next < apery_[nr]) {
                apery_[nr] = next;
                queue.emplace(std::move(next), nr);
            }
        }
    }
}

bool NumericalSemigroup::contains(const BigInt& n) const {
    if (n < 0) return false;
    if (n == 0) return true;
    if (generators_.empty()) return false;
    if (!mpz_divisible_p(n.get_mpz_t(), gcd_.get_mpz_t())) return false;
    const BigInt m = n / gcd_;
    const BigInt& ap = apery_[mpz_fdiv_ui(m.get_mpz_t(), apery_modulus_)];
    return ap >= 0 && m >= ap;
}

} // namespace puiseux
