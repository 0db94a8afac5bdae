#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "csieve/perm.hpp"

namespace csieve {

inline constexpr size_t kDefaultElementBudget = 1'000'000;

/// Subgroup of S_n given by generators; elements materialized by
/// breadth-first closure, capped by an element budget.
class SubgroupSpec {
public:
    SubgroupSpec(int n, std::vector<Permutation> generators, size_t budget = kDefaultElementBudget)
        : n_(n), gens_(std::move(generators)) {
        std::set<Permutation> closed;
        std::vector<Permutation> frontier{Permutation::identity(n)};
        closed.insert(frontier.front());
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const auto& g : frontier) {
                for (const auto& s : gens_) {
                    Permutation h = s * g;
                    if (closed.insert(h).second) {
                        if (closed.size() > budget)
                            throw BudgetExceeded("subgroup closure exceeds element budget " + std::to_string(budget));
                        next.push_back(std::move(h));
                    }
                }
            }
            frontier = std::move(next);
        }
        elements_.assign(closed.begin(), closed.end());
        for (const auto& h : elements_) ++type_counts_[h.cycle_type()];
    }

    /// Young subgroup S_{alpha_1} x ... x S_{alpha_r} on consecutive blocks.
    static SubgroupSpec young(const std::vector<int>& alpha) {
        int n = 0;
        for (int a : alpha) n += a;
        std::vector<Permutation> gens;
        int start = 1;
        for (int a : alpha) {
            for (int i = start; i < start + a - 1; ++i) {
                auto img = Permutation::identity(n).one_line();
                std::swap(img[static_cast<size_t>(i - 1)], img[static_cast<size_t>(i)]);
                gens.push_back(Permutation::from_one_line(img));
            }
            start += a;
        }
        return SubgroupSpec(n, std::move(gens));
    }

    static SubgroupSpec trivial(int n) { return SubgroupSpec(n, {}); }

    static SubgroupSpec full_symmetric(int n) {
        std::vector<Permutation> gens{n_cycle(n)};
        if (n >= 2) {
            auto img = Permutation::identity(n).one_line();
            std::swap(img[0], img[1]);
            gens.push_back(Permutation::from_one_line(img));
        }
        return SubgroupSpec(n, std::move(gens));
    }

    int n() const { return n_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    const std::vector<Permutation>& elements() const { return elements_; }
    size_t order() const { return elements_.size(); }

    /// Cycle-type histogram of the elements.
    const std::map<CycleType, Int>& type_counts() const { return type_counts_; }

    bool contains(const Permutation& g) const {
        return std::binary_search(elements_.begin(), elements_.end(), g);
    }

    /// True iff H has an element of the given cycle type.
    bool realizes_type(const CycleType& mu) const { return type_counts_.count(mu) != 0; }

    /// True iff no nontrivial power of the n-cycle is conjugate into H,
    /// i.e. H avoids (l^{n/l}) for every divisor l > 1 of n.  Equivalent
    /// to the freeness of the C-action on S_n/H.
    bool c_acts_freely() const {
        for (int l = 2; l <= n_; ++l) {
            if (n_ % l != 0) continue;
            CycleType mu{std::vector<int>(static_cast<size_t>(n_ / l), l)};
            if (realizes_type(mu)) return false;
        }
        return true;
    }

private:
    int n_;
    std::vector<Permutation> gens_;
    std::vector<Permutation> elements_;
    std::map<CycleType, Int> type_counts_;
};

}  // namespace csieve
