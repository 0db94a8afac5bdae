#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "csieve/admissible.hpp"
#include "csieve/perm.hpp"
#include "csieve/subgroup.hpp"

namespace csieve {

inline constexpr size_t kDefaultCosetBudget = 2'000'000;

/// The coset space X = S_n / H, fully enumerated.  Canonical coset
/// representative = lexicographically minimal element of the coset.
/// Membership lookups go through a rank-indexed table over all of S_n,
/// so the degree is capped by the budget.
class CosetSpace {
public:
    CosetSpace(SubgroupSpec H, size_t budget = kDefaultCosetBudget) : H_(std::move(H)), n_(H_.n()) {
        Int nf = factorial(n_);
        Int index = nf / static_cast<long>(H_.order());
        if (index > static_cast<long>(budget))
            throw BudgetExceeded("coset space size " + index.get_str() + " exceeds budget");
        if (nf > Int(250'000'000))
            throw BudgetExceeded("degree " + std::to_string(n_) + " too large for the rank table");
        size_t total = static_cast<size_t>(nf.get_ui());
        coset_of_rank_.assign(total, kUnassigned);

        std::vector<int> line(static_cast<size_t>(n_));
        std::iota(line.begin(), line.end(), 1);
        uint64_t counter = 0;
        do {
            if (coset_of_rank_[counter] == kUnassigned) {
                Permutation rep = Permutation::from_one_line(line);
                auto idx = static_cast<uint32_t>(reps_.size());
                for (const auto& h : H_.elements()) coset_of_rank_[(rep * h).rank()] = idx;
                reps_.push_back(std::move(rep));
            }
            ++counter;
        } while (std::next_permutation(line.begin(), line.end()));
    }

    int n() const { return n_; }
    const SubgroupSpec& subgroup() const { return H_; }
    const std::vector<Permutation>& reps() const { return reps_; }
    size_t size() const { return reps_.size(); }

    uint32_t index_of(const Permutation& g) const { return coset_of_rank_[g.rank()]; }

    /// Index of the coset g * reps[i] * H.
    uint32_t act(const Permutation& g, uint32_t i) const { return index_of(g * reps_[i]); }

    long fix_count(const Permutation& g) const {
        long fixed = 0;
        for (uint32_t i = 0; i < reps_.size(); ++i)
            if (act(g, i) == i) ++fixed;
        return fixed;
    }

private:
    static constexpr uint32_t kUnassigned = UINT32_MAX;
    SubgroupSpec H_;
    int n_;
    std::vector<Permutation> reps_;
    std::vector<uint32_t> coset_of_rank_;
};

/// Y = C \ S_n / H: the C-orbit classes on a coset space, with the
/// normalizer action on classes.
class DoubleCosetSpace {
public:
    explicit DoubleCosetSpace(const CosetSpace& X) : X_(&X) {
        Permutation c = n_cycle(X.n());
        class_of_.assign(X.size(), UINT32_MAX);
        for (uint32_t i = 0; i < X.size(); ++i) {
            if (class_of_[i] != UINT32_MAX) continue;
            auto cls = static_cast<uint32_t>(members_.size());
            members_.push_back(i);
            uint32_t j = i;
            do {
                class_of_[j] = cls;
                j = X.act(c, j);
            } while (j != i);
        }
    }

    const CosetSpace& base() const { return *X_; }
    size_t size() const { return members_.size(); }

    uint32_t class_of(uint32_t coset_index) const { return class_of_[coset_index]; }

    /// Class sizes (all equal to n when C acts freely).
    std::vector<long> class_sizes() const {
        std::vector<long> sizes(members_.size(), 0);
        for (uint32_t cls : class_of_) ++sizes[cls];
        return sizes;
    }

    /// tau . CgH = C tau g H; well defined for tau in the normalizer of C.
    uint32_t act(const Permutation& tau, uint32_t cls) const {
        return class_of_[X_->act(tau, members_[cls])];
    }

    long fix_count(const Permutation& tau) const {
        long fixed = 0;
        for (uint32_t cls = 0; cls < members_.size(); ++cls)
            if (act(tau, cls) == cls) ++fixed;
        return fixed;
    }

private:
    const CosetSpace* X_;
    std::vector<uint32_t> class_of_;
    std::vector<uint32_t> members_;  // one coset index per class
};

struct FixptsIdentity {
    Int lhs;  // |Fix_{G/H}(gamma)| by enumeration
    Int rhs;  // |Z_G(gamma)| * |Conj_G(gamma) cap H| / |H|
    bool equal() const { return lhs == rhs; }
};

/// Both sides of the coset fixed-point identity, computed independently.
inline FixptsIdentity verify_fixpts_identity(const CosetSpace& X, const Permutation& gamma) {
    FixptsIdentity out;
    out.lhs = X.fix_count(gamma);
    const auto& H = X.subgroup();
    CycleType mu = gamma.cycle_type();
    Int in_h{0};
    auto it = H.type_counts().find(mu);
    if (it != H.type_counts().end()) in_h = it->second;
    Int num = centralizer_size(mu) * in_h;
    mpz_divexact(out.rhs.get_mpz_t(), num.get_mpz_t(), Int(static_cast<long>(H.order())).get_mpz_t());
    return out;
}

struct FiberProfile {
    std::map<uint32_t, long> fiber_sizes;  // tau-fixed Y class -> |preimage in Fix_X(tau)|
    bool surjective = true;
    long expected_size = 1;
};

/// Restriction of X -> Y to tau-fixpoints, for a C-admissible pair with
/// n = 1 or 2 mod m.  Fiber sizes must all equal 1 resp. 2.
inline FiberProfile fiber_profile(const CosetSpace& X, const DoubleCosetSpace& Y, const Permutation& tau, int m) {
    auto adm = check_c_admissible(tau, X.subgroup());
    if (!adm.admissible) throw AdmissibilityViolation("pair is not C-admissible: " + adm.violated);
    int n = X.n();
    if (n % m != 1 && n % m != 2) throw AdmissibilityViolation("fiber profile needs n = 1 or 2 mod m");

    FiberProfile out;
    out.expected_size = (n % m == 1) ? 1 : 2;
    for (uint32_t cls = 0; cls < Y.size(); ++cls)
        if (Y.act(tau, cls) == cls) out.fiber_sizes[cls] = 0;
    for (uint32_t i = 0; i < X.size(); ++i) {
        if (X.act(tau, i) != i) continue;
        uint32_t cls = Y.class_of(i);
        auto it = out.fiber_sizes.find(cls);
        if (it != out.fiber_sizes.end()) ++it->second;
    }
    for (const auto& [cls, sz] : out.fiber_sizes)
        if (sz == 0) out.surjective = false;
    return out;
}

}  // namespace csieve
