/**
 * @file suites/helpers.hpp
 * @brief Shared machinery for the verification suites.
 */
#pragma once

#include "yv/generators.hpp"
#include "yv/varseries.hpp"
#include "yv/verifier.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <sstream>

namespace yv::suites {

template <typename... A>
std::string cat(A&&... a) {
    std::ostringstream os;
    (os << ... << a);
    return os.str();
}

inline std::string nu_str(const std::vector<int>& nu) {
    std::string s;
    for (std::size_t k = 0; k < nu.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(nu[k]);
    }
    return s;
}

/// All compositions of n (parts >= 1), in lexicographic order.
inline std::vector<std::vector<int>> compositions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> go = [&](int rest) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            cur.push_back(p);
            go(rest - p);
            cur.pop_back();
        }
    };
    go(n);
    return out;
}

/// Lazily computed value shared between the case closures of one suite,
/// so that list_cases stays cheap and tables are built at most once.
template <typename T>
class Shared {
public:
    explicit Shared(std::function<T()> make) : impl_(std::make_shared<Impl>()) {
        impl_->make = std::move(make);
    }

    const T& get() const {
        std::call_once(impl_->flag, [this] { impl_->value.emplace(impl_->make()); });
        return *impl_->value;
    }

private:
    struct Impl {
        std::function<T()> make;
        std::optional<T> value;
        std::once_flag flag;
    };
    std::shared_ptr<Impl> impl_;
};

using SharedTable = Shared<ParabolicGenerators>;

inline SharedTable shared_table(const ContextPtr& ctx, std::vector<int> nu, int cutoff) {
    return SharedTable(
        [ctx, nu = std::move(nu), cutoff] { return parabolic_generators(ctx, nu, cutoff); });
}

/// Pass iff the normal form of the residual is exactly zero.
inline std::optional<std::string> zero_residual(const Element& e) {
    Element nf = e.normal_form();
    if (nf.is_zero()) return std::nullopt;
    return nf.str();
}

/// Pass iff two one-variable series agree to their common cutoff.
inline std::optional<std::string> series_residual(const Series& a, const Series& b) {
    Series d = a - b;
    for (int k = 0; k <= d.cutoff(); ++k) {
        if (!d.at(k).is_zero())
            return cat("u^-", k, ": ", d.at(k).str());
    }
    return std::nullopt;
}

/// Pass iff a multi-variable table vanishes for all coefficients of total
/// inverse-degree <= bound.
inline std::optional<std::string> varseries_residual(const VarSeries& v, int bound) {
    auto bad = v.first_nonzero(bound);
    if (!bad) return std::nullopt;
    return cat(VarSeries::exp_str(bad->first), ": ", bad->second.str());
}

/// The n values a suite runs at: the caller override or the default list.
inline std::vector<int> default_ns(const SuiteSpec& spec, std::vector<int> defaults) {
    if (spec.n > 0) return {spec.n};
    return defaults;
}

inline int default_cutoff(const SuiteSpec& spec, int fallback) {
    return spec.cutoff > 0 ? spec.cutoff : fallback;
}

struct ParabolicConfig {
    int n;
    std::vector<int> nu;
    int cutoff;
};

inline std::vector<ParabolicConfig> parabolic_configs(const SuiteSpec& spec,
                                                      bool include_n4_default) {
    std::vector<ParabolicConfig> out;
    if (spec.n > 0) {
        int cutoff = default_cutoff(spec, spec.n >= 4 ? 3 : 5);
        if (!spec.nu.empty()) {
            out.push_back({spec.n, spec.nu, cutoff});
        } else {
            for (auto& nu : compositions(spec.n)) out.push_back({spec.n, nu, cutoff});
        }
        return out;
    }
    for (int n : {2, 3})
        for (auto& nu : compositions(n)) out.push_back({n, nu, default_cutoff(spec, 5)});
    if (include_n4_default)
        for (auto& nu : compositions(4)) out.push_back({4, nu, spec.cutoff > 0 ? spec.cutoff : 3});
    return out;
}

}  // namespace yv::suites
