#pragma once

#include "cloudcover/errors.hpp"
#include "cloudcover/schmerl.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cloudcover {

/// A countable set given by an enumeration: elem is a bijection from an
/// initial segment of the naturals, idx its inverse.
template <typename T>
struct EnumeratedSet {
    std::string label;
    std::function<std::int64_t(const T&)> idx;
    std::function<T(std::int64_t)> elem;
};

/// Candidate cover of X^{n+2} by n+2 sets, queried through membership.
/// Index i is 0-based.
template <typename T>
struct Decomposition {
    std::size_t n = 0;
    std::function<bool(std::size_t i, const std::vector<T>&)> membership;

    std::size_t tuple_dim() const { return n + 2; }
};

/// Index-comparison decomposition: D_0 = {idx(q_0) <= idx(q_1)},
/// D_1 = its complement, all higher sets empty. Every axis-parallel line
/// meets its own set finitely.
template <typename T>
Decomposition<T> sierpinski_decomposition(const EnumeratedSet<T>& x, std::size_t n) {
    Decomposition<T> d;
    d.n = n;
    auto idx = x.idx;
    d.membership = [idx](std::size_t i, const std::vector<T>& q) {
        if (i == 0) return idx(q[0]) <= idx(q[1]);
        if (i == 1) return idx(q[1]) < idx(q[0]);
        return false;
    };
    return d;
}

struct DecompositionReport {
    std::size_t prefix = 0;
    std::size_t tuple_count = 0;
    std::size_t uncovered_count = 0;
    std::vector<std::vector<std::int64_t>> uncovered_examples;  // index tuples, capped at 16
    std::vector<std::size_t> max_section;  // per axis, over all axis lines in the prefix
    // growth[i][m-1]: max axis-i section when both lines and sections are
    // restricted to the first m elements. Finite-at-every-prefix but growing
    // sections show up here rather than as a verdict.
    std::vector<std::vector<std::size_t>> growth;

    bool covered() const { return uncovered_count == 0; }
};

/// Exhaustive check of the cover and finite-section conditions on the
/// prefix {elem(0), ..., elem(m-1)}^{n+2}.
template <typename T>
DecompositionReport verify_decomposition(const Decomposition<T>& d, const EnumeratedSet<T>& x,
                                         std::size_t prefix, std::size_t budget = 2000000) {
    if (prefix < 1) throw Error(ErrorKind::BadDimensions, "prefix must be >= 1");
    std::size_t k = d.tuple_dim();
    std::size_t total = 1;
    for (std::size_t j = 0; j < k; ++j) {
        if (total > budget / prefix) throw Error(ErrorKind::BudgetExceeded, "prefix^(n+2) too large");
        total *= prefix;
    }

    std::vector<T> elems;
    elems.reserve(prefix);
    for (std::size_t j = 0; j < prefix; ++j) elems.push_back(x.elem(static_cast<std::int64_t>(j)));

    DecompositionReport report;
    report.prefix = prefix;
    report.tuple_count = total;
    report.max_section.assign(k, 0);
    report.growth.assign(k, std::vector<std::size_t>(prefix, 0));

    // Cover sweep.
    std::vector<std::size_t> odo(k, 0);
    std::vector<T> tuple;
    for (std::size_t count = 0; count < total; ++count) {
        tuple.clear();
        for (std::size_t j = 0; j < k; ++j) tuple.push_back(elems[odo[j]]);
        bool covered = false;
        for (std::size_t i = 0; i < k && !covered; ++i) covered = d.membership(i, tuple);
        if (!covered) {
            ++report.uncovered_count;
            if (report.uncovered_examples.size() < 16) {
                std::vector<std::int64_t> ix(odo.begin(), odo.end());
                report.uncovered_examples.push_back(std::move(ix));
            }
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (++odo[j] < prefix) break;
            odo[j] = 0;
        }
    }

    // Section sweep: for each axis i, every line with the other coordinates
    // fixed in the prefix; growth rows additionally clip everything to each
    // shorter prefix.
    for (std::size_t axis = 0; axis < k; ++axis) {
        std::size_t lines = total / prefix;
        std::vector<std::size_t> line_odo(k - 1, 0);
        for (std::size_t li = 0; li < lines; ++li) {
            std::size_t max_fixed = 0;
            for (auto v : line_odo) max_fixed = std::max(max_fixed, v);
            std::size_t section = 0;
            for (std::size_t v = 0; v < prefix; ++v) {
                tuple.clear();
                std::size_t src = 0;
                for (std::size_t j = 0; j < k; ++j)
                    tuple.push_back(elems[j == axis ? v : line_odo[src++]]);
                if (d.membership(axis, tuple)) {
                    ++section;
                    // This line exists within prefix m iff all fixed coords
                    // are below m; the hit contributes for m > max(v, fixed).
                    std::size_t first_m = std::max(v, max_fixed) + 1;
                    for (std::size_t m = first_m; m <= prefix; ++m) {
                        auto& cell = report.growth[axis][m - 1];
                        cell = std::max(cell, section);
                    }
                }
            }
            report.max_section[axis] = std::max(report.max_section[axis], section);
            for (std::size_t j = 0; j + 1 < k; ++j) {
                if (++line_odo[j] < prefix) break;
                line_odo[j] = 0;
            }
        }
    }
    return report;
}

/// Deterministic enumeration of the rationals in (-radius, radius), ordered
/// by denominator and then numerator.
class RationalWindowEnumeration {
public:
    explicit RationalWindowEnumeration(Scalar radius);

    Scalar elem(std::int64_t k) const;
    std::int64_t idx(const Scalar& s) const;

private:
    void grow() const;
    Scalar radius_;
    mutable std::vector<Scalar> cache_;
    mutable BigInt next_den_;
};

/// Adapter exposing a certified instance's D_i membership as a Decomposition
/// over rational window coordinates, so the prefix verifier can run against
/// the geometric pipeline.
struct SchmerlDecomposition {
    EnumeratedSet<Scalar> window;
    Decomposition<Scalar> decomposition;
};

SchmerlDecomposition schmerl_to_decomposition(const SchmerlInstance& inst);

}  // namespace cloudcover
